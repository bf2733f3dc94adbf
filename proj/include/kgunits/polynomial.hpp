// Univariate polynomials over F_q: division with remainder, inverses modulo
// a polynomial, monic irreducible enumeration and factorization by trial
// division.  Sized for desk-scale work (q^d around 1024 candidates).
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgunits/field_spec.hpp"

namespace kgunits {

class Polynomial {
 public:
  // Zero polynomial.
  explicit Polynomial(Field field) : field_(std::move(field)) {}

  // Coefficient codes, constant term first.  Trailing zeros are trimmed.
  Polynomial(Field field, std::vector<Code> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
      if (c >= field_->order()) {
        throw std::out_of_range("polynomial coefficient out of range for "
                                + field_->label());
      }
    }
    trim();
  }

  static Polynomial monomial(Field f, std::size_t degree, Code c = 1) {
    std::vector<Code> v(degree + 1, 0);
    v[degree] = c;
    return {std::move(f), std::move(v)};
  }

  // x^n - 1
  static Polynomial x_pow_minus_one(Field f, std::size_t n) {
    std::vector<Code> v(n + 1, 0);
    v[n] = 1;
    v[0] = f->neg(1);
    return {std::move(f), std::move(v)};
  }

  Field const& field() const noexcept {
    return field_;
  }
  std::vector<Code> const& coeffs() const noexcept {
    return coeffs_;
  }
  bool is_zero() const noexcept {
    return coeffs_.empty();
  }
  // Degree; -1 for the zero polynomial.
  int degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  Code leading() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.back();
  }
  bool is_monic() const noexcept {
    return leading() == 1;
  }
  Code coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  Polynomial make_monic() const {
    if (is_zero()) {
      throw std::domain_error("zero polynomial has no monic associate");
    }
    return scaled(field_->inv(leading()));
  }

  Polynomial scaled(Code c) const {
    std::vector<Code> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = field_->mul(coeffs_[i], c);
    }
    return {field_, std::move(v)};
  }

  Code evaluate(Code x) const {
    Code r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      r = field_->add(field_->mul(r, x), coeffs_[i]);
    }
    return r;
  }

  friend bool operator==(Polynomial const& a, Polynomial const& b) {
    return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
  }

  friend Polynomial operator+(Polynomial const& a, Polynomial const& b) {
    check_same(a, b);
    auto const&       f = *a.field_;
    std::vector<Code> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = f.add(a.coeff(i), b.coeff(i));
    }
    return {a.field_, std::move(v)};
  }

  friend Polynomial operator-(Polynomial const& a, Polynomial const& b) {
    check_same(a, b);
    auto const&       f = *a.field_;
    std::vector<Code> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = f.sub(a.coeff(i), b.coeff(i));
    }
    return {a.field_, std::move(v)};
  }

  friend Polynomial operator*(Polynomial const& a, Polynomial const& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) {
      return Polynomial(a.field_);
    }
    auto const&       f = *a.field_;
    std::vector<Code> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return {a.field_, std::move(v)};
  }

  // (quotient, remainder) with deg remainder < deg divisor.
  friend std::pair<Polynomial, Polynomial> divmod(Polynomial const& a,
                                                  Polynomial const& b) {
    check_same(a, b);
    if (b.is_zero()) {
      throw std::domain_error("polynomial division by zero");
    }
    auto const& f = *a.field_;
    if (a.degree() < b.degree()) {
      return {Polynomial(a.field_), a};
    }
    std::vector<Code> rem = a.coeffs_;
    std::vector<Code> quo(a.coeffs_.size() - b.coeffs_.size() + 1, 0);
    Code const        lead_inv = f.inv(b.leading());
    std::size_t const db       = b.coeffs_.size() - 1;
    for (std::size_t d = rem.size(); d-- > db;) {
      Code const c = f.mul(rem[d], lead_inv);
      if (c == 0) {
        continue;
      }
      quo[d - db] = c;
      for (std::size_t i = 0; i <= db; ++i) {
        rem[d - db + i] = f.sub(rem[d - db + i], f.mul(c, b.coeffs_[i]));
      }
    }
    rem.resize(db);
    return {Polynomial(a.field_, std::move(quo)),
            Polynomial(a.field_, std::move(rem))};
  }

  friend Polynomial operator%(Polynomial const& a, Polynomial const& b) {
    return divmod(a, b).second;
  }

  // Rendering such as "x^2 + x + 1"; extension-field coefficients appear in
  // parentheses, e.g. "(a+1)*x".
  std::string to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      Code const c = coeffs_[i];
      if (c == 0) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      std::string cs = field_->format(c);
      if (field_->degree() > 1 && cs.find('+') != std::string::npos) {
        cs = "(" + cs + ")";
      }
      if (i == 0) {
        out += cs;
        continue;
      }
      if (c != 1) {
        out += cs + "*";
      }
      out += "x";
      if (i > 1) {
        out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static void check_same(Polynomial const& a, Polynomial const& b) {
    if (!a.field_->same_as(*b.field_)) {
      throw std::invalid_argument("polynomials over different fields: "
                                  + a.field_->label() + " and "
                                  + b.field_->label());
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  Field             field_;
  std::vector<Code> coeffs_;
};

// Inverse of a modulo m (extended Euclid); nullopt when gcd(a, m) != 1.
inline std::optional<Polynomial> inverse_mod(Polynomial const& a,
                                             Polynomial const& m) {
  Field const& f = a.field();
  Polynomial   r0 = m, r1 = a % m;
  Polynomial   s0(f), s1 = Polynomial::monomial(f, 0);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0           = std::move(r1);
    r1           = std::move(r);
    s0           = std::move(s1);
    s1           = std::move(s);
  }
  if (r0.degree() != 0) {
    return std::nullopt;
  }
  return (s0.scaled(f->inv(r0.leading()))) % m;
}

// All monic polynomials of degree d, in base-q counting order of
// (c_0, ..., c_{d-1}).
inline std::vector<Polynomial> enumerate_monic(Field const& f, unsigned d) {
  std::uint64_t const count = detail::ipow(f->order(), d);
  std::vector<Polynomial> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<Code> v(d + 1);
    std::uint64_t     m = n;
    for (unsigned i = 0; i < d; ++i) {
      v[i] = static_cast<Code>(m % f->order());
      m /= f->order();
    }
    v[d] = 1;
    out.emplace_back(f, std::move(v));
  }
  return out;
}

// Monic irreducibles of every degree 1..max_degree over one field, built by
// trial division against the lower degrees.
class IrreducibleTable {
 public:
  IrreducibleTable(Field f, unsigned max_degree)
      : field_(std::move(f)), by_degree_(max_degree + 1) {
    for (unsigned d = 1; d <= max_degree; ++d) {
      for (auto& cand : enumerate_monic(field_, d)) {
        if (!has_factor_below(cand, d / 2)) {
          by_degree_[d].push_back(std::move(cand));
        }
      }
    }
  }

  Field const& field() const noexcept {
    return field_;
  }
  unsigned max_degree() const noexcept {
    return static_cast<unsigned>(by_degree_.size()) - 1;
  }
  std::vector<Polynomial> const& of_degree(unsigned d) const {
    return by_degree_.at(d);
  }

 private:
  bool has_factor_below(Polynomial const& f, unsigned max_d) const {
    for (unsigned e = 1; e <= max_d; ++e) {
      for (auto const& g : by_degree_[e]) {
        if ((f % g).is_zero()) {
          return true;
        }
      }
    }
    return false;
  }

  Field                                field_;
  std::vector<std::vector<Polynomial>> by_degree_;
};

inline std::vector<Polynomial> enumerate_monic_irreducibles(Field const& f,
                                                            unsigned     d) {
  if (d == 0) {
    throw std::invalid_argument("irreducible degree must be positive");
  }
  // Trial division only needs degrees up to d / 2.
  IrreducibleTable const lower(f, d / 2);
  std::vector<Polynomial> out;
  for (auto& cand : enumerate_monic(f, d)) {
    bool reducible = false;
    for (unsigned e = 1; e <= d / 2 && !reducible; ++e) {
      for (auto const& g : lower.of_degree(e)) {
        if ((cand % g).is_zero()) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) {
      out.push_back(std::move(cand));
    }
  }
  return out;
}

struct PolyFactor {
  Polynomial poly;
  unsigned   multiplicity;
};

// Factorization of a monic polynomial using a precomputed irreducible table
// covering at least degree deg(f) / 2.
inline std::vector<PolyFactor> factor_monic(Polynomial       f,
                                            IrreducibleTable const& table) {
  if (!f.is_monic()) {
    throw std::invalid_argument("factor_monic: polynomial is not monic");
  }
  if (f.degree() < 1) {
    throw std::invalid_argument("factor_monic: degree must be at least 1");
  }
  if (!f.field()->same_as(*table.field())) {
    throw std::invalid_argument("factor_monic: table over a different field");
  }
  std::vector<PolyFactor> out;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    if (d > table.max_degree()) {
      throw std::logic_error("factor_monic: irreducible table too small");
    }
    for (auto const& g : table.of_degree(d)) {
      unsigned mult = 0;
      while (f.degree() >= g.degree()) {
        auto [q, r] = divmod(f, g);
        if (!r.is_zero()) {
          break;
        }
        f = std::move(q);
        ++mult;
      }
      if (mult > 0) {
        out.push_back({g, mult});
      }
    }
  }
  if (f.degree() >= 1) {
    // No factor of degree <= deg/2 remains, so what is left is irreducible.
    auto it = std::find_if(out.begin(), out.end(), [&](PolyFactor const& pf) {
      return pf.poly == f;
    });
    if (it != out.end()) {
      ++it->multiplicity;
    } else {
      out.push_back({std::move(f), 1});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](PolyFactor const& a, PolyFactor const& b) {
                     return a.poly.degree() < b.poly.degree();
                   });
  return out;
}

inline std::vector<PolyFactor> factor_monic(Polynomial const& f) {
  if (f.degree() < 1) {
    throw std::invalid_argument("factor_monic: degree must be at least 1");
  }
  IrreducibleTable const table(f.field(),
                               static_cast<unsigned>(f.degree()) / 2);
  return factor_monic(f, table);
}

}  // namespace kgunits

// Decomposition of commutative group algebras.
//
// For abelian G = P x H with P the Sylow p-subgroup (p = char K), KH splits
// into fields by factoring x^n - 1 for each cyclic factor of H in turn, and
// KG = (KH)P is the direct sum of the group algebras F_{q^d} P over those
// fields.  Each F_{q^d} P is local, so its units number (q^d - 1) q^{d(|P|-1)}.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "kgunits/abelian_type.hpp"
#include "kgunits/finite_field.hpp"
#include "kgunits/group_algebra.hpp"
#include "kgunits/unit_group.hpp"

namespace kgunits {

// F_{q^d} (P trivial) or the modular block F_{q^d}[P].
struct Block {
  std::uint64_t base_order;  // q = |K|
  unsigned      degree;      // d
  AbelianType   p_group;     // trivial for a field block

  bool is_field() const noexcept {
    return p_group.is_trivial();
  }
  std::uint64_t field_order() const {
    return detail::ipow(base_order, degree);
  }
  // K-dimension of the block: d * |P|
  std::uint64_t dimension() const {
    return degree * p_group.order();
  }
  std::string to_string() const {
    std::string s = "F" + std::to_string(field_order());
    if (!is_field()) {
      s += "[" + p_group.to_string() + "]";
    }
    return s;
  }

  friend bool operator==(Block const&, Block const&) = default;
};

class SummandList {
 public:
  SummandList() = default;
  explicit SummandList(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(), [](Block const& a, Block const& b) {
      return std::make_tuple(a.field_order(), a.p_group.order(), a.to_string())
             < std::make_tuple(b.field_order(), b.p_group.order(),
                               b.to_string());
    });
  }

  std::vector<Block> const& blocks() const noexcept {
    return blocks_;
  }

  bool all_field_blocks() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](Block const& b) { return b.is_field(); });
  }

  std::uint64_t dimension() const {
    std::uint64_t d = 0;
    for (auto const& b : blocks_) {
      d += b.dimension();
    }
    return d;
  }

  // "F2 + F4^4", "F2[C2] + F4[C2]"; equal blocks collapse to "^m".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size();) {
      std::size_t j = i;
      while (j < blocks_.size() && blocks_[j] == blocks_[i]) {
        ++j;
      }
      if (!out.empty()) {
        out += " + ";
      }
      out += blocks_[i].to_string();
      if (j - i > 1) {
        out += "^" + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  friend bool operator==(SummandList const&, SummandList const&) = default;

 private:
  std::vector<Block> blocks_;
};

// Maschke: KG is semisimple iff char K does not divide |G|.
inline bool is_semisimple(Algebra const& a) {
  return a.dimension() % a.field()->characteristic() != 0;
}

inline SummandList decompose_abelian(Algebra const& a) {
  if (!a.is_commutative()) {
    throw std::invalid_argument("decompose_abelian: " + a.label()
                                + " is not commutative");
  }
  auto const&    f    = *a.field();
  unsigned const p    = f.characteristic();
  auto const     type = abelian_invariants(a.group());

  AbelianType::Parts         sylow;
  std::vector<std::uint64_t> cyclic_factors;
  for (auto const& [prime, lam] : type.primary_parts()) {
    if (prime == p) {
      sylow[prime] = lam;
    } else {
      for (auto e : lam) {
        cyclic_factors.push_back(detail::ipow(prime, e));
      }
    }
  }
  std::vector<unsigned> degrees{1};
  for (auto n : cyclic_factors) {
    std::vector<unsigned> next;
    for (auto d : degrees) {
      auto const ext = make_field(p, f.degree() * d);
      for (auto const& pf :
           factor_monic(Polynomial::x_pow_minus_one(ext, n))) {
        for (unsigned m = 0; m < pf.multiplicity; ++m) {
          next.push_back(d * static_cast<unsigned>(pf.poly.degree()));
        }
      }
    }
    degrees = std::move(next);
  }
  AbelianType const  p_group(std::move(sylow));
  std::vector<Block> blocks;
  for (auto d : degrees) {
    blocks.push_back({f.order(), d, p_group});
  }
  SummandList s(std::move(blocks));
  if (s.dimension() != a.dimension()) {
    throw std::logic_error("decompose_abelian: block dimensions do not sum "
                           "to |G|");
  }
  return s;
}

namespace detail {

  inline bool is_elementary(AbelianType const& t) {
    for (auto const& [p, lam] : t.primary_parts()) {
      for (auto e : lam) {
        if (e != 1) {
          return false;
        }
      }
    }
    return t.primary_parts().size() <= 1;
  }

}  // namespace detail

// Unit group of F_{p^k} C_p^n: C_p^{k(p^n - 1)} x C_{p^k - 1}.
inline AbelianType elementary_modular_units(unsigned      p,
                                            unsigned      k,
                                            unsigned      n) {
  std::uint64_t const        pn = detail::ipow(p, n);
  std::vector<std::uint64_t> orders(static_cast<std::size_t>(k) * (pn - 1), p);
  orders.push_back(detail::ipow(p, k) - 1);
  return AbelianType::from_cyclic_orders(orders);
}

// Unit group predicted blockwise: C_{q^d - 1} for a field block and the
// elementary-abelian formula for a modular block; nullopt when some modular
// block has a non-elementary P.
inline std::optional<AbelianType> predicted_unit_structure(
    SummandList const& s) {
  AbelianType acc;
  for (auto const& b : s.blocks()) {
    if (b.is_field()) {
      acc = acc * AbelianType::cyclic(b.field_order() - 1);
      continue;
    }
    if (!detail::is_elementary(b.p_group)) {
      return std::nullopt;
    }
    auto const&    part = *b.p_group.primary_parts().begin();
    unsigned const p    = static_cast<unsigned>(part.first);
    unsigned const n    = static_cast<unsigned>(part.second.size());
    unsigned       k    = 0;
    for (std::uint64_t q = b.field_order(); q > 1; q /= p) {
      ++k;
    }
    acc = acc * elementary_modular_units(p, k, n);
  }
  return acc;
}

// Product over blocks of (q^d - 1) q^{d(|P| - 1)}.
inline std::uint64_t predicted_unit_count(SummandList const& s) {
  std::uint64_t n = 1;
  for (auto const& b : s.blocks()) {
    std::uint64_t const qd = b.field_order();
    n *= (qd - 1) * detail::ipow(qd, static_cast<unsigned>(b.p_group.order() - 1));
  }
  return n;
}

// CRT idempotents of K[x]/(x^n - 1) mapped into KC_n: for each irreducible
// factor f_i, e_i = h_i (x^n - 1)/f_i with h_i the inverse of the cofactor
// modulo f_i.  Ordered like the factorization.
inline std::vector<AlgebraElement> primitive_idempotents(AlgebraPtr const& a) {
  auto const& g = a->group();
  if (!is_semisimple(*a)) {
    throw std::invalid_argument("primitive_idempotents: " + a->label()
                                + " is not semisimple");
  }
  std::size_t const n = g.order();
  std::size_t       gen = n;
  for (auto const& gg : g.generators()) {
    if (g.element_order(gg.element) == n) {
      gen = gg.element;
    }
  }
  if (gen == n) {
    throw std::invalid_argument("primitive_idempotents: " + g.label()
                                + " is not cyclic on a named generator");
  }
  Field const& f       = a->field();
  auto const   modulus = Polynomial::x_pow_minus_one(f, n);
  std::vector<AlgebraElement> out;
  for (auto const& pf : factor_monic(modulus)) {
    auto const cofactor = divmod(modulus, pf.poly).first;
    auto const h        = inverse_mod(cofactor, pf.poly);
    if (!h) {
      throw std::logic_error("primitive_idempotents: cofactor not invertible");
    }
    auto const        e = (*h * cofactor) % modulus;
    std::vector<Code> c(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      c[g.power(gen, static_cast<long long>(j))] = e.coeff(j);
    }
    out.emplace_back(a, std::move(c));
  }
  return out;
}

// Primitive idempotents of a commutative algebra by exhaustive search:
// nonzero idempotents with no nonzero idempotent strictly below them.
inline std::vector<AlgebraElement> primitive_idempotents_by_enumeration(
    AlgebraPtr const& a) {
  if (!a->is_commutative()) {
    throw std::invalid_argument("primitive idempotent search needs a "
                                "commutative algebra");
  }
  std::vector<AlgebraElement> idem;
  for (std::uint64_t i = 1; i < a->size(); ++i) {
    auto e = AlgebraElement::from_index(a, i);
    if (e * e == e) {
      idem.push_back(std::move(e));
    }
  }
  std::vector<AlgebraElement> out;
  for (auto const& e : idem) {
    bool primitive = true;
    for (auto const& f : idem) {
      if (!(f == e) && e * f == f) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      out.push_back(e);
    }
  }
  return out;
}

// e_i^2 = e_i, e_i e_j = 0 (i != j), every e_i central, sum = 1.
inline bool is_complete_orthogonal_central(
    std::span<AlgebraElement const> es) {
  if (es.empty()) {
    return false;
  }
  auto const& a   = es.front().algebra();
  auto        sum = AlgebraElement::zero(a);
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!(es[i] * es[i] == es[i])) {
      return false;
    }
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i != j && !(es[i] * es[j]).is_zero()) {
        return false;
      }
    }
    for (std::size_t g = 0; g < a->dimension(); ++g) {
      auto const x = AlgebraElement::embed(a, g);
      if (!(x * es[i] == es[i] * x)) {
        return false;
      }
    }
    sum = sum + es[i];
  }
  return sum.is_one();
}

// K-dimension of the ideal A e.
inline std::size_t ideal_dimension(AlgebraElement const& e) {
  auto const&       a = e.algebra();
  std::size_t const n = a->dimension();
  Matrix            m(a->field(), n, n);
  for (std::size_t g = 0; g < n; ++g) {
    auto const v = AlgebraElement::embed(a, g) * e;
    for (std::size_t i = 0; i < n; ++i) {
      m(i, g) = v.coeffs()[i];
    }
  }
  return rank(m);
}

struct DecompositionCertificate {
  SummandList                 summands;
  std::vector<AlgebraElement> idempotents;
};

// Summands plus, for cyclic semisimple algebras, the CRT idempotents (checked
// orthogonal, central and complete, one per block with matching dimension).
inline DecompositionCertificate certify_decomposition(AlgebraPtr const& a) {
  DecompositionCertificate cert{decompose_abelian(*a), {}};
  auto const&              g = a->group();
  bool const cyclic_gen = std::any_of(
      g.generators().begin(), g.generators().end(),
      [&](Generator const& gg) { return gg.order == g.order(); });
  if (is_semisimple(*a) && cyclic_gen) {
    cert.idempotents = primitive_idempotents(a);
    if (!is_complete_orthogonal_central(cert.idempotents)
        || cert.idempotents.size() != cert.summands.blocks().size()) {
      throw std::logic_error("certify_decomposition: idempotents do not match "
                             "the summands of "
                             + a->label());
    }
    std::vector<std::size_t> dims, expect;
    for (auto const& e : cert.idempotents) {
      dims.push_back(ideal_dimension(e));
    }
    for (auto const& b : cert.summands.blocks()) {
      expect.push_back(b.dimension());
    }
    std::sort(dims.begin(), dims.end());
    std::sort(expect.begin(), expect.end());
    if (dims != expect) {
      throw std::logic_error("certify_decomposition: idempotent ideals have "
                             "the wrong dimensions in "
                             + a->label());
    }
  }
  return cert;
}

}  // namespace kgunits

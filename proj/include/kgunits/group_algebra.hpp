// The group algebra KG over a finite field: ring arithmetic, augmentation,
// regular representation, unit testing and exhaustive unit enumeration.
#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgunits/finite_field.hpp"
#include "kgunits/groups.hpp"
#include "kgunits/linear_algebra.hpp"

namespace kgunits {

class Algebra;
using AlgebraPtr = std::shared_ptr<Algebra const>;

class Algebra {
 public:
  static AlgebraPtr make(Field field, GroupPtr group) {
    return AlgebraPtr(new Algebra(std::move(field), std::move(group)));
  }

  Field const& field() const noexcept {
    return field_;
  }
  Group const& group() const noexcept {
    return *group_;
  }
  GroupPtr const& group_ptr() const noexcept {
    return group_;
  }
  std::size_t dimension() const noexcept {
    return group_->order();
  }
  // q^{|G|}, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept {
    return size_;
  }
  bool is_commutative() const noexcept {
    return commutative_;
  }
  // e.g. "F5[C2xC2]"
  std::string label() const {
    return field_->label() + "[" + group_->label() + "]";
  }

  bool same_as(Algebra const& other) const noexcept {
    return this == &other
           || (field_->same_as(*other.field_) && group_ == other.group_);
  }

  // out = a * b (convolution over the group table); out must not alias.
  void mul_into(std::span<Code const> a,
                std::span<Code const> b,
                std::span<Code>       out) const noexcept {
    auto const&       f = *field_;
    auto const&       g = *group_;
    std::size_t const n = g.order();
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t h = 0; h < n; ++h) {
      if (a[h] == 0) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (b[k] == 0) {
          continue;
        }
        std::size_t const hk = g.mul(h, k);
        out[hk]              = f.add(out[hk], f.mul(a[h], b[k]));
      }
    }
  }

 private:
  Algebra(Field field, GroupPtr group)
      : field_(std::move(field)),
        group_(std::move(group)),
        commutative_(group_->is_abelian()) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < group_->order(); ++i) {
      if (s > std::numeric_limits<std::uint64_t>::max() / field_->order()) {
        s = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      s *= field_->order();
    }
    size_ = s;
  }

  Field         field_;
  GroupPtr      group_;
  bool          commutative_;
  std::uint64_t size_ = 0;
};

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, std::vector<Code> coeffs)
      : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != algebra_->dimension()) {
      throw std::invalid_argument("coefficient count does not match |G|");
    }
    for (auto c : coeffs_) {
      if (c >= algebra_->field()->order()) {
        throw std::out_of_range("coefficient out of range for "
                                + algebra_->field()->label());
      }
    }
  }

  static AlgebraElement zero(AlgebraPtr const& a) {
    return {a, std::vector<Code>(a->dimension(), 0)};
  }
  static AlgebraElement one(AlgebraPtr const& a) {
    return embed(a, a->group().identity());
  }
  // The basis element g.
  static AlgebraElement embed(AlgebraPtr const& a, std::size_t g) {
    std::vector<Code> c(a->dimension(), 0);
    c.at(g) = 1;
    return {a, std::move(c)};
  }
  // Element number `index` in base-q counting order of coefficient tuples
  // (coefficient of group element 0 least significant).
  static AlgebraElement from_index(AlgebraPtr const& a, std::uint64_t index) {
    std::vector<Code> c(a->dimension());
    Code const        q = a->field()->order();
    for (auto& x : c) {
      x = static_cast<Code>(index % q);
      index /= q;
    }
    return {a, std::move(c)};
  }

  AlgebraPtr const& algebra() const noexcept {
    return algebra_;
  }
  std::vector<Code> const& coeffs() const noexcept {
    return coeffs_;
  }
  FieldElement coefficient(std::size_t g) const {
    return {algebra_->field(), coeffs_.at(g)};
  }
  std::uint64_t index() const noexcept {
    std::uint64_t idx = 0;
    Code const    q   = algebra_->field()->order();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      idx = idx * q + coeffs_[i];
    }
    return idx;
  }
  bool is_zero() const noexcept {
    for (auto c : coeffs_) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }
  bool is_one() const noexcept {
    std::size_t const e = algebra_->group().identity();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != (i == e ? 1u : 0u)) {
        return false;
      }
    }
    return true;
  }

  AlgebraElement pow(std::uint64_t n) const {
    AlgebraElement result = one(algebra_);
    AlgebraElement base   = *this;
    while (n > 0) {
      if (n & 1) {
        result = result * base;
      }
      n >>= 1;
      if (n > 0) {
        base = base * base;
      }
    }
    return result;
  }

  // Sum of terms "c*g" using the group's element names, e.g.
  // "1 + x^2 + y + x*y + x^2*y".  Zero terms are omitted, unit coefficients
  // are not printed.
  std::string to_string() const {
    auto const& f = *algebra_->field();
    auto const& g = algebra_->group();
    std::string out;
    // Identity first, then group order.
    std::vector<std::size_t> order;
    order.push_back(g.identity());
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (i != g.identity()) {
        order.push_back(i);
      }
    }
    for (auto i : order) {
      Code const c = coeffs_[i];
      if (c == 0) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      std::string cs = f.format(c);
      if (f.degree() > 1 && cs.find('+') != std::string::npos) {
        cs = "(" + cs + ")";
      }
      if (i == g.identity()) {
        out += cs;
      } else if (c == 1) {
        out += g.element_name(i);
      } else {
        out += cs + "*" + g.element_name(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(AlgebraElement const& a, AlgebraElement const& b) {
    return a.algebra_->same_as(*b.algebra_) && a.coeffs_ == b.coeffs_;
  }

  friend AlgebraElement operator+(AlgebraElement const& a,
                                  AlgebraElement const& b) {
    check_same(a, b);
    auto const&       f = *a.algebra_->field();
    std::vector<Code> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = f.add(a.coeffs_[i], b.coeffs_[i]);
    }
    return {a.algebra_, std::move(c)};
  }

  friend AlgebraElement operator-(AlgebraElement const& a,
                                  AlgebraElement const& b) {
    check_same(a, b);
    auto const&       f = *a.algebra_->field();
    std::vector<Code> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = f.sub(a.coeffs_[i], b.coeffs_[i]);
    }
    return {a.algebra_, std::move(c)};
  }

  AlgebraElement operator-() const {
    auto const&       f = *algebra_->field();
    std::vector<Code> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = f.neg(coeffs_[i]);
    }
    return {algebra_, std::move(c)};
  }

  friend AlgebraElement operator*(AlgebraElement const& a,
                                  AlgebraElement const& b) {
    check_same(a, b);
    std::vector<Code> c(a.coeffs_.size());
    a.algebra_->mul_into(a.coeffs_, b.coeffs_, c);
    return {a.algebra_, std::move(c)};
  }

  friend AlgebraElement operator*(FieldElement const&   s,
                                  AlgebraElement const& a) {
    if (!s.field()->same_as(*a.algebra_->field())) {
      throw std::invalid_argument("scalar from " + s.field()->label()
                                  + " applied to " + a.algebra_->label());
    }
    auto const&       f = *a.algebra_->field();
    std::vector<Code> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = f.mul(s.code(), a.coeffs_[i]);
    }
    return {a.algebra_, std::move(c)};
  }

 private:
  static void check_same(AlgebraElement const& a, AlgebraElement const& b) {
    if (!a.algebra_->same_as(*b.algebra_)) {
      throw std::invalid_argument("mixed-algebra arithmetic: "
                                  + a.algebra_->label() + " and "
                                  + b.algebra_->label());
    }
  }

  AlgebraPtr        algebra_;
  std::vector<Code> coeffs_;
};

inline AlgebraElement a_add(AlgebraElement const& a, AlgebraElement const& b) {
  return a + b;
}
inline AlgebraElement a_sub(AlgebraElement const& a, AlgebraElement const& b) {
  return a - b;
}
inline AlgebraElement a_neg(AlgebraElement const& a) {
  return -a;
}
inline AlgebraElement a_mul(AlgebraElement const& a, AlgebraElement const& b) {
  return a * b;
}
inline AlgebraElement scalar_mul(FieldElement const&   s,
                                 AlgebraElement const& a) {
  return s * a;
}

inline FieldElement augmentation(AlgebraElement const& a) {
  auto const& f   = *a.algebra()->field();
  Code        sum = 0;
  for (auto c : a.coeffs()) {
    sum = f.add(sum, c);
  }
  return {a.algebra()->field(), sum};
}

// Column g holds the coefficients of a * g.
inline Matrix left_mult_matrix(AlgebraElement const& a) {
  auto const&       alg = *a.algebra();
  auto const&       g   = alg.group();
  std::size_t const n   = g.order();
  Matrix            m(alg.field(), n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t h = 0; h < n; ++h) {
      m(g.mul(h, col), col) = a.coeffs()[h];
    }
  }
  return m;
}

// Two-sided inverse, or nullopt when a is not a unit.
inline std::optional<AlgebraElement> try_inverse(AlgebraElement const& a) {
  auto const&       alg = *a.algebra();
  std::size_t const n   = alg.dimension();
  std::vector<Code> e(n, 0);
  e[alg.group().identity()] = 1;
  Matrix const m            = left_mult_matrix(a);
  if (rank(m) < n) {
    return std::nullopt;
  }
  auto x = solve(m, e);
  if (!x) {
    return std::nullopt;
  }
  AlgebraElement b(a.algebra(), std::move(*x));
  if (!(a * b).is_one() || !(b * a).is_one()) {
    throw std::logic_error("try_inverse: solution is not a two-sided inverse");
  }
  return b;
}

inline bool is_unit(AlgebraElement const& a) {
  return rank(left_mult_matrix(a)) == a.algebra()->dimension();
}

inline std::vector<AlgebraElement> enumerate_elements(AlgebraPtr const& a) {
  std::vector<AlgebraElement> out;
  out.reserve(a->size());
  for (std::uint64_t i = 0; i < a->size(); ++i) {
    out.push_back(AlgebraElement::from_index(a, i));
  }
  return out;
}

inline std::vector<AlgebraElement> enumerate_units(AlgebraPtr const& a) {
  std::vector<AlgebraElement> out;
  for (std::uint64_t i = 0; i < a->size(); ++i) {
    auto e = AlgebraElement::from_index(a, i);
    if (is_unit(e)) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace detail {

  inline bool is_prime_power_of(std::uint64_t n, std::uint64_t p) {
    if (n == 0) {
      return false;
    }
    while (n % p == 0) {
      n /= p;
    }
    return n == 1;
  }

}  // namespace detail

// For G a p-group and char K = p, KG is local: an element is a unit exactly
// when its augmentation is nonzero, and for abelian G every alpha satisfies
// alpha^{|G|} = aug(alpha)^{|G|}.  Checks both over every element against
// the linear-algebra unit test.
inline bool p_power_collapse_check(AlgebraPtr const& a) {
  std::uint64_t const p = a->field()->characteristic();
  std::uint64_t const n = a->dimension();
  if (!detail::is_prime_power_of(n, p)) {
    throw std::invalid_argument(
        "p_power_collapse_check: group is not a p-group in the field's "
        "characteristic");
  }
  auto const& f = *a->field();
  for (std::uint64_t i = 0; i < a->size(); ++i) {
    auto const e   = AlgebraElement::from_index(a, i);
    Code const aug = augmentation(e).code();
    if (is_unit(e) != (aug != 0)) {
      return false;
    }
    if (a->is_commutative()) {
      auto const lhs = e.pow(n);
      auto       rhs = AlgebraElement::zero(a);
      rhs            = FieldElement(a->field(), f.pow(aug, n))
            * AlgebraElement::one(a);
      if (!(lhs == rhs)) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

  // Recursive-descent parser for algebra expressions such as
  // "1 + (x - x^2)(1 - y)" or "-x^2".  Products may be written with '*' or
  // by juxtaposition; generator names are matched longest first.
  class ElementParser {
   public:
    ElementParser(AlgebraPtr alg, std::string_view text)
        : alg_(std::move(alg)), text_(text) {}

    AlgebraElement parse() {
      auto e = expr();
      skip_ws();
      if (pos_ != text_.size()) {
        fail("unexpected character");
      }
      return e;
    }

   private:
    [[noreturn]] void fail(std::string const& what) const {
      throw std::invalid_argument("cannot parse algebra element '"
                                  + std::string(text_) + "': " + what
                                  + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
      while (pos_ < text_.size()
             && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }

    bool peek(char c) {
      skip_ws();
      return pos_ < text_.size() && text_[pos_] == c;
    }

    AlgebraElement expr() {
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = text_[pos_++] == '-';
      }
      auto acc = term();
      if (negate) {
        acc = -acc;
      }
      while (peek('+') || peek('-')) {
        bool const minus = text_[pos_++] == '-';
        auto       t     = term();
        acc              = minus ? acc - t : acc + t;
      }
      return acc;
    }

    bool starts_factor() {
      skip_ws();
      if (pos_ >= text_.size()) {
        return false;
      }
      char const c = text_[pos_];
      return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    AlgebraElement term() {
      auto acc = factor();
      while (true) {
        if (peek('*')) {
          ++pos_;
          acc = acc * factor();
        } else if (starts_factor()) {
          acc = acc * factor();
        } else {
          return acc;
        }
      }
    }

    long long integer() {
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t const start = pos_;
      while (pos_ < text_.size()
             && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) {
        fail("expected integer");
      }
      long long const v = std::stoll(std::string(text_.substr(start, pos_ - start)));
      return neg ? -v : v;
    }

    AlgebraElement factor() {
      auto base = primary();
      if (peek('^')) {
        ++pos_;
        long long const e = integer();
        if (e < 0) {
          auto inv = try_inverse(base);
          if (!inv) {
            fail("negative power of a non-unit");
          }
          return inv->pow(static_cast<std::uint64_t>(-e));
        }
        return base.pow(static_cast<std::uint64_t>(e));
      }
      return base;
    }

    AlgebraElement primary() {
      skip_ws();
      if (pos_ >= text_.size()) {
        fail("unexpected end of input");
      }
      char const c = text_[pos_];
      if (c == '(') {
        ++pos_;
        auto e = expr();
        if (!peek(')')) {
          fail("expected ')'");
        }
        ++pos_;
        return e;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        long long const v = integer();
        return FieldElement(alg_->field(), alg_->field()->from_int(v))
               * AlgebraElement::one(alg_);
      }
      // Longest generator name matching at pos_.
      std::size_t best = 0, elem = 0;
      for (auto const& g : alg_->group().generators()) {
        if (g.name.size() > best && text_.substr(pos_, g.name.size()) == g.name) {
          best = g.name.size();
          elem = g.element;
        }
      }
      if (best == 0) {
        fail("unknown generator");
      }
      pos_ += best;
      return AlgebraElement::embed(alg_, elem);
    }

    AlgebraPtr       alg_;
    std::string_view text_;
    std::size_t      pos_ = 0;
  };

}  // namespace detail

inline AlgebraElement parse_element(AlgebraPtr const& a,
                                    std::string_view  text) {
  return detail::ElementParser(a, text).parse();
}

}  // namespace kgunits

// The unit group U(KG) by exhaustive enumeration, and its classification:
// order spectrum, abelian invariants by order counting, dihedral
// recognition, subgroup closure and checks of named generators.
#pragma once

#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kgunits/abelian_type.hpp"
#include "kgunits/group_algebra.hpp"
#include "kgunits/word.hpp"

namespace kgunits {

class UnitGroup {
 public:
  explicit UnitGroup(AlgebraPtr algebra)
      : algebra_(std::move(algebra)), units_(enumerate_units(algebra_)) {
    for (std::size_t i = 0; i < units_.size(); ++i) {
      index_.emplace(units_[i].index(), i);
    }
    identity_ = index_.at(AlgebraElement::one(algebra_).index());
    compute_orders();
  }

  AlgebraPtr const& algebra() const noexcept {
    return algebra_;
  }
  std::size_t size() const noexcept {
    return units_.size();
  }
  std::vector<AlgebraElement> const& units() const noexcept {
    return units_;
  }
  AlgebraElement const& at(std::size_t i) const {
    return units_.at(i);
  }
  std::size_t identity() const noexcept {
    return identity_;
  }
  std::optional<std::size_t> position(AlgebraElement const& a) const {
    if (!a.algebra()->same_as(*algebra_)) {
      throw std::invalid_argument("element of " + a.algebra()->label()
                                  + " looked up in U(" + algebra_->label()
                                  + ")");
    }
    auto it = index_.find(a.index());
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }
  bool contains(AlgebraElement const& a) const {
    return position(a).has_value();
  }
  std::size_t mul(std::size_t i, std::size_t j) const {
    return index_.at((units_[i] * units_[j]).index());
  }
  std::uint64_t element_order(std::size_t i) const {
    return orders_.at(i);
  }
  OrderSpectrum const& spectrum() const noexcept {
    return spectrum_;
  }

  bool is_abelian() const {
    if (algebra_->is_commutative()) {
      return true;
    }
    for (std::size_t i = 0; i < units_.size(); ++i) {
      for (std::size_t j = i + 1; j < units_.size(); ++j) {
        if (!(units_[i] * units_[j] == units_[j] * units_[i])) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  // Lagrange: the order divides |U|; strip primes while the power stays 1.
  void compute_orders() {
    auto const          primes = detail::prime_divisors(units_.size());
    std::uint64_t const n      = units_.size();
    orders_.resize(units_.size());
    for (std::size_t i = 0; i < units_.size(); ++i) {
      std::uint64_t ord = n;
      for (auto p : primes) {
        while (ord % p == 0 && units_[i].pow(ord / p).is_one()) {
          ord /= p;
        }
      }
      orders_[i] = ord;
      ++spectrum_[ord];
    }
  }

  AlgebraPtr                                       algebra_;
  std::vector<AlgebraElement>                      units_;
  std::unordered_map<std::uint64_t, std::size_t>   index_;
  std::size_t                                      identity_ = 0;
  std::vector<std::uint64_t>                       orders_;
  OrderSpectrum                                    spectrum_;
};

inline OrderSpectrum unit_order_spectrum(UnitGroup const& u) {
  return u.spectrum();
}

inline std::uint64_t exponent(UnitGroup const& u) {
  return spectrum_exponent(u.spectrum());
}

// Number of units of order dividing n.
inline std::uint64_t count_order_dividing(OrderSpectrum const& s,
                                          std::uint64_t        n) {
  std::uint64_t c = 0;
  for (auto const& [ord, count] : s) {
    if (n % ord == 0) {
      c += count;
    }
  }
  return c;
}

// Abelian invariants of a finite abelian group given its order spectrum.
inline AbelianType abelian_type_from_spectrum(OrderSpectrum const& s) {
  std::uint64_t const   total = spectrum_total(s);
  AbelianType::Parts    parts;
  for (auto p : detail::prime_divisors(total)) {
    std::uint64_t p_part = 1;
    for (std::uint64_t m = total; m % p == 0; m /= p) {
      p_part *= p;
    }
    std::vector<std::uint64_t> killed;
    std::uint64_t              pi = 1;
    while (true) {
      killed.push_back(count_order_dividing(s, pi));
      if (killed.back() == p_part) {
        break;
      }
      if (pi > total) {
        throw std::invalid_argument("order counts inconsistent with an "
                                    "abelian group");
      }
      pi *= p;
    }
    parts[p] = partition_from_counts(p, killed);
  }
  AbelianType t(std::move(parts));
  // Round trip: the partition must regenerate the measured counts.
  if (t.order() != total || t.order_spectrum() != s) {
    throw std::invalid_argument("order spectrum " + spectrum_to_string(s)
                                + " is not that of an abelian group");
  }
  return t;
}

inline AbelianType abelian_invariants(UnitGroup const& u) {
  if (!u.is_abelian()) {
    throw std::invalid_argument("abelian_invariants: U("
                                + u.algebra()->label() + ") is not abelian");
  }
  return abelian_type_from_spectrum(u.spectrum());
}

inline AbelianType abelian_invariants(Group const& g) {
  if (!g.is_abelian()) {
    throw std::invalid_argument("abelian_invariants: " + g.label()
                                + " is not abelian");
  }
  return abelian_type_from_spectrum(g.order_spectrum());
}

// Closure of gens under multiplication (finite, so a subgroup).
inline std::vector<std::size_t> closure_elements(
    UnitGroup const&                   u,
    std::span<AlgebraElement const>    gens) {
  std::vector<std::size_t> gpos;
  for (auto const& g : gens) {
    auto pos = u.position(g);
    if (!pos) {
      throw std::invalid_argument("closure: generator " + g.to_string()
                                  + " is not a unit");
    }
    gpos.push_back(*pos);
  }
  std::vector<bool>        seen(u.size(), false);
  std::vector<std::size_t> elems{u.identity()};
  seen[u.identity()] = true;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (auto g : gpos) {
      std::size_t const h = u.mul(elems[k], g);
      if (!seen[h]) {
        seen[h] = true;
        elems.push_back(h);
      }
    }
  }
  return elems;
}

inline std::size_t closure(UnitGroup const&                u,
                           std::span<AlgebraElement const> gens) {
  return closure_elements(u, gens).size();
}

struct DihedralWitness {
  std::size_t rotation;    // order |U|/2
  std::size_t reflection;  // involution inverting the rotation
};

// U is dihedral of order 2n (n >= 3) iff some r of order n and involution
// s satisfy s r s = r^-1 and generate U.
inline std::optional<DihedralWitness> recognize_dihedral(UnitGroup const& u) {
  std::size_t const order = u.size();
  if (order < 6 || order % 2 != 0) {
    return std::nullopt;
  }
  std::size_t const n = order / 2;
  for (std::size_t r = 0; r < order; ++r) {
    if (u.element_order(r) != n) {
      continue;
    }
    auto const r_inv = try_inverse(u.at(r));
    for (std::size_t s = 0; s < order; ++s) {
      if (u.element_order(s) != 2) {
        continue;
      }
      if (!(u.at(s) * u.at(r) * u.at(s) == *r_inv)) {
        continue;
      }
      AlgebraElement const gens[] = {u.at(r), u.at(s)};
      if (closure(u, gens) == order) {
        return DihedralWitness{r, s};
      }
    }
  }
  return std::nullopt;
}

// Value of a word with generator i+1 mapped to values[i].
inline AlgebraElement evaluate_word(Word const&                     w,
                                    std::span<AlgebraElement const> values,
                                    std::span<AlgebraElement const> inverses) {
  if (values.empty()) {
    throw std::invalid_argument("evaluate_word: no generator values");
  }
  AlgebraElement acc = AlgebraElement::one(values.front().algebra());
  for (Letter l : w) {
    std::size_t const g = static_cast<std::size_t>(std::abs(l)) - 1;
    if (g >= values.size()) {
      throw std::invalid_argument("evaluate_word: letter out of range");
    }
    acc = acc * (l > 0 ? values[g] : inverses[g]);
  }
  return acc;
}

inline std::vector<AlgebraElement> unit_inverses(
    std::span<AlgebraElement const> gens) {
  std::vector<AlgebraElement> inv;
  for (auto const& g : gens) {
    auto i = try_inverse(g);
    if (!i) {
      throw std::invalid_argument("generator " + g.to_string()
                                  + " is not a unit");
    }
    inv.push_back(std::move(*i));
  }
  return inv;
}

// Every relator evaluates to 1 and the generators generate all of U.
inline bool verify_presentation_generators(
    UnitGroup const&                u,
    std::span<AlgebraElement const> gens,
    std::span<Word const>           relators) {
  auto const inv = unit_inverses(gens);
  for (auto const& w : relators) {
    if (!evaluate_word(w, gens, inv).is_one()) {
      return false;
    }
  }
  return closure(u, gens) == u.size();
}

// Structure of a unit group as reported in catalogs.
struct AbelianDescriptor {
  AbelianType type;
};
struct DihedralDescriptor {
  std::uint64_t order;
};
struct PresentedDescriptor {
  std::string   label;
  std::uint64_t order;
};
struct UnclassifiedDescriptor {
  std::uint64_t order;
  OrderSpectrum spectrum;
};
using GroupDescriptor = std::variant<AbelianDescriptor,
                                     DihedralDescriptor,
                                     PresentedDescriptor,
                                     UnclassifiedDescriptor>;

inline std::uint64_t descriptor_order(GroupDescriptor const& d) {
  return std::visit(
      [](auto const& v) -> std::uint64_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianDescriptor>) {
          return v.type.order();
        } else {
          return v.order;
        }
      },
      d);
}

// "C2^5 x C4", "D12", "presented(F2[D8])", or
// "unclassified, order n, spectrum {..}".
inline std::string describe(GroupDescriptor const& d) {
  return std::visit(
      [](auto const& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianDescriptor>) {
          return v.type.to_string();
        } else if constexpr (std::is_same_v<T, DihedralDescriptor>) {
          return "D" + std::to_string(v.order);
        } else if constexpr (std::is_same_v<T, PresentedDescriptor>) {
          return "presented(" + v.label + ")";
        } else {
          return "unclassified, order " + std::to_string(v.order)
                 + ", spectrum " + spectrum_to_string(v.spectrum);
        }
      },
      d);
}

inline GroupDescriptor classify(UnitGroup const& u) {
  if (u.is_abelian()) {
    return AbelianDescriptor{abelian_invariants(u)};
  }
  if (recognize_dihedral(u)) {
    return DihedralDescriptor{u.size()};
  }
  return UnclassifiedDescriptor{u.size(), u.spectrum()};
}

}  // namespace kgunits

// Finite groups of order at most 9 as explicit multiplication tables.
//
// Every element carries a normal form x^i*y^j*... over the named generators,
// so element names and generator names follow the usual presentations
// (x of order n for cyclic and dihedral groups; x, y with x^2 = y^2 for Q8).
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgunits {

// element order -> number of elements of that order
using OrderSpectrum = std::map<std::uint64_t, std::uint64_t>;

inline std::uint64_t spectrum_exponent(OrderSpectrum const& s) {
  std::uint64_t e = 1;
  for (auto const& [ord, count] : s) {
    if (count > 0) {
      e = std::lcm(e, ord);
    }
  }
  return e;
}

inline std::uint64_t spectrum_total(OrderSpectrum const& s) {
  std::uint64_t t = 0;
  for (auto const& [ord, count] : s) {
    t += count;
  }
  return t;
}

inline std::string spectrum_to_string(OrderSpectrum const& s);

struct Generator {
  std::string name;
  std::size_t element;
  std::size_t order;
};

class Group;
using GroupPtr = std::shared_ptr<Group const>;

class Group {
 public:
  // `exponents[i]` is the normal form of element i over `generators`;
  // `table[i * n + j]` is the index of the product i*j.
  Group(std::string                            label,
        std::vector<std::size_t>               table,
        std::vector<Generator>                 generators,
        std::vector<std::vector<unsigned>>     exponents)
      : label_(std::move(label)),
        n_(exponents.size()),
        table_(std::move(table)),
        generators_(std::move(generators)),
        exponents_(std::move(exponents)) {
    validate();
    build_names();
  }

  std::string const& label() const noexcept {
    return label_;
  }
  std::size_t order() const noexcept {
    return n_;
  }
  std::size_t identity() const noexcept {
    return identity_;
  }
  std::size_t mul(std::size_t a, std::size_t b) const noexcept {
    return table_[a * n_ + b];
  }
  std::size_t inverse(std::size_t a) const noexcept {
    return inverses_[a];
  }
  std::size_t power(std::size_t a, long long e) const {
    if (e < 0) {
      a = inverse(a);
      e = -e;
    }
    std::size_t r = identity_;
    for (long long i = 0; i < e; ++i) {
      r = mul(r, a);
    }
    return r;
  }
  std::vector<Generator> const& generators() const noexcept {
    return generators_;
  }
  std::vector<unsigned> const& exponents(std::size_t i) const {
    return exponents_.at(i);
  }
  std::string const& element_name(std::size_t i) const {
    return names_.at(i);
  }
  std::optional<std::size_t> generator_element(std::string const& name) const {
    for (auto const& g : generators_) {
      if (g.name == name) {
        return g.element;
      }
    }
    return std::nullopt;
  }

  std::size_t element_order(std::size_t i) const {
    std::size_t x = i, k = 1;
    while (x != identity_) {
      x = mul(x, i);
      ++k;
    }
    return k;
  }

  OrderSpectrum order_spectrum() const {
    OrderSpectrum s;
    for (std::size_t i = 0; i < n_; ++i) {
      ++s[element_order(i)];
    }
    return s;
  }

  std::uint64_t exponent() const {
    return spectrum_exponent(order_spectrum());
  }

  bool is_abelian() const noexcept {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  void validate() {
    if (n_ == 0 || table_.size() != n_ * n_) {
      throw std::invalid_argument("group " + label_
                                  + ": table size does not match order");
    }
    for (auto v : table_) {
      if (v >= n_) {
        throw std::invalid_argument("group " + label_
                                    + ": table entry out of range");
      }
    }
    // Latin square
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<bool> row(n_), col(n_);
      for (std::size_t j = 0; j < n_; ++j) {
        if (row[mul(i, j)] || col[mul(j, i)]) {
          throw std::invalid_argument("group " + label_
                                      + ": table is not a Latin square");
        }
        row[mul(i, j)] = col[mul(j, i)] = true;
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t c = 0; c < n_; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw std::invalid_argument("group " + label_
                                        + ": table is not associative");
          }
        }
      }
    }
    identity_ = n_;
    for (std::size_t e = 0; e < n_ && identity_ == n_; ++e) {
      bool ok = true;
      for (std::size_t j = 0; j < n_ && ok; ++j) {
        ok = mul(e, j) == j && mul(j, e) == j;
      }
      if (ok) {
        identity_ = e;
      }
    }
    if (identity_ == n_) {
      throw std::invalid_argument("group " + label_ + ": no identity");
    }
    inverses_.assign(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (mul(a, b) == identity_) {
          inverses_[a] = b;
          if (mul(b, a) != identity_) {
            throw std::invalid_argument("group " + label_
                                        + ": inverse is not two-sided");
          }
        }
      }
    }
    for (auto const& g : generators_) {
      if (g.element >= n_) {
        throw std::invalid_argument("group " + label_
                                    + ": generator out of range");
      }
    }
  }

  void build_names() {
    names_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::string s;
      auto const& ex = exponents_[i];
      for (std::size_t g = 0; g < ex.size(); ++g) {
        if (ex[g] == 0) {
          continue;
        }
        if (!s.empty()) {
          s += "*";
        }
        s += generators_[g].name;
        if (ex[g] > 1) {
          s += "^" + std::to_string(ex[g]);
        }
      }
      names_[i] = s.empty() ? "1" : s;
    }
  }

  std::string                        label_;
  std::size_t                        n_;
  std::vector<std::size_t>           table_;
  std::vector<Generator>             generators_;
  std::vector<std::vector<unsigned>> exponents_;
  std::size_t                        identity_ = 0;
  std::vector<std::size_t>           inverses_;
  std::vector<std::string>           names_;
};

namespace detail {

  inline std::string generator_name(std::size_t i) {
    static char const* const pool[] = {"x", "y", "z", "w", "u", "v"};
    if (i < std::size(pool)) {
      return pool[i];
    }
    return "g" + std::to_string(i);
  }

  // Builds a group whose elements are the normal forms x^i*y^j (i < n, j < 2)
  // with product given by `rule` on exponent pairs.
  template <typename Rule>
  GroupPtr two_generator_group(std::string label,
                               unsigned    n,
                               Rule        rule) {
    std::size_t const                  order = 2 * n;
    std::vector<std::vector<unsigned>> ex(order);
    auto index = [n](unsigned i, unsigned j) { return j * n + i; };
    for (unsigned j = 0; j < 2; ++j) {
      for (unsigned i = 0; i < n; ++i) {
        ex[index(i, j)] = {i, j};
      }
    }
    std::vector<std::size_t> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        auto [i, j] = rule(ex[a][0], ex[a][1], ex[b][0], ex[b][1]);
        table[a * order + b] = index(i, j);
      }
    }
    // index(0, 0) == 0 is the identity
    auto order_of = [&](std::size_t e) {
      std::size_t x = e, k = 1;
      while (x != 0) {
        x = table[x * order + e];
        ++k;
      }
      return k;
    };
    std::size_t const      gx = index(1 % n, 0), gy = index(0, 1);
    std::vector<Generator> gens{{"x", gx, order_of(gx)},
                                {"y", gy, order_of(gy)}};
    return std::make_shared<Group>(std::move(label), std::move(table),
                                   std::move(gens), std::move(ex));
  }

}  // namespace detail

inline GroupPtr cyclic(unsigned n, std::string label = "") {
  if (n == 0) {
    throw std::invalid_argument("cyclic group order must be positive");
  }
  std::vector<std::size_t>           table(n * n);
  std::vector<std::vector<unsigned>> ex(n);
  for (unsigned i = 0; i < n; ++i) {
    ex[i] = {i};
    for (unsigned j = 0; j < n; ++j) {
      table[i * n + j] = (i + j) % n;
    }
  }
  if (label.empty()) {
    label = "C" + std::to_string(n);
  }
  std::vector<Generator> gens{{"x", 1 % n, n}};
  return std::make_shared<Group>(std::move(label), std::move(table),
                                 std::move(gens), std::move(ex));
}

// Dihedral group of the given order 2n: <x, y | x^n = y^2 = 1, yxy = x^-1>.
inline GroupPtr dihedral(unsigned order, std::string label = "") {
  if (order < 4 || order % 2 != 0) {
    throw std::invalid_argument("dihedral group order must be even and >= 4");
  }
  unsigned const n = order / 2;
  if (label.empty()) {
    label = "D" + std::to_string(order);
  }
  return detail::two_generator_group(
      std::move(label), n, [n](unsigned i, unsigned j, unsigned k, unsigned l) {
        // x^i y^j x^k y^l = x^{i + (-1)^j k} y^{j+l}
        unsigned const ii = j == 0 ? (i + k) % n : (i + n - k) % n;
        return std::pair<unsigned, unsigned>{ii, (j + l) % 2};
      });
}

// <x, y | x^4 = 1, x^2 = y^2, y^-1 x y = x^-1>
inline GroupPtr quaternion8() {
  return detail::two_generator_group(
      "Q8", 4, [](unsigned i, unsigned j, unsigned k, unsigned l) {
        unsigned ii = j == 0 ? (i + k) % 4 : (i + 4 - k) % 4;
        unsigned jj = j + l;
        if (jj == 2) {
          ii = (ii + 2) % 4;
          jj = 0;
        }
        return std::pair<unsigned, unsigned>{ii, jj};
      });
}

// A x B with componentwise product.  Generators are renamed x, y, z, ... in
// order (A's first), and normal forms concatenate.
inline GroupPtr direct_product(Group const& a,
                               Group const& b,
                               std::string  label = "") {
  std::size_t const na = a.order(), nb = b.order(), n = na * nb;
  auto index = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  std::vector<std::size_t>           table(n * n);
  std::vector<std::vector<unsigned>> ex(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      auto e = a.exponents(i);
      auto const& eb = b.exponents(j);
      e.insert(e.end(), eb.begin(), eb.end());
      ex[index(i, j)] = std::move(e);
      for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          table[index(i, j) * n + index(k, l)]
              = index(a.mul(i, k), b.mul(j, l));
        }
      }
    }
  }
  std::vector<Generator> gens;
  for (auto const& g : a.generators()) {
    gens.push_back({detail::generator_name(gens.size()),
                    index(g.element, b.identity()), g.order});
  }
  for (auto const& g : b.generators()) {
    gens.push_back({detail::generator_name(gens.size()),
                    index(a.identity(), g.element), g.order});
  }
  if (label.empty()) {
    label = a.label() + "x" + b.label();
  }
  return std::make_shared<Group>(std::move(label), std::move(table),
                                 std::move(gens), std::move(ex));
}

// Canonical labels of the catalog groups, in catalog order.
inline std::vector<std::string> const& catalog_labels() {
  static std::vector<std::string> const labels{
      "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D6", "C7",
      "C8", "C4xC2", "C2^3", "D8", "Q8", "C9", "C3xC3"};
  return labels;
}

inline GroupPtr group_by_label(std::string const& label) {
  if (label == "C2xC2") {
    return direct_product(*cyclic(2), *cyclic(2), label);
  }
  if (label == "C4xC2") {
    return direct_product(*cyclic(4), *cyclic(2), label);
  }
  if (label == "C2^3") {
    return direct_product(*direct_product(*cyclic(2), *cyclic(2)), *cyclic(2),
                          label);
  }
  if (label == "C3xC3") {
    return direct_product(*cyclic(3), *cyclic(3), label);
  }
  if (label == "D6" || label == "D8") {
    return dihedral(static_cast<unsigned>(std::stoul(label.substr(1))));
  }
  if (label == "Q8") {
    return quaternion8();
  }
  if (label.size() == 2 && label[0] == 'C' && label[1] >= '1'
      && label[1] <= '9') {
    return cyclic(static_cast<unsigned>(label[1] - '0'));
  }
  throw std::invalid_argument("unknown group label '" + label + "'");
}

// One representative per isomorphism class of order <= n, in catalog order.
inline std::vector<GroupPtr> groups_up_to_order(unsigned n) {
  if (n > 9) {
    throw std::invalid_argument("group catalog only covers orders up to 9");
  }
  std::vector<GroupPtr> out;
  for (auto const& label : catalog_labels()) {
    auto g = group_by_label(label);
    if (g->order() <= n) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

inline std::vector<GroupPtr> groups_of_order(unsigned n) {
  auto all = groups_up_to_order(9);
  std::vector<GroupPtr> out;
  for (auto& g : all) {
    if (g->order() == n) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

// Decided by (order, commutativity, order spectrum), which separates all
// isomorphism classes of order <= 9.
inline bool small_group_isomorphic(Group const& g, Group const& h) {
  if (g.order() > 9 || h.order() > 9) {
    throw std::invalid_argument(
        "small_group_isomorphic: only defined for orders up to 9");
  }
  return g.order() == h.order() && g.is_abelian() == h.is_abelian()
         && g.order_spectrum() == h.order_spectrum();
}

inline std::string spectrum_to_string(OrderSpectrum const& s) {
  std::string out = "{";
  for (auto const& [ord, count] : s) {
    if (out.size() > 1) {
      out += ", ";
    }
    out += std::to_string(ord) + ":" + std::to_string(count);
  }
  return out + "}";
}

}  // namespace kgunits

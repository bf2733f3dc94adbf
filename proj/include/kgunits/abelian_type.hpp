// Finite abelian groups up to isomorphism, stored as one partition per prime
// (the primary decomposition), plus the "C2^5 x C4" structure grammar.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgunits/field_spec.hpp"

namespace kgunits {

class AbelianType {
 public:
  // prime -> exponents, sorted descending
  using Parts = std::map<std::uint64_t, std::vector<unsigned>>;

  AbelianType() = default;

  explicit AbelianType(Parts parts) : parts_(std::move(parts)) {
    for (auto it = parts_.begin(); it != parts_.end();) {
      if (!detail::is_prime(it->first)) {
        throw std::invalid_argument("abelian type: " + std::to_string(it->first)
                                    + " is not prime");
      }
      auto& v = it->second;
      v.erase(std::remove(v.begin(), v.end(), 0u), v.end());
      std::sort(v.begin(), v.end(), std::greater<>());
      it = v.empty() ? parts_.erase(it) : std::next(it);
    }
  }

  // Direct product of cyclic groups of the given orders.
  static AbelianType from_cyclic_orders(std::span<std::uint64_t const> orders) {
    Parts parts;
    for (auto n : orders) {
      if (n == 0) {
        throw std::invalid_argument("cyclic factor of order 0");
      }
      for (auto p : detail::prime_divisors(n)) {
        unsigned e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        parts[p].push_back(e);
      }
    }
    return AbelianType(std::move(parts));
  }

  static AbelianType cyclic(std::uint64_t n) {
    std::uint64_t const o[] = {n};
    return from_cyclic_orders(o);
  }

  Parts const& primary_parts() const noexcept {
    return parts_;
  }

  bool is_trivial() const noexcept {
    return parts_.empty();
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (auto const& [p, lam] : parts_) {
      for (auto e : lam) {
        n *= detail::ipow(p, e);
      }
    }
    return n;
  }

  std::uint64_t exponent() const {
    std::uint64_t n = 1;
    for (auto const& [p, lam] : parts_) {
      n *= detail::ipow(p, lam.front());
    }
    return n;
  }

  // #{g : g^{p^i} = 1} = p^{sum_j min(lambda_j, i)}
  std::uint64_t count_killed_by_prime_power(std::uint64_t p, unsigned i) const {
    auto it = parts_.find(p);
    if (it == parts_.end()) {
      return 1;
    }
    unsigned s = 0;
    for (auto e : it->second) {
      s += std::min(e, i);
    }
    return detail::ipow(p, s);
  }

  // Number of elements of each order, from the partition data.
  std::map<std::uint64_t, std::uint64_t> order_spectrum() const {
    // Per prime: count of elements of order exactly p^i.
    std::map<std::uint64_t, std::uint64_t> spec{{1, 1}};
    for (auto const& [p, lam] : parts_) {
      std::map<std::uint64_t, std::uint64_t> local;
      for (unsigned i = 0; i <= lam.front(); ++i) {
        std::uint64_t const n = count_killed_by_prime_power(p, i);
        std::uint64_t const m
            = i == 0 ? 0 : count_killed_by_prime_power(p, i - 1);
        local[detail::ipow(p, i)] = n - m;
      }
      std::map<std::uint64_t, std::uint64_t> next;
      for (auto const& [a, ca] : spec) {
        for (auto const& [b, cb] : local) {
          next[a * b] += ca * cb;  // coprime orders multiply
        }
      }
      spec = std::move(next);
    }
    return spec;
  }

  // Invariant factors d_1 | d_2 | ... (ascending), empty for the trivial group.
  std::vector<std::uint64_t> invariant_factors() const {
    std::size_t len = 0;
    for (auto const& [p, lam] : parts_) {
      len = std::max(len, lam.size());
    }
    std::vector<std::uint64_t> d(len, 1);
    for (auto const& [p, lam] : parts_) {
      for (std::size_t j = 0; j < lam.size(); ++j) {
        d[len - 1 - j] *= detail::ipow(p, lam[j]);
      }
    }
    return d;
  }

  // Structure string: primary cyclic factors, primes ascending and exponents
  // descending within a prime, repeats as "^m", e.g. "C8 x C4 x C2^2 x C3".
  // The trivial group is "C1".
  std::string to_string() const {
    if (parts_.empty()) {
      return "C1";
    }
    std::string out;
    for (auto const& [p, lam] : parts_) {
      for (std::size_t j = 0; j < lam.size();) {
        std::size_t k = j;
        while (k < lam.size() && lam[k] == lam[j]) {
          ++k;
        }
        if (!out.empty()) {
          out += " x ";
        }
        out += "C" + std::to_string(detail::ipow(p, lam[j]));
        if (k - j > 1) {
          out += "^" + std::to_string(k - j);
        }
        j = k;
      }
    }
    return out;
  }

  // Accepts any product of cyclic factors "C<n>" or "C<n>^<m>" separated by
  // 'x' (as printed in tables, e.g. "C3 x C63" or "C6^3"), normalising to
  // the primary decomposition.
  static AbelianType parse(std::string const& text) {
    std::vector<std::uint64_t> orders;
    std::size_t                i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    auto number = [&] {
      skip();
      std::size_t const start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (start == i) {
        throw std::invalid_argument("cannot parse abelian structure '" + text
                                    + "'");
      }
      return std::stoull(text.substr(start, i - start));
    };
    while (true) {
      skip();
      if (i >= text.size() || text[i] != 'C') {
        throw std::invalid_argument("cannot parse abelian structure '" + text
                                    + "'");
      }
      ++i;
      std::uint64_t const n   = number();
      std::uint64_t       rep = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        rep = number();
      }
      for (std::uint64_t r = 0; r < rep; ++r) {
        orders.push_back(n);
      }
      skip();
      if (i == text.size()) {
        break;
      }
      if (text[i] != 'x') {
        throw std::invalid_argument("cannot parse abelian structure '" + text
                                    + "'");
      }
      ++i;
    }
    return from_cyclic_orders(orders);
  }

  friend AbelianType operator*(AbelianType const& a, AbelianType const& b) {
    Parts parts = a.parts_;
    for (auto const& [p, lam] : b.parts_) {
      auto& v = parts[p];
      v.insert(v.end(), lam.begin(), lam.end());
    }
    return AbelianType(std::move(parts));
  }

  friend bool operator==(AbelianType const&, AbelianType const&) = default;

 private:
  Parts parts_;
};

// Recovers the partition of the p-primary part from the counts
// killed[i] = #{g : g^{p^i} = 1}, i = 0, 1, ..., until the counts stabilise.
// Throws if the counts are not those of an abelian p-group.
inline std::vector<unsigned> partition_from_counts(
    std::uint64_t                  p,
    std::span<std::uint64_t const> killed) {
  std::vector<unsigned> logs;
  for (auto n : killed) {
    unsigned      e = 0;
    std::uint64_t m = n;
    while (m > 1 && m % p == 0) {
      m /= p;
      ++e;
    }
    if (m != 1) {
      throw std::invalid_argument("element count " + std::to_string(n)
                                  + " is not a power of "
                                  + std::to_string(p));
    }
    logs.push_back(e);
  }
  if (logs.empty() || logs.front() != 0) {
    throw std::invalid_argument("counts must start with the identity alone");
  }
  // r_i = #{j : lambda_j >= i}, must be non-increasing.
  std::vector<unsigned> r;
  for (std::size_t i = 1; i < logs.size(); ++i) {
    if (logs[i] < logs[i - 1]) {
      throw std::invalid_argument("element counts are not nondecreasing");
    }
    r.push_back(logs[i] - logs[i - 1]);
  }
  while (!r.empty() && r.back() == 0) {
    r.pop_back();
  }
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] > r[i - 1]) {
      throw std::invalid_argument("element counts do not come from an "
                                  "abelian p-group");
    }
  }
  std::vector<unsigned> lambda;
  if (!r.empty()) {
    for (unsigned j = 0; j < r.front(); ++j) {
      unsigned len = 0;
      while (len < r.size() && r[len] > j) {
        ++len;
      }
      lambda.push_back(len);
    }
  }
  return lambda;
}

}  // namespace kgunits

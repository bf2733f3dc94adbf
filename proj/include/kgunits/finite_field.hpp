// Exact arithmetic in F_{p^k} with a deterministic defining polynomial.
#pragma once

#include "kgunits/field_spec.hpp"
#include "kgunits/polynomial.hpp"

namespace kgunits {

inline Field make_field(unsigned p, unsigned k) {
  if (!detail::is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p)
                                + " is not prime");
  }
  if (k == 0) {
    throw std::invalid_argument("field extension degree must be positive");
  }
  // Guard against overflow before computing p^k.
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw std::out_of_range("field order " + std::to_string(p) + "^"
                              + std::to_string(k)
                              + " outside the supported range (< 1024)");
    }
  }
  if (k == 1) {
    return Field(new FieldSpec(p, 1, {0, 1}));
  }
  auto const prime = make_field(p, 1);
  // Monic irreducibles come back in base-p order of (c_0, ..., c_{k-1}); the
  // first one is the minimal defining polynomial.
  auto const irreducibles = enumerate_monic_irreducibles(prime, k);
  auto const& coeffs      = irreducibles.front().coeffs();
  return Field(
      new FieldSpec(p, k, std::vector<unsigned>(coeffs.begin(), coeffs.end())));
}

// Convenience: field of order q, q a prime power below 1024.
inline Field make_field_of_order(std::uint64_t q) {
  if (q < 2) {
    throw std::invalid_argument("field order must be at least 2");
  }
  auto const primes = detail::prime_divisors(q);
  if (primes.size() != 1) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  unsigned      k = 0;
  std::uint64_t r = q;
  while (r > 1) {
    r /= primes.front();
    ++k;
  }
  return make_field(static_cast<unsigned>(primes.front()), k);
}

}  // namespace kgunits

// Distinguishing group algebras KG and KH by ring invariants, and building
// explicit isomorphisms between semisimple commutative ones.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "kgunits/decomposition.hpp"
#include "kgunits/group_algebra.hpp"
#include "kgunits/groups.hpp"
#include "kgunits/linear_algebra.hpp"
#include "kgunits/unit_group.hpp"

namespace kgunits {

struct InvariantBundle {
  bool          commutative = false;
  std::uint64_t unit_count  = 0;
  OrderSpectrum unit_order_spectrum;
  std::uint64_t idempotent_count  = 0;
  std::uint64_t nilpotent_count   = 0;
  std::uint64_t square_zero_count = 0;
  std::size_t   center_dimension  = 0;

  // (name, rendered value) in the order used to pick the first difference.
  std::vector<std::pair<std::string, std::string>> entries() const {
    return {
        {"commutativity", commutative ? "commutative" : "noncommutative"},
        {"unit_count", std::to_string(unit_count)},
        {"unit_order_spectrum", spectrum_to_string(unit_order_spectrum)},
        {"idempotent_count", std::to_string(idempotent_count)},
        {"nilpotent_count", std::to_string(nilpotent_count)},
        {"square_zero_count", std::to_string(square_zero_count)},
        {"center_dimension", std::to_string(center_dimension)},
    };
  }

  friend bool operator==(InvariantBundle const&, InvariantBundle const&)
      = default;
};

namespace detail {

  inline bool is_nilpotent(AlgebraElement x, std::size_t dim) {
    // The nilpotency index is at most dim.
    for (std::size_t reach = 1; reach < dim && !x.is_zero(); reach *= 2) {
      x = x * x;
    }
    return x.is_zero();
  }

  // dim Z(KG): kernel of alpha -> (alpha g - g alpha)_g.
  inline std::size_t center_dimension(Algebra const& a) {
    auto const&       g = a.group();
    auto const&       f = *a.field();
    std::size_t const n = g.order();
    Code const        minus_one = f.neg(1);
    Matrix            m(a.field(), n * n, n);
    for (std::size_t gi = 0; gi < n; ++gi) {
      for (std::size_t h = 0; h < n; ++h) {
        std::size_t const hg = g.mul(h, gi), gh = g.mul(gi, h);
        if (hg != gh) {
          m(gi * n + hg, h) = f.add(m(gi * n + hg, h), 1);
          m(gi * n + gh, h) = f.add(m(gi * n + gh, h), minus_one);
        }
      }
    }
    return n - rank(std::move(m));
  }

}  // namespace detail

inline InvariantBundle bundle(AlgebraPtr const& a) {
  InvariantBundle b;
  b.commutative = a->is_commutative();
  UnitGroup const u(a);
  b.unit_count          = u.size();
  b.unit_order_spectrum = u.spectrum();
  for (std::uint64_t i = 0; i < a->size(); ++i) {
    auto const x  = AlgebraElement::from_index(a, i);
    auto const x2 = x * x;
    b.idempotent_count += x2 == x ? 1 : 0;
    b.square_zero_count += x2.is_zero() ? 1 : 0;
    b.nilpotent_count += detail::is_nilpotent(x, a->dimension()) ? 1 : 0;
  }
  b.center_dimension = detail::center_dimension(*a);
  return b;
}

// A K-linear map KG -> KH (column g = image of g) verified to be a bijective
// ring homomorphism on all basis products.
struct IsomorphismWitness {
  Matrix        map;
  std::size_t   verified_products = 0;
  std::string   checksum;

  AlgebraElement apply(AlgebraElement const& x, AlgebraPtr const& target) const {
    return AlgebraElement(target, map.apply(x.coeffs()));
  }
};

// Checks phi(g) phi(h) = phi(gh) for all basis pairs, phi(1) = 1 and phi
// invertible; returns the number of products checked or nullopt.
inline std::optional<std::size_t> verify_isomorphism(AlgebraPtr const& a,
                                                     AlgebraPtr const& b,
                                                     Matrix const&     phi) {
  std::size_t const n = a->dimension();
  if (b->dimension() != n || !a->field()->same_as(*b->field())
      || phi.rows() != n || phi.cols() != n || rank(phi) != n) {
    return std::nullopt;
  }
  auto image = [&](std::size_t g) { return AlgebraElement(b, phi.column(g)); };
  if (!image(a->group().identity()).is_one()) {
    return std::nullopt;
  }
  std::vector<AlgebraElement> images;
  for (std::size_t g = 0; g < n; ++g) {
    images.push_back(image(g));
  }
  std::size_t checked = 0;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (!(images[g] * images[h] == images[a->group().mul(g, h)])) {
        return std::nullopt;
      }
      ++checked;
    }
  }
  return checked;
}

namespace detail {

  inline std::string matrix_checksum(Matrix const& m) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        h ^= m(i, j);
        h *= 1099511628211ull;
      }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  // Distinct elements of the ideal A e.
  inline std::vector<AlgebraElement> ideal_elements(AlgebraElement const& e) {
    auto const&                 a = e.algebra();
    std::vector<bool>           seen(a->size(), false);
    std::vector<AlgebraElement> out;
    for (std::uint64_t i = 0; i < a->size(); ++i) {
      auto y = AlgebraElement::from_index(a, i) * e;
      if (!seen[y.index()]) {
        seen[y.index()] = true;
        out.push_back(std::move(y));
      }
    }
    return out;
  }

  // x generates the multiplicative group of the field A e, |A e| = order.
  inline bool is_block_primitive(AlgebraElement const& x,
                                 AlgebraElement const& e,
                                 std::uint64_t         order) {
    if (x.is_zero() || !(x.pow(order - 1) == e)) {
      return false;
    }
    for (auto r : prime_divisors(order - 1)) {
      if (x.pow((order - 1) / r) == e) {
        return false;
      }
    }
    return true;
  }

  struct FieldBlockData {
    AlgebraElement              idempotent;
    std::size_t                 degree;
    std::vector<AlgebraElement> elements;
  };

  inline std::vector<FieldBlockData> field_blocks(AlgebraPtr const& a) {
    auto const& g = a->group();
    bool const  cyclic_gen
        = std::any_of(g.generators().begin(), g.generators().end(),
                      [&](Generator const& gg) { return gg.order == g.order(); });
    auto const es = cyclic_gen ? primitive_idempotents(a)
                               : primitive_idempotents_by_enumeration(a);
    std::vector<FieldBlockData> out;
    for (auto const& e : es) {
      out.push_back({e, ideal_dimension(e), ideal_elements(e)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](auto const& x, auto const& y) { return x.degree < y.degree; });
    return out;
  }

}  // namespace detail

// For KG, KH commutative semisimple with the same block degrees: pair the
// blocks by degree, send a primitive element of each block of KG to a root
// of its minimal polynomial in the paired block of KH, extend K-linearly on
// the power bases, and verify the resulting map on every basis product.
inline std::optional<IsomorphismWitness> explicit_isomorphism(
    AlgebraPtr const& a,
    AlgebraPtr const& b) {
  if (!a->field()->same_as(*b->field()) || a->dimension() != b->dimension()
      || !a->is_commutative() || !b->is_commutative() || !is_semisimple(*a)
      || !is_semisimple(*b)) {
    return std::nullopt;
  }
  auto const ba = detail::field_blocks(a);
  auto const bb = detail::field_blocks(b);
  if (ba.size() != bb.size()) {
    return std::nullopt;
  }
  std::size_t const n = a->dimension();
  Matrix            src(a->field(), n, n), dst(a->field(), n, n);
  std::size_t       col = 0;
  for (std::size_t i = 0; i < ba.size(); ++i) {
    auto const&       x = ba[i];
    auto const&       y = bb[i];
    std::size_t const d = x.degree;
    if (y.degree != d) {
      return std::nullopt;
    }
    std::uint64_t const order = x.elements.size();
    AlgebraElement const* beta = nullptr;
    for (auto const& c : x.elements) {
      if (detail::is_block_primitive(c, x.idempotent, order)) {
        beta = &c;
        break;
      }
    }
    if (beta == nullptr) {
      return std::nullopt;
    }
    std::vector<AlgebraElement> powers{x.idempotent};
    for (std::size_t t = 1; t <= d; ++t) {
      powers.push_back(powers.back() * *beta);
    }
    Matrix basis(a->field(), n, d);
    for (std::size_t t = 0; t < d; ++t) {
      for (std::size_t r = 0; r < n; ++r) {
        basis(r, t) = powers[t].coeffs()[r];
      }
    }
    auto const c = solve(basis, powers[d].coeffs());
    if (!c) {
      return std::nullopt;
    }
    // root of X^d - sum c_t X^t in the paired block
    std::optional<std::vector<AlgebraElement>> root_powers;
    for (auto const& gamma : y.elements) {
      std::vector<AlgebraElement> gp{y.idempotent};
      for (std::size_t t = 1; t <= d; ++t) {
        gp.push_back(gp.back() * gamma);
      }
      auto value = gp[d];
      for (std::size_t t = 0; t < d; ++t) {
        value = value - FieldElement(a->field(), (*c)[t]) * gp[t];
      }
      if (value.is_zero()) {
        gp.pop_back();
        root_powers = std::move(gp);
        break;
      }
    }
    if (!root_powers) {
      return std::nullopt;
    }
    for (std::size_t t = 0; t < d; ++t, ++col) {
      for (std::size_t r = 0; r < n; ++r) {
        src(r, col) = powers[t].coeffs()[r];
        dst(r, col) = (*root_powers)[t].coeffs()[r];
      }
    }
  }
  auto const src_inv = inverse(src);
  if (col != n || !src_inv) {
    return std::nullopt;
  }
  Matrix     phi     = dst * *src_inv;
  auto const checked = verify_isomorphism(a, b, phi);
  if (!checked) {
    return std::nullopt;
  }
  std::string sum = detail::matrix_checksum(phi);
  return IsomorphismWitness{std::move(phi), *checked, std::move(sum)};
}

enum class Verdict { isomorphic, not_isomorphic, inconclusive };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::isomorphic:
      return "isomorphic";
    case Verdict::not_isomorphic:
      return "not isomorphic";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct IsoVerdict {
  Verdict                           verdict = Verdict::inconclusive;
  std::string                       invariant;  // first differing bundle entry
  std::string                       value_a, value_b;
  std::optional<IsomorphismWitness> witness;
};

inline IsoVerdict decide(AlgebraPtr const&      a,
                         AlgebraPtr const&      b,
                         InvariantBundle const& ia,
                         InvariantBundle const& ib) {
  if (!a->field()->same_as(*b->field()) || a->dimension() != b->dimension()) {
    throw std::invalid_argument("decide: " + a->label() + " and " + b->label()
                                + " differ in field or group order");
  }
  IsoVerdict v;
  auto const ea = ia.entries(), eb = ib.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].second != eb[i].second) {
      v.verdict   = Verdict::not_isomorphic;
      v.invariant = ea[i].first;
      v.value_a   = ea[i].second;
      v.value_b   = eb[i].second;
      return v;
    }
  }
  if (a->is_commutative() && is_semisimple(*a)
      && decompose_abelian(*a) == decompose_abelian(*b)) {
    v.witness = explicit_isomorphism(a, b);
    if (v.witness) {
      v.verdict = Verdict::isomorphic;
    }
  }
  return v;
}

inline IsoVerdict decide(AlgebraPtr const& a, AlgebraPtr const& b) {
  return decide(a, b, bundle(a), bundle(b));
}

struct PairRecord {
  std::uint64_t size;
  Field         field;
  GroupPtr      g, h;
  IsoVerdict    verdict;
};

struct ScanReport {
  std::uint64_t           bound = 0;
  std::vector<PairRecord> pairs;  // by size, then field order, then labels
  std::optional<std::size_t> minimum;  // index of the first isomorphic pair
  std::size_t                inconclusive_below_minimum = 0;

  // Every pair strictly smaller than the minimum was separated.
  bool minimality_verified() const {
    return minimum && inconclusive_below_minimum == 0;
  }
};

namespace detail {

  inline std::vector<Field> fields_below(std::uint64_t bound) {
    std::vector<Field> out;
    for (unsigned q = 2; q < std::min<std::uint64_t>(bound, kMaxFieldOrder + 1);
         ++q) {
      auto const ps = prime_divisors(q);
      if (ps.size() != 1) {
        continue;
      }
      unsigned k = 0;
      for (unsigned m = q; m > 1; m /= static_cast<unsigned>(ps.front())) {
        ++k;
      }
      out.push_back(make_field(static_cast<unsigned>(ps.front()), k));
    }
    return out;
  }

  template <class F>
  void parallel_for(std::size_t n, unsigned jobs, F&& body) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || n < 2) {
      for (std::size_t i = 0; i < n; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr       error;
    std::mutex               error_mutex;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace detail

// Every pair of non-isomorphic groups G, H of the same order with
// |KG| = q^{|G|} < bound, decided; the minimum is the first isomorphic pair.
inline ScanReport scan_minimum_counterexample(std::uint64_t bound,
                                              unsigned      jobs = 1) {
  ScanReport report;
  report.bound = bound;
  for (auto const& f : detail::fields_below(bound)) {
    for (unsigned n = 2; n <= 9; ++n) {
      std::uint64_t const size = detail::ipow(f->order(), n);
      if (size >= bound || size / detail::ipow(f->order(), n - 1) != f->order()) {
        break;
      }
      auto const gs = groups_of_order(n);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
          report.pairs.push_back({size, f, gs[i], gs[j], {}});
        }
      }
    }
  }
  std::stable_sort(report.pairs.begin(), report.pairs.end(),
                   [](PairRecord const& x, PairRecord const& y) {
                     return std::make_tuple(x.size, x.field->order(),
                                            x.g->label(), x.h->label())
                            < std::make_tuple(y.size, y.field->order(),
                                              y.g->label(), y.h->label());
                   });
  detail::parallel_for(report.pairs.size(), jobs, [&](std::size_t i) {
    auto& r   = report.pairs[i];
    r.verdict = decide(Algebra::make(r.field, r.g), Algebra::make(r.field, r.h));
  });
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    if (report.pairs[i].verdict.verdict == Verdict::isomorphic) {
      report.minimum = i;
      break;
    }
  }
  if (report.minimum) {
    std::uint64_t const min_size = report.pairs[*report.minimum].size;
    for (auto const& r : report.pairs) {
      if (r.size < min_size && r.verdict.verdict != Verdict::not_isomorphic) {
        ++report.inconclusive_below_minimum;
      }
    }
  }
  return report;
}

}  // namespace kgunits

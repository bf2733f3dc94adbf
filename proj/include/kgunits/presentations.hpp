// Finitely presented groups: a text grammar for presentations, HLT-style
// Todd-Coxeter enumeration over the trivial subgroup, and certification of a
// unit group presentation via von Dyck's theorem.
#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgunits/unit_group.hpp"
#include "kgunits/word.hpp"

namespace kgunits {

struct FpGroup {
  std::vector<std::string> generator_names;
  std::vector<Word>        relators;

  std::size_t generator_count() const noexcept {
    return generator_names.size();
  }

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generator_names.size(); ++i) {
      out += (i ? ", " : "") + generator_names[i];
    }
    out += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      out += (i ? ", " : "") + word_to_string(relators[i], generator_names);
    }
    return out + ">";
  }
};

class PresentationParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

  // relations := relation (',' relation)*
  // relation  := word ('=' word)*        (t1 = ... = tn gives t_i t_n^-1)
  // word      := item (['*'] item)*
  // item      := atom ('^' ['-'] int)?
  // atom      := generator | '1' | '(' word ')' | '[' word (',' word)+ ']'
  class RelatorParser {
   public:
    RelatorParser(std::vector<std::string> const& names,
                  std::string_view                text,
                  CommutatorConvention            conv)
        : names_(names), text_(text), conv_(conv) {}

    std::vector<Word> relations() {
      std::vector<Word> out;
      skip_ws();
      if (pos_ == text_.size()) {
        return out;
      }
      while (true) {
        relation(out);
        if (peek(',')) {
          ++pos_;
          continue;
        }
        skip_ws();
        if (pos_ != text_.size()) {
          fail("expected ',' or end of relators");
        }
        return out;
      }
    }

   private:
    [[noreturn]] void fail(std::string const& what) const {
      throw PresentationParseError("presentation parse error: " + what
                                   + " at position " + std::to_string(pos_)
                                   + " in '" + std::string(text_) + "'");
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

    void relation(std::vector<Word>& out) {
      std::vector<Word> terms{word()};
      while (peek('=')) {
        ++pos_;
        terms.push_back(word());
      }
      if (terms.size() == 1) {
        out.push_back(terms.front());
        return;
      }
      Word const last_inv = word_inverse(terms.back());
      for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        out.push_back(word_concat(terms[i], last_inv));
      }
    }

    bool starts_item() {
      skip_ws();
      if (pos_ >= text_.size()) {
        return false;
      }
      char const c = text_[pos_];
      return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c));
    }

    Word word() {
      Word acc = item();
      while (true) {
        if (peek('*')) {
          ++pos_;
          acc = word_concat(acc, item());
        } else if (starts_item()) {
          acc = word_concat(acc, item());
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
        fail("expected integer exponent");
      }
      long long const v
          = std::stoll(std::string(text_.substr(start, pos_ - start)));
      return neg ? -v : v;
    }

    Word item() {
      Word base = atom();
      if (peek('^')) {
        ++pos_;
        return word_power(base, integer());
      }
      return base;
    }

    Word atom() {
      skip_ws();
      if (pos_ >= text_.size()) {
        fail("unexpected end of input");
      }
      char const c = text_[pos_];
      if (c == '(') {
        ++pos_;
        Word w = word();
        if (!peek(')')) {
          fail("expected ')'");
        }
        ++pos_;
        return w;
      }
      if (c == '[') {
        ++pos_;
        std::vector<Word> terms{word()};
        while (peek(',')) {
          ++pos_;
          terms.push_back(word());
        }
        if (!peek(']')) {
          fail("expected ']'");
        }
        ++pos_;
        if (terms.size() < 2) {
          fail("commutator needs at least two entries");
        }
        return commutator(terms, conv_);
      }
      if (c == '1'
          && (pos_ + 1 == text_.size()
              || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        return {};
      }
      std::size_t best = 0, gen = 0;
      for (std::size_t i = 0; i < names_.size(); ++i) {
        auto const& n = names_[i];
        if (n.size() > best && text_.substr(pos_, n.size()) == n) {
          best = n.size();
          gen  = i;
        }
      }
      if (best == 0) {
        fail("unknown generator");
      }
      pos_ += best;
      return {static_cast<Letter>(gen + 1)};
    }

    std::vector<std::string> const& names_;
    std::string_view                text_;
    CommutatorConvention            conv_;
    std::size_t                     pos_ = 0;
  };

  inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
      ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
      --e;
    }
    return std::string(s.substr(b, e - b));
  }

}  // namespace detail

// Relators over the given generators, e.g. "x^4, y^2, [a,x]^2, [x,y]=x^2".
inline std::vector<Word> parse_relators(
    std::vector<std::string> const& names,
    std::string_view                text,
    CommutatorConvention conv = CommutatorConvention::inverse_first) {
  return detail::RelatorParser(names, text, conv).relations();
}

// "gens | relators", optionally wrapped in angle brackets, e.g.
// "w,y | w^6, y^2, y*w*y*w^-5".
inline FpGroup parse_presentation(
    std::string_view     text,
    CommutatorConvention conv = CommutatorConvention::inverse_first) {
  std::string s = detail::trim(text);
  if (!s.empty() && s.front() == '<' && s.back() == '>') {
    s = detail::trim(std::string_view(s).substr(1, s.size() - 2));
  }
  auto const bar = s.find('|');
  if (bar == std::string::npos) {
    throw PresentationParseError("presentation parse error: missing '|' in '"
                                 + std::string(text) + "'");
  }
  FpGroup     g;
  std::string gens = s.substr(0, bar);
  std::size_t start = 0;
  while (start <= gens.size()) {
    auto const  comma = gens.find(',', start);
    std::string name  = detail::trim(
        std::string_view(gens).substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start));
    if (name.empty()
        || !std::isalpha(static_cast<unsigned char>(name.front()))) {
      throw PresentationParseError("presentation parse error: bad generator "
                                   "name '"
                                   + name + "'");
    }
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw PresentationParseError("presentation parse error: bad "
                                     "generator name '"
                                     + name + "'");
      }
    }
    for (auto const& existing : g.generator_names) {
      if (existing == name) {
        throw PresentationParseError("presentation parse error: duplicate "
                                     "generator '"
                                     + name + "'");
      }
    }
    g.generator_names.push_back(name);
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  for (auto& w : parse_relators(g.generator_names,
                                std::string_view(s).substr(bar + 1), conv)) {
    if (!w.empty()) {
      g.relators.push_back(std::move(w));
    }
  }
  return g;
}

class CosetLimitExceeded : public std::runtime_error {
 public:
  explicit CosetLimitExceeded(std::size_t cap)
      : std::runtime_error("coset enumeration exceeded " + std::to_string(cap)
                           + " cosets: possibly infinite or cap too low"),
        cap_(cap) {}
  std::size_t cap() const noexcept {
    return cap_;
  }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultCosetCap = 20000;

// Coset table for the action of an FpGroup on the cosets of the trivial
// subgroup.  Columns are 2*g (generator g) and 2*g+1 (its inverse).
class CosetTable {
 public:
  static constexpr std::int64_t kUndefined = -1;

  CosetTable(FpGroup const& g, std::size_t cap)
      : ncols_(2 * g.generator_count()), cap_(cap) {
    for (auto const& w : g.relators) {
      std::vector<std::size_t> cols;
      for (Letter l : w) {
        std::size_t const gen = static_cast<std::size_t>(std::abs(l)) - 1;
        if (gen >= g.generator_count()) {
          throw std::invalid_argument("relator refers to an undeclared "
                                      "generator");
        }
        cols.push_back(2 * gen + (l < 0 ? 1 : 0));
      }
      relators_.push_back(std::move(cols));
    }
    new_coset();
  }

  // HLT: scan every relator at each live coset in turn, filling gaps with
  // new cosets, then define any remaining undefined entries.
  void run() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (auto const& r : relators_) {
        if (!alive(c)) {
          break;
        }
        scan_and_fill(c, r);
      }
      for (std::size_t x = 0; x < ncols_ && alive(c); ++x) {
        if (entry(c, x) == kUndefined) {
          define(c, x);
        }
      }
    }
  }

  std::size_t live_cosets() const noexcept {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      n += alive(c) ? 1 : 0;
    }
    return n;
  }

  std::size_t total_defined() const noexcept {
    return parent_.size();
  }

  // Every live row total, every relator closes at every live coset, and the
  // generator and inverse columns are mutually inverse.
  bool is_complete_and_consistent() const {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) {
        continue;
      }
      for (std::size_t x = 0; x < ncols_; ++x) {
        auto const d = entry(c, x);
        if (d == kUndefined || !alive(static_cast<std::size_t>(d))
            || entry(static_cast<std::size_t>(d), x ^ 1)
                   != static_cast<std::int64_t>(c)) {
          return false;
        }
      }
      for (auto const& r : relators_) {
        std::size_t f = c;
        for (auto x : r) {
          f = static_cast<std::size_t>(entry(f, x));
        }
        if (f != c) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  bool alive(std::size_t c) const noexcept {
    return parent_[c] == static_cast<std::int64_t>(c);
  }
  std::int64_t& entry(std::size_t c, std::size_t x) {
    return table_[c * ncols_ + x];
  }
  std::int64_t entry(std::size_t c, std::size_t x) const {
    return table_[c * ncols_ + x];
  }

  std::size_t new_coset() {
    if (parent_.size() >= cap_) {
      throw CosetLimitExceeded(cap_);
    }
    std::size_t const c = parent_.size();
    parent_.push_back(static_cast<std::int64_t>(c));
    table_.resize(table_.size() + ncols_, kUndefined);
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    std::size_t const d = new_coset();
    entry(c, x)         = static_cast<std::int64_t>(d);
    entry(d, x ^ 1)     = static_cast<std::int64_t>(c);
  }

  void scan_and_fill(std::size_t c, std::vector<std::size_t> const& w) {
    if (w.empty()) {
      return;
    }
    std::size_t f = c, b = c;
    long        i = 0, j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[i]) != kUndefined) {
        f = static_cast<std::size_t>(entry(f, w[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) {
          coincidence(f, b);
        }
        return;
      }
      while (j >= i && entry(b, w[j] ^ 1) != kUndefined) {
        b = static_cast<std::size_t>(entry(b, w[j] ^ 1));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        // deduction
        entry(f, w[i])     = static_cast<std::int64_t>(b);
        entry(b, w[i] ^ 1) = static_cast<std::int64_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != static_cast<std::int64_t>(r)) {
      r = static_cast<std::size_t>(parent_[r]);
    }
    // path compression
    while (parent_[k] != static_cast<std::int64_t>(r)
           && k != r) {
      std::size_t const next = static_cast<std::size_t>(parent_[k]);
      parent_[k]             = static_cast<std::int64_t>(r);
      k                      = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    std::size_t const k1 = rep(k), l1 = rep(l);
    if (k1 == l1) {
      return;
    }
    std::size_t const lo = std::min(k1, l1), hi = std::max(k1, l1);
    parent_[hi]          = static_cast<std::int64_t>(lo);
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t const e = queue[qi];
      for (std::size_t x = 0; x < ncols_; ++x) {
        auto const fe = entry(e, x);
        if (fe == kUndefined) {
          continue;
        }
        std::size_t const f = static_cast<std::size_t>(fe);
        // Drop the back edge into the dead coset.
        if (entry(f, x ^ 1) == static_cast<std::int64_t>(e)) {
          entry(f, x ^ 1) = kUndefined;
        }
        std::size_t const e1 = rep(e), f1 = rep(f);
        if (entry(e1, x) != kUndefined) {
          merge(f1, static_cast<std::size_t>(entry(e1, x)), queue);
        } else if (entry(f1, x ^ 1) != kUndefined) {
          merge(e1, static_cast<std::size_t>(entry(f1, x ^ 1)), queue);
        } else {
          entry(e1, x)     = static_cast<std::int64_t>(f1);
          entry(f1, x ^ 1) = static_cast<std::int64_t>(e1);
        }
      }
    }
  }

  std::size_t                           ncols_;
  std::size_t                           cap_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int64_t>             table_;
  std::vector<std::int64_t>             parent_;
};

struct CosetEnumerationResult {
  std::uint64_t order;
  std::size_t   cosets_defined;
};

// Order of the presented group, by enumerating the cosets of the trivial
// subgroup.  Throws CosetLimitExceeded if more than `cap` cosets are needed.
inline CosetEnumerationResult coset_enumeration_detailed(
    FpGroup const& g,
    std::size_t    cap = kDefaultCosetCap) {
  CosetTable t(g, cap);
  t.run();
  if (!t.is_complete_and_consistent()) {
    throw std::logic_error("coset enumeration finished with an inconsistent "
                           "table");
  }
  return {t.live_cosets(), t.total_defined()};
}

inline std::uint64_t coset_enumeration(FpGroup const& g,
                                       std::size_t    cap = kDefaultCosetCap) {
  return coset_enumeration_detailed(g, cap).order;
}

// Value of a word in a multiplication table, with generator i+1
// mapped to element gens[i].
inline std::size_t evaluate_in_group(Group const&                 g,
                                     std::span<std::size_t const> gens,
                                     Word const&                  w) {
  std::size_t acc = g.identity();
  for (Letter l : w) {
    std::size_t const i = static_cast<std::size_t>(std::abs(l)) - 1;
    if (i >= gens.size()) {
      throw std::invalid_argument("evaluate_in_group: letter out of range");
    }
    acc = g.mul(acc, l > 0 ? gens[i] : g.inverse(gens[i]));
  }
  return acc;
}

// True when every relator of p is 1 on the named generators of g (matched by
// name), they generate g, and p presents a group of order |g|: then p
// presents g.
inline bool presents_group(FpGroup const& p,
                           Group const&   g,
                           std::size_t    cap = kDefaultCosetCap) {
  std::vector<std::size_t> gens;
  for (auto const& name : p.generator_names) {
    auto e = g.generator_element(name);
    if (!e) {
      return false;
    }
    gens.push_back(*e);
  }
  for (auto const& w : p.relators) {
    if (evaluate_in_group(g, gens, w) != g.identity()) {
      return false;
    }
  }
  std::vector<bool>        seen(g.order(), false);
  std::vector<std::size_t> reached{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t k = 0; k < reached.size(); ++k) {
    for (auto x : gens) {
      std::size_t const h = g.mul(reached[k], x);
      if (!seen[h]) {
        seen[h] = true;
        reached.push_back(h);
      }
    }
  }
  if (reached.size() != g.order()) {
    return false;
  }
  try {
    return coset_enumeration(p, cap) == g.order();
  } catch (CosetLimitExceeded const&) {
    return false;
  }
}

// Which of the three von Dyck conditions failed, if any.
enum class CertificateStep {
  none,
  relators,            // (1) some relator is not 1 on the generators
  closure,             // (2) the generators do not generate U
  presented_order,     // (3) the presented group has a different order
};

struct PresentationCertificate {
  std::vector<std::size_t>     failing_relators;
  std::uint64_t                closure_size   = 0;
  std::uint64_t                unit_group_order = 0;
  std::optional<std::uint64_t> presented_order;
  std::string                  enumeration_error;
  CertificateStep              failed_step = CertificateStep::none;

  bool certified() const noexcept {
    return failed_step == CertificateStep::none;
  }
};

inline char const* to_string(CertificateStep s) {
  switch (s) {
    case CertificateStep::none:
      return "certified";
    case CertificateStep::relators:
      return "relator fails on generators";
    case CertificateStep::closure:
      return "generators do not generate the unit group";
    case CertificateStep::presented_order:
      return "presented order differs from unit group order";
  }
  return "?";
}

// Certificate iff (1) every relator of P is 1 on gens, (2) the gens generate
// U, and (3) P has order |U|.  (1) gives an epimorphism from P onto <gens>;
// (2) and (3) make it a bijection.
inline PresentationCertificate certify_unit_group_presentation(
    UnitGroup const&                u,
    FpGroup const&                  p,
    std::span<AlgebraElement const> gens,
    std::size_t                     cap = kDefaultCosetCap) {
  if (gens.size() != p.generator_count()) {
    throw std::invalid_argument("certify: generator count does not match "
                                "presentation");
  }
  PresentationCertificate cert;
  cert.unit_group_order = u.size();
  auto const inv        = unit_inverses(gens);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (!evaluate_word(p.relators[i], gens, inv).is_one()) {
      cert.failing_relators.push_back(i);
    }
  }
  cert.closure_size = closure(u, gens);
  try {
    cert.presented_order = coset_enumeration(p, cap);
  } catch (CosetLimitExceeded const& e) {
    cert.enumeration_error = e.what();
  }
  if (!cert.failing_relators.empty()) {
    cert.failed_step = CertificateStep::relators;
  } else if (cert.closure_size != u.size()) {
    cert.failed_step = CertificateStep::closure;
  } else if (!cert.presented_order || *cert.presented_order != u.size()) {
    cert.failed_step = CertificateStep::presented_order;
  }
  return cert;
}

// A presentation claim about U(KG): relators as text over named generators,
// each generator given as an algebra expression.
struct PresentationClaim {
  std::string              label;
  std::vector<std::string> generator_names;
  std::vector<std::string> generator_values;
  std::string              relators;
};

struct ClaimCertificate {
  PresentationCertificate certificate;
  CommutatorConvention    convention;
  FpGroup                 presentation;
};

// Tries the [a,b] = a^-1 b^-1 a b convention first and falls back to
// [a,b] = a b a^-1 b^-1; reports the convention that certified, or the
// primary attempt's refutation.
inline ClaimCertificate certify_claim(UnitGroup const&         u,
                                      PresentationClaim const& claim,
                                      std::size_t cap = kDefaultCosetCap) {
  std::vector<AlgebraElement> gens;
  for (auto const& v : claim.generator_values) {
    gens.push_back(parse_element(u.algebra(), v));
  }
  std::optional<ClaimCertificate> first;
  for (auto conv : {CommutatorConvention::inverse_first,
                    CommutatorConvention::inverse_last}) {
    FpGroup p;
    p.generator_names = claim.generator_names;
    for (auto& w : parse_relators(p.generator_names, claim.relators, conv)) {
      if (!w.empty()) {
        p.relators.push_back(std::move(w));
      }
    }
    ClaimCertificate c{certify_unit_group_presentation(u, p, gens, cap), conv,
                       p};
    if (c.certificate.certified()) {
      return c;
    }
    if (!first) {
      first = std::move(c);
    }
  }
  return *first;
}

}  // namespace kgunits

// Words in the free group on numbered generators.
#pragma once

#include <cstdlib>
#include <span>
#include <string>
#include <vector>

namespace kgunits {

// Letter +i is generator i-1, letter -i its inverse.
using Letter = int;
using Word   = std::vector<Letter>;

inline Word free_reduce(Word const& w) {
  Word out;
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Word word_inverse(Word const& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) {
    l = -l;
  }
  return out;
}

inline Word word_concat(Word const& a, Word const& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

inline Word word_power(Word const& w, long long n) {
  Word const base = n < 0 ? word_inverse(w) : w;
  Word       out;
  for (long long i = 0; i < std::llabs(n); ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return free_reduce(out);
}

enum class CommutatorConvention {
  // [a, b] = a^-1 b^-1 a b
  inverse_first,
  // [a, b] = a b a^-1 b^-1
  inverse_last,
};

inline char const* to_string(CommutatorConvention c) {
  return c == CommutatorConvention::inverse_first ? "[a,b]=a^-1*b^-1*a*b"
                                                  : "[a,b]=a*b*a^-1*b^-1";
}

inline Word commutator(Word const&          a,
                       Word const&          b,
                       CommutatorConvention conv) {
  Word w;
  auto append = [&w](Word const& x) { w.insert(w.end(), x.begin(), x.end()); };
  if (conv == CommutatorConvention::inverse_first) {
    append(word_inverse(a));
    append(word_inverse(b));
    append(a);
    append(b);
  } else {
    append(a);
    append(b);
    append(word_inverse(a));
    append(word_inverse(b));
  }
  return free_reduce(w);
}

// Left-normed: [a, b, c] = [[a, b], c].
inline Word commutator(std::span<Word const> terms, CommutatorConvention conv) {
  if (terms.empty()) {
    return {};
  }
  Word acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    acc = commutator(acc, terms[i], conv);
  }
  return acc;
}

inline std::string word_to_string(Word const&                     w,
                                  std::span<std::string const>    names) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += "*";
    }
    long long const e = static_cast<long long>(j - i) * (w[i] < 0 ? -1 : 1);
    out += names[static_cast<std::size_t>(std::abs(w[i])) - 1];
    if (e != 1) {
      out += "^" + std::to_string(e);
    }
    i = j;
  }
  return out;
}

}  // namespace kgunits

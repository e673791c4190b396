#pragma once

#include <cstddef>
#include <vector>

namespace freewidth {

// Flat letter sequences over an instance alphabet. Letters are small integer
// codes; the owning instance defines the coding.
using Letters = std::vector<int>;

// Number of mirror pairs (i, n-1-i) whose letters differ. Each mismatched
// pair is fixable by one substitution, so a word is an m-almost palindromic
// word iff this count is <= m.
inline int hamming_to_palindrome(const Letters& w) {
  int mismatches = 0;
  std::size_t n = w.size();
  for (std::size_t i = 0; 2 * i + 1 < n; ++i) {
    if (w[i] != w[n - 1 - i]) ++mismatches;
  }
  return mismatches;
}

inline bool is_letter_palindrome(const Letters& w) { return hamming_to_palindrome(w) == 0; }

}  // namespace freewidth

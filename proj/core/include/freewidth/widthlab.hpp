#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "freewidth/amalgam.hpp"
#include "freewidth/errors.hpp"
#include "freewidth/hnn.hpp"
#include "freewidth/words.hpp"

namespace freewidth {

inline constexpr long long kDefaultElementCap = 5'000'000;

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// BFS index of all elements reachable by letter words up to a radius, one
// entry per distinct element; lengths are shortest within the radius.
template <class Inst>
struct Ball {
  int radius = 0;
  std::vector<typename Inst::Word> elements;  // representative words, BFS order
  std::vector<int> lengths;                   // shortest letter length per element
  std::vector<long long> layer_counts;        // new elements per BFS layer
  std::unordered_map<std::vector<int>, int, VecHash> index;  // nf key -> position
};

template <class Inst>
Ball<Inst> enumerate_ball(const Inst& inst, int radius, long long cap = kDefaultElementCap) {
  Ball<Inst> ball;
  ball.radius = radius;

  auto push = [&](const typename Inst::Word& w, int len) -> bool {
    auto key = inst.nf_key(w);
    auto [it, inserted] = ball.index.emplace(std::move(key), static_cast<int>(ball.elements.size()));
    if (!inserted) return false;
    if (static_cast<long long>(ball.elements.size()) >= cap)
      throw Error("BallCapExceeded", "ball exceeds the element cap " + std::to_string(cap));
    ball.elements.push_back(w);
    ball.lengths.push_back(len);
    return true;
  };

  push(Inst::identity_word(), 0);
  ball.layer_counts.push_back(1);
  std::vector<typename Inst::Word> frontier{Inst::identity_word()};

  for (int depth = 1; depth <= radius && !frontier.empty(); ++depth) {
    std::vector<typename Inst::Word> next;
    for (const auto& w : frontier) {
      for (int code = 0; code < inst.alphabet_size(); ++code) {
        if (inst.letter_is_identity(code)) continue;  // self-loop in the Cayley graph
        typename Inst::Word cand = inst.concat(w, inst.word_from_letters({code}));
        if (push(cand, depth)) next.push_back(std::move(cand));
      }
    }
    ball.layer_counts.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }
  return ball;
}

// All elements representable by a letter word of length <= max_len with at
// most m substituted positions relative to a palindrome; generated as
// palindromes plus substitutions and deduplicated by normal form. The empty
// word contributes the identity.
template <class Inst>
std::vector<typename Inst::Word> enumerate_m_almost_palindromes(const Inst& inst, int max_len,
                                                                int m,
                                                                long long cap = kDefaultElementCap) {
  std::vector<typename Inst::Word> out;
  std::unordered_map<std::vector<int>, char, VecHash> seen;

  auto add = [&](const Letters& letters) {
    typename Inst::Word w = inst.word_from_letters(letters);
    auto key = inst.nf_key(w);
    if (seen.emplace(std::move(key), 1).second) {
      if (static_cast<long long>(out.size()) >= cap)
        throw Error("BallCapExceeded", "palindrome set exceeds the element cap");
      out.push_back(std::move(w));
    }
  };

  add({});

  const int alpha = inst.alphabet_size();
  std::vector<int> mutate_positions;
  // Applies up to `remaining` substitutions starting at position `from`.
  auto mutate = [&](auto&& self, Letters& word, int from, int remaining) -> void {
    add(word);
    if (remaining == 0) return;
    for (int pos = from; pos < static_cast<int>(word.size()); ++pos) {
      int original = word[static_cast<std::size_t>(pos)];
      for (int code = 0; code < alpha; ++code) {
        if (code == original) continue;
        word[static_cast<std::size_t>(pos)] = code;
        self(self, word, pos + 1, remaining - 1);
      }
      word[static_cast<std::size_t>(pos)] = original;
    }
  };

  for (int len = 1; len <= max_len; ++len) {
    const int half = (len + 1) / 2;
    Letters letters(static_cast<std::size_t>(len), 0);
    auto fill = [&](auto&& self, int pos) -> void {
      if (pos == half) {
        mutate(mutate, letters, 0, m);
        return;
      }
      for (int code = 0; code < alpha; ++code) {
        // Identity letters never extend the palindromic element set when no
        // substitutions are allowed.
        if (m == 0 && inst.letter_is_identity(code)) continue;
        letters[static_cast<std::size_t>(pos)] = code;
        letters[static_cast<std::size_t>(len - 1 - pos)] = code;
        self(self, pos + 1);
      }
    };
    fill(fill, 0);
  }
  return out;
}

// Least k <= max_k expressing each target as a product of k elements of the
// m-almost palindrome set at max_len; nullopt when the capped search finds
// none. An upper-bounded search: a returned k certifies a factorization, a
// nullopt claims nothing.
template <class Inst>
std::vector<std::optional<int>> plength_table(const Inst& inst,
                                              const std::vector<typename Inst::Word>& targets,
                                              int m, int max_len, int max_k,
                                              long long cap = kDefaultElementCap) {
  auto pal = enumerate_m_almost_palindromes(inst, max_len, m, cap);

  std::unordered_map<std::vector<int>, std::vector<int>, VecHash> wanted;
  for (std::size_t i = 0; i < targets.size(); ++i)
    wanted[inst.nf_key(targets[i])].push_back(static_cast<int>(i));

  std::vector<std::optional<int>> result(targets.size());
  std::size_t remaining = targets.size();
  auto record = [&](const std::vector<int>& key, int k) {
    auto it = wanted.find(key);
    if (it == wanted.end()) return;
    for (int idx : it->second) {
      if (!result[static_cast<std::size_t>(idx)]) {
        result[static_cast<std::size_t>(idx)] = k;
        --remaining;
      }
    }
    wanted.erase(it);
  };

  std::unordered_map<std::vector<int>, char, VecHash> reached;
  std::vector<typename Inst::Word> frontier;
  {
    auto w = Inst::identity_word();
    auto key = inst.nf_key(w);
    record(key, 0);
    reached.emplace(std::move(key), 1);
    frontier.push_back(std::move(w));
  }

  for (int k = 1; k <= max_k && remaining > 0 && !frontier.empty(); ++k) {
    std::vector<typename Inst::Word> next;
    for (const auto& x : frontier) {
      for (const auto& p : pal) {
        typename Inst::Word y = inst.concat(x, p);
        auto key = inst.nf_key(y);
        if (!reached.emplace(key, 1).second) continue;
        if (static_cast<long long>(reached.size()) > cap)
          throw Error("BallCapExceeded", "product search exceeds the element cap");
        record(key, k);
        next.push_back(std::move(y));
        if (remaining == 0) break;
      }
      if (remaining == 0) break;
    }
    frontier = std::move(next);
  }
  return result;
}

template <class Inst>
std::optional<int> plength_oracle(const Inst& inst, const typename Inst::Word& g, int m,
                                  int max_len, int max_k, long long cap = kDefaultElementCap) {
  return plength_table(inst, std::vector<typename Inst::Word>{g}, m, max_len, max_k, cap)[0];
}

enum class Suite {
  kDefect,
  kNfold,
  kPalindrome,
  kAlmost,
  kProduct,
  kSignatureUniqueness,
  kSyllableLength,
  kInverseSymmetry,
  kOracleConsistency,
};

const char* to_string(Suite s);
Suite parse_suite(const std::string& name);  // throws SuiteUnknown

struct SuiteParams {
  int samples = 1000;
  std::uint64_t seed = 0;
  int m = 1;           // almost / product / oracle-consistency
  int k = 3;           // factor count for nfold and product
  int max_word = 30;   // size bound for random words
  int shuffles = 50;   // rewrites per word in the uniqueness suites
  int radius = 6;      // oracle-consistency ball radius
  int max_len = 6;     // palindrome length cap for the oracle
  int max_k = 4;
  long long cap = kDefaultElementCap;
};

struct SuiteReport {
  std::string suite;
  std::string instance;
  SuiteParams params;
  long long bound = 0;
  long long max_observed = 0;
  std::vector<std::string> violations;
  double seconds = 0;

  bool passed() const { return violations.empty(); }
};

SuiteReport verify_suite(const HnnInstance& inst, Suite suite, const SuiteParams& params);
SuiteReport verify_suite(const AmalInstance& inst, Suite suite, const SuiteParams& params);

struct GrowthRow {
  int K;
  long long f;
  long long bound;
};

struct GrowthReport {
  std::string instance;
  int m = 0;
  std::vector<GrowthRow> rows;
  bool monotone = true;   // bounds nondecreasing in K
  long long max_bound = 0;
  bool via_quotient = false;
};

GrowthReport growth_report(const HnnInstance& inst, int m, int k_max);
// Case 2 normal instances with a nontrivial subgroup report the growth of
// the pushed free-product instance; bounds transfer upstairs.
GrowthReport growth_report(const AmalInstance& inst, int m, int k_max);

}  // namespace freewidth

#pragma once

#include <string>
#include <vector>

#include "freewidth/group.hpp"
#include "freewidth/rng.hpp"
#include "freewidth/runstats.hpp"
#include "freewidth/words.hpp"

namespace freewidth {

// Per-construction constants of the quasimorphism machinery.
//   defect:       |f(uv) - f(u) - f(v)| <= defect
//   palindrome_f: f of a group-palindrome
//   almost_slope: f of an m-almost palindrome <= almost_slope*m + palindrome_f
struct QuasiBounds {
  int defect;
  int palindrome_f;
  int almost_slope;

  long long almost_bound(int m) const { return static_cast<long long>(almost_slope) * m + palindrome_f; }
  long long product_bound(int k, int m) const { return (almost_bound(m) + defect) * k - defect; }
  // Least k with product_bound(k, m) >= f; a certified lower bound for the
  // m-almost palindromic length of a nontrivial element with this f.
  long long length_bound(long long f, int m) const {
    long long per = almost_bound(m) + defect;
    return (f + defect + per - 1) / per;
  }
};

struct HnnSyllable {
  std::int8_t beta;  // +1 or -1
  Elem g;            // base element following t^beta

  bool operator==(const HnnSyllable&) const = default;
};

// g0 t^{b1} g1 ... t^{br} gr. Empty tail = a bare base element; the identity
// element is head 0 with an empty tail.
struct HnnWord {
  Elem head = 0;
  std::vector<HnnSyllable> tail;

  int syllables() const { return static_cast<int>(tail.size()); }
  bool operator==(const HnnWord&) const = default;
};

// G* = <G, t | t^-1 h t = phi(h), h in H1>. Letter codes: 0..order-1 are the
// base elements, order is t, order+1 is t^-1.
class HnnInstance {
 public:
  using Word = HnnWord;

  HnnInstance(FiniteGroup base, Subgroup h1, Subgroup h2, SubgroupIso phi,
              std::string name = {});

  const FiniteGroup& base() const { return base_; }
  const Subgroup& h1() const { return h1_; }
  const Subgroup& h2() const { return h2_; }
  const std::string& name() const { return name_; }
  QuasiBounds bounds() const { return {6, 1, 24}; }

  // Letter layer.
  int alphabet_size() const { return base_.order() + 2; }
  int t_letter() const { return base_.order(); }
  int t_inverse_letter() const { return base_.order() + 1; }
  bool letter_is_identity(int code) const { return code == 0; }
  Word word_from_letters(const Letters& letters) const;
  Letters random_letters(int len, Rng& rng) const;

  // Word machinery.
  bool is_reduced(const Word& w) const;
  Word reduce(const Word& w) const;  // Britton reduction
  Word normal_form(const Word& w) const;
  bool equals(const Word& a, const Word& b) const;
  bool is_identity(const Word& w) const;
  std::vector<int> nf_key(const Word& w) const;
  static Word identity_word() { return {}; }
  Word concat(const Word& a, const Word& b) const;
  Word inverse(const Word& w) const;
  static Word reverse(const Word& w);
  bool is_group_palindrome(const Word& w) const;

  Signature signature(const Word& w) const;
  RunStats stats(const Word& w) const { return run_stats(signature(w)); }
  long long f(const Word& w) const { return stats(w).f; }
  long long plength_lower_bound(const Word& w, int m) const;

  // Randomized generators (deterministic per Rng state).
  Word random_reduced_word(int len, Rng& rng) const;
  Word random_shuffle(const Word& w, Rng& rng) const;  // one H-rewrite across a t
  Word random_expand(const Word& w, Rng& rng) const;   // insert a pinch, element preserved
  Word random_mirror_word(int len, Rng& rng) const;    // reduced, syllable-symmetric

  // Signature = runs of +1 of lengths 1..K separated by single -1 entries,
  // every intervening base letter a fixed element outside H1 and H2.
  Word witness_word(int K) const;
  long long witness_f(int K) const { return (K - 1) + (K % 2); }

 private:
  Elem separator() const;  // least g outside H1 union H2

  FiniteGroup base_;
  Subgroup h1_, h2_;
  SubgroupIso phi_;
  Transversal t1_, t2_;  // right transversals of H1 and H2
  std::string name_;
};

}  // namespace freewidth

#pragma once

#include <string>
#include <vector>

#include "freewidth/group.hpp"
#include "freewidth/hnn.hpp"  // QuasiBounds
#include "freewidth/rng.hpp"
#include "freewidth/runstats.hpp"
#include "freewidth/words.hpp"

namespace freewidth {

struct AmalSyllable {
  std::int8_t factor;  // 1 or 2
  Elem g;

  bool operator==(const AmalSyllable&) const = default;
};

// Syllable sequence in G1 *_H G2; the same type serves as the letter word
// (each factor element is a single letter).
using AmalWord = std::vector<AmalSyllable>;

// Canonical representative h x1 x2 ... xn with alternating right-coset
// representatives and the H part expressed inside factor 1.
struct AmalNormalForm {
  Elem h = 0;
  AmalWord cosets;

  bool operator==(const AmalNormalForm&) const = default;
  bool is_identity() const { return h == 0 && cosets.empty(); }
};

// Tokens of a special form: plain syllables plus explicit a^theta marks.
struct SpecialToken {
  bool mark = false;
  std::int8_t factor = 0;  // plain tokens only
  Elem g = 0;              // plain tokens only
  std::int8_t theta = 0;   // mark tokens only
};
using SpecialForm = std::vector<SpecialToken>;

class AmalInstance {
 public:
  using Word = AmalWord;

  // h1/h2 are the two embedded copies of H; ident identifies h1 with h2.
  AmalInstance(FiniteGroup g1, FiniteGroup g2, Subgroup h1, Subgroup h2,
               SubgroupIso ident, std::string name = {});

  const FiniteGroup& factor(int i) const { return i == 1 ? g1_ : g2_; }
  const Subgroup& embedded_h(int i) const { return i == 1 ? h1_ : h2_; }
  const CaseClassification& classification() const { return cls_; }
  const std::string& name() const { return name_; }
  QuasiBounds bounds() const { return {9, 3, 36}; }

  // Carries an H element between the two factors (or leaves it in place).
  Elem transport(Elem h, int from, int to) const;

  // Letter layer: codes 0..|G1|-1 are factor-1 elements, the rest factor 2.
  int alphabet_size() const { return g1_.order() + g2_.order(); }
  bool letter_is_identity(int code) const { return code == 0 || code == g1_.order(); }
  int letter_code(const AmalSyllable& s) const {
    return s.factor == 1 ? s.g : g1_.order() + s.g;
  }
  AmalSyllable letter_of(int code) const;
  Word word_from_letters(const Letters& letters) const;
  Letters letters_of(const Word& w) const;
  Letters random_letters(int len, Rng& rng) const;

  // Word machinery.
  bool is_reduced(const Word& w) const;
  Word reduce(const Word& w) const;
  int syllable_length(const Word& w) const { return static_cast<int>(reduce(w).size()); }
  AmalNormalForm normal_form(const Word& w) const;
  bool equals(const Word& a, const Word& b) const { return normal_form(a) == normal_form(b); }
  bool is_identity(const Word& w) const { return normal_form(w).is_identity(); }
  std::vector<int> nf_key(const Word& w) const;
  static Word identity_word() { return {}; }
  Word concat(Word a, const Word& b) const;
  Word inverse(const Word& w) const;
  static Word reverse(Word w);
  bool is_group_palindrome(const Word& w) const;

  // Requires a Case 1 or Case 2 witness; throws WitnessNotApplicable else.
  SpecialForm special_form(const Word& reduced) const;
  MarkSequence mark_sequence(const SpecialForm& sf) const;
  Word evaluate(const SpecialForm& sf) const;  // tokens back to a word
  RunStats stats(const Word& w) const { return gap_stats(mark_sequence(special_form(reduce(w)))); }
  long long f(const Word& w) const { return stats(w).f; }
  long long plength_lower_bound(const Word& w, int m) const;

  Word random_reduced_word(int len, Rng& rng) const;
  Word random_shuffle(const Word& w, Rng& rng) const;
  Word random_expand(const Word& w, Rng& rng) const;
  Word random_mirror_word(int len, Rng& rng) const;  // odd syllable mirror

  // Chain whose i-th gap between consecutive a marks is b (c b)^{i-1};
  // f = K exactly. Throws NoFillerElement / NoOppositeFactorElement.
  Word witness_word(int K) const;
  long long witness_f(int K) const { return K; }
  bool has_witness_family() const;

  struct Pushed;

  // Requires H normal in both factors; the image amalgamates the trivial
  // subgroup. Lower bounds computed on the image transfer to the source.
  Pushed quotient_push() const;

 private:
  void require_witness() const;
  // theta for a marked syllable value, 0 when unmarked.
  int mark_theta(Elem x) const;
  // First (u, u') in row-major H x H with u a^theta u' = x.
  FixedPresentationTable::Entry decompose(Elem x, int theta) const;

  FiniteGroup g1_, g2_;
  Subgroup h1_, h2_;
  SubgroupIso ident_;
  Transversal t1_, t2_;  // right transversals of H in each factor
  CaseClassification cls_;
  std::vector<char> in_dc_a_, in_dc_ainv_;  // Case 1 marking masks over the witness factor
  std::string name_;
};

struct AmalInstance::Pushed {
  AmalInstance image;
  std::vector<int> map1, map2;  // factor elements -> quotient elements

  AmalWord project(const AmalWord& w) const;
};

}  // namespace freewidth

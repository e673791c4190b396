#include "freewidth/widthlab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "freewidth/parallel.hpp"
#include "freewidth/rng.hpp"

namespace freewidth {

const char* to_string(Suite s) {
  switch (s) {
    case Suite::kDefect: return "defect";
    case Suite::kNfold: return "nfold";
    case Suite::kPalindrome: return "palindrome";
    case Suite::kAlmost: return "almost";
    case Suite::kProduct: return "product";
    case Suite::kSignatureUniqueness: return "signature-uniqueness";
    case Suite::kSyllableLength: return "syllable-length";
    case Suite::kInverseSymmetry: return "inverse-symmetry";
    case Suite::kOracleConsistency: return "oracle-consistency";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::kDefect, Suite::kNfold, Suite::kPalindrome, Suite::kAlmost,
                  Suite::kProduct, Suite::kSignatureUniqueness, Suite::kSyllableLength,
                  Suite::kInverseSymmetry, Suite::kOracleConsistency}) {
    if (name == to_string(s)) return s;
  }
  throw Error("SuiteUnknown", "no suite named '" + name + "'");
}

namespace {

template <class Inst>
typename Inst::Word random_almost_palindrome(const Inst& inst, int m, int max_len, Rng& rng) {
  int len = rng.range(1, std::max(1, max_len));
  Letters letters = inst.random_letters(len, rng);
  for (int i = 0; 2 * i + 1 < len; ++i)
    letters[static_cast<std::size_t>(len - 1 - i)] = letters[static_cast<std::size_t>(i)];
  int subs = rng.below(m + 1);
  for (int s = 0; s < subs; ++s) {
    int pos = rng.below(len);
    int code;
    do code = rng.below(inst.alphabet_size());
    while (code == letters[static_cast<std::size_t>(pos)]);
    letters[static_cast<std::size_t>(pos)] = code;
  }
  return inst.word_from_letters(letters);
}

// Runs one observation per sample in parallel and collects values against a
// fixed bound.
template <class Fn>
void run_bounded(SuiteReport& report, int samples, std::uint64_t seed, long long bound, Fn&& fn) {
  std::vector<long long> observed(static_cast<std::size_t>(samples), 0);
  parallel_for(samples, [&](int i) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(i));
    observed[static_cast<std::size_t>(i)] = fn(rng, i);
  });
  report.bound = bound;
  for (int i = 0; i < samples; ++i) {
    long long v = observed[static_cast<std::size_t>(i)];
    report.max_observed = std::max(report.max_observed, v);
    if (v > bound)
      report.violations.push_back("sample " + std::to_string(i) + ": observed " +
                                  std::to_string(v) + " > bound " + std::to_string(bound));
  }
}

template <class Inst>
void suite_defect(const Inst& inst, const SuiteParams& p, SuiteReport& report) {
  run_bounded(report, p.samples, p.seed, inst.bounds().defect, [&](Rng& rng, int) {
    auto w1 = inst.random_reduced_word(rng.below(p.max_word + 1), rng);
    auto w2 = inst.random_reduced_word(rng.below(p.max_word + 1), rng);
    return std::llabs(inst.f(inst.concat(w1, w2)) - inst.f(w1) - inst.f(w2));
  });
}

template <class Inst>
void suite_nfold(const Inst& inst, const SuiteParams& p, SuiteReport& report) {
  const int n = std::max(2, p.k);
  long long bound = static_cast<long long>(inst.bounds().defect) * (n - 1);
  run_bounded(report, p.samples, p.seed, bound, [&](Rng& rng, int) {
    auto chain = Inst::identity_word();
    long long sum = 0;
    for (int j = 0; j < n; ++j) {
      auto w = inst.random_reduced_word(rng.below(16), rng);
      sum += inst.f(w);
      chain = inst.concat(chain, w);
    }
    return std::llabs(inst.f(chain) - sum);
  });
}

template <class Inst>
void suite_palindrome(const Inst& inst, const SuiteParams& p, SuiteReport& report) {
  run_bounded(report, p.samples, p.seed, inst.bounds().palindrome_f, [&](Rng& rng, int) {
    auto w = inst.random_mirror_word(rng.below(32), rng);
    int shuffles = rng.below(6);
    for (int s = 0; s < shuffles; ++s) w = inst.random_shuffle(w, rng);
    return inst.f(w);
  });
}

template <class Inst>
void suite_almost(const Inst& inst, const SuiteParams& p, SuiteReport& report) {
  run_bounded(report, p.samples, p.seed, inst.bounds().almost_bound(p.m), [&](Rng& rng, int) {
    return inst.f(random_almost_palindrome(inst, p.m, 31, rng));
  });
}

template <class Inst>
void suite_product(const Inst& inst, const SuiteParams& p, SuiteReport& report) {
  const int k = std::max(1, p.k);
  run_bounded(report, p.samples, p.seed, inst.bounds().product_bound(k, p.m), [&](Rng& rng, int) {
    auto w = Inst::identity_word();
    for (int j = 0; j < k; ++j)
      w = inst.concat(w, random_almost_palindrome(inst, p.m, 31, rng));
    return inst.f(w);
  });
}

template <class Inst, class Invariant>
void suite_uniqueness(const Inst& inst, const SuiteParams& p, SuiteReport& report,
                      Invariant&& invariant) {
  run_bounded(report, p.samples, p.seed, 0, [&](Rng& rng, int) {
    auto w = inst.random_reduced_word(rng.below(p.max_word + 1), rng);
    auto expected = invariant(w);
    long long mismatches = 0;
    for (int s = 0; s < p.shuffles; ++s) {
      w = inst.random_shuffle(w, rng);
      if (invariant(w) != expected) ++mismatches;
    }
    return mismatches;
  });
}

template <class Inst>
void suite_inverse_symmetry(const Inst& inst, const SuiteParams& p, SuiteReport& report) {
  run_bounded(report, p.samples, p.seed, 0, [&](Rng& rng, int i) -> long long {
    typename Inst::Word w;
    if (i % 2 == 0) {
      w = inst.random_reduced_word(rng.below(p.max_word + 1), rng);
    } else {
      w = inst.word_from_letters(inst.random_letters(rng.below(p.max_word + 1), rng));
    }
    RunStats a = inst.stats(w);
    RunStats b = inst.stats(inst.inverse(w));
    if (a.f != b.f) return 1;
    for (int k : a.support())
      if (a.d(k) + b.d(k) != 0) return 1;
    for (int k : b.support())
      if (a.d(k) + b.d(k) != 0) return 1;
    return 0;
  });
}

template <class Inst>
void suite_oracle_consistency(const Inst& inst, const SuiteParams& p, SuiteReport& report) {
  Ball<Inst> ball = enumerate_ball(inst, p.radius, p.cap);
  auto table = plength_table(inst, ball.elements, p.m, p.max_len, p.max_k, p.cap);
  report.bound = p.max_k;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) continue;
    long long k = *table[i];
    report.max_observed = std::max(report.max_observed, k);
    long long lb = inst.plength_lower_bound(ball.elements[i], p.m);
    if (k < lb)
      report.violations.push_back("element " + std::to_string(i) + ": oracle " +
                                  std::to_string(k) + " below certified bound " +
                                  std::to_string(lb));
  }
}

template <class Inst>
SuiteReport run_suite(const Inst& inst, Suite suite, const SuiteParams& p) {
  SuiteReport report;
  report.suite = to_string(suite);
  report.instance = inst.name();
  report.params = p;
  auto start = std::chrono::steady_clock::now();

  switch (suite) {
    case Suite::kDefect: suite_defect(inst, p, report); break;
    case Suite::kNfold: suite_nfold(inst, p, report); break;
    case Suite::kPalindrome: suite_palindrome(inst, p, report); break;
    case Suite::kAlmost: suite_almost(inst, p, report); break;
    case Suite::kProduct: suite_product(inst, p, report); break;
    case Suite::kInverseSymmetry: suite_inverse_symmetry(inst, p, report); break;
    case Suite::kOracleConsistency: suite_oracle_consistency(inst, p, report); break;
    default:
      throw Error("SuiteUnknown", std::string("suite '") + to_string(suite) +
                                      "' does not apply to this construction");
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SuiteReport verify_suite(const HnnInstance& inst, Suite suite, const SuiteParams& params) {
  if (suite == Suite::kSignatureUniqueness) {
    SuiteReport report;
    report.suite = to_string(suite);
    report.instance = inst.name();
    report.params = params;
    auto start = std::chrono::steady_clock::now();
    suite_uniqueness(inst, params, report,
                     [&](const HnnWord& w) { return inst.signature(w); });
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  if (suite == Suite::kSyllableLength)
    throw Error("SuiteUnknown", "syllable-length applies to amalgam instances");
  return run_suite(inst, suite, params);
}

SuiteReport verify_suite(const AmalInstance& inst, Suite suite, const SuiteParams& params) {
  if (suite == Suite::kSyllableLength) {
    SuiteReport report;
    report.suite = to_string(suite);
    report.instance = inst.name();
    report.params = params;
    auto start = std::chrono::steady_clock::now();
    suite_uniqueness(inst, params, report,
                     [&](const AmalWord& w) { return inst.syllable_length(w); });
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  if (suite == Suite::kSignatureUniqueness)
    throw Error("SuiteUnknown", "signature-uniqueness applies to HNN instances");
  return run_suite(inst, suite, params);
}

namespace {

template <class Inst>
void fill_growth(const Inst& inst, int m, int k_max, GrowthReport& report) {
  long long prev = 0;
  for (int K = 1; K <= k_max; ++K) {
    auto w = inst.witness_word(K);
    long long fv = inst.f(w);
    long long bound = inst.bounds().length_bound(fv, m);
    report.rows.push_back({K, fv, bound});
    if (bound < prev) report.monotone = false;
    prev = bound;
    report.max_bound = std::max(report.max_bound, bound);
  }
}

}  // namespace

GrowthReport growth_report(const HnnInstance& inst, int m, int k_max) {
  GrowthReport report;
  report.instance = inst.name();
  report.m = m;
  fill_growth(inst, m, k_max, report);
  return report;
}

GrowthReport growth_report(const AmalInstance& inst, int m, int k_max) {
  GrowthReport report;
  report.instance = inst.name();
  report.m = m;
  if (inst.classification().has_witness()) {
    fill_growth(inst, m, k_max, report);
    return report;
  }
  if (inst.classification().kind == AmalgamCase::kCase2Normal &&
      !inst.embedded_h(1).trivial()) {
    auto pushed = inst.quotient_push();
    if (pushed.image.classification().has_witness()) {
      report.via_quotient = true;
      fill_growth(pushed.image, m, k_max, report);
      return report;
    }
  }
  throw Error("WitnessNotApplicable",
              "no witness family is available for this instance or its quotient");
}

}  // namespace freewidth

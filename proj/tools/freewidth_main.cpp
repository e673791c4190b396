// freewidth CLI: exposes the word machinery, bounds, brute-force oracles and
// property suites over instance files. Exit codes: 0 success, 1 domain error,
// 2 usage error, 3 property violation reported by `verify`.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "freewidth/io.hpp"
#include "freewidth/widthlab.hpp"

using nlohmann::json;

namespace fw = freewidth;

namespace {

struct Options {
  std::string instance;
  std::string word;
  std::string suite = "defect";
  std::string format = "json";
  int m = 0;
  int K = 10;
  int k = 3;
  int radius = 6;
  int max_len = 6;
  int max_k = 4;
  int max_word = 30;
  int shuffles = 50;
  int samples = 1000;
  std::uint64_t seed = 0;
  long long cap = fw::kDefaultElementCap;
};

json runstats_json(const fw::RunStats& rs) {
  json p = json::object(), m = json::object();
  for (const auto& [k, v] : rs.p) p[std::to_string(k)] = v;
  for (const auto& [k, v] : rs.m) m[std::to_string(k)] = v;
  return json{{"p", p}, {"m", m}, {"f", rs.f}};
}

std::string mark_string(const fw::MarkSequence& marks) {
  std::string out;
  out.reserve(marks.size());
  for (fw::Mark m : marks)
    out.push_back(m == fw::Mark::kPlus ? '+' : (m == fw::Mark::kMinus ? '-' : '.'));
  return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

json classification_json(const fw::AmalInstance& inst) {
  const auto& cls = inst.classification();
  json j{{"case", fw::to_string(cls.kind)},
         {"indices", {cls.index1, cls.index2}},
         {"hypotheses_hold", cls.hypotheses_hold}};
  if (cls.has_witness()) j["witness"] = {{"factor", cls.witness_factor}, {"element", cls.witness}};
  if (cls.fpt) {
    json entries = json::object();
    for (const auto& [g, e] : cls.fpt->entries)
      entries[std::to_string(g)] = {e.u, e.theta, e.u_prime};
    j["fpt"] = {{"a", cls.fpt->a}, {"entries", entries}, {"excluded", cls.fpt->excluded}};
  }
  return j;
}

json suite_json(const fw::SuiteReport& r) {
  return json{{"suite", r.suite},
              {"instance", r.instance},
              {"samples", r.params.samples},
              {"seed", r.params.seed},
              {"m", r.params.m},
              {"k", r.params.k},
              {"bound", r.bound},
              {"max_observed", r.max_observed},
              {"violations", r.violations},
              {"passed", r.passed()}};
}

json growth_json(const fw::GrowthReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"K", row.K}, {"f", row.f}, {"bound", row.bound}});
  return json{{"instance", r.instance}, {"m", r.m},          {"rows", rows},
              {"monotone", r.monotone}, {"max_bound", r.max_bound}, {"via_quotient", r.via_quotient}};
}

std::size_t syllable_count(const fw::HnnWord& w);
std::size_t syllable_count(const fw::AmalWord& w);
fw::HnnWord canonical_word(const fw::HnnInstance& inst, const fw::HnnWord& w);
fw::AmalWord canonical_word(const fw::AmalInstance& inst, const fw::AmalWord& w);
json bound_report(const fw::HnnInstance& inst, const fw::HnnWord& w, int m);
json bound_report(const fw::AmalInstance& inst, const fw::AmalWord& w, int m);

template <class Inst>
int run_common(const Inst& inst, const std::string& verb, const Options& opt) {
  using Word = typename Inst::Word;

  auto word_arg = [&]() -> Word {
    return inst.word_from_letters(fw::parse_letters(inst, opt.word));
  };

  if (verb == "reduce" || verb == "normal-form") {
    Word w = word_arg();
    Word out = (verb == "reduce") ? inst.reduce(w) : canonical_word(inst, w);
    bool ident = inst.is_identity(out);
    json j{{"instance", inst.name()},
           {"word", fw::format_word(inst, out)},
           {"syllables", static_cast<int>(syllable_count(out))},
           {"is_identity", ident}};
    emit(opt, j, fw::format_word(inst, out) + (ident ? "  (identity)\n" : "\n"));
    return 0;
  }
  if (verb == "f") {
    emit(opt, json{{"f", inst.f(word_arg())}}, "f = " + std::to_string(inst.f(word_arg())) + "\n");
    return 0;
  }
  if (verb == "palindrome") {
    bool is = inst.is_group_palindrome(word_arg());
    emit(opt, json{{"group_palindrome", is}}, std::string(is ? "true" : "false") + "\n");
    return 0;
  }
  if (verb == "hamming") {
    fw::Letters letters = fw::parse_letters(inst, opt.word);
    int h = fw::hamming_to_palindrome(letters);
    emit(opt, json{{"hamming", h}, {"length", static_cast<int>(letters.size())}},
         "hamming distance to a palindrome: " + std::to_string(h) + "\n");
    return 0;
  }
  if (verb == "witness") {
    Word w = inst.witness_word(opt.K);
    long long fv = inst.f(w);
    json j{{"K", opt.K},
           {"f", fv},
           {"m", opt.m},
           {"bound", inst.plength_lower_bound(w, opt.m)},
           {"word", fw::format_word(inst, w)}};
    emit(opt, j,
         "K = " + std::to_string(opt.K) + "  f = " + std::to_string(fv) + "  bound(m=" +
             std::to_string(opt.m) + ") = " + std::to_string(inst.plength_lower_bound(w, opt.m)) +
             "\n" + fw::format_word(inst, w) + "\n");
    return 0;
  }
  if (verb == "bound") {
    Word w = word_arg();
    json j = bound_report(inst, w, opt.m);
    long long b = j.at("lower_bound").get<long long>();
    emit(opt, j,
         "f = " + std::to_string(j.at("f").get<long long>()) + "  lower bound at m = " +
             std::to_string(opt.m) + ": " + std::to_string(b) + "\n");
    return 0;
  }
  if (verb == "ball") {
    auto ball = fw::enumerate_ball(inst, opt.radius, opt.cap);
    json j{{"radius", opt.radius},
           {"elements", static_cast<long long>(ball.elements.size())},
           {"layers", ball.layer_counts}};
    emit(opt, j,
         "radius " + std::to_string(opt.radius) + ": " + std::to_string(ball.elements.size()) +
             " elements\n");
    return 0;
  }
  if (verb == "plength") {
    auto k = fw::plength_oracle(inst, word_arg(), opt.m, opt.max_len, opt.max_k, opt.cap);
    json j{{"m", opt.m}, {"max_len", opt.max_len}, {"max_k", opt.max_k}, {"found", k.has_value()}};
    j["k"] = k ? json(*k) : json(nullptr);
    emit(opt, j, k ? "plength <= " + std::to_string(*k) + "\n" : "unknown within caps\n");
    return 0;
  }
  if (verb == "verify") {
    fw::SuiteParams params;
    params.samples = opt.samples;
    params.seed = opt.seed;
    params.m = opt.m;
    params.k = opt.k;
    params.max_word = opt.max_word;
    params.shuffles = opt.shuffles;
    params.radius = opt.radius;
    params.max_len = opt.max_len;
    params.max_k = opt.max_k;
    params.cap = opt.cap;
    fw::SuiteReport report = fw::verify_suite(inst, fw::parse_suite(opt.suite), params);
    std::string text = "suite " + report.suite + " on " + report.instance + ": max observed " +
                       std::to_string(report.max_observed) + " vs bound " +
                       std::to_string(report.bound) + ", " +
                       std::to_string(report.violations.size()) + " violations (" +
                       std::to_string(report.seconds) + " s)\n";
    emit(opt, suite_json(report), text);
    return report.passed() ? 0 : 3;
  }
  if (verb == "growth") {
    fw::GrowthReport report = fw::growth_report(inst, opt.m, opt.K);
    std::string text;
    for (const auto& row : report.rows)
      text += "K " + std::to_string(row.K) + "  f " + std::to_string(row.f) + "  bound " +
              std::to_string(row.bound) + "\n";
    emit(opt, growth_json(report), text);
    return 0;
  }
  throw fw::Error("UsageError", "verb '" + verb + "' does not apply to this instance");
}

std::size_t syllable_count(const fw::HnnWord& w) { return w.tail.size(); }
std::size_t syllable_count(const fw::AmalWord& w) { return w.size(); }

fw::HnnWord canonical_word(const fw::HnnInstance& inst, const fw::HnnWord& w) {
  return inst.normal_form(w);
}

// Renders the amalgam normal form h x1 x2 ... back as a word.
fw::AmalWord canonical_word(const fw::AmalInstance& inst, const fw::AmalWord& w) {
  fw::AmalNormalForm nf = inst.normal_form(w);
  fw::AmalWord out;
  if (nf.h != 0) out.push_back({1, nf.h});
  out.insert(out.end(), nf.cosets.begin(), nf.cosets.end());
  return inst.reduce(out);
}

json bound_report(const fw::HnnInstance& inst, const fw::HnnWord& w, int m) {
  fw::HnnWord red = inst.reduce(w);
  fw::Signature sig = inst.signature(red);
  fw::RunStats rs = fw::run_stats(sig);
  json sigj = json::array();
  for (auto b : sig) sigj.push_back(static_cast<int>(b));
  return json{{"word", fw::format_word(inst, red)},
              {"signature", sigj},
              {"stats", runstats_json(rs)},
              {"f", rs.f},
              {"m", m},
              {"lower_bound", inst.plength_lower_bound(red, m)}};
}

json bound_report(const fw::AmalInstance& inst, const fw::AmalWord& w, int m) {
  fw::AmalWord red = inst.reduce(w);
  fw::SpecialForm sf = inst.special_form(red);
  fw::RunStats rs = fw::gap_stats(inst.mark_sequence(sf));
  return json{{"word", fw::format_word(inst, red)},
              {"marks", mark_string(inst.mark_sequence(sf))},
              {"stats", runstats_json(rs)},
              {"f", rs.f},
              {"m", m},
              {"lower_bound", inst.plength_lower_bound(red, m)},
              {"case", fw::to_string(inst.classification().kind)}};
}

int dispatch(const std::string& verb, const Options& opt) {
  fw::InstanceKind kind = fw::probe_instance(opt.instance);
  if (kind == fw::InstanceKind::kHnn) {
    fw::HnnInstance inst = fw::load_hnn_instance(opt.instance);
    if (verb == "signature") {
      fw::Signature sig = inst.signature(inst.word_from_letters(fw::parse_letters(inst, opt.word)));
      json sigj = json::array();
      std::string text;
      for (auto b : sig) {
        sigj.push_back(static_cast<int>(b));
        text += (b > 0 ? "+1 " : "-1 ");
      }
      emit(opt, json{{"signature", sigj}}, text + "\n");
      return 0;
    }
    if (verb == "classify")
      throw fw::Error("UsageError", "classify applies to amalgam instances");
    return run_common(inst, verb, opt);
  }
  fw::AmalInstance inst = fw::load_amalgam_instance(opt.instance);
  if (verb == "classify") {
    json j = classification_json(inst);
    emit(opt, j, j.dump(2) + "\n");
    return 0;
  }
  if (verb == "signature")
    throw fw::Error("UsageError", "signature applies to HNN instances");
  return run_common(inst, verb, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freewidth: word machinery, quasimorphism bounds and width oracles for HNN "
               "extensions and amalgamated free products over finite groups"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"reduce", "Britton/syllable reduction of a word"},
      {"normal-form", "canonical representative of a word"},
      {"signature", "stable-letter exponent sequence (HNN)"},
      {"f", "quasimorphism value of a word"},
      {"palindrome", "group-palindrome test"},
      {"hamming", "letter distance to the nearest palindrome"},
      {"witness", "witness word with unbounded f"},
      {"bound", "certified lower bound for the m-almost palindromic length"},
      {"ball", "BFS ball of the Cayley graph"},
      {"plength", "capped search for a palindromic factorization"},
      {"verify", "run a property suite"},
      {"growth", "witness growth table"},
      {"classify", "amalgam case classification"},
  };

  for (const auto& [name, desc] : verbs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--instance", opt.instance, "instance file (JSON)")->required();
    sub->add_option("--word", opt.word, "word in token syntax");
    sub->add_option("--m", opt.m, "substitution budget m");
    sub->add_option("--K", opt.K, "witness index / largest K");
    sub->add_option("--k", opt.k, "factor count for nfold/product suites");
    sub->add_option("--radius", opt.radius, "ball radius");
    sub->add_option("--max-len", opt.max_len, "palindrome length cap");
    sub->add_option("--max-k", opt.max_k, "factor-count cap for plength");
    sub->add_option("--max-word", opt.max_word, "random word size cap");
    sub->add_option("--shuffles", opt.shuffles, "rewrites per word in uniqueness suites");
    sub->add_option("--samples", opt.samples, "sample count");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--cap", opt.cap, "element cap for searches");
    sub->add_option("--suite", opt.suite, "suite name for verify");
    sub->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt);
  } catch (const fw::Error& e) {
    json j{{"error", e.name()}, {"message", e.what()}};
    std::cout << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json j{{"error", "Internal"}, {"message", e.what()}};
    std::cout << j.dump() << "\n";
    return 1;
  }
}

#include "freewidth/amalgam.hpp"

#include <algorithm>

namespace freewidth {

AmalInstance::AmalInstance(FiniteGroup g1, FiniteGroup g2, Subgroup h1, Subgroup h2,
                           SubgroupIso ident, std::string name)
    : g1_(std::move(g1)),
      g2_(std::move(g2)),
      h1_(std::move(h1)),
      h2_(std::move(h2)),
      ident_(std::move(ident)),
      name_(std::move(name)) {
  if (h1_.size() == g1_.order() || h2_.size() == g2_.order())
    throw Error("NotProper", "the amalgamated subgroup must be proper in both factors");
  t1_ = make_transversal(g1_, h1_, CosetSide::kRight);
  t2_ = make_transversal(g2_, h2_, CosetSide::kRight);
  cls_ = classify_amalgam_case(g1_, h1_, g2_, h2_);
  if (cls_.has_witness() && cls_.kind == AmalgamCase::kCase1) {
    const FiniteGroup& gf = factor(cls_.witness_factor);
    in_dc_a_.assign(static_cast<std::size_t>(gf.order()), 0);
    in_dc_ainv_.assign(static_cast<std::size_t>(gf.order()), 0);
    const Subgroup& hf = embedded_h(cls_.witness_factor);
    for (Elem x : double_coset(gf, hf, cls_.witness)) in_dc_a_[static_cast<std::size_t>(x)] = 1;
    for (Elem x : double_coset(gf, hf, gf.inv(cls_.witness)))
      in_dc_ainv_[static_cast<std::size_t>(x)] = 1;
  }
}

Elem AmalInstance::transport(Elem h, int from, int to) const {
  if (from == to) return h;
  return from == 1 ? ident_.map(h) : ident_.unmap(h);
}

AmalSyllable AmalInstance::letter_of(int code) const {
  if (code >= 0 && code < g1_.order()) return {1, code};
  if (code >= g1_.order() && code < alphabet_size()) return {2, code - g1_.order()};
  throw Error("UnknownLetter", "letter code " + std::to_string(code) + " is not in the alphabet");
}

AmalWord AmalInstance::word_from_letters(const Letters& letters) const {
  AmalWord w;
  w.reserve(letters.size());
  for (int code : letters) w.push_back(letter_of(code));
  return w;
}

Letters AmalInstance::letters_of(const AmalWord& w) const {
  Letters out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back(letter_code(s));
  return out;
}

Letters AmalInstance::random_letters(int len, Rng& rng) const {
  Letters out(static_cast<std::size_t>(len));
  for (auto& c : out) c = rng.below(alphabet_size());
  return out;
}

bool AmalInstance::is_reduced(const AmalWord& w) const {
  if (w.size() <= 1) return true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i + 1 < w.size() && w[i].factor == w[i + 1].factor) return false;
    if (embedded_h(w[i].factor).contains(w[i].g)) return false;
  }
  return true;
}

AmalWord AmalInstance::reduce(const AmalWord& w) const {
  AmalWord st;
  st.reserve(w.size());
  auto mul_in = [&](int fac, Elem a, Elem b) { return factor(fac).mul(a, b); };

  for (const auto& in : w) {
    int fac = in.factor;
    Elem g = in.g;
    if (g == 0) continue;
    for (;;) {
      if (st.empty()) break;
      AmalSyllable& top = st.back();
      if (top.factor == fac) {
        g = mul_in(fac, top.g, g);
        st.pop_back();
        if (g == 0) break;
        continue;
      }
      if (embedded_h(top.factor).contains(top.g)) {
        // Absorb the H syllable leftward; rightward when it sits at the front.
        AmalSyllable h = top;
        st.pop_back();
        if (st.empty()) {
          g = mul_in(fac, transport(h.g, h.factor, fac), g);
          if (g == 0) break;
        } else {
          AmalSyllable& below = st.back();
          below.g = mul_in(below.factor, below.g, transport(h.g, h.factor, below.factor));
        }
        continue;
      }
      break;
    }
    if (g != 0) st.push_back({static_cast<std::int8_t>(fac), g});
  }

  // A trailing H syllable of a longer word absorbs into its left neighbour.
  if (st.size() >= 2 && embedded_h(st.back().factor).contains(st.back().g)) {
    AmalSyllable h = st.back();
    st.pop_back();
    AmalSyllable& below = st.back();
    below.g = factor(below.factor).mul(below.g, transport(h.g, h.factor, below.factor));
  }
  return st;
}

AmalNormalForm AmalInstance::normal_form(const AmalWord& w) const {
  AmalWord red = reduce(w);
  AmalNormalForm nf;
  if (red.empty()) return nf;
  if (red.size() == 1 && embedded_h(red[0].factor).contains(red[0].g)) {
    nf.h = transport(red[0].g, red[0].factor, 1);
    return nf;
  }
  for (int i = static_cast<int>(red.size()) - 1; i >= 0; --i) {
    auto& syl = red[static_cast<std::size_t>(i)];
    const FiniteGroup& gf = factor(syl.factor);
    const Transversal& t = syl.factor == 1 ? t1_ : t2_;
    Elem rep = t.rep_of(syl.g);
    Elem h = gf.mul(syl.g, gf.inv(rep));
    syl.g = rep;
    if (i == 0) {
      nf.h = transport(h, syl.factor, 1);
    } else {
      auto& prev = red[static_cast<std::size_t>(i - 1)];
      prev.g = factor(prev.factor).mul(prev.g, transport(h, syl.factor, prev.factor));
    }
  }
  nf.cosets = std::move(red);
  return nf;
}

std::vector<int> AmalInstance::nf_key(const AmalWord& w) const {
  AmalNormalForm nf = normal_form(w);
  std::vector<int> key;
  key.reserve(1 + 2 * nf.cosets.size());
  key.push_back(nf.h);
  for (const auto& s : nf.cosets) {
    key.push_back(s.factor);
    key.push_back(s.g);
  }
  return key;
}

AmalWord AmalInstance::concat(AmalWord a, const AmalWord& b) const {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

AmalWord AmalInstance::inverse(const AmalWord& w) const {
  AmalWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->factor, factor(it->factor).inv(it->g)});
  return out;
}

AmalWord AmalInstance::reverse(AmalWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

bool AmalInstance::is_group_palindrome(const AmalWord& w) const {
  AmalWord red = reduce(w);
  return equals(reverse(red), red);
}

void AmalInstance::require_witness() const {
  if (!cls_.has_witness())
    throw Error("WitnessNotApplicable",
                "instance classified " + std::string(to_string(cls_.kind)) +
                    " carries no witness element a");
}

int AmalInstance::mark_theta(Elem x) const {
  if (cls_.kind == AmalgamCase::kCase1) {
    if (in_dc_a_[static_cast<std::size_t>(x)]) return +1;
    if (in_dc_ainv_[static_cast<std::size_t>(x)]) return -1;
    return 0;
  }
  auto it = cls_.fpt->entries.find(x);
  return it == cls_.fpt->entries.end() ? 0 : it->second.theta;
}

FixedPresentationTable::Entry AmalInstance::decompose(Elem x, int theta) const {
  if (cls_.kind == AmalgamCase::kCase2NonNormal) return cls_.fpt->entries.at(x);
  const FiniteGroup& gf = factor(cls_.witness_factor);
  const Subgroup& hf = embedded_h(cls_.witness_factor);
  Elem a = theta > 0 ? cls_.witness : gf.inv(cls_.witness);
  for (Elem u : hf.members)
    for (Elem v : hf.members)
      if (gf.mul(gf.mul(u, a), v) == x) return {u, theta, v};
  throw Error("WitnessNotApplicable", "element admits no u a^theta u' presentation");
}

SpecialForm AmalInstance::special_form(const AmalWord& reduced) const {
  require_witness();
  const int wf = cls_.witness_factor;

  AmalWord w = reduced;
  SpecialForm out;
  out.reserve(w.size());
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    int theta = (w[i].factor == wf) ? mark_theta(w[i].g) : 0;
    if (theta == 0) {
      out.push_back({false, w[i].factor, w[i].g, 0});
      continue;
    }
    auto [u, th, u_prime] = decompose(w[i].g, theta);
    if (u != 0) {
      if (i == 0) {
        out.push_back({false, static_cast<std::int8_t>(wf), u, 0});
      } else {
        auto& prev = out.back();  // the i-1 syllable's plain token (other factor)
        prev.g = factor(prev.factor).mul(prev.g, transport(u, wf, prev.factor));
      }
    }
    out.push_back({true, 0, 0, static_cast<std::int8_t>(th)});
    if (u_prime != 0) {
      if (i + 1 == n) {
        out.push_back({false, static_cast<std::int8_t>(wf), u_prime, 0});
      } else {
        auto& next = w[i + 1];
        next.g = factor(next.factor).mul(transport(u_prime, wf, next.factor), next.g);
      }
    }
  }
  return out;
}

MarkSequence AmalInstance::mark_sequence(const SpecialForm& sf) const {
  MarkSequence marks;
  marks.reserve(sf.size());
  for (const auto& tok : sf)
    marks.push_back(!tok.mark ? Mark::kOther : (tok.theta > 0 ? Mark::kPlus : Mark::kMinus));
  return marks;
}

AmalWord AmalInstance::evaluate(const SpecialForm& sf) const {
  require_witness();
  const FiniteGroup& gf = factor(cls_.witness_factor);
  AmalWord out;
  out.reserve(sf.size());
  for (const auto& tok : sf) {
    if (tok.mark) {
      Elem a = tok.theta > 0 ? cls_.witness : gf.inv(cls_.witness);
      out.push_back({static_cast<std::int8_t>(cls_.witness_factor), a});
    } else {
      out.push_back({tok.factor, tok.g});
    }
  }
  return out;
}

long long AmalInstance::plength_lower_bound(const AmalWord& w, int m) const {
  if (is_identity(w)) return 0;
  return bounds().length_bound(f(w), m);
}

AmalWord AmalInstance::random_reduced_word(int len, Rng& rng) const {
  AmalWord w;
  if (len == 0) return w;
  int fac = rng.coin() ? 1 : 2;
  w.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const FiniteGroup& gf = factor(fac);
    const Subgroup& hf = embedded_h(fac);
    Elem g;
    do g = rng.below(gf.order());
    while (hf.contains(g));
    w.push_back({static_cast<std::int8_t>(fac), g});
    fac = 3 - fac;
  }
  return w;
}

AmalWord AmalInstance::random_shuffle(const AmalWord& w, Rng& rng) const {
  if (w.size() < 2) return w;
  AmalWord out = w;
  std::size_t i = static_cast<std::size_t>(rng.below(static_cast<int>(out.size()) - 1));
  Elem hv = rng.pick(h1_.members);  // H element, factor-1 coordinates
  auto& left = out[i];
  auto& right = out[i + 1];
  left.g = factor(left.factor).mul(left.g, transport(hv, 1, left.factor));
  right.g = factor(right.factor).mul(transport(g1_.inv(hv), 1, right.factor), right.g);
  return out;
}

AmalWord AmalInstance::random_expand(const AmalWord& w, Rng& rng) const {
  AmalWord out = w;
  if (!out.empty() && rng.coin()) {
    // Split one syllable into a same-factor pair.
    std::size_t i = static_cast<std::size_t>(rng.below(static_cast<int>(out.size())));
    const FiniteGroup& gf = factor(out[i].factor);
    Elem x = rng.below(gf.order());
    AmalSyllable second{out[i].factor, gf.mul(gf.inv(x), out[i].g)};
    out[i].g = x;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1, second);
  } else {
    // Insert a cancelling H pair across the factors.
    std::size_t i = static_cast<std::size_t>(rng.below(static_cast<int>(out.size()) + 1));
    Elem hv = rng.pick(h1_.members);
    AmalWord pair = {{1, hv}, {2, transport(g1_.inv(hv), 1, 2)}};
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), pair.begin(), pair.end());
  }
  return out;
}

AmalWord AmalInstance::random_mirror_word(int len, Rng& rng) const {
  AmalWord w;
  if (len <= 0) return w;
  if (len % 2 == 0) --len;  // reduced mirror words have odd syllable length
  int fac = rng.coin() ? 1 : 2;
  w.assign(static_cast<std::size_t>(len), {0, 0});
  for (int i = 0; 2 * i < len; ++i) {
    const FiniteGroup& gf = factor(fac);
    const Subgroup& hf = embedded_h(fac);
    Elem g;
    do g = rng.below(gf.order());
    while (hf.contains(g));
    w[static_cast<std::size_t>(i)] = {static_cast<std::int8_t>(fac), g};
    w[static_cast<std::size_t>(len - 1 - i)] = {static_cast<std::int8_t>(fac), g};
    fac = 3 - fac;
  }
  return w;
}

bool AmalInstance::has_witness_family() const {
  if (!cls_.has_witness()) return false;
  const int wf = cls_.witness_factor;
  const FiniteGroup& gf = factor(wf);
  const Subgroup& hf = embedded_h(wf);
  auto dc_a = double_coset(gf, hf, cls_.witness);
  auto dc_ai = double_coset(gf, hf, gf.inv(cls_.witness));
  for (Elem c = 0; c < gf.order(); ++c) {
    if (hf.contains(c)) continue;
    if (std::binary_search(dc_a.begin(), dc_a.end(), c)) continue;
    if (std::binary_search(dc_ai.begin(), dc_ai.end(), c)) continue;
    return true;
  }
  return false;
}

AmalWord AmalInstance::witness_word(int K) const {
  require_witness();
  const int wf = cls_.witness_factor;
  const FiniteGroup& gf = factor(wf);
  const Subgroup& hf = embedded_h(wf);
  auto dc_a = double_coset(gf, hf, cls_.witness);
  auto dc_ai = double_coset(gf, hf, gf.inv(cls_.witness));

  Elem filler = -1;
  for (Elem c = 0; c < gf.order() && filler < 0; ++c) {
    if (hf.contains(c)) continue;
    if (std::binary_search(dc_a.begin(), dc_a.end(), c)) continue;
    if (std::binary_search(dc_ai.begin(), dc_ai.end(), c)) continue;
    filler = c;
  }
  if (filler < 0)
    throw Error("NoFillerElement",
                "every non-H element of the witness factor lies in HaH or Ha^-1H");

  const int of = 3 - wf;
  Elem b = -1;
  for (Elem x = 0; x < factor(of).order() && b < 0; ++x)
    if (!embedded_h(of).contains(x)) b = x;
  if (b < 0) throw Error("NoOppositeFactorElement", "no element outside H in the other factor");

  AmalWord w;
  AmalSyllable mark{static_cast<std::int8_t>(wf), cls_.witness};
  AmalSyllable bs{static_cast<std::int8_t>(of), b};
  AmalSyllable cs{static_cast<std::int8_t>(wf), filler};
  w.push_back(mark);
  for (int i = 1; i <= K; ++i) {
    w.push_back(bs);
    for (int j = 1; j < i; ++j) {
      w.push_back(cs);
      w.push_back(bs);
    }
    w.push_back(mark);
  }
  return w;
}

AmalWord AmalInstance::Pushed::project(const AmalWord& w) const {
  AmalWord out;
  out.reserve(w.size());
  for (const auto& s : w)
    out.push_back({s.factor, s.factor == 1 ? map1[static_cast<std::size_t>(s.g)]
                                           : map2[static_cast<std::size_t>(s.g)]});
  return out;
}

AmalInstance::Pushed AmalInstance::quotient_push() const {
  QuotientResult q1 = make_quotient(g1_, h1_);
  QuotientResult q2 = make_quotient(g2_, h2_);
  Subgroup th1 = check_subgroup(q1.group, {0});
  Subgroup th2 = check_subgroup(q2.group, {0});
  SubgroupIso ident = check_iso(q1.group, th1, q2.group, th2, {{0, 0}});
  AmalInstance image(std::move(q1.group), std::move(q2.group), std::move(th1), std::move(th2),
                     std::move(ident), name_.empty() ? "quotient" : name_ + "-quotient");
  return Pushed{std::move(image), std::move(q1.map), std::move(q2.map)};
}

}  // namespace freewidth

#include "freewidth/hnn.hpp"

#include <algorithm>

namespace freewidth {

HnnInstance::HnnInstance(FiniteGroup base, Subgroup h1, Subgroup h2, SubgroupIso phi,
                         std::string name)
    : base_(std::move(base)),
      h1_(std::move(h1)),
      h2_(std::move(h2)),
      phi_(std::move(phi)),
      name_(std::move(name)) {
  if (h1_.size() == base_.order() || h2_.size() == base_.order())
    throw Error("NotProper", "associated subgroups must be proper");
  t1_ = make_transversal(base_, h1_, CosetSide::kRight);
  t2_ = make_transversal(base_, h2_, CosetSide::kRight);
}

Elem HnnInstance::separator() const {
  for (Elem g = 0; g < base_.order(); ++g)
    if (!h1_.contains(g) && !h2_.contains(g)) return g;
  throw Error("NoSeparatorElement", "H1 and H2 cover the whole base group");
}

HnnWord HnnInstance::word_from_letters(const Letters& letters) const {
  HnnWord w;
  for (int code : letters) {
    if (code == t_letter() || code == t_inverse_letter()) {
      w.tail.push_back({static_cast<std::int8_t>(code == t_letter() ? +1 : -1), 0});
    } else if (code >= 0 && code < base_.order()) {
      Elem& slot = w.tail.empty() ? w.head : w.tail.back().g;
      slot = base_.mul(slot, code);
    } else {
      throw Error("UnknownLetter", "letter code " + std::to_string(code) + " is not in the alphabet");
    }
  }
  return w;
}

Letters HnnInstance::random_letters(int len, Rng& rng) const {
  Letters out(static_cast<std::size_t>(len));
  for (auto& c : out) c = rng.below(alphabet_size());
  return out;
}

bool HnnInstance::is_reduced(const HnnWord& w) const {
  for (std::size_t i = 0; i + 1 < w.tail.size(); ++i) {
    const auto& cur = w.tail[i];
    const auto& next = w.tail[i + 1];
    if (cur.beta == -1 && next.beta == +1 && h1_.contains(cur.g)) return false;
    if (cur.beta == +1 && next.beta == -1 && h2_.contains(cur.g)) return false;
  }
  return true;
}

HnnWord HnnInstance::reduce(const HnnWord& w) const {
  HnnWord out;
  out.head = w.head;
  out.tail.reserve(w.tail.size());
  for (const auto& syl : w.tail) {
    if (!out.tail.empty() && out.tail.back().beta == -syl.beta) {
      Elem h = out.tail.back().g;
      bool pinch = (syl.beta == +1) ? h1_.contains(h) : h2_.contains(h);
      if (pinch) {
        Elem x = (syl.beta == +1) ? phi_.map(h) : phi_.unmap(h);
        out.tail.pop_back();
        Elem merged = base_.mul(x, syl.g);
        Elem& slot = out.tail.empty() ? out.head : out.tail.back().g;
        slot = base_.mul(slot, merged);
        continue;
      }
    }
    out.tail.push_back(syl);
  }
  return out;
}

HnnWord HnnInstance::normal_form(const HnnWord& w) const {
  HnnWord out = reduce(w);
  for (int i = static_cast<int>(out.tail.size()) - 1; i >= 0; --i) {
    auto& syl = out.tail[static_cast<std::size_t>(i)];
    // beta = +1 splits over H2 and pushes phi^{-1}(h) left; beta = -1 splits
    // over H1 and pushes phi(h) left.
    const Transversal& t = (syl.beta == +1) ? t2_ : t1_;
    Elem rep = t.rep_of(syl.g);
    Elem h = base_.mul(syl.g, base_.inv(rep));
    Elem x = (syl.beta == +1) ? phi_.unmap(h) : phi_.map(h);
    syl.g = rep;
    Elem& slot = (i == 0) ? out.head : out.tail[static_cast<std::size_t>(i - 1)].g;
    slot = base_.mul(slot, x);
  }
  return out;
}

bool HnnInstance::equals(const HnnWord& a, const HnnWord& b) const {
  return normal_form(a) == normal_form(b);
}

bool HnnInstance::is_identity(const HnnWord& w) const {
  HnnWord nf = normal_form(w);
  return nf.head == 0 && nf.tail.empty();
}

std::vector<int> HnnInstance::nf_key(const HnnWord& w) const {
  HnnWord nf = normal_form(w);
  std::vector<int> key;
  key.reserve(1 + 2 * nf.tail.size());
  key.push_back(nf.head);
  for (const auto& syl : nf.tail) {
    key.push_back(syl.beta > 0 ? 1 : 0);
    key.push_back(syl.g);
  }
  return key;
}

HnnWord HnnInstance::concat(const HnnWord& a, const HnnWord& b) const {
  HnnWord out = a;
  Elem& slot = out.tail.empty() ? out.head : out.tail.back().g;
  slot = base_.mul(slot, b.head);
  out.tail.insert(out.tail.end(), b.tail.begin(), b.tail.end());
  return out;
}

HnnWord HnnInstance::inverse(const HnnWord& w) const {
  HnnWord out;
  const int r = w.syllables();
  out.head = base_.inv(r == 0 ? w.head : w.tail.back().g);
  out.tail.reserve(static_cast<std::size_t>(r));
  for (int j = r - 1; j >= 0; --j) {
    Elem before = (j == 0) ? w.head : w.tail[static_cast<std::size_t>(j - 1)].g;
    out.tail.push_back({static_cast<std::int8_t>(-w.tail[static_cast<std::size_t>(j)].beta),
                        base_.inv(before)});
  }
  return out;
}

HnnWord HnnInstance::reverse(const HnnWord& w) {
  const int r = w.syllables();
  HnnWord out;
  out.head = (r == 0) ? w.head : w.tail.back().g;
  out.tail.reserve(static_cast<std::size_t>(r));
  for (int j = r - 1; j >= 0; --j) {
    Elem before = (j == 0) ? w.head : w.tail[static_cast<std::size_t>(j - 1)].g;
    out.tail.push_back({w.tail[static_cast<std::size_t>(j)].beta, before});
  }
  return out;
}

bool HnnInstance::is_group_palindrome(const HnnWord& w) const {
  HnnWord red = reduce(w);
  return equals(reverse(red), red);
}

Signature HnnInstance::signature(const HnnWord& w) const {
  HnnWord red = reduce(w);
  Signature sig;
  sig.reserve(red.tail.size());
  for (const auto& syl : red.tail) sig.push_back(syl.beta);
  return sig;
}

long long HnnInstance::plength_lower_bound(const HnnWord& w, int m) const {
  if (is_identity(w)) return 0;
  return bounds().length_bound(f(w), m);
}

HnnWord HnnInstance::random_reduced_word(int len, Rng& rng) const {
  if (base_.order() - h1_.size() <= 0 || base_.order() - h2_.size() <= 0)
    throw Error("InstanceTooSmall", "no element available to break a forced pinch");

  HnnWord w;
  w.head = rng.below(base_.order());
  if (len == 0) return w;

  std::vector<std::int8_t> betas(static_cast<std::size_t>(len));
  for (auto& b : betas) b = rng.coin() ? +1 : -1;

  w.tail.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    Elem g;
    if (i + 1 < len && betas[static_cast<std::size_t>(i)] == -1 &&
        betas[static_cast<std::size_t>(i + 1)] == +1) {
      do g = rng.below(base_.order());
      while (h1_.contains(g));
    } else if (i + 1 < len && betas[static_cast<std::size_t>(i)] == +1 &&
               betas[static_cast<std::size_t>(i + 1)] == -1) {
      do g = rng.below(base_.order());
      while (h2_.contains(g));
    } else {
      g = rng.below(base_.order());
    }
    w.tail.push_back({betas[static_cast<std::size_t>(i)], g});
  }
  return w;
}

HnnWord HnnInstance::random_shuffle(const HnnWord& w, Rng& rng) const {
  if (w.tail.empty()) return w;
  HnnWord out = w;
  int edge = rng.below(out.syllables());  // t^{beta} between element `edge-1` and `edge`
  auto& syl = out.tail[static_cast<std::size_t>(edge)];
  Elem& left = (edge == 0) ? out.head : out.tail[static_cast<std::size_t>(edge - 1)].g;
  if (syl.beta == +1) {
    Elem h = rng.pick(h1_.members);
    left = base_.mul(left, h);
    syl.g = base_.mul(base_.inv(phi_.map(h)), syl.g);
  } else {
    Elem h = rng.pick(h2_.members);
    left = base_.mul(left, h);
    syl.g = base_.mul(base_.inv(phi_.unmap(h)), syl.g);
  }
  return out;
}

HnnWord HnnInstance::random_expand(const HnnWord& w, Rng& rng) const {
  HnnWord out = w;
  int pos = rng.below(out.syllables() + 1);  // base slot to split
  Elem& slot = (pos == 0) ? out.head : out.tail[static_cast<std::size_t>(pos - 1)].g;
  Elem g = slot;
  HnnSyllable first{}, second{};
  Elem x = rng.below(base_.order());
  if (rng.coin()) {
    // g = x * phi(h) * y rewritten as x t^-1 h t y
    Elem h = rng.pick(h1_.members);
    Elem y = base_.mul(base_.inv(base_.mul(x, phi_.map(h))), g);
    first = {-1, h};
    second = {+1, y};
  } else {
    // g = x * phi^{-1}(h) * y rewritten as x t h t^-1 y
    Elem h = rng.pick(h2_.members);
    Elem y = base_.mul(base_.inv(base_.mul(x, phi_.unmap(h))), g);
    first = {+1, h};
    second = {-1, y};
  }
  slot = x;
  out.tail.insert(out.tail.begin() + pos, {first, second});
  return out;
}

HnnWord HnnInstance::random_mirror_word(int len, Rng& rng) const {
  HnnWord w;
  if (len == 0) {
    w.head = rng.below(base_.order());
    return w;
  }

  std::vector<std::int8_t> betas(static_cast<std::size_t>(len));
  for (int i = 0; 2 * i < len; ++i) {
    std::int8_t b = rng.coin() ? +1 : -1;
    betas[static_cast<std::size_t>(i)] = b;
    betas[static_cast<std::size_t>(len - 1 - i)] = b;  // beta_i = beta_{r+1-i}
  }

  // Pinches can only form where the sign flips; a base position and its
  // mirror may carry different flips, so sample outside the union of the two
  // forbidden subgroups.
  auto forbidden = [&](int pos) -> const Subgroup* {
    if (pos <= 0 || pos >= len) return nullptr;
    std::int8_t a = betas[static_cast<std::size_t>(pos - 1)];
    std::int8_t b = betas[static_cast<std::size_t>(pos)];
    if (a == -1 && b == +1) return &h1_;
    if (a == +1 && b == -1) return &h2_;
    return nullptr;
  };

  std::vector<Elem> bases(static_cast<std::size_t>(len) + 1);
  for (int i = 0; 2 * i <= len; ++i) {
    int j = len - i;  // mirror base position
    const Subgroup* f1 = forbidden(i);
    const Subgroup* f2 = forbidden(j);
    Elem g;
    do g = rng.below(base_.order());
    while ((f1 && f1->contains(g)) || (f2 && f2->contains(g)));
    bases[static_cast<std::size_t>(i)] = g;
    bases[static_cast<std::size_t>(j)] = g;
  }

  w.head = bases[0];
  w.tail.reserve(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i)
    w.tail.push_back({betas[static_cast<std::size_t>(i - 1)], bases[static_cast<std::size_t>(i)]});
  return w;
}

HnnWord HnnInstance::witness_word(int K) const {
  Elem g = separator();
  HnnWord w;
  for (int run = 1; run <= K; ++run) {
    for (int j = 0; j < run; ++j) w.tail.push_back({+1, g});
    if (run < K) w.tail.push_back({-1, g});
  }
  if (!w.tail.empty()) w.tail.back().g = 0;
  return w;
}

}  // namespace freewidth

#include "freewidth/runstats.hpp"

#include <algorithm>

namespace freewidth {

long long RunStats::d(int k) const {
  auto pit = p.find(k);
  auto mit = m.find(k);
  return (pit == p.end() ? 0 : pit->second) - (mit == m.end() ? 0 : mit->second);
}

int RunStats::r(int k) const {
  long long v = d(k) % 2;
  return static_cast<int>(v < 0 ? v + 2 : v);
}

std::vector<int> RunStats::support() const {
  std::vector<int> ks;
  for (const auto& [k, _] : p) ks.push_back(k);
  for (const auto& [k, _] : m)
    if (!std::binary_search(ks.begin(), ks.end(), k)) ks.push_back(k);
  std::sort(ks.begin(), ks.end());
  return ks;
}

namespace {

void finish(RunStats& rs) {
  rs.f = 0;
  for (int k : rs.support()) rs.f += rs.r(k);
}

}  // namespace

RunStats run_stats(const Signature& sig) {
  RunStats rs;
  std::size_t i = 0;
  while (i < sig.size()) {
    std::size_t j = i;
    while (j < sig.size() && sig[j] == sig[i]) ++j;
    auto& counts = sig[i] > 0 ? rs.p : rs.m;
    ++counts[static_cast<int>(j - i)];
    i = j;
  }
  finish(rs);
  return rs;
}

RunStats gap_stats(const MarkSequence& marks) {
  RunStats rs;
  auto scan = [&](Mark which, std::map<int, long long>& counts) {
    std::ptrdiff_t prev = -1;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(marks.size()); ++i) {
      if (marks[static_cast<std::size_t>(i)] != which) continue;
      if (prev >= 0) {
        std::ptrdiff_t interior = i - prev - 1;
        if (interior >= 1 && interior % 2 == 1) ++counts[static_cast<int>((interior + 1) / 2)];
      }
      prev = i;
    }
  };
  scan(Mark::kPlus, rs.p);
  scan(Mark::kMinus, rs.m);
  finish(rs);
  return rs;
}

Signature signature_inverse(const Signature& sig) {
  Signature out(sig.rbegin(), sig.rend());
  for (auto& b : out) b = static_cast<std::int8_t>(-b);
  return out;
}

SProduct s_product(const Signature& lhs, const Signature& rhs) {
  std::size_t s = 0;
  // Depth i cancels lhs[r-1-i] against rhs[i]; a pinch needs opposite signs.
  while (s < lhs.size() && s < rhs.size() && rhs[s] == -lhs[lhs.size() - 1 - s]) ++s;
  SProduct out;
  out.cancelled = static_cast<int>(s);
  out.seq.assign(lhs.begin(), lhs.end() - static_cast<std::ptrdiff_t>(s));
  out.seq.insert(out.seq.end(), rhs.begin() + static_cast<std::ptrdiff_t>(s), rhs.end());
  return out;
}

}  // namespace freewidth

#pragma once

#include <cstdint>
#include <vector>

namespace freewidth {

// splitmix64 stream. All randomized routines take an explicit Rng so runs
// are reproducible per seed and independent of worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform over [0, n). n is small everywhere in this project, so plain
  // modulo keeps the stream deterministic and portable.
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1) != 0; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
  }

 private:
  std::uint64_t state_;
};

// Independent per-sample stream: identical for a fixed (seed, index) no
// matter how samples are partitioned across workers.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(seed ^ ((index + 1) * 0xd1342543de82ef95ULL));
}

}  // namespace freewidth

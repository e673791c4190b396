#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace freewidth {

// Exponent sequence of the stable letter in a reduced HNN word; entries +-1.
using Signature = std::vector<std::int8_t>;

enum class Mark : std::uint8_t { kPlus, kMinus, kOther };
using MarkSequence = std::vector<Mark>;

// Counts p_k / m_k with the derived d_k, r_k and f. The same structure
// serves maximal +-1 runs of a signature and odd-length a-segments of a
// mark sequence.
struct RunStats {
  std::map<int, long long> p;  // k -> count of +1 runs (a-segments) of size k
  std::map<int, long long> m;  // k -> count of -1 runs (a^-1-segments)
  long long f = 0;

  long long d(int k) const;
  int r(int k) const;  // nonnegative remainder of d(k) mod 2
  std::vector<int> support() const;
};

// p(k) = number of maximal runs of +1 of length exactly k, m(k) likewise
// for -1.
RunStats run_stats(const Signature& sig);

// For each pair of consecutive Plus positions whose interior has odd length
// 2k-1, bump p(k); Minus symmetrically and independently. Interiors of a
// Plus gap may contain Minus marks and vice versa. Even or empty interiors
// contribute nothing.
RunStats gap_stats(const MarkSequence& marks);

Signature signature_inverse(const Signature& sig);

struct SProduct {
  Signature seq;
  int cancelled = 0;  // s = |rho|
};

// Cancels the maximal suffix rho of lhs against the prefix rho^{-1} of rhs
// and concatenates what is left.
SProduct s_product(const Signature& lhs, const Signature& rhs);

}  // namespace freewidth

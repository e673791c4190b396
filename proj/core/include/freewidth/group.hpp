#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freewidth/errors.hpp"

namespace freewidth {

using Elem = int;

// Finite group as a validated multiplication table. Element 0 is the
// identity in every group handled by this library. Immutable after
// construction; safe to share across threads.
class FiniteGroup {
 public:
  static constexpr int kOrderCap = 512;

  // Validates identity, inverses, the Latin-square property and (exhaustively)
  // associativity. Throws Error("NotAGroup", ...) with a witness, or
  // Error("OrderCapExceeded", ...) above kOrderCap.
  static FiniteGroup validated(std::vector<std::vector<Elem>> mult,
                               std::string name = {},
                               std::vector<std::string> element_names = {});

  int order() const noexcept { return order_; }
  Elem mul(Elem a, Elem b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }

  int element_order(Elem a) const;

  const std::string& name() const noexcept { return name_; }
  std::string element_name(Elem a) const;
  // Index for a display name, -1 if unknown.
  Elem element_by_name(const std::string& token) const;

 private:
  FiniteGroup() = default;

  int order_ = 0;
  std::vector<Elem> mult_;  // row-major order x order
  std::vector<Elem> inv_;
  std::string name_;
  std::vector<std::string> names_;
};

struct Subgroup {
  std::vector<Elem> members;  // sorted, contains 0
  std::vector<char> mask;     // size = parent order
  int index = 0;              // |G : H|

  bool contains(Elem g) const { return mask[static_cast<std::size_t>(g)] != 0; }
  int size() const { return static_cast<int>(members.size()); }
  bool trivial() const { return members.size() == 1; }
};

// Throws MissingIdentity or NotClosed (with a witness pair).
Subgroup check_subgroup(const FiniteGroup& g, std::vector<Elem> members);

// Subgroup isomorphism, stored densely over both parent orders so the
// forward and inverse maps are O(1).
struct SubgroupIso {
  std::vector<Elem> fwd;  // domain parent order; -1 outside the domain
  std::vector<Elem> bwd;  // codomain parent order; -1 outside the image

  Elem map(Elem h) const { return fwd[static_cast<std::size_t>(h)]; }
  Elem unmap(Elem h) const { return bwd[static_cast<std::size_t>(h)]; }
};

// Validates a bijective homomorphism h1 -> h2 given as (from, to) pairs.
// Throws NotBijective or NotHomomorphism (with a witness pair).
SubgroupIso check_iso(const FiniteGroup& ga, const Subgroup& ha,
                      const FiniteGroup& gb, const Subgroup& hb,
                      const std::vector<std::pair<Elem, Elem>>& pairs);

enum class CosetSide { kLeft, kRight };

// Canonical transversal: representative = least element index of its coset,
// cosets ordered by representative, so reps[0] == 0.
struct Transversal {
  CosetSide side = CosetSide::kRight;
  std::vector<Elem> reps;
  std::vector<int> coset_of;  // element -> index into reps

  Elem rep_of(Elem g) const { return reps[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(g)])]; }
};

Transversal make_transversal(const FiniteGroup& g, const Subgroup& h, CosetSide side);

// The set {u a u' : u, u' in H}, sorted.
std::vector<Elem> double_coset(const FiniteGroup& g, const Subgroup& h, Elem a);

bool is_normal(const FiniteGroup& g, const Subgroup& h,
               std::pair<Elem, Elem>* witness = nullptr);

struct QuotientResult {
  FiniteGroup group;
  std::vector<int> map;  // parent element -> quotient element, map[0] == 0
};

// Throws NotNormal (with the conjugating witness).
QuotientResult make_quotient(const FiniteGroup& g, const Subgroup& h);

// One fixed presentation g = u a^theta u' for each element of HaH that pairs
// with a distinct inverse. The lesser index of {g, g^{-1}} receives theta=+1
// and (u, u') is the first pair in a row-major H x H scan; the inverse entry
// is (u'^{-1}, -theta, u^{-1}). Elements with g == g^{-1} admit no such
// orientation and are listed in `excluded` (they are never marked).
struct FixedPresentationTable {
  struct Entry {
    Elem u;
    int theta;
    Elem u_prime;
  };

  Elem a = -1;
  std::map<Elem, Entry> entries;
  std::vector<Elem> excluded;
};

FixedPresentationTable make_fixed_presentation(const FiniteGroup& g, const Subgroup& h, Elem a);

enum class AmalgamCase { kCase1, kCase2Normal, kCase2NonNormal };

const char* to_string(AmalgamCase c);

// Case decision for an amalgam G1 *_H G2:
//  - H nontrivial and normal in both factors -> kCase2Normal (quotient path).
//  - Else the least a in G1 then G2 with HaH != Ha^{-1}H -> kCase1(a).
//  - Else if H is normal in both -> kCase2Normal.
//  - Else the least a with aH != a^{-1}H -> kCase2NonNormal(a) plus its
//    FixedPresentationTable; if no such a exists, NoCase2Witness is thrown
//    rather than asserting impossibility.
struct CaseClassification {
  AmalgamCase kind = AmalgamCase::kCase2Normal;
  int witness_factor = 0;  // 1 or 2 when a witness element is present
  Elem witness = -1;
  int index1 = 0;
  int index2 = 0;
  bool hypotheses_hold = false;  // one index >= 3 and the other >= 2
  std::optional<FixedPresentationTable> fpt;

  bool has_witness() const { return witness >= 0; }
};

CaseClassification classify_amalgam_case(const FiniteGroup& g1, const Subgroup& h1,
                                         const FiniteGroup& g2, const Subgroup& h2);

}  // namespace freewidth

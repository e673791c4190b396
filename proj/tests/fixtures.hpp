#pragma once

#include <string>
#include <vector>

#include "freewidth/amalgam.hpp"
#include "freewidth/group.hpp"
#include "freewidth/hnn.hpp"

namespace fixtures {

using namespace freewidth;

inline std::string instance_path(const std::string& file) {
  return std::string(FREEWIDTH_INSTANCE_DIR) + "/" + file;
}

inline FiniteGroup cyclic(int n, std::string name = {}) {
  std::vector<std::vector<Elem>> mult(static_cast<std::size_t>(n), std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return FiniteGroup::validated(std::move(mult), name.empty() ? "Z" + std::to_string(n) : name);
}

inline FiniteGroup klein() {
  return FiniteGroup::validated({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, "K4");
}

// Elements e, (12), (13), (23), (123), (132); product applies the left
// factor first.
inline FiniteGroup s3() {
  return FiniteGroup::validated({{0, 1, 2, 3, 4, 5},
                                 {1, 0, 4, 5, 2, 3},
                                 {2, 5, 0, 4, 3, 1},
                                 {3, 4, 5, 0, 1, 2},
                                 {4, 3, 1, 2, 5, 0},
                                 {5, 2, 3, 1, 0, 4}},
                                "S3", {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

// Frobenius group of order 21: x^7 = y^3 = 1, y x y^-1 = x^2. Element
// (a, b) = x^a y^b is encoded as 3a + b.
inline FiniteGroup f21() {
  auto enc = [](int a, int b) { return 3 * a + b; };
  int pow2[3] = {1, 2, 4};
  std::vector<std::vector<Elem>> mult(21, std::vector<Elem>(21));
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 3; ++d)
          mult[static_cast<std::size_t>(enc(a, b))][static_cast<std::size_t>(enc(c, d))] =
              enc((a + c * pow2[b]) % 7, (b + d) % 3);
  return FiniteGroup::validated(std::move(mult), "F21");
}

inline HnnInstance z4_hnn() {
  FiniteGroup g = cyclic(4);
  Subgroup h1 = check_subgroup(g, {0, 2});
  Subgroup h2 = check_subgroup(g, {0, 2});
  SubgroupIso phi = check_iso(g, h1, g, h2, {{0, 0}, {2, 2}});
  return HnnInstance(std::move(g), std::move(h1), std::move(h2), std::move(phi), "z4hnn");
}

// Z8 with H1 = <2> and H2 = <6> identified by doubling; H1 != H2 exercises
// the two-transversal paths.
inline HnnInstance z8_hnn_mixed() {
  FiniteGroup g = cyclic(8);
  Subgroup h1 = check_subgroup(g, {0, 2, 4, 6});
  Subgroup h2 = check_subgroup(g, {0, 4});
  // phi: H1 -> H2 is not injective; use H1 = {0,4} -> H2 = {0,4}? Keep both
  // proper and isomorphic: H1 = {0,4}, H2 = {0,4} with identity map is the
  // degenerate choice; instead take H1 = {0,2,4,6} ~ Z4 and H2 must be Z4 too.
  h2 = check_subgroup(g, {0, 2, 4, 6});
  SubgroupIso phi = check_iso(g, h1, g, h2, {{0, 0}, {2, 6}, {4, 4}, {6, 2}});
  return HnnInstance(std::move(g), std::move(h1), std::move(h2), std::move(phi), "z8hnn");
}

inline AmalInstance make_amalgam(FiniteGroup g1, FiniteGroup g2, std::vector<Elem> h1m,
                                 std::vector<Elem> h2m,
                                 std::vector<std::pair<Elem, Elem>> iso_pairs,
                                 std::string name) {
  Subgroup h1 = check_subgroup(g1, std::move(h1m));
  Subgroup h2 = check_subgroup(g2, std::move(h2m));
  SubgroupIso iso = check_iso(g1, h1, g2, h2, iso_pairs);
  return AmalInstance(std::move(g1), std::move(g2), std::move(h1), std::move(h2), std::move(iso),
                      std::move(name));
}

inline AmalInstance z5z2() {
  return make_amalgam(cyclic(5), cyclic(2), {0}, {0}, {{0, 0}}, "z5z2");
}

inline AmalInstance s3k4() {
  return make_amalgam(s3(), klein(), {0, 1}, {0, 1}, {{0, 0}, {1, 1}}, "s3k4");
}

inline AmalInstance z8z4() {
  return make_amalgam(cyclic(8), cyclic(4), {0, 4}, {0, 2}, {{0, 0}, {4, 2}}, "z8z4");
}

inline AmalInstance z2z2() {
  return make_amalgam(cyclic(2), cyclic(2, "Z2a"), {0}, {0}, {{0, 0}}, "z2z2");
}

inline AmalInstance z4k4() {
  return make_amalgam(cyclic(4), klein(), {0, 2}, {0, 1}, {{0, 0}, {2, 1}}, "z4k4");
}

// Case 1 with a nontrivial amalgamated subgroup: F21 over its Z3 against Z9.
inline AmalInstance f21z9() {
  return make_amalgam(f21(), cyclic(9), {0, 1, 2}, {0, 3, 6}, {{0, 0}, {1, 3}, {2, 6}}, "f21z9");
}

}  // namespace fixtures

#include "freewidth/group.hpp"

#include <algorithm>
#include <set>

namespace freewidth {

namespace {

std::string elem_str(Elem a) { return std::to_string(a); }

}  // namespace

FiniteGroup FiniteGroup::validated(std::vector<std::vector<Elem>> mult,
                                   std::string name,
                                   std::vector<std::string> element_names) {
  const int n = static_cast<int>(mult.size());
  if (n <= 0) throw Error("NotAGroup", "empty multiplication table");
  if (n > kOrderCap)
    throw Error("OrderCapExceeded",
                "order " + std::to_string(n) + " exceeds the exhaustive-validation cap " +
                    std::to_string(kOrderCap));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mult[a].size()) != n)
      throw Error("NotAGroup", "row " + elem_str(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      Elem v = mult[a][b];
      if (v < 0 || v >= n)
        throw Error("NotAGroup", "entry [" + elem_str(a) + "][" + elem_str(b) + "] out of range");
    }
  }
  if (!element_names.empty() && static_cast<int>(element_names.size()) != n)
    throw Error("NotAGroup", "names list does not match the order");

  for (int a = 0; a < n; ++a) {
    if (mult[0][a] != a || mult[a][0] != a)
      throw Error("NotAGroup", "element 0 is not a two-sided identity at " + elem_str(a));
  }

  std::vector<Elem> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mult[a][b] == 0 && mult[b][a] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw Error("NotAGroup", "no inverse for " + elem_str(a));
  }

  // Latin square: every row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[mult[a][b]]++)
        throw Error("NotAGroup", "row " + elem_str(a) + " repeats " + elem_str(mult[a][b]));
      if (col[mult[b][a]]++)
        throw Error("NotAGroup", "column " + elem_str(a) + " repeats " + elem_str(mult[b][a]));
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw Error("NotAGroup", "associativity fails at (" + elem_str(a) + "," + elem_str(b) +
                                       "," + elem_str(c) + ")");

  FiniteGroup g;
  g.order_ = n;
  g.mult_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult_[static_cast<std::size_t>(a) * n + b] = mult[a][b];
  g.inv_ = std::move(inv);
  g.name_ = std::move(name);
  g.names_ = std::move(element_names);
  return g;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  Elem x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::string FiniteGroup::element_name(Elem a) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(a)];
  return std::to_string(a);
}

Elem FiniteGroup::element_by_name(const std::string& token) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == token) return static_cast<Elem>(i);
  return -1;
}

Subgroup check_subgroup(const FiniteGroup& g, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem m : members)
    if (m < 0 || m >= g.order())
      throw Error("NotClosed", "member " + elem_str(m) + " is not a group element");
  if (members.empty() || members[0] != 0)
    throw Error("MissingIdentity", "subgroup candidate does not contain the identity");

  Subgroup h;
  h.members = std::move(members);
  h.mask.assign(static_cast<std::size_t>(g.order()), 0);
  for (Elem m : h.members) h.mask[static_cast<std::size_t>(m)] = 1;

  for (Elem x : h.members)
    for (Elem y : h.members)
      if (!h.contains(g.mul(x, y)))
        throw Error("NotClosed", "product " + elem_str(x) + "*" + elem_str(y) + " = " +
                                     elem_str(g.mul(x, y)) + " escapes the set");

  h.index = g.order() / h.size();
  return h;
}

SubgroupIso check_iso(const FiniteGroup& ga, const Subgroup& ha,
                      const FiniteGroup& gb, const Subgroup& hb,
                      const std::vector<std::pair<Elem, Elem>>& pairs) {
  if (ha.size() != hb.size())
    throw Error("NotBijective", "subgroups have different sizes");

  SubgroupIso iso;
  iso.fwd.assign(static_cast<std::size_t>(ga.order()), -1);
  iso.bwd.assign(static_cast<std::size_t>(gb.order()), -1);

  for (auto [from, to] : pairs) {
    if (from < 0 || from >= ga.order() || !ha.contains(from))
      throw Error("NotBijective", "source " + elem_str(from) + " is outside the domain subgroup");
    if (to < 0 || to >= gb.order() || !hb.contains(to))
      throw Error("NotBijective", "target " + elem_str(to) + " is outside the codomain subgroup");
    if (iso.fwd[static_cast<std::size_t>(from)] != -1)
      throw Error("NotBijective", "source " + elem_str(from) + " mapped twice");
    if (iso.bwd[static_cast<std::size_t>(to)] != -1)
      throw Error("NotBijective", "target " + elem_str(to) + " hit twice");
    iso.fwd[static_cast<std::size_t>(from)] = to;
    iso.bwd[static_cast<std::size_t>(to)] = from;
  }
  for (Elem m : ha.members)
    if (iso.fwd[static_cast<std::size_t>(m)] == -1)
      throw Error("NotBijective", "map is not total: " + elem_str(m) + " unmapped");

  for (Elem x : ha.members)
    for (Elem y : ha.members) {
      Elem lhs = iso.map(ga.mul(x, y));
      Elem rhs = gb.mul(iso.map(x), iso.map(y));
      if (lhs != rhs)
        throw Error("NotHomomorphism", "phi(" + elem_str(x) + "*" + elem_str(y) +
                                           ") != phi(" + elem_str(x) + ")*phi(" + elem_str(y) + ")");
    }
  return iso;
}

Transversal make_transversal(const FiniteGroup& g, const Subgroup& h, CosetSide side) {
  Transversal t;
  t.side = side;
  t.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (Elem a = 0; a < g.order(); ++a) {
    if (t.coset_of[static_cast<std::size_t>(a)] != -1) continue;
    int idx = static_cast<int>(t.reps.size());
    t.reps.push_back(a);  // ascending scan: a is the least element of its coset
    for (Elem m : h.members) {
      Elem x = (side == CosetSide::kRight) ? g.mul(m, a) : g.mul(a, m);
      t.coset_of[static_cast<std::size_t>(x)] = idx;
    }
  }
  return t;
}

std::vector<Elem> double_coset(const FiniteGroup& g, const Subgroup& h, Elem a) {
  std::set<Elem> out;
  for (Elem u : h.members)
    for (Elem v : h.members) out.insert(g.mul(g.mul(u, a), v));
  return {out.begin(), out.end()};
}

bool is_normal(const FiniteGroup& g, const Subgroup& h, std::pair<Elem, Elem>* witness) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem m : h.members)
      if (!h.contains(g.mul(g.mul(a, m), g.inv(a)))) {
        if (witness) *witness = {a, m};
        return false;
      }
  return true;
}

QuotientResult make_quotient(const FiniteGroup& g, const Subgroup& h) {
  std::pair<Elem, Elem> w;
  if (!is_normal(g, h, &w))
    throw Error("NotNormal", "conjugate of " + elem_str(w.second) + " by " + elem_str(w.first) +
                                 " escapes the subgroup");

  Transversal t = make_transversal(g, h, CosetSide::kRight);
  const int q = static_cast<int>(t.reps.size());
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(q), std::vector<Elem>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          t.coset_of[static_cast<std::size_t>(g.mul(t.reps[static_cast<std::size_t>(i)],
                                                    t.reps[static_cast<std::size_t>(j)]))];

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) names.push_back(g.element_name(t.reps[static_cast<std::size_t>(i)]) + "H");

  QuotientResult out{FiniteGroup::validated(std::move(table),
                                            g.name().empty() ? "Q" : g.name() + "/H",
                                            std::move(names)),
                     {}};
  out.map.resize(static_cast<std::size_t>(g.order()));
  for (Elem a = 0; a < g.order(); ++a) out.map[static_cast<std::size_t>(a)] = t.coset_of[static_cast<std::size_t>(a)];
  return out;
}

FixedPresentationTable make_fixed_presentation(const FiniteGroup& g, const Subgroup& h, Elem a) {
  FixedPresentationTable fpt;
  fpt.a = a;
  for (Elem x : double_coset(g, h, a)) {
    Elem xi = g.inv(x);
    if (xi == x) {
      fpt.excluded.push_back(x);
      continue;
    }
    if (xi < x) continue;  // handled when xi was visited
    bool found = false;
    for (Elem u : h.members) {
      for (Elem v : h.members) {
        if (g.mul(g.mul(u, a), v) == x) {
          fpt.entries[x] = {u, +1, v};
          fpt.entries[xi] = {g.inv(v), -1, g.inv(u)};
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found)
      throw Error("OrderTwoInDoubleCoset",
                  "element " + elem_str(x) + " of HaH admits no presentation u*a*u'");
  }
  return fpt;
}

const char* to_string(AmalgamCase c) {
  switch (c) {
    case AmalgamCase::kCase1: return "case1";
    case AmalgamCase::kCase2Normal: return "case2-normal";
    case AmalgamCase::kCase2NonNormal: return "case2-nonnormal";
  }
  return "?";
}

namespace {

// Least element with HaH != Ha^{-1}H, factor 1 scanned before factor 2.
bool find_double_coset_witness(const FiniteGroup& g, const Subgroup& h, Elem* out) {
  for (Elem a = 0; a < g.order(); ++a) {
    if (double_coset(g, h, a) != double_coset(g, h, g.inv(a))) {
      *out = a;
      return true;
    }
  }
  return false;
}

bool find_left_coset_witness(const FiniteGroup& g, const Subgroup& h, Elem* out) {
  for (Elem a = 0; a < g.order(); ++a) {
    std::set<Elem> aH, aiH;
    for (Elem m : h.members) {
      aH.insert(g.mul(a, m));
      aiH.insert(g.mul(g.inv(a), m));
    }
    if (aH != aiH) {
      *out = a;
      return true;
    }
  }
  return false;
}

}  // namespace

CaseClassification classify_amalgam_case(const FiniteGroup& g1, const Subgroup& h1,
                                         const FiniteGroup& g2, const Subgroup& h2) {
  CaseClassification cls;
  cls.index1 = h1.index;
  cls.index2 = h2.index;
  cls.hypotheses_hold = std::max(cls.index1, cls.index2) >= 3 && std::min(cls.index1, cls.index2) >= 2;

  const bool normal1 = is_normal(g1, h1);
  const bool normal2 = is_normal(g2, h2);

  // A nontrivial subgroup normal on both sides takes the quotient route,
  // even when a double-coset witness exists.
  if (!h1.trivial() && normal1 && normal2) {
    cls.kind = AmalgamCase::kCase2Normal;
    return cls;
  }

  Elem a = -1;
  if (find_double_coset_witness(g1, h1, &a)) {
    cls.kind = AmalgamCase::kCase1;
    cls.witness_factor = 1;
    cls.witness = a;
    return cls;
  }
  if (find_double_coset_witness(g2, h2, &a)) {
    cls.kind = AmalgamCase::kCase1;
    cls.witness_factor = 2;
    cls.witness = a;
    return cls;
  }

  if (normal1 && normal2) {
    cls.kind = AmalgamCase::kCase2Normal;
    return cls;
  }

  if (find_left_coset_witness(g1, h1, &a)) {
    cls.kind = AmalgamCase::kCase2NonNormal;
    cls.witness_factor = 1;
    cls.witness = a;
    cls.fpt = make_fixed_presentation(g1, h1, a);
    return cls;
  }
  if (find_left_coset_witness(g2, h2, &a)) {
    cls.kind = AmalgamCase::kCase2NonNormal;
    cls.witness_factor = 2;
    cls.witness = a;
    cls.fpt = make_fixed_presentation(g2, h2, a);
    return cls;
  }

  throw Error("NoCase2Witness",
              "H is non-normal yet no element separates aH from a^-1H; instance is outside "
              "the supported territory");
}

}  // namespace freewidth

#include "ordkit/gates.hpp"

namespace ordkit {

bool in_interval(const FiniteDistributiveLattice& L, int x, int a, int b) {
  int lo = L.meet(a, b);
  int hi = L.join(a, b);
  return L.leq(lo, x) && L.leq(x, hi);
}

int gate_projection(const FiniteDistributiveLattice& L, int x,
                    const ConvexSet& C) {
  if (C.empty()) throw Error(ErrorCode::EmptySet, "projection onto empty set");
  L.require_element(x);
  int found = -1;
  bool unique = true;
  for_each_bit(C.members, [&](int c) {
    bool gate_point = true;
    for_each_bit(C.members, [&](int y) {
      if (!in_interval(L, c, x, y)) gate_point = false;
    });
    if (gate_point) {
      if (found >= 0) unique = false;
      found = c;
    }
  });
  if (found < 0)
    throw Error(ErrorCode::NoGatePoint, "no gate point; input not convex?", {x});
  if (!unique)
    throw Error(ErrorCode::NoGatePoint, "gate point not unique; input not convex?",
                {x, found});
  return found;
}

Gate gate_pair(const FiniteDistributiveLattice& L, const ConvexSet& A,
               const ConvexSet& B) {
  if (A.empty() || B.empty())
    throw Error(ErrorCode::EmptySet, "gate between empty sets");
  if (A.members & B.members)
    throw Error(ErrorCode::NotDisjoint, "gate needs disjoint sets",
                {first_bit(A.members & B.members)});

  // Canonical seed: inf(A), which lies in A since convex sets are
  // meet-closed.
  const FiniteSemilattice& base = L.base();
  int a = base.meet_of(A.members);
  if (!contains(A.members, a))
    throw Error(ErrorCode::NoGatePoint, "convex set not meet-closed");

  int b = gate_projection(L, a, B);
  const int limit = popcount(A.members) + popcount(B.members) + 2;
  for (int round = 0; round < limit; ++round) {
    int a2 = gate_projection(L, b, A);
    int b2 = gate_projection(L, a2, B);
    if (a2 == a && b2 == b) {
      Gate g{a, b, A.members, B.members};
      assert_gate(L, g);
      return g;
    }
    a = a2;
    b = b2;
  }
  throw Error(ErrorCode::NonConvergence,
              "gate alternation failed to stabilize", {a, b});
}

void assert_gate(const FiniteDistributiveLattice& L, const Gate& g) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::LawViolation, "gate postcondition failed: " + what,
                {g.a, g.b});
  };
  if (!contains(g.A, g.a)) fail("a not in A");
  if (!contains(g.B, g.b)) fail("b not in B");

  Subset interval_members = 0;
  for (int x = 0; x < L.size(); ++x)
    if (in_interval(L, x, g.a, g.b)) interval_members |= bit(x);
  if ((g.A & interval_members) != bit(g.a)) fail("A n [a,b] != {a}");
  if ((g.B & interval_members) != bit(g.b)) fail("B n [a,b] != {b}");

  bool ok = true;
  for_each_bit(g.A, [&](int x) {
    if (!in_interval(L, g.a, x, g.b)) ok = false;
  });
  if (!ok) fail("a not between some x in A and b");
  for_each_bit(g.B, [&](int y) {
    if (!in_interval(L, g.b, g.a, y)) ok = false;
  });
  if (!ok) fail("b not between a and some y in B");
}

HellyWitness helly_witness(const FiniteDistributiveLattice& L,
                           const std::vector<ConvexSet>& family) {
  if (family.empty())
    throw Error(ErrorCode::EmptySet, "empty family");
  for (const ConvexSet& C : family)
    if (C.empty())
      throw Error(ErrorCode::EmptySet, "family contains an empty set");

  Subset total = full_set(L.size());
  for (const ConvexSet& C : family) total &= C.members;

  HellyWitness w;
  if (total != 0) {
    w.all_intersect = true;
    w.common_point = first_bit(total);
    return w;
  }
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if ((family[i].members & family[j].members) == 0) {
        w.disjoint_pair = {static_cast<int>(i), static_cast<int>(j)};
        return w;
      }
  throw Error(ErrorCode::FamilyViolation,
              "empty total intersection but no disjoint pair; input not convex?");
}

}  // namespace ordkit

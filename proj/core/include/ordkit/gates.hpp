#pragma once

#include <optional>
#include <vector>

#include "ordkit/lattice.hpp"

namespace ordkit {

// A gate between two disjoint closed convex sets A, B: a in A, b in B with
//   A n [a,b] = {a},   B n [a,b] = {b},
//   a in [x,b] for every x in A,   b in [a,y] for every y in B.
struct Gate {
  int a = -1;
  int b = -1;
  Subset A = 0;
  Subset B = 0;
};

// Interval membership x in [a,b] = {z : a^b <= z <= avb}.
bool in_interval(const FiniteDistributiveLattice& L, int x, int a, int b);

// The unique c in C with c in [x,y] for every y in C, found by exhaustive
// search with uniqueness asserted.  NoGatePoint signals non-convex input or
// a bug; for convex C it equals (x v inf C) ^ sup C, which the tests check
// against this search.
int gate_projection(const FiniteDistributiveLattice& L, int x, const ConvexSet& C);

// Gate between disjoint nonempty convex sets, computed by alternating
// projections from the canonical seed inf(A).  Errors: NotDisjoint,
// NonConvergence (bounded by |A|+|B| rounds; cannot trigger on convex
// input).  All gate postconditions are asserted before returning.
Gate gate_pair(const FiniteDistributiveLattice& L, const ConvexSet& A,
               const ConvexSet& B);

// Throws LawViolation unless (a,b) satisfies every gate postcondition for
// the pair (A, B).
void assert_gate(const FiniteDistributiveLattice& L, const Gate& g);

struct HellyWitness {
  bool all_intersect = false;
  int common_point = -1;                    // when all_intersect
  std::pair<int, int> disjoint_pair{-1, -1};  // indices into the family
};

// For a family of nonempty convex sets: either a common point, or a
// disjoint pair when the total intersection is empty.  FamilyViolation
// (empty intersection but no disjoint pair) cannot occur for convex sets.
HellyWitness helly_witness(const FiniteDistributiveLattice& L,
                           const std::vector<ConvexSet>& family);

}  // namespace ordkit

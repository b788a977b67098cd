#pragma once

#include <vector>

#include "ordkit/chain_product.hpp"
#include "ordkit/gates.hpp"
#include "ordkit/rational.hpp"

namespace ordkit {

// A total rational-valued function on the members of a chain-product
// sublattice.
struct RealFunction {
  const ChainProductSublattice* host = nullptr;
  std::vector<Rational> values;

  const Rational& operator()(int x) const { return values[x]; }
};

// Prime filters of a finite chain 0..arity-1 are exactly the proper
// nonempty up-sets [c, ->) for c >= 1; each is identified by its cut c.
std::vector<int> prime_filters_of_chain(int arity);

// The lift of a chain prime filter along coordinate i:
// {x in K : pi_i(x) >= cut}.  Proper nonempty lifts are prime filters of K
// (asserted); empty or total lifts come back flagged degenerate.
struct LiftedPrime {
  int coordinate = -1;
  int cut = -1;
  Subset members = 0;
  bool degenerate = false;
};

LiftedPrime lift_prime(const ChainProductSublattice& K, int i, int cut);

// One (p, q) pair of chain primes with nested lifts, its gate and verdict.
// Gates are taken between K \ p~ and q~ (the disjoint ideal/filter pair;
// for p = q this is the clopen partition of a jump).  Gates of one pair all
// share their i-th coordinates but carry different function values, so the
// pair leaps when ANY of its gates has |f(a) - f(b)| > epsilon.  The
// recorded witness is deterministic: the first leaping gate in member
// order, or the inf-seeded gate when the pair does not leap.
struct LeapPair {
  int coordinate = -1;
  int cut_p = -1;
  int cut_q = -1;
  Subset lift_p = 0;
  Subset lift_q = 0;
  Gate gate;
  Rational gap;          // |f(a) - f(b)|
  bool leaps = false;    // gap > epsilon
  bool is_jump = false;  // lift_p == lift_q
};

// Errors: PreconditionViolation unless lift_q <= lift_p;
// DegenerateFilterPair when either lift is empty or all of K.
LeapPair leap_at(const RealFunction& f, const Rational& epsilon, int i,
                 int cut_p, int cut_q);

// The maximal number of nested leaps along coordinate i, together with the
// lexicographically-first witnessing chain.  The chain is the longest path
// in the strict-nesting precedence order on leaping pairs, constrained to
// pass through every epsilon-jump node (pairs with equal lifts); jump nodes
// are strictly nested among themselves, so a valid chain always exists and
// JumpChainInfeasible cannot trigger.
struct CoordinateChain {
  int coordinate = -1;
  int m = 0;
  std::vector<LeapPair> chain;
  std::vector<int> jump_cuts;  // canonical cuts of the mandatory jump nodes
};

CoordinateChain max_leap_count(const RealFunction& f, const Rational& epsilon,
                               int i);

// p(1) = 3, p(k+1) = 8 p(k) + 6.
Rational p_sequence(int k);

struct Cube {
  Subset members = 0;
  std::vector<std::pair<int, int>> box;  // per-coordinate [lo, hi] values
};

struct LeapLedgerN {
  Rational epsilon;
  std::vector<CoordinateChain> per_coordinate;
  std::vector<std::vector<std::pair<int, int>>> segments;  // per coordinate
  std::vector<Cube> cubes;
  std::vector<Rational> pn;  // p(1) .. p(n)
};

// Chains for every coordinate plus the cube cover cut at the gate
// coordinates.  Asserts that the cubes partition K and that every cube is
// included in or disjoint from each K \ p~ and q~ of every chain pair
// (CoverViolation otherwise, which certified inputs cannot produce).
LeapLedgerN compute_leap_ledger(const RealFunction& f, const Rational& epsilon);

// Just the cubes of compute_leap_ledger.
std::vector<Cube> build_cover(const RealFunction& f, const Rational& epsilon);

// max f - min f over a nonempty member subset.
Rational oscillation(const RealFunction& f, Subset C);

struct OscCubeReport {
  Cube cube;
  Rational osc;
  Rational slack;  // bound - osc
};

struct OscReport {
  Rational bound;  // p(n) * epsilon
  std::vector<OscCubeReport> cubes;
  bool ok = true;
};

// Oscillation bound over the cover: osc(f, C_k) <= p(n) epsilon for every
// cube.  BoundViolation cannot occur; the report carries per-cube slack.
OscReport verify_osc_bound(const RealFunction& f, const Rational& epsilon);

// No gap longer than epsilon inside the value range of f on [a,b] n K.
// Callers are responsible for the "a, b share a cube" precondition.
bool range_gap_check(const RealFunction& f, const Rational& epsilon, int a,
                     int b);

// Emptiness transfer: if no member of [a,b] n K has pi_i strictly between
// pi_i(a) and pi_i(b), then no member of K does.  Returns the implication.
bool verify_interval_emptiness(const ChainProductSublattice& K, int i, int a,
                               int b);

struct GateLawReport {
  Gate gate;
  int alpha = -1;  // pi_i(a)
  int beta = -1;   // pi_i(b)
  bool ok = false;
};

// For strictly nested proper lifts p~ > q~: computes the gate between
// K \ p~ and q~ and asserts pi_i(a) < pi_i(b), the complement/filter
// characterizations K \ p~ = {pi_i <= pi_i(a)} and q~ = {pi_i >= pi_i(b)},
// the empty middle band, and the coordinate transfer law (if
// pi_i(c) >= pi_i(b) and pi_j(a) < pi_j(b) then pi_j(c) >= pi_j(b)).
// Throws LawViolation with a witness on any failure.
GateLawReport verify_gate_coordinate_laws(const ChainProductSublattice& K,
                                          int i, int cut_p, int cut_q);

struct FiberLeapWitness {
  int a = -1;
  int b = -1;
  int width = 0;  // 1 means adjacent in the fiber
};

// For u, v in one i-fiber with pi_i(u) < pi_i(v) and |f(u)-f(v)| > epsilon:
// scans the fiber chain inside [u,v] by increasing width (adjacent pairs
// first) for a pair with |f(a)-f(b)| > epsilon and certifies it as a gate
// between {pi_i <= pi_i(a)} and {pi_i >= pi_i(b)}.  The pair (u,v) itself
// qualifies at full width, so NoLeapFound cannot trigger under the
// preconditions.
FiberLeapWitness fiber_leap_extraction(const RealFunction& f,
                                       const Rational& epsilon, int u, int v,
                                       int i);

struct SldClass {
  std::vector<int> key;        // (m_1, ..., m_n)
  std::vector<int> members;    // indices into F
  Rational max_neighborhood_diameter;
};

struct SldReport {
  std::vector<SldClass> classes;
  long long neighborhood_checks = 0;
  int violations = 0;  // oscillation-bound failures; must stay 0
};

// Partitions F by leap signature (m_1..m_n).  Within a class, every g that
// leaps past epsilon on all of f's gate witnesses must satisfy f's cube
// oscillation bound; reports class sizes and the sup-distance diameter of
// those witness neighborhoods.
SldReport sld_partition(const std::vector<RealFunction>& F,
                        const Rational& epsilon);

}  // namespace ordkit

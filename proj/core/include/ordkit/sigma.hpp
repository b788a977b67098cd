#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordkit/duality.hpp"
#include "ordkit/semilattice.hpp"

namespace ordkit {

// A total {0,1}-valued function on the elements of a host semilattice,
// packed as a bit mask (bit x = f(x)).
struct BinaryFunction {
  const FiniteSemilattice* host = nullptr;
  Subset values = 0;

  int operator()(int x) const { return contains(values, x) ? 1 : 0; }
  bool constant() const {
    return values == 0 || values == full_set(host->size());
  }
};

// Everything the level construction produces for one binary function.
//
// levels[i] is L_i(f) as a mask over dual indices: L_0 is the subsemilattice
// of DK generated under the product by the jump points of f (seeded with
// Infinity, mirroring the bootstrap L_{-1} = {Infinity}); L_i adds every
// relative-jump point with respect to a member of L_{i-1}, with the
// identification Infinity -> 0 (a relative jump with respect to 0 is a
// plain jump).  The chain stabilizes within |DK| steps.
struct JumpLedger {
  Subset jump_points = 0;        // dual-index mask, Infinity excluded
  std::vector<Subset> levels;    // L_0 .. L_{n(f)}, dual-index masks
  int n_of_f = 0;                // first n with L_{n+1} = L_n
  std::vector<int> signature;    // s(f)(i) = |L_i(f)|
  Subset support = 0;            // M_f = L(f) u union of predecessors, in K

  Subset top_level() const { return levels.back(); }
};

// The dual map of an inclusion L <= DK: x -> {p in L \ {Infinity} : p <= x},
// a filter of L.  Fibers partition K; each fiber's minimum lies in L (or is
// the zero of K for the empty-filter fiber), and the assignment preserves
// meets.  Both facts are verified at construction.
struct QuotientMap {
  const FiniteSemilattice* source = nullptr;
  Subset sub = 0;                    // L as a dual-index mask, Infinity in L
  std::vector<Subset> assignment;    // x -> filter of L (dual-index mask)
  std::vector<int> fiber_of;         // x -> fiber id
  std::vector<Subset> fibers;        // fiber id -> K-element mask
  FilterSpace target;                // filter space of L as a semilattice
};

struct ModestReport {
  bool modest = true;  // every finite semilattice is modest
  std::vector<int> predecessor_counts;
  int max_predecessors = 0;
};

// Predecessor-count report; finiteness is automatic at this scale, the
// report doubles as generator metadata for tree inputs.
ModestReport is_modest(const FiniteSemilattice& K);

// One-point compactification of a finite rooted tree (parents[i] = parent
// index, root marked with -1): elements are the tree nodes plus an adjoined
// Infinity, meet(s,t) = the deeper of s,t when comparable and Infinity
// otherwise.  Infinity is the semilattice minimum, the root the maximum.
// Throws MalformedTree on cycles, multiple roots or bad parent indices.
FiniteSemilattice tree_compactification(const std::vector<int>& parents);

// f has a jump at p (a positive element, given as a dual index) iff f(p)
// differs from f on every immediate predecessor of p.
bool has_jump(const BinaryFunction& f, const DualSemilattice& D, int dp);

// Relative jump at p with respect to q, a K element; q = zero of K means a
// plain jump.  Requires q < p otherwise (NotBelow).
bool has_relative_jump(const BinaryFunction& f, const DualSemilattice& D,
                       int dp, int q);

// For nonconstant f: a minimal element p with f(p) != f(0), certified to be
// a jump point.  nullopt flags a constant function.
std::optional<int> jump_existence_check(const BinaryFunction& f);

JumpLedger compute_ledger(const BinaryFunction& f, const DualSemilattice& D);

// Builds the dual map of L <= DK.  L must be product-closed and contain
// Infinity (NotSubsemilattice otherwise).
QuotientMap quotient_map(const FiniteSemilattice& K, const DualSemilattice& D,
                         Subset L);

struct FiberConstancyReport {
  bool ok = true;
  Subset failing_fiber = 0;  // nonzero only on failure (a theorem violation)
};

FiberConstancyReport verify_fiber_constancy(const BinaryFunction& f,
                                            const DualSemilattice& D);

struct DiscretenessReport {
  long long function_count = 0;
  int signature_classes = 0;
  int buckets = 0;              // distinct (signature, M_f, f|M_f) keys
  int max_class_size = 0;
  bool jump_existence_ok = true;        // every nonconstant f has a jump
  bool stabilization_ok = true;         // n(f) + 1 <= |DK| always
  bool fiber_constancy_ok = true;
  bool discreteness_ok = true;          // s(f)=s(g), f|Mf=g|Mf  =>  f=g
  std::optional<std::pair<Subset, Subset>> violation;  // offending (f, g)
};

// Exhaustive audit over all 2^|K| binary functions.  cap bounds |K|
// (SizeLimit beyond); the default matches 2^|K| <= 2^16.
DiscretenessReport verify_discreteness(const FiniteSemilattice& K,
                                       int cap = 16);

enum class MinimalityStatus { Certified, Unchecked };

struct MinimalQuotientResult {
  QuotientMap quotient;
  MinimalityStatus status = MinimalityStatus::Unchecked;
  // Set only if some coarser congruence also factors f — a theorem
  // violation, reported rather than silently accepted.
  std::optional<std::vector<int>> smaller_partition;
};

// The L(f)-quotient together with a brute-force minimality certificate:
// no meet-congruence of K with fewer classes keeps f constant on classes.
// Congruences are enumerated exhaustively for |K| <= 8 and the certificate
// is marked Unchecked above that bound.
MinimalQuotientResult minimal_quotient(const BinaryFunction& f,
                                       const DualSemilattice& D);

// Deterministic-in-seed corpus generator: a random poset by cover
// insertion, forced minimum, meet-closure inside the ideal completion,
// then certification.  SizeOverflow if the closure exceeds max_elements.
FiniteSemilattice random_semilattice(std::uint64_t seed, int size,
                                     int max_elements = 24);

}  // namespace ordkit

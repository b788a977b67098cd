#pragma once

#include <vector>

#include "ordkit/semilattice.hpp"

namespace ordkit {

// A finite distributive lattice: a certified meet-semilattice plus a total
// join table and a maximum.  Certification checks the join axioms, both
// absorption laws, distributivity and the maximum exhaustively.
class FiniteDistributiveLattice {
 public:
  const FiniteSemilattice& base() const { return base_; }
  int size() const { return base_.size(); }
  int zero() const { return base_.zero(); }
  int one() const { return one_; }

  int meet(int a, int b) const { return base_.meet(a, b); }
  int join(int a, int b) const { return join_[a * size() + b]; }
  bool leq(int a, int b) const { return base_.leq(a, b); }
  Subset up(int x) const { return base_.up(x); }
  Subset down(int x) const { return base_.down(x); }
  const std::string& name(int i) const { return base_.name(i); }
  void require_element(int x) const { base_.require_element(x); }

  int join_of(Subset s) const;

 private:
  friend FiniteDistributiveLattice validate_lattice(FiniteSemilattice,
                                                    const std::vector<int>&, int);

  FiniteSemilattice base_;
  std::vector<int> join_;
  int one_ = 0;
};

// Certifies base + join table + maximum.  Errors: NotCommutative /
// NotAssociative / NotIdempotent (join table), AbsorptionFailure,
// NotDistributive, NoMaximum — each with a witnessing tuple.
FiniteDistributiveLattice validate_lattice(FiniteSemilattice base,
                                           const std::vector<int>& join_table,
                                           int one);

// Builds meet and join tables from a covering relation (joins computed as
// least upper bounds; NoJoin when one is missing) and certifies.
FiniteDistributiveLattice lattice_from_covers(
    int n, const std::vector<std::pair<int, int>>& covers,
    std::vector<std::string> names = {});

// True iff F is a nonempty filter whose complement is a nonempty ideal.
// Non-filters just return false.
bool is_prime_filter(const FiniteDistributiveLattice& L, Subset f);

// Join-irreducible elements: x != 0 with x = a v b only when x is a or b.
// Birkhoff: in a finite distributive lattice these are in bijection with
// the prime filters; the library cross-checks the counts.
Subset join_irreducibles(const FiniteDistributiveLattice& L);

std::vector<FilterObject> prime_filters(const FiniteDistributiveLattice& L);

// A convex subset together with its ideal/filter witness pair
// (members = ideal & filter).
struct ConvexSet {
  const FiniteSemilattice* host = nullptr;
  Subset members = 0;
  Subset witness_ideal = 0;
  Subset witness_filter = 0;

  bool empty() const { return members == 0; }
};

// The interval [a,b] = {x : a^b <= x <= avb}, witnessed by the principal
// ideal of avb and the principal filter of a^b.
ConvexSet interval(const FiniteDistributiveLattice& L, int a, int b);

// Certifies an arbitrary witness pair.
ConvexSet make_convex(const FiniteDistributiveLattice& L, Subset ideal,
                      Subset filter);

}  // namespace ordkit

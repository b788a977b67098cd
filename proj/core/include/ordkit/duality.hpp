#pragma once

#include <string>
#include <vector>

#include "ordkit/lattice.hpp"
#include "ordkit/semilattice.hpp"

namespace ordkit {

// The dual semilattice DK of a finite K: all positive elements of K plus an
// artificial Infinity that stands for the empty filter.  The product
// p.q is sup{p,q} in K, or Infinity when the pair is unbounded; Infinity
// absorbs.  Under the product order Infinity is the minimum, so DK is
// itself a certified FiniteSemilattice with Infinity as its zero.
//
// Two views are materialized and cross-validated at construction: the
// element-with-product-table view and the family-of-principal-filters view
// ([p) n [q) = [p.q) with Infinity <-> empty set).
class DualSemilattice {
 public:
  static constexpr int kInfinity = 0;  // dual index of the Infinity marker

  const FiniteSemilattice& source() const { return *source_; }
  const FiniteSemilattice& semilattice() const { return sl_; }

  int size() const { return sl_.size(); }
  int product(int dp, int dq) const { return sl_.meet(dp, dq); }
  bool is_infinity(int dp) const { return dp == kInfinity; }

  // Dual index <-> source element (positive elements only).
  int to_source(int dp) const { return to_source_[dp]; }
  int from_source(int x) const { return from_source_[x]; }

  // Positive members of a dual-index mask, as a source-element mask.
  Subset source_members(Subset dual_mask) const;

 private:
  friend DualSemilattice dual_semilattice(const FiniteSemilattice& K);

  const FiniteSemilattice* source_ = nullptr;
  FiniteSemilattice sl_;
  std::vector<int> to_source_;
  std::vector<int> from_source_;
};

DualSemilattice dual_semilattice(const FiniteSemilattice& K);

// The space K(S) of all filters of S ordered by inclusion, with
// intersection as meet; certified as a FiniteSemilattice whose zero is the
// empty filter.
struct FilterSpace {
  const FiniteSemilattice* source = nullptr;
  std::vector<FilterObject> points;  // canonical order; masks over S
  FiniteSemilattice sl;              // inclusion order, meet = intersection

  int index_of(Subset members) const;
};

FilterSpace filter_space(const FiniteSemilattice& S);

// hat(x) = the set of positive compact p with p <= x, as a filter of DK.
// Membership "x in [p)" is exactly p <= x; Infinity never belongs to a hat.
FilterObject hat_embedding(const DualSemilattice& D, int x);

// Report of the canonical-isomorphism check K ~ K(DK).  The dual points are
// the filters of DK that avoid Infinity: a filter of DK containing the
// minimum Infinity is the total filter, and Infinity encodes the empty
// clopen filter, so it never occurs inside a dual point.  hat must be a
// bijection from K onto exactly those, and meet-preserving.
struct RoundtripReport {
  bool ok = false;
  std::string failure;              // first failure witness, empty when ok
  std::vector<int> hat_point;       // K element -> index into space.points
  int dual_point_count = 0;         // number of Infinity-avoiding filters
  int excluded_filter_count = 0;    // filters of DK containing Infinity
  FilterSpace space;                // filter space of DK
};

RoundtripReport verify_duality_roundtrip(const FiniteSemilattice& K);

// Smallest-index compact p with p <= a and not p <= b.  Throws NotSeparable
// when a <= b.  Every element of a finite semilattice is compact; the
// corpus-wide consistency of that fact with is_compact_element is a test.
int separate_by_compact(const FiniteSemilattice& K, int a, int b);

// First prime filter, in canonical enumeration order, containing a and not
// b.  Throws NotSeparable when a <= b.
FilterObject separate_by_prime_filter(const FiniteDistributiveLattice& L,
                                      int a, int b);

}  // namespace ordkit

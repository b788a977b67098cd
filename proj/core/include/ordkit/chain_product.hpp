#pragma once

#include <vector>

#include "ordkit/lattice.hpp"

namespace ordkit {

// A sublattice K of a finite product of chains L_1 x ... x L_n.  Chains are
// 0..arity-1; members are coordinate tuples, canonically indexed in
// lexicographic order.  Closure under componentwise min and max is checked
// at certification and the induced structure is certified as a
// FiniteDistributiveLattice.
class ChainProductSublattice {
 public:
  int coords() const { return static_cast<int>(arities_.size()); }
  int arity(int i) const { return arities_[i]; }
  int size() const { return static_cast<int>(members_.size()); }

  const std::vector<int>& tuple(int x) const { return members_[x]; }
  int pi(int x, int i) const { return members_[x][i]; }
  bool same_fiber(int x, int y, int i) const;  // rho_i(x) == rho_i(y)

  int index_of(const std::vector<int>& tuple) const;  // -1 when absent

  const FiniteDistributiveLattice& lattice() const { return lattice_; }
  int meet(int a, int b) const { return lattice_.meet(a, b); }
  int join(int a, int b) const { return lattice_.join(a, b); }
  bool leq(int a, int b) const { return lattice_.leq(a, b); }

  // {x in K : pi_i(x) >= cut} as a member mask.
  Subset coordinate_filter(int i, int cut) const;
  // {x in K : lo <= pi_i(x) <= hi}.
  Subset coordinate_band(int i, int lo, int hi) const;

  std::string member_name(int x) const;

 private:
  friend ChainProductSublattice validate_sublattice(
      std::vector<int> arities, std::vector<std::vector<int>> members);

  std::vector<int> arities_;
  std::vector<std::vector<int>> members_;
  FiniteDistributiveLattice lattice_;
};

// Certifies chains + members.  Errors: NotMeetClosed / NotJoinClosed with a
// witness pair, CertificationError for malformed tuples or duplicates.
ChainProductSublattice validate_sublattice(std::vector<int> arities,
                                           std::vector<std::vector<int>> members);

// The full grid on the given chains.
ChainProductSublattice full_grid(std::vector<int> arities);

// Deterministic random sublattice: a random subset of the grid closed under
// min/max together with the grid's bottom and top.
ChainProductSublattice random_sublattice(std::uint64_t seed,
                                         std::vector<int> arities,
                                         int target_size);

}  // namespace ordkit

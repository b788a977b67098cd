#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordkit/errors.hpp"
#include "ordkit/subsets.hpp"

namespace ordkit {

// A finite meet-semilattice: an indexed element set, a total meet table and
// a minimum element.  The partial order is always derived from the table
// (x <= y iff meet(x,y) = x) and never stored independently, so the table is
// the single source of truth.
//
// Instances are immutable once certified by validate_semilattice /
// semilattice_from_covers; every operation on them is pure.
class FiniteSemilattice {
 public:
  int size() const { return n_; }
  int zero() const { return zero_; }

  int meet(int a, int b) const { return table_[a * n_ + b]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  // Up-set {y : x <= y} and down-set {y : y <= x} as subset masks.
  Subset up(int x) const { return up_[x]; }
  Subset down(int x) const { return down_[x]; }

  // Immediate predecessors x^- = {y < x : nothing strictly between},
  // precomputed at certification.
  Subset preds(int x) const { return preds_[x]; }

  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  // Meet of a nonempty subset.
  int meet_of(Subset s) const;

  void require_element(int x) const {
    if (x < 0 || x >= n_)
      throw Error(ErrorCode::UnknownElement,
                  "element index " + std::to_string(x) + " out of range", {x});
  }

  bool same_tables(const FiniteSemilattice& other) const {
    return n_ == other.n_ && zero_ == other.zero_ && table_ == other.table_;
  }

 private:
  friend FiniteSemilattice validate_semilattice(int, const std::vector<int>&,
                                                int, std::vector<std::string>);

  int n_ = 0;
  int zero_ = 0;
  std::vector<int> table_;
  std::vector<std::string> names_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<Subset> preds_;
};

// Certifies a candidate (element count, row-major meet table, minimum).
// All axioms are checked exhaustively: commutativity, associativity,
// idempotence, and absorption of the minimum.  Throws Error with a
// witnessing tuple on the first violation found (NotCommutative,
// NotAssociative, NotIdempotent, NoMinimum).  Names default to e0..e{n-1}.
FiniteSemilattice validate_semilattice(int n, const std::vector<int>& meet_table,
                                       int zero,
                                       std::vector<std::string> names = {});

// Builds the meet table from a covering (Hasse) relation and certifies it.
// Covers are pairs (x, y) meaning x is covered by y (x < y, nothing between).
// Throws NoMeet when some pair has no greatest lower bound and NoMinimum
// when the resulting order has no least element.
FiniteSemilattice semilattice_from_covers(
    int n, const std::vector<std::pair<int, int>>& covers,
    std::vector<std::string> names = {});

// p^-: all x < p with no y strictly between.
Subset immediate_predecessors(const FiniteSemilattice& K, int p);

// Covering pairs of the derived order, in lexicographic (lower, upper) order.
std::vector<std::pair<int, int>> cover_relation(const FiniteSemilattice& K);

// Least common upper bound of {p, q}, or nullopt when the pair has no upper
// bound at all.  When the upper-bound set is nonempty its minimum exists
// because upper-bound sets are meet-closed.
std::optional<int> sup_of_pair(const FiniteSemilattice& K, int p, int q);

// Supremum of an arbitrary subset (nullopt for unbounded; zero for empty).
std::optional<int> sup_of_subset(const FiniteSemilattice& K, Subset s);

// Literal compactness check: every subset A with sup A = p must have a
// finite A0 with sup A0 = p.  Quantification is restricted to antichains,
// which is sound because sup A equals the sup of the maximal elements of A.
// Always true at finite scale; the loop exists to keep the implementation
// definition-faithful.
bool is_compact_element(const FiniteSemilattice& K, int p);

// A subset certified as a filter of its host, with its classification.
// The empty set is a filter.  In a finite semilattice every nonempty filter
// is principal: it is meet-closed, so it contains its own minimum.
struct FilterObject {
  const FiniteSemilattice* host = nullptr;
  Subset members = 0;
  bool is_principal = false;      // nonempty filters always are
  int vertex = -1;                // minimum of the filter when principal
  bool is_prime = false;          // nonempty with a nonempty ideal complement
  bool is_clopen = true;          // every subset is clopen in the finite model

  bool empty() const { return members == 0; }
};

// The filter condition, verbatim: for all a, b in F, every x with
// meet(a,b) <= x lies in F.  Used directly by tests as the brute-force
// oracle and by enumerate_filters as the certificate.
bool is_filter(const FiniteSemilattice& K, Subset f);

// Downward closed and closed under existing binary sups.  In a lattice this
// is the usual ideal notion (filter of the reversed lattice).
bool is_ideal(const FiniteSemilattice& K, Subset s);

// All filters of K: the empty filter plus the principal filter of every
// element, each tagged.  Order is canonical: empty first, then by vertex
// index.  Agrees with the brute-force subset scan.
std::vector<FilterObject> enumerate_filters(const FiniteSemilattice& K);

FilterObject make_filter(const FiniteSemilattice& K, Subset members);

}  // namespace ordkit

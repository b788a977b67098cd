#pragma once

#include <cstdint>
#include <vector>

#include "ordkit/semilattice.hpp"

namespace ordkit {

// Corpus builders for the verification sweeps.

// All labeled posets on n points, each as a vector of down-set masks
// (down[i] includes i itself).  Enumerated by orienting every unordered
// pair three ways and keeping the transitive, antisymmetric outcomes.
std::vector<std::vector<Subset>> all_labeled_posets(int n);

// All labeled meet-semilattices on exactly n elements, certified.
// A poset qualifies when it has a least element and every pair of elements
// has a greatest lower bound.
std::vector<FiniteSemilattice> all_semilattices(int n);

// All unlabeled rooted trees on n nodes as parent vectors (root first,
// parent[0] = -1), via Beyer-Hedetniemi level-sequence enumeration.
std::vector<std::vector<int>> all_rooted_trees(int n);

// Deterministic random rooted tree on n nodes.
std::vector<int> random_tree(std::uint64_t seed, int n);

}  // namespace ordkit

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordkit/chain_product.hpp"
#include "ordkit/semilattice.hpp"

namespace ordkit::sweeps {

// One verification sweep outcome: a pass/fail verdict plus ordered
// key/value stats for the reports.
struct SweepResult {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> stats;

  void stat(const std::string& key, const std::string& value) {
    stats.emplace_back(key, value);
  }
  void stat(const std::string& key, long long value) {
    stats.emplace_back(key, std::to_string(value));
  }
};

// The shared semilattice corpus: every labeled semilattice on up to 5
// elements, plus seeded random ones capped at 12 elements.
std::vector<FiniteSemilattice> semilattice_corpus(std::uint64_t seed);

// Tree compactifications of every rooted tree with up to max_nodes nodes.
std::vector<FiniteSemilattice> tree_corpus(int max_nodes);

// All sublattices of the 2x2 and 3x3 grids plus seeded sublattices of
// 4x4x4.
std::vector<ChainProductSublattice> sublattice_corpus(std::uint64_t seed,
                                                      int random_count);

// The acceptance sweeps, one per criterion.
SweepResult duality_roundtrip_sweep(std::uint64_t seed);
SweepResult sigma_discreteness_sweep(std::uint64_t seed);
SweepResult gate_laws_sweep(std::uint64_t seed);
SweepResult oscillation_sweep(std::uint64_t seed);
SweepResult range_gap_sweep(std::uint64_t seed);
SweepResult sld_audit_sweep(std::uint64_t seed);
SweepResult p_sequence_check();

// Every sweep in order; quick mode trims corpus sizes for smoke runs.
std::vector<SweepResult> run_all(std::uint64_t seed, bool quick = false);

}  // namespace ordkit::sweeps

#include "ordkit/chain_product.hpp"

#include <algorithm>
#include <set>

#include "ordkit/prng.hpp"

namespace ordkit {

bool ChainProductSublattice::same_fiber(int x, int y, int i) const {
  for (int j = 0; j < coords(); ++j)
    if (j != i && pi(x, j) != pi(y, j)) return false;
  return true;
}

int ChainProductSublattice::index_of(const std::vector<int>& tuple) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), tuple);
  if (it == members_.end() || *it != tuple) return -1;
  return static_cast<int>(it - members_.begin());
}

Subset ChainProductSublattice::coordinate_filter(int i, int cut) const {
  Subset out = 0;
  for (int x = 0; x < size(); ++x)
    if (pi(x, i) >= cut) out |= bit(x);
  return out;
}

Subset ChainProductSublattice::coordinate_band(int i, int lo, int hi) const {
  Subset out = 0;
  for (int x = 0; x < size(); ++x)
    if (pi(x, i) >= lo && pi(x, i) <= hi) out |= bit(x);
  return out;
}

std::string ChainProductSublattice::member_name(int x) const {
  std::string out;
  for (int i = 0; i < coords(); ++i) {
    if (i) out += ",";
    out += std::to_string(pi(x, i));
  }
  return out;
}

ChainProductSublattice validate_sublattice(std::vector<int> arities,
                                           std::vector<std::vector<int>> members) {
  if (arities.empty())
    throw Error(ErrorCode::CertificationError, "no chains given");
  for (int a : arities)
    if (a < 1) throw Error(ErrorCode::CertificationError, "chain arity < 1");
  if (members.empty())
    throw Error(ErrorCode::CertificationError, "member set is empty");

  const int n = static_cast<int>(arities.size());
  for (const auto& t : members) {
    if (static_cast<int>(t.size()) != n)
      throw Error(ErrorCode::CertificationError, "tuple has wrong length");
    for (int i = 0; i < n; ++i)
      if (t[i] < 0 || t[i] >= arities[i])
        throw Error(ErrorCode::CertificationError, "coordinate out of range");
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw Error(ErrorCode::CertificationError, "duplicate member tuple");
  const int m = static_cast<int>(members.size());
  if (m > kMaxElements)
    throw Error(ErrorCode::SizeLimit, "member set exceeds element cap");

  auto find = [&](const std::vector<int>& t) {
    auto it = std::lower_bound(members.begin(), members.end(), t);
    return it != members.end() && *it == t
               ? static_cast<int>(it - members.begin())
               : -1;
  };

  std::vector<int> meet_table(m * m), join_table(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> lo(n), hi(n);
      for (int i = 0; i < n; ++i) {
        lo[i] = std::min(members[a][i], members[b][i]);
        hi[i] = std::max(members[a][i], members[b][i]);
      }
      int lo_idx = find(lo);
      if (lo_idx < 0)
        throw Error(ErrorCode::NotMeetClosed,
                    "componentwise min escapes the member set", {a, b});
      int hi_idx = find(hi);
      if (hi_idx < 0)
        throw Error(ErrorCode::NotJoinClosed,
                    "componentwise max escapes the member set", {a, b});
      meet_table[a * m + b] = lo_idx;
      join_table[a * m + b] = hi_idx;
    }

  int zero = 0, one = 0;
  for (int x = 1; x < m; ++x) {
    zero = meet_table[zero * m + x];
    one = join_table[one * m + x];
  }

  ChainProductSublattice K;
  K.arities_ = std::move(arities);

  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& t : members) {
    std::string nm;
    for (int i = 0; i < n; ++i) {
      if (i) nm += ",";
      nm += std::to_string(t[i]);
    }
    names.push_back(nm);
  }

  FiniteSemilattice base =
      validate_semilattice(m, meet_table, zero, std::move(names));
  K.members_ = std::move(members);
  K.lattice_ = validate_lattice(std::move(base), join_table, one);
  return K;
}

ChainProductSublattice full_grid(std::vector<int> arities) {
  std::vector<std::vector<int>> members;
  std::vector<int> cur(arities.size(), 0);
  while (true) {
    members.push_back(cur);
    int i = static_cast<int>(arities.size()) - 1;
    while (i >= 0 && cur[i] + 1 == arities[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return validate_sublattice(std::move(arities), std::move(members));
}

ChainProductSublattice random_sublattice(std::uint64_t seed,
                                         std::vector<int> arities,
                                         int target_size) {
  Prng rng(seed);
  const int n = static_cast<int>(arities.size());
  std::set<std::vector<int>> chosen;
  std::vector<int> bottom(n, 0), top(n);
  for (int i = 0; i < n; ++i) top[i] = arities[i] - 1;
  chosen.insert(bottom);
  chosen.insert(top);

  while (static_cast<int>(chosen.size()) < target_size) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i)
      t[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(arities[i])));
    chosen.insert(t);
    // close under componentwise min/max
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<int>> snapshot(chosen.begin(), chosen.end());
      for (size_t a = 0; a < snapshot.size() && !grew; ++a)
        for (size_t b = a + 1; b < snapshot.size() && !grew; ++b) {
          std::vector<int> lo(n), hi(n);
          for (int i = 0; i < n; ++i) {
            lo[i] = std::min(snapshot[a][i], snapshot[b][i]);
            hi[i] = std::max(snapshot[a][i], snapshot[b][i]);
          }
          if (chosen.insert(lo).second) grew = true;
          if (chosen.insert(hi).second) grew = true;
        }
    }
    if (static_cast<int>(chosen.size()) >= kMaxElements) break;
  }
  return validate_sublattice(std::move(arities),
                             {chosen.begin(), chosen.end()});
}

}  // namespace ordkit

#include "ordkit/generators.hpp"

#include <algorithm>
#include <set>

#include "ordkit/prng.hpp"
#include "ordkit/sigma.hpp"

namespace ordkit {

std::vector<std::vector<Subset>> all_labeled_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::vector<Subset>> out;
  long long total = 1;
  for (size_t k = 0; k < pairs.size(); ++k) total *= 3;

  std::vector<int> choice(pairs.size());
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (size_t k = 0; k < pairs.size(); ++k) {
      choice[k] = static_cast<int>(c % 3);
      c /= 3;
    }
    // down[i] = {j : j <= i}, seeded reflexively.
    std::vector<Subset> down(n);
    for (int i = 0; i < n; ++i) down[i] = bit(i);
    for (size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      if (choice[k] == 1) down[j] |= bit(i);  // i < j
      if (choice[k] == 2) down[i] |= bit(j);  // j < i
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for_each_bit(down[i] & ~bit(i), [&](int j) {
        if (!subset_of(down[j], down[i])) transitive = false;
      });
    if (transitive) out.push_back(down);
  }
  return out;
}

std::vector<FiniteSemilattice> all_semilattices(int n) {
  std::vector<FiniteSemilattice> out;
  for (const auto& down : all_labeled_posets(n)) {
    int zero = -1;
    for (int i = 0; i < n; ++i)
      if (down[i] == bit(i)) {
        bool least = true;
        for (int j = 0; j < n && least; ++j) least = contains(down[j], i);
        if (least) zero = i;
      }
    if (zero < 0) continue;

    std::vector<int> table(n * n);
    bool has_meets = true;
    for (int a = 0; a < n && has_meets; ++a)
      for (int b = 0; b < n && has_meets; ++b) {
        Subset common = down[a] & down[b];
        int best = -1;
        for_each_bit(common, [&](int c) {
          if (subset_of(common, down[c])) best = c;
        });
        if (best < 0)
          has_meets = false;
        else
          table[a * n + b] = best;
      }
    if (!has_meets) continue;
    out.push_back(validate_semilattice(n, table, zero));
  }
  return out;
}

std::vector<std::vector<int>> all_rooted_trees(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  if (n == 1) {
    out.push_back({-1});
    return out;
  }

  auto emit = [&](const std::vector<int>& level) {
    // level[i] is the depth of node i (root depth 1, preorder); the parent
    // of i is the nearest j < i with level[j] = level[i] - 1.
    std::vector<int> parent(n, -1);
    for (int i = 1; i < n; ++i)
      for (int j = i - 1; j >= 0; --j)
        if (level[j] == level[i] - 1) {
          parent[i] = j;
          break;
        }
    out.push_back(parent);
  };

  // Beyer-Hedetniemi: successively generate canonical level sequences,
  // starting from the path and ending at the star.
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
  emit(level);
  while (true) {
    int p = -1;
    for (int i = n - 1; i >= 1; --i)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (level[i] == level[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    emit(level);
  }
  return out;
}

std::vector<int> random_tree(std::uint64_t seed, int n) {
  if (n < 1) throw Error(ErrorCode::MalformedTree, "empty tree requested");
  Prng rng(seed);
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i)
    parent[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
  return parent;
}

FiniteSemilattice random_semilattice(std::uint64_t seed, int size,
                                     int max_elements) {
  if (size < 1)
    throw Error(ErrorCode::CertificationError, "size must be at least 1");
  if (size == 1) return validate_semilattice(1, {0}, 0);

  Prng rng(seed);
  const int n = size - 1;  // poset points; the forced minimum comes later

  // Random poset by cover insertion: orient each inserted pair by current
  // index order (a linear extension), then close transitively.
  std::vector<Subset> down(n);
  for (int i = 0; i < n; ++i) down[i] = bit(i);
  const int edges = n + static_cast<int>(rng.below(n + 1));
  for (int e = 0; e < edges; ++e) {
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n));
    if (a == b) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    down[hi] |= down[lo];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Subset want = down[i];
      for_each_bit(down[i], [&](int j) { want |= down[j]; });
      if (want != down[i]) {
        down[i] = want;
        changed = true;
      }
    }
  }

  // Force a minimum, then take the meet-closure inside the ideal
  // completion: close the family of principal down-sets under intersection.
  std::set<Subset> family;
  for (int i = 0; i < n; ++i) family.insert(down[i] | bit(n));
  family.insert(bit(n));  // the adjoined bottom
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> snapshot(family.begin(), family.end());
    for (size_t i = 0; i < snapshot.size() && !grew; ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        Subset inter = snapshot[i] & snapshot[j];
        if (family.insert(inter).second) {
          grew = true;
          break;
        }
      }
    if (static_cast<int>(family.size()) > max_elements)
      throw Error(ErrorCode::SizeOverflow,
                  "meet-closure exceeded the cap of " +
                      std::to_string(max_elements) + " elements");
  }

  // Canonical indexing: by (popcount, value).  Meets are intersections.
  std::vector<Subset> elems(family.begin(), family.end());
  std::sort(elems.begin(), elems.end(), [](Subset a, Subset b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  const int m = static_cast<int>(elems.size());
  auto index_of = [&](Subset s) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), s,
                                             [](Subset a, Subset b) {
                                               if (popcount(a) != popcount(b))
                                                 return popcount(a) < popcount(b);
                                               return a < b;
                                             }) -
                            elems.begin());
  };
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = index_of(elems[i] & elems[j]);
  return validate_semilattice(m, table, 0);
}

}  // namespace ordkit

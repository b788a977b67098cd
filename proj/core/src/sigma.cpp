#include "ordkit/sigma.hpp"

#include <algorithm>
#include <map>

namespace ordkit {

ModestReport is_modest(const FiniteSemilattice& K) {
  ModestReport report;
  report.predecessor_counts.resize(K.size());
  for (int p = 0; p < K.size(); ++p) {
    report.predecessor_counts[p] = popcount(immediate_predecessors(K, p));
    report.max_predecessors =
        std::max(report.max_predecessors, report.predecessor_counts[p]);
  }
  return report;
}

FiniteSemilattice tree_compactification(const std::vector<int>& parents) {
  const int n = static_cast<int>(parents.size());
  if (n < 1) throw Error(ErrorCode::MalformedTree, "empty tree");
  int root = -1;
  for (int i = 0; i < n; ++i) {
    if (parents[i] == -1) {
      if (root >= 0)
        throw Error(ErrorCode::MalformedTree, "multiple roots", {root, i});
      root = i;
    } else if (parents[i] < 0 || parents[i] >= n) {
      throw Error(ErrorCode::MalformedTree, "parent index out of range", {i});
    }
  }
  if (root < 0) throw Error(ErrorCode::MalformedTree, "no root");

  // Ancestor-or-self masks; cycle detection by walk length.
  std::vector<Subset> anc(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = i;
    for (int steps = 0; v != -1; v = parents[v]) {
      anc[i] |= bit(v);
      if (++steps > n) throw Error(ErrorCode::MalformedTree, "cycle", {i});
    }
  }

  // Elements: tree nodes 0..n-1, Infinity at index n.
  const int inf = n;
  const int m = n + 1;
  std::vector<int> table(m * m, inf);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (contains(anc[t], s))
        table[s * m + t] = t;  // s is an ancestor: t is the deeper one
      else if (contains(anc[s], t))
        table[s * m + t] = s;
      // incomparable pairs meet at Infinity
    }
  for (int s = 0; s < n; ++s) table[s * m + s] = s;

  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  names.push_back("inf");
  return validate_semilattice(m, table, inf, std::move(names));
}

bool has_jump(const BinaryFunction& f, const DualSemilattice& D, int dp) {
  if (D.is_infinity(dp))
    throw Error(ErrorCode::InfinityNotAllowed, "jumps live at positive elements");
  if (dp < 0 || dp >= D.size())
    throw Error(ErrorCode::UnknownElement, "dual index out of range", {dp});
  const FiniteSemilattice& K = D.source();
  int p = D.to_source(dp);
  bool jump = true;
  for_each_bit(immediate_predecessors(K, p), [&](int q) {
    if (f(q) == f(p)) jump = false;
  });
  return jump;
}

bool has_relative_jump(const BinaryFunction& f, const DualSemilattice& D,
                       int dp, int q) {
  if (D.is_infinity(dp))
    throw Error(ErrorCode::InfinityNotAllowed, "jumps live at positive elements");
  const FiniteSemilattice& K = D.source();
  int p = D.to_source(dp);
  K.require_element(q);
  if (q == K.zero()) return has_jump(f, D, dp);
  if (!K.lt(q, p))
    throw Error(ErrorCode::NotBelow,
                "relative jump needs q < p or q = 0", {q, p});
  Subset window = immediate_predecessors(K, p) & K.up(q);
  bool jump = true;
  for_each_bit(window, [&](int x) {
    if (f(x) == f(p)) jump = false;
  });
  return jump;
}

std::optional<int> jump_existence_check(const BinaryFunction& f) {
  const FiniteSemilattice& K = *f.host;
  int base = f(K.zero());
  Subset disagree = 0;
  for (int x = 0; x < K.size(); ++x)
    if (f(x) != base) disagree |= bit(x);
  if (disagree == 0) return std::nullopt;

  // Smallest-index minimal element of the disagreement set.
  std::optional<int> found;
  for_each_bit(disagree, [&](int p) {
    if (found) return;
    if ((K.down(p) & disagree & ~bit(p)) == 0) found = p;
  });
  DualSemilattice D = dual_semilattice(K);
  if (!found || !has_jump(f, D, D.from_source(*found)))
    throw Error(ErrorCode::NonTermination,
                "minimal disagreement point is not a jump; certification bug");
  return found;
}

namespace {

// Smallest product-closed superset.  Infinity is an ordinary element here;
// callers seed it in, mirroring L_{-1} = {Infinity}.
Subset close_under_product(const DualSemilattice& D, Subset s) {
  bool grew = true;
  while (grew) {
    grew = false;
    Subset snapshot = s;
    for_each_bit(snapshot, [&](int i) {
      for_each_bit(snapshot, [&](int j) {
        int pq = D.product(i, j);
        if (!contains(s, pq)) {
          s |= bit(pq);
          grew = true;
        }
      });
    });
  }
  return s;
}

}  // namespace

JumpLedger compute_ledger(const BinaryFunction& f, const DualSemilattice& D) {
  const FiniteSemilattice& K = D.source();
  JumpLedger ledger;

  for (int dp = 1; dp < D.size(); ++dp)
    if (has_jump(f, D, dp)) ledger.jump_points |= bit(dp);

  Subset level = close_under_product(
      D, ledger.jump_points | bit(DualSemilattice::kInfinity));
  ledger.levels.push_back(level);

  for (int round = 0; round <= D.size(); ++round) {
    Subset next = level;
    // q is drawn from the previous level only; Infinity plays the role of 0.
    for_each_bit(level, [&](int dq) {
      int q = D.is_infinity(dq) ? K.zero() : D.to_source(dq);
      for (int dp = 1; dp < D.size(); ++dp) {
        if (contains(next, dp)) continue;
        int p = D.to_source(dp);
        if (q != K.zero() && !K.lt(q, p)) continue;
        if (has_relative_jump(f, D, dp, q)) next |= bit(dp);
      }
    });
    next = close_under_product(D, next);
    if (next == level) break;
    ledger.levels.push_back(next);
    level = next;
    if (round == D.size())
      throw Error(ErrorCode::NonTermination,
                  "level chain failed to stabilize within |DK| steps");
  }

  ledger.n_of_f = static_cast<int>(ledger.levels.size()) - 1;
  for (Subset l : ledger.levels) ledger.signature.push_back(popcount(l));

  // M_f, with Infinity read as the zero of K (the empty-filter fiber's
  // minimum); this is what makes M_f meet every fiber of the quotient.
  Subset top = ledger.levels.back();
  ledger.support = bit(K.zero());
  for_each_bit(top, [&](int dp) {
    if (D.is_infinity(dp)) return;
    int p = D.to_source(dp);
    ledger.support |= bit(p) | immediate_predecessors(K, p);
  });
  return ledger;
}

QuotientMap quotient_map(const FiniteSemilattice& K, const DualSemilattice& D,
                         Subset L) {
  if (!contains(L, DualSemilattice::kInfinity))
    throw Error(ErrorCode::NotSubsemilattice, "Infinity must belong to L");
  bool closed = true;
  for_each_bit(L, [&](int i) {
    for_each_bit(L, [&](int j) {
      if (!contains(L, D.product(i, j))) closed = false;
    });
  });
  if (!closed)
    throw Error(ErrorCode::NotSubsemilattice, "L is not product-closed");

  QuotientMap Q;
  Q.source = &K;
  Q.sub = L;
  Q.assignment.resize(K.size());
  for (int x = 0; x < K.size(); ++x) {
    Subset fx = 0;
    for_each_bit(L, [&](int dp) {
      if (!D.is_infinity(dp) && K.leq(D.to_source(dp), x)) fx |= bit(dp);
    });
    Q.assignment[x] = fx;
  }

  // Meet preservation: phi(x ^ y) = phi(x) n phi(y).
  for (int x = 0; x < K.size(); ++x)
    for (int y = 0; y < K.size(); ++y)
      if (Q.assignment[K.meet(x, y)] != (Q.assignment[x] & Q.assignment[y]))
        throw Error(ErrorCode::NotSubsemilattice,
                    "assignment is not a meet-homomorphism", {x, y});

  std::map<Subset, int> fiber_ids;
  Q.fiber_of.resize(K.size());
  for (int x = 0; x < K.size(); ++x) {
    auto [it, fresh] = fiber_ids.try_emplace(Q.assignment[x],
                                             static_cast<int>(Q.fibers.size()));
    if (fresh) Q.fibers.push_back(0);
    Q.fiber_of[x] = it->second;
    Q.fibers[it->second] |= bit(x);
  }

  // Each fiber minimum must be a member of L (or the zero of K for the
  // fiber of the empty filter).
  for (Subset fiber : Q.fibers) {
    int u = K.meet_of(fiber);
    if (!contains(fiber, u))
      throw Error(ErrorCode::NotSubsemilattice, "fiber is not meet-closed");
    if (u != K.zero() && !contains(L, D.from_source(u)))
      throw Error(ErrorCode::NotSubsemilattice,
                  "fiber minimum escaped L", {u});
  }

  // The target space: filters of L viewed as a semilattice of its own.
  std::vector<int> to_sub(popcount(L));
  std::vector<std::string> names;
  {
    int k = 0;
    for_each_bit(L, [&](int dp) {
      to_sub[k] = dp;
      names.push_back(D.semilattice().name(dp));
      ++k;
    });
  }
  const int m = static_cast<int>(to_sub.size());
  std::vector<int> table(m * m);
  std::vector<int> back(D.size(), -1);
  for (int i = 0; i < m; ++i) back[to_sub[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i * m + j] = back[D.product(to_sub[i], to_sub[j])];
  FiniteSemilattice Lsl = validate_semilattice(
      m, table, back[DualSemilattice::kInfinity], std::move(names));
  Q.target = filter_space(Lsl);
  return Q;
}

FiberConstancyReport verify_fiber_constancy(const BinaryFunction& f,
                                            const DualSemilattice& D) {
  JumpLedger ledger = compute_ledger(f, D);
  QuotientMap Q = quotient_map(D.source(), D, ledger.top_level());
  FiberConstancyReport report;
  for (Subset fiber : Q.fibers) {
    Subset ones = fiber & f.values;
    if (ones != 0 && ones != fiber) {
      report.ok = false;
      report.failing_fiber = fiber;
      return report;
    }
  }
  return report;
}

namespace {

// Fast path used by the exhaustive audit: fibers of the L-quotient without
// certifying a full QuotientMap per function.
bool fibers_constant(const FiniteSemilattice& K, const DualSemilattice& D,
                     Subset L, Subset fvalues) {
  std::map<Subset, Subset> fibers;
  for (int x = 0; x < K.size(); ++x) {
    Subset fx = 0;
    for_each_bit(L, [&](int dp) {
      if (!D.is_infinity(dp) && K.leq(D.to_source(dp), x)) fx |= bit(dp);
    });
    fibers[fx] |= bit(x);
  }
  for (auto& [key, fiber] : fibers) {
    Subset ones = fiber & fvalues;
    if (ones != 0 && ones != fiber) return false;
  }
  return true;
}

}  // namespace

DiscretenessReport verify_discreteness(const FiniteSemilattice& K, int cap) {
  if (K.size() > cap)
    throw Error(ErrorCode::SizeLimit,
                "host exceeds the exhaustive enumeration cap of " +
                    std::to_string(cap));
  DualSemilattice D = dual_semilattice(K);
  const long long total = 1LL << K.size();

  DiscretenessReport report;
  report.function_count = total;

  struct Entry {
    Subset f;
    Subset support;
  };
  std::map<std::vector<int>, std::vector<Entry>> classes;

  for (long long bits = 0; bits < total; ++bits) {
    BinaryFunction f{&K, static_cast<Subset>(bits)};
    JumpLedger ledger = compute_ledger(f, D);

    if (!f.constant() && ledger.jump_points == 0)
      report.jump_existence_ok = false;
    if (ledger.n_of_f + 1 > D.size()) report.stabilization_ok = false;
    if (!fibers_constant(K, D, ledger.top_level(), f.values))
      report.fiber_constancy_ok = false;

    classes[ledger.signature].push_back({f.values, ledger.support});
  }

  report.signature_classes = static_cast<int>(classes.size());
  for (auto& [sig, members] : classes) {
    report.max_class_size =
        std::max(report.max_class_size, static_cast<int>(members.size()));

    // Discreteness: for f != g with s(f) = s(g), f|M_f != g|M_f.  For each
    // distinct support M occurring in the class, project every class member
    // onto M and count collisions; each f must be alone in its own
    // projection cell.
    std::map<Subset, std::map<Subset, int>> projections;
    for (const Entry& e : members) projections[e.support];
    for (auto& [M, counts] : projections)
      for (const Entry& g : members) ++counts[g.f & M];

    std::map<std::pair<Subset, Subset>, int> class_buckets;
    for (const Entry& e : members) {
      ++class_buckets[{e.support, e.f & e.support}];
      if (projections[e.support][e.f & e.support] != 1) {
        report.discreteness_ok = false;
        if (!report.violation)
          for (const Entry& other : members)
            if (other.f != e.f && (other.f & e.support) == (e.f & e.support))
              report.violation = {{e.f, other.f}};
      }
    }
    report.buckets += static_cast<int>(class_buckets.size());
  }
  return report;
}

namespace {

// Set partitions via restricted-growth strings, generated recursively.
template <typename F>
void partitions_rec(int n, int i, int max_used, std::vector<int>& rgs, F& f) {
  if (i == n) {
    f(const_cast<const std::vector<int>&>(rgs));
    return;
  }
  for (int c = 0; c <= max_used + 1; ++c) {
    rgs[i] = c;
    partitions_rec(n, i + 1, std::max(max_used, c), rgs, f);
  }
}

template <typename F>
void for_each_partition(int n, F&& f) {
  std::vector<int> rgs(n, 0);
  if (n == 0) return;
  partitions_rec(n, 1, 0, rgs, f);
}

bool is_meet_congruence(const FiniteSemilattice& K, const std::vector<int>& cls) {
  for (int x = 0; x < K.size(); ++x)
    for (int y = x + 1; y < K.size(); ++y) {
      if (cls[x] != cls[y]) continue;
      for (int z = 0; z < K.size(); ++z)
        if (cls[K.meet(x, z)] != cls[K.meet(y, z)]) return false;
    }
  return true;
}

}  // namespace

MinimalQuotientResult minimal_quotient(const BinaryFunction& f,
                                       const DualSemilattice& D) {
  const FiniteSemilattice& K = D.source();
  JumpLedger ledger = compute_ledger(f, D);

  MinimalQuotientResult result{quotient_map(K, D, ledger.top_level()),
                               MinimalityStatus::Unchecked, std::nullopt};
  if (K.size() > 8) return result;

  const int target_classes = static_cast<int>(result.quotient.fibers.size());
  result.status = MinimalityStatus::Certified;
  for_each_partition(K.size(), [&](const std::vector<int>& cls) {
    if (result.smaller_partition) return;
    int blocks = *std::max_element(cls.begin(), cls.end()) + 1;
    if (blocks >= target_classes) return;
    // f constant per block?
    std::vector<int> value(blocks, -1);
    for (int x = 0; x < K.size(); ++x) {
      if (value[cls[x]] == -1)
        value[cls[x]] = f(x);
      else if (value[cls[x]] != f(x))
        return;
    }
    if (is_meet_congruence(K, cls)) result.smaller_partition = cls;
  });
  return result;
}

}  // namespace ordkit

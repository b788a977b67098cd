#include "ordkit/leaps.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordkit {

std::vector<int> prime_filters_of_chain(int arity) {
  std::vector<int> cuts;
  for (int c = 1; c < arity; ++c) cuts.push_back(c);
  return cuts;
}

LiftedPrime lift_prime(const ChainProductSublattice& K, int i, int cut) {
  if (i < 0 || i >= K.coords())
    throw Error(ErrorCode::UnknownElement, "coordinate out of range", {i});
  if (cut < 1 || cut >= K.arity(i))
    throw Error(ErrorCode::UnknownElement, "cut is not a prime filter of the chain",
                {cut});
  LiftedPrime lp;
  lp.coordinate = i;
  lp.cut = cut;
  lp.members = K.coordinate_filter(i, cut);
  lp.degenerate = lp.members == 0 || lp.members == full_set(K.size());
  if (!lp.degenerate && !is_prime_filter(K.lattice(), lp.members))
    throw Error(ErrorCode::LawViolation,
                "proper nonempty lift failed the primality check", {i, cut});
  return lp;
}

namespace {

ConvexSet ideal_as_convex(const FiniteDistributiveLattice& L, Subset ideal) {
  return make_convex(L, ideal, full_set(L.size()));
}

ConvexSet filter_as_convex(const FiniteDistributiveLattice& L, Subset filter) {
  return make_convex(L, full_set(L.size()), filter);
}

// All gates between the coordinate ideal A = [0, sup A] and the coordinate
// filter B = [inf B, 1]: exactly the mutual-projection fixed points
// (a, a v inf B) with a = (a v inf B) ^ sup A.  Gates of one pair share
// their i-th coordinates (the complement/filter characterizations pin them), but
// their function values differ, so leap verdicts quantify over all of
// them.  Enumeration order is by member index; the first entry is the
// inf-seeded gate, since inf B ^ sup A is the least fixed point.
std::vector<Gate> coordinate_gates(const FiniteDistributiveLattice& L,
                                   Subset A, Subset B) {
  int top_a = L.join_of(A);
  int bot_b = L.base().meet_of(B);
  std::vector<Gate> out;
  for_each_bit(A, [&](int a) {
    int b = L.join(a, bot_b);
    if (L.meet(b, top_a) == a) out.push_back(Gate{a, b, A, B});
  });
  return out;
}

}  // namespace

LeapPair leap_at(const RealFunction& f, const Rational& epsilon, int i,
                 int cut_p, int cut_q) {
  const ChainProductSublattice& K = *f.host;
  LiftedPrime p = lift_prime(K, i, cut_p);
  LiftedPrime q = lift_prime(K, i, cut_q);
  if (!subset_of(q.members, p.members))
    throw Error(ErrorCode::PreconditionViolation,
                "leap pair needs nested lifts p~ >= q~", {cut_p, cut_q});
  if (p.degenerate || q.degenerate)
    throw Error(ErrorCode::DegenerateFilterPair,
                "leap enumeration excludes empty or total lifts",
                {cut_p, cut_q});

  LeapPair pair;
  pair.coordinate = i;
  pair.cut_p = cut_p;
  pair.cut_q = cut_q;
  pair.lift_p = p.members;
  pair.lift_q = q.members;
  pair.is_jump = p.members == q.members;

  Subset complement = full_set(K.size()) & ~p.members;
  std::vector<Gate> gates =
      coordinate_gates(K.lattice(), complement, q.members);
  if (gates.empty())
    throw Error(ErrorCode::NoGatePoint, "pair admits no gate", {cut_p, cut_q});

  // The pair leaps when some gate witnesses a gap above epsilon; the
  // reported witness is the first leaping gate in member order, or the
  // inf-seeded gate when none does.
  pair.gate = gates.front();
  pair.gap = (f(pair.gate.a) - f(pair.gate.b)).abs();
  for (const Gate& g : gates) {
    Rational gap = (f(g.a) - f(g.b)).abs();
    if (gap > epsilon) {
      pair.gate = g;
      pair.gap = gap;
      pair.leaps = true;
      break;
    }
  }
  assert_gate(K.lattice(), pair.gate);
  return pair;
}

namespace {

// "u can precede v in a chain": q~ of u strictly contains p~ of v.
bool precedes(const LeapPair& u, const LeapPair& v) {
  return u.lift_q != v.lift_p && subset_of(v.lift_p, u.lift_q);
}

}  // namespace

CoordinateChain max_leap_count(const RealFunction& f, const Rational& epsilon,
                               int i) {
  const ChainProductSublattice& K = *f.host;
  CoordinateChain result;
  result.coordinate = i;

  // Candidate nodes: every nested pair of proper nonempty lifts, deduped by
  // lift sets (first in (cut_p, cut_q) lex order wins, so equal-lift pairs
  // canonicalize to the diagonal), kept only when they leap.
  std::vector<LeapPair> nodes;
  std::set<std::pair<Subset, Subset>> seen;
  for (int cut_p = 1; cut_p < K.arity(i); ++cut_p)
    for (int cut_q = cut_p; cut_q < K.arity(i); ++cut_q) {
      LiftedPrime p = lift_prime(K, i, cut_p);
      LiftedPrime q = lift_prime(K, i, cut_q);
      if (p.degenerate || q.degenerate) continue;
      if (!seen.insert({p.members, q.members}).second) continue;
      LeapPair pair = leap_at(f, epsilon, i, cut_p, cut_q);
      if (pair.leaps) nodes.push_back(pair);
    }

  std::vector<int> mandatory;
  for (int v = 0; v < static_cast<int>(nodes.size()); ++v)
    if (nodes[v].is_jump) {
      mandatory.push_back(v);
      result.jump_cuts.push_back(nodes[v].cut_p);
    }

  // Mandatory nodes must be pairwise chainable.  Distinct jump lifts are
  // strictly nested, so this cannot fail; the guard keeps the contract
  // honest.
  for (size_t a = 0; a < mandatory.size(); ++a)
    for (size_t b = a + 1; b < mandatory.size(); ++b) {
      const LeapPair& u = nodes[mandatory[a]];
      const LeapPair& v = nodes[mandatory[b]];
      if (!precedes(u, v) && !precedes(v, u))
        throw Error(ErrorCode::JumpChainInfeasible,
                    "jump nodes cannot be linearly ordered",
                    {u.cut_p, v.cut_p});
    }

  // A node is usable only if it is comparable with every mandatory node;
  // chains through an incomparable node could never satisfy condition (ii).
  const int N = static_cast<int>(nodes.size());
  std::vector<bool> usable(N, true);
  for (int v = 0; v < N; ++v)
    for (int mi : mandatory) {
      if (mi == v) continue;
      if (!precedes(nodes[mi], nodes[v]) && !precedes(nodes[v], nodes[mi]))
        usable[v] = false;
    }

  auto start_ok = [&](int v) {
    for (int mi : mandatory)
      if (mi != v && precedes(nodes[mi], nodes[v])) return false;
    return true;
  };
  auto end_ok = [&](int v) {
    for (int mi : mandatory)
      if (mi != v && precedes(nodes[v], nodes[mi])) return false;
    return true;
  };
  auto step_ok = [&](int u, int v) {
    if (!precedes(nodes[u], nodes[v])) return false;
    for (int mi : mandatory)
      if (mi != u && mi != v && precedes(nodes[u], nodes[mi]) &&
          precedes(nodes[mi], nodes[v]))
        return false;
    return true;
  };

  // Longest suffix lengths, processed in an order compatible with the
  // precedence DAG (lift_p strictly shrinks along edges).
  std::vector<int> order(N);
  for (int v = 0; v < N; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(nodes[a].lift_p) < popcount(nodes[b].lift_p);
  });

  std::vector<int> suffix(N, 0);
  for (int v : order) {
    if (!usable[v]) continue;
    int best = end_ok(v) ? 1 : 0;
    for (int w = 0; w < N; ++w)
      if (usable[w] && suffix[w] > 0 && step_ok(v, w))
        best = std::max(best, 1 + suffix[w]);
    suffix[v] = best;
  }

  int m = 0;
  for (int v = 0; v < N; ++v)
    if (usable[v] && start_ok(v) && suffix[v] > 0) m = std::max(m, suffix[v]);

  if (m == 0) {
    if (!mandatory.empty())
      throw Error(ErrorCode::JumpChainInfeasible,
                  "no chain covers the jump nodes");
    return result;  // constant-ish function: zero leaps, empty chain
  }
  if (m < static_cast<int>(mandatory.size()))
    throw Error(ErrorCode::JumpChainInfeasible,
                "maximal chain shorter than the jump node count");

  // Reconstruct the lexicographically-first maximal chain; nodes were
  // generated in (cut_p, cut_q) lex order, so first match wins.
  result.m = m;
  int need = m;
  int current = -1;
  while (need > 0) {
    for (int v = 0; v < N; ++v) {
      if (!usable[v] || suffix[v] != need) continue;
      if (current < 0 ? !start_ok(v) : !step_ok(current, v)) continue;
      result.chain.push_back(nodes[v]);
      current = v;
      break;
    }
    if (static_cast<int>(result.chain.size()) != m - need + 1)
      throw Error(ErrorCode::NonTermination, "chain reconstruction failed");
    --need;
  }

  // Every jump node must sit in the chain as a diagonal pair, and the gate
  // coordinates must obey the nesting monotonicity
  // pi(a_1) < pi(b_1) <= pi(a_2) < ...
  for (int mi : mandatory) {
    bool found = false;
    for (const LeapPair& pair : result.chain)
      if (pair.lift_p == nodes[mi].lift_p && pair.lift_q == nodes[mi].lift_q)
        found = true;
    if (!found)
      throw Error(ErrorCode::JumpChainInfeasible,
                  "reconstructed chain misses a jump node");
  }
  for (size_t j = 0; j < result.chain.size(); ++j) {
    const LeapPair& pair = result.chain[j];
    int alpha = K.pi(pair.gate.a, i);
    int beta = K.pi(pair.gate.b, i);
    if (alpha >= beta)
      throw Error(ErrorCode::LawViolation, "gate coordinates not increasing",
                  {pair.gate.a, pair.gate.b});
    if (j + 1 < result.chain.size()) {
      int alpha_next = K.pi(result.chain[j + 1].gate.a, i);
      if (beta > alpha_next)
        throw Error(ErrorCode::LawViolation,
                    "chain violates gate monotonicity", {pair.gate.b});
    }
  }
  return result;
}

Rational p_sequence(int k) {
  if (k < 1)
    throw Error(ErrorCode::PreconditionViolation, "p(k) needs k >= 1", {k});
  if (k > 20)
    throw Error(ErrorCode::SizeLimit, "p(k) overflows past k = 20", {k});
  long long value = 3;
  for (int i = 1; i < k; ++i) value = 8 * value + 6;
  return Rational(value);
}

LeapLedgerN compute_leap_ledger(const RealFunction& f, const Rational& epsilon) {
  const ChainProductSublattice& K = *f.host;
  LeapLedgerN ledger;
  ledger.epsilon = epsilon;
  for (int i = 0; i < K.coords(); ++i)
    ledger.per_coordinate.push_back(max_leap_count(f, epsilon, i));
  for (int k = 1; k <= K.coords(); ++k) ledger.pn.push_back(p_sequence(k));

  // Cut every chain coordinate after pi_i(a_j) and before pi_i(b_j); the
  // complement/filter characterizations make each resulting cube included
  // in or disjoint from every K \ p~ and q~ of the chain.
  for (int i = 0; i < K.coords(); ++i) {
    std::set<int> cuts;  // cut c = boundary between values c and c+1
    for (const LeapPair& pair : ledger.per_coordinate[i].chain) {
      cuts.insert(K.pi(pair.gate.a, i));
      cuts.insert(K.pi(pair.gate.b, i) - 1);
    }
    std::vector<std::pair<int, int>> segs;
    int lo = 0;
    for (int c : cuts) {
      if (c >= K.arity(i) - 1) break;
      segs.emplace_back(lo, c);
      lo = c + 1;
    }
    segs.emplace_back(lo, K.arity(i) - 1);
    ledger.segments.push_back(std::move(segs));
  }

  // Cartesian product of segments, intersected with the member set.
  std::vector<size_t> idx(K.coords(), 0);
  while (true) {
    Cube cube;
    cube.members = full_set(K.size());
    for (int i = 0; i < K.coords(); ++i) {
      auto [lo, hi] = ledger.segments[i][idx[i]];
      cube.box.emplace_back(lo, hi);
      cube.members &= K.coordinate_band(i, lo, hi);
    }
    if (cube.members != 0) ledger.cubes.push_back(std::move(cube));
    int i = K.coords() - 1;
    while (i >= 0 && idx[i] + 1 == ledger.segments[i].size()) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }

  // Cover laws: the cubes partition K and respect every chain set.
  Subset covered = 0;
  for (const Cube& cube : ledger.cubes) {
    if (covered & cube.members)
      throw Error(ErrorCode::CoverViolation, "cubes overlap");
    covered |= cube.members;
  }
  if (covered != full_set(K.size()))
    throw Error(ErrorCode::CoverViolation, "cubes do not cover K");
  for (int i = 0; i < K.coords(); ++i)
    for (const LeapPair& pair : ledger.per_coordinate[i].chain) {
      Subset complement = full_set(K.size()) & ~pair.lift_p;
      for (const Cube& cube : ledger.cubes)
        for (Subset s : {complement, pair.lift_q}) {
          bool inside = subset_of(cube.members, s);
          bool apart = (cube.members & s) == 0;
          if (!inside && !apart)
            throw Error(ErrorCode::CoverViolation,
                        "cube straddles a chain set", {i, pair.cut_p});
        }
    }
  return ledger;
}

std::vector<Cube> build_cover(const RealFunction& f, const Rational& epsilon) {
  return compute_leap_ledger(f, epsilon).cubes;
}

Rational oscillation(const RealFunction& f, Subset C) {
  if (C == 0) throw Error(ErrorCode::EmptySet, "oscillation over empty set");
  Rational lo = f(first_bit(C)), hi = lo;
  for_each_bit(C, [&](int x) {
    if (f(x) < lo) lo = f(x);
    if (hi < f(x)) hi = f(x);
  });
  return hi - lo;
}

OscReport verify_osc_bound(const RealFunction& f, const Rational& epsilon) {
  const ChainProductSublattice& K = *f.host;
  LeapLedgerN ledger = compute_leap_ledger(f, epsilon);
  OscReport report;
  report.bound = p_sequence(K.coords()) * epsilon;
  for (const Cube& cube : ledger.cubes) {
    OscCubeReport c;
    c.cube = cube;
    c.osc = oscillation(f, cube.members);
    c.slack = report.bound - c.osc;
    if (c.osc > report.bound) {
      report.ok = false;
      throw Error(ErrorCode::BoundViolation,
                  "cube oscillation exceeds p(n) epsilon",
                  {first_bit(cube.members)});
    }
    report.cubes.push_back(std::move(c));
  }
  return report;
}

bool range_gap_check(const RealFunction& f, const Rational& epsilon, int a,
                     int b) {
  const ChainProductSublattice& K = *f.host;
  Subset box = interval(K.lattice(), a, b).members;
  std::vector<Rational> values;
  for_each_bit(box, [&](int x) { values.push_back(f(x)); });
  std::sort(values.begin(), values.end());
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] > epsilon) return false;
  return true;
}

bool verify_interval_emptiness(const ChainProductSublattice& K, int i, int a,
                               int b) {
  int lo = K.pi(a, i), hi = K.pi(b, i);
  Subset box = interval(K.lattice(), a, b).members;
  auto strictly_between = [&](Subset candidates) {
    bool found = false;
    for_each_bit(candidates, [&](int x) {
      if (K.pi(x, i) > lo && K.pi(x, i) < hi) found = true;
    });
    return found;
  };
  bool antecedent = !strictly_between(box);
  bool consequent = !strictly_between(full_set(K.size()));
  return !antecedent || consequent;
}

GateLawReport verify_gate_coordinate_laws(const ChainProductSublattice& K,
                                          int i, int cut_p, int cut_q) {
  LiftedPrime p = lift_prime(K, i, cut_p);
  LiftedPrime q = lift_prime(K, i, cut_q);
  if (p.degenerate || q.degenerate)
    throw Error(ErrorCode::DegenerateFilterPair,
                "laws need proper nonempty lifts", {cut_p, cut_q});
  if (p.members == q.members || !subset_of(q.members, p.members))
    throw Error(ErrorCode::PreconditionViolation,
                "laws need strictly nested lifts p~ > q~", {cut_p, cut_q});

  const FiniteDistributiveLattice& L = K.lattice();
  Subset complement = full_set(K.size()) & ~p.members;

  GateLawReport report;
  report.gate = gate_pair(L, ideal_as_convex(L, complement),
                          filter_as_convex(L, q.members));
  report.alpha = K.pi(report.gate.a, i);
  report.beta = K.pi(report.gate.b, i);

  auto fail = [&](const std::string& what, std::vector<int> witness) {
    throw Error(ErrorCode::LawViolation, what, std::move(witness));
  };
  if (report.alpha >= report.beta)
    fail("pi_i(a) < pi_i(b) fails", {report.gate.a, report.gate.b});

  for (int x = 0; x < K.size(); ++x) {
    bool in_complement = contains(complement, x);
    if (in_complement != (K.pi(x, i) <= report.alpha))
      fail("K \\ p~ != {pi_i <= pi_i(a)}", {x});
    bool in_q = contains(q.members, x);
    if (in_q != (K.pi(x, i) >= report.beta))
      fail("q~ != {pi_i >= pi_i(b)}", {x});
    if (K.pi(x, i) > report.alpha && K.pi(x, i) < report.beta &&
        (in_q || in_complement))
      fail("middle band intersects q~ or K \\ p~", {x});
  }

  // Coordinate transfer (the product-order law behind the cover cuts).
  for (int c = 0; c < K.size(); ++c) {
    if (K.pi(c, i) < report.beta) continue;
    for (int j = 0; j < K.coords(); ++j)
      if (K.pi(report.gate.a, j) < K.pi(report.gate.b, j) &&
          K.pi(c, j) < K.pi(report.gate.b, j))
        fail("coordinate transfer law fails", {c, j});
  }
  report.ok = true;
  return report;
}

FiberLeapWitness fiber_leap_extraction(const RealFunction& f,
                                       const Rational& epsilon, int u, int v,
                                       int i) {
  const ChainProductSublattice& K = *f.host;
  if (!K.same_fiber(u, v, i))
    throw Error(ErrorCode::PreconditionViolation, "u, v not in one i-fiber",
                {u, v});
  if (K.pi(u, i) >= K.pi(v, i))
    throw Error(ErrorCode::PreconditionViolation, "need pi_i(u) < pi_i(v)",
                {u, v});
  if (!((f(u) - f(v)).abs() > epsilon))
    throw Error(ErrorCode::PreconditionViolation,
                "need |f(u) - f(v)| > epsilon", {u, v});

  std::vector<int> fiber;
  for (int x = 0; x < K.size(); ++x)
    if (K.same_fiber(x, u, i) && K.pi(x, i) >= K.pi(u, i) &&
        K.pi(x, i) <= K.pi(v, i))
      fiber.push_back(x);
  std::sort(fiber.begin(), fiber.end(),
            [&](int a, int b) { return K.pi(a, i) < K.pi(b, i); });

  const int count = static_cast<int>(fiber.size());
  for (int width = 1; width < count; ++width)
    for (int j = 0; j + width < count; ++j) {
      int a = fiber[j], b = fiber[j + width];
      if (!((f(a) - f(b)).abs() > epsilon)) continue;

      // Certification: (a,b) is a gate between the coordinate ideal and
      // filter it separates.
      Subset A = 0, B = 0;
      for (int x = 0; x < K.size(); ++x) {
        if (K.pi(x, i) <= K.pi(a, i)) A |= bit(x);
        if (K.pi(x, i) >= K.pi(b, i)) B |= bit(x);
      }
      assert_gate(K.lattice(), Gate{a, b, A, B});
      if (width == 1) {
        // Adjacent in the fiber: the interval band is empty, so the emptiness
        // transfer forces the whole band in K to be empty (a jump pair).
        if (!verify_interval_emptiness(K, i, a, b) || (A | B) != full_set(K.size()))
          throw Error(ErrorCode::LawViolation,
                      "adjacent fiber pair is not a clopen split", {a, b});
      }
      return FiberLeapWitness{a, b, width};
    }
  throw Error(ErrorCode::NoLeapFound,
              "no leap witness in the fiber; preconditions violated?", {u, v});
}

SldReport sld_partition(const std::vector<RealFunction>& F,
                        const Rational& epsilon) {
  if (F.empty()) return {};
  const ChainProductSublattice& K = *F.front().host;
  for (const RealFunction& f : F)
    if (f.host != F.front().host)
      throw Error(ErrorCode::PreconditionViolation,
                  "all functions must share one host");

  struct Entry {
    std::vector<int> key;
    std::vector<std::pair<int, int>> witnesses;  // gate endpoints (a, b)
    std::vector<Subset> cubes;
  };
  std::vector<Entry> entries(F.size());
  for (size_t fi = 0; fi < F.size(); ++fi) {
    LeapLedgerN ledger = compute_leap_ledger(F[fi], epsilon);
    for (const CoordinateChain& cc : ledger.per_coordinate) {
      entries[fi].key.push_back(cc.m);
      for (const LeapPair& pair : cc.chain)
        entries[fi].witnesses.emplace_back(pair.gate.a, pair.gate.b);
    }
    for (const Cube& cube : ledger.cubes)
      entries[fi].cubes.push_back(cube.members);
  }

  Rational bound = p_sequence(K.coords()) * epsilon;
  auto sup_distance = [&](const RealFunction& g, const RealFunction& h) {
    Rational best = 0;
    for (int x = 0; x < K.size(); ++x) {
      Rational d = (g(x) - h(x)).abs();
      if (d > best) best = d;
    }
    return best;
  };

  std::map<std::vector<int>, std::vector<int>> by_key;
  for (size_t fi = 0; fi < F.size(); ++fi)
    by_key[entries[fi].key].push_back(static_cast<int>(fi));

  SldReport report;
  for (auto& [key, members] : by_key) {
    SldClass cls;
    cls.key = key;
    cls.members = members;
    cls.max_neighborhood_diameter = 0;
    for (int fi : members) {
      std::vector<int> neighborhood;
      for (int gi : members) {
        bool passes = true;
        for (auto [a, b] : entries[fi].witnesses)
          if (!((F[gi](a) - F[gi](b)).abs() > epsilon)) passes = false;
        if (!passes) continue;
        neighborhood.push_back(gi);
        for (Subset cube : entries[fi].cubes) {
          ++report.neighborhood_checks;
          if (oscillation(F[gi], cube) > bound) ++report.violations;
        }
      }
      for (int gi : neighborhood) {
        Rational d = sup_distance(F[fi], F[gi]);
        if (d > cls.max_neighborhood_diameter)
          cls.max_neighborhood_diameter = d;
      }
    }
    report.classes.push_back(std::move(cls));
  }
  return report;
}

}  // namespace ordkit

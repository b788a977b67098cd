#include "ordkit/semilattice.hpp"

#include <algorithm>

namespace ordkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NoMinimum: return "NoMinimum";
    case ErrorCode::NoMaximum: return "NoMaximum";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::AbsorptionFailure: return "AbsorptionFailure";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::RoundTripFailure: return "RoundTripFailure";
    case ErrorCode::InfinityNotAllowed: return "InfinityNotAllowed";
    case ErrorCode::NotBelow: return "NotBelow";
    case ErrorCode::NotSubsemilattice: return "NotSubsemilattice";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::DiscretenessViolation: return "DiscretenessViolation";
    case ErrorCode::NotMeetClosed: return "NotMeetClosed";
    case ErrorCode::NotJoinClosed: return "NotJoinClosed";
    case ErrorCode::NoGatePoint: return "NoGatePoint";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::FamilyViolation: return "FamilyViolation";
    case ErrorCode::DegenerateFilterPair: return "DegenerateFilterPair";
    case ErrorCode::JumpChainInfeasible: return "JumpChainInfeasible";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::CoverViolation: return "CoverViolation";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::LawViolation: return "LawViolation";
    case ErrorCode::NoLeapFound: return "NoLeapFound";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CertificationError: return "CertificationError";
  }
  return "UnknownError";
}

namespace {

std::vector<std::string> default_names(int n, std::vector<std::string> names) {
  if (names.empty()) {
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != n)
    throw Error(ErrorCode::CertificationError,
                "name list size does not match element count");
  return names;
}

}  // namespace

std::optional<int> FiniteSemilattice::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int FiniteSemilattice::meet_of(Subset s) const {
  if (s == 0) throw Error(ErrorCode::EmptySet, "meet of empty subset");
  int acc = first_bit(s);
  for_each_bit(s, [&](int i) { acc = meet(acc, i); });
  return acc;
}

FiniteSemilattice validate_semilattice(int n, const std::vector<int>& meet_table,
                                       int zero,
                                       std::vector<std::string> names) {
  if (n < 1)
    throw Error(ErrorCode::CertificationError, "empty element set");
  if (n > kMaxElements)
    throw Error(ErrorCode::SizeLimit,
                "structure exceeds " + std::to_string(kMaxElements) + " elements");
  if (static_cast<int>(meet_table.size()) != n * n)
    throw Error(ErrorCode::CertificationError, "meet table is not total");
  for (int v : meet_table)
    if (v < 0 || v >= n)
      throw Error(ErrorCode::CertificationError,
                  "meet table entry out of range", {v});
  if (zero < 0 || zero >= n)
    throw Error(ErrorCode::UnknownElement, "minimum out of range", {zero});

  auto meet = [&](int a, int b) { return meet_table[a * n + b]; };

  for (int a = 0; a < n; ++a)
    if (meet(a, a) != a)
      throw Error(ErrorCode::NotIdempotent,
                  "meet(" + std::to_string(a) + "," + std::to_string(a) + ") != " +
                      std::to_string(a),
                  {a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (meet(a, b) != meet(b, a))
        throw Error(ErrorCode::NotCommutative,
                    "meet(" + std::to_string(a) + "," + std::to_string(b) +
                        ") != meet(" + std::to_string(b) + "," + std::to_string(a) + ")",
                    {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet(meet(a, b), c) != meet(a, meet(b, c)))
          throw Error(ErrorCode::NotAssociative,
                      "associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")",
                      {a, b, c});
  for (int a = 0; a < n; ++a)
    if (meet(zero, a) != zero)
      throw Error(ErrorCode::NoMinimum,
                  "meet(zero," + std::to_string(a) + ") != zero", {zero, a});

  FiniteSemilattice K;
  K.n_ = n;
  K.zero_ = zero;
  K.table_ = meet_table;
  K.names_ = default_names(n, std::move(names));
  K.up_.assign(n, 0);
  K.down_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (meet(a, b) == a) {
        K.up_[a] |= bit(b);
        K.down_[b] |= bit(a);
      }
  K.preds_.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    Subset strictly_below = K.down_[p] & ~bit(p);
    for_each_bit(strictly_below, [&](int x) {
      if ((K.up_[x] & strictly_below & ~bit(x)) == 0) K.preds_[p] |= bit(x);
    });
  }
  return K;
}

FiniteSemilattice semilattice_from_covers(
    int n, const std::vector<std::pair<int, int>>& covers,
    std::vector<std::string> names) {
  if (n < 1) throw Error(ErrorCode::CertificationError, "empty element set");
  if (n > kMaxElements)
    throw Error(ErrorCode::SizeLimit,
                "structure exceeds " + std::to_string(kMaxElements) + " elements");

  // Reflexive-transitive closure of the cover relation, as down-set masks.
  std::vector<Subset> down(n);
  for (int i = 0; i < n; ++i) down[i] = bit(i);
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error(ErrorCode::UnknownElement, "cover endpoint out of range", {x, y});
    if (x == y)
      throw Error(ErrorCode::CertificationError, "reflexive cover", {x, y});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [x, y] : covers) {
      Subset want = down[y] | down[x];
      if (want != down[y]) {
        down[y] = want;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && contains(down[i], j) && contains(down[j], i))
        throw Error(ErrorCode::CertificationError,
                    "cover relation contains a cycle", {i, j});

  int zero = -1;
  for (int i = 0; i < n; ++i)
    if (down[i] == bit(i)) {
      bool below_all = true;
      for (int j = 0; j < n && below_all; ++j) below_all = contains(down[j], i);
      if (below_all) {
        zero = i;
        break;
      }
    }
  if (zero < 0)
    throw Error(ErrorCode::NoMinimum, "cover relation has no least element");

  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Subset common = down[a] & down[b];
      int best = -1;
      for_each_bit(common, [&](int c) {
        if (subset_of(common, down[c])) best = c;
      });
      if (best < 0)
        throw Error(ErrorCode::NoMeet,
                    "pair (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has no greatest lower bound",
                    {a, b});
      table[a * n + b] = best;
    }
  return validate_semilattice(n, table, zero, std::move(names));
}

Subset immediate_predecessors(const FiniteSemilattice& K, int p) {
  K.require_element(p);
  return K.preds(p);
}

std::vector<std::pair<int, int>> cover_relation(const FiniteSemilattice& K) {
  std::vector<std::pair<int, int>> covers;
  for (int y = 0; y < K.size(); ++y)
    for_each_bit(immediate_predecessors(K, y), [&](int x) {
      covers.emplace_back(x, y);
    });
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::optional<int> sup_of_pair(const FiniteSemilattice& K, int p, int q) {
  K.require_element(p);
  K.require_element(q);
  Subset upper = K.up(p) & K.up(q);
  if (upper == 0) return std::nullopt;
  int m = K.meet_of(upper);
  // Upper-bound sets are meet-closed, so the fold lands inside the set.
  if (!contains(upper, m))
    throw Error(ErrorCode::NonTermination,
                "upper-bound set not meet-closed; invalid certificate", {p, q});
  return m;
}

std::optional<int> sup_of_subset(const FiniteSemilattice& K, Subset s) {
  if (s == 0) return K.zero();
  Subset upper = full_set(K.size());
  for_each_bit(s, [&](int x) { upper &= K.up(x); });
  if (upper == 0) return std::nullopt;
  int m = K.meet_of(upper);
  if (!contains(upper, m))
    throw Error(ErrorCode::NonTermination,
                "upper-bound set not meet-closed; invalid certificate");
  return m;
}

namespace {

// Enumerate antichains containing only elements >= `from` (by index), with
// the accumulated antichain in `acc`.  Calls `f` on every antichain.
// Decrements `budget` per visited antichain; throws SizeLimit at zero.
template <typename F>
void antichains_rec(const FiniteSemilattice& K, int from, Subset acc,
                    long long& budget, F& f) {
  if (--budget < 0)
    throw Error(ErrorCode::SizeLimit, "antichain enumeration budget exhausted");
  f(acc);
  for (int x = from; x < K.size(); ++x) {
    bool comparable = false;
    for_each_bit(acc, [&](int y) {
      if (K.leq(x, y) || K.leq(y, x)) comparable = true;
    });
    if (!comparable) antichains_rec(K, x + 1, acc | bit(x), budget, f);
  }
}

}  // namespace

bool is_compact_element(const FiniteSemilattice& K, int p) {
  K.require_element(p);
  // sup A = sup (maximal elements of A), and the maximal elements form an
  // antichain, so quantifying over antichains covers every subset.
  bool compact = true;
  long long budget = 1LL << 22;
  auto check = [&](Subset a) {
    if (!compact || a == 0) return;
    auto s = sup_of_subset(K, a);
    if (!s || *s != p) return;
    // The existential part of the definition: some finite A0 with
    // sup A0 = p.  A itself is finite, so it serves as the witness.
    Subset witness = a;
    auto s0 = sup_of_subset(K, witness);
    compact = s0.has_value() && *s0 == p;
  };
  antichains_rec(K, 0, 0, budget, check);
  return compact;
}

bool is_filter(const FiniteSemilattice& K, Subset f) {
  bool ok = true;
  for_each_bit(f, [&](int a) {
    for_each_bit(f, [&](int b) {
      if (!subset_of(K.up(K.meet(a, b)), f)) ok = false;
    });
  });
  return ok;
}

bool is_ideal(const FiniteSemilattice& K, Subset s) {
  bool ok = true;
  for_each_bit(s, [&](int a) {
    if (!subset_of(K.down(a), s)) ok = false;
    for_each_bit(s, [&](int b) {
      auto j = sup_of_pair(K, a, b);
      if (j && !contains(s, *j)) ok = false;
    });
  });
  return ok;
}

FilterObject make_filter(const FiniteSemilattice& K, Subset members) {
  if (!is_filter(K, members))
    throw Error(ErrorCode::CertificationError, "subset is not a filter");
  FilterObject f;
  f.host = &K;
  f.members = members;
  if (members != 0) {
    int v = K.meet_of(members);
    if (K.up(v) == members) {
      f.is_principal = true;
      f.vertex = v;
    }
    Subset complement = full_set(K.size()) & ~members;
    f.is_prime = complement != 0 && is_ideal(K, complement);
  }
  return f;
}

std::vector<FilterObject> enumerate_filters(const FiniteSemilattice& K) {
  // Nonempty filters are meet-closed, hence contain their own minimum and
  // equal that minimum's principal filter.  The brute-force subset scan is
  // kept in the test suite as the oracle for this shortcut.
  std::vector<FilterObject> out;
  out.push_back(make_filter(K, 0));
  for (int p = 0; p < K.size(); ++p) out.push_back(make_filter(K, K.up(p)));
  std::sort(out.begin(), out.end(), [](const FilterObject& a, const FilterObject& b) {
    if (a.members == 0 || b.members == 0) return a.members == 0 && b.members != 0;
    return a.vertex < b.vertex;
  });
  return out;
}

}  // namespace ordkit

#include "ordkit/duality.hpp"

#include <algorithm>

namespace ordkit {

Subset DualSemilattice::source_members(Subset dual_mask) const {
  Subset out = 0;
  for_each_bit(dual_mask, [&](int dp) {
    if (dp != kInfinity) out |= bit(to_source_[dp]);
  });
  return out;
}

DualSemilattice dual_semilattice(const FiniteSemilattice& K) {
  const int n = K.size();
  DualSemilattice D;
  D.source_ = &K;
  D.to_source_.push_back(-1);  // Infinity
  D.from_source_.assign(n, -1);
  std::vector<std::string> names;
  names.push_back("inf");
  for (int x = 0; x < n; ++x) {
    if (x == K.zero()) continue;
    D.from_source_[x] = static_cast<int>(D.to_source_.size());
    D.to_source_.push_back(x);
    std::string nm = K.name(x);
    if (nm == "inf") nm += "_";
    names.push_back(nm);
  }

  const int m = static_cast<int>(D.to_source_.size());
  std::vector<int> table(m * m, DualSemilattice::kInfinity);
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) {
      auto s = sup_of_pair(K, D.to_source_[i], D.to_source_[j]);
      table[i * m + j] = s ? D.from_source_[*s] : DualSemilattice::kInfinity;
    }
  // Row/column 0 stay Infinity: the artificial element absorbs.
  D.sl_ = validate_semilattice(m, table, DualSemilattice::kInfinity, std::move(names));

  // Cross-validate against the filter-family view:
  // [p) n [q) must equal [p.q), with Infinity standing for the empty set.
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) {
      Subset lhs = K.up(D.to_source_[i]) & K.up(D.to_source_[j]);
      int pq = table[i * m + j];
      Subset rhs = pq == DualSemilattice::kInfinity ? 0 : K.up(D.to_source_[pq]);
      if (lhs != rhs)
        throw Error(ErrorCode::RoundTripFailure,
                    "product table disagrees with filter intersection",
                    {D.to_source_[i], D.to_source_[j]});
    }
  return D;
}

int FilterSpace::index_of(Subset members) const {
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (points[i].members == members) return i;
  return -1;
}

FilterSpace filter_space(const FiniteSemilattice& S) {
  FilterSpace fs;
  fs.source = &S;
  fs.points = enumerate_filters(S);
  const int m = static_cast<int>(fs.points.size());
  if (m > kMaxElements)
    throw Error(ErrorCode::SizeLimit, "filter space exceeds element cap");

  std::vector<int> table(m * m);
  int zero = -1;
  for (int i = 0; i < m; ++i) {
    if (fs.points[i].members == 0) zero = i;
    for (int j = 0; j < m; ++j) {
      Subset inter = fs.points[i].members & fs.points[j].members;
      int idx = fs.index_of(inter);
      if (idx < 0)
        throw Error(ErrorCode::RoundTripFailure,
                    "filter intersection escaped the filter family");
      table[i * m + j] = idx;
    }
  }
  std::vector<std::string> names;
  for (const FilterObject& f : fs.points)
    names.push_back(f.members == 0 ? "{}" : "[" + S.name(f.vertex) + ")");
  fs.sl = validate_semilattice(m, table, zero, std::move(names));
  return fs;
}

FilterObject hat_embedding(const DualSemilattice& D, int x) {
  const FiniteSemilattice& K = D.source();
  K.require_element(x);
  Subset members = 0;
  for (int dp = 1; dp < D.size(); ++dp)
    if (K.leq(D.to_source(dp), x)) members |= bit(dp);
  return make_filter(D.semilattice(), members);
}

RoundtripReport verify_duality_roundtrip(const FiniteSemilattice& K) {
  RoundtripReport report;
  DualSemilattice D = dual_semilattice(K);
  report.space = filter_space(D.semilattice());

  const int n = K.size();
  report.hat_point.assign(n, -1);
  std::vector<Subset> hats(n);
  for (int x = 0; x < n; ++x) {
    hats[x] = hat_embedding(D, x).members;
    report.hat_point[x] = report.space.index_of(hats[x]);
    if (report.hat_point[x] < 0) {
      report.failure = "hat(" + K.name(x) + ") missing from the filter space";
      return report;
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (hats[x] == hats[y]) {
        report.failure = "hat not injective: " + K.name(x) + ", " + K.name(y);
        return report;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((hats[x] & hats[y]) != hats[K.meet(x, y)]) {
        report.failure = "hat not meet-preserving at (" + K.name(x) + "," +
                         K.name(y) + ")";
        return report;
      }

  // Surjectivity onto the Infinity-avoiding filters of DK.
  for (const FilterObject& f : report.space.points) {
    if (contains(f.members, DualSemilattice::kInfinity)) {
      ++report.excluded_filter_count;
      continue;
    }
    ++report.dual_point_count;
    if (std::find(hats.begin(), hats.end(), f.members) == hats.end()) {
      report.failure = "filter of DK is not a hat image";
      return report;
    }
  }
  if (report.dual_point_count != n) {
    report.failure = "dual point count " +
                     std::to_string(report.dual_point_count) +
                     " differs from |K| = " + std::to_string(n);
    return report;
  }
  report.ok = true;
  return report;
}

int separate_by_compact(const FiniteSemilattice& K, int a, int b) {
  K.require_element(a);
  K.require_element(b);
  if (K.leq(a, b))
    throw Error(ErrorCode::NotSeparable, "a <= b, nothing separates", {a, b});
  for (int p = 0; p < K.size(); ++p)
    if (K.leq(p, a) && !K.leq(p, b)) return p;
  // a itself always qualifies, so the scan cannot fall through.
  throw Error(ErrorCode::NotSeparable, "no separating element found", {a, b});
}

FilterObject separate_by_prime_filter(const FiniteDistributiveLattice& L,
                                      int a, int b) {
  L.require_element(a);
  L.require_element(b);
  if (L.leq(a, b))
    throw Error(ErrorCode::NotSeparable, "a <= b, nothing separates", {a, b});
  for (const FilterObject& f : enumerate_filters(L.base()))
    if (f.is_prime && contains(f.members, a) && !contains(f.members, b))
      return f;
  throw Error(ErrorCode::NotSeparable,
              "no prime filter separates the pair; non-distributive input?",
              {a, b});
}

}  // namespace ordkit

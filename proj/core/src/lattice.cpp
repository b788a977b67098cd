#include "ordkit/lattice.hpp"

namespace ordkit {

int FiniteDistributiveLattice::join_of(Subset s) const {
  if (s == 0) throw Error(ErrorCode::EmptySet, "join of empty subset");
  int acc = first_bit(s);
  for_each_bit(s, [&](int i) { acc = join(acc, i); });
  return acc;
}

FiniteDistributiveLattice validate_lattice(FiniteSemilattice base,
                                           const std::vector<int>& join_table,
                                           int one) {
  const int n = base.size();
  if (static_cast<int>(join_table.size()) != n * n)
    throw Error(ErrorCode::CertificationError, "join table is not total");
  for (int v : join_table)
    if (v < 0 || v >= n)
      throw Error(ErrorCode::CertificationError, "join table entry out of range", {v});
  base.require_element(one);

  auto meet = [&](int a, int b) { return base.meet(a, b); };
  auto join = [&](int a, int b) { return join_table[a * n + b]; };

  for (int a = 0; a < n; ++a)
    if (join(a, a) != a)
      throw Error(ErrorCode::NotIdempotent, "join not idempotent", {a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (join(a, b) != join(b, a))
        throw Error(ErrorCode::NotCommutative, "join not commutative", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a)
        throw Error(ErrorCode::AbsorptionFailure,
                    "absorption fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")",
                    {a, b});
      for (int c = 0; c < n; ++c) {
        if (join(join(a, b), c) != join(a, join(b, c)))
          throw Error(ErrorCode::NotAssociative, "join not associative", {a, b, c});
        if (meet(join(a, b), c) != join(meet(a, c), meet(b, c)))
          throw Error(ErrorCode::NotDistributive,
                      "distributivity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")",
                      {a, b, c});
      }
    }
  for (int a = 0; a < n; ++a)
    if (join(one, a) != one)
      throw Error(ErrorCode::NoMaximum, "join(one,x) != one", {one, a});

  FiniteDistributiveLattice L;
  L.base_ = std::move(base);
  L.join_ = join_table;
  L.one_ = one;
  return L;
}

FiniteDistributiveLattice lattice_from_covers(
    int n, const std::vector<std::pair<int, int>>& covers,
    std::vector<std::string> names) {
  FiniteSemilattice base = semilattice_from_covers(n, covers, std::move(names));
  std::vector<int> join_table(n * n);
  int one = -1;
  for (int i = 0; i < n; ++i)
    if (base.up(i) == bit(i)) {
      bool above_all = true;
      for (int j = 0; j < n && above_all; ++j) above_all = contains(base.up(j), i);
      if (above_all) one = i;
    }
  if (one < 0) throw Error(ErrorCode::NoMaximum, "order has no greatest element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto s = sup_of_pair(base, a, b);
      if (!s)
        throw Error(ErrorCode::NoJoin,
                    "pair (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has no least upper bound",
                    {a, b});
      join_table[a * n + b] = *s;
    }
  return validate_lattice(std::move(base), join_table, one);
}

bool is_prime_filter(const FiniteDistributiveLattice& L, Subset f) {
  if (f == 0 || !is_filter(L.base(), f)) return false;
  Subset complement = full_set(L.size()) & ~f;
  if (complement == 0) return false;
  // Complement must be downward closed and join-closed.
  bool ok = true;
  for_each_bit(complement, [&](int a) {
    if (!subset_of(L.down(a), complement)) ok = false;
    for_each_bit(complement, [&](int b) {
      if (!contains(complement, L.join(a, b))) ok = false;
    });
  });
  return ok;
}

Subset join_irreducibles(const FiniteDistributiveLattice& L) {
  Subset out = 0;
  for (int x = 0; x < L.size(); ++x) {
    if (x == L.zero()) continue;
    bool irreducible = true;
    for (int a = 0; a < L.size() && irreducible; ++a)
      for (int b = 0; b < L.size() && irreducible; ++b)
        if (L.join(a, b) == x && a != x && b != x) irreducible = false;
    if (irreducible) out |= bit(x);
  }
  return out;
}

std::vector<FilterObject> prime_filters(const FiniteDistributiveLattice& L) {
  std::vector<FilterObject> out;
  for (const FilterObject& f : enumerate_filters(L.base()))
    if (is_prime_filter(L, f.members)) out.push_back(f);
  return out;
}

ConvexSet make_convex(const FiniteDistributiveLattice& L, Subset ideal,
                      Subset filter) {
  if (!is_ideal(L.base(), ideal))
    throw Error(ErrorCode::CertificationError, "witness ideal is not an ideal");
  if (!is_filter(L.base(), filter))
    throw Error(ErrorCode::CertificationError, "witness filter is not a filter");
  ConvexSet c;
  c.host = &L.base();
  c.members = ideal & filter;
  c.witness_ideal = ideal;
  c.witness_filter = filter;
  return c;
}

ConvexSet interval(const FiniteDistributiveLattice& L, int a, int b) {
  L.require_element(a);
  L.require_element(b);
  int lo = L.meet(a, b);
  int hi = L.join(a, b);
  ConvexSet c;
  c.host = &L.base();
  c.witness_ideal = L.down(hi);
  c.witness_filter = L.up(lo);
  c.members = c.witness_ideal & c.witness_filter;
  return c;
}

}  // namespace ordkit

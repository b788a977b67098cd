#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordkit/duality.hpp"
#include "ordkit/generators.hpp"
#include "ordkit/sigma.hpp"

using namespace ordkit;

namespace {

FiniteSemilattice three_chain() {
  return semilattice_from_covers(3, {{0, 1}, {1, 2}}, {"0", "a", "b"});
}

FiniteSemilattice fan() {
  return semilattice_from_covers(3, {{0, 1}, {0, 2}}, {"0", "a", "b"});
}

FiniteDistributiveLattice boolean_square() {
  return lattice_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                             {"0", "a", "b", "1"});
}

}  // namespace

TEST_CASE("dual semilattice of the fan: unbounded pairs product to Infinity") {
  FiniteSemilattice K = fan();
  DualSemilattice D = dual_semilattice(K);
  CHECK(D.size() == 3);  // a, b, Infinity
  int da = D.from_source(1), db = D.from_source(2);
  CHECK(D.product(da, db) == DualSemilattice::kInfinity);
  CHECK(D.product(da, da) == da);
  CHECK(D.product(DualSemilattice::kInfinity, da) == DualSemilattice::kInfinity);
}

TEST_CASE("dual semilattice of a chain: product is the larger element") {
  FiniteSemilattice K = three_chain();
  DualSemilattice D = dual_semilattice(K);
  CHECK(D.size() == 3);
  CHECK(D.product(D.from_source(1), D.from_source(2)) == D.from_source(2));
}

TEST_CASE("dual semilattice of the singleton is just Infinity") {
  FiniteSemilattice K = validate_semilattice(1, {0}, 0);
  DualSemilattice D = dual_semilattice(K);
  CHECK(D.size() == 1);
}

TEST_CASE("Infinity is the minimum of the dual order") {
  DualSemilattice D = dual_semilattice(fan());
  const FiniteSemilattice& sl = D.semilattice();
  CHECK(sl.zero() == DualSemilattice::kInfinity);
  for (int d = 0; d < sl.size(); ++d)
    CHECK(sl.leq(DualSemilattice::kInfinity, d));
}

TEST_CASE("filter space examples") {
  // two-chain: three filters forming a chain (empty, {1}, everything)
  FiniteSemilattice c2 = semilattice_from_covers(2, {{0, 1}});
  FilterSpace fs = filter_space(c2);
  CHECK(fs.points.size() == 3);
  for (int i = 0; i < fs.sl.size(); ++i)
    for (int j = 0; j < fs.sl.size(); ++j)
      CHECK((fs.sl.leq(i, j) || fs.sl.leq(j, i)));  // a chain

  // singleton: two-chain of filters
  CHECK(filter_space(validate_semilattice(1, {0}, 0)).points.size() == 2);

  // fan: four filters forming a diamond under inclusion
  FilterSpace ff = filter_space(fan());
  CHECK(ff.points.size() == 4);
  int mid = 0;
  for (const FilterObject& f : ff.points)
    if (popcount(f.members) == 1) ++mid;
  CHECK(mid == 2);
}

TEST_CASE("filter space meet is intersection") {
  FilterSpace fs = filter_space(fan());
  for (int i = 0; i < fs.sl.size(); ++i)
    for (int j = 0; j < fs.sl.size(); ++j) {
      Subset inter = fs.points[i].members & fs.points[j].members;
      CHECK(fs.points[fs.sl.meet(i, j)].members == inter);
    }
}

TEST_CASE("hat embedding examples") {
  FiniteSemilattice c = three_chain();
  DualSemilattice D = dual_semilattice(c);
  CHECK(hat_embedding(D, 2).members == (bit(D.from_source(1)) | bit(D.from_source(2))));
  CHECK(hat_embedding(D, 0).members == 0);

  DualSemilattice Df = dual_semilattice(fan());
  CHECK(hat_embedding(Df, 1).members == bit(Df.from_source(1)));
}

TEST_CASE("hat is order-reflecting") {
  for (const FiniteSemilattice& K : {three_chain(), fan()}) {
    DualSemilattice D = dual_semilattice(K);
    for (int x = 0; x < K.size(); ++x)
      for (int y = 0; y < K.size(); ++y)
        CHECK(K.leq(x, y) ==
              subset_of(hat_embedding(D, x).members, hat_embedding(D, y).members));
  }
}

TEST_CASE("duality roundtrip on the documented examples") {
  CHECK(verify_duality_roundtrip(three_chain()).ok);
  CHECK(verify_duality_roundtrip(validate_semilattice(1, {0}, 0)).ok);

  RoundtripReport fanReport = verify_duality_roundtrip(fan());
  CHECK(fanReport.ok);
  CHECK(fanReport.dual_point_count == 3);
  // the diamond's fourth filter contains Infinity and is excluded from the
  // dual points (it is the total filter of DK)
  CHECK(fanReport.excluded_filter_count == 1);
}

TEST_CASE("duality roundtrip over a generated corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSemilattice& K : all_semilattices(n))
      CHECK(verify_duality_roundtrip(K).ok);
  for (int s = 0; s < 20; ++s)
    CHECK(verify_duality_roundtrip(random_semilattice(7000 + s, 6)).ok);
}

TEST_CASE("product table agrees with filter intersection") {
  for (const FiniteSemilattice& K : {three_chain(), fan()}) {
    DualSemilattice D = dual_semilattice(K);
    for (int i = 1; i < D.size(); ++i)
      for (int j = 1; j < D.size(); ++j) {
        Subset inter = K.up(D.to_source(i)) & K.up(D.to_source(j));
        int pq = D.product(i, j);
        CHECK(inter == (pq == DualSemilattice::kInfinity ? Subset{0}
                                                         : K.up(D.to_source(pq))));
      }
  }
}

TEST_CASE("separate_by_compact") {
  FiniteSemilattice c = three_chain();
  CHECK(separate_by_compact(c, 2, 1) == 2);  // inputs (b, a) -> b
  FiniteSemilattice f = fan();
  CHECK(separate_by_compact(f, 1, 2) == 1);
  CHECK_THROWS_AS(separate_by_compact(f, 1, 1), Error);
  try {
    separate_by_compact(f, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSeparable);
  }
}

TEST_CASE("separate_by_prime_filter on the Boolean square") {
  FiniteDistributiveLattice L = boolean_square();
  CHECK(separate_by_prime_filter(L, 1, 2).members == (bit(1) | bit(3)));
  CHECK(separate_by_prime_filter(L, 3, 1).members == (bit(2) | bit(3)));
  CHECK_THROWS_AS(separate_by_prime_filter(L, 0, 2), Error);
}

TEST_CASE("prime separation succeeds for every non-leq pair") {
  FiniteDistributiveLattice L = boolean_square();
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (L.leq(a, b)) continue;
      FilterObject P = separate_by_prime_filter(L, a, b);
      CHECK(P.is_prime);
      CHECK(contains(P.members, a));
      CHECK(!contains(P.members, b));
    }
}

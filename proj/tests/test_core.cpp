#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>

#include "bernproc/core.hpp"
#include "bernproc/io.hpp"
#include "bernproc/rng.hpp"
#include "doctest.h"

using namespace bernproc;

namespace {

SparseVector random_vector(RandomStream& rs, int dim, double scale = 1.0) {
  std::vector<std::pair<int, double>> e;
  for (int i = 0; i < dim; ++i) {
    e.emplace_back(i, scale * rs.next_normal());
  }
  return SparseVector(std::move(e));
}

Metric l2_metric(const IndexSet& J) {
  return [J](const SparseVector& a, const SparseVector& b) {
    return restricted_l2_distance(a, b, J);
  };
}

}  // namespace

TEST_CASE("index set basics") {
  IndexSet a({3, 1, 2, 1});
  CHECK(a.size() == 3);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(5));
  CHECK(IndexSet({1, 2}).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(IndexSet({1, 2})));
  CHECK(a.union_with(IndexSet({5})).size() == 4);
  CHECK(a.intersect(IndexSet({2, 9})).members() == std::vector<int>{2});
  CHECK_THROWS_AS(IndexSet({-1}), DomainError);
}

TEST_CASE("sparse vector stores no zeros and merges duplicates") {
  SparseVector v({{2, 0.0}, {1, 1.5}, {1, 0.5}});
  CHECK(v.support_size() == 1);
  CHECK(v.get(1) == 2.0);
  CHECK(v.get(2) == 0.0);
  SparseVector w = v.minus(v);
  CHECK(w.support_size() == 0);
  CHECK(w.l2_norm() == 0.0);
}

TEST_CASE("arithmetic stays inside the union of supports") {
  SparseVector a({{0, 1.0}, {4, 2.0}});
  SparseVector b({{4, -2.0}, {7, 3.0}});
  const auto sum = a.plus(b);
  CHECK(sum.support().is_subset_of(IndexSet({0, 4, 7})));
  CHECK(sum.get(4) == 0.0);
  const auto diff = a.minus(b);
  CHECK(diff.support().is_subset_of(IndexSet({0, 4, 7})));
}

TEST_CASE("restricted l2 distance") {
  const auto e1 = SparseVector::unit(1);
  const auto me1 = SparseVector::unit(1, -1.0);
  CHECK(restricted_l2_distance(e1, me1, IndexSet({1})) == 2.0);
  CHECK(restricted_l2_distance(e1, me1, IndexSet({2})) == 0.0);

  RandomStream rs(7, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const auto s = random_vector(rs, 5);
    const auto t = random_vector(rs, 5);
    double oracle = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double d = s.get(i) - t.get(i);
      oracle += d * d;
    }
    oracle = std::sqrt(oracle);
    CHECK(restricted_l2_distance(s, t, IndexSet::range(5)) ==
          doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("linf distance") {
  const auto s = SparseVector({{1, 1.0}, {2, 1.0}});
  const auto t = SparseVector({{1, 1.0}, {2, -1.0}});
  CHECK(linf_distance(s, s) == 0.0);
  CHECK(linf_distance(s, t) == 2.0);

  RandomStream rs(11, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = random_vector(rs, 6);
    const auto b = random_vector(rs, 6);
    double oracle = 0.0;
    for (int i = 0; i < 6; ++i) oracle = std::max(oracle, std::abs(a.get(i) - b.get(i)));
    CHECK(linf_distance(a, b) == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("diameter") {
  const Metric d = l2_metric(IndexSet::range(8));
  PointSet singleton({SparseVector::unit(0, 2.0)});
  CHECK(diameter(singleton, d) == 0.0);

  PointSet pair({SparseVector::unit(1), SparseVector::unit(1, -1.0)});
  CHECK(diameter(pair, d) == 2.0);

  RandomStream rs(3, 0);
  std::vector<SparseVector> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(random_vector(rs, 4));
  PointSet T(pts);
  double oracle = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      oracle = std::max(oracle, restricted_l2_distance(pts[a], pts[b], IndexSet::range(4)));
    }
  }
  CHECK(diameter(T, d) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("restricted distance is monotone in the index set and a pseudometric") {
  RandomStream rs(19, 0);
  const IndexSet full = IndexSet::range(6);
  const IndexSet small({0, 2, 4});
  for (int rep = 0; rep < 50; ++rep) {
    const auto a = random_vector(rs, 6);
    const auto b = random_vector(rs, 6);
    const auto c = random_vector(rs, 6);
    CHECK(restricted_l2_distance(a, b, small) <= restricted_l2_distance(a, b, full) + 1e-12);
    CHECK(restricted_l2_distance(a, c, full) <=
          restricted_l2_distance(a, b, full) + restricted_l2_distance(b, c, full) + 1e-12);
  }
}

TEST_CASE("point set invariants") {
  CHECK_THROWS_AS(PointSet(std::vector<SparseVector>{}), DomainError);
  CHECK_THROWS_AS(PointSet({SparseVector::unit(5)}, IndexSet({0, 1})), DomainError);
  PointSet T({SparseVector::unit(0), SparseVector::unit(3)});
  CHECK(T.ambient() == IndexSet({0, 3}));
  const auto shifted = T.translated(SparseVector::unit(0, 1.0));
  CHECK(shifted[0].support_size() == 0);
  CHECK(shifted[1].get(0) == -1.0);
}

TEST_CASE("point-set file round trip") {
  PointSet T({SparseVector({{0, 1.5}, {2, -0.25}}, "a"), SparseVector({{1, 3.0}}, "b")},
             IndexSet({0, 1, 2, 5}));
  std::stringstream buf;
  write_point_set(buf, T);
  const PointSet back = read_point_set(buf);
  REQUIRE(back.size() == 2);
  CHECK(back.ambient() == T.ambient());
  CHECK(back[0].same_coordinates(T[0]));
  CHECK(back[1].same_coordinates(T[1]));
  CHECK(back[0].id() == "a");
}

TEST_CASE("point-set parse errors") {
  {
    std::stringstream buf("not json\n");
    CHECK_THROWS_AS(read_point_set(buf), ParseError);
  }
  {
    std::stringstream buf("{\"id\": \"x\"}\n");
    CHECK_THROWS_AS(read_point_set(buf), ParseError);
  }
  {
    std::stringstream buf("{\"coords\": {\"oops\": 1.0}}\n");
    CHECK_THROWS_AS(read_point_set(buf), ParseError);
  }
  {
    std::stringstream buf("");
    CHECK_THROWS_AS(read_point_set(buf), ParseError);
  }
  {
    // header after a point record
    std::stringstream buf("{\"coords\": {\"0\": 1.0}}\n{\"ambient\": [0]}\n");
    CHECK_THROWS_AS(read_point_set(buf), ParseError);
  }
}

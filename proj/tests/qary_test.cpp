#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eqgeo/qary.hpp"

using namespace eqgeo;

TEST_CASE("prime fields only, arithmetic closed") {
  CHECK_THROWS_AS(GFq(4), std::invalid_argument);
  CHECK_THROWS_AS(GFq(6), std::invalid_argument);
  CHECK_THROWS_AS(GFq(11), std::invalid_argument);
  for (int q : {2, 3, 5, 7}) {
    GFq F(q);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == (a + b) % q);
        CHECK(F.mul(a, b) == (a * b) % q);
        CHECK(F.sub(F.add(a, b), b) == a);
      }
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK_THROWS_AS(F.inv(0), std::invalid_argument);
  }
}

TEST_CASE("normalization scales the first nonzero entry to one") {
  GFq F(3);
  QVector v{3, {0, 2, 1}};
  QVector norm = normalize_qvector(F, v);
  CHECK(norm.entries == std::vector<int>{0, 1, 2});
  CHECK(normalize_qvector(F, norm) == norm);
  CHECK(v.weight() == 2);
  CHECK(norm.to_string() == "(0,1,2)");
}

TEST_CASE("geometry construction guards") {
  CHECK_THROWS_AS(QGeometry(2, 3), std::invalid_argument);  // binary handled elsewhere
  CHECK_THROWS_AS(QGeometry(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(QGeometry(7, 5), std::length_error);      // blows the point cap
}

TEST_CASE("the (3,2) geometry has sixteen normalized points") {
  QGeometry g(3, 2);
  CHECK(g.n() == 4);
  CHECK(g.t() == 3);
  REQUIRE(g.num_points() == 16);
  std::set<std::vector<int>> seen;
  for (int p = 0; p < g.num_points(); ++p) {
    const QVector& v = g.point(p);
    CHECK(v.weight() == 3);
    int first = 0;
    for (int e : v.entries)
      if (e) {
        first = e;
        break;
      }
    CHECK(first == 1);  // normalized representative
    CHECK(seen.insert(v.entries).second);
    CHECK(g.index_of(v) == p);
  }
  // lookup accepts unnormalized representatives of the same projective point
  QVector doubled{3, {0, 2, 2, 2}};
  CHECK(g.index_of(doubled) == g.index_of(QVector{3, {0, 1, 1, 1}}));
}

TEST_CASE("adjacency is symmetric, irreflexive, and index-safe") {
  QGeometry g(3, 2);
  for (int a = 0; a < g.num_points(); ++a) {
    CHECK_FALSE(g.neighbors(a).test(a));
    for (int b = 0; b < g.num_points(); ++b)
      CHECK(g.neighbors(a).test(b) == g.neighbors(b).test(a));
  }
  CHECK_THROWS_AS(qary_collinear(g, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(qary_collinear(g, 0, 99), std::out_of_range);
}

TEST_CASE("lines close under combinations and carry q+1 points") {
  QGeometry g(3, 2);
  int pairs = 0;
  for (int a = 0; a < g.num_points(); ++a)
    for (int b = a + 1; b < g.num_points(); ++b)
      if (qary_collinear(g, a, b)) {
        auto line = qary_line(g, a, b);
        REQUIRE(int(line.size()) == g.q() + 1);
        CHECK(std::count(line.begin(), line.end(), a) == 1);
        CHECK(std::count(line.begin(), line.end(), b) == 1);
        // every pair on the line is collinear and spans the same line
        for (size_t x = 0; x < line.size(); ++x)
          for (size_t y = x + 1; y < line.size(); ++y) {
            REQUIRE(qary_collinear(g, line[x], line[y]));
            REQUIRE(qary_line(g, line[x], line[y]) == line);
          }
        QLineProfile prof = qary_line_profile(g, a, b);
        CHECK(prof.inside == g.q() + 1);
        CHECK(prof.outside == 0);
        ++pairs;
      }
  CHECK(pairs > 0);
  CHECK_THROWS_AS(qary_line(g, 0, 0), std::invalid_argument);
}

TEST_CASE("the (3,2) graph is connected") {
  QGeometry g(3, 2);
  QConnectivity c = qary_connectivity_and_diameter(g);
  CHECK(c.connected);
  CHECK(c.diameter >= 1);
}

TEST_CASE("the q = 5 witness pair is distant") {
  QGeometry g(5, 2);
  REQUIRE(g.num_points() == 1536);
  QVector a{5, {0, 1, 1, 1, 1, 1}}, b{5, {0, 1, 1, 1, 2, 2}};
  int ia = g.index_of(a), ib = g.index_of(b);
  REQUIRE(ia >= 0);
  REQUIRE(ib >= 0);
  CHECK_FALSE(qary_collinear(g, ia, ib));
  CHECK_FALSE(qary_collinear(g, a, b));
  CHECK(qary_common_neighbors(g, ia, ib).empty());
  // some collinear pair exists nonetheless
  CHECK(g.neighbors(ia).any());
}

TEST_CASE("common neighbors of a point with itself are its neighbors") {
  QGeometry g(3, 2);
  auto own = qary_common_neighbors(g, 3, 3);
  CHECK(own == g.neighbors(3).to_vector());
}

TEST_CASE("spanning difference pairs") {
  for (auto [q, n, t, i] : {std::tuple{5, 6, 6, 3}, {3, 4, 2, 1}, {7, 5, 1, 2}}) {
    auto [x, y] = qary_spanning_pair(q, n, t, i);
    GFq F(q);
    CHECK(x.weight() == t);
    CHECK(y.weight() == t);
    for (int j = 1; j <= n; ++j)
      CHECK(F.sub(x.entries[j - 1], y.entries[j - 1]) == (j == i ? 1 : 0));
  }
  CHECK_THROWS_AS(qary_spanning_pair(2, 4, 2, 1), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "eqgeo/cliques.hpp"
#include "eqgeo/geometry.hpp"
#include "eqgeo/graph.hpp"
#include "eqgeo/sets.hpp"

using namespace eqgeo;

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Geometry(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(5, 2), std::invalid_argument);  // 3m > n: no lines
  CHECK_THROWS_AS(Geometry(65, 1), std::out_of_range);
}

TEST_CASE("point sets are colex-sorted constant-weight supports") {
  Geometry g(7, 2);
  REQUIRE(g.num_points() == int(binom(7, 4)));
  const auto& pts = g.point_supports();
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (mask_t p : pts) CHECK(popcount(p) == 4);
  for (int idx = 0; idx < g.num_points(); ++idx) CHECK(g.index_of(g.support(idx)) == idx);
  CHECK(g.index_of(mask_of({1, 2}, 7)) == -1);
}

TEST_CASE("small configuration counts") {
  struct Row {
    int n, m, points, lines, per_point;
  };
  for (Row r : {Row{3, 1, 3, 1, 1}, {4, 1, 6, 4, 2}, {6, 2, 15, 15, 3}, {7, 2, 35, 105, 9},
                {9, 3, 84, 280, 10}}) {
    Geometry g(r.n, r.m);
    INFO("(" << r.n << "," << r.m << ")");
    CHECK(g.num_points() == r.points);
    CHECK(int(g.lines().size()) == r.lines);
    CHECK(g.lines_per_point() == std::uint64_t(r.per_point));
    CHECK(int(g.lines().size()) * 3 == r.points * r.per_point);
  }
}

TEST_CASE("adjacency means supports meeting in m") {
  Geometry g(8, 2);
  for (int a = 0; a < g.num_points(); ++a)
    for (int b = 0; b < g.num_points(); ++b) {
      bool expect = a != b && popcount(g.support(a) & g.support(b)) == g.m();
      REQUIRE(g.adjacent(a, b) == expect);
    }
  CHECK(g.degree() == int(binom(4, 2) * binom(4, 2)));
}

TEST_CASE("lines are the xor-closed adjacent triples") {
  Geometry g(6, 2);
  std::set<std::vector<int>> seen;
  for (const auto& ln : g.lines()) {
    CHECK(g.support(ln[0]) == (g.support(ln[1]) ^ g.support(ln[2])));
    CHECK(g.adjacent(ln[0], ln[1]));
    CHECK(g.adjacent(ln[1], ln[2]));
    CHECK(g.adjacent(ln[0], ln[2]));
    std::vector<int> key{ln[0], ln[1], ln[2]};
    std::sort(key.begin(), key.end());
    CHECK(seen.insert(key).second);  // no duplicate lines
  }
  // partial linear space: two collinear points lie on exactly one line
  for (int a = 0; a < g.num_points(); ++a)
    for (int b = a + 1; b < g.num_points(); ++b) {
      int count = 0;
      for (const auto& ln : g.lines()) {
        int hits = (ln[0] == a || ln[1] == a || ln[2] == a) +
                   (ln[0] == b || ln[1] == b || ln[2] == b);
        if (hits == 2) ++count;
      }
      CHECK(count == (g.adjacent(a, b) ? 1 : 0));
      if (g.adjacent(a, b)) {
        int c = g.third_point(a, b);
        CHECK(g.support(c) == (g.support(a) ^ g.support(b)));
      } else {
        CHECK(g.third_point(a, b) == -1);
      }
    }
}

TEST_CASE("witness covers all three intersection cases") {
  for (auto [n, m] : {std::pair{6, 2}, {7, 2}, {8, 2}, {9, 3}, {12, 4}}) {
    Geometry g(n, m);
    long checked = 0, bad = 0;
    for (mask_t I : g.point_supports())
      for (mask_t J : g.point_supports()) {
        if (I == J) continue;
        mask_t W = common_neighbor_witness(g, I, J);
        if (popcount(W) != 2 * m || popcount(W & I) != m || popcount(W & J) != m || W == I ||
            W == J)
          ++bad;
        ++checked;
      }
    INFO("(" << n << "," << m << ")");
    CHECK(bad == 0);
    CHECK(checked == long(g.num_points()) * (g.num_points() - 1));
  }
}

TEST_CASE("collinearity graph has diameter at most 2") {
  for (auto [n, m] : {std::pair{3, 1}, {4, 1}, {6, 2}, {7, 2}, {10, 3}}) {
    Geometry g(n, m);
    int d = graph_diameter(g.adjacency());
    CHECK(d >= 0);
    CHECK(d <= 2);
  }
}

TEST_CASE("closure layers and membership") {
  ExtendedGeometry eg(7, 2);
  CHECK(eg.max_layer() == 3);
  CHECK(eg.layer(1).size() == binom(7, 2));
  CHECK(eg.layer(2).size() == binom(7, 4));
  CHECK(eg.layer(3).size() == binom(7, 6));
  CHECK(eg.in_closure(mask_of({1, 2}, 7)));
  CHECK_FALSE(eg.in_closure(mask_of({1, 2, 3}, 7)));
  CHECK_FALSE(eg.in_closure(0));
  size_t total = 0;
  for (int i = 1; i <= eg.max_layer(); ++i) total += eg.layer(i).size();
  CHECK(eg.closure_points().size() == total);
}

TEST_CASE("lambda formula equals brute force on frozen values") {
  CHECK(lambda_count(7, 2, 1) == 10);
  CHECK(lambda_count(7, 2, 2) == 9);
  CHECK(lambda_count(7, 2, 3) == 10);
  CHECK(lambda_count(9, 2, 1) == 35);
  CHECK(lambda_count(9, 2, 2) == 30);
  CHECK(lambda_count(9, 2, 3) == 30);
  CHECK(lambda_count(9, 2, 4) == 35);
  CHECK(lambda_count(5, 1, 1) == 3);
  CHECK(lambda_count(5, 1, 2) == 3);
  CHECK(lambda_count(6, 2, 1) == 4);
  CHECK(lambda_count(6, 2, 2) == 3);
  for (auto [n, m] : {std::pair{6, 2}, {7, 2}, {8, 2}, {9, 3}}) {
    ExtendedGeometry eg(n, m);
    for (int i = 1; i <= eg.max_layer(); ++i)
      for (mask_t X : eg.layer(i)) REQUIRE(lambda_brute(eg, X) == lambda_count(n, m, i));
  }
}

TEST_CASE("pencil structure at a weight-2 center") {
  ExtendedGeometry eg(7, 2);
  mask_t center = mask_of({1, 2}, 7);
  Pencil p = pencil(eg, center);
  CHECK(p.center == center);
  CHECK(p.lines.size() == lambda_count(7, 2, 1));
  for (const auto& pr : p.lines) {
    CHECK((eg.base().support(pr[0]) ^ eg.base().support(pr[1])) == center);
    CHECK(pr[0] < pr[1]);
  }
  CHECK(tilde_components(eg.base(), p).size() == 1);
}

TEST_CASE("pencils connect exactly per the boundary rule at n = 3m") {
  ExtendedGeometry eg(6, 2);
  for (mask_t c : eg.layer(1)) CHECK(tilde_components(eg.base(), pencil(eg, c)).size() == 1);
  for (mask_t c : eg.layer(2)) CHECK(tilde_components(eg.base(), pencil(eg, c)).size() > 1);
}

TEST_CASE("perp and double perp") {
  for (auto [n, expect_line] : {std::pair{6, true}, {7, true}, {9, false}, {10, false}}) {
    Geometry g(n, 2);
    INFO("n = " << n);
    for (int a = 0; a < g.num_points(); ++a) {
      bool all_ok = true;
      g.neighbors(a).for_each([&](int b) {
        if (b <= a) return;
        Bitset pair(g.num_points());
        pair.set(a);
        pair.set(b);
        std::vector<int> got = double_perp(g, pair).to_vector();
        std::vector<int> want{a, b};
        if (expect_line) want.push_back(g.third_point(a, b));
        std::sort(want.begin(), want.end());
        if (got != want) all_ok = false;
      });
      REQUIRE(all_ok);
    }
  }
}

TEST_CASE("perp of a point is its closed neighborhood") {
  Geometry g(7, 2);
  Bitset single(g.num_points());
  single.set(5);
  Bitset p = perp(g, single);
  CHECK(p.test(5));
  CHECK(int(p.count()) == g.degree() + 1);
}

TEST_CASE("maximal cliques are the lines exactly when n = 3m") {
  for (auto [n, m] : {std::pair{3, 1}, {6, 2}, {9, 3}}) {
    Geometry g(n, m);
    std::vector<std::vector<int>> lines;
    for (const auto& ln : g.lines()) {
      std::vector<int> v{ln[0], ln[1], ln[2]};
      std::sort(v.begin(), v.end());
      lines.push_back(std::move(v));
    }
    std::sort(lines.begin(), lines.end());
    CHECK(enumerate_maximal_cliques(g.adjacency()) == lines);
  }
}

TEST_CASE("the 15-point geometry is a triangle-free generalized quadrangle") {
  Geometry g(6, 2);
  // no triangles except inside lines: any adjacent triple is a line
  for (int a = 0; a < g.num_points(); ++a)
    for (int b = a + 1; b < g.num_points(); ++b)
      for (int c = b + 1; c < g.num_points(); ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
          REQUIRE(g.third_point(a, b) == c);
}

TEST_CASE("one-or-all axiom holds at (7,2)") {
  Geometry g(7, 2);
  for (int p = 0; p < g.num_points(); ++p)
    for (const auto& ln : g.lines()) {
      if (p == ln[0] || p == ln[1] || p == ln[2]) continue;
      int c = g.adjacent(p, ln[0]) + g.adjacent(p, ln[1]) + g.adjacent(p, ln[2]);
      REQUIRE((c == 1 || c == 3));
    }
}

TEST_CASE("(7,2) has thirty maximal singular subspaces, all Fano-sized") {
  Geometry g(7, 2);
  auto subs = maximal_singular_subspaces(g);
  REQUIRE(subs.size() == 30);
  for (const auto& s : subs) {
    CHECK(s.size() == 7);
    CHECK(is_singular_set(g, s));
    CHECK(std::is_sorted(s.begin(), s.end()));
  }
  CHECK(std::set<std::vector<int>>(subs.begin(), subs.end()).size() == 30);
}

TEST_CASE("(8,2) maximal cliques: size bound, a non-singular one, no symmetric design") {
  Geometry g(8, 2);
  auto reports = maximal_cliques(g);
  bool saw_other = false;
  for (const auto& r : reports) {
    CHECK(r.members.size() <= 8);
    if (r.kind == CliqueKind::other) {
      saw_other = true;
      CHECK_FALSE(r.design_flag);  // no symmetric 2-design on 8 points with these parameters
    }
  }
  CHECK(saw_other);
}

TEST_CASE("clique sizes never exceed n") {
  for (auto [n, m] : {std::pair{7, 2}, {8, 2}, {9, 3}, {10, 3}}) {
    Geometry g(n, m);
    int worst = 0;
    for_each_maximal_clique(g.adjacency(),
                            [&](const std::vector<int>& c) { worst = std::max(worst, int(c.size())); });
    CHECK(worst <= n);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

#include "eqgeo/codes.hpp"
#include "eqgeo/geometry.hpp"

using namespace eqgeo;

TEST_CASE("parsing and canonical form") {
  Code a = Code::parse({"1100", "0110"});
  Code b = Code::parse({"0110", "1010"});  // same row space, different basis
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.length() == 4);
  CHECK_THROWS_AS(Code::parse({"110", "1100"}), std::invalid_argument);
  CHECK_THROWS_AS(Code::parse({"12"}), std::invalid_argument);
}

TEST_CASE("codewords enumerate the whole row space") {
  Code c = Code::parse({"1100110", "0011010", "1111111"});
  auto words = c.nonzero_codewords();
  CHECK(words.size() == (size_t{1} << c.dim()) - 1);
  std::set<mask_t> distinct(words.begin(), words.end());
  CHECK(distinct.size() == words.size());
  CHECK_FALSE(distinct.count(0));
}

TEST_CASE("equidistance detection") {
  CHECK(is_equidistant(Code::parse({"1100", "0110"})) == 2);
  CHECK(is_equidistant(Code::parse({"1111"})) == 4);
  CHECK_FALSE(is_equidistant(Code::parse({"1000", "0100"})));
  CHECK_FALSE(is_equidistant(Code::parse({"1110", "0011"})));
}

TEST_CASE("frozen decompositions") {
  CHECK(bonis_decompose(Code::parse({"1100", "0110"})) == EquidistantProfile{2, 1, 1, 2});
  CHECK(bonis_decompose(Code::parse({"1111"})) == EquidistantProfile{1, 4, 0, 4});
  CHECK(bonis_decompose(Code::parse({"110", "011"})) == EquidistantProfile{2, 1, 0, 2});
  CHECK_THROWS_AS(bonis_decompose(Code::parse({"1000", "0100"})), std::invalid_argument);
}

TEST_CASE("replicated simplex round-trips") {
  for (int k = 1; k <= 4; ++k)
    for (int s = 1; s <= 3; ++s)
      for (int r = 0; r <= 3; ++r) {
        Code c = replicated_simplex(k, s, r);
        CHECK(c.length() == ((1 << k) - 1) * s + r);
        REQUIRE(is_equidistant(c) == s * (1 << (k - 1)));
        CHECK(bonis_decompose(c) == EquidistantProfile{k, s, r, s * (1 << (k - 1))});
      }
  CHECK_THROWS_AS(replicated_simplex(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(replicated_simplex(2, 0, 0), std::invalid_argument);
}

TEST_CASE("column fingerprint is basis-independent") {
  Code a = Code::parse({"110100", "011010"});
  Code b = Code::parse({"101110", "011010"});  // row-equivalent presentation
  CHECK(column_fingerprint(a) == column_fingerprint(b));
}

TEST_CASE("maximal equidistant dimension") {
  CHECK(max_equidistant_dim(7, 4) == 3);
  CHECK(max_equidistant_dim(6, 4) == 2);
  CHECK(max_equidistant_dim(3, 2) == 2);
  CHECK(max_equidistant_dim(1, 1) == 1);
  CHECK(max_equidistant_dim(2, 3) == 0);  // weight 3 cannot fit in length 2
  CHECK(max_equidistant_dim(3, 3) == 1);  // odd t forces k = 1
  CHECK(max_equidistant_dim(64, 32) == 6);
  CHECK_THROWS_AS(max_equidistant_dim(0, 1), std::invalid_argument);
}

TEST_CASE("lines of the 15-point geometry carry doubled simplex codes") {
  Geometry g(6, 2);
  for (const auto& ln : g.lines()) {
    Code c = code_from_subspace(g, {ln[0], ln[1], ln[2]});
    CHECK(bonis_decompose(c) == EquidistantProfile{2, 2, 0, 4});
    CHECK(subspace_from_code(g, c) == [&] {
      std::vector<int> v{ln[0], ln[1], ln[2]};
      std::sort(v.begin(), v.end());
      return v;
    }());
  }
}

TEST_CASE("Fano subspaces of (7,2) carry simplex codes") {
  Geometry g(7, 2);
  auto subs = maximal_singular_subspaces(g);
  REQUIRE(subs.size() == 30);
  for (const auto& sub : subs) {
    Code c = code_from_subspace(g, sub);
    CHECK(bonis_decompose(c) == EquidistantProfile{3, 1, 0, 4});
    CHECK(subspace_from_code(g, c) == sub);
  }
}

TEST_CASE("bridge rejects non-singular point sets") {
  Geometry g(7, 2);
  // two non-collinear points
  int a = 0, b = -1;
  for (int p = 1; p < g.num_points() && b < 0; ++p)
    if (!g.adjacent(a, p)) b = p;
  REQUIRE(b >= 0);
  CHECK_THROWS_AS(code_from_subspace(g, {a, b}), std::invalid_argument);
  CHECK_THROWS_AS(code_from_subspace(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(subspace_from_code(g, Code::parse({"11000000"})), std::invalid_argument);
}

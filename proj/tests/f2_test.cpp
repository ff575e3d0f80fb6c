#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>
#include <vector>

#include "eqgeo/bitset.hpp"
#include "eqgeo/f2.hpp"
#include "eqgeo/sets.hpp"

using namespace eqgeo;

TEST_CASE("mask utilities") {
  CHECK(full_mask(3) == 0b111u);
  CHECK(popcount(mask_t{0b1011}) == 3);
  CHECK(mask_of({1, 3, 4}, 6) == 0b1101u);
  CHECK_THROWS_AS(mask_of({0}, 6), std::out_of_range);
  CHECK_THROWS_AS(mask_of({7}, 6), std::out_of_range);
  CHECK(mask_elems(mask_t{0b1101}) == std::vector<int>{1, 3, 4});
  CHECK(set_to_string(mask_t{0b1101}) == "{1,3,4}");
  CHECK(parse_set("{1,3,4}", 6) == 0b1101u);
  CHECK(parse_set("1, 3, 4", 6) == 0b1101u);
  CHECK_THROWS_AS(parse_set("1,,3", 6), std::invalid_argument);
  CHECK(lowest_bits(mask_t{0b110110}, 2) == 0b110u);
  CHECK_THROWS_AS(lowest_bits(mask_t{0b11}, 3), std::invalid_argument);
}

TEST_CASE("colex enumeration is sorted and complete") {
  auto subs = all_subsets(6, 3);
  REQUIRE(subs.size() == binom(6, 3));
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (mask_t s : subs) CHECK(popcount(s) == 3);
  CHECK(std::set<mask_t>(subs.begin(), subs.end()).size() == subs.size());
}

TEST_CASE("binom small table") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(12, 6) == 924);
  CHECK(binom(4, 5) == 0);
  CHECK(binom(64, 32) > 0);  // must not overflow
}

TEST_CASE("bitset basics") {
  Bitset b(70);
  b.set(0);
  b.set(69);
  CHECK(b.count() == 2);
  CHECK(b.test(69));
  CHECK(b.first() == 0);
  Bitset c(70);
  c.set(69);
  CHECK(b.intersects(c));
  b -= c;
  CHECK_FALSE(b.test(69));
  CHECK(b.to_vector() == std::vector<int>{0});
  int visits = 0;
  c.for_each([&](int) { ++visits; });
  CHECK(visits == 1);
}

TEST_CASE("vector parsing and support round-trip") {
  F2Vector v = F2Vector(6, mask_of({2, 5}, 6));
  CHECK(v.to_string() == "010010");
  CHECK(F2Vector::parse("010010") == v);
  CHECK(v.weight() == 2);
  CHECK((v ^ F2Vector::unit(6, 2)).support() == std::vector<int>{5});
}

TEST_CASE("hamming distance is a metric (exhaustive n <= 8)") {
  long violations = 0;
  for (int n = 1; n <= 8; ++n) {
    int total = 1 << n;
    for (int a = 0; a < total; ++a)
      for (int b = 0; b < total; ++b) {
        F2Vector x(n, mask_t(a)), y(n, mask_t(b));
        int d = hamming(x, y);
        if (d != popcount(mask_t(a ^ b))) ++violations;
        if ((d == 0) != (a == b)) ++violations;
        if (d != hamming(y, x)) ++violations;
        if (n <= 5)
          for (int c = 0; c < total; ++c)
            if (d > hamming(x, F2Vector(n, mask_t(c))) + hamming(F2Vector(n, mask_t(c)), y))
              ++violations;
      }
  }
  CHECK(violations == 0);
}

TEST_CASE("rank of standard examples") {
  std::vector<mask_t> rows{F2Vector::parse("1100").word(), F2Vector::parse("0110").word(),
                           F2Vector::parse("1010").word()};
  CHECK(f2_rank(rows) == 2);
  rows.push_back(F2Vector::parse("0001").word());
  CHECK(f2_rank(rows) == 3);
  CHECK(f2_rank({}) == 0);
}

TEST_CASE("linear map algebra") {
  LinearMap id = LinearMap::identity(4);
  LinearMap tau = LinearMap::permutation({2, 1, 3, 4});
  CHECK(tau.apply(F2Vector::unit(4, 1)) == F2Vector::unit(4, 2));
  CHECK(tau.compose(tau) == id);
  CHECK(tau.inverse() == tau);
  CHECK(tau.rank() == 4);
  // compose applies the right-hand factor first
  LinearMap rho = LinearMap::permutation({2, 3, 1, 4});
  CHECK(rho.compose(tau).apply(F2Vector::unit(4, 1)) == rho.apply(tau.apply(F2Vector::unit(4, 1))));
}

TEST_CASE("special maps are involutions with the stated unit images") {
  int n = 7;
  LinearMap l3 = make_special_map(SpecialMapKind::l, {3}, n);
  CHECK(l3.apply(F2Vector::unit(n, 3)) == F2Vector::ones(n));
  CHECK(l3.apply(F2Vector::unit(n, 1)) == F2Vector::unit(n, 1));
  CHECK(map_order(l3) == 2);

  n = 8;
  LinearMap s12 = make_special_map(SpecialMapKind::s, {1, 2}, n);
  LinearMap s12p = make_special_map(SpecialMapKind::s_prime, {1, 2}, n);
  F2Vector e1 = F2Vector::unit(n, 1), e2 = F2Vector::unit(n, 2);
  F2Vector c1 = F2Vector::ones(n) ^ e1, c2 = F2Vector::ones(n) ^ e2;
  CHECK(s12.apply(e1) == c1);
  CHECK(s12.apply(e2) == c2);
  CHECK(s12p.apply(e1) == c2);
  CHECK(s12p.apply(e2) == c1);
  CHECK(s12.apply(F2Vector::unit(n, 5)) == F2Vector::unit(n, 5));
  CHECK(map_order(s12) == 2);
  CHECK(map_order(s12p) == 2);
  // s' = s composed with the transposition of the two indices
  LinearMap tau = LinearMap::permutation({2, 1, 3, 4, 5, 6, 7, 8});
  CHECK(s12.compose(tau) == s12p);
}

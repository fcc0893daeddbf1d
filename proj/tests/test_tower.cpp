#include <doctest.h>

#include <numeric>
#include <vector>

#include "polyadic/tower.hpp"

using namespace polyadic;

namespace {

std::vector<long> to_longs(const std::vector<Int>& xs) {
  std::vector<long> out;
  for (const Int& x : xs) out.push_back(x.convert_to<long>());
  return out;
}

// Exhaustive oracle: the subset {a*x mod M : x in Z/M} as a sorted list.
std::vector<std::uint64_t> multiples_mod(std::uint64_t a, std::uint64_t m) {
  std::vector<bool> seen(m, false);
  std::uint64_t v = 0;
  do {
    seen[v] = true;
    v = (v + a) % m;
  } while (v != 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < m; ++r) {
    if (seen[r]) out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("build_tower populates generators and moduli per kind") {
  auto fact = ModulusTower::factorial(4);
  CHECK(to_longs(fact->generators()) == std::vector<long>{1, 2, 6, 24});
  CHECK(to_longs(fact->moduli()) == std::vector<long>{1, 2, 6, 24});

  auto p2 = ModulusTower::prime_power(2, 3);
  CHECK(to_longs(p2->generators()) == std::vector<long>{2, 4, 8});
  CHECK(to_longs(p2->moduli()) == std::vector<long>{2, 4, 8});

  auto ex = ModulusTower::explicit_tower({4, 6});
  CHECK(to_longs(ex->generators()) == std::vector<long>{4, 6});
  CHECK(to_longs(ex->moduli()) == std::vector<long>{4, 12});

  auto prim = ModulusTower::primorial(4);
  CHECK(to_longs(prim->moduli()) == std::vector<long>{2, 6, 30, 210});
}

TEST_CASE("build_tower rejects bad input") {
  CHECK_THROWS_AS(ModulusTower::prime_power(4, 3), TowerSpecError);
  CHECK_THROWS_AS(ModulusTower::explicit_tower({}), TowerSpecError);
  CHECK_THROWS_AS(ModulusTower::explicit_tower({Int(0)}), TowerSpecError);
  CHECK_THROWS_AS(ModulusTower::factorial(0), TowerSpecError);
}

TEST_CASE("tower spec grammar") {
  CHECK(parse_tower_spec("factorial:4")->spec_string() == "factorial:4");
  CHECK(parse_tower_spec("prime:2:16")->kind() == TowerKind::PrimePower);
  CHECK(parse_tower_spec("primorial:3")->top_modulus() == 30);
  CHECK(parse_tower_spec("explicit:4,6")->top_modulus() == 12);
  CHECK(parse_tower_spec("factorial:12", 4)->depth() == 4);
  CHECK_THROWS_AS(parse_tower_spec("factorial"), TowerSpecError);
  CHECK_THROWS_AS(parse_tower_spec("prime:6:4"), TowerSpecError);
  CHECK_THROWS_AS(parse_tower_spec("prime:5"), TowerSpecError);
  CHECK_THROWS_AS(parse_tower_spec("explicit:"), TowerSpecError);
  CHECK_THROWS_AS(parse_tower_spec("fibonacci:3"), TowerSpecError);
  CHECK_THROWS_AS(parse_tower_spec("factorial: 4"), TowerSpecError);
}

TEST_CASE("cap_valuation per kind") {
  auto fact = ModulusTower::factorial(4);
  CHECK(fact->cap_valuation(5).kind == CapReport::Kind::Infinite);

  auto p2 = ModulusTower::prime_power(2, 3);
  auto r = p2->cap_valuation(3);
  CHECK(r.kind == CapReport::Kind::Finite);
  CHECK(r.value == 0);
  CHECK(p2->cap_valuation(2).kind == CapReport::Kind::Infinite);

  auto prim = ModulusTower::primorial(4);
  auto rp = prim->cap_valuation(7);
  CHECK(rp.kind == CapReport::Kind::Finite);
  CHECK(rp.value == 1);

  auto ex = ModulusTower::explicit_tower({4, 6});
  auto re = ex->cap_valuation(2);
  CHECK(re.kind == CapReport::Kind::UnknownAtDepth);
  CHECK(re.value == 2);  // v_2(12)

  CHECK_THROWS_AS(fact->cap_valuation(6), std::invalid_argument);
}

TEST_CASE("minimal_generator") {
  auto fact = ModulusTower::factorial(6);
  auto g = fact->minimal_generator(12);
  CHECK(g.g == 12);
  CHECK(g.exact);

  auto p2 = ModulusTower::prime_power(2, 5);
  auto g2 = p2->minimal_generator(12);
  CHECK(g2.g == 4);
  CHECK(g2.exact);
  // 12 and 4 generate the same subset of Z/2^5.
  CHECK(multiples_mod(12, 32) == multiples_mod(4, 32));

  auto prim = ModulusTower::primorial(4);
  auto g3 = prim->minimal_generator(12);
  CHECK(g3.g == 6);
  CHECK(g3.exact);

  auto ex = ModulusTower::explicit_tower({4, 6});
  auto g4 = ex->minimal_generator(8);
  CHECK(g4.g == 4);  // capped at v_2(12) = 2
  CHECK_FALSE(g4.exact);

  CHECK_THROWS_AS(fact->minimal_generator(0), std::invalid_argument);
}

TEST_CASE("in_A") {
  auto fact = ModulusTower::factorial(6);
  CHECK(fact->in_A(7).member);
  auto p2 = ModulusTower::prime_power(2, 5);
  CHECK_FALSE(p2->in_A(12).member);
  CHECK(p2->in_A(8).member);
}

TEST_CASE("is_cd_set") {
  CHECK(is_cd_set({Int(1)}));
  CHECK(is_cd_set({Int(1), Int(2), Int(3), Int(6)}));
  CHECK_FALSE(is_cd_set({Int(1), Int(2), Int(3)}));
  CHECK_FALSE(is_cd_set({}));
  CHECK_FALSE(is_cd_set({Int(2), Int(4)}));  // missing 1
}

TEST_CASE("moduli form a divisibility chain with B_n | M_n") {
  for (TowerPtr t : {ModulusTower::factorial(8), ModulusTower::prime_power(3, 6),
                     ModulusTower::primorial(5),
                     ModulusTower::explicit_tower({10, 4, 9, 14})}) {
    for (unsigned n = 1; n <= t->depth(); ++n) {
      CHECK(t->modulus(n) % t->generator(n) == 0);
      if (n < t->depth()) CHECK(t->modulus(n + 1) % t->modulus(n) == 0);
    }
  }
}

TEST_CASE("minimal_generator is idempotent up to 1000") {
  for (TowerPtr t : {ModulusTower::factorial(8), ModulusTower::prime_power(2, 16),
                     ModulusTower::primorial(6),
                     ModulusTower::explicit_tower({4, 6, 10})}) {
    for (Int m = 1; m <= 1000; ++m) {
      Int g = t->minimal_generator(m).g;
      CHECK(t->minimal_generator(g).g == g);
      CHECK(m % g == 0);
    }
  }
}

TEST_CASE("ideal-set equality at finite level (exhaustive oracle)") {
  for (TowerPtr t : {ModulusTower::factorial(8), ModulusTower::prime_power(2, 16),
                     ModulusTower::primorial(5)}) {
    std::uint64_t top = t->top_modulus().convert_to<std::uint64_t>();
    REQUIRE(top <= 1000000);
    for (std::uint64_t m = 1; m <= 200; ++m) {
      auto mg = t->minimal_generator(m);
      REQUIRE(mg.exact);
      std::uint64_t g = mg.g.convert_to<std::uint64_t>();
      CHECK(multiples_mod(m % top, top) == multiples_mod(g % top, top));
    }
  }
}

TEST_CASE("divisibility transports between Z and the tower (Lemma-1 style)") {
  // Depth 16 so that v_p(M_N) >= v_p(m*a) for every m below and a <= 500:
  // v_2(16!) = 15 and m*a <= 12000 < 2^14.
  auto t = ModulusTower::factorial(16);
  for (std::uint64_t m : {2, 3, 4, 6, 8, 12, 24}) {
    REQUIRE(t->in_A(m).member);
    for (std::uint64_t a = 0; a <= 500; ++a) {
      bool in_z = a % m == 0;
      bool at_all_levels = true;
      for (unsigned n = 1; n <= t->depth() && at_all_levels; ++n) {
        // m*x == a (mod M_n) is solvable iff gcd(m, M_n) | a.
        Int g = boost::multiprecision::gcd(Int(m), t->modulus(n));
        at_all_levels = Int(a) % g == 0;
      }
      CHECK(in_z == at_all_levels);
    }
  }
}

TEST_CASE("the image of minimal_generator behaves as a CD-set") {
  // Strict check on the prime-power tower, whose A-set {1, 2, 4, ...} is
  // closed at any finite truncation.
  auto p2 = ModulusTower::prime_power(2, 16);
  std::set<Int> a_set;
  for (Int n = 1; n <= 300; ++n) a_set.insert(p2->minimal_generator(n).g);
  CHECK(is_cd_set(a_set));

  // The factorial A-set is all of N; a finite slice can only be checked with
  // lcms that stay inside the slice.
  auto fact = ModulusTower::factorial(8);
  std::set<Int> slice;
  for (Int n = 1; n <= 300; ++n) slice.insert(fact->minimal_generator(n).g);
  CHECK(slice.count(1) == 1);
  for (const Int& m : slice) {
    for (Int d = 1; d * d <= m; ++d) {
      if (m % d == 0) {
        CHECK(slice.count(d) == 1);
        CHECK(slice.count(m / d) == 1);
      }
    }
  }
  for (const Int& x : slice) {
    for (const Int& y : slice) {
      Int l = boost::multiprecision::lcm(x, y);
      if (l <= 300) CHECK(slice.count(l) == 1);
    }
  }
}

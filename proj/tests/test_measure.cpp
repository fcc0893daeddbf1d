#include <doctest.h>

#include <random>

#include "polyadic/measure.hpp"

using namespace polyadic;

namespace {

// Random eventually-periodic sets built through the public algebra, with
// periods drawn from smooth numbers so factorial-tower caps saturate early.
EventuallyPeriodicSet random_set(std::mt19937_64& rng, int depth = 2) {
  auto ap = [&rng]() {
    static const std::uint64_t qs[] = {2, 3, 4, 5, 6, 8, 9, 10, 12};
    std::uint64_t q = qs[rng() % std::size(qs)];
    return EventuallyPeriodicSet::progression(rng() % (2 * q), q);
  };
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 5 == 0) {
      std::set<std::uint64_t> pts;
      for (int i = 0; i < 3; ++i) pts.insert(rng() % 40);
      return EventuallyPeriodicSet::finite(pts);
    }
    return ap();
  }
  EventuallyPeriodicSet a = random_set(rng, depth - 1);
  EventuallyPeriodicSet b = random_set(rng, depth - 1);
  switch (rng() % 4) {
    case 0:
      return set_union(a, b);
    case 1:
      return set_intersection(a, b);
    case 2:
      return set_difference(a, b);
    default:
      return a.complement();
  }
}

// Scan oracle for R(S:M): mark classes hit by S over a range long enough to
// contain a witness for every occupied class even after removals.
std::uint64_t count_classes_by_scan(const EventuallyPeriodicSet& s,
                                    std::uint64_t m) {
  std::uint64_t l = std::lcm(s.period(), m);
  std::uint64_t bound = l * (s.removed().size() + 2);
  for (std::uint64_t a : s.added()) bound = std::max(bound, a + 1);
  std::vector<bool> hit(m, false);
  for (std::uint64_t x = 0; x < bound; ++x) {
    if (s.contains(x)) hit[x % m] = true;
  }
  std::uint64_t count = 0;
  for (bool h : hit) count += h;
  return count;
}

}  // namespace

TEST_CASE("parse_set_expression") {
  auto ap = parse_set_expression("AP(3,4)");
  CHECK(ap.period() == 4);
  CHECK(ap.residues() == std::set<std::uint64_t>{3});
  CHECK(ap.added().empty());
  CHECK(ap.removed().empty());

  auto both = parse_set_expression("AP(0,2) & AP(0,3)");
  CHECK(both.period() == 6);
  CHECK(both.residues() == std::set<std::uint64_t>{0});

  auto with_point = parse_set_expression("AP(1,2) | {4}");
  CHECK(with_point.period() == 2);
  CHECK(with_point.residues() == std::set<std::uint64_t>{1});
  CHECK(with_point.added() == std::set<std::uint64_t>{4});

  // AP(a,q) starts at a: earlier members of the class are carved out.
  auto shifted = parse_set_expression("AP(4,4)");
  CHECK(shifted.period() == 4);
  CHECK(shifted.residues() == std::set<std::uint64_t>{0});
  CHECK(shifted.removed() == std::set<std::uint64_t>{0});
  CHECK_FALSE(shifted.contains(0));
  CHECK(shifted.contains(4));

  CHECK(parse_set_expression("~(AP(0,2)) & {1,3,8}").contains(1));
  CHECK_THROWS_AS(parse_set_expression("AP(1,0)"), SetParseError);
  try {
    parse_set_expression("AP(3,4) | ");
    FAIL("expected SetParseError");
  } catch (const SetParseError& e) {
    CHECK(e.position() == 10);
  }
}

TEST_CASE("set algebra canonicalizes") {
  auto all = set_union(parse_set_expression("AP(0,2)"),
                       parse_set_expression("AP(1,2)"));
  CHECK(all.period() == 1);
  CHECK(all.residues() == std::set<std::uint64_t>{0});
  CHECK(all == EventuallyPeriodicSet::naturals());

  auto evens_no_zero = set_difference(parse_set_expression("AP(0,2)"),
                                      parse_set_expression("{0}"));
  CHECK(evens_no_zero.period() == 2);
  CHECK(evens_no_zero.removed() == std::set<std::uint64_t>{0});

  auto compl3 = parse_set_expression("AP(0,3)").complement();
  CHECK(compl3.period() == 3);
  CHECK(compl3.residues() == std::set<std::uint64_t>{1, 2});

  // Complement is an involution.
  auto s = parse_set_expression("AP(1,6) | {4} - {7}");
  CHECK(s.complement().complement() == s);
}

TEST_CASE("count_incongruent") {
  CHECK(count_incongruent(parse_set_expression("AP(3,4)"), 8) == 2);
  for (std::uint64_t m : {2, 3, 4, 6, 8}) {
    Int big = 24;
    CHECK(count_incongruent(
              EventuallyPeriodicSet::progression(0, m), big) == big / m);
  }
  CHECK(count_incongruent(parse_set_expression("{5}"), 24) == 1);
  // An added point already covered by the periodic part adds no class.
  CHECK(count_incongruent(parse_set_expression("AP(1,2) | {4}"), 2) == 2);
}

TEST_CASE("count_incongruent agrees with the scan oracle") {
  std::mt19937_64 rng(20260823);
  auto fact = ModulusTower::factorial(6);
  for (int i = 0; i < 200; ++i) {
    EventuallyPeriodicSet s = random_set(rng);
    for (unsigned n = 1; n <= fact->depth(); ++n) {
      std::uint64_t m = fact->modulus(n).convert_to<std::uint64_t>();
      CHECK(count_incongruent(s, fact->modulus(n)) ==
            Int(count_classes_by_scan(s, m)));
    }
  }
}

TEST_CASE("nu_star") {
  auto fact = ModulusTower::factorial(8);
  for (std::uint64_t m = 1; m <= 20; ++m) {
    for (std::uint64_t r = 0; r < m; ++r) {
      auto d = nu_star(EventuallyPeriodicSet::progression(r, m), *fact);
      CHECK(d.value == Rat(1, m));
      CHECK(d.exact);
    }
  }

  CHECK(nu_star(parse_set_expression("{5,9,14}"), *fact).value == 0);

  auto p2 = ModulusTower::prime_power(2, 16);
  CHECK(nu_star(parse_set_expression("AP(0,3)"), *p2).value == 1);

  // Explicit towers can only answer up to their depth.
  auto ex = ModulusTower::explicit_tower({4, 6});
  auto d = nu_star(parse_set_expression("AP(0,8)"), *ex);
  CHECK_FALSE(d.exact);
}

TEST_CASE("submeasure laws") {
  std::mt19937_64 rng(5);
  auto fact = ModulusTower::factorial(8);
  CHECK(nu_star(EventuallyPeriodicSet::empty(), *fact).value == 0);
  CHECK(nu_star(EventuallyPeriodicSet::naturals(), *fact).value == 1);
  for (int i = 0; i < 1000; ++i) {
    EventuallyPeriodicSet s = random_set(rng);
    EventuallyPeriodicSet t = random_set(rng);
    Rat vs = nu_star(s, *fact).value;
    Rat vt = nu_star(t, *fact).value;
    CHECK(nu_star(set_union(s, t), *fact).value <= vs + vt);
    CHECK(nu_star(set_intersection(s, t), *fact).value <= vs);  // subset
    CHECK(nu_star(set_difference(s, t), *fact).value <= vs);    // subset
  }
}

TEST_CASE("R(S:M_n)/M_n is non-increasing in n") {
  std::mt19937_64 rng(9);
  auto fact = ModulusTower::factorial(6);
  for (int i = 0; i < 100; ++i) {
    EventuallyPeriodicSet s = random_set(rng);
    Rat prev = 2;
    for (unsigned n = 1; n <= fact->depth(); ++n) {
      Rat ratio(count_incongruent(s, fact->modulus(n)), fact->modulus(n));
      CHECK(ratio <= prev);
      prev = ratio;
    }
  }
}

TEST_CASE("haar_coset") {
  auto fact = ModulusTower::factorial(8);
  CHECK(haar_coset(*fact, 1, 6) == Rat(1, 6));
  auto p2 = ModulusTower::prime_power(2, 16);
  CHECK(haar_coset(*p2, 0, 12) == Rat(1, 4));
  CHECK(haar_coset(*fact, 0, 1) == 1);
  CHECK_THROWS_AS(haar_coset(*fact, 6, 6), std::invalid_argument);
}

TEST_CASE("closure_member") {
  auto fact = ModulusTower::factorial(8);
  auto e = [&](long v) { return PolyadicNumber::embed(fact, v); };

  CHECK(closure_member(e(7), parse_set_expression("AP(3,4)")));

  // 0 is not in {m, 2m, ...} but is in its closure: m*M_n is a witness at
  // every level.
  for (std::uint64_t m : {2, 4, 7}) {
    auto s = EventuallyPeriodicSet::progression(m, m);
    CHECK_FALSE(s.contains(0));
    CHECK(closure_member(e(0), s));
  }

  CHECK_FALSE(closure_member(e(1), parse_set_expression("AP(0,2)")));

  // Finite sets are closed: membership in the closure is membership.
  auto pts = parse_set_expression("{5,9,14}");
  CHECK(closure_member(e(9), pts));
  CHECK_FALSE(closure_member(e(10), pts));
}

TEST_CASE("sampled elements of S lie in cl(S)") {
  std::mt19937_64 rng(13);
  auto fact = ModulusTower::factorial(6);
  for (int i = 0; i < 100; ++i) {
    EventuallyPeriodicSet s = random_set(rng);
    for (std::uint64_t x = 0; x < 120; ++x) {
      if (s.contains(x)) {
        CHECK(closure_member(PolyadicNumber::embed(fact, Int(x)), s));
      }
    }
  }
}

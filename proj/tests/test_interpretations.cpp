#include "supercat/exact_arith.hpp"
#include "supercat/interpretations.hpp"

#include <doctest.h>

#include <set>

using namespace supercat;

TEST_CASE("Path_0 membership and family levels") {
  CHECK(is_path0_member(parse_path("URRURU"), 1, 2));
  CHECK_FALSE(is_path0_member(parse_path("UURRRR"), 1, 2));
  CHECK(family_level(parse_path("UURRRR"), 1, 2) == -1);
  CHECK(family_level(parse_path("RRUUUU"), 1, 2) == 1);
  CHECK(family_level(parse_path("RUUR"), 1, 1) == 0);
  CHECK_FALSE(family_level(parse_path("RRRU"), 1, 1).has_value());
}

TEST_CASE("theorem31_predicate examples") {
  CHECK(theorem31_predicate(parse_path("URRURU"), 1, 2));
  CHECK_FALSE(theorem31_predicate(parse_path("URRRUU"), 1, 2));
  CHECK(theorem31_predicate(parse_path("RU"), 1, 0));
  CHECK_THROWS_AS(theorem31_predicate(parse_path("UURRRR"), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(theorem31_predicate(parse_path("RURURURURU"), 1, 4), std::out_of_range);
}

TEST_CASE("count_theorem31 examples") {
  CHECK(count_theorem31(1, 2) == BigNat(10));
  CHECK(count_theorem31(2, 0) == BigNat(6));
  CHECK(count_theorem31(1, 3) == BigNat(28));
  CHECK_THROWS_AS(count_theorem31(1, 4), std::out_of_range);
}

TEST_CASE("count_theorem31 equals S(m, m+s)") {
  for (std::int64_t m = 0; m <= 7; ++m)
    for (std::int64_t s = 0; s <= 3; ++s) CHECK(count_theorem31(m, s) == super_catalan_direct(m, m + s));
}

TEST_CASE("for s <= 3 no Path_0 member meets both l3 and l4") {
  for (std::int64_t m = 0; m <= 8; ++m) {
    for (std::int64_t s = 0; s <= 3; ++s) {
      const LineSet lines(m, s);
      bool found = false;
      for_each_path({m, m}, {m + s, m + s}, [&](const LatticePath& t) {
        found = found || (intersects(t, lines.l3) && intersects(t, lines.l4));
      });
      CHECK_FALSE(found);
    }
  }
}

TEST_CASE("inject_level1 example and round trip") {
  const LatticePath p = parse_path("UURRRR");
  const LatticePath img = inject_level1(p, 1, 2);
  CHECK(img.to_string() == "URRRUU");
  CHECK(uninject_level1(img, 1, 2, -1) == p);
  CHECK_THROWS_AS(inject_level1(parse_path("URRURU"), 1, 2), std::invalid_argument);
}

TEST_CASE("inject_level1 images: injective, exact, disjoint") {
  for (std::int64_t m = 0; m <= 5; ++m) {
    for (std::int64_t s = 0; s <= 3; ++s) {
      CAPTURE(m);
      CAPTURE(s);
      const LineSet lines(m, s);
      std::set<LatticePath> img[2];
      for (int side = 0; side < 2; ++side) {
        const std::int64_t level = side == 0 ? -1 : 1;
        std::size_t domain = 0;
        for_each_family_member(PathFamilySpec(m, s, level), [&](const LatticePath& p) {
          ++domain;
          const LatticePath q = inject_level1(p, m, s);
          REQUIRE(is_path0_member(q, m, s));
          REQUIRE(uninject_level1(q, m, s, level) == p);
          img[side].insert(q);
        });
        CHECK(img[side].size() == domain);
      }
      std::set<LatticePath> want14, want23;
      for_each_family_member(PathFamilySpec(m, s, 0), [&](const LatticePath& p) {
        if (intersects(p, lines.l1) && intersects(p, lines.l4)) want14.insert(p);
        if (intersects(p, lines.l2) && intersects(p, lines.l3)) want23.insert(p);
      });
      CHECK(img[0] == want14);
      CHECK(img[1] == want23);
      for (const auto& q : img[0]) CHECK(img[1].count(q) == 0);
    }
  }
}

TEST_CASE("classify_tail") {
  CHECK(classify_tail(parse_path("UURRRRUU", {3, 3})) == TailClass::L3ThenL4);
  CHECK(classify_tail(parse_path("RRUUUURR", {3, 3})) == TailClass::L4ThenL3);
  CHECK(classify_tail(parse_path("RURU", {5, 5})) == TailClass::AvoidsBoth);
  CHECK(classify_tail(parse_path("UURR", {0, 0})) == TailClass::L3Only);
  CHECK(classify_tail(parse_path("RRUU", {2, 2})) == TailClass::L4Only);
  CHECK_THROWS_AS(classify_tail(parse_path("RRU", {0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(classify_tail(parse_path("RU", {0, 1})), std::invalid_argument);
}

TEST_CASE("s = 4 tails: exactly the two canonical tails hit both l3 and l4") {
  std::vector<LatticePath> both;
  for_each_path({2, 2}, {6, 6}, [&](const LatticePath& t) {
    const TailClass c = classify_tail(t);
    if (c == TailClass::L3ThenL4 || c == TailClass::L4ThenL3) both.push_back(t);
  });
  REQUIRE(both.size() == 2);
  CHECK(both[0] == canonical_tail(TailClass::L4ThenL3, 2, 4));
  CHECK(both[1] == canonical_tail(TailClass::L3ThenL4, 2, 4));
}

TEST_CASE("for s <= 3 the two-line tail classes are empty") {
  for (std::int64_t s = 0; s <= 3; ++s) {
    for_each_path({1, 1}, {1 + s, 1 + s}, [&](const LatticePath& t) {
      const TailClass c = classify_tail(t);
      CHECK(c != TailClass::L3ThenL4);
      CHECK(c != TailClass::L4ThenL3);
    });
  }
}

TEST_CASE("map_level2 trace for m = 2") {
  const LatticePath p = parse_path("UUUURRRRRRRR");
  REQUIRE(family_level(p, 2, 4) == -2);
  const Level2Image img = map_level2(p, 2, 4);
  CHECK(img.outer_pivot == 3);  // (0,3) on l8
  CHECK(img.inner_pivot == 1);  // (0,1) on l1
  CHECK(img.image.prefix(4).to_string() == "URRU");
  CHECK(img.image.prefix(4).end_point() == GridPoint{2, 2});
  CHECK(img.image.suffix(4) == canonical_tail(TailClass::L3ThenL4, 2, 4));
  CHECK(unmap_level2(img.image, 2, 4, -2) == p);
}

TEST_CASE("map_level2 is injective with the stated image pattern") {
  for (std::int64_t m = 2; m <= 7; ++m) {
    const LineSet lines(m, 4);
    std::set<LatticePath> images;
    std::size_t domain = 0;
    for (std::int64_t level : {-2, 2}) {
      for_each_family_member(PathFamilySpec(m, 4, level), [&](const LatticePath& p) {
        ++domain;
        const Level2Image img = map_level2(p, m, 4);
        const LatticePath head = img.image.prefix(static_cast<std::size_t>(2 * m));
        REQUIRE(is_path0_member(img.image, m, 4));
        REQUIRE(intersects(img.image, lines.l3));
        REQUIRE(intersects(img.image, lines.l4));
        if (level == -2) REQUIRE(hits_in_order(head, lines.l1, lines.l2));
        else REQUIRE(hits_in_order(head, lines.l2, lines.l1));
        REQUIRE(unmap_level2(img.image, m, 4, level) == p);
        images.insert(img.image);
      });
    }
    CHECK(images.size() == domain);
    CHECK(BigNat(domain) == count_all_four_l1_before_l2(m));
  }
}

TEST_CASE("theorem41 examples") {
  CHECK(count_theorem41(0, Variant::AsStated) == BigNat(70));
  CHECK(count_theorem41(0, Variant::OrderNegated) == BigNat(70));
  CHECK(count_theorem41(1, Variant::AsStated) == BigNat(84));
  CHECK(count_theorem41(1, Variant::OrderNegated) == BigNat(84));
  CHECK(count_s1(1) == BigNat(0));
  CHECK(count_s2(1) == BigNat(0));
  CHECK(count_theorem41(2, Variant::OrderNegated) == BigNat(198));
  // The readings coincide at m = 2 and first separate at m = 3.
  CHECK(count_theorem41(2, Variant::AsStated) == BigNat(198));
  CHECK(count_theorem41(3, Variant::AsStated) == BigNat(568));
  CHECK(count_theorem41(3, Variant::OrderNegated) == BigNat(572));
  CHECK_THROWS_AS(theorem41_predicate(parse_path("RU"), 1, Variant::AsStated), std::invalid_argument);
}

TEST_CASE("S1 and S2 have equal size and the tail pairing is a bijection") {
  for (std::int64_t m = 0; m <= 6; ++m) {
    CHECK(count_s1(m) == count_s2(m));
    std::set<LatticePath> s2, paired;
    for_each_family_member(PathFamilySpec(m, 4, 0), [&](const LatticePath& p) {
      if (in_s2(p, m)) s2.insert(p);
      if (in_s1(p, m)) paired.insert(pair_s1_to_s2(p, m));
    });
    CHECK(paired == s2);
  }
}

TEST_CASE("variant resolution picks order-negated") {
  const VariantResolution r = resolve_variant(2, 6);
  CHECK_FALSE(r.as_stated_matches);
  CHECK(r.order_negated_matches);
  REQUIRE(r.resolved.has_value());
  CHECK(*r.resolved == Variant::OrderNegated);

  const VariantResolution tie = resolve_variant(0, 2);
  CHECK(tie.as_stated_matches);
  CHECK(tie.order_negated_matches);
  CHECK_FALSE(tie.resolved.has_value());
}

TEST_CASE("path_predicate dispatch") {
  CHECK(path_predicate("thm31", parse_path("URRURU"), 1, 2));
  CHECK_THROWS_AS(path_predicate("thm41-a", parse_path("URRURU"), 1, 2), std::out_of_range);
  CHECK_THROWS_AS(path_predicate("bogus", parse_path("URRURU"), 1, 2), std::invalid_argument);
  CHECK(parse_variant("order-negated") == Variant::OrderNegated);
  CHECK_THROWS_AS(parse_variant("x"), std::invalid_argument);
  CHECK_THROWS_AS((InterpretationParams{1, 5, Variant::AsStated}.validate()), std::out_of_range);
}

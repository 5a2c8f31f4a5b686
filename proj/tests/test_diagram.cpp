#include "doctest.h"

#include <random>

#include "support.hpp"
#include "vlink/diagram.hpp"

using namespace vlink;
using vlink::testing::make;
using vlink::testing::random_diagram;

TEST_CASE("parse: pseudo-Hopf link") {
  const LinkDiagram d = make("O1+/U1+");
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0] == Strand{{1, Role::over, +1}});
  CHECK(d.components[1] == Strand{{1, Role::under, +1}});
  CHECK(crossing_count(d) == 1);
}

TEST_CASE("parse: crossingless loop") {
  const LinkDiagram d = make("@");
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].empty());
  CHECK(crossing_count(d) == 0);
}

TEST_CASE("parse: positive kink") {
  const LinkDiagram d = make("O1+,U1+");
  REQUIRE(d.components.size() == 1);
  REQUIRE(d.components[0].size() == 2);
  CHECK(d.components[0][0].role == Role::over);
  CHECK(d.components[0][1].role == Role::under);
}

TEST_CASE("parse: syntax errors report 1-based columns") {
  auto column_of = [](const std::string& text) -> std::size_t {
    try {
      parse_raw(text);
    } catch (const ParseError& e) {
      return e.column;
    }
    return 0;
  };
  CHECK(column_of("O1#") == 3);
  CHECK(column_of("") == 1);
  CHECK(column_of("X1+") == 1);
  CHECK(column_of("O0+") == 2);
  CHECK(column_of("O01+") == 2);
  CHECK(column_of("O1+,") == 5);
  CHECK(column_of("O1+/") == 5);
  CHECK(column_of("O1+ ") == 4);
  CHECK(column_of("@,O1+") == 2);
  CHECK(column_of("O1") == 3);
}

TEST_CASE("validate: spec examples") {
  CHECK(validate(make("O1+/U1+")).ok());

  ValidationReport r = validate(parse_raw("O1+,O1+"));
  CHECK(r.kind == ValidationReport::Kind::duplicate_role);
  CHECK(r.crossing_id == 1);

  r = validate(parse_raw("O1+,U1-"));
  CHECK(r.kind == ValidationReport::Kind::sign_mismatch);
  CHECK(r.crossing_id == 1);

  r = validate(parse_raw("O1+"));
  CHECK(r.kind == ValidationReport::Kind::odd_occurrence);
  CHECK(r.crossing_id == 1);

  r = validate(parse_raw("O1+,U1+,O1-"));
  CHECK(r.kind == ValidationReport::Kind::odd_occurrence);
}

TEST_CASE("validate: direct construction catches bad fields") {
  LinkDiagram d;
  d.components = {{{0, Role::over, +1}, {0, Role::under, +1}}};
  CHECK(validate(d).kind == ValidationReport::Kind::bad_id);

  d.components = {{{1, Role::over, +3}, {1, Role::under, +3}}};
  CHECK(validate(d).kind == ValidationReport::Kind::bad_sign);
}

TEST_CASE("parse rejects invalid diagrams via ValidationError") {
  CHECK_THROWS_AS(parse("O1+,O1+"), ValidationError);
}

TEST_CASE("serialize: canonical rotation") {
  CHECK(serialize(make("O1+/U1+")) == "O1+/U1+");
  CHECK(serialize(make("O1+,U1+")) == "O1+,U1+");
  CHECK(serialize(make("U1+,O1+")) == "O1+,U1+");
  CHECK(serialize(make("U1+,O2+,U2+,O1+")) == "O1+,U1+,O2+,U2+");
  CHECK(serialize(make("@/@")) == "@/@");
  // rotation starts at the least (role, id, sign) tuple
  CHECK(serialize(make("O2+,O1+,U1+,U2+")) == "O1+,U1+,U2+,O2+");
}

TEST_CASE("equality is cyclic per component, component order fixed") {
  CHECK(make("U1+,O1+") == make("O1+,U1+"));
  CHECK(make("O1+,O2+,U1+,U2+") == make("U2+,O1+,O2+,U1+"));
  CHECK_FALSE(make("O1+/U1+") == make("U1+/O1+"));
  CHECK_FALSE(make("O1+,U1+") == make("O1-,U1-"));
}

TEST_CASE("round trip: parse(serialize(d)) == d on random diagrams") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 1200; ++trial) {
    const LinkDiagram d = random_diagram(rng, 8, 4);
    REQUIRE(validate(d).ok());
    const LinkDiagram back = parse(serialize(d));
    REQUIRE(back == d);
  }
}

TEST_CASE("validate rejects single-field mutations of valid diagrams") {
  std::mt19937 rng(4242);
  int mutations = 0;
  for (int trial = 0; trial < 400 || mutations < 200; ++trial) {
    LinkDiagram d = random_diagram(rng, 6, 3);
    if (total_passes(d) == 0) continue;
    // pick a random pass
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      for (std::size_t i = 0; i < d.components[c].size(); ++i) {
        slots.emplace_back(c, i);
      }
    }
    const auto [c, i] = slots[std::uniform_int_distribution<std::size_t>(
        0, slots.size() - 1)(rng)];
    Pass& p = d.components[c][i];
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: {  // flip role: duplicate-role on this crossing
        p.role = p.role == Role::over ? Role::under : Role::over;
        const ValidationReport r = validate(d);
        CHECK(r.kind == ValidationReport::Kind::duplicate_role);
        CHECK(r.crossing_id == p.crossing_id);
        break;
      }
      case 1: {  // flip sign: sign-mismatch on this crossing
        p.sign = -p.sign;
        const ValidationReport r = validate(d);
        CHECK(r.kind == ValidationReport::Kind::sign_mismatch);
        CHECK(r.crossing_id == p.crossing_id);
        break;
      }
      default: {  // retarget id: some occurrence count goes odd
        p.crossing_id = max_crossing_id(d) + 1;
        CHECK(validate(d).kind == ValidationReport::Kind::odd_occurrence);
        break;
      }
    }
    ++mutations;
    if (trial > 4000) break;
  }
  CHECK(mutations >= 200);
}

TEST_CASE("universe: erasure examples") {
  CHECK(universe(make("O1+/U1+")) ==
        Universe{{std::vector<int>{1}, std::vector<int>{1}}});
  CHECK(universe(make("O1+,O2+,U1+,U2+")) ==
        Universe{{std::vector<int>{1, 2, 1, 2}}});
  CHECK(universe(make("@")) == Universe{{std::vector<int>{}}});
  CHECK(serialize(universe(make("O1+,O2+,U1+,U2+"))) == "1,2,1,2");
  CHECK(serialize(universe(make("@/@"))) == "@/@");
}

TEST_CASE("universe is invariant under component rotation") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    const LinkDiagram d = random_diagram(rng, 6, 3);
    LinkDiagram rotated = d;
    for (Strand& s : rotated.components) {
      if (s.empty()) continue;
      const std::size_t shift =
          std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
      std::rotate(s.begin(), s.begin() + static_cast<long>(shift), s.end());
    }
    CHECK(universe(d) == universe(rotated));
    CHECK(rotated == d);
  }
}

#include "dissoc/representability.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace dissoc;

TEST_CASE("the fixed ternary operation has no representation") {
  auto phi = unrepresentable_ternary();
  CHECK(phi.get(0b000) == 0);
  CHECK(phi.get(0b001) == 1);
  CHECK(phi.get(0b100) == 1);
  CHECK(phi.get(0b101) == 1);
  CHECK(phi.get(0b111) == 0);
  unsigned ones = 0;
  for (std::uint64_t i = 0; i < phi.size(); ++i) ones += phi.get(i);
  CHECK(ones == 3);

  auto ex = search_representation(phi, SearchMode::Exhaustive);
  CHECK_FALSE(ex.witness.has_value());
  CHECK(ex.candidates_tried == 512);

  auto pr = search_representation(phi, SearchMode::Propagate);
  CHECK_FALSE(pr.witness.has_value());
  CHECK(pr.walls > 0);
  CHECK_FALSE(pr.first_wall.empty());
}

TEST_CASE("projections are representable") {
  // x0 from (x0*x1)*x2 via constant-left tables.
  OpVector proj(2, 3);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    proj.set(idx, (idx >> 2) & 1);
  }
  auto found = search_representation(proj, SearchMode::Exhaustive);
  REQUIRE(found.witness.has_value());
  CHECK(interpret(found.witness->product, found.witness->ops) == proj);

  auto found_p = search_representation(proj, SearchMode::Propagate);
  REQUIRE(found_p.witness.has_value());
  CHECK(interpret(found_p.witness->product, found_p.witness->ops) == proj);
}

TEST_CASE("search modes agree everywhere at the smallest shape") {
  for (unsigned bits = 0; bits < 256; ++bits) {
    OpVector phi(2, 3);
    for (unsigned i = 0; i < 8; ++i) phi.set(i, (bits >> i) & 1);
    auto ex = search_representation(phi, SearchMode::Exhaustive);
    auto pr = search_representation(phi, SearchMode::Propagate);
    CHECK(ex.witness.has_value() == pr.witness.has_value());
    if (ex.witness) {
      CHECK(interpret(ex.witness->product, ex.witness->ops) == phi);
      CHECK(interpret(pr.witness->product, pr.witness->ops) == phi);
    }
  }
}

TEST_CASE("search modes agree on random four-variable targets") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    OpVector phi(2, 4);
    for (unsigned i = 0; i < 16; ++i) {
      phi.set(i, static_cast<std::uint8_t>(rng() & 1));
    }
    auto ex = search_representation(phi, SearchMode::Exhaustive);
    auto pr = search_representation(phi, SearchMode::Propagate);
    CHECK(ex.witness.has_value() == pr.witness.has_value());
    if (ex.witness) {
      CHECK(interpret(ex.witness->product, ex.witness->ops) == phi);
    }
  }
}

TEST_CASE("census of representable operations") {
  auto c3 = representable_census(2, 3);
  CHECK(c3.total == 256);
  CHECK(c3.representable < 256);  // the fixed counterexample is missing
  CHECK(c3.representable > 0);

  // The census agrees with the per-target searches.
  unsigned by_search = 0;
  for (unsigned bits = 0; bits < 256; ++bits) {
    OpVector phi(2, 3);
    for (unsigned i = 0; i < 8; ++i) phi.set(i, (bits >> i) & 1);
    if (search_representation(phi, SearchMode::Exhaustive).witness) {
      ++by_search;
    }
  }
  CHECK(c3.representable == by_search);

  auto c1 = representable_census(1, 5);
  CHECK(c1.total == 1);
  CHECK(c1.representable == 1);

  auto c4 = representable_census(2, 4);
  CHECK(c4.total == 65536);
  CHECK(c4.representable <= 20480);  // at most the candidate count
  CHECK_THROWS_AS(representable_census(3, 3), ResourceLimit);
}

TEST_CASE("counting bounds") {
  CHECK(phi_count(2, 3) == 512);
  CHECK(ratio_R(2, 3) == BigRational(1, 2));
  CHECK(ratio_R(2, 4) == BigRational(16, 5));

  CHECK_FALSE(r_exceeds_one(2, 3));
  for (unsigned n = 3; n <= 6; ++n) {
    for (unsigned k = 3; k <= 10; ++k) {
      CHECK(r_exceeds_one(n, k));
    }
  }
  for (unsigned k = 4; k <= 10; ++k) {
    CHECK(r_exceeds_one(2, k));
  }

  // The closed form counts with multiplicity, so it bounds the census.
  auto c = representable_census(2, 3);
  CHECK(BigInt(c.representable) <= phi_count(2, 3));
}

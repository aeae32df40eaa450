#include "dissoc/groupoid.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace dissoc;

namespace {

// Naive triple-loop oracle, independent of is_semigroup's implementation.
bool associativity_oracle(const GroupoidTable& t) {
  for (unsigned a = 0; a < t.n(); ++a)
    for (unsigned b = 0; b < t.n(); ++b)
      for (unsigned c = 0; c < t.n(); ++c)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
  return true;
}

}  // namespace

TEST_CASE("decode reads codes row-major, most significant first") {
  auto t13 = decode(2, 13);
  CHECK(t13.at(0, 0) == 1);
  CHECK(t13.at(0, 1) == 1);
  CHECK(t13.at(1, 0) == 0);
  CHECK(t13.at(1, 1) == 1);

  auto t14 = decode(2, 14);
  CHECK(t14.cells() == std::vector<std::uint8_t>{1, 1, 1, 0});

  CHECK_THROWS_AS(decode(2, 16), DomainError);
}

TEST_CASE("encode inverts decode") {
  for (unsigned j = 0; j < 16; ++j) {
    CHECK(encode(decode(2, j)).j == j);
  }
  std::mt19937_64 rng(20240811);
  for (unsigned n : {3u, 4u}) {
    std::uint64_t space = 1;
    for (unsigned i = 0; i < n * n; ++i) space *= n;
    for (int trial = 0; trial < 200; ++trial) {
      BigInt j = rng() % space;
      CHECK(encode(decode(n, j)).j == j);
    }
  }
}

TEST_CASE("ci3 codec") {
  CHECK(ci3_decode(9) == named_table("D"));
  CHECK(ci3_decode(9).cells() ==
        std::vector<std::uint8_t>{0, 1, 0, 1, 1, 0, 0, 0, 2});
  CHECK(ci3_decode(3).cells() ==
        std::vector<std::uint8_t>{0, 0, 1, 0, 1, 0, 1, 0, 2});
  CHECK(ci3_decode(0).cells() ==
        std::vector<std::uint8_t>{0, 0, 0, 0, 1, 0, 0, 0, 2});
  CHECK_THROWS_AS(ci3_decode(27), DomainError);

  for (unsigned alpha = 0; alpha <= 26; ++alpha) {
    auto t = ci3_decode(alpha);
    CHECK(is_commutative(t));
    CHECK(idempotent_elements(t) == ElemSet::universe(3));
    // Codec round trip preserves the table.
    CHECK(decode(encode(t)) == t);
  }
}

TEST_CASE("semigroup census on two elements") {
  std::set<unsigned> semis;
  for (unsigned j = 0; j < 16; ++j) {
    auto t = decode(2, j);
    CHECK(is_semigroup(t) == associativity_oracle(t));
    if (is_semigroup(t)) semis.insert(j);
  }
  CHECK(semis == std::set<unsigned>{0, 1, 3, 5, 6, 7, 9, 15});
}

TEST_CASE("structural predicates on the named tables") {
  auto B = named_table("B");
  CHECK(idempotent_elements(B) == ElemSet::universe(4));
  CHECK(is_commutative(B));
  CHECK(identity_elements(B) == ElemSet::of({0}));

  auto D = named_table("D");
  CHECK_FALSE(identity_elements(D).contains(0));
  CHECK(identity_elements(ci3_decode(5)) == ElemSet::of({1}));

  CHECK(named_table("B").at(1, 0) == 1);
  CHECK((named_table("B").cells()[4] == 1 && named_table("B").cells()[5] == 1 &&
         named_table("B").cells()[6] == 3 && named_table("B").cells()[7] == 2));
  CHECK(named_table("E").cells()[0] == 0);
  CHECK(named_table("E").cells()[1] == 2);
  CHECK(named_table("E").cells()[2] == 1);
  CHECK_THROWS_AS(named_table("Z"), DomainError);
}

TEST_CASE("isomorphism search") {
  auto E = named_table("E");
  auto self = is_isomorphic(E, E);
  REQUIRE(self.has_value());
  CHECK(*self == Perm{0, 1, 2});  // identity comes first in search order

  // The two-element non-semigroup classes under iso-or-anti-iso.
  std::vector<GroupoidTable> nonsemis;
  std::vector<unsigned> codes;
  for (unsigned j = 0; j < 16; ++j) {
    auto t = decode(2, j);
    if (!is_semigroup(t)) {
      nonsemis.push_back(t);
      codes.push_back(j);
    }
  }
  auto classes = asymp_classes(nonsemis);
  std::set<std::set<unsigned>> got;
  for (const auto& cls : classes) {
    std::set<unsigned> c;
    for (auto idx : cls) c.insert(codes[idx]);
    got.insert(c);
  }
  CHECK(got == std::set<std::set<unsigned>>{
                   {2, 4, 11, 13}, {8, 14}, {10, 12}});
}

TEST_CASE("asymp is an equivalence relation") {
  std::vector<GroupoidTable> all;
  for (unsigned j = 0; j < 16; ++j) all.push_back(decode(2, j));
  for (unsigned a = 0; a < 16; ++a) {
    CHECK(asymp(all[a], all[a]));
    for (unsigned b = 0; b < 16; ++b) {
      CHECK(asymp(all[a], all[b]) == asymp(all[b], all[a]));
      if (!asymp(all[a], all[b])) continue;
      for (unsigned c = 0; c < 16; ++c) {
        if (asymp(all[b], all[c])) CHECK(asymp(all[a], all[c]));
      }
    }
  }
}

TEST_CASE("commutative idempotent three-element classification") {
  std::vector<GroupoidTable> tables;
  for (unsigned alpha = 0; alpha <= 26; ++alpha) {
    tables.push_back(ci3_decode(alpha));
  }
  auto classes = iso_classes(tables);
  std::vector<std::vector<std::size_t>> expected = {
      {0, 13, 26},
      {1, 2, 8, 10, 16, 17},
      {3, 12, 18, 22, 23, 24},
      {4, 6, 9, 14, 20, 25},
      {5, 15, 19},
      {7, 11},
      {21},
  };
  CHECK(classes == expected);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(named_table("E")).size() == 6);
  auto auts = automorphisms(decode(2, 13));
  REQUIRE(auts.size() == 1);
  CHECK(auts[0] == Perm{0, 1});
  // The identity permutation is always present.
  CHECK(automorphisms(named_table("B")).front() == Perm{0, 1, 2, 3});
}

TEST_CASE("closures and semilattice pairs") {
  auto B = named_table("B");
  CHECK(subgroupoid_closure(B, ElemSet::of({1, 2, 3})) == ElemSet::of({1, 2, 3}));
  CHECK(subgroupoid_closure(B, ElemSet::universe(4)) == ElemSet::universe(4));
  CHECK_THROWS_AS(subgroupoid_closure(B, ElemSet{}), DomainError);

  auto D = named_table("D");
  CHECK(is_semilattice_pair(D, 0, 1));  // 1 absorptive in {0,1}
  CHECK(is_semilattice_pair(D, 2, 0));  // 0 absorptive in {0,2}
  CHECK_FALSE(is_semilattice_pair(D, 1, 0));
  CHECK_FALSE(is_semilattice_pair(D, 0, 2));
}

TEST_CASE("table enumeration") {
  CHECK(enumerate_tables(2).size() == 16);
  CHECK(enumerate_tables(3).size() == 19683);
  CHECK(enumerate_tables(1).size() == 1);
  CHECK_THROWS_AS(enumerate_tables(4), ResourceLimit);
  auto codes = enumerate_tables(2);
  for (unsigned j = 0; j < 16; ++j) CHECK(codes[j].j == j);
}

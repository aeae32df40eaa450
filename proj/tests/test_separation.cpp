#include "dissoc/separation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace dissoc;

TEST_CASE("affine exponent expressions") {
  auto e = AffineExpr::parse("k-j+1");
  CHECK(e.eval(1, 2, 5) == 4);
  CHECK(e.str() == "-j+k+1");
  CHECK(AffineExpr::parse(e.str()) == e);

  CHECK(AffineExpr::parse("i-1").min_over_cone() == 0);
  CHECK(AffineExpr::parse("j-i-1").min_over_cone() == 0);
  CHECK(AffineExpr::parse("k-j").min_over_cone() == 1);
  CHECK(AffineExpr::parse("i-j").min_over_cone() == std::nullopt);
  CHECK(AffineExpr::parse("m-1").min_over_cone() == 0);
  CHECK_FALSE(AffineExpr::parse("0").can_be_positive());
  CHECK(AffineExpr::parse("j-i-1").can_be_positive());

  CHECK_THROWS_AS(AffineExpr::parse("q+1"), ParseError);
}

TEST_CASE("block patterns instantiate") {
  auto pat = parse_pattern("0^{i-1} 1 2 0^{j-i-1} 3 0^{k-j-1}");
  REQUIRE(pat.size() == 6);
  auto word = instantiate(pat, 2, 4, 7);
  REQUIRE(word.has_value());
  CHECK(*word == std::vector<std::uint8_t>{0, 1, 2, 0, 3, 0, 0});
  CHECK(pattern_total(pat) == (AffineExpr{0, 0, 1, 0, 0}));

  // Negative exponents reject the instantiation.
  auto bad = parse_pattern("0^{i-2}");
  CHECK(instantiate(bad, 1, 2, 3) == std::nullopt);

  CHECK(parse_pattern(pattern_str(pat)).size() == pat.size());
  CHECK_THROWS_AS(parse_pattern("x^{i}"), ParseError);
  CHECK_THROWS_AS(parse_pattern(""), ParseError);
}

TEST_CASE("yield witness collection") {
  auto imp = decode(2, 13);
  auto ws = collect_yield_witnesses(imp, 10);
  bool has_one_strong = false, has_zero = false;
  for (const auto& w : ws) {
    if (w.set == ElemSet::of({1}) && w.all_length_valid) has_one_strong = true;
    if (w.set == ElemSet::of({0})) {
      has_zero = true;
      CHECK_FALSE(w.all_length_valid);  // only the arity-indexed family
    }
  }
  CHECK(has_one_strong);
  CHECK(has_zero);

  // The idempotent-free two-element table only ever reaches the full set.
  for (const auto& w : collect_yield_witnesses(decode(2, 14), 8)) {
    CHECK(w.set == ElemSet::of({0, 1}));
  }
}

TEST_CASE("symbolic split checks") {
  auto D = named_table("D");
  auto good = symbolic_split_check(parse_pattern("1^{i} 0^{j-i} 2^{k-j}"), D,
                                   ElemSet::of({0, 1}));
  CHECK(good.ok);
  CHECK(good.left_values == ElemSet::of({1}));
  CHECK(good.right_values == ElemSet::of({0}));

  auto short_total =
      symbolic_split_check(parse_pattern("1^{i} 0^{j-i}"), D, ElemSet::of({0, 1}));
  CHECK_FALSE(short_total.ok);

  auto imp_pat = parse_pattern("1^{i-1} 0 1^{k-i-1} 0");
  CHECK_FALSE(symbolic_split_check(imp_pat, decode(2, 13),
                                   ElemSet::of({0, 1}))
                  .ok);
}

TEST_CASE("separation certification of the reference tables") {
  auto B = certify_separation(named_table("B"), ElemSet::universe(4), 8);
  CHECK(B.certified);
  CHECK(B.uniformly_certified);
  CHECK(B.verdict() == "uniformly-certified");

  auto imp = certify_separation(decode(2, 13), ElemSet::of({0, 1}), 10);
  CHECK(imp.certified);
  CHECK_FALSE(imp.uniformly_certified);
  CHECK(imp.verdict() == "certified-to-10");

  auto D = certify_separation(named_table("D"), ElemSet::of({0, 1}), 8);
  CHECK(D.certified);
  CHECK(D.uniformly_certified);
}

TEST_CASE("the idempotent-free table cannot be certified this way") {
  auto rep = certify_separation(decode(2, 14), ElemSet::of({0, 1}), 6);
  CHECK_FALSE(rep.certified);
  CHECK(rep.failure.find("separation") != std::string::npos);
  CHECK(rep.verdict().find("failed") == 0);
}

TEST_CASE("an exhausted search budget fails with the open obligation") {
  // The implication table needs the per-obligation pass, which respects
  // the attempt budget; 50 attempts cannot cover the 120 obligations.
  auto rep = certify_separation(decode(2, 13), ElemSet::of({0, 1}), 10, 50);
  CHECK_FALSE(rep.certified);
  CHECK(rep.failure.find("budget exhausted") != std::string::npos);
}

TEST_CASE("semigroups cannot be certified") {
  auto rep = certify_separation(decode(2, 7), ElemSet::of({0, 1}), 5);
  CHECK_FALSE(rep.certified);
  CHECK(rep.failure.find("split") != std::string::npos);
}

TEST_CASE("certification is sound against the partition computation") {
  std::vector<GroupoidTable> tables;
  for (unsigned j = 0; j < 16; ++j) tables.push_back(decode(2, j));
  for (unsigned a : {3u, 5u, 7u, 9u}) tables.push_back(ci3_decode(a));
  tables.push_back(named_table("E"));
  for (const auto& t : tables) {
    SeparationReport rep;
    try {
      rep = certify_separation(t, ElemSet::universe(t.n()), 7);
    } catch (const DomainError&) {
      continue;
    }
    if (!rep.certified) continue;
    for (unsigned k = 3; k <= 7; ++k) {
      INFO("table " << encode(t).j.str() << " arity " << k);
      REQUIRE(is_k_dissociative(t, k));
    }
  }
}

TEST_CASE("named witness families replay") {
  for (const auto& name :
       {"B", "implication", "D", "CI3_3", "CI3_5", "CI3_7"}) {
    auto rep = verify_named_witness(name, 10);
    INFO(name << ": " << rep.failure);
    CHECK(rep.certified);
  }

  // Recorded split values for the commutative idempotent tables.
  auto c3 = verify_named_witness("CI3_3", 8);
  REQUIRE_FALSE(c3.splits.empty());
  CHECK(c3.splits.front().values_at_i == ElemSet::of({0}));
  CHECK(c3.splits.front().values_at_j == ElemSet::of({1}));

  auto c7 = verify_named_witness("CI3_7", 8);
  CHECK(c7.splits.front().values_at_i == ElemSet::of({0}));
  CHECK(c7.splits.front().values_at_j == ElemSet::of({2}));

  auto c5 = verify_named_witness("CI3_5", 8);
  CHECK(c5.splits.front().values_at_i == ElemSet::of({1}));
  CHECK(c5.splits.front().values_at_j == ElemSet::of({2}));

  auto bb = verify_named_witness("B", 8);
  CHECK(bb.uniformly_certified);
  auto dd = verify_named_witness("D", 8);
  CHECK(dd.uniformly_certified);
  auto ii = verify_named_witness("implication", 8);
  CHECK(ii.certified);
  CHECK_FALSE(ii.uniformly_certified);

  CHECK_THROWS_AS(verify_named_witness("Q", 5), DomainError);
}

TEST_CASE("variants of the three-element table certify") {
  // Replacing the two entries the named argument never consults keeps the
  // certificate; likewise for the mirrored pair.
  auto D = named_table("D");
  unsigned certified_count = 0;
  std::vector<GroupoidTable> variants{D};
  for (unsigned v20 = 0; v20 < 3; ++v20) {
    for (unsigned v21 = 0; v21 < 3; ++v21) {
      if (v20 == 0 && v21 == 0) continue;
      auto cells = D.cells();
      cells[2 * 3 + 0] = static_cast<std::uint8_t>(v20);
      cells[2 * 3 + 1] = static_cast<std::uint8_t>(v21);
      variants.emplace_back(3, cells);
    }
  }
  for (unsigned v02 = 0; v02 < 3; ++v02) {
    for (unsigned v12 = 0; v12 < 3; ++v12) {
      if (v02 == 0 && v12 == 0) continue;
      auto cells = D.cells();
      cells[0 * 3 + 2] = static_cast<std::uint8_t>(v02);
      cells[1 * 3 + 2] = static_cast<std::uint8_t>(v12);
      variants.emplace_back(3, cells);
    }
  }
  REQUIRE(variants.size() == 17);
  for (const auto& t : variants) {
    auto rep = certify_separation(t, ElemSet::of({0, 1}), 8);
    if (rep.certified) ++certified_count;
    CHECK(rep.certified);
  }
  CHECK(certified_count == 17);
}

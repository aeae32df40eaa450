#include "paper_checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "dissoc/boolean_nand.hpp"
#include "dissoc/dissociativity.hpp"
#include "dissoc/evaluation.hpp"
#include "dissoc/formal_product.hpp"
#include "dissoc/groupoid.hpp"
#include "dissoc/representability.hpp"
#include "dissoc/separation.hpp"
#include "dissoc/yield.hpp"

namespace dissoc::checks {
namespace {

// Checks accumulate failures into `detail` so one criterion reports its
// first broken expectation instead of aborting the suite.
struct Expect {
  std::ostringstream detail;
  bool ok = true;

  void that(bool cond, const std::string& what) {
    if (!cond && ok) {
      detail << what;
      ok = false;
    }
  }
};

OpVector naive_vector(const FormalProduct& w, const GroupoidTable& t) {
  OpVector out(t.n(), w.arity());
  for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
    out.set(idx, eval_rpn(w, t, decode_tuple(t.n(), w.arity(), idx)));
  }
  return out;
}

std::vector<GroupoidTable> three_element_variants() {
  auto D = named_table("D");
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
  return variants;
}

void criterion_01(Expect& e) {
  const std::map<unsigned, std::size_t> expected{{3, 2}, {4, 5}, {5, 14}, {6, 42}};
  for (auto [k, count] : expected) {
    auto all = enumerate_products(k);
    e.that(all.size() == count,
           "arity " + std::to_string(k) + " yields " +
               std::to_string(all.size()) + " products, expected " +
               std::to_string(count));
  }
}

void criterion_02(Expect& e) {
  const std::set<unsigned> expected{0, 1, 3, 5, 6, 7, 9, 15};
  for (unsigned j = 0; j < 16; ++j) {
    bool want = expected.count(j) > 0;
    e.that(is_semigroup(decode(2, j)) == want,
           "table 2:" + std::to_string(j) + " misclassified");
  }
}

void criterion_03(Expect& e) {
  const std::set<unsigned> complete{2, 4, 8, 11, 13, 14};
  for (unsigned j = 0; j < 16; ++j) {
    auto th = dissociativity_threshold(decode(2, j), 13);
    if (complete.count(j)) {
      e.that(!th.has_value(),
             "table 2:" + std::to_string(j) + " unexpectedly failed at " +
                 (th ? std::to_string(*th) : ""));
    } else if (j == 10 || j == 12) {
      e.that(th == 4u, "table 2:" + std::to_string(j) + " first failure not 4");
    } else {
      e.that(th.has_value(), "table 2:" + std::to_string(j) + " no failure");
    }
  }
  e.that(max_agreement(decode(2, 10), 3) == 0, "2:10 has an associating triple");
  e.that(max_agreement(decode(2, 12), 3) == 0, "2:12 has an associating triple");
}

void criterion_04(Expect& e) {
  std::vector<GroupoidTable> nonsemis;
  std::vector<unsigned> codes;
  for (unsigned j = 0; j < 16; ++j) {
    auto t = decode(2, j);
    if (!is_semigroup(t)) {
      nonsemis.push_back(t);
      codes.push_back(j);
    }
  }
  std::set<std::set<unsigned>> got;
  for (const auto& cls : asymp_classes(nonsemis)) {
    std::set<unsigned> c;
    for (auto idx : cls) c.insert(codes[idx]);
    got.insert(c);
  }
  std::set<std::set<unsigned>> want{{2, 4, 11, 13}, {8, 14}, {10, 12}};
  e.that(got == want, "iso-or-anti-iso classes differ");
}

void criterion_05(Expect& e) {
  auto E = named_table("E");
  e.that(sat_sequence(E, 6) == std::vector<std::uint64_t>{1, 2, 5, 10, 21},
         "class counts for k=2..6 differ");
  e.that(sizing(E, 5) == Sizing{{6, 1}, {4, 2}}, "5-sizing differs");
  e.that(sizing(E, 6) == Sizing{{7, 1}, {7, 2}, {7, 3}}, "6-sizing differs");
  e.that(dissociativity_threshold(E, 8) == 5u, "threshold is not 5");
  e.that(automorphisms(E).size() == 6, "automorphism group size is not 6");
}

void criterion_06(Expect& e) {
  std::vector<GroupoidTable> tables;
  for (unsigned alpha = 0; alpha <= 26; ++alpha) {
    tables.push_back(ci3_decode(alpha));
  }
  std::vector<std::vector<std::size_t>> want{
      {0, 13, 26},           {1, 2, 8, 10, 16, 17}, {3, 12, 18, 22, 23, 24},
      {4, 6, 9, 14, 20, 25}, {5, 15, 19},           {7, 11},
      {21}};
  e.that(iso_classes(tables) == want, "isomorphism classes differ");
}

void criterion_07(Expect& e) {
  auto beta = beta_identity();
  e.that(identity_holds(beta, named_table("B")).holds,
         "identity fails in the four-element table");

  auto c3 = identity_holds(beta, ci3_decode(3));
  e.that(!c3.holds && c3.lhs_value == 1 && c3.rhs_value == 0,
         "CI3_3 countermodel values differ");
  e.that(c3.countermodel ==
             std::vector<std::pair<std::string, std::uint8_t>>{
                 {"x", 0}, {"y", 2}, {"z", 1}},
         "CI3_3 first countermodel is not (0,2,1)");

  auto D = named_table("D");
  std::map<std::string, std::uint8_t> envD{{"x", 1}, {"y", 2}, {"z", 0}};
  e.that(!identity_holds(beta, D).holds, "identity holds in the 3-element table");
  e.that(eval_term(beta.lhs, D, envD) == 0 && eval_term(beta.rhs, D, envD) == 1,
         "values at (1,2,0) differ from 0 / 1");

  std::map<std::string, std::uint8_t> env5{{"x", 2}, {"y", 0}, {"z", 1}};
  auto c5t = ci3_decode(5);
  e.that(!identity_holds(beta, c5t).holds, "identity holds in CI3_5");
  e.that(eval_term(beta.lhs, c5t, env5) == 1 && eval_term(beta.rhs, c5t, env5) == 2,
         "values at (2,0,1) differ from 1 / 2");

  std::map<std::string, std::uint8_t> env7{{"x", 2}, {"y", 1}, {"z", 0}};
  auto c7t = ci3_decode(7);
  e.that(!identity_holds(beta, c7t).holds, "identity holds in CI3_7");
  e.that(eval_term(beta.lhs, c7t, env7) == 0 &&
             eval_term(beta.rhs, c7t, env7) != 0,
         "value at (2,1,0) is not 0 on the left only");
}

void criterion_08(Expect& e) {
  for (const auto& name :
       {"B", "implication", "D", "CI3_3", "CI3_5", "CI3_7"}) {
    auto rep = verify_named_witness(name, 10);
    e.that(rep.certified,
           std::string(name) + " not certified: " + rep.failure);
  }
  auto nand = certify_separation(decode(2, 14), ElemSet::of({0, 1}), 6);
  e.that(!nand.certified, "the idempotent-free table certified unexpectedly");
  e.that(!dissociativity_threshold(decode(2, 14), 10).has_value(),
         "the idempotent-free table is not dissociative to 10");
  for (unsigned k = 1; k <= 10; ++k) {
    auto inj = nand_injectivity(k);
    e.that(inj.injective, "NAND map collides at arity " + std::to_string(k));
    if (k >= 3) {
      e.that(inj.injective == is_k_dissociative(decode(2, 14), k),
             "injectivity disagrees with dissociativity at " + std::to_string(k));
    }
  }
}

void criterion_09(Expect& e) {
  auto imp = decode(2, 13);
  for (unsigned k = 1; k <= 12; ++k) {
    std::vector<std::uint8_t> w(k - 1, 1);
    w.push_back(0);
    e.that(allvals(w, imp) == ElemSet::of({0}),
           "descending family fails at k=" + std::to_string(k));
    for (unsigned j = 0; j + 2 <= k; ++j) {
      std::vector<std::uint8_t> v(j, 1);
      v.push_back(0);
      v.insert(v.end(), k - j - 1, 1);
      e.that(allvals(v, imp) == ElemSet::of({1}),
             "interior-zero family fails at k=" + std::to_string(k) +
                 ", j=" + std::to_string(j));
    }
  }
}

void criterion_10(Expect& e) {
  // (x&y) | (x&y') | z | (x'&y&z) reduces to x | z.
  NormalFormula worked;
  worked.k = 3;
  worked.clauses = {Cube{0b011, 0b011}, Cube{0b011, 0b001}, Cube{0b100, 0b100},
                    Cube{0b111, 0b110}};
  worked.canonicalize();
  auto reduced = reduce_to_complete_sum(worked);
  e.that(reduced.str() == "x0 | x2", "worked example reduces to " + reduced.str());
  e.that(reduced == complete_sum(worked.truth_table()),
         "reduction disagrees with the sweep on the worked example");

  for (unsigned k = 1; k <= 7; ++k) {
    for (const auto& u : enumerate_products(k)) {
      e.that(nand_depends_on_all(u),
             "an interpretation misses a variable at arity " + std::to_string(k));
      if (k >= 2) {
        e.that(nand_sum_decomposition(u), "sum decomposition fails");
        e.that(nand_two_linked_classes(u), "linking classes differ from 2");
      }
    }
  }

  std::mt19937_64 rng(20100412);
  int done = 0;
  while (done < 500) {
    TruthTable phi(6);
    for (std::uint64_t r = 0; r < phi.rows(); ++r) phi.set(r, rng() & 1);
    if (phi.constant()) continue;
    ++done;
    e.that(reduce_to_complete_sum(minterm_expansion(phi)) == complete_sum(phi),
           "reduction disagrees with the sweep on a random formula");
    if (!e.ok) return;
  }
}

void criterion_11(Expect& e) {
  auto phi = unrepresentable_ternary();
  auto ex = search_representation(phi, SearchMode::Exhaustive);
  e.that(!ex.witness.has_value() && ex.candidates_tried == 512,
         "exhaustive search found a witness or skipped candidates");
  auto pr = search_representation(phi, SearchMode::Propagate);
  e.that(!pr.witness.has_value(), "propagating search found a witness");
  e.that(pr.walls > 0 && !pr.first_wall.empty(),
         "propagating search recorded no refutation");
}

void criterion_12(Expect& e) {
  e.that(phi_count(2, 3) == 512, "phi(2,3) differs");
  e.that(ratio_R(2, 3) == BigRational(1, 2), "R(2,3) differs");
  for (unsigned n = 3; n <= 6; ++n) {
    for (unsigned k = 3; k <= 10; ++k) {
      e.that(r_exceeds_one(n, k),
             "R <= 1 at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
  }
  for (unsigned k = 4; k <= 10; ++k) {
    e.that(r_exceeds_one(2, k), "R <= 1 at n=2, k=" + std::to_string(k));
  }
}

void criterion_13(Expect& e) {
  auto variants = three_element_variants();
  e.that(variants.size() == 17, "variant family size differs");
  for (std::size_t idx = 0; idx < variants.size(); ++idx) {
    const auto& t = variants[idx];
    e.that(!dissociativity_threshold(t, 10).has_value(),
           "variant " + std::to_string(idx) + " fails dissociativity by 10");
    auto rep = certify_separation(t, ElemSet::of({0, 1}), 10);
    e.that(rep.certified,
           "variant " + std::to_string(idx) + " not certified: " + rep.failure);
    if (!e.ok) return;
  }
}

void criterion_14(Expect& e) {
  auto m23 = minimal_k_associativity(2, 3);
  e.that(m23.m == 0, "least max-agreement at (2,3) is not 0");
  e.that(m23.witnesses == std::vector<std::uint64_t>{10, 12},
         "witness codes differ from {10, 12}");

  for (unsigned k : {4u, 5u}) {
    for (unsigned j = 0; j < 16; ++j) {
      e.that(max_agreement(decode(2, j), k) >= 1,
             "pigeonhole fails at 2:" + std::to_string(j));
    }
    if (!e.ok) return;
    auto products = enumerate_products(k);
    for (std::uint64_t j = 0; j < 19683; ++j) {
      GroupoidTable t = decode(3, j);
      std::vector<OpVector> vecs;
      vecs.reserve(products.size());
      for (const auto& u : products) vecs.push_back(induced_vector(u, t));
      bool hit = false;
      for (std::size_t a = 0; a < vecs.size() && !hit; ++a) {
        for (std::size_t b = a + 1; b < vecs.size() && !hit; ++b) {
          hit = vecs[a].agreement(vecs[b]) >= 1;
        }
      }
      if (!hit) {
        e.that(false, "pigeonhole fails at 3:" + std::to_string(j) + ", k=" +
                          std::to_string(k));
        return;
      }
    }
  }

  auto m34 = minimal_k_associativity(3, 4);
  e.that(m34.tables_examined == 19683, "census did not cover all tables");
  e.that(m34.m >= 1, "census result contradicts the pigeonhole bound");
  e.that(!m34.witnesses.empty(), "census reported no witnesses");
}

void criterion_15(Expect& e) {
  // Round trips.
  for (unsigned k = 1; k <= 8; ++k) {
    auto all = enumerate_products(k);
    for (std::uint64_t r = 0; r < all.size(); ++r) {
      const auto& w = all[r];
      e.that(FormalProduct::parse(w.render()) == w, "parse/render trip fails");
      e.that(rank(w) == r && unrank(k, r) == w, "rank/unrank trip fails");
      if (k >= 2) {
        e.that(compose(factorize(w)) == w, "compose/factorize trip fails");
      }
    }
    if (!e.ok) return;
  }

  std::vector<GroupoidTable> ref;
  for (unsigned j = 0; j < 16; ++j) ref.push_back(decode(2, j));
  ref.push_back(named_table("E"));
  ref.push_back(named_table("B"));
  ref.push_back(named_table("D"));

  // Level DP versus the per-product hash partition.
  for (const auto& t : ref) {
    for (unsigned k = 2; k <= 6; ++k) {
      auto dp = partition(t, k);
      std::map<std::string, std::uint64_t> naive;
      for (const auto& u : enumerate_products(k)) {
        auto v = naive_vector(u, t);
        std::string key;
        for (std::uint64_t i = 0; i < v.size(); ++i) {
          key += static_cast<char>('0' + v.get(i));
        }
        ++naive[key];
      }
      e.that(dp.classes.size() == naive.size(), "class counts differ");
      BigInt total = 0;
      for (const auto& c : dp.classes) total += c.size;
      e.that(total == product_count(k), "class sizes do not sum");
    }
    if (!e.ok) return;
  }

  // Word value sets versus enumeration.
  std::mt19937_64 rng(1517);
  for (const auto& t : ref) {
    for (int trial = 0; trial < 20; ++trial) {
      unsigned len = 1 + rng() % 7;
      std::vector<std::uint8_t> word(len);
      for (auto& x : word) x = static_cast<std::uint8_t>(rng() % t.n());
      ElemSet direct;
      for (const auto& u : enumerate_products(len)) {
        direct.add(eval_rpn(u, t, word));
      }
      e.that(allvals(word, t) == direct, "value set disagrees with enumeration");
    }
  }

  // Monotonicity on the two-element and commutative idempotent tables.
  std::vector<GroupoidTable> mono;
  for (unsigned j = 0; j < 16; ++j) mono.push_back(decode(2, j));
  for (unsigned a = 0; a <= 26; ++a) mono.push_back(ci3_decode(a));
  for (const auto& t : mono) {
    AgreementDP dp(t);
    bool failed = false;
    for (unsigned k = 3; k <= 8; ++k) {
      bool diss = BigInt(dp.class_count(k)) == product_count(k);
      e.that(!(failed && diss), "dissociativity is not downward closed");
      if (!diss) failed = true;
    }
    if (!e.ok) return;
  }
}

}  // namespace

std::vector<CriterionResult> run_paper_checks(std::ostream& out,
                                              const std::vector<int>& only) {
  struct Entry {
    int id;
    const char* description;
    std::function<void(Expect&)> fn;
  };
  const std::vector<Entry> entries{
      {1, "product counts 2, 5, 14, 42 for arities 3..6", criterion_01},
      {2, "two-element semigroups are exactly {0,1,3,5,6,7,9,15}", criterion_02},
      {3, "thresholds to 13: none on {2,4,8,11,13,14}, 4 on {10,12}", criterion_03},
      {4, "iso/anti-iso classes {2,4,11,13} {8,14} {10,12}", criterion_04},
      {5, "table E: counts 2,5,10,21, sizings, threshold 5, |Aut| = 6", criterion_05},
      {6, "commutative idempotent 3-tables fall into the seven classes", criterion_06},
      {7, "the separating identity holds in B and fails as recorded", criterion_07},
      {8, "separation certificates to K=10 plus the NAND route", criterion_08},
      {9, "implication word families evaluate to {0} and {1}", criterion_09},
      {10, "complete-sum machinery: worked example, structure, cross-method", criterion_10},
      {11, "the fixed ternary operation is unrepresentable (512 candidates)", criterion_11},
      {12, "counting bounds: phi(2,3)=512, R(2,3)=1/2, R>1 beyond", criterion_12},
      {13, "the 17 three-element variants all certify to 10", criterion_13},
      {14, "least max-agreement: M(2,3)=0 via {10,12}; pigeonhole; (3,4) census", criterion_14},
      {15, "property suites: round trips, DP oracles, monotonicity", criterion_15},
  };

  std::vector<CriterionResult> results;
  for (const auto& entry : entries) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), entry.id) == only.end()) {
      continue;
    }
    Expect e;
    auto start = std::chrono::steady_clock::now();
    try {
      entry.fn(e);
    } catch (const std::exception& ex) {
      e.that(false, std::string("exception: ") + ex.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    CriterionResult r{entry.id, entry.description, e.ok, e.detail.str(), secs};
    char line[512];
    std::snprintf(line, sizeof(line), "%s  criterion %02d: %s (%.2fs)%s%s",
                  r.passed ? "PASS" : "FAIL", r.id, r.description.c_str(),
                  r.seconds, r.passed ? "" : " -- ",
                  r.passed ? "" : r.detail.c_str());
    out << line << "\n" << std::flush;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace dissoc::checks

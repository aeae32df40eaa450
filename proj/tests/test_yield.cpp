#include "dissoc/yield.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace dissoc;

namespace {

std::vector<std::uint8_t> word_of(std::initializer_list<int> xs) {
  std::vector<std::uint8_t> w;
  for (int x : xs) w.push_back(static_cast<std::uint8_t>(x));
  return w;
}

std::vector<std::uint8_t> block_word(int a, unsigned rep_a, int b,
                                     unsigned rep_b, int c = -1,
                                     unsigned rep_c = 0) {
  std::vector<std::uint8_t> w(rep_a, static_cast<std::uint8_t>(a));
  w.insert(w.end(), rep_b, static_cast<std::uint8_t>(b));
  if (c >= 0) w.insert(w.end(), rep_c, static_cast<std::uint8_t>(c));
  return w;
}

}  // namespace

TEST_CASE("allvals on the implication word families") {
  auto imp = decode(2, 13);
  for (unsigned k = 1; k <= 12; ++k) {
    CHECK(allvals(block_word(1, k - 1, 0, 1), imp) == ElemSet::of({0}));
    for (unsigned j = 0; j + 2 <= k; ++j) {
      CHECK(allvals(block_word(1, j, 0, 1, 1, k - j - 1), imp) ==
            ElemSet::of({1}));
    }
  }
  CHECK(allvals(word_of({1}), imp) == ElemSet::of({1}));
  CHECK(allvals(word_of({0}), imp) == ElemSet::of({0}));
  CHECK_THROWS_AS(allvals(std::vector<std::uint8_t>{}, imp), DomainError);
}

TEST_CASE("allvals equals evaluation over all parenthesizations") {
  std::mt19937_64 rng(99);
  for (const auto& t : oracles::reference_tables()) {
    for (int trial = 0; trial < 40; ++trial) {
      unsigned len = 1 + rng() % 7;
      std::vector<std::uint8_t> word(len);
      for (auto& x : word) x = static_cast<std::uint8_t>(rng() % t.n());
      CHECK(allvals(word, t) == oracles::allvals_by_enumeration(word, t));
    }
  }
}

TEST_CASE("split values") {
  auto B = named_table("B");
  // 0^{i-1} 1 2 0^{j-i-1} 3 0^{k-j-1} has i-splits worth {1} and j-splits
  // worth {3}.
  for (unsigned k = 3; k <= 9; ++k) {
    for (unsigned i = 1; i + 1 < k; ++i) {
      for (unsigned j = i + 1; j < k; ++j) {
        std::vector<std::uint8_t> w;
        w.insert(w.end(), i - 1, 0);
        w.push_back(1);
        w.push_back(2);
        w.insert(w.end(), j - i - 1, 0);
        w.push_back(3);
        w.insert(w.end(), k - j - 1, 0);
        REQUIRE(w.size() == k);
        CHECK(split_values(w, i, B) == ElemSet::of({1}));
        CHECK(split_values(w, j, B) == ElemSet::of({3}));
      }
    }
  }

  auto E = named_table("E");
  auto w = word_of({0, 1});
  CHECK(split_values(w, 1, E) == ElemSet::of({2}));
  CHECK_THROWS_AS(split_values(w, 2, E), DomainError);
}

TEST_CASE("sequence yields") {
  auto D = named_table("D");
  auto imp = decode(2, 13);

  // An idempotent constant sequence yields itself immediately.
  auto y0 = seq_yield(EventuallyPeriodicSeq::constant(0), D, 20);
  CHECK(y0.accumulated == ElemSet::of({0}));
  CHECK(y0.stabilized_at == 1u);

  // 1 0^w over the three-element table: {0,1} is a semilattice with 1
  // absorbing and first.
  auto y1 = seq_yield(EventuallyPeriodicSeq{{1}, {0}}, D, 20);
  CHECK(y1.accumulated == ElemSet::of({1}));

  auto y2 = seq_yield(EventuallyPeriodicSeq::constant(1), imp, 20);
  CHECK(y2.accumulated == ElemSet::of({1}));

  // Monotone accumulation in L.
  EventuallyPeriodicSeq s{{2, 0}, {3, 0}};
  ElemSet prev;
  for (std::size_t L = 1; L <= 12; ++L) {
    auto y = seq_yield(s, named_table("B"), L);
    CHECK(prev.subset_of(y.accumulated));
    prev = y.accumulated;
  }
}

TEST_CASE("yield certificates") {
  auto B = named_table("B");

  auto sub = certify_yield(EventuallyPeriodicSeq{{1, 2}, {3}},
                           ElemSet::of({1, 2, 3}), B);
  CHECK(sub.kind == YieldCertificate::Kind::Subgroupoid);
  CHECK(sub.target == ElemSet::of({1, 2, 3}));
  CHECK(sub.all_length_valid);

  auto D = named_table("D");
  auto ci = certify_yield(EventuallyPeriodicSeq::constant(0), ElemSet::of({0}), D);
  CHECK(ci.kind == YieldCertificate::Kind::ConstantIdempotent);
  CHECK(ci.target == ElemSet::of({0}));

  auto sl = certify_yield(EventuallyPeriodicSeq{{1}, {0}}, ElemSet::of({1}), D);
  CHECK(sl.kind == YieldCertificate::Kind::SemilatticeAbsorb);
  CHECK(sl.target == ElemSet::of({1}));

  // 2 0^p 3 0^w over the four-element table: deleting the identity letter
  // leaves the core word "23".
  for (unsigned p = 1; p <= 4; ++p) {
    std::vector<std::uint8_t> prefix{2};
    prefix.insert(prefix.end(), p, 0);
    prefix.push_back(3);
    auto cert = certify_yield(EventuallyPeriodicSeq{prefix, {0}},
                              ElemSet::of({1, 2}), B);
    CHECK(cert.kind == YieldCertificate::Kind::IdentityDeletion);
    CHECK(cert.target == ElemSet::of({1, 2}));
    CHECK(cert.core == std::vector<std::uint8_t>{2, 3});
    CHECK(cert.all_length_valid);
  }

  CHECK_THROWS_AS(
      certify_yield(EventuallyPeriodicSeq{{2}, {3}}, ElemSet::of({2}), B),
      CertificateNotFound);
}

TEST_CASE("identity deletion agrees with direct evaluation") {
  auto B = named_table("B");
  // Words 2 0^p 3 0^q: deleting the identity letters must not change the
  // value set.
  for (unsigned p = 0; p <= 6; ++p) {
    for (unsigned q = 0; p + q <= 6; ++q) {
      std::vector<std::uint8_t> w{2};
      w.insert(w.end(), p, 0);
      w.push_back(3);
      w.insert(w.end(), q, 0);
      CHECK(allvals(w, B) == allvals(word_of({2, 3}), B));
    }
  }
}

TEST_CASE("certificate targets match the accumulated evidence") {
  // Necessary condition: an all-length certificate's target equals the
  // bounded accumulation at L = 30 for these shapes.
  auto B = named_table("B");
  auto D = named_table("D");
  auto imp = decode(2, 13);
  struct Case {
    EventuallyPeriodicSeq seq;
    const GroupoidTable& t;
  };
  std::vector<Case> cases{
      {EventuallyPeriodicSeq{{1, 2}, {3}}, B},
      {EventuallyPeriodicSeq::constant(0), D},
      {EventuallyPeriodicSeq{{1}, {0}}, D},
      {EventuallyPeriodicSeq::constant(1), imp},
      {EventuallyPeriodicSeq{{2, 0, 0, 3}, {0}}, B},
  };
  for (const auto& c : cases) {
    auto cert = certify_yield(c.seq, ElemSet::universe(c.t.n()), c.t);
    REQUIRE(cert.all_length_valid);
    CHECK(cert.target == seq_yield(c.seq, c.t, 30).accumulated);
  }
}

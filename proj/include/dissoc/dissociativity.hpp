#pragma once

// Agreement partitions of formal k-products under a table, computed
// level-by-level: the distinct induced vectors at arity m are exactly the
// table-compositions of distinct vectors at arities i and m-i, and class
// cardinalities convolve along the unique factorization.  Also: sizings,
// subassociativity sequences, dissociativity thresholds, and the pairwise
// agreement metrics.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dissoc/evaluation.hpp"
#include "dissoc/formal_product.hpp"
#include "dissoc/groupoid.hpp"
#include "dissoc/op_vector.hpp"

namespace dissoc {

// Admits the full two-element run to arity 13 (about 250 MB of levels)
// and three-element runs to arity 10, and refuses the next level up.
inline constexpr std::uint64_t kDefaultMemoryBudget = 1ull << 30;

struct LevelEntry {
  OpVector vec;
  std::uint64_t size;            // number of products inducing vec
  std::uint64_t representative;  // smallest rank among them
};

class AgreementDP {
 public:
  explicit AgreementDP(GroupoidTable t,
                       std::uint64_t memory_budget = kDefaultMemoryBudget)
      : t_(std::move(t)), budget_(memory_budget) {
    levels_.resize(2);
    levels_[1].push_back(LevelEntry{OpVector::projection(t_.n()), 1, 0});
    bytes_used_ = vector_bytes(1);
  }

  const GroupoidTable& table() const { return t_; }

  const std::vector<LevelEntry>& level(unsigned k) {
    grow_to(k);
    return levels_[k];
  }

  std::uint64_t class_count(unsigned k) { return level(k).size(); }

  /// Largest arity whose worst-case level still fits the budget.
  unsigned largest_feasible() const {
    unsigned k = 1;
    std::uint64_t used = 0;
    while (k < 64) {
      std::uint64_t need = level_estimate(k + 1);
      if (need == UINT64_MAX || used + need > budget_) break;
      used += need;
      ++k;
    }
    return k;
  }

 private:
  std::uint64_t vector_bytes(unsigned k) const {
    std::uint64_t entries = pow_u64(t_.n(), k);
    return t_.n() == 2 ? (entries + 7) / 8 : entries;
  }

  // Worst-case bytes for level k: C(k-1) vectors of n^k cells.
  std::uint64_t level_estimate(unsigned k) const {
    BigInt est = product_count(k) * vector_bytes(k);
    if (est > BigInt(UINT64_MAX)) return UINT64_MAX;
    return static_cast<std::uint64_t>(est);
  }

  void grow_to(unsigned k) {
    if (k == 0) throw DomainError("arity must be positive");
    while (levels_.size() <= k) {
      unsigned m = static_cast<unsigned>(levels_.size());
      std::uint64_t need = level_estimate(m);
      if (need == UINT64_MAX || bytes_used_ + need > budget_) {
        throw ResourceLimit("agreement partition at arity " +
                            std::to_string(m) +
                            " exceeds the memory budget; largest feasible "
                            "arity is " +
                            std::to_string(levels_.size() - 1));
      }
      build_level(m);
      for (const auto& e : levels_[m]) {
        (void)e;
        bytes_used_ += vector_bytes(m);
      }
    }
  }

  void build_level(unsigned m) {
    std::vector<LevelEntry> out;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
    std::uint64_t prefix = 0;  // ranks taken by smaller split indices
    for (unsigned i = 1; i < m; ++i) {
      const std::uint64_t right_count = detail::catalan_u64(m - i - 1);
      for (const auto& ea : levels_[i]) {
        for (const auto& eb : levels_[m - i]) {
          OpVector v = compose_vectors(ea.vec, eb.vec, t_);
          const std::uint64_t h = v.hash();
          std::uint32_t slot = UINT32_MAX;
          for (std::uint32_t cand : index[h]) {
            if (out[cand].vec == v) {
              slot = cand;
              break;
            }
          }
          if (slot == UINT32_MAX) {
            slot = static_cast<std::uint32_t>(out.size());
            out.push_back(LevelEntry{std::move(v), 0, UINT64_MAX});
            index[h].push_back(slot);
          }
          out[slot].size += ea.size * eb.size;
          std::uint64_t cand_rank =
              prefix + ea.representative * right_count + eb.representative;
          out[slot].representative =
              std::min(out[slot].representative, cand_rank);
        }
      }
      prefix += detail::catalan_u64(i - 1) * right_count;
    }
    levels_.push_back(std::move(out));
  }

  GroupoidTable t_;
  std::uint64_t budget_;
  std::uint64_t bytes_used_ = 0;
  std::vector<std::vector<LevelEntry>> levels_;
};

struct AgreementClass {
  OpVector vec;
  std::uint64_t size;
  std::uint64_t representative;
};

struct AgreementPartition {
  unsigned k;
  std::vector<AgreementClass> classes;  // ordered by representative rank
};

inline AgreementPartition partition(
    const GroupoidTable& t, unsigned k,
    std::uint64_t memory_budget = kDefaultMemoryBudget) {
  AgreementDP dp(t, memory_budget);
  AgreementPartition out{k, {}};
  for (const auto& e : dp.level(k)) {
    out.classes.push_back(AgreementClass{e.vec, e.size, e.representative});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const AgreementClass& a, const AgreementClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

/// Pairs (nu, i): nu classes of cardinality i, ascending in i, only nu > 0.
using Sizing = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

inline Sizing sizing_of(const AgreementPartition& p) {
  std::unordered_map<std::uint64_t, std::uint64_t> hist;  // cardinality -> nu
  for (const auto& c : p.classes) ++hist[c.size];
  Sizing out;
  out.reserve(hist.size());
  for (const auto& [card, nu] : hist) out.emplace_back(nu, card);
  std::sort(out.begin(), out.end(),
            [](auto& a, auto& b) { return a.second < b.second; });
  return out;
}

inline Sizing sizing(const GroupoidTable& t, unsigned k,
                     std::uint64_t memory_budget = kDefaultMemoryBudget) {
  return sizing_of(partition(t, k, memory_budget));
}

/// Class counts for k = 2..k_max; entry [i] belongs to arity i + 2.
inline std::vector<std::uint64_t> sat_sequence(
    const GroupoidTable& t, unsigned k_max,
    std::uint64_t memory_budget = kDefaultMemoryBudget) {
  AgreementDP dp(t, memory_budget);
  std::vector<std::uint64_t> out;
  for (unsigned k = 2; k <= k_max; ++k) out.push_back(dp.class_count(k));
  return out;
}

inline bool is_k_dissociative(const GroupoidTable& t, unsigned k,
                              std::uint64_t memory_budget = kDefaultMemoryBudget) {
  if (k < 3) throw DomainError("dissociativity is defined for k >= 3");
  AgreementDP dp(t, memory_budget);
  return BigInt(dp.class_count(k)) == product_count(k);
}

/// First arity in 3..k_max where some pair of products agrees, or nullopt.
/// By monotonicity the first failure settles all larger arities.
inline std::optional<unsigned> dissociativity_threshold(
    const GroupoidTable& t, unsigned k_max,
    std::uint64_t memory_budget = kDefaultMemoryBudget) {
  AgreementDP dp(t, memory_budget);
  for (unsigned k = 3; k <= k_max; ++k) {
    if (BigInt(dp.class_count(k)) != product_count(k)) return k;
  }
  return std::nullopt;
}

/// First tuple (in index order) where the induced vectors differ.
inline std::optional<std::vector<std::uint8_t>> separating_tuple(
    const FormalProduct& u, const FormalProduct& v, const GroupoidTable& t) {
  if (u.arity() != v.arity()) throw DomainError("arities differ");
  OpVector vu = induced_vector(u, t);
  OpVector vv = induced_vector(v, t);
  for (std::uint64_t idx = 0; idx < vu.size(); ++idx) {
    if (vu.get(idx) != vv.get(idx)) {
      return decode_tuple(t.n(), u.arity(), idx);
    }
  }
  return std::nullopt;
}

/// Number of tuples in G^k on which u and v evaluate equal.
inline std::uint64_t agreement_count(const FormalProduct& u,
                                     const FormalProduct& v,
                                     const GroupoidTable& t) {
  if (u.arity() != v.arity()) throw DomainError("arities differ");
  return induced_vector(u, t).agreement(induced_vector(v, t));
}

inline constexpr std::uint64_t kMaxAgreementProductCap = 20'000;

namespace detail {

inline std::uint64_t max_agreement_over(const std::vector<OpVector>& vecs) {
  std::uint64_t best = 0;
  for (std::size_t a = 0; a < vecs.size(); ++a) {
    for (std::size_t b = a + 1; b < vecs.size(); ++b) {
      best = std::max(best, vecs[a].agreement(vecs[b]));
    }
  }
  return best;
}

}  // namespace detail

/// Max over unordered pairs of distinct k-products of their agreement.
inline std::uint64_t max_agreement(const GroupoidTable& t, unsigned k) {
  if (product_count(k) > kMaxAgreementProductCap) {
    throw ResourceLimit("pairwise agreement capped at " +
                        std::to_string(kMaxAgreementProductCap) + " products");
  }
  auto products = enumerate_products(k);
  std::vector<OpVector> vecs;
  vecs.reserve(products.size());
  for (const auto& u : products) vecs.push_back(induced_vector(u, t));
  return detail::max_agreement_over(vecs);
}

struct MinimalAssociativity {
  std::uint64_t m = 0;                 // least achievable max-agreement
  std::vector<std::uint64_t> witnesses;  // all codes achieving it
  bool sampled = false;
  std::uint64_t tables_examined = 0;
};

/// Minimum over tables on n elements of max_agreement(t, k).  Full census
/// for n <= 3; larger universes must use the sampled variant.
inline MinimalAssociativity minimal_k_associativity(unsigned n, unsigned k) {
  if (n > 3) {
    throw ResourceLimit("full census is limited to n <= 3; use the sampled search");
  }
  auto products = enumerate_products(k);
  std::uint64_t space = pow_u64(n, n * n);
  MinimalAssociativity out;
  out.m = UINT64_MAX;
  out.tables_examined = space;
  for (std::uint64_t j = 0; j < space; ++j) {
    GroupoidTable t = decode(n, j);
    std::vector<OpVector> vecs;
    vecs.reserve(products.size());
    for (const auto& u : products) vecs.push_back(induced_vector(u, t));
    std::uint64_t agree = detail::max_agreement_over(vecs);
    if (agree < out.m) {
      out.m = agree;
      out.witnesses.assign(1, j);
    } else if (agree == out.m) {
      out.witnesses.push_back(j);
    }
  }
  return out;
}

/// Sampled upper-bound search over random codes for n >= 4.
inline MinimalAssociativity minimal_k_associativity_sampled(
    unsigned n, unsigned k, std::uint64_t samples, std::uint64_t seed) {
  auto products = enumerate_products(k);
  MinimalAssociativity out;
  out.m = UINT64_MAX;
  out.sampled = true;
  out.tables_examined = samples;
  std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
  BigInt space = table_space_size(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // splitmix64 stream; reduce into the code space.
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    BigInt j = BigInt(z) % space;
    GroupoidTable t = decode(n, j);
    std::vector<OpVector> vecs;
    for (const auto& u : products) vecs.push_back(induced_vector(u, t));
    std::uint64_t agree = detail::max_agreement_over(vecs);
    std::uint64_t code = static_cast<std::uint64_t>(j % BigInt(UINT64_MAX));
    if (agree < out.m) {
      out.m = agree;
      out.witnesses.assign(1, code);
    } else if (agree == out.m && out.witnesses.size() < 32) {
      out.witnesses.push_back(code);
    }
  }
  return out;
}

}  // namespace dissoc

#pragma once

// Which k-ary operations arise as some formal product interpreted through
// a tuple of binary tables, and the exact counting bounds that make most
// operations unrepresentable.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dissoc/evaluation.hpp"
#include "dissoc/formal_product.hpp"
#include "dissoc/groupoid.hpp"
#include "dissoc/op_vector.hpp"

namespace dissoc {

struct RepresentationWitness {
  FormalProduct product;
  std::vector<GroupoidTable> ops;
};

enum class SearchMode { Exhaustive, Propagate };

struct RepresentationSearch {
  std::optional<RepresentationWitness> witness;
  std::uint64_t candidates_tried = 0;
  std::uint64_t walls = 0;  // direct contradictions hit while propagating
  std::string first_wall;
};

namespace detail {

// Walks the tuples of the target in index order, filling the unknown table
// entries each product evaluation forces and branching on the ones it does
// not, backtracking whenever a forced entry contradicts the target.
class PropagatingSearch {
 public:
  PropagatingSearch(const OpVector& phi, const FormalProduct& u,
                    RepresentationSearch& stats)
      : phi_(phi),
        word_(u.word()),
        n_(phi.n()),
        k_(u.arity()),
        stats_(stats),
        entries_(static_cast<std::size_t>(k_ - 1) * n_ * n_, -1) {}

  bool run() { return solve(0); }

  std::vector<GroupoidTable> tables() const {
    std::vector<GroupoidTable> out;
    for (unsigned op = 0; op + 1 < k_; ++op) {
      std::vector<std::uint8_t> cells(n_ * n_, 0);
      for (unsigned c = 0; c < n_ * n_; ++c) {
        int v = entries_[op * n_ * n_ + c];
        cells[c] = v < 0 ? 0 : static_cast<std::uint8_t>(v);
      }
      out.emplace_back(n_, std::move(cells));
    }
    return out;
  }

 private:
  int& entry(unsigned op, unsigned a, unsigned b) {
    return entries_[op * n_ * n_ + a * n_ + b];
  }

  bool solve(std::uint64_t tuple_idx) {
    if (tuple_idx >= phi_.size()) return true;
    auto g = decode_tuple(n_, k_, tuple_idx);
    return eval_step(tuple_idx, g, 0, 0, {});
  }

  // Stack-machine evaluation that branches on unknown entries; `pos` scans
  // the word, `op_index` counts operators seen so far.
  bool eval_step(std::uint64_t tuple_idx, const std::vector<std::uint8_t>& g,
                 std::size_t pos, unsigned op_index,
                 std::vector<std::uint8_t> stack) {
    if (pos == word_.size()) {
      return solve(tuple_idx + 1);
    }
    Sym s = word_[pos];
    if (s != kOperator) {
      stack.push_back(g[static_cast<std::size_t>(s)]);
      return eval_step(tuple_idx, g, pos + 1, op_index, std::move(stack));
    }
    std::uint8_t b = stack.back();
    stack.pop_back();
    std::uint8_t a = stack.back();
    stack.pop_back();
    int& cell = entry(op_index, a, b);
    const bool is_root = (pos + 1 == word_.size());
    const std::uint8_t need = phi_.get(tuple_idx);

    if (is_root) {
      if (cell >= 0) {
        if (cell != need) {
          record_wall(tuple_idx, op_index, a, b, cell, need);
          return false;
        }
        return solve(tuple_idx + 1);
      }
      cell = need;
      bool ok = solve(tuple_idx + 1);
      if (!ok) cell = -1;
      return ok;
    }

    if (cell >= 0) {
      stack.push_back(static_cast<std::uint8_t>(cell));
      return eval_step(tuple_idx, g, pos + 1, op_index + 1, std::move(stack));
    }
    for (unsigned v = 0; v < n_; ++v) {
      cell = static_cast<int>(v);
      auto branch = stack;
      branch.push_back(static_cast<std::uint8_t>(v));
      if (eval_step(tuple_idx, g, pos + 1, op_index + 1, std::move(branch))) {
        return true;
      }
    }
    cell = -1;
    return false;
  }

  void record_wall(std::uint64_t tuple_idx, unsigned op, unsigned a,
                   unsigned b, int have, unsigned need) {
    ++stats_.walls;
    if (stats_.first_wall.empty()) {
      auto g = decode_tuple(n_, k_, tuple_idx);
      std::string tup;
      for (auto x : g) tup += std::to_string(int(x));
      stats_.first_wall = "tuple " + tup + " forces op" + std::to_string(op) +
                          "(" + std::to_string(a) + "," + std::to_string(b) +
                          ") = " + std::to_string(int(need)) + " but it is " +
                          std::to_string(have);
    }
  }

  const OpVector& phi_;
  const std::vector<Sym>& word_;
  unsigned n_, k_;
  RepresentationSearch& stats_;
  std::vector<int> entries_;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultRepresentationBudget = 50'000'000;

/// Searches for (u, ops) with interpret(u, ops) == phi.  Exhaustive mode
/// tries every candidate; propagate mode mirrors the forced-entry walk.
inline RepresentationSearch search_representation(
    const OpVector& phi, SearchMode mode,
    std::uint64_t budget = kDefaultRepresentationBudget) {
  const unsigned n = phi.n();
  const unsigned k = phi.arity();
  if (k < 2) throw DomainError("representation search needs arity >= 2");
  RepresentationSearch out;

  if (mode == SearchMode::Exhaustive) {
    BigInt space = product_count(k);
    BigInt tuple_space = 1;
    for (unsigned i = 0; i + 1 < k; ++i) tuple_space *= table_space_size(n);
    if (space * tuple_space * BigInt(phi.size()) > budget) {
      throw ResourceLimit("exhaustive representation search over budget");
    }
    const std::uint64_t per_table = pow_u64(n, n * n);
    const unsigned ops_count = k - 1;
    std::vector<std::uint64_t> codes(ops_count, 0);
    for (const auto& u : enumerate_products(k)) {
      std::fill(codes.begin(), codes.end(), 0);
      for (;;) {
        std::vector<GroupoidTable> ops;
        ops.reserve(ops_count);
        for (auto c : codes) ops.push_back(decode(n, c));
        ++out.candidates_tried;
        if (interpret(u, ops) == phi) {
          out.witness = RepresentationWitness{u, std::move(ops)};
          return out;
        }
        unsigned p = 0;
        while (p < ops_count && ++codes[p] == per_table) {
          codes[p] = 0;
          ++p;
        }
        if (p == ops_count) break;
      }
    }
    return out;
  }

  if (k > 6 || n > 3) {
    throw ResourceLimit("propagating search supports k <= 6 and n <= 3");
  }
  for (const auto& u : enumerate_products(k)) {
    ++out.candidates_tried;
    detail::PropagatingSearch search(phi, u, out);
    if (search.run()) {
      out.witness = RepresentationWitness{u, search.tables()};
      return out;
    }
  }
  return out;
}

struct RepresentabilityCensus {
  BigInt total;               // n^(n^k) operations
  std::uint64_t representable;
};

/// Marks every vector reachable as an interpreted product; exact for the
/// small shapes (n = 2 with k = 3 or 4 by default).
inline RepresentabilityCensus representable_census(unsigned n, unsigned k) {
  if (!((n == 2 && (k == 3 || k == 4)) || n == 1)) {
    throw ResourceLimit("census supported for n=2, k in {3,4} (or n=1)");
  }
  BigInt total = 1;
  for (std::uint64_t i = 0; i < pow_u64(n, k); ++i) total *= n;
  if (n == 1) return RepresentabilityCensus{total, 1};

  std::vector<bool> seen(1ull << pow_u64(2, k), false);
  const std::uint64_t per_table = 16;
  const unsigned ops_count = k - 1;
  std::vector<std::uint64_t> codes(ops_count, 0);
  std::uint64_t marked = 0;
  for (const auto& u : enumerate_products(k)) {
    std::fill(codes.begin(), codes.end(), 0);
    for (;;) {
      std::vector<GroupoidTable> ops;
      for (auto c : codes) ops.push_back(decode(2, c));
      OpVector v = interpret(u, ops);
      std::uint64_t key = v.packed_words()[0] & ((1ull << v.size()) - 1);
      if (!seen[key]) {
        seen[key] = true;
        ++marked;
      }
      unsigned p = 0;
      while (p < ops_count && ++codes[p] == per_table) {
        codes[p] = 0;
        ++p;
      }
      if (p == ops_count) break;
    }
  }
  return RepresentabilityCensus{total, marked};
}

/// Number of interpreted formal k-products counted with multiplicity:
/// n^(n^2 (k-1)) C(k-1).
inline BigInt phi_count(unsigned n, unsigned k) {
  BigInt out = catalan(k - 1);
  for (unsigned i = 0; i < k - 1; ++i) out *= table_space_size(n);
  return out;
}

/// n^(n^k) / phi_count as an exact rational.  The numerator has n^k
/// digits' worth of factors, so materializing it is capped; the bare
/// comparison against 1 has no such limit.
inline BigRational ratio_R(unsigned n, unsigned k) {
  BigInt e = 1;
  for (unsigned i = 0; i < k; ++i) e *= n;
  if (e > (1 << 20)) {
    throw ResourceLimit("ratio numerator too large; use r_exceeds_one");
  }
  BigInt numer = boost::multiprecision::pow(BigInt(n),
                                            static_cast<unsigned>(e));
  return BigRational(numer, phi_count(n, k));
}

/// Exact comparison R(n, k) > 1, i.e. n^(n^k - n^2(k-1)) > C(k-1), with
/// the power capped as soon as it crosses the Catalan bound.
inline bool r_exceeds_one(unsigned n, unsigned k) {
  BigInt exp = 1;
  for (unsigned i = 0; i < k; ++i) exp *= n;
  exp -= BigInt(n) * n * (k - 1);
  BigInt target = catalan(k - 1);
  if (exp < 0) {
    // R = 1 / (n^(-exp) C(k-1)) < 1 whenever the denominator exceeds one.
    return false;
  }
  BigInt power = 1;
  for (BigInt i = 0; i < exp; ++i) {
    power *= n;
    if (power > target) return true;
  }
  return power > target;
}

/// The fixed unrepresentable ternary operation on two elements: value 1
/// exactly on the tuples 001, 100, 101.
inline OpVector unrepresentable_ternary() {
  OpVector phi(2, 3);
  phi.set(0b001, 1);
  phi.set(0b100, 1);
  phi.set(0b101, 1);
  return phi;
}

}  // namespace dissoc

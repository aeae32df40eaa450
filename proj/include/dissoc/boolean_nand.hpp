#pragma once

// Prime implicants and complete sums of boolean functions, plus the NAND
// reinterpretation of induced vectors: the canonical sum-of-products form
// of a product's NAND evaluation splits along its factorization, which
// makes the product-to-function map injective.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dissoc/evaluation.hpp"
#include "dissoc/formal_product.hpp"
#include "dissoc/groupoid.hpp"
#include "dissoc/op_vector.hpp"

namespace dissoc {

/// Constant functions have no usable complete sum.
class TrivialFormula : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conjunction of literals over variables x0..x_{k-1}: `mask` marks the
/// variables present, `signs` the positive ones (signs subset of mask).
struct Cube {
  std::uint32_t mask = 0;
  std::uint32_t signs = 0;

  unsigned literals() const {
    return static_cast<unsigned>(__builtin_popcount(mask));
  }
  bool subsumes(const Cube& o) const {
    // Fewer literals, agreeing where present: o implies *this.
    return (mask & ~o.mask) == 0 && (o.signs & mask) == signs;
  }
  bool operator==(const Cube&) const = default;
  bool operator<(const Cube& o) const {
    return mask != o.mask ? mask < o.mask : signs < o.signs;
  }

  std::string str() const {
    std::string out;
    for (unsigned v = 0; v < 32; ++v) {
      if (!((mask >> v) & 1)) continue;
      if (!out.empty()) out += " & ";
      out += "x" + std::to_string(v);
      if (!((signs >> v) & 1)) out += "'";
    }
    return out;
  }
};

struct TruthTable {
  unsigned k = 0;
  std::vector<std::uint64_t> bits;  // 2^k entries, assignment index as in OpVector

  explicit TruthTable(unsigned vars) : k(vars) {
    bits.assign(((1ull << k) + 63) / 64, 0);
  }

  static TruthTable from_op_vector(const OpVector& v) {
    if (v.n() != 2) throw DomainError("truth tables require a 2-element universe");
    TruthTable t(v.arity());
    t.bits = v.packed_words();
    return t;
  }

  std::uint64_t rows() const { return 1ull << k; }
  bool get(std::uint64_t row) const {
    return (bits[row >> 6] >> (row & 63)) & 1u;
  }
  void set(std::uint64_t row, bool v) {
    if (v) {
      bits[row >> 6] |= 1ull << (row & 63);
    } else {
      bits[row >> 6] &= ~(1ull << (row & 63));
    }
  }
  bool constant() const {
    bool first = get(0);
    for (std::uint64_t r = 1; r < rows(); ++r) {
      if (get(r) != first) return false;
    }
    return true;
  }
  TruthTable complement() const {
    TruthTable out(k);
    for (std::uint64_t r = 0; r < rows(); ++r) out.set(r, !get(r));
    return out;
  }
  bool operator==(const TruthTable& o) const {
    return k == o.k && bits == o.bits;
  }

  /// Hex string, least significant bit = all-zero assignment.
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::uint64_t nibbles = (rows() + 3) / 4;
    for (std::uint64_t nb = nibbles; nb-- > 0;) {
      unsigned val = 0;
      for (unsigned b = 0; b < 4; ++b) {
        std::uint64_t row = nb * 4 + b;
        if (row < rows() && get(row)) val |= 1u << b;
      }
      out += digits[val];
    }
    return out;
  }
};

// Row index bit of variable v under the tuple convention (x0 most
// significant).
inline bool row_value(std::uint64_t row, unsigned k, unsigned v) {
  return (row >> (k - 1 - v)) & 1u;
}

/// Whether every assignment satisfying q satisfies phi.
inline bool implies(const Cube& q, const TruthTable& phi) {
  const unsigned k = phi.k;
  std::uint32_t fixed_row = 0;
  for (unsigned v = 0; v < k; ++v) {
    if ((q.mask >> v) & 1u && (q.signs >> v) & 1u) {
      fixed_row |= 1u << (k - 1 - v);
    }
  }
  std::uint32_t free_bits = 0;
  for (unsigned v = 0; v < k; ++v) {
    if (!((q.mask >> v) & 1u)) free_bits |= 1u << (k - 1 - v);
  }
  // Enumerate subsets of the free positions.
  std::uint32_t sub = 0;
  do {
    if (!phi.get(fixed_row | sub)) return false;
    sub = (sub - free_bits) & free_bits;
  } while (sub != 0);
  return true;
}

/// Normal (sum-of-products) formula with canonically ordered clauses.
struct NormalFormula {
  unsigned k = 0;
  std::vector<Cube> clauses;

  void canonicalize() {
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  }
  bool operator==(const NormalFormula& o) const {
    return k == o.k && clauses == o.clauses;
  }

  TruthTable truth_table() const {
    TruthTable out(k);
    for (std::uint64_t row = 0; row < out.rows(); ++row) {
      bool val = false;
      for (const auto& c : clauses) {
        bool sat = true;
        for (unsigned v = 0; v < k && sat; ++v) {
          if ((c.mask >> v) & 1u) {
            sat = (row_value(row, k, v) == ((c.signs >> v) & 1u));
          }
        }
        val = val || sat;
        if (val) break;
      }
      out.set(row, val);
    }
    return out;
  }

  std::string str() const {
    if (clauses.empty()) return "<empty>";
    std::string out;
    for (const auto& c : clauses) {
      if (!out.empty()) out += " | ";
      out += c.str();
    }
    return out;
  }
};

namespace detail {

inline std::vector<std::uint32_t> pow3_table(unsigned k) {
  std::vector<std::uint32_t> p(k + 1);
  p[0] = 1;
  for (unsigned i = 1; i <= k; ++i) p[i] = p[i - 1] * 3;
  return p;
}

}  // namespace detail

inline constexpr unsigned kPrimeImplicantVarCap = 14;

/// All prime implicants by a descending sweep over the 3^k cube lattice:
/// digit 0 = variable free, 1 = positive literal, 2 = negative literal.
inline std::vector<Cube> prime_implicants(const TruthTable& phi) {
  const unsigned k = phi.k;
  if (k > kPrimeImplicantVarCap) {
    throw ResourceLimit("prime implicant sweep capped at " +
                        std::to_string(kPrimeImplicantVarCap) + " variables");
  }
  if (phi.constant()) {
    throw TrivialFormula("constant function has no complete sum");
  }
  auto pow3 = detail::pow3_table(k);
  const std::uint32_t total = pow3[k];
  std::vector<bool> sat(total);
  std::vector<std::uint8_t> digits(k);
  for (std::uint32_t idx = total; idx-- > 0;) {
    std::uint32_t rem = idx;
    int first_free = -1;
    std::uint32_t row = 0;
    for (unsigned v = 0; v < k; ++v) {
      std::uint8_t d = rem % 3;
      rem /= 3;
      digits[v] = d;
      if (d == 0 && first_free < 0) first_free = static_cast<int>(v);
      if (d == 1) row |= 1u << (k - 1 - v);
    }
    if (first_free < 0) {
      sat[idx] = phi.get(row);
    } else {
      sat[idx] = sat[idx + pow3[first_free]] && sat[idx + 2 * pow3[first_free]];
    }
  }
  std::vector<Cube> out;
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    if (!sat[idx]) continue;
    Cube c;
    std::uint32_t rem = idx;
    bool prime = true;
    for (unsigned v = 0; v < k; ++v) {
      std::uint8_t d = rem % 3;
      rem /= 3;
      if (d == 0) continue;
      c.mask |= 1u << v;
      if (d == 1) c.signs |= 1u << v;
      // Freeing this literal must break the implication.
      prime = prime && !sat[idx - d * pow3[v]];
    }
    if (prime && c.mask != 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Disjunction of all prime implicants, canonically ordered.
inline NormalFormula complete_sum(const TruthTable& phi) {
  NormalFormula nf;
  nf.k = phi.k;
  nf.clauses = prime_implicants(phi);
  return nf;
}

/// Combining/deleting pass: clauses clashing in exactly one variable merge
/// into their consensus, subsumed clauses drop, until nothing changes.
/// The fixpoint of a normal formula is its complete sum.
inline NormalFormula reduce_to_complete_sum(NormalFormula nf) {
  if (nf.clauses.empty()) {
    throw TrivialFormula("empty formula is constant");
  }
  auto subsumed_by_any = [&](const Cube& c, const std::vector<Cube>& set) {
    for (const auto& s : set) {
      if (!(s == c) && s.subsumes(c)) return true;
    }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    // Delete subsumed clauses (and duplicates).
    std::vector<Cube> kept;
    for (std::size_t a = 0; a < nf.clauses.size(); ++a) {
      const Cube& c = nf.clauses[a];
      bool drop = subsumed_by_any(c, nf.clauses);
      for (std::size_t b = 0; b < a && !drop; ++b) {
        drop = (nf.clauses[b] == c);
      }
      if (!drop) kept.push_back(c);
    }
    if (kept.size() != nf.clauses.size()) {
      nf.clauses = std::move(kept);
      changed = true;
    }
    // Combine: one clashing variable, compatible elsewhere.
    std::vector<Cube> added;
    for (std::size_t a = 0; a < nf.clauses.size(); ++a) {
      for (std::size_t b = a + 1; b < nf.clauses.size(); ++b) {
        const Cube &p = nf.clauses[a], &q = nf.clauses[b];
        std::uint32_t common = p.mask & q.mask;
        std::uint32_t clash = (p.signs ^ q.signs) & common;
        if (__builtin_popcount(clash) != 1) continue;
        Cube merged;
        merged.mask = (p.mask | q.mask) & ~clash;
        merged.signs = (p.signs | q.signs) & merged.mask;
        if (merged.mask == 0) {
          throw TrivialFormula("formula reduces to the constant 1");
        }
        bool present = false;
        for (const auto& c : nf.clauses) present = present || c == merged;
        for (const auto& c : added) present = present || c == merged;
        if (!present && !subsumed_by_any(merged, nf.clauses)) {
          added.push_back(merged);
        }
      }
    }
    if (!added.empty()) {
      nf.clauses.insert(nf.clauses.end(), added.begin(), added.end());
      changed = true;
    }
  }
  nf.canonicalize();
  return nf;
}

/// Rows of the full minterm expansion of phi.
inline NormalFormula minterm_expansion(const TruthTable& phi) {
  NormalFormula nf;
  nf.k = phi.k;
  for (std::uint64_t row = 0; row < phi.rows(); ++row) {
    if (!phi.get(row)) continue;
    Cube c;
    for (unsigned v = 0; v < phi.k; ++v) {
      c.mask |= 1u << v;
      if (row_value(row, phi.k, v)) c.signs |= 1u << v;
    }
    nf.clauses.push_back(c);
  }
  nf.canonicalize();
  return nf;
}

// ---------------------------------------------------------------------------
// The NAND side.

inline GroupoidTable nand_table() { return decode(2, 14); }

inline TruthTable nand_truth_table(const FormalProduct& u) {
  if (u.arity() > kPrimeImplicantVarCap) {
    throw ResourceLimit("NAND interpretation capped at arity " +
                        std::to_string(kPrimeImplicantVarCap));
  }
  return TruthTable::from_op_vector(induced_vector(u, nand_table()));
}

/// NAND evaluations are nonconstant and sensitive to every variable.
inline bool nand_depends_on_all(const FormalProduct& u) {
  TruthTable tt = nand_truth_table(u);
  if (tt.constant()) return false;
  for (unsigned v = 0; v < u.arity(); ++v) {
    bool depends = false;
    std::uint64_t flip = 1ull << (u.arity() - 1 - v);
    for (std::uint64_t row = 0; row < tt.rows() && !depends; ++row) {
      depends = tt.get(row) != tt.get(row ^ flip);
    }
    if (!depends) return false;
  }
  return true;
}

namespace detail {

inline Cube shift_cube(const Cube& c, unsigned by) {
  return Cube{c.mask << by, c.signs << by};
}

}  // namespace detail

/// The complete sum of (s t NAND) is the join of the complete sums of the
/// complemented factors.
inline bool nand_sum_decomposition(const FormalProduct& u) {
  if (u.arity() < 2) throw DomainError("needs a factorizable product");
  Factorization f = factorize(u);
  NormalFormula whole = complete_sum(nand_truth_table(u));

  NormalFormula left = complete_sum(nand_truth_table(f.left).complement());
  NormalFormula right = complete_sum(nand_truth_table(f.right).complement());
  NormalFormula join;
  join.k = u.arity();
  join.clauses = left.clauses;
  for (const auto& c : right.clauses) {
    join.clauses.push_back(detail::shift_cube(c, f.split));
  }
  join.canonicalize();
  return whole == join;
}

/// Connected components of the variable co-occurrence graph of the
/// complete sum, as variable bitmasks.
inline std::vector<std::uint32_t> linked_variable_classes(
    const NormalFormula& nf) {
  const unsigned k = nf.k;
  std::vector<unsigned> parent(k);
  for (unsigned v = 0; v < k; ++v) parent[v] = v;
  auto find = [&](unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& c : nf.clauses) {
    int first = -1;
    for (unsigned v = 0; v < k; ++v) {
      if (!((c.mask >> v) & 1u)) continue;
      if (first < 0) {
        first = static_cast<int>(v);
      } else {
        parent[find(v)] = find(static_cast<unsigned>(first));
      }
    }
  }
  std::map<unsigned, std::uint32_t> comps;
  for (unsigned v = 0; v < k; ++v) comps[find(v)] |= 1u << v;
  std::vector<std::uint32_t> out;
  for (const auto& [root, mask] : comps) out.push_back(mask);
  std::sort(out.begin(), out.end());
  return out;
}

/// The linking relation of a NAND product has exactly the two factor
/// variable blocks as its classes.
inline bool nand_two_linked_classes(const FormalProduct& u) {
  if (u.arity() < 2) throw DomainError("needs a factorizable product");
  auto classes = linked_variable_classes(complete_sum(nand_truth_table(u)));
  if (classes.size() != 2) return false;
  Factorization f = factorize(u);
  std::uint32_t left_mask = (1u << f.split) - 1;
  std::uint32_t right_mask = ((1u << u.arity()) - 1) & ~left_mask;
  return (classes[0] == left_mask && classes[1] == right_mask) ||
         (classes[0] == right_mask && classes[1] == left_mask);
}

struct InjectivityResult {
  bool injective = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> colliding_ranks;
};

/// Injectivity of rank -> complete sum of the NAND interpretation over all
/// k-products; agrees with k-dissociativity of the NAND table.
inline InjectivityResult nand_injectivity(unsigned k) {
  if (k > 12) throw ResourceLimit("NAND injectivity capped at arity 12");
  InjectivityResult out;
  if (k == 1) return out;
  std::map<std::vector<Cube>, std::uint64_t> seen;
  auto products = enumerate_products(k);
  for (std::uint64_t r = 0; r < products.size(); ++r) {
    auto cs = complete_sum(nand_truth_table(products[r]));
    auto [it, fresh] = seen.emplace(cs.clauses, r);
    if (!fresh) {
      out.injective = false;
      out.colliding_ranks = {it->second, r};
      return out;
    }
  }
  return out;
}

}  // namespace dissoc

#pragma once

// Finite binary operation tables on {0..n-1}: the base-n integer codec,
// structural predicates, brute-force isomorphism search, and the named
// tables used throughout the test corpus.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dissoc/common.hpp"

namespace dissoc {

/// Small subset of {0..31}, stored as a bitmask.
struct ElemSet {
  std::uint32_t bits = 0;

  static ElemSet of(std::initializer_list<unsigned> xs) {
    ElemSet s;
    for (unsigned x : xs) s.add(x);
    return s;
  }
  static ElemSet universe(unsigned n) {
    ElemSet s;
    s.bits = (n >= 32) ? ~0u : ((1u << n) - 1);
    return s;
  }

  void add(unsigned e) { bits |= (1u << e); }
  bool contains(unsigned e) const { return (bits >> e) & 1u; }
  bool empty() const { return bits == 0; }
  unsigned size() const { return static_cast<unsigned>(__builtin_popcount(bits)); }
  bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }
  bool intersects(ElemSet o) const { return (bits & o.bits) != 0; }
  ElemSet unite(ElemSet o) const { return ElemSet{bits | o.bits}; }
  ElemSet intersect(ElemSet o) const { return ElemSet{bits & o.bits}; }
  bool operator==(const ElemSet&) const = default;

  std::vector<unsigned> to_vector() const {
    std::vector<unsigned> v;
    for (unsigned e = 0; e < 32; ++e) {
      if (contains(e)) v.push_back(e);
    }
    return v;
  }
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (unsigned e : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }
};

class GroupoidTable {
 public:
  GroupoidTable(unsigned n, std::vector<std::uint8_t> row_major,
                std::string name = "")
      : n_(n), cells_(std::move(row_major)), name_(std::move(name)) {
    if (n_ == 0 || cells_.size() != std::size_t(n_) * n_) {
      throw DomainError("table must hold n*n entries");
    }
    for (auto c : cells_) {
      if (c >= n_) throw DomainError("table entry out of range");
    }
  }

  unsigned n() const { return n_; }
  std::uint8_t at(unsigned r, unsigned c) const { return cells_[r * n_ + c]; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Transposed table (arguments swapped).
  GroupoidTable opposite() const {
    std::vector<std::uint8_t> cells(cells_.size());
    for (unsigned r = 0; r < n_; ++r) {
      for (unsigned c = 0; c < n_; ++c) {
        cells[r * n_ + c] = at(c, r);
      }
    }
    return GroupoidTable(n_, std::move(cells));
  }

  bool operator==(const GroupoidTable& o) const {
    return n_ == o.n_ && cells_ == o.cells_;
  }
  bool operator!=(const GroupoidTable& o) const { return !(*this == o); }

 private:
  unsigned n_;
  std::vector<std::uint8_t> cells_;
  std::string name_;
};

struct GroupoidCode {
  unsigned n;
  BigInt j;
};

inline BigInt table_space_size(unsigned n) {
  BigInt s = 1;
  for (unsigned i = 0; i < n * n; ++i) s *= n;
  return s;
}

/// Table named by the base-n numeral of j, read row-major with entry (0,0)
/// as the most significant digit.
inline GroupoidTable decode(const GroupoidCode& code) {
  if (code.j < 0 || code.j >= table_space_size(code.n)) {
    throw DomainError("table code out of range");
  }
  std::vector<std::uint8_t> cells(std::size_t(code.n) * code.n);
  BigInt j = code.j;
  for (std::size_t p = cells.size(); p-- > 0;) {
    cells[p] = static_cast<std::uint8_t>(j % code.n);
    j /= code.n;
  }
  return GroupoidTable(code.n, std::move(cells));
}

inline GroupoidTable decode(unsigned n, const BigInt& j) {
  return decode(GroupoidCode{n, j});
}

inline GroupoidCode encode(const GroupoidTable& t) {
  BigInt j = 0;
  for (auto c : t.cells()) j = j * t.n() + c;
  return GroupoidCode{t.n(), j};
}

/// Commutative idempotent 3-element table number alpha = 9a + 3b + c,
/// where a = 0*1, b = 0*2, c = 1*2.
inline GroupoidTable ci3_decode(unsigned alpha) {
  if (alpha > 26) throw DomainError("ci3 index must be in 0..26");
  std::uint8_t a = alpha / 9, b = (alpha / 3) % 3, c = alpha % 3;
  return GroupoidTable(3, {0, a, b, a, 1, c, b, c, 2},
                       "CI3_" + std::to_string(alpha));
}

inline bool is_semigroup(const GroupoidTable& t) {
  const unsigned n = t.n();
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      for (unsigned c = 0; c < n; ++c) {
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
      }
    }
  }
  return true;
}

inline bool is_commutative(const GroupoidTable& t) {
  for (unsigned a = 0; a < t.n(); ++a) {
    for (unsigned b = a + 1; b < t.n(); ++b) {
      if (t.at(a, b) != t.at(b, a)) return false;
    }
  }
  return true;
}

inline ElemSet idempotent_elements(const GroupoidTable& t) {
  ElemSet s;
  for (unsigned a = 0; a < t.n(); ++a) {
    if (t.at(a, a) == a) s.add(a);
  }
  return s;
}

inline ElemSet identity_elements(const GroupoidTable& t) {
  ElemSet s;
  for (unsigned e = 0; e < t.n(); ++e) {
    bool ok = true;
    for (unsigned x = 0; x < t.n() && ok; ++x) {
      ok = (t.at(e, x) == x) && (t.at(x, e) == x);
    }
    if (ok) s.add(e);
  }
  return s;
}

using Perm = std::vector<std::uint8_t>;

/// First permutation (in lexicographic order) carrying a onto b, if any.
inline std::optional<Perm> is_isomorphic(const GroupoidTable& a,
                                         const GroupoidTable& b) {
  if (a.n() != b.n()) throw DomainError("isomorphism needs equal universes");
  const unsigned n = a.n();
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) {
      for (unsigned y = 0; y < n && ok; ++y) {
        ok = (p[a.at(x, y)] == b.at(p[x], p[y]));
      }
    }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

inline std::optional<Perm> is_anti_isomorphic(const GroupoidTable& a,
                                              const GroupoidTable& b) {
  return is_isomorphic(a, b.opposite());
}

/// Isomorphic or anti-isomorphic.
inline bool asymp(const GroupoidTable& a, const GroupoidTable& b) {
  return is_isomorphic(a, b).has_value() || is_anti_isomorphic(a, b).has_value();
}

// Partitions indices of `tables` into classes of the given relation,
// preserving first-appearance order inside and across classes.
inline std::vector<std::vector<std::size_t>> classes_by(
    const std::vector<GroupoidTable>& tables,
    bool (*related)(const GroupoidTable&, const GroupoidTable&)) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (related(tables[cls.front()], tables[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

inline std::vector<std::vector<std::size_t>> asymp_classes(
    const std::vector<GroupoidTable>& tables) {
  return classes_by(tables, [](const GroupoidTable& a, const GroupoidTable& b) {
    return asymp(a, b);
  });
}

inline std::vector<std::vector<std::size_t>> iso_classes(
    const std::vector<GroupoidTable>& tables) {
  return classes_by(tables, [](const GroupoidTable& a, const GroupoidTable& b) {
    return is_isomorphic(a, b).has_value();
  });
}

inline std::vector<Perm> automorphisms(const GroupoidTable& t) {
  std::vector<Perm> out;
  const unsigned n = t.n();
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) {
      for (unsigned y = 0; y < n && ok; ++y) {
        ok = (p[t.at(x, y)] == t.at(p[x], p[y]));
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Least superset of S closed under the operation.
inline ElemSet subgroupoid_closure(const GroupoidTable& t, ElemSet s) {
  if (s.empty()) throw DomainError("closure of the empty set");
  for (;;) {
    ElemSet next = s;
    for (unsigned a : s.to_vector()) {
      for (unsigned b : s.to_vector()) {
        next.add(t.at(a, b));
      }
    }
    if (next == s) return s;
    s = next;
  }
}

/// {a,b} with aa=a, bb=b and ab=ba=b (b absorptive).
inline bool is_semilattice_pair(const GroupoidTable& t, unsigned a, unsigned b) {
  return a != b && t.at(a, a) == a && t.at(b, b) == b && t.at(a, b) == b &&
         t.at(b, a) == b;
}

inline constexpr unsigned kDefaultTableEnumCap = 3;

/// All n^(n^2) table codes in increasing j.
inline std::vector<GroupoidCode> enumerate_tables(
    unsigned n, unsigned cap = kDefaultTableEnumCap) {
  if (n == 0) throw DomainError("universe must be nonempty");
  if (n > cap) {
    throw ResourceLimit("table enumeration capped at n = " +
                        std::to_string(cap));
  }
  BigInt total = table_space_size(n);
  std::vector<GroupoidCode> out;
  out.reserve(static_cast<std::size_t>(total));
  for (BigInt j = 0; j < total; ++j) out.push_back(GroupoidCode{n, j});
  return out;
}

/// The fixed reference tables "B" (4 elements), "D" and "E" (3 elements).
inline GroupoidTable named_table(const std::string& name) {
  if (name == "B") {
    return GroupoidTable(4,
                         {0, 1, 2, 3,  //
                          1, 1, 3, 2,  //
                          2, 3, 2, 1,  //
                          3, 2, 1, 3},
                         "B");
  }
  if (name == "D") {
    GroupoidTable t = ci3_decode(9);
    t.set_name("D");
    return t;
  }
  if (name == "E") {
    return GroupoidTable(3,
                         {0, 2, 1,  //
                          2, 1, 0,  //
                          1, 0, 2},
                         "E");
  }
  throw DomainError("unknown table name '" + name + "'");
}

}  // namespace dissoc

#pragma once

// Formal k-products: reverse Polish words over the variables x0..x_{k-1}
// (each appearing exactly once, in index order) and a binary operator
// symbol.  Every word of arity >= 2 factors uniquely as left * right under
// the gluing product, which is what the enumeration, ranking and
// evaluation layers lean on.

#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dissoc/common.hpp"

namespace dissoc {

// Word symbol: kOperator for the operator, otherwise a variable index.
using Sym = std::int16_t;
inline constexpr Sym kOperator = -1;

inline BigInt catalan(unsigned m) {
  // C(m) = binom(2m, m) / (m + 1)
  BigInt c = 1;
  for (unsigned i = 0; i < m; ++i) {
    c = c * 2 * (2 * i + 1) / (i + 2);
  }
  return c;
}

namespace detail {

// Catalan numbers that fit in 64 bits (C(0)..C(35)); rank arithmetic only
// ever sees values below the enumeration cap, so this range is ample.
inline std::uint64_t catalan_u64(unsigned m) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t;
    for (unsigned i = 0; i <= 35; ++i) {
      t.push_back(static_cast<std::uint64_t>(catalan(i)));
    }
    return t;
  }();
  if (m >= table.size()) {
    throw ResourceLimit("catalan index " + std::to_string(m) +
                        " out of 64-bit rank range");
  }
  return table[m];
}

}  // namespace detail

class FormalProduct;
FormalProduct compose(const FormalProduct& a, const FormalProduct& b);

class FormalProduct {
 public:
  /// Validates and wraps an rPn word.  Throws ParseError naming the first
  /// violated well-formedness criterion.
  static FormalProduct from_word(std::vector<Sym> word) {
    unsigned k = validate(word);
    return FormalProduct(std::move(word), k);
  }

  /// Parses the textual syntax: whitespace-separated tokens, "xN" for
  /// variables, "." or the bullet for the operator.
  static FormalProduct parse(std::string_view text) {
    return from_word(tokenize(text));
  }

  /// The arity-1 product x0.
  static FormalProduct variable() { return FormalProduct({Sym{0}}, 1); }

  unsigned arity() const { return arity_; }
  const std::vector<Sym>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  bool operator==(const FormalProduct& o) const { return word_ == o.word_; }
  bool operator!=(const FormalProduct& o) const { return !(*this == o); }

  /// rPn rendering, e.g. "x0 x1 x2 • •".
  std::string render() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i) out += ' ';
      if (word_[i] == kOperator) {
        out += "•";
      } else {
        out += 'x';
        out += std::to_string(word_[i]);
      }
    }
    return out;
  }

  /// Fully parenthesized infix rendering, outermost pair included.
  std::string to_infix() const {
    std::vector<std::string> stack;
    for (Sym s : word_) {
      if (s == kOperator) {
        std::string rhs = std::move(stack.back());
        stack.pop_back();
        std::string lhs = std::move(stack.back());
        stack.pop_back();
        stack.push_back("(" + lhs + " • " + rhs + ")");
      } else {
        stack.push_back("x" + std::to_string(s));
      }
    }
    return stack.back();
  }

 private:
  FormalProduct(std::vector<Sym> word, unsigned k)
      : word_(std::move(word)), arity_(k) {}

  static std::vector<Sym> tokenize(std::string_view text) {
    std::vector<Sym> word;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok == "." || tok == "•") {
        word.push_back(kOperator);
      } else if (tok.size() >= 2 && tok[0] == 'x' &&
                 tok.find_first_not_of("0123456789", 1) == std::string::npos) {
        long v = std::stol(tok.substr(1));
        if (v > 32000) throw ParseError("variable index too large: " + tok);
        word.push_back(static_cast<Sym>(v));
      } else {
        throw ParseError("malformed token '" + tok + "'");
      }
    }
    return word;
  }

  // Checks Definition-style criteria 1-4 in order and reports the first
  // failure; returns the arity.
  static unsigned validate(const std::vector<Sym>& word) {
    if (word.empty()) {
      throw ParseError("criterion 1 violated: word contains no variables");
    }
    // 1: the variables are exactly x0..x_{k-1}, once each, in index order.
    unsigned k = 0;
    for (Sym s : word) {
      if (s == kOperator) continue;
      if (s != static_cast<Sym>(k)) {
        throw ParseError(
            "criterion 1 violated: expected variable x" + std::to_string(k) +
            ", found x" + std::to_string(s));
      }
      ++k;
    }
    if (k == 0) {
      throw ParseError("criterion 1 violated: word contains no variables");
    }
    // 2: |u| = 2k - 1.
    if (word.size() != 2 * static_cast<std::size_t>(k) - 1) {
      throw ParseError("criterion 2 violated: length " +
                       std::to_string(word.size()) + " != 2*" +
                       std::to_string(k) + "-1");
    }
    // 3: exactly k - 1 operator symbols (follows from 1+2, kept explicit).
    std::size_t ops = word.size() - k;
    if (ops != k - 1) {
      throw ParseError("criterion 3 violated: " + std::to_string(ops) +
                       " operators, expected " + std::to_string(k - 1));
    }
    // 4: every nonempty prefix has strictly more variables than operators.
    long vars_minus_ops = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      vars_minus_ops += (word[i] == kOperator) ? -1 : 1;
      if (vars_minus_ops < 1) {
        std::string pfx;
        for (std::size_t j = 0; j <= i; ++j) {
          if (j) pfx += ' ';
          pfx += (word[j] == kOperator) ? std::string("•")
                                        : "x" + std::to_string(word[j]);
        }
        throw ParseError("criterion 4 violated on prefix \"" + pfx + "\"");
      }
    }
    return k;
  }

  friend FormalProduct compose(const FormalProduct&, const FormalProduct&);
  friend struct Factorization;

  std::vector<Sym> word_;
  unsigned arity_;
};

struct Factorization {
  FormalProduct left;
  FormalProduct right;
  unsigned split;  // arity of the left factor
};

/// The gluing product: a followed by b with variables shifted up by
/// arity(a), capped by a new operator.
inline FormalProduct compose(const FormalProduct& a, const FormalProduct& b) {
  std::vector<Sym> word;
  word.reserve(a.length() + b.length() + 1);
  word.insert(word.end(), a.word().begin(), a.word().end());
  const Sym shift = static_cast<Sym>(a.arity());
  for (Sym s : b.word()) {
    word.push_back(s == kOperator ? kOperator : static_cast<Sym>(s + shift));
  }
  word.push_back(kOperator);
  return FormalProduct(std::move(word), a.arity() + b.arity());
}

inline FormalProduct compose(const Factorization& f) {
  return compose(f.left, f.right);
}

/// Inverts compose.  Arity-1 input has no factorization.
inline Factorization factorize(const FormalProduct& w) {
  if (w.arity() < 2) {
    throw DomainError("arity-1 product has no factorization");
  }
  const auto& word = w.word();
  // The right factor is the unique complete segment ending just before the
  // final operator: scan backwards until variables outnumber operators by 1.
  long balance = 0;
  std::size_t start = word.size() - 1;
  do {
    --start;
    balance += (word[start] == kOperator) ? -1 : 1;
  } while (balance != 1);
  std::vector<Sym> left(word.begin(), word.begin() + start);
  unsigned i = 0;
  for (Sym s : left) {
    if (s != kOperator) ++i;
  }
  std::vector<Sym> right;
  right.reserve(word.size() - 1 - start);
  for (std::size_t p = start; p + 1 < word.size(); ++p) {
    Sym s = word[p];
    right.push_back(s == kOperator ? kOperator : static_cast<Sym>(s - i));
  }
  return Factorization{FormalProduct::from_word(std::move(left)),
                       FormalProduct::from_word(std::move(right)), i};
}

/// |F(k)| = C(k-1), exactly.
inline BigInt product_count(unsigned k) {
  if (k == 0) throw DomainError("arity must be positive");
  return catalan(k - 1);
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// All formal k-products in canonical order: split index ascending, then
/// left factor order, then right factor order.
inline std::vector<FormalProduct> enumerate_products(
    unsigned k, std::uint64_t cap = kDefaultEnumerationCap) {
  if (k == 0) throw DomainError("arity must be positive");
  if (product_count(k) > cap) {
    throw ResourceLimit("enumeration of " + product_count(k).str() +
                        " products exceeds cap " + std::to_string(cap));
  }
  std::vector<std::vector<FormalProduct>> levels(k + 1);
  levels[1].push_back(FormalProduct::variable());
  for (unsigned m = 2; m <= k; ++m) {
    for (unsigned i = 1; i < m; ++i) {
      for (const auto& a : levels[i]) {
        for (const auto& b : levels[m - i]) {
          levels[m].push_back(compose(a, b));
        }
      }
    }
  }
  return std::move(levels[k]);
}

/// Position of w in the canonical order.
inline std::uint64_t rank(const FormalProduct& w) {
  if (w.arity() == 1) return 0;
  Factorization f = factorize(w);
  const unsigned k = w.arity();
  std::uint64_t r = 0;
  for (unsigned i = 1; i < f.split; ++i) {
    r += detail::catalan_u64(i - 1) * detail::catalan_u64(k - i - 1);
  }
  r += rank(f.left) * detail::catalan_u64(k - f.split - 1);
  r += rank(f.right);
  return r;
}

/// Inverse of rank for arity k.
inline FormalProduct unrank(unsigned k, std::uint64_t r) {
  if (k == 0) throw DomainError("arity must be positive");
  if (BigInt(r) >= product_count(k)) {
    throw DomainError("rank " + std::to_string(r) + " out of range for arity " +
                      std::to_string(k));
  }
  if (k == 1) return FormalProduct::variable();
  unsigned i = 1;
  for (;; ++i) {
    std::uint64_t block =
        detail::catalan_u64(i - 1) * detail::catalan_u64(k - i - 1);
    if (r < block) break;
    r -= block;
  }
  std::uint64_t right_count = detail::catalan_u64(k - i - 1);
  return compose(unrank(i, r / right_count), unrank(k - i, r % right_count));
}

}  // namespace dissoc

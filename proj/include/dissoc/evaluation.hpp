#pragma once

// Semantics: evaluating formal products and general terms over operation
// tables, and building the induced operation vectors.

#include <cctype>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dissoc/formal_product.hpp"
#include "dissoc/groupoid.hpp"
#include "dissoc/op_vector.hpp"

namespace dissoc {

/// Stack-machine evaluation of a (possibly index-shifted) rPn fragment;
/// variable x_i reads g[i].
inline std::uint8_t eval_rpn(std::span<const Sym> word, const GroupoidTable& t,
                             std::span<const std::uint8_t> g) {
  std::vector<std::uint8_t> stack;
  stack.reserve(word.size() / 2 + 1);
  for (Sym s : word) {
    if (s == kOperator) {
      std::uint8_t b = stack.back();
      stack.pop_back();
      std::uint8_t a = stack.back();
      stack.pop_back();
      stack.push_back(t.at(a, b));
    } else {
      if (static_cast<std::size_t>(s) >= g.size()) {
        throw DomainError("tuple shorter than the variable range");
      }
      stack.push_back(g[s]);
    }
  }
  return stack.back();
}

inline std::uint8_t eval_rpn(const FormalProduct& w, const GroupoidTable& t,
                             std::span<const std::uint8_t> g) {
  return eval_rpn(std::span<const Sym>(w.word()), t, g);
}

/// result[g] = t(va[g_0..g_{i-1}], vb[g_i..g_{k-1}]).
inline OpVector compose_vectors(const OpVector& va, const OpVector& vb,
                                const GroupoidTable& t) {
  if (va.n() != vb.n() || va.n() != t.n()) throw DomainError("universe mismatch");
  const unsigned n = va.n();
  const unsigned k = va.arity() + vb.arity();
  OpVector out(n, k);
  const std::uint64_t hi_count = va.size();
  const std::uint64_t lo_count = vb.size();

  if (n == 2 && lo_count >= 64) {
    // Word-aligned fast path: the block contributed by each left value is
    // vb mapped through one row of the table, which is a constant, a copy,
    // or a complement.
    const std::size_t words_b = static_cast<std::size_t>(lo_count / 64);
    std::vector<std::uint64_t> blocks[2];
    for (unsigned a = 0; a < 2; ++a) {
      blocks[a].resize(words_b);
      const std::uint8_t z = t.at(a, 0), o = t.at(a, 1);
      for (std::size_t w = 0; w < words_b; ++w) {
        std::uint64_t src = vb.packed_words()[w];
        std::uint64_t word;
        if (z == 0 && o == 0) {
          word = 0;
        } else if (z == 1 && o == 1) {
          word = ~0ull;
        } else if (z == 0 && o == 1) {
          word = src;
        } else {
          word = ~src;
        }
        blocks[a][w] = word;
      }
    }
    auto& dst = out.packed_words();
    for (std::uint64_t hi = 0; hi < hi_count; ++hi) {
      const auto& blk = blocks[va.get(hi)];
      std::memcpy(dst.data() + hi * words_b, blk.data(), words_b * 8);
    }
    return out;
  }

  for (std::uint64_t hi = 0; hi < hi_count; ++hi) {
    const std::uint8_t a = va.get(hi);
    const std::uint64_t base = hi * lo_count;
    for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
      out.set(base + lo, t.at(a, vb.get(lo)));
    }
  }
  return out;
}

/// Vector of w's induced operation, computed by composing factor vectors
/// along the unique factorization.
inline OpVector induced_vector(const FormalProduct& w, const GroupoidTable& t) {
  if (w.arity() == 1) return OpVector::projection(t.n());
  Factorization f = factorize(w);
  return compose_vectors(induced_vector(f.left, t), induced_vector(f.right, t),
                         t);
}

/// Per-operator interpretation: the j-th operator occurrence (left to
/// right in the rPn word) is evaluated with ops[j].
inline OpVector interpret(const FormalProduct& w,
                          const std::vector<GroupoidTable>& ops) {
  if (ops.size() + 1 != w.arity()) {
    throw DomainError("need arity-1 operation tables");
  }
  if (ops.empty()) {
    throw DomainError("cannot infer the universe of an arity-1 interpretation");
  }
  const unsigned n = ops[0].n();
  for (const auto& t : ops) {
    if (t.n() != n) throw DomainError("operation tables must share a universe");
  }
  // The final operator is the last occurrence; the left factor owns the
  // first arity(left)-1 occurrences and the right factor the rest.
  struct Rec {
    static OpVector go(const FormalProduct& w,
                       std::span<const GroupoidTable> ops, unsigned n) {
      if (w.arity() == 1) return OpVector::projection(n);
      Factorization f = factorize(w);
      const unsigned left_ops = f.split - 1;
      OpVector va = go(f.left, ops.first(left_ops), n);
      OpVector vb = go(f.right, ops.subspan(left_ops, ops.size() - left_ops - 1), n);
      return compose_vectors(va, vb, ops.back());
    }
  };
  return Rec::go(w, std::span<const GroupoidTable>(ops), n);
}

// ---------------------------------------------------------------------------
// Terms with named variables, and identity checking.

class Term {
 public:
  static Term variable(std::string name) {
    Term t;
    t.node_ = std::make_shared<Node>(Node{std::move(name), nullptr, nullptr});
    return t;
  }
  static Term apply(Term lhs, Term rhs) {
    Term t;
    t.node_ = std::make_shared<Node>(
        Node{{}, std::move(lhs.node_), std::move(rhs.node_)});
    return t;
  }

  bool is_variable() const { return node_->lhs == nullptr; }
  const std::string& var_name() const { return node_->var; }
  Term lhs() const { return Term{node_->lhs}; }
  Term rhs() const { return Term{node_->rhs}; }

  std::string str() const {
    if (is_variable()) return node_->var;
    return "(" + lhs().str() + "*" + rhs().str() + ")";
  }

  void collect_variables(std::vector<std::string>& order) const {
    if (is_variable()) {
      for (const auto& v : order) {
        if (v == node_->var) return;
      }
      order.push_back(node_->var);
      return;
    }
    lhs().collect_variables(order);
    rhs().collect_variables(order);
  }

 private:
  struct Node {
    std::string var;
    std::shared_ptr<const Node> lhs, rhs;
  };
  Term() = default;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Identity {
  Term lhs, rhs;
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

namespace detail {

// Infix term grammar with mandatory parentheses below the top level:
//   expr    := primary ( "*" primary )?
//   primary := identifier | "(" expr ")"
// so "((x*y)*z)*z" is accepted while "x*y*z" is rejected.
class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse_full() {
    Term t = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("trailing input after term: '" +
                       std::string(text_.substr(pos_)) + "'");
    }
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  Term parse_expr() {
    Term a = parse_primary();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      Term b = parse_primary();
      return Term::apply(std::move(a), std::move(b));
    }
    return a;
  }
  Term parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of term");
    if (text_[pos_] == '(') {
      ++pos_;
      Term t = parse_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')' in term");
      }
      ++pos_;
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] +
                       "' in term");
    }
    return Term::variable(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text) {
  return detail::TermParser(text).parse_full();
}

/// "lhs = rhs" with both sides in the infix term syntax.
inline Identity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("identity must contain '='");
  }
  return Identity{parse_term(text.substr(0, eq)),
                  parse_term(text.substr(eq + 1))};
}

inline std::uint8_t eval_term(const Term& term, const GroupoidTable& t,
                              const std::map<std::string, std::uint8_t>& env) {
  if (term.is_variable()) {
    auto it = env.find(term.var_name());
    if (it == env.end()) {
      throw DomainError("unbound variable '" + term.var_name() + "'");
    }
    return it->second;
  }
  return t.at(eval_term(term.lhs(), t, env), eval_term(term.rhs(), t, env));
}

struct IdentityCheck {
  bool holds;
  std::vector<std::pair<std::string, std::uint8_t>> countermodel;
  std::uint8_t lhs_value = 0, rhs_value = 0;
};

/// Checks all n^v assignments in base-n order (first variable most
/// significant); reports the first countermodel when the identity fails.
inline IdentityCheck identity_holds(const Identity& id, const GroupoidTable& t) {
  std::vector<std::string> vars;
  id.lhs.collect_variables(vars);
  id.rhs.collect_variables(vars);
  const unsigned n = t.n();
  const std::uint64_t total = pow_u64(n, static_cast<unsigned>(vars.size()));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::map<std::string, std::uint8_t> env;
    std::uint64_t rem = idx;
    for (std::size_t p = vars.size(); p-- > 0;) {
      env[vars[p]] = static_cast<std::uint8_t>(rem % n);
      rem /= n;
    }
    std::uint8_t l = eval_term(id.lhs, t, env);
    std::uint8_t r = eval_term(id.rhs, t, env);
    if (l != r) {
      IdentityCheck out{false, {}, l, r};
      for (const auto& v : vars) out.countermodel.emplace_back(v, env[v]);
      return out;
    }
  }
  return IdentityCheck{true, {}, 0, 0};
}

/// ((x*y)*z)*z = ((x*y)*(x*z))*(x*z), the separating identity used by the
/// primitivity checks.
inline Identity beta_identity() {
  return parse_identity("((x*y)*z)*z = ((x*y)*(x*z))*(x*z)");
}

inline Identity associative_law() {
  return parse_identity("(x*(y*z)) = ((x*y)*z)");
}

}  // namespace dissoc

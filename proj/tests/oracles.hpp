#pragma once

// Brute-force oracles kept independent of the library's compositional
// code paths; tests cross-validate against these.

#include <vector>

#include "dissoc/evaluation.hpp"
#include "dissoc/formal_product.hpp"
#include "dissoc/groupoid.hpp"
#include "dissoc/op_vector.hpp"

namespace dissoc::oracles {

// Tuple-by-tuple evaluation through the stack machine.
inline OpVector naive_induced_vector(const FormalProduct& w,
                                     const GroupoidTable& t) {
  OpVector out(t.n(), w.arity());
  for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
    auto g = decode_tuple(t.n(), w.arity(), idx);
    out.set(idx, eval_rpn(w, t, g));
  }
  return out;
}

// Per-operator stack machine: the j-th operator occurrence uses ops[j].
inline OpVector naive_interpret(const FormalProduct& w,
                                const std::vector<GroupoidTable>& ops) {
  const unsigned n = ops.at(0).n();
  OpVector out(n, w.arity());
  for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
    auto g = decode_tuple(n, w.arity(), idx);
    std::vector<std::uint8_t> stack;
    std::size_t op_pos = 0;
    for (Sym s : w.word()) {
      if (s == kOperator) {
        std::uint8_t b = stack.back();
        stack.pop_back();
        std::uint8_t a = stack.back();
        stack.pop_back();
        stack.push_back(ops.at(op_pos++).at(a, b));
      } else {
        stack.push_back(g[s]);
      }
    }
    out.set(idx, stack.back());
  }
  return out;
}

// Value set of all parenthesizations of a fixed word, by enumeration.
inline ElemSet allvals_by_enumeration(const std::vector<std::uint8_t>& word,
                                      const GroupoidTable& t) {
  ElemSet s;
  for (const auto& u : enumerate_products(static_cast<unsigned>(word.size()))) {
    s.add(eval_rpn(u, t, word));
  }
  return s;
}

// The standard cross-validation table set: all 16 two-element tables plus
// the named three- and four-element ones.
inline std::vector<GroupoidTable> reference_tables() {
  std::vector<GroupoidTable> out;
  for (unsigned j = 0; j < 16; ++j) out.push_back(decode(2, j));
  out.push_back(named_table("E"));
  out.push_back(named_table("B"));
  out.push_back(named_table("D"));
  return out;
}

}  // namespace dissoc::oracles

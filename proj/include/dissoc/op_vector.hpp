#pragma once

// Induced k-ary operations stored as flat value arrays of length n^k,
// indexed with the first tuple coordinate most significant.  The n = 2
// case is bit-packed: the agreement-partition DP holds hundreds of
// thousands of these at once.

#include <cstdint>
#include <cstring>
#include <vector>

#include "dissoc/common.hpp"

namespace dissoc {

inline std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) {
    if (r > UINT64_MAX / base) throw ResourceLimit("power overflows 64 bits");
    r *= base;
  }
  return r;
}

class OpVector {
 public:
  OpVector(unsigned n, unsigned k) : n_(n), k_(k), len_(pow_u64(n, k)) {
    if (n_ < 1) throw DomainError("universe must be nonempty");
    if (len_ > (1ull << 40)) throw ResourceLimit("operation vector too large");
    if (n_ == 2) {
      packed_.assign((len_ + 63) / 64, 0);
    } else {
      vals_.assign(len_, 0);
    }
  }

  /// The arity-1 identity vector g -> g.
  static OpVector projection(unsigned n) {
    OpVector v(n, 1);
    for (unsigned g = 0; g < n; ++g) v.set(g, static_cast<std::uint8_t>(g));
    return v;
  }

  unsigned n() const { return n_; }
  unsigned arity() const { return k_; }
  std::uint64_t size() const { return len_; }

  std::uint8_t get(std::uint64_t idx) const {
    if (n_ == 2) return (packed_[idx >> 6] >> (idx & 63)) & 1u;
    return vals_[idx];
  }

  void set(std::uint64_t idx, std::uint8_t v) {
    if (n_ == 2) {
      std::uint64_t mask = 1ull << (idx & 63);
      if (v) {
        packed_[idx >> 6] |= mask;
      } else {
        packed_[idx >> 6] &= ~mask;
      }
    } else {
      vals_[idx] = v;
    }
  }

  bool operator==(const OpVector& o) const {
    return n_ == o.n_ && k_ == o.k_ && packed_ == o.packed_ && vals_ == o.vals_;
  }
  bool operator!=(const OpVector& o) const { return !(*this == o); }

  std::uint64_t hash() const {
    std::uint64_t h = detail::fnv1a64(&n_, sizeof(n_));
    h = detail::fnv1a64(&k_, sizeof(k_), h);
    if (n_ == 2) {
      return detail::fnv1a64(packed_.data(), packed_.size() * 8, h);
    }
    return detail::fnv1a64(vals_.data(), vals_.size(), h);
  }

  /// Positions where two equal-shape vectors agree.
  std::uint64_t agreement(const OpVector& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw DomainError("shape mismatch");
    std::uint64_t agree = 0;
    if (n_ == 2) {
      for (std::size_t w = 0; w < packed_.size(); ++w) {
        std::uint64_t same = ~(packed_[w] ^ o.packed_[w]);
        if (w + 1 == packed_.size() && (len_ & 63)) {
          same &= (1ull << (len_ & 63)) - 1;
        }
        agree += static_cast<std::uint64_t>(__builtin_popcountll(same));
      }
    } else {
      for (std::uint64_t i = 0; i < len_; ++i) {
        agree += (vals_[i] == o.vals_[i]);
      }
    }
    return agree;
  }

  const std::vector<std::uint64_t>& packed_words() const { return packed_; }
  std::vector<std::uint64_t>& packed_words() { return packed_; }

 private:
  unsigned n_, k_;
  std::uint64_t len_;
  std::vector<std::uint64_t> packed_;  // n == 2
  std::vector<std::uint8_t> vals_;     // n >= 3
};

struct OpVectorHash {
  std::size_t operator()(const OpVector& v) const {
    return static_cast<std::size_t>(v.hash());
  }
};

/// Decodes tuple index -> (g_0..g_{k-1}), g_0 most significant.
inline std::vector<std::uint8_t> decode_tuple(unsigned n, unsigned k,
                                              std::uint64_t idx) {
  std::vector<std::uint8_t> g(k);
  for (unsigned p = k; p-- > 0;) {
    g[p] = static_cast<std::uint8_t>(idx % n);
    idx /= n;
  }
  return g;
}

}  // namespace dissoc

#pragma once

// Yield machinery: the set of values a fixed word can take over all
// parenthesizations, accumulated yields of eventually periodic sequences,
// and structural certificates that a sequence yields a set at every
// prefix length.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dissoc/groupoid.hpp"

namespace dissoc {

/// Thrown when a sequence cannot be certified to stay inside the target.
class CertificateNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ElemSet combine_sets(ElemSet a, ElemSet b, const GroupoidTable& t) {
  ElemSet out;
  for (unsigned x : a.to_vector()) {
    for (unsigned y : b.to_vector()) {
      out.add(t.at(x, y));
    }
  }
  return out;
}

/// Values of all parenthesizations of the word: the classic interval DP
/// over value sets.
inline ElemSet allvals(std::span<const std::uint8_t> word,
                       const GroupoidTable& t) {
  const std::size_t len = word.size();
  if (len == 0) throw DomainError("allvals of the empty word");
  // vals[i][j] = value set of word[i..i+j+1).
  std::vector<std::vector<ElemSet>> vals(len, std::vector<ElemSet>(len));
  for (std::size_t i = 0; i < len; ++i) {
    if (word[i] >= t.n()) throw DomainError("word letter out of range");
    vals[i][0].add(word[i]);
  }
  for (std::size_t span_len = 2; span_len <= len; ++span_len) {
    for (std::size_t i = 0; i + span_len <= len; ++i) {
      ElemSet acc;
      for (std::size_t cut = 1; cut < span_len; ++cut) {
        acc = acc.unite(combine_sets(vals[i][cut - 1],
                                     vals[i + cut][span_len - cut - 1], t));
      }
      vals[i][span_len - 1] = acc;
    }
  }
  return vals[0][len - 1];
}

inline ElemSet allvals(const std::vector<std::uint8_t>& word,
                       const GroupoidTable& t) {
  return allvals(std::span<const std::uint8_t>(word), t);
}

/// Possible values of the i-split products over the word: left factor over
/// word[0..i), right factor over word[i..).
inline ElemSet split_values(std::span<const std::uint8_t> word, unsigned i,
                            const GroupoidTable& t) {
  if (i == 0 || i >= word.size()) throw DomainError("split out of range");
  return combine_sets(allvals(word.first(i), t),
                      allvals(word.subspan(i), t), t);
}

inline ElemSet split_values(const std::vector<std::uint8_t>& word, unsigned i,
                            const GroupoidTable& t) {
  return split_values(std::span<const std::uint8_t>(word), i, t);
}

struct EventuallyPeriodicSeq {
  std::vector<std::uint8_t> prefix;
  std::vector<std::uint8_t> period;  // nonempty

  static EventuallyPeriodicSeq constant(std::uint8_t a) {
    return EventuallyPeriodicSeq{{}, {a}};
  }

  std::uint8_t at(std::size_t idx) const {
    if (idx < prefix.size()) return prefix[idx];
    return period[(idx - prefix.size()) % period.size()];
  }

  std::vector<std::uint8_t> first(std::size_t m) const {
    std::vector<std::uint8_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = at(i);
    return out;
  }

  ElemSet letters() const {
    ElemSet s;
    for (auto x : prefix) s.add(x);
    for (auto x : period) s.add(x);
    return s;
  }

  std::string str() const {
    std::string out;
    for (auto x : prefix) out += std::to_string(int(x));
    out += "(";
    for (auto x : period) out += std::to_string(int(x));
    out += ")^w";
    return out;
  }
};

struct SeqYield {
  ElemSet accumulated;
  std::optional<std::size_t> stabilized_at;
};

/// Union of allvals over the first m letters, m = 1..L; stabilized_at is
/// the least m whose set already equals the final one, absent when the
/// set still grew at step L.
inline SeqYield seq_yield(const EventuallyPeriodicSeq& seq,
                          const GroupoidTable& t, std::size_t L) {
  if (L < 1) throw DomainError("need at least one prefix");
  if (seq.period.empty()) throw DomainError("period must be nonempty");
  std::vector<ElemSet> acc(L);
  ElemSet run;
  auto word = seq.first(L);
  for (std::size_t m = 1; m <= L; ++m) {
    run = run.unite(allvals(std::span<const std::uint8_t>(word).first(m), t));
    acc[m - 1] = run;
  }
  SeqYield out{run, std::nullopt};
  if (L >= 2 && acc[L - 1] == acc[L - 2]) {
    std::size_t m = L;
    while (m >= 2 && acc[m - 2] == run) --m;
    out.stabilized_at = m;
  } else if (L == 1) {
    out.stabilized_at = 1;
  }
  return out;
}

struct YieldCertificate {
  enum class Kind {
    ConstantIdempotent,
    SemilatticeAbsorb,
    Subgroupoid,
    IdentityDeletion,
    BoundedEmpirical,
  };

  Kind kind;
  ElemSet target;
  bool all_length_valid = false;

  // Kind-specific payloads.
  std::uint8_t element_a = 0, element_b = 0;      // idempotent / pair (a, b)
  ElemSet subuniverse;                            // Subgroupoid
  std::vector<std::uint8_t> core;                 // IdentityDeletion, finite
  std::shared_ptr<YieldCertificate> inner;        // IdentityDeletion, periodic
  std::size_t bounded_length = 0;                 // BoundedEmpirical
  std::optional<std::size_t> stabilized_at;

  std::string describe() const {
    switch (kind) {
      case Kind::ConstantIdempotent:
        return "constant idempotent " + std::to_string(int(element_a));
      case Kind::SemilatticeAbsorb:
        return "semilattice {" + std::to_string(int(element_a)) + "," +
               std::to_string(int(element_b)) + "} absorbing " +
               std::to_string(int(element_b));
      case Kind::Subgroupoid:
        return "subgroupoid " + subuniverse.str();
      case Kind::IdentityDeletion: {
        std::string w;
        for (auto x : core) w += std::to_string(int(x));
        return inner ? "identity deletion to periodic core, " +
                           inner->describe()
                     : "identity deletion to core \"" + w + "\"";
      }
      case Kind::BoundedEmpirical:
        return "bounded evidence to length " + std::to_string(bounded_length);
    }
    return "";
  }
};

namespace detail {

inline std::optional<YieldCertificate> structural_certificate(
    const EventuallyPeriodicSeq& seq, ElemSet target_bound,
    const GroupoidTable& t, bool allow_identity_deletion) {
  const ElemSet letters = seq.letters();
  // Candidates from every applicable rule; the tightest target wins, with
  // the rule order breaking ties.
  std::vector<YieldCertificate> candidates;

  // Constant idempotent sequence.
  if (letters.size() == 1) {
    unsigned a = letters.to_vector()[0];
    if (t.at(a, a) == a) {
      YieldCertificate c{YieldCertificate::Kind::ConstantIdempotent,
                         ElemSet::of({a}), true};
      c.element_a = static_cast<std::uint8_t>(a);
      candidates.push_back(c);
    }
  }

  // Two-letter semilattice with the absorbing element first: every prefix
  // then contains the absorber, so every parenthesization evaluates to it.
  if (letters.size() == 2) {
    auto v = letters.to_vector();
    for (auto [a, b] : {std::pair{v[0], v[1]}, std::pair{v[1], v[0]}}) {
      if (is_semilattice_pair(t, a, b) && seq.at(0) == b) {
        YieldCertificate c{YieldCertificate::Kind::SemilatticeAbsorb,
                           ElemSet::of({unsigned(b)}), true};
        c.element_a = static_cast<std::uint8_t>(a);
        c.element_b = static_cast<std::uint8_t>(b);
        candidates.push_back(c);
      }
    }
  }

  // Letters inside a subuniverse keep every value inside it.
  {
    ElemSet h = subgroupoid_closure(t, letters);
    YieldCertificate c{YieldCertificate::Kind::Subgroupoid, h, true};
    c.subuniverse = h;
    candidates.push_back(c);
  }

  // Deleting two-sided identity letters does not change the value of any
  // parenthesization of the surviving core.
  if (allow_identity_deletion) {
    ElemSet ids = identity_elements(t);
    if (!ids.empty() && letters.intersects(ids) && !letters.subset_of(ids)) {
      unsigned e = ids.to_vector()[0];
      std::vector<std::uint8_t> red_prefix, red_period;
      for (auto x : seq.prefix) {
        if (!ids.contains(x)) red_prefix.push_back(x);
      }
      for (auto x : seq.period) {
        if (!ids.contains(x)) red_period.push_back(x);
      }
      ElemSet target;
      if (ids.contains(seq.at(0))) target.add(e);
      if (red_period.empty()) {
        // Finite core: prefixes of the sequence reduce to prefixes of the
        // core word, every length reached.
        for (std::size_t m = 1; m <= red_prefix.size(); ++m) {
          target = target.unite(allvals(
              std::span<const std::uint8_t>(red_prefix).first(m), t));
        }
        YieldCertificate c{YieldCertificate::Kind::IdentityDeletion, target,
                           true};
        c.core = std::move(red_prefix);
        c.element_a = static_cast<std::uint8_t>(e);
        candidates.push_back(c);
      } else {
        EventuallyPeriodicSeq core{std::move(red_prefix),
                                   std::move(red_period)};
        auto inner = structural_certificate(core, target_bound, t, false);
        if (inner && inner->all_length_valid) {
          target = target.unite(inner->target);
          YieldCertificate c{YieldCertificate::Kind::IdentityDeletion, target,
                             true};
          c.inner = std::make_shared<YieldCertificate>(*inner);
          c.element_a = static_cast<std::uint8_t>(e);
          candidates.push_back(c);
        }
      }
    }
  }

  std::optional<YieldCertificate> best;
  for (auto& c : candidates) {
    if (!c.target.subset_of(target_bound)) continue;
    if (!best || c.target.size() < best->target.size()) best = std::move(c);
  }
  return best;
}

}  // namespace detail

/// Strongest applicable certificate that seq yields a subset of S; falls
/// back to bounded evidence, and refuses when even that leaves S.
inline YieldCertificate certify_yield(const EventuallyPeriodicSeq& seq,
                                      ElemSet S, const GroupoidTable& t,
                                      std::size_t bounded_length = 30) {
  if (seq.period.empty()) throw DomainError("period must be nonempty");
  if (auto c = detail::structural_certificate(seq, S, t, true)) {
    return *c;
  }
  SeqYield sy = seq_yield(seq, t, bounded_length);
  if (!sy.accumulated.subset_of(S)) {
    throw CertificateNotFound("sequence " + seq.str() + " reaches " +
                              sy.accumulated.str() + " outside " + S.str());
  }
  YieldCertificate c{YieldCertificate::Kind::BoundedEmpirical, sy.accumulated,
                     false};
  c.bounded_length = bounded_length;
  c.stabilized_at = sy.stabilized_at;
  return c;
}

}  // namespace dissoc

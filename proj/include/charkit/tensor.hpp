#pragma once

// Clebsch-Gordan series by peeling characters off a product, highest weight
// first. The residual has to vanish exactly, which makes every decomposition
// self-checking.

#include <array>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charkit/cgseries.hpp"
#include "charkit/charsolve.hpp"
#include "charkit/fixtures.hpp"

namespace charkit {

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes p = sum N_mu chi_mu over the dominant weights mu below top.
inline CGSeries decompose_polynomial(CharacterTable& table, MultiPoly p, const Weight& top) {
  CGSeries out;
  for (const Weight& mu : dominant_weights_below(top)) {
    mpz_class n = p.coefficient_of(mu);
    if (n == 0) continue;
    if (n < 0) throw DecompositionError("negative multiplicity " + n.get_str() + " for " + mu.label());
    const MultiPoly& chi = table.character(mu);
    for (const auto& [mono, c] : chi.terms()) p.add_term(mono, -n * c);
    out.add(mu, n);
  }
  if (!p.is_zero())
    throw DecompositionError("nonzero residual after decomposing below " + top.label() + ": " + to_string(p));
  return out;
}

/// R_m x R_n.
inline CGSeries cg_decompose(CharacterTable& table, const Weight& m, const Weight& n) {
  if (!m.is_dominant() || !n.is_dominant()) throw DomainError("cg_decompose: weights must be dominant");
  MultiPoly p = table.character(m) * table.character(n);
  return decompose_polynomial(table, std::move(p), m + n);
}

/// z^n = prod_i chi_{lambda_i}^{n_i}.
inline CGSeries monomial_decompose(CharacterTable& table, const Monomial& n) {
  if (!n.is_dominant()) throw DomainError("monomial_decompose: negative exponent in " + n.label());
  return decompose_polynomial(table, MultiPoly::monomial(n), n);
}

// z7 chi_{n lambda_k} = chi_{n lambda_k + lambda_7} + sum_v chi_{(n-1) lambda_k + v}.
namespace detail {

inline const std::vector<Weight>& z7_family_offsets(int k) {
  auto w = [](std::initializer_list<int> idx) {
    Weight x;
    for (int i : idx) x = x + Weight::fundamental(i);
    return x;
  };
  static const std::array<std::vector<Weight>, kRank> table{{
      {w({2}), w({7})},
      {w({3}), w({6}), w({1})},
      {w({1, 2}), w({5}), w({1, 7}), w({2})},
      {w({2, 3}), w({1, 5}), w({2, 6}), w({3, 7}), w({1, 2}), w({5})},
      {w({4}), w({1, 6}), w({2, 7}), w({3}), w({6})},
      {w({5}), w({1, 7}), w({2}), w({7})},
      {w({6}), w({1}), w({})},
  }};
  return table[static_cast<std::size_t>(k - 1)];
}

}  // namespace detail

/// Closed form of z7 chi_{n lambda_k}; coinciding weights are merged.
inline CGSeries z7_family_closed_form(int k, int n) {
  if (k < 1 || k > kRank || n < 1) throw DomainError("series family needs 1 <= k <= 7 and n >= 1");
  Weight lk = Weight::fundamental(k);
  CGSeries s;
  s.add(n * lk + Weight::fundamental(7), 1);
  for (const Weight& v : detail::z7_family_offsets(k)) s.add((n - 1) * lk + v, 1);
  return s;
}

struct FamilyResult {
  int k = 0;
  int n = 0;
  CGSeries computed;
  CGSeries closed_form;
  bool match = false;
  /// "weight: computed N, closed form M" for every differing weight.
  std::vector<std::string> differences;
};

inline FamilyResult series_family_z7(CharacterTable& table, int k, int n) {
  FamilyResult r;
  r.k = k;
  r.n = n;
  r.closed_form = z7_family_closed_form(k, n);
  r.computed = cg_decompose(table, Weight::fundamental(7), n * Weight::fundamental(k));
  std::map<Weight, std::pair<mpz_class, mpz_class>> both;
  for (const auto& [w, c] : r.computed.terms()) both[w].first = c;
  for (const auto& [w, c] : r.closed_form.terms()) both[w].second = c;
  for (const auto& [w, p] : both)
    if (p.first != p.second)
      r.differences.push_back(w.label() + ": computed " + p.first.get_str() + ", closed form " + p.second.get_str());
  r.match = r.differences.empty();
  return r;
}

struct RoundtripReport {
  std::size_t checked = 0;
  /// (pair, recomputed series) for every series that differs from the corpus.
  std::vector<std::pair<PairKey, CGSeries>> mismatches;
  bool pass() const { return mismatches.empty() && checked > 0; }
};

inline RoundtripReport verify_quadratic_roundtrip(CharacterTable& table, const QuadraticCorpus& corpus) {
  RoundtripReport r;
  for (const auto& [jk, expected] : corpus.series) {
    CGSeries got = cg_decompose(table, Weight::fundamental(jk.first), Weight::fundamental(jk.second));
    ++r.checked;
    if (!(got == expected)) r.mismatches.emplace_back(jk, std::move(got));
  }
  return r;
}

}  // namespace charkit

#pragma once

// Assembly of Delta1 from the quadratic Clebsch-Gordan data. Applying Delta1
// to z_j z_k = sum_m N_{m;jk} chi_m gives
//
//   2 a_jk = sum_m N_{m;jk} eps_m(1) chi_m - b_j z_k - b_k z_j.
//
// Characters of order >= 3 that occur in a series are not part of the
// corpus; they are solved on the fly with the part of Delta1 already built.
// The pairs are processed in increasing root height of lambda_j + lambda_k,
// which guarantees that every coefficient such a character needs is known.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charkit/charsolve.hpp"
#include "charkit/csmodel.hpp"
#include "charkit/fixtures.hpp"

namespace charkit {

class CorpusIncompleteError : public std::runtime_error {
 public:
  CorpusIncompleteError(const Weight& w, const std::string& why)
      : std::runtime_error("corpus incomplete: no character for weight " + w.label() + " (" + why + ")"), weight_(w) {}
  const Weight& weight() const { return weight_; }

 private:
  Weight weight_;
};

struct Reconstruction {
  Delta1Operator op;
  /// Pairs (j, k) in the order their coefficients were assembled.
  std::vector<PairKey> order;
  /// Characters of order >= 3 solved while assembling.
  std::map<Weight, MultiPoly> derived_characters;
};

/// Pairs j <= k sorted by the root height of lambda_j + lambda_k.
inline std::vector<PairKey> assembly_order() {
  std::vector<PairKey> pairs;
  for (int j = 1; j <= kRank; ++j)
    for (int k = j; k <= kRank; ++k) pairs.emplace_back(j, k);
  std::stable_sort(pairs.begin(), pairs.end(), [](const PairKey& x, const PairKey& y) {
    auto hx = twice_root_height(Weight::fundamental(x.first) + Weight::fundamental(x.second));
    auto hy = twice_root_height(Weight::fundamental(y.first) + Weight::fundamental(y.second));
    return hx < hy;
  });
  return pairs;
}

inline Reconstruction build_delta1(const QuadraticCorpus& corpus) {
  Reconstruction rec;
  rec.order = assembly_order();
  CharacterTable table(rec.op);

  auto chi_of = [&](const Weight& m) -> MultiPoly {
    if (m.is_zero()) return MultiPoly(mpz_class(1));
    if (m.level() == 1)
      for (int i = 1; i <= kRank; ++i)
        if (m[i - 1] == 1) return MultiPoly::variable(i);
    if (auto it = corpus.second_order_chars.find(m); it != corpus.second_order_chars.end()) return it->second;
    if (auto it = rec.derived_characters.find(m); it != rec.derived_characters.end()) return it->second;
    if (m.level() <= 2) throw CorpusIncompleteError(m, "second-order characters must be supplied");
    try {
      MultiPoly chi = table.character_m1(m);
      rec.derived_characters.emplace(m, chi);
      return chi;
    } catch (const IncompleteOperatorError& e) {
      throw CorpusIncompleteError(m, e.what());
    }
  };

  for (const auto& [j, k] : rec.order) {
    auto it = corpus.series.find({j, k});
    if (it == corpus.series.end())
      throw CorpusIncompleteError(Weight::fundamental(j) + Weight::fundamental(k), "series missing");
    MultiPoly sum;
    for (const auto& [m, n] : it->second.terms()) sum += chi_of(m) * mpz_class(n * eigenvalue(m));
    sum -= rec.op.b(j) * MultiPoly::variable(k);
    sum -= rec.op.b(k) * MultiPoly::variable(j);
    MultiPoly a;
    for (const auto& [mono, c] : sum.terms()) {
      if (!mpz_divisible_ui_p(c.get_mpz_t(), 2))
        throw IntegralityError("a_" + std::to_string(j) + std::to_string(k) + ": odd coefficient on z^" + mono.label());
      a.add_term(mono, c / 2);
    }
    rec.op.set_a(j, k, std::move(a));
  }
  return rec;
}

/// The symmetric 7x7 array a_jk.
inline std::array<std::array<MultiPoly, kRank>, kRank> build_a(const QuadraticCorpus& corpus) {
  auto rec = build_delta1(corpus);
  std::array<std::array<MultiPoly, kRank>, kRank> a;
  for (int j = 1; j <= kRank; ++j)
    for (int k = 1; k <= kRank; ++k) a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = rec.op.a(j, k);
  return a;
}

struct OperatorDiscrepancy {
  ErratumEntry entry;
  bool printed_eigen_ok = false;
  bool reconstructed_eigen_ok = false;
};

/// Differences between the assembled coefficients and a published table.
/// Each one is judged by the eigen-identity on chi_{lambda_j + lambda_k}
/// with either candidate coefficient substituted into the operator.
inline std::vector<OperatorDiscrepancy> compare_with_printed(const Delta1Operator& op,
                                                             const PrintedOperatorTable& printed,
                                                             const QuadraticCorpus& corpus) {
  std::vector<OperatorDiscrepancy> out;
  for (int j = 1; j <= kRank; ++j)
    for (int k = j; k <= kRank; ++k) {
      auto it = printed.a.find({j, k});
      if (it == printed.a.end()) throw FixtureError("printed table lacks a_" + std::to_string(j) + std::to_string(k));
      if (it->second == op.a(j, k)) continue;
      Weight top = Weight::fundamental(j) + Weight::fundamental(k);
      auto chi_it = corpus.second_order_chars.find(top);
      if (chi_it == corpus.second_order_chars.end()) throw CorpusIncompleteError(top, "needed to judge a discrepancy");
      const MultiPoly& chi = chi_it->second;
      mpz_class eps(static_cast<long>(eigenvalue(top)));
      Delta1Operator alt = op;
      alt.set_a(j, k, it->second);
      OperatorDiscrepancy d;
      d.entry.pair = {j, k};
      d.entry.printed = it->second;
      d.entry.reconstructed = op.a(j, k);
      d.reconstructed_eigen_ok = apply_delta1(op, chi) == chi * eps;
      d.printed_eigen_ok = apply_delta1(alt, chi) == chi * eps;
      d.entry.verdict = (d.printed_eigen_ok && !d.reconstructed_eigen_ok) ? Verdict::PrintedWins : Verdict::ReconstructedWins;
      out.push_back(std::move(d));
    }
  return out;
}

}  // namespace charkit

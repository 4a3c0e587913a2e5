#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "charkit/lie_core.hpp"

namespace charkit {

/// Multiset of irreducible constituents: highest weight -> multiplicity (> 0).
class CGSeries {
 public:
  using Terms = std::map<Weight, mpz_class>;

  void add(const Weight& w, const mpz_class& mult) {
    if (mult == 0) return;
    auto& slot = terms_[w];
    slot += mult;
    if (slot == 0) terms_.erase(w);
  }

  mpz_class multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// sum_mu N_mu dim R_mu.
  mpz_class dimension() const {
    mpz_class s = 0;
    for (const auto& [w, n] : terms_) s += n * weyl_dim(w);
    return s;
  }

  bool all_positive() const {
    for (const auto& [w, n] : terms_)
      if (n <= 0) return false;
    return true;
  }

  friend bool operator==(const CGSeries& a, const CGSeries& b) { return a.terms_ == b.terms_; }

  /// "0000002:1 1000000:1 ..." in descending weight order.
  std::string to_line() const {
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += ' ';
      s += it->first.label() + ':' + it->second.get_str();
    }
    return s;
  }

 private:
  Terms terms_;
};

/// dim of prod_i R(lambda_i)^{n_i}.
inline mpz_class monomial_dimension(const Weight& n) {
  mpz_class d = 1;
  for (int i = 0; i < kRank; ++i) {
    mpz_class f = weyl_dim(Weight::fundamental(i + 1));
    for (int e = 0; e < n[i]; ++e) d *= f;
  }
  return d;
}

}  // namespace charkit

#pragma once

// A second route to characters that never touches Delta1: weight
// multiplicities from Freudenthal's recursion, and numerical evaluation of
// the Weyl-invariant exponential sums on a maximal torus.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "charkit/lie_core.hpp"
#include "charkit/polyring.hpp"

namespace charkit {

/// The oracle declines representations above its dimension ceiling.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0;
    for (int v : w.m) h = h * 1000003u + static_cast<std::size_t>(v + 512);
    return h;
  }
};

/// Simple reflection s_i (0-based) in the fundamental basis: mu - mu_i alpha_i.
inline Weight reflect(const Weight& mu, int i) {
  const auto& A = cartan_matrix().A;
  Weight out = mu;
  int k = mu[i];
  for (int j = 0; j < kRank; ++j) out[j] -= k * A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

/// The dominant weight in the Weyl orbit of mu.
inline Weight dominant_representative(Weight mu) {
  for (;;) {
    int i = 0;
    while (i < kRank && mu[i] >= 0) ++i;
    if (i == kRank) return mu;
    mu = reflect(mu, i);
  }
}

/// W mu by closure under the simple reflections.
inline std::vector<Weight> weyl_orbit(const Weight& mu) {
  std::unordered_set<Weight, WeightHash> seen{mu};
  std::vector<Weight> out{mu};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int i = 0; i < kRank; ++i) {
      if (out[head][i] == 0) continue;
      Weight next = reflect(out[head], i);
      if (seen.insert(next).second) out.push_back(next);
    }
  return out;
}

struct WeightSystem {
  Weight highest;
  /// Multiplicities of the dominant weights.
  std::map<Weight, mpz_class> mults;
  /// |W mu| for each dominant weight.
  std::map<Weight, std::size_t> orbit_sizes;

  /// sum_mu mult(mu) |W mu|, which must equal dim R_highest.
  mpz_class total() const {
    mpz_class s = 0;
    for (const auto& [w, n] : mults) s += n * static_cast<unsigned long>(orbit_sizes.at(w));
    return s;
  }

  /// Every weight of the representation with its multiplicity.
  std::vector<std::pair<Weight, mpz_class>> all_weights() const {
    std::vector<std::pair<Weight, mpz_class>> out;
    for (const auto& [w, n] : mults)
      for (const Weight& x : weyl_orbit(w)) out.emplace_back(x, n);
    return out;
  }
};

/// Freudenthal's formula
///   ((m+rho)^2 - (mu+rho)^2) mult(mu) = 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) mult(mu + k alpha),
/// evaluated on dominant weights only by folding mu + k alpha back to its
/// dominant representative.
inline WeightSystem freudenthal(const Weight& m, const mpz_class& ceiling = 1000000) {
  if (!m.is_dominant()) throw DomainError("freudenthal: weight " + m.label() + " is not dominant");
  mpz_class dim = weyl_dim(m);
  if (dim > ceiling)
    throw OracleRefusal("freudenthal: dim R_" + m.label() + " = " + dim.get_str() + " exceeds the ceiling " +
                        ceiling.get_str());
  const auto& cd = cartan_matrix();
  Weight rho;
  for (int i = 0; i < kRank; ++i) rho[i] = 1;
  const std::int64_t top = cd.twice_inner(m + rho, m + rho);

  WeightSystem ws;
  ws.highest = m;
  for (const Weight& mu : dominant_weights_below(m)) {
    if (mu == m) {
      ws.mults.emplace(mu, 1);
      continue;
    }
    mpz_class sum = 0;
    for (const auto& alpha : cd.positive_roots) {
      Weight step = cd.to_weight(alpha);
      Weight nu = mu;
      for (;;) {
        nu = nu + step;
        auto it = ws.mults.find(dominant_representative(nu));
        if (it == ws.mults.end()) break;
        long pairing = 0;
        for (int i = 0; i < kRank; ++i) pairing += static_cast<long>(alpha[i]) * nu[i];
        sum += it->second * pairing;
      }
    }
    std::int64_t gap2 = top - cd.twice_inner(mu + rho, mu + rho);
    // mult = 2 sum / gap = 4 sum / (2 gap)
    mpz_class num = 4 * sum;
    if (gap2 <= 0 || !mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(gap2)))
      throw std::logic_error("freudenthal: non-integral multiplicity at " + mu.label());
    mpz_class mult = num / static_cast<long>(gap2);
    if (mult != 0) ws.mults.emplace(mu, mult);
  }
  for (const auto& [w, n] : ws.mults) ws.orbit_sizes.emplace(w, weyl_orbit(w).size());
  return ws;
}

namespace detail {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      c_ += (sum_ - t) + x;
    else
      c_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

/// Real part of sum_mu mult e^{2i(mu,q)}; the imaginary part cancels because
/// every representation of E7 is self-conjugate.
inline double torus_character(const std::vector<std::pair<Weight, double>>& weights,
                              const std::array<double, kRank>& pairing_row) {
  CompensatedSum s;
  for (const auto& [w, n] : weights) {
    double phase = 0.0;
    for (int i = 0; i < kRank; ++i) phase += w[i] * pairing_row[static_cast<std::size_t>(i)];
    s.add(n * std::cos(2.0 * phase));
  }
  return s.value();
}

inline std::vector<std::pair<Weight, double>> weights_as_double(const WeightSystem& ws) {
  std::vector<std::pair<Weight, double>> out;
  for (auto& [w, n] : ws.all_weights()) out.emplace_back(w, n.get_d());
  return out;
}

inline double eval_double(const MultiPoly& p, const std::array<double, kRank>& z) {
  CompensatedSum s;
  for (const auto& [mono, c] : p.terms()) {
    double t = c.get_d();
    for (int i = 0; i < kRank; ++i) t *= std::pow(z[static_cast<std::size_t>(i)], mono[i]);
    s.add(t);
  }
  return s.value();
}

}  // namespace detail

struct TorusReport {
  double max_deviation = 0.0;
  int trials = 0;
};

/// Samples q = sum_j t_j omega_j with t_j uniform in (0, pi/20), where omega_j
/// is dual to alpha_j, so that 0 < (alpha, q) < 17 pi / 20 for every positive
/// root: well inside the alcove. Then (mu, q) = sum_ij mu_i Ainv_ij t_j.
/// Returns the largest |chi(z(q)) - sum_{mu in R_m} e^{2i(mu,q)}|.
inline TorusReport torus_check(const Weight& m, const MultiPoly& chi, int trials = 20, std::uint64_t seed = 12345) {
  const auto& cd = cartan_matrix();
  std::array<std::vector<std::pair<Weight, double>>, kRank> fundamentals;
  for (int k = 0; k < kRank; ++k)
    fundamentals[static_cast<std::size_t>(k)] = detail::weights_as_double(freudenthal(Weight::fundamental(k + 1)));
  auto target = detail::weights_as_double(freudenthal(m));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, std::numbers::pi / 20.0);
  TorusReport r;
  r.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    std::array<double, kRank> t{};
    for (auto& x : t) {
      do x = dist(rng);
      while (x == 0.0);
    }
    std::array<double, kRank> row{};
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j)
        row[static_cast<std::size_t>(i)] += cd.Ainv2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * 0.5 * t[static_cast<std::size_t>(j)];
    std::array<double, kRank> z{};
    for (int k = 0; k < kRank; ++k)
      z[static_cast<std::size_t>(k)] = detail::torus_character(fundamentals[static_cast<std::size_t>(k)], row);
    double direct = detail::torus_character(target, row);
    double dev = std::fabs(detail::eval_double(chi, z) - direct);
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  return r;
}

}  // namespace charkit

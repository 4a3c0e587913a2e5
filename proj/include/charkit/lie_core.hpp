#pragma once

// Root and weight data for the exceptional Lie algebra E7.
//
// Conventions (Bourbaki labelling, alpha_2 is the branch node):
//   - Weights are integer 7-vectors in the fundamental-weight basis.
//   - Root-lattice elements are integer 7-vectors in the simple-root basis.
//   - The bilinear form is normalised so that (alpha_i, alpha_i) = 2, hence
//     (lambda_i, lambda_j) = Ainv_ij and (alpha_i, lambda_j) = delta_ij.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace charkit {

inline constexpr int kRank = 7;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Highest weight sum_i m_i lambda_i, stored as the quantum numbers (m_1..m_7).
struct Weight {
  std::array<int, kRank> m{};

  constexpr int& operator[](int i) { return m[static_cast<std::size_t>(i)]; }
  constexpr int operator[](int i) const { return m[static_cast<std::size_t>(i)]; }

  constexpr bool is_dominant() const {
    return std::all_of(m.begin(), m.end(), [](int v) { return v >= 0; });
  }
  constexpr bool is_zero() const {
    return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
  }
  constexpr int level() const {
    int s = 0;
    for (int v : m) s += v;
    return s;
  }

  /// lambda_i for 1 <= i <= 7.
  static constexpr Weight fundamental(int i) {
    Weight w;
    w.m[static_cast<std::size_t>(i - 1)] = 1;
    return w;
  }

  friend constexpr Weight operator+(Weight a, const Weight& b) {
    for (int i = 0; i < kRank; ++i) a[i] += b[i];
    return a;
  }
  friend constexpr Weight operator-(Weight a, const Weight& b) {
    for (int i = 0; i < kRank; ++i) a[i] -= b[i];
    return a;
  }
  friend constexpr Weight operator*(int k, Weight a) {
    for (int i = 0; i < kRank; ++i) a[i] *= k;
    return a;
  }
  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  /// Compact label: "0000002" when every coordinate is a single digit,
  /// otherwise the comma form "0,0,0,0,0,0,12".
  std::string label() const {
    bool digits = std::all_of(m.begin(), m.end(), [](int v) { return v >= 0 && v <= 9; });
    std::string s;
    for (int i = 0; i < kRank; ++i) {
      if (!digits && i > 0) s += ',';
      s += std::to_string(m[static_cast<std::size_t>(i)]);
    }
    return s;
  }

  /// Accepts "0000002" or "0,0,0,0,0,0,2"; coordinates must be nonnegative.
  static Weight parse(std::string_view text) {
    Weight w;
    auto bad = [&] { return DomainError("malformed weight '" + std::string(text) + "'"); };
    if (text.find(',') == std::string_view::npos) {
      if (text.size() != kRank) throw bad();
      for (int i = 0; i < kRank; ++i) {
        char c = text[static_cast<std::size_t>(i)];
        if (c < '0' || c > '9') throw bad();
        w[i] = c - '0';
      }
      return w;
    }
    int idx = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto field = text.substr(pos, next - pos);
      if (field.empty() || idx >= kRank) throw bad();
      int v = 0;
      for (char c : field) {
        if (c < '0' || c > '9') throw bad();
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw bad();
      }
      w[idx++] = v;
      pos = next + 1;
    }
    if (idx != kRank) throw bad();
    return w;
  }
};

/// Element sum_i c_i alpha_i of the root lattice.
struct RootVector {
  std::array<int, kRank> c{};

  constexpr int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  constexpr int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  friend constexpr RootVector operator+(RootVector a, const RootVector& b) {
    for (int i = 0; i < kRank; ++i) a[i] += b[i];
    return a;
  }
  friend constexpr RootVector operator-(RootVector a, const RootVector& b) {
    for (int i = 0; i < kRank; ++i) a[i] -= b[i];
    return a;
  }
  friend constexpr auto operator<=>(const RootVector&, const RootVector&) = default;

  constexpr bool is_nonnegative() const {
    return std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
  }
};

constexpr int height_of(const RootVector& delta) {
  int h = 0;
  for (int v : delta.c) h += v;
  return h;
}

using IntMatrix = std::array<std::array<int, kRank>, kRank>;
using RatMatrix = std::array<std::array<mpq_class, kRank>, kRank>;

struct CartanData {
  IntMatrix A{};
  RatMatrix Ainv{};
  /// 2 * Ainv, which is integral for E7.
  IntMatrix Ainv2{};
  std::vector<RootVector> positive_roots;
  std::array<mpq_class, kRank> rho_alpha{};

  /// Simple root alpha_i expressed in the weight basis (row i of A).
  Weight simple_root_weight(int i) const {
    Weight w;
    for (int j = 0; j < kRank; ++j) w[j] = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return w;
  }

  /// Root-lattice vector converted to the weight basis (multiplication by A).
  Weight to_weight(const RootVector& r) const {
    Weight w;
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j)
        w[i] += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * r[j];
    return w;
  }

  /// 2 (x, y) for weights in the fundamental basis; always an integer.
  std::int64_t twice_inner(const Weight& x, const Weight& y) const {
    std::int64_t s = 0;
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j)
        s += static_cast<std::int64_t>(x[i]) * Ainv2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y[j];
    return s;
  }

  /// Rational value of (rho, rho).
  mpq_class rho_norm() const {
    mpq_class s = 0;
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j)
        s += rho_alpha[static_cast<std::size_t>(i)] * A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             rho_alpha[static_cast<std::size_t>(j)];
    return s;
  }
};

namespace detail {

inline CartanData build_cartan() {
  CartanData d;
  // (alpha_i, alpha_i) = 2; alpha_1-alpha_3, alpha_2-alpha_4, and the chain alpha_3..alpha_7.
  for (int i = 0; i < kRank; ++i) d.A[i][i] = 2;
  auto link = [&](int i, int j) { d.A[i - 1][j - 1] = d.A[j - 1][i - 1] = -1; };
  link(1, 3);
  link(2, 4);
  for (int i = 3; i <= 6; ++i) link(i, i + 1);

  // Exact inverse by Gauss-Jordan over the rationals.
  RatMatrix a, inv;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      a[i][j] = d.A[i][j];
      inv[i][j] = (i == j) ? 1 : 0;
    }
  for (int col = 0; col < kRank; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class p = a[col][col];
    for (int j = 0; j < kRank; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < kRank; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (int j = 0; j < kRank; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  d.Ainv = inv;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      mpq_class twice = 2 * inv[i][j];
      if (twice.get_den() != 1) throw std::logic_error("2*Ainv is not integral");
      d.Ainv2[i][j] = static_cast<int>(twice.get_num().get_si());
    }

  // Positive roots by closure: beta + alpha_i is a root iff (beta, alpha_i) = -1
  // for a positive root beta != alpha_i (simply laced).
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < kRank; ++i) {
    RootVector r;
    r[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& r : frontier) {
      Weight w = d.to_weight(r);  // w_i = (r, alpha_i)
      for (int i = 0; i < kRank; ++i) {
        if (w[i] != -1) continue;
        RootVector s = r;
        s[i] += 1;
        if (seen.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  d.positive_roots.assign(seen.begin(), seen.end());
  std::stable_sort(d.positive_roots.begin(), d.positive_roots.end(),
                   [](const RootVector& x, const RootVector& y) { return height_of(x) < height_of(y); });

  for (const auto& r : d.positive_roots)
    for (int i = 0; i < kRank; ++i) d.rho_alpha[i] += mpq_class(r[i], 2);
  return d;
}

}  // namespace detail

/// Immutable process-wide Cartan data.
inline const CartanData& cartan_matrix() {
  static const CartanData data = detail::build_cartan();
  return data;
}

/// Weyl dimension formula: prod over positive roots of (alpha, m+rho)/(alpha, rho).
inline mpz_class weyl_dim(const Weight& m) {
  if (!m.is_dominant()) throw DomainError("weyl_dim: weight " + m.label() + " is not dominant");
  const auto& cd = cartan_matrix();
  mpz_class num = 1, den = 1;
  for (const auto& r : cd.positive_roots) {
    long s = 0;
    for (int i = 0; i < kRank; ++i) s += static_cast<long>(r[i]) * (m[i] + 1);
    num *= s;
    den *= height_of(r);
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

/// eps_m(kappa) = 2 sum_jk Ainv_jk m_j m_k + 4 kappa sum_jk Ainv_jk m_j.
inline std::int64_t eigenvalue(const Weight& m, int kappa = 1) {
  if (!m.is_dominant()) throw DomainError("eigenvalue: weight " + m.label() + " is not dominant");
  const auto& cd = cartan_matrix();
  std::int64_t quad = 0, lin = 0;
  for (int j = 0; j < kRank; ++j)
    for (int k = 0; k < kRank; ++k) {
      std::int64_t a2 = cd.Ainv2[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      quad += a2 * m[j] * m[k];
      lin += a2 * m[j];
    }
  return quad + 2 * static_cast<std::int64_t>(kappa) * lin;
}

/// Ainv (m - mu) when it is a nonnegative integer vector, i.e. m - mu lies in
/// the positive root cone of the root lattice; std::nullopt otherwise.
inline std::optional<RootVector> weight_diff_in_roots(const Weight& m, const Weight& mu) {
  const auto& cd = cartan_matrix();
  Weight d = m - mu;
  RootVector out;
  for (int i = 0; i < kRank; ++i) {
    std::int64_t twice = 0;
    for (int j = 0; j < kRank; ++j) twice += static_cast<std::int64_t>(cd.Ainv2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * d[j];
    if (twice < 0 || twice % 2 != 0) return std::nullopt;
    out[i] = static_cast<int>(twice / 2);
  }
  return out;
}

/// Sum of the simple-root coordinates of Ainv x, doubled to stay integral.
/// Strictly increases along the dominance order.
inline std::int64_t twice_root_height(const Weight& x) {
  const auto& cd = cartan_matrix();
  std::int64_t s = 0;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) s += static_cast<std::int64_t>(cd.Ainv2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * x[j];
  return s;
}

/// All dominant mu with m - mu in the positive root cone, sorted by ascending
/// height of m - mu, ties by mu in descending lexicographic order.
///
/// Bounded search over c = Ainv (m - mu) with 0 <= c_i <= (Ainv m)_i, visiting
/// the nodes along the Dynkin diagram (1,3,4,2,5,6,7) so that each row
/// mu_i = m_i - (A c)_i can be tested as soon as its neighbours are fixed.
inline std::vector<Weight> dominant_weights_below(const Weight& m) {
  if (!m.is_dominant()) throw DomainError("dominant_weights_below: weight " + m.label() + " is not dominant");
  const auto& cd = cartan_matrix();
  std::array<int, kRank> bound{};
  for (int i = 0; i < kRank; ++i) {
    std::int64_t twice = 0;
    for (int j = 0; j < kRank; ++j) twice += static_cast<std::int64_t>(cd.Ainv2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * m[j];
    bound[static_cast<std::size_t>(i)] = static_cast<int>(twice / 2);  // floor; c_i never exceeds it
  }
  // Visiting order (0-based) and the rows that become fully determined after each step.
  static constexpr std::array<int, kRank> order{0, 2, 3, 1, 4, 5, 6};
  static const std::array<std::vector<int>, kRank> rows_ready = [] {
    std::array<std::vector<int>, kRank> ready;
    const auto& A = cartan_matrix().A;
    std::array<int, kRank> pos{};
    for (int s = 0; s < kRank; ++s) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])] = s;
    for (int row = 0; row < kRank; ++row) {
      int last = 0;
      for (int j = 0; j < kRank; ++j)
        if (A[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] != 0) last = std::max(last, pos[static_cast<std::size_t>(j)]);
      ready[static_cast<std::size_t>(last)].push_back(row);
    }
    return ready;
  }();

  struct Found {
    int height;
    Weight mu;
  };
  std::vector<Found> found;
  RootVector c;
  auto rec = [&](auto&& self, int step) -> void {
    if (step == kRank) {
      Found f{height_of(c), m - cd.to_weight(c)};
      found.push_back(f);
      return;
    }
    int node = order[static_cast<std::size_t>(step)];
    for (int v = 0; v <= bound[static_cast<std::size_t>(node)]; ++v) {
      c[node] = v;
      bool ok = true;
      for (int row : rows_ready[static_cast<std::size_t>(step)]) {
        int val = m[row];
        for (int j = 0; j < kRank; ++j) val -= cd.A[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] * c[j];
        if (val < 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, step + 1);
    }
    c[node] = 0;
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.mu > b.mu;
  });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(f.mu);
  return out;
}

}  // namespace charkit

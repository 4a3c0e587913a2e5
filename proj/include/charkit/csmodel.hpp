#pragma once

// The kappa = 1 Calogero-Sutherland operator written in the fundamental
// characters:
//
//   Delta1 = sum_{j,k} a_jk(z) d_j d_k + sum_j b_j(z) d_j,   a_jk = a_kj,
//
// where the first sum runs over all 49 ordered pairs.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charkit/lie_core.hpp"
#include "charkit/polyring.hpp"

namespace charkit {

/// Raised when an operator coefficient a_jk is needed before it is known.
class IncompleteOperatorError : public std::runtime_error {
 public:
  IncompleteOperatorError(int j, int k)
      : std::runtime_error("operator coefficient a_" + std::to_string(j) + std::to_string(k) + " is not available"),
        j_(j), k_(k) {}
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int j_, k_;
};

/// An output monomial of Delta1 z^n that is not n minus an element of the
/// positive root cone. Signals a wrong operator coefficient.
class StructuralViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// b_j = 2 (Ainv_jj + 2 sum_k Ainv_kj) z_j.
inline std::array<MultiPoly, kRank> build_b() {
  const auto& cd = cartan_matrix();
  std::array<MultiPoly, kRank> b;
  for (int j = 0; j < kRank; ++j) {
    std::int64_t col = 0;
    for (int k = 0; k < kRank; ++k) col += cd.Ainv2[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    // 2 (Ainv_jj + 2 col) with Ainv = Ainv2 / 2.
    std::int64_t coeff = cd.Ainv2[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] + 2 * col;
    b[static_cast<std::size_t>(j)] = MultiPoly::monomial(Monomial::fundamental(j + 1), mpz_class(static_cast<long>(coeff)));
  }
  return b;
}

class Delta1Operator {
 public:
  Delta1Operator() : b_(build_b()) {}

  bool has_a(int j, int k) const { return a_[index(j, k)].has_value(); }
  bool complete() const {
    for (const auto& e : a_)
      if (!e) return false;
    return true;
  }

  /// a_jk for 1 <= j,k <= 7.
  const MultiPoly& a(int j, int k) const {
    const auto& e = a_[index(j, k)];
    if (!e) throw IncompleteOperatorError(std::min(j, k), std::max(j, k));
    return *e;
  }
  void set_a(int j, int k, MultiPoly p) { a_[index(j, k)] = std::move(p); }

  const MultiPoly& b(int j) const { return b_[static_cast<std::size_t>(j - 1)]; }

 private:
  static std::size_t index(int j, int k) {
    if (j < 1 || j > kRank || k < 1 || k > kRank) throw DomainError("operator index out of range");
    if (j > k) std::swap(j, k);
    // Row-major upper triangle.
    int r = j - 1, c = k - 1;
    return static_cast<std::size_t>(r * kRank - r * (r - 1) / 2 + (c - r));
  }

  std::array<std::optional<MultiPoly>, kRank*(kRank + 1) / 2> a_;
  std::array<MultiPoly, kRank> b_;
};

/// Delta1 p, summing the second-order part over all ordered pairs (j, k).
inline MultiPoly apply_delta1(const Delta1Operator& op, const MultiPoly& p) {
  MultiPoly out;
  std::array<MultiPoly, kRank> first;
  for (int j = 1; j <= kRank; ++j) first[static_cast<std::size_t>(j - 1)] = partial(p, j);
  for (int j = 1; j <= kRank; ++j) {
    const auto& dj = first[static_cast<std::size_t>(j - 1)];
    if (dj.is_zero()) continue;
    out += op.b(j) * dj;
    for (int k = 1; k <= kRank; ++k) {
      MultiPoly djk = partial(dj, k);
      if (djk.is_zero()) continue;
      out += op.a(j, k) * djk;
    }
  }
  return out;
}

struct ImageTerm {
  RootVector beta;
  mpz_class coeff;
};

/// Delta1 z^n = sum_beta S_{beta,n} z^{n - beta}, returned as (beta, S) pairs
/// with beta in the positive root cone, sorted by ascending height of beta.
/// The beta = 0 entry carries eps_n(1).
inline std::vector<ImageTerm> monomial_image(const Delta1Operator& op, const Monomial& n) {
  MultiPoly img = apply_delta1(op, MultiPoly::monomial(n));
  std::vector<ImageTerm> out;
  out.reserve(img.size());
  for (const auto& [p, s] : img.terms()) {
    auto beta = weight_diff_in_roots(n, p);
    if (!beta)
      throw StructuralViolation("Delta1 z^" + n.label() + " produces z^" + p.label() +
                                ", which is not below it in the root order");
    out.push_back({*beta, s});
  }
  std::stable_sort(out.begin(), out.end(), [](const ImageTerm& x, const ImageTerm& y) {
    int hx = height_of(x.beta), hy = height_of(y.beta);
    if (hx != hy) return hx < hy;
    return x.beta < y.beta;
  });
  return out;
}

}  // namespace charkit

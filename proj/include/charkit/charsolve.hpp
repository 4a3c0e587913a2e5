#pragma once

// Irreducible characters chi_m as polynomials in z1..z7, obtained as the
// eigenpolynomials of Delta1 with leading monomial z^m.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charkit/csmodel.hpp"
#include "charkit/fixtures.hpp"
#include "charkit/lie_core.hpp"
#include "charkit/polyring.hpp"

namespace charkit {

class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Provenance { Method1, Method2, Fixture };

inline std::string provenance_text(Provenance p) {
  switch (p) {
    case Provenance::Method1: return "method-1";
    case Provenance::Method2: return "method-2";
    case Provenance::Fixture: return "fixture";
  }
  return "?";
}

/// Point (dim R(lambda_1), ..., dim R(lambda_7)).
inline const std::array<mpz_class, kRank>& fundamental_dimensions() {
  static const std::array<mpz_class, kRank> dims = [] {
    std::array<mpz_class, kRank> d;
    for (int i = 0; i < kRank; ++i) d[static_cast<std::size_t>(i)] = weyl_dim(Weight::fundamental(i + 1));
    return d;
  }();
  return dims;
}

struct VerifyReport {
  Weight weight;
  bool eigen_ok = false;
  bool dimension_ok = false;
  bool leading_ok = false;
  mpz_class dimension;           // chi evaluated at the fundamental dimensions
  mpz_class expected_dimension;  // Weyl dimension
  std::vector<std::string> failures;

  bool pass() const { return eigen_ok && dimension_ok && leading_ok; }
};

/// Checks Delta1 chi = eps_m chi exactly, chi(dims) = dim R_m and a unit
/// coefficient on z^m.
inline VerifyReport verify_character(const Delta1Operator& op, const Weight& m, const MultiPoly& chi) {
  VerifyReport r;
  r.weight = m;
  mpz_class eps(static_cast<long>(eigenvalue(m)));
  MultiPoly lhs = apply_delta1(op, chi);
  r.eigen_ok = (lhs == chi * eps);
  if (!r.eigen_ok) r.failures.push_back("eigen-identity: Delta1 chi != " + eps.get_str() + " chi");
  r.expected_dimension = weyl_dim(m);
  r.dimension = eval_integer(chi, fundamental_dimensions());
  r.dimension_ok = (r.dimension == r.expected_dimension);
  if (!r.dimension_ok)
    r.failures.push_back("dimension: " + r.dimension.get_str() + " != " + r.expected_dimension.get_str());
  r.leading_ok = (chi.coefficient_of(m) == 1);
  if (!r.leading_ok) r.failures.push_back("leading coefficient of z^" + m.label() + " is " + chi.coefficient_of(m).get_str());
  return r;
}

/// Memoised character solver bound to one operator. The operator must
/// outlive the table. Reads are shared, insertions exclusive.
class CharacterTable {
 public:
  using Image = std::vector<std::pair<Monomial, mpz_class>>;

  explicit CharacterTable(const Delta1Operator& op) : op_(&op) {}

  const Delta1Operator& op() const { return *op_; }

  /// Delta1 z^n as (output monomial, coefficient) pairs, memoised.
  const Image& image(const Monomial& n) {
    {
      std::shared_lock lock(image_mutex_);
      auto it = images_.find(n);
      if (it != images_.end()) return it->second;
    }
    Image img;
    for (auto& t : monomial_image(*op_, n)) img.emplace_back(n - cartan_matrix().to_weight(t.beta), std::move(t.coeff));
    std::unique_lock lock(image_mutex_);
    return images_.try_emplace(n, std::move(img)).first->second;
  }

  /// Triangular recursion over the dominant weights below m, highest first:
  /// C_0 = 1 and C_lambda = [sum_{beta != 0} S_{beta, m-lambda+beta} C_{lambda-beta}] / (eps_m - eps_{m-lambda}).
  MultiPoly character_m1(const Weight& m) {
    if (!m.is_dominant()) throw DomainError("character_m1: weight " + m.label() + " is not dominant");
    if (m.is_zero()) return MultiPoly(mpz_class(1));
    const auto support = dominant_weights_below(m);
    std::map<Weight, std::size_t> position;
    for (std::size_t i = 0; i < support.size(); ++i) position.emplace(support[i], i);
    std::vector<mpq_class> acc(support.size());
    const std::int64_t eps_m = eigenvalue(m);
    RationalPoly chi;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const Weight& mu = support[i];
      mpq_class coeff;
      if (i == 0) {
        coeff = 1;
      } else {
        std::int64_t gap = eps_m - eigenvalue(mu);
        if (gap == 0)
          throw InternalInvariantError("character_m1: zero eigenvalue gap between " + m.label() + " and " + mu.label());
        coeff = acc[i] / mpq_class(static_cast<long>(gap));
      }
      if (coeff == 0) continue;
      chi.add_term(mu, coeff);
      for (const auto& [p, s] : image(mu)) {
        if (p == mu) continue;
        auto it = position.find(p);
        if (it == position.end())
          throw StructuralViolation("character_m1: z^" + p.label() + " escapes the support of chi_" + m.label());
        acc[it->second] += coeff * s;
      }
    }
    MultiPoly out;
    if (!to_integer_poly(chi, out))
      throw IntegralityError("character_m1: non-integer coefficient in chi_" + m.label());
    return out;
  }

  /// prod_{mu < m} (Delta1 - eps_mu) z^m divided by prod_{mu < m} (eps_m - eps_mu),
  /// mu running over the dominant weights strictly below m.
  MultiPoly character_m2(const Weight& m) {
    if (!m.is_dominant()) throw DomainError("character_m2: weight " + m.label() + " is not dominant");
    if (m.is_zero()) return MultiPoly(mpz_class(1));
    const auto support = dominant_weights_below(m);
    const std::int64_t eps_m = eigenvalue(m);
    MultiPoly p = MultiPoly::monomial(m);
    mpz_class scale = 1;
    for (std::size_t i = 1; i < support.size(); ++i) {
      std::int64_t eps_mu = eigenvalue(support[i]);
      if (eps_m == eps_mu)
        throw InternalInvariantError("character_m2: zero eigenvalue gap between " + m.label() + " and " +
                                     support[i].label());
      MultiPoly next;
      mpz_class shift(static_cast<long>(eps_mu));
      for (const auto& [n, c] : p.terms()) {
        for (const auto& [q, s] : image(n)) next.add_term(q, c * s);
        next.add_term(n, -c * shift);
      }
      p = std::move(next);
      scale *= static_cast<long>(eps_m - eps_mu);
    }
    MultiPoly out;
    for (const auto& [n, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), scale.get_mpz_t()))
        throw IntegralityError("character_m2: coefficient of z^" + n.label() + " not divisible by the normalisation");
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
      out.add_term(n, q);
    }
    return out;
  }

  /// Cached character, computed with method 1 on first use.
  const MultiPoly& character(const Weight& m) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(m);
      if (it != cache_.end()) return it->second;
    }
    MultiPoly chi = character_m1(m);
    std::unique_lock lock(mutex_);
    provenance_.try_emplace(m, Provenance::Method1);
    return cache_.try_emplace(m, std::move(chi)).first->second;
  }

  void insert(const Weight& m, MultiPoly chi, Provenance prov) {
    std::unique_lock lock(mutex_);
    cache_.insert_or_assign(m, std::move(chi));
    provenance_.insert_or_assign(m, prov);
  }

  bool contains(const Weight& m) const {
    std::shared_lock lock(mutex_);
    return cache_.count(m) != 0;
  }

  std::optional<Provenance> provenance(const Weight& m) const {
    std::shared_lock lock(mutex_);
    auto it = provenance_.find(m);
    if (it == provenance_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

  /// Identifies the operator a cache file was produced with.
  std::string fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto mix = [&](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
    };
    for (int j = 1; j <= kRank; ++j)
      for (int k = j; k <= kRank; ++k) mix(op_->has_a(j, k) ? to_string(op_->a(j, k)) + ";" : "?;");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  /// Writes computed (non-fixture) characters in the 'chi' fixture format.
  void save(const std::filesystem::path& file) const {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cannot write character cache " + tmp.string());
      out << "# operator " << fingerprint() << "\n";
      std::shared_lock lock(mutex_);
      for (const auto& [w, chi] : cache_) {
        if (provenance_.at(w) == Provenance::Fixture) continue;
        out << "chi " << w.label() << " = " << to_string(chi) << "\n";
      }
    }
    std::filesystem::rename(tmp, file);
  }

  /// Loads a cache file written by save(); returns the number of entries
  /// loaded, or 0 if the file is absent or belongs to another operator.
  std::size_t load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return 0;
    std::string first;
    std::getline(in, first);
    if (first != "# operator " + fingerprint()) return 0;
    in.close();
    auto corpus = load_character_corpus(file);
    std::unique_lock lock(mutex_);
    std::size_t n = 0;
    for (auto& [w, chi] : corpus.items) {
      if (cache_.count(w)) continue;
      cache_.emplace(w, std::move(chi));
      provenance_.emplace(w, Provenance::Method1);
      ++n;
    }
    return n;
  }

 private:
  const Delta1Operator* op_;
  mutable std::shared_mutex mutex_;
  mutable std::shared_mutex image_mutex_;
  std::map<Weight, MultiPoly> cache_;
  std::map<Weight, Provenance> provenance_;
  std::map<Monomial, Image> images_;
};

}  // namespace charkit

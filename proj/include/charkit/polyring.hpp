#pragma once

// Sparse polynomials in the seven fundamental characters z1..z7 with exact
// coefficients (mpz_class for characters, mpq_class for intermediates).

#include <cctype>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "charkit/lie_core.hpp"

namespace charkit {

/// Exponent vector of z^n = prod z_i^{n_i}. A monomial is identified with the
/// dominant weight whose coordinates are its exponents.
using Monomial = Weight;

inline int total_degree(const Monomial& n) { return n.level(); }

/// Canonical term order: higher total degree first, then lexicographically
/// smaller exponent vectors first (graded reverse lexicographic with
/// z7 > z6 > ... > z1). The constant term is always last.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.level(), db = b.level();
    if (da != db) return da > db;
    return a.m < b.m;
  }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Coeff>
class Poly {
 public:
  using Terms = std::map<Monomial, Coeff, MonomialOrder>;

  Poly() = default;
  explicit Poly(const Coeff& constant) { add_term(Monomial{}, constant); }

  static Poly monomial(const Monomial& n, const Coeff& c = Coeff(1)) {
    Poly p;
    p.add_term(n, c);
    return p;
  }
  /// z_i for 1 <= i <= 7.
  static Poly variable(int i) { return monomial(Monomial::fundamental(i)); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& n, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coefficient_of(const Monomial& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Poly& operator+=(const Poly& q) {
    for (const auto& [n, c] : q.terms_) add_term(n, c);
    return *this;
  }
  Poly& operator-=(const Poly& q) {
    for (const auto& [n, c] : q.terms_) add_term(n, Coeff(-c));
    return *this;
  }
  Poly& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [n, c] : terms_) c *= s;
    return *this;
  }
  /// Adds s * z^shift * q.
  void add_scaled_shifted(const Poly& q, const Coeff& s, const Monomial& shift) {
    if (s == 0) return;
    for (const auto& [n, c] : q.terms_) add_term(n + shift, Coeff(c * s));
  }

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator-(Poly p) {
    for (auto& [n, c] : p.terms_) c = -c;
    return p;
  }
  friend Poly operator*(Poly p, const Coeff& s) { return p *= s; }
  friend Poly operator*(const Coeff& s, Poly p) { return p *= s; }
  friend Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [n, c] : p.terms_) r.add_scaled_shifted(q, c, n);
    return r;
  }
  friend bool operator==(const Poly& p, const Poly& q) { return p.terms_ == q.terms_; }

 private:
  Terms terms_;
};

using MultiPoly = Poly<mpz_class>;
using RationalPoly = Poly<mpq_class>;

template <typename Coeff>
Poly<Coeff> add(const Poly<Coeff>& p, const Poly<Coeff>& q) {
  return p + q;
}
template <typename Coeff>
Poly<Coeff> mul(const Poly<Coeff>& p, const Poly<Coeff>& q) {
  return p * q;
}
template <typename Coeff>
Poly<Coeff> negate(const Poly<Coeff>& p) {
  return -p;
}
template <typename Coeff>
Coeff coefficient_of(const Poly<Coeff>& p, const Monomial& n) {
  return p.coefficient_of(n);
}

/// d/dz_i for 1 <= i <= 7.
template <typename Coeff>
Poly<Coeff> partial(const Poly<Coeff>& p, int i) {
  if (i < 1 || i > kRank) throw DomainError("partial: variable index " + std::to_string(i) + " out of range");
  Poly<Coeff> r;
  for (const auto& [n, c] : p.terms()) {
    int e = n[i - 1];
    if (e == 0) continue;
    Monomial d = n;
    d[i - 1] -= 1;
    r.add_term(d, Coeff(c * e));
  }
  return r;
}

/// Exact evaluation at an integer point, powers cached per variable.
inline mpz_class eval_integer(const MultiPoly& p, std::span<const mpz_class, kRank> point) {
  std::array<std::vector<mpz_class>, kRank> powers;
  for (int i = 0; i < kRank; ++i) powers[static_cast<std::size_t>(i)].push_back(1);
  auto power = [&](int i, int e) -> const mpz_class& {
    auto& v = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * point[static_cast<std::size_t>(i)]);
    return v[static_cast<std::size_t>(e)];
  };
  mpz_class total = 0;
  for (const auto& [n, c] : p.terms()) {
    mpz_class t = c;
    for (int i = 0; i < kRank; ++i)
      if (n[i] != 0) t *= power(i, n[i]);
    total += t;
  }
  return total;
}

inline mpz_class eval_integer(const MultiPoly& p, const std::array<mpz_class, kRank>& point) {
  return eval_integer(p, std::span<const mpz_class, kRank>(point));
}

/// Converts a rational polynomial whose coefficients are all integers.
/// Returns false (leaving `out` untouched) if some denominator is not 1.
inline bool to_integer_poly(const RationalPoly& p, MultiPoly& out) {
  MultiPoly r;
  for (const auto& [n, c] : p.terms()) {
    if (c.get_den() != 1) return false;
    r.add_term(n, c.get_num());
  }
  out = std::move(r);
  return true;
}

inline RationalPoly to_rational_poly(const MultiPoly& p) {
  RationalPoly r;
  for (const auto& [n, c] : p.terms()) r.add_term(n, mpq_class(c));
  return r;
}

// ---------------------------------------------------------------------------
// Canonical text form: "1*z7^2 -1*z6 -1*z1 -1".

inline std::string monomial_text(const Monomial& n) {
  std::string s;
  for (int i = 0; i < kRank; ++i) {
    if (n[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'z' + std::to_string(i + 1);
    if (n[i] > 1) s += '^' + std::to_string(n[i]);
  }
  return s;
}

template <typename Coeff>
std::string to_string(const Poly<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, c] : p.terms()) {
    std::string cs = c.get_str();
    if (!first) out += (c > 0) ? " +" : " ";
    out += cs;
    if (!n.is_zero()) out += '*' + monomial_text(n);
    first = false;
  }
  return out;
}

/// Parses the canonical form. Also accepts a bare monomial ("z7^2") for a
/// unit coefficient and terms in any order.
template <typename Coeff = mpz_class>
Poly<Coeff> parse_poly(std::string_view text) {
  Poly<Coeff> p;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return ParseError("polynomial parse error at offset " + std::to_string(i) + ": " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  if (text.substr(i) == "0") return p;
  bool any = false;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw fail("expected '+' or '-'");
    }
    skip_ws();
    Coeff c(1);
    Monomial n;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string digits = read_int();
      if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den = read_int();
        if (den.empty()) throw fail("missing denominator");
        digits += "/" + den;
      }
      c = Coeff(digits);
      have_coeff = true;
    }
    bool need_var = !have_coeff;
    if (have_coeff && i < text.size() && text[i] == '*') {
      ++i;
      need_var = true;
    }
    while (need_var) {
      if (i >= text.size() || text[i] != 'z') throw fail("expected variable");
      ++i;
      std::string idx = read_int();
      if (idx.size() != 1 || idx[0] < '1' || idx[0] > '7') throw fail("bad variable index");
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string ex = read_int();
        if (ex.empty()) throw fail("missing exponent");
        e = std::stoi(ex);
      }
      n[idx[0] - '1'] += e;
      need_var = (i < text.size() && text[i] == '*');
      if (need_var) ++i;
    }
    if (sign < 0) c = -c;
    p.add_term(n, c);
    any = true;
  }
  if (!any) throw fail("empty polynomial");
  return p;
}

}  // namespace charkit

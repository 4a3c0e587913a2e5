#pragma once

// Line-oriented fixture files.
//
//   cg j k = m1..m7:N ...        quadratic series R(lambda_j) x R(lambda_k)
//   mono n1..n7 = m1..m7:N ...   series of the monomial z^n
//   chi m1..m7 = <polynomial>    character in canonical text form
//   a j k = <polynomial>         published operator coefficient a_jk
//
// '#' starts a comment line; blank lines are ignored.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charkit/cgseries.hpp"
#include "charkit/polyring.hpp"

#ifndef CHARKIT_DATA_DIR
#define CHARKIT_DATA_DIR "data"
#endif

namespace charkit {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PairKey = std::pair<int, int>;

inline PairKey ordered_pair(int j, int k) { return j <= k ? PairKey{j, k} : PairKey{k, j}; }

struct QuadraticCorpus {
  std::map<PairKey, CGSeries> series;
  std::map<Weight, MultiPoly> second_order_chars;
  std::vector<std::string> warnings;
};

struct CharacterCorpus {
  std::vector<std::pair<Weight, MultiPoly>> items;
  std::vector<std::string> warnings;
};

struct MonomialSeriesCorpus {
  std::vector<std::pair<Monomial, CGSeries>> items;
  std::vector<std::string> warnings;
};

struct PrintedOperatorTable {
  std::map<PairKey, MultiPoly> a;
  std::vector<std::string> warnings;
};

inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CHARKIT_DATA")) return env;
  return CHARKIT_DATA_DIR;
}

namespace detail {

struct FixtureLine {
  int number = 0;
  std::string keyword;
  std::string head;  // text between keyword and '='
  std::string body;  // text after '='
};

inline std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

inline std::vector<FixtureLine> read_lines(const std::filesystem::path& path, std::vector<std::string>& warnings) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file " + path.string());
  std::vector<FixtureLine> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    auto sp = line.find(' ');
    if (eq == std::string::npos || sp == std::string::npos || sp > eq)
      throw FixtureError(path.string() + ":" + std::to_string(number) + ": malformed line");
    out.push_back({number, line.substr(0, sp), trim(line.substr(sp + 1, eq - sp - 1)), trim(line.substr(eq + 1))});
  }
  if (out.empty()) warnings.push_back(path.string() + ": no records");
  return out;
}

inline std::string where(const std::filesystem::path& path, const FixtureLine& l) {
  return path.string() + ":" + std::to_string(l.number);
}

inline CGSeries parse_series_body(const std::string& body, const std::string& loc) {
  CGSeries s;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw FixtureError(loc + ": expected weight:multiplicity, got '" + tok + "'");
    Weight w;
    mpz_class n;
    try {
      w = Weight::parse(tok.substr(0, colon));
      n = mpz_class(tok.substr(colon + 1));
    } catch (const std::exception& e) {
      throw FixtureError(loc + ": " + e.what());
    }
    if (n <= 0) throw FixtureError(loc + ": nonpositive multiplicity in '" + tok + "'");
    s.add(w, n);
  }
  if (s.empty()) throw FixtureError(loc + ": empty series");
  return s;
}

inline std::pair<int, int> parse_index_pair(const std::string& head, const std::string& loc) {
  std::istringstream in(head);
  int j = 0, k = 0;
  if (!(in >> j >> k) || j < 1 || j > kRank || k < 1 || k > kRank)
    throw FixtureError(loc + ": expected two indices in 1..7");
  return {j, k};
}

inline MultiPoly parse_body_poly(const std::string& body, const std::string& loc) {
  try {
    return parse_poly<mpz_class>(body);
  } catch (const std::exception& e) {
    throw FixtureError(loc + ": " + e.what());
  }
}

inline Weight parse_head_weight(const std::string& head, const std::string& loc) {
  try {
    return Weight::parse(head);
  } catch (const std::exception& e) {
    throw FixtureError(loc + ": " + e.what());
  }
}

inline void expect_keyword(const std::filesystem::path& path, const FixtureLine& l, const char* kw) {
  if (l.keyword != kw)
    throw FixtureError(where(path, l) + ": expected '" + kw + "' record, found '" + l.keyword + "'");
}

}  // namespace detail

inline CharacterCorpus load_character_corpus(const std::filesystem::path& path) {
  CharacterCorpus corpus;
  for (const auto& l : detail::read_lines(path, corpus.warnings)) {
    detail::expect_keyword(path, l, "chi");
    auto loc = detail::where(path, l);
    corpus.items.emplace_back(detail::parse_head_weight(l.head, loc), detail::parse_body_poly(l.body, loc));
  }
  return corpus;
}

/// Loads the 28 quadratic series plus the second-order characters. Every
/// series is checked against dim R(lambda_j) * dim R(lambda_k).
inline QuadraticCorpus load_quadratic_corpus(const std::filesystem::path& series_path,
                                             const std::filesystem::path& chars_path) {
  QuadraticCorpus corpus;
  for (const auto& l : detail::read_lines(series_path, corpus.warnings)) {
    detail::expect_keyword(series_path, l, "cg");
    auto loc = detail::where(series_path, l);
    auto [j, k] = detail::parse_index_pair(l.head, loc);
    CGSeries s = detail::parse_series_body(l.body, loc);
    mpz_class expected = weyl_dim(Weight::fundamental(j)) * weyl_dim(Weight::fundamental(k));
    mpz_class got = s.dimension();
    if (got != expected)
      throw FixtureError(loc + ": fixture corruption in series cg " + std::to_string(j) + " " + std::to_string(k) +
                         ": dimension sum " + got.get_str() + " != " + expected.get_str());
    if (s.multiplicity(Weight::fundamental(j) + Weight::fundamental(k)) != 1)
      throw FixtureError(loc + ": leading constituent must have multiplicity 1");
    if (!corpus.series.emplace(ordered_pair(j, k), std::move(s)).second)
      throw FixtureError(loc + ": duplicate series");
  }
  auto chars = load_character_corpus(chars_path);
  for (auto& w : chars.warnings) corpus.warnings.push_back(std::move(w));
  for (auto& [w, p] : chars.items) corpus.second_order_chars.emplace(w, std::move(p));
  return corpus;
}

inline QuadraticCorpus load_quadratic_corpus(const std::filesystem::path& dir = default_data_dir()) {
  return load_quadratic_corpus(dir / "quadratic_series.txt", dir / "second_order_characters.txt");
}

inline MonomialSeriesCorpus load_monomial_series_corpus(const std::filesystem::path& path) {
  MonomialSeriesCorpus corpus;
  for (const auto& l : detail::read_lines(path, corpus.warnings)) {
    detail::expect_keyword(path, l, "mono");
    auto loc = detail::where(path, l);
    Monomial n = detail::parse_head_weight(l.head, loc);
    CGSeries s = detail::parse_series_body(l.body, loc);
    mpz_class expected = monomial_dimension(n);
    mpz_class got = s.dimension();
    if (got != expected)
      throw FixtureError(loc + ": fixture corruption in series for z^" + n.label() + ": dimension sum " + got.get_str() +
                         " != " + expected.get_str());
    corpus.items.emplace_back(n, std::move(s));
  }
  return corpus;
}

inline PrintedOperatorTable load_printed_operator(const std::filesystem::path& path) {
  PrintedOperatorTable table;
  for (const auto& l : detail::read_lines(path, table.warnings)) {
    detail::expect_keyword(path, l, "a");
    auto loc = detail::where(path, l);
    auto [j, k] = detail::parse_index_pair(l.head, loc);
    if (!table.a.emplace(ordered_pair(j, k), detail::parse_body_poly(l.body, loc)).second)
      throw FixtureError(loc + ": duplicate entry");
  }
  return table;
}

// ---------------------------------------------------------------------------
// Errata: "a 44 : printed <poly> ; reconstructed <poly> ; verdict reconstructed-wins"

enum class Verdict { ReconstructedWins, PrintedWins };

struct ErratumEntry {
  PairKey pair;
  MultiPoly printed;
  MultiPoly reconstructed;
  Verdict verdict = Verdict::ReconstructedWins;
};

inline std::string verdict_text(Verdict v) {
  return v == Verdict::ReconstructedWins ? "reconstructed-wins" : "printed-wins";
}

inline std::string format_erratum(const ErratumEntry& e) {
  return "a " + std::to_string(e.pair.first) + std::to_string(e.pair.second) + " : printed " + to_string(e.printed) +
         " ; reconstructed " + to_string(e.reconstructed) + " ; verdict " + verdict_text(e.verdict);
}

inline std::vector<ErratumEntry> load_errata(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open errata file " + path.string());
  std::vector<ErratumEntry> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::string loc = path.string() + ":" + std::to_string(number);
    auto fields = [&] {
      std::vector<std::string> f;
      std::size_t pos = 0;
      while (true) {
        auto semi = line.find(';', pos);
        f.push_back(detail::trim(line.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
      return f;
    }();
    if (fields.size() != 3) throw FixtureError(loc + ": expected three ';'-separated fields");
    auto colon = fields[0].find(':');
    if (fields[0].rfind("a ", 0) != 0 || colon == std::string::npos) throw FixtureError(loc + ": expected 'a jk :'");
    std::string jk = detail::trim(fields[0].substr(2, colon - 2));
    if (jk.size() != 2 || jk[0] < '1' || jk[0] > '7' || jk[1] < '1' || jk[1] > '7')
      throw FixtureError(loc + ": bad index pair '" + jk + "'");
    std::string printed = detail::trim(fields[0].substr(colon + 1));
    if (printed.rfind("printed ", 0) != 0) throw FixtureError(loc + ": expected 'printed'");
    if (fields[1].rfind("reconstructed ", 0) != 0) throw FixtureError(loc + ": expected 'reconstructed'");
    if (fields[2].rfind("verdict ", 0) != 0) throw FixtureError(loc + ": expected 'verdict'");
    ErratumEntry e;
    e.pair = ordered_pair(jk[0] - '0', jk[1] - '0');
    e.printed = detail::parse_body_poly(printed.substr(8), loc);
    e.reconstructed = detail::parse_body_poly(fields[1].substr(14), loc);
    std::string v = detail::trim(fields[2].substr(8));
    if (v == "reconstructed-wins")
      e.verdict = Verdict::ReconstructedWins;
    else if (v == "printed-wins")
      e.verdict = Verdict::PrintedWins;
    else
      throw FixtureError(loc + ": unknown verdict '" + v + "'");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace charkit

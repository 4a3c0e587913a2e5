#pragma once

// Command-line driver. parse_job() turns argv into a JobSpec; run() executes
// it and returns the process exit status (0 ok, 1 check failed, 2 usage).

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charkit/charsolve.hpp"
#include "charkit/fixtures.hpp"
#include "charkit/oracle.hpp"
#include "charkit/reconstruct.hpp"
#include "charkit/tensor.hpp"

namespace charkit::cli {

using json = nlohmann::json;

struct JobSpec {
  std::string command;
  std::vector<Weight> weights;
  std::string format = "text";
  std::string method = "m1";
  std::filesystem::path cache_dir = ".charcache";
  bool no_cache = false;
  std::string corpus = "all";
  int trials = 20;
  std::uint64_t seed = 12345;
  int family_k = 0;
  int family_n = 0;
  std::filesystem::path data_dir = default_data_dir();
};

// ---------------------------------------------------------------------------
// JSON

inline json weight_json(const Weight& w) { return json(w.m); }

inline Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != kRank) throw ParseError("weight must be an array of 7 integers");
  Weight w;
  for (int i = 0; i < kRank; ++i) {
    const auto& v = j[static_cast<std::size_t>(i)];
    if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError("weight entries must be nonnegative integers");
    w[i] = v.get<int>();
  }
  return w;
}

inline json character_json(const Weight& m, const MultiPoly& chi) {
  json terms = json::array();
  for (const auto& [mono, c] : chi.terms()) terms.push_back(json::array({c.get_str(), weight_json(mono)}));
  return {{"weight", weight_json(m)}, {"polynomial", std::move(terms)}};
}

inline std::pair<Weight, MultiPoly> character_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weight") || !j.contains("polynomial"))
    throw ParseError("character object needs 'weight' and 'polynomial'");
  Weight m = weight_from_json(j.at("weight"));
  MultiPoly p;
  for (const auto& t : j.at("polynomial")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string()) throw ParseError("polynomial term must be [coeff, exps]");
    mpz_class c;
    if (c.set_str(t[0].get<std::string>(), 10) != 0) throw ParseError("bad coefficient " + t[0].dump());
    p.add_term(weight_from_json(t[1]), c);
  }
  return {m, p};
}

inline json series_json(const std::vector<Weight>& factors, const CGSeries& s, bool dim_check) {
  json f = json::array();
  for (const auto& w : factors) f.push_back(weight_json(w));
  json terms = json::array();
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    if (!it->second.fits_slong_p()) throw std::overflow_error("multiplicity " + it->second.get_str() + " exceeds a JSON integer");
    terms.push_back({{"weight", weight_json(it->first)}, {"mult", it->second.get_si()}});
  }
  return {{"factors", std::move(f)}, {"series", std::move(terms)}, {"dim_check", dim_check}};
}

// ---------------------------------------------------------------------------
// Argument parsing

/// Returns std::nullopt after printing help; throws CLI::ParseError on bad input.
inline std::optional<JobSpec> parse_job(int argc, const char* const* argv, std::ostream& out = std::cout) {
  JobSpec spec;
  CLI::App app{"E7 characters and Clebsch-Gordan series"};
  app.require_subcommand(1);
  std::vector<std::string> raw;

  bool cache_flag_given = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", spec.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--method", spec.method, "Character solver")->check(CLI::IsMember({"m1", "m2", "both"}));
    sub->add_option_function<std::string>(
        "--cache-dir", [&](const std::string& d) { spec.cache_dir = d; cache_flag_given = true; }, "Character cache directory");
    sub->add_flag("--no-cache", spec.no_cache, "Ignore and do not write the character cache");
    sub->add_option("--data-dir", spec.data_dir, "Fixture directory");
    sub->add_option("--trials", spec.trials, "Torus trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", spec.seed, "Random seed");
  };

  auto* character = app.add_subcommand("character", "Character of each weight");
  character->add_option("weights", raw, "Weights, e.g. 0000002 or 0,0,0,0,0,0,2")->required();
  auto* cg = app.add_subcommand("cg", "Series of R_m x R_n");
  cg->add_option("weights", raw, "Two weights")->required()->expected(2);
  auto* mono = app.add_subcommand("monomial-cg", "Series of the monomial z^n");
  mono->add_option("weights", raw, "Exponent vector")->required()->expected(1);
  auto* dim = app.add_subcommand("dim", "Weyl dimension");
  dim->add_option("weights", raw, "Weights")->required();
  auto* family = app.add_subcommand("series-family", "z7 chi_{n lambda_k} against its closed form");
  family->add_option("k", spec.family_k, "Fundamental index")->required()->check(CLI::Range(1, kRank));
  family->add_option("n", spec.family_n, "Multiple")->required()->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "Check a fixture corpus");
  verify->add_option("--corpus", spec.corpus, "Corpus")->check(
      CLI::IsMember({"appendix-a", "appendix-b", "quadratic", "all"}));
  for (auto* sub : {character, cg, mono, dim, family, verify}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  }
  spec.command = app.get_subcommands().front()->get_name();
  for (const auto& r : raw) {
    try {
      spec.weights.push_back(Weight::parse(r));
    } catch (const DomainError& e) {
      throw CLI::ValidationError("weights", e.what());
    }
  }
  if (!cache_flag_given)
    if (const char* env = std::getenv("CHARKIT_CACHE")) spec.cache_dir = env;
  return spec;
}

// ---------------------------------------------------------------------------
// Execution

class Session {
 public:
  explicit Session(const JobSpec& spec)
      : spec_(spec), corpus_(load_quadratic_corpus(spec.data_dir)), rec_(build_delta1(corpus_)), table_(rec_.op) {
    if (!spec_.no_cache) table_.load(cache_file());
    initial_ = table_.size();
  }
  ~Session() {
    try {
      if (!spec_.no_cache && table_.size() > initial_) table_.save(cache_file());
    } catch (...) {
    }
  }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const QuadraticCorpus& corpus() const { return corpus_; }
  const Reconstruction& reconstruction() const { return rec_; }
  CharacterTable& table() { return table_; }

 private:
  std::filesystem::path cache_file() const { return spec_.cache_dir / "characters.txt"; }

  JobSpec spec_;
  QuadraticCorpus corpus_;
  Reconstruction rec_;
  CharacterTable table_;
  std::size_t initial_ = 0;
};

struct CheckItem {
  std::string corpus;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::string series_diff(const CGSeries& expected, const CGSeries& got) {
  std::map<Weight, std::pair<mpz_class, mpz_class>> both;
  for (const auto& [w, n] : expected.terms()) both[w].first = n;
  for (const auto& [w, n] : got.terms()) both[w].second = n;
  std::string s;
  for (const auto& [w, p] : both)
    if (p.first != p.second) s += " " + w.label() + ": expected " + p.first.get_str() + ", got " + p.second.get_str() + ";";
  return s;
}

inline CheckItem check_character(const std::string& corpus, Session& session, const Weight& w, const MultiPoly& expected,
                                 const std::string& method) {
  CheckItem item{corpus, "chi " + w.label(), true, ""};
  auto& table = session.table();
  auto compare = [&](const char* tag, const MultiPoly& got) {
    if (got == expected) return;
    item.pass = false;
    item.detail += std::string(" ") + tag + " gives " + to_string(got) + ";";
  };
  if (method != "m2") compare("method-1", table.character(w));
  if (method != "m1") compare("method-2", table.character_m2(w));
  auto report = verify_character(session.reconstruction().op, w, expected);
  if (!report.pass()) {
    item.pass = false;
    for (const auto& f : report.failures) item.detail += " " + f + ";";
  }
  return item;
}

inline std::vector<CheckItem> verify_quadratic(Session& s, const JobSpec& spec) {
  std::vector<CheckItem> items;
  const auto& op = s.reconstruction().op;
  for (int j = 1; j <= kRank; ++j) {
    Weight lj = Weight::fundamental(j);
    mpz_class eps(static_cast<long>(eigenvalue(lj)));
    bool ok = apply_delta1(op, MultiPoly::variable(j)) == MultiPoly::variable(j) * eps;
    items.push_back({"quadratic", "Delta1 z" + std::to_string(j), ok, ok ? "" : " eigen-identity fails"});
  }
  auto printed_path = spec.data_dir / "delta1_printed.txt";
  auto errata_path = spec.data_dir / "errata.txt";
  if (std::filesystem::exists(printed_path)) {
    auto found = compare_with_printed(op, load_printed_operator(printed_path), s.corpus());
    std::map<PairKey, ErratumEntry> listed;
    if (std::filesystem::exists(errata_path))
      for (auto& e : load_errata(errata_path)) listed.emplace(e.pair, std::move(e));
    std::map<PairKey, const OperatorDiscrepancy*> by_pair;
    for (const auto& d : found) by_pair.emplace(d.entry.pair, &d);
    for (int j = 1; j <= kRank; ++j)
      for (int k = j; k <= kRank; ++k) {
        CheckItem item{"quadratic", "a " + std::to_string(j) + std::to_string(k), true, ""};
        auto it = by_pair.find({j, k});
        auto le = listed.find({j, k});
        if (it == by_pair.end() && le != listed.end()) {
          item.pass = false;
          item.detail = " listed in errata but printed and reconstructed agree";
        } else if (it != by_pair.end()) {
          const auto& d = *it->second;
          if (le == listed.end()) {
            item.pass = false;
            item.detail = " unlisted discrepancy: " + format_erratum(d.entry);
          } else if (!(le->second.printed == d.entry.printed) || !(le->second.reconstructed == d.entry.reconstructed) ||
                     le->second.verdict != d.entry.verdict) {
            item.pass = false;
            item.detail = " errata entry out of date: " + format_erratum(d.entry);
          } else if (!d.reconstructed_eigen_ok) {
            item.pass = false;
            item.detail = " reconstructed coefficient fails the eigen-identity";
          }
        }
        items.push_back(std::move(item));
      }
  }
  for (const auto& [w, chi] : s.corpus().second_order_chars)
    items.push_back(check_character("quadratic", s, w, chi, spec.method));
  for (const auto& [jk, expected] : s.corpus().series) {
    CheckItem item{"quadratic", "cg " + std::to_string(jk.first) + " " + std::to_string(jk.second), true, ""};
    try {
      CGSeries got = cg_decompose(s.table(), Weight::fundamental(jk.first), Weight::fundamental(jk.second));
      if (!(got == expected)) {
        item.pass = false;
        item.detail = series_diff(expected, got);
      }
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = std::string(" ") + e.what();
    }
    items.push_back(std::move(item));
  }
  return items;
}

inline std::vector<CheckItem> verify_appendix_a(Session& s, const JobSpec& spec) {
  std::vector<CheckItem> items;
  auto corpus = load_character_corpus(spec.data_dir / "third_order_characters.txt");
  for (const auto& [w, chi] : corpus.items) items.push_back(check_character("appendix-a", s, w, chi, spec.method));
  return items;
}

inline std::vector<CheckItem> verify_appendix_b(Session& s, const JobSpec& spec) {
  std::vector<CheckItem> items;
  auto corpus = load_monomial_series_corpus(spec.data_dir / "cubic_series.txt");
  for (const auto& [n, expected] : corpus.items) {
    CheckItem item{"appendix-b", "z^" + n.label(), true, ""};
    try {
      CGSeries got = monomial_decompose(s.table(), n);
      if (!(got == expected)) {
        item.pass = false;
        item.detail = series_diff(expected, got);
      }
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = std::string(" ") + e.what();
    }
    items.push_back(std::move(item));
  }
  return items;
}

inline std::vector<CheckItem> verify_oracle(Session& s, const JobSpec& spec) {
  std::vector<CheckItem> items;
  std::vector<Weight> targets;
  for (int j = 1; j <= kRank; ++j) targets.push_back(Weight::fundamental(j));
  for (const char* w : {"0000002", "1000001", "0000003"}) targets.push_back(Weight::parse(w));
  for (const auto& w : targets) {
    CheckItem item{"oracle", "torus " + w.label(), true, ""};
    auto ws = freudenthal(w);
    if (ws.total() != weyl_dim(w)) {
      item.pass = false;
      item.detail = " Freudenthal total " + ws.total().get_str() + " != " + weyl_dim(w).get_str() + ";";
    }
    auto r = torus_check(w, s.table().character(w), spec.trials, spec.seed);
    if (!(r.max_deviation < 1e-8)) {
      item.pass = false;
      std::ostringstream os;
      os << " deviation " << r.max_deviation;
      item.detail += os.str();
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace detail

inline int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const bool as_json = spec.format == "json";
  try {
    if (spec.command == "dim") {
      json arr = json::array();
      for (const auto& w : spec.weights) {
        mpz_class d = weyl_dim(w);
        if (as_json)
          arr.push_back({{"weight", weight_json(w)}, {"dim", d.get_str()}});
        else
          out << d.get_str() << "\n";
      }
      if (as_json) out << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
      return 0;
    }

    Session session(spec);
    auto& table = session.table();

    if (spec.command == "character") {
      int status = 0;
      json arr = json::array();
      for (const auto& w : spec.weights) {
        MultiPoly chi = spec.method == "m2" ? table.character_m2(w) : table.character(w);
        if (spec.method == "both") {
          MultiPoly other = table.character_m2(w);
          if (!(other == chi)) {
            err << "method-1 and method-2 disagree on " << w.label() << "\n  method-1: " << to_string(chi)
                << "\n  method-2: " << to_string(other) << "\n";
            status = 1;
          }
        }
        if (as_json)
          arr.push_back(character_json(w, chi));
        else
          out << to_string(chi) << "\n";
      }
      if (as_json) out << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
      return status;
    }

    if (spec.command == "cg" || spec.command == "monomial-cg") {
      std::vector<Weight> factors;
      CGSeries s;
      mpz_class expected = 1;
      if (spec.command == "cg") {
        factors = spec.weights;
        s = cg_decompose(table, spec.weights[0], spec.weights[1]);
        expected = weyl_dim(spec.weights[0]) * weyl_dim(spec.weights[1]);
      } else {
        const Weight& n = spec.weights[0];
        for (int i = 0; i < kRank; ++i)
          for (int e = 0; e < n[i]; ++e) factors.push_back(Weight::fundamental(i + 1));
        s = monomial_decompose(table, n);
        expected = monomial_dimension(n);
      }
      bool ok = s.dimension() == expected;
      if (as_json) {
        out << series_json(factors, s, ok).dump() << "\n";
      } else {
        for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
          out << it->first.label() << " " << it->second.get_str() << "\n";
        out << "dim " << expected.get_str() << (ok ? " ok" : " MISMATCH " + s.dimension().get_str()) << "\n";
      }
      return ok ? 0 : 1;
    }

    if (spec.command == "series-family") {
      auto r = series_family_z7(table, spec.family_k, spec.family_n);
      if (as_json) {
        json diffs = r.differences;
        json j = series_json({Weight::fundamental(7), spec.family_n * Weight::fundamental(spec.family_k)}, r.computed,
                             r.computed.dimension() == weyl_dim(Weight::fundamental(7)) *
                                                           weyl_dim(spec.family_n * Weight::fundamental(spec.family_k)));
        j["closed_form"] = series_json({}, r.closed_form, true)["series"];
        j["match"] = r.match;
        j["differences"] = diffs;
        out << j.dump() << "\n";
      } else {
        out << "computed:    " << r.computed.to_line() << "\n";
        out << "closed form: " << r.closed_form.to_line() << "\n";
        out << (r.match ? "match" : "MISMATCH") << "\n";
        for (const auto& d : r.differences) out << "  " << d << "\n";
      }
      return r.match ? 0 : 1;
    }

    if (spec.command == "verify") {
      std::vector<CheckItem> items;
      auto add = [&](std::vector<CheckItem> more) {
        for (auto& i : more) items.push_back(std::move(i));
      };
      bool all = spec.corpus == "all";
      if (all || spec.corpus == "quadratic") add(detail::verify_quadratic(session, spec));
      if (all || spec.corpus == "appendix-a") add(detail::verify_appendix_a(session, spec));
      if (all || spec.corpus == "appendix-b") add(detail::verify_appendix_b(session, spec));
      if (all) add(detail::verify_oracle(session, spec));
      std::size_t failed = 0;
      json arr = json::array();
      for (const auto& i : items) {
        if (!i.pass) ++failed;
        if (as_json)
          arr.push_back({{"corpus", i.corpus}, {"item", i.name}, {"pass", i.pass}, {"detail", i.detail}});
        else
          out << (i.pass ? "PASS " : "FAIL ") << i.corpus << " " << i.name << (i.pass ? "" : " :" + i.detail) << "\n";
      }
      if (as_json)
        out << json{{"items", arr}, {"passed", items.size() - failed}, {"failed", failed}}.dump() << "\n";
      else
        out << items.size() - failed << " passed, " << failed << " failed\n";
      return failed == 0 ? 0 : 1;
    }

    err << "unknown command '" << spec.command << "'\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

/// parse_job + run with CLI11's usage handling.
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::optional<JobSpec> spec;
  try {
    spec = parse_job(argc, argv, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }
  if (!spec) return 0;
  return run(*spec, out, err);
}

}  // namespace charkit::cli

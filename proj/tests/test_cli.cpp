#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "charkit/cli.hpp"

using namespace charkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "charkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::optional<cli::JobSpec> parse(std::vector<std::string> args) {
  args.insert(args.begin(), "charkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  return cli::parse_job(static_cast<int>(argv.size()), argv.data(), out);
}

fs::path temp_cache() {
  return fs::temp_directory_path() / ("charkit_cli_" + std::to_string(std::random_device{}()));
}

}  // namespace

TEST(ParseJob, WeightForms) {
  auto spec = parse({"character", "0000002", "1,0,0,0,0,0,1", "--no-cache"});
  ASSERT_TRUE(spec);
  EXPECT_EQ(spec->command, "character");
  ASSERT_EQ(spec->weights.size(), 2u);
  EXPECT_EQ(spec->weights[0], Weight::parse("0000002"));
  EXPECT_EQ(spec->weights[1], Weight::parse("1000001"));
  EXPECT_TRUE(spec->no_cache);
  EXPECT_EQ(spec->method, "m1");
}

TEST(ParseJob, Rejections) {
  EXPECT_THROW(parse({"character", "00000x2"}), CLI::ParseError);
  EXPECT_THROW(parse({"cg", "0000001"}), CLI::ParseError);
  EXPECT_THROW(parse({"dim", "0000001", "--format", "xml"}), CLI::ParseError);
  EXPECT_THROW(parse({"series-family", "8", "2"}), CLI::ParseError);
  EXPECT_THROW(parse({}), CLI::ParseError);
  EXPECT_FALSE(parse({"--help"}));
}

TEST(ParseJob, CacheDirPrecedence) {
  ::setenv("CHARKIT_CACHE", "/tmp/from_env", 1);
  EXPECT_EQ(parse({"dim", "0000001"})->cache_dir, fs::path("/tmp/from_env"));
  EXPECT_EQ(parse({"dim", "0000001", "--cache-dir", "/tmp/flag"})->cache_dir, fs::path("/tmp/flag"));
  ::unsetenv("CHARKIT_CACHE");
  EXPECT_EQ(parse({"dim", "0000001"})->cache_dir, fs::path(".charcache"));
}

TEST(Json, CharacterRoundTrip) {
  Weight m = Weight::parse("1000001");
  MultiPoly chi = parse_poly("z1*z7 - z2 - z7");
  auto j = cli::character_json(m, chi);
  auto [m2, chi2] = cli::character_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(m2, m);
  EXPECT_EQ(chi2, chi);
  EXPECT_THROW(cli::weight_from_json(nlohmann::json::array({1, 2})), std::exception);
}

TEST(Run, Dim) {
  auto r = invoke({"dim", "0000000", "0000001", "0003000"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1\n56\n" + weyl_dim(Weight::parse("0003000")).get_str() + "\n");
  auto j = invoke({"dim", "0000002", "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["dim"], "1463");
}

TEST(Run, Character) {
  auto r = invoke({"character", "0000002", "--no-cache"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1*z7^2 -1*z6 -1*z1 -1\n");
  auto both = invoke({"character", "1000001", "--method", "both", "--no-cache"});
  EXPECT_EQ(both.status, 0);
  EXPECT_EQ(both.out, "1*z1*z7 -1*z7 -1*z2\n");
}

TEST(Run, Cg) {
  auto r = invoke({"cg", "0000001", "0000001", "--no-cache"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1000000 1\n0000010 1\n0000002 1\n0000000 1\ndim 3136 ok\n");
  auto j = nlohmann::json::parse(invoke({"monomial-cg", "0000002", "--format", "json", "--no-cache"}).out);
  EXPECT_EQ(j["series"].size(), 4u);
}

TEST(Run, SeriesFamily) {
  auto r = invoke({"series-family", "7", "2", "--no-cache"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("match"), std::string::npos);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({"character", "0000-12"}).status, 2);
  EXPECT_EQ(invoke({"bogus"}).status, 2);
  auto v = invoke({"verify", "--corpus", "quadratic", "--no-cache"});
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_NE(v.out.find(" 0 failed"), std::string::npos);
}

TEST(Run, BadDataDirFails) {
  auto r = invoke({"character", "0000002", "--data-dir", "/nonexistent/charkit", "--no-cache"});
  EXPECT_NE(r.status, 0);
  EXPECT_FALSE(r.err.empty());
}

TEST(Run, CacheIsWrittenAndReused) {
  fs::path dir = temp_cache();
  auto first = invoke({"character", "0000003", "--cache-dir", dir.string()});
  EXPECT_EQ(first.status, 0);
  EXPECT_TRUE(fs::exists(dir / "characters.txt"));
  auto second = invoke({"character", "0000003", "--cache-dir", dir.string()});
  EXPECT_EQ(second.out, first.out);
  fs::remove_all(dir);

  auto skipped = invoke({"character", "0000003", "--cache-dir", dir.string(), "--no-cache"});
  EXPECT_EQ(skipped.out, first.out);
  EXPECT_FALSE(fs::exists(dir));
}

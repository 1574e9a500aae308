#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(DUNKL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, WallachWitness) {
  auto r = run("wallach --n 3 --k 1/2 --mu 3/4");
  ASSERT_EQ(r.status, 0);
  auto j = parse(r);
  EXPECT_EQ(j["verdict"], "not_positive_measure");
  EXPECT_EQ(j["witness"], "(1,1,1)");
  EXPECT_EQ(j["pochhammer_value"], "-3/64");
}

TEST(Cli, WallachDiscretePoint) {
  auto j = parse(run("wallach --n 3 --k 1/2 --mu 1/2"));
  EXPECT_EQ(j["verdict"], "positive_measure_discrete");
  EXPECT_EQ(j["r"], 1);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_TRUE(j["sign_scan"]["all_nonnegative"].get<bool>());
}

TEST(Cli, VerifyMehta) {
  auto r = run("verify --suite mehta --n 2 --k 1 --tol 1e-6");
  ASSERT_EQ(r.status, 0);
  auto j = parse(r);
  EXPECT_EQ(j["suite"], "mehta");
  ASSERT_EQ(j["cases"].size(), 1u);
  const auto& c = j["cases"][0];
  EXPECT_TRUE(c["pass"].get<bool>());
  EXPECT_NEAR(c["reference"].get<double>(), 4 * std::numbers::pi, 1e-12);
  for (const char* key : {"name", "inputs", "computed", "reference", "abs_err", "rel_err", "pass"}) EXPECT_TRUE(c.contains(key)) << key;
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
}

TEST(Cli, JackExpansion) {
  auto r = run("jack --n 2 --alpha 2 --lambda 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["expansion"], "m[2] + 2/3 m[1,1]");
  EXPECT_EQ(parse(run("jack --n 2 --k 1/2 --lambda 2"))["expansion"], "m[2] + 2/3 m[1,1]");
}

TEST(Cli, SeedDeterminism) {
  auto a = run("verify --suite bessel-properties --seed 42 --trials 30");
  auto b = run("verify --suite bessel-properties --seed 42 --trials 30");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run("verify --suite eval-pairing --seed 7 --max-degree 2");
  auto d = run("verify --suite eval-pairing --seed 7 --max-degree 2");
  EXPECT_EQ(c.out, d.out);
  EXPECT_NE(c.out, run("verify --suite eval-pairing --seed 8 --max-degree 2").out);
}

TEST(Cli, HighDimensionSkippedUnlessForced) {
  auto r = run("verify --suite macdonald --n 5");
  ASSERT_EQ(r.status, 0);
  auto j = parse(r);
  EXPECT_TRUE(j["summary"]["skipped"].get<bool>());
  EXPECT_TRUE(j["cases"].empty());
  ASSERT_TRUE(j["summary"].contains("warnings"));
  EXPECT_NE(j["summary"]["warnings"][0].get<std::string>().find("desk-scale"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("jack --n 2").status, 2);
  EXPECT_EQ(run("wallach --n 2 --k 0 --mu 1").status, 2);
  EXPECT_EQ(run("verify --suite nonsense").status, 2);
  EXPECT_EQ(run("jack --n 2 --alpha 2 --lambda 1,2").status, 2);
  // a pole is a failed evaluation, not a usage error
  EXPECT_EQ(run("gamma-n --n 2 --k 1/2 --mu 1/2").status, 1);
  // a tolerance no quadrature can meet within budget fails the case
  EXPECT_EQ(run("verify --suite kadell --tol 1e-300").status, 1);
}

TEST(Cli, OtherFormats) {
  auto csv = run("verify --suite binomial --n 2 --max-degree 3 --format csv");
  ASSERT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.rfind("name,pass,abs_err,rel_err,computed,reference\n", 0), 0u);
  auto text = run("pochhammer --mu 3/4 --k 1/2 --lambda 1,1,1 --format text");
  EXPECT_NE(text.out.find("value: -3/64"), std::string::npos);
  auto g = parse(run("gamma-n --n 1 --k 1 --mu 5 --digits 20"));
  EXPECT_EQ(g["value"].get<std::string>().substr(0, 2), "24");
}

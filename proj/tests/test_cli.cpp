#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(WACHS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wachs_cli_" + std::to_string(getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, Enumerate) {
  auto r = cli("enumerate B 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 16u);
  r = cli("enumerate A 5");
  EXPECT_EQ(line_count(r.out), 24u);
  EXPECT_NE(r.out.find("12534\t(2,12,{})\t2\n"), std::string::npos);
}

TEST(Cli, CheckTheorem) {
  auto r = cli("check theorem graded-A --max-n 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 6u);
  EXPECT_NE(r.out.find("n=4   pass   rank 5"), std::string::npos) << r.out;
  EXPECT_EQ(cli("check conjecture mobiusA --max-n 8").code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("check theorem graded-C").code, 2);
  EXPECT_EQ(cli("check conjecture graded-A").code, 2);
  EXPECT_EQ(cli("enumerate C 3").code, 2);
  EXPECT_EQ(cli("hasse A 4 --order weakX --dot /dev/null").code, 2);
  EXPECT_EQ(cli("enumerate A 0").code, 2);
}

TEST(Cli, Caps) {
  EXPECT_EQ(cli("enumerate A 9").code, 3);
  EXPECT_EQ(cli("enumerate B 7").code, 3);
  EXPECT_EQ(cli("check theorem order-B --max-n 7").code, 3);
  EXPECT_EQ(cli("check conjecture latticeAodd --max-n 11").code, 3);
  auto r = cli("--unsafe-large enumerate B 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 3072u);
}

TEST(Cli, HasseDot) {
  auto path = temp_file("a4.dot");
  EXPECT_EQ(cli("hasse A 4 --dot " + path.string()).code, 0);
  auto dot = slurp(path);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 9);
  EXPECT_NE(dot.find("\"2143\" -> \"3412\";"), std::string::npos);
  EXPECT_NE(dot.find("{ rank=same; \"3421\"; \"4312\"; }"), std::string::npos);
  EXPECT_EQ(cli("hasse B 3 --order weakL --dot " + path.string()).code, 0);
  // the left order is not graded, so no rank clusters
  EXPECT_EQ(slurp(path).find("rank=same"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, JsonReportIsDeterministic) {
  auto a = temp_file("a.json"), b = temp_file("b.json");
  ASSERT_EQ(cli("report --no-timings --json " + a.string()).code, 0);
  ASSERT_EQ(cli("report --no-timings --json " + b.string()).code, 0);
  auto text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["version"], "1.0.0");
  ASSERT_TRUE(j["checks"].is_array());
  EXPECT_GT(j["checks"].size(), 50u);
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("id") && c.contains("kind") && c.contains("n") && c.contains("status") &&
                c.contains("millis"));
    EXPECT_NE(c["status"], "fail") << c.dump();
  }
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, CheckJsonCarriesWitness) {
  auto path = temp_file("w.json");
  EXPECT_EQ(cli("check theorem nongraded-remark --json " + path.string()).code, 0);
  auto j = nlohmann::json::parse(slurp(path));
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_TRUE(j["checks"][0].contains("witness"));
  std::filesystem::remove(path);
}

// wachs: enumerate Wachs permutations, draw their Hasse diagrams and run
// the exhaustive checks.
//
// Exit codes: 0 all requested checks passed, 1 a check failed, 2 usage
// error, 3 size above the default cap (see --unsafe-large).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wachs/checks.hpp"

namespace {

using namespace wachs;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Kind parse_kind(const std::string& s) { return s == "A" ? Kind::A : Kind::B; }

int size_cap(Kind k) { return k == Kind::A ? 8 : 6; }

void require_within_cap(Kind kind, int n, bool unsafe) {
  if (n < 1) throw UsageError("n must be positive");
  if (n > size_cap(kind) && !unsafe)
    throw CapExceeded("n = " + std::to_string(n) + " is above the type " + to_string(kind) +
                      " cap " + std::to_string(size_cap(kind)) + " (use --unsafe-large)");
}

int cmd_enumerate(Kind kind, int n, bool unsafe) {
  require_within_cap(kind, n, unsafe);
  auto print = [](const auto& elems) {
    for (const auto& v : elems)
      std::cout << format(v) << '\t' << format(encode(v)) << '\t' << rank_lW(v) << '\n';
  };
  if (kind == Kind::A)
    print(enumerate_wachs_A(n));
  else
    print(enumerate_wachs_B(n));
  return 0;
}

int cmd_hasse(Kind kind, int n, const std::string& order, const std::string& path, bool unsafe) {
  require_within_cap(kind, n, unsafe);
  auto build = [&](const auto& elems) {
    if (order == "bruhat") return checks::bruhat_poset(elems);
    return weak_poset(elems, order == "weakL" ? Side::Left : Side::Right);
  };
  FinitePoset p = kind == Kind::A ? build(enumerate_wachs_A(n)) : build(enumerate_wachs_B(n));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_dot(p);
  std::cout << p.size() << " elements, " << p.cover_count() << " covers -> " << path << '\n';
  return 0;
}

void print_results(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    std::cout << std::left << std::setw(18) << r.id << ' ' << to_string(r.kind) << "  n=" << std::setw(3)
              << r.n << ' ' << std::setw(5) << to_string(r.status);
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    if (r.witness && !r.witness->empty()) std::cout << "  [" << *r.witness << ']';
    std::cout << "  (" << std::fixed << std::setprecision(1) << r.millis << " ms)\n";
  }
}

void write_report(const std::vector<CheckResult>& results, const std::string& path, bool timings) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << report_json(results, timings).dump(2) << '\n';
}

int cmd_check(CheckFamily family, const std::string& id, int max_n, bool unsafe,
              const std::string& json_path) {
  auto specs = find_checks(id, family);
  if (specs.empty()) throw UsageError("unknown check id '" + id + "'");
  std::vector<CheckRequest> req;
  for (const auto* s : specs) req.push_back({s, max_n});
  auto results = run_checks(req, unsafe);
  print_results(results);
  if (!json_path.empty()) write_report(results, json_path, true);
  return all_passed(results) ? 0 : kExitFail;
}

int cmd_report(const std::string& path, bool timings) {
  std::vector<CheckRequest> req;
  for (const auto& s : check_registry()) req.push_back({&s, 0});
  auto results = run_checks(req);
  write_report(results, path, timings);
  std::size_t failed = std::count_if(results.begin(), results.end(),
                                     [](const CheckResult& r) { return r.status == Status::Fail; });
  std::cout << results.size() << " checks, " << failed << " failed -> " << path << '\n';
  return failed == 0 ? 0 : kExitFail;
}

std::string id_list(CheckFamily family) {
  std::string s;
  for (const auto& c : check_registry())
    if (c.family == family && s.find(c.id) == std::string::npos) s += (s.empty() ? "" : ", ") + c.id;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wachs permutations: enumeration, Hasse diagrams and exhaustive checks"};
  app.require_subcommand(1);
  bool unsafe = false;
  app.add_flag("--unsafe-large", unsafe, "Allow sizes above the default caps (A 8, B 6, latticeAodd 9)");

  std::string kind_text, order = "bruhat", dot_path, id, json_path;
  int n = 0, max_n = 0;
  bool no_timings = false;

  auto* enumerate = app.add_subcommand("enumerate", "List W(S_n) or W(B_n) with codes and l_W");
  enumerate->add_option("kind", kind_text, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
  enumerate->add_option("n", n, "Size")->required();

  auto* hasse = app.add_subcommand("hasse", "Write the Hasse diagram as Graphviz DOT");
  hasse->add_option("kind", kind_text, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
  hasse->add_option("n", n, "Size")->required();
  hasse->add_option("--order", order, "bruhat, weakR or weakL")
      ->check(CLI::IsMember({"bruhat", "weakR", "weakL"}));
  hasse->add_option("--dot", dot_path, "Output path")->required();

  auto* check = app.add_subcommand("check", "Run one check over n = 1..max-n");
  check->require_subcommand(1);
  auto* theorem = check->add_subcommand("theorem", "Ids: " + id_list(CheckFamily::Theorem));
  auto* conjecture = check->add_subcommand("conjecture", "Ids: " + id_list(CheckFamily::Conjecture));
  for (auto* sub : {theorem, conjecture}) {
    sub->add_option("id", id, "Check id")->required();
    sub->add_option("--max-n", max_n, "Largest size (default: the cap)")->check(CLI::PositiveNumber);
    sub->add_option("--json", json_path, "Also write a JSON report");
  }

  auto* report = app.add_subcommand("report", "Run every check at its default range");
  report->add_option("--json", json_path, "Output path")->required();
  report->add_flag("--no-timings", no_timings, "Write 0 for every runtime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(parse_kind(kind_text), n, unsafe);
    if (*hasse) return cmd_hasse(parse_kind(kind_text), n, order, dot_path, unsafe);
    if (*theorem) return cmd_check(CheckFamily::Theorem, id, max_n, unsafe, json_path);
    if (*conjecture) return cmd_check(CheckFamily::Conjecture, id, max_n, unsafe, json_path);
    if (*report) return cmd_report(json_path, !no_timings);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

#pragma once

// Registry of exhaustive verification checks. Every check compares a closed
// form against the ambient group (Bruhat comparisons in S_n or B_n, the
// generic poset engine) at one size n and returns a status with a witness on
// failure. run_checks fans the (check, n) tasks out over a worker pool.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "wachs/bruhat.hpp"
#include "wachs/poset.hpp"
#include "wachs/wachs.hpp"
#include "wachs/weak_order.hpp"

namespace wachs {

enum class Status { Pass, Fail, Skip };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  Kind kind = Kind::A;
  int n = 0;
  Status status = Status::Pass;
  std::string detail;
  std::optional<std::string> witness;
  double millis = 0;
};

enum class CheckFamily { Theorem, Conjecture };

struct CheckSpec {
  std::string id;
  CheckFamily family = CheckFamily::Theorem;
  Kind kind = Kind::A;
  int min_n = 1;
  int default_cap = 8;  ///< largest n run without --unsafe-large
  /// Sizes at which the check runs for a given --max-n (empty means none).
  std::function<std::vector<int>(int)> sizes;
  std::function<CheckResult(int)> run;
};

/// Raised when a requested size is above the default cap.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

namespace checks {

inline std::vector<int> all_sizes(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

template <typename Elem>
FinitePoset bruhat_poset(const std::vector<Elem>& elems) {
  return build_poset(elems, [](const Elem& u, const Elem& v) { return bruhat_leq(u, v); },
                     [](const Elem& e) { return format(e); });
}

template <typename Elem>
std::vector<Elem> wachs_elements(Kind kind, int n) {
  if constexpr (std::is_same_v<Elem, Permutation>) {
    (void)kind;
    return enumerate_wachs_A(n);
  } else {
    return enumerate_wachs_B(n);
  }
}

inline CheckResult fail(CheckResult r, std::string detail, std::string witness) {
  r.status = Status::Fail;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

template <typename Elem>
CheckResult graded(CheckResult r) {
  auto w = wachs_elements<Elem>(r.kind, r.n);
  auto p = bruhat_poset(w);
  auto g = grade(p);
  if (!g.graded) {
    std::string chain;
    for (auto x : g.witness->long_chain) chain += p.label(x) + " ";
    return fail(r, "induced Bruhat order is not graded", chain);
  }
  if (g.poset_rank != wachs_rank(r.kind, r.n))
    return fail(r, "rank " + std::to_string(g.poset_rank) + ", expected " +
                       std::to_string(wachs_rank(r.kind, r.n)),
                "");
  for (std::size_t k = 0; k < w.size(); ++k)
    if (g.rank[k] != rank_lW(w[k]))
      return fail(r, "rank function differs from l_W", format(w[k]));
  r.detail = "rank " + std::to_string(g.poset_rank);
  return r;
}

template <typename Elem>
CheckResult order(CheckResult r) {
  auto w = wachs_elements<Elem>(r.kind, r.n);
  using Code = decltype(encode(w.front()));
  std::vector<Code> codes;
  for (const auto& x : w) codes.push_back(encode(x));
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b)
      if (wachs_leq(codes[a], codes[b]) != bruhat_leq(w[a], w[b]))
        return fail(r, "closed form disagrees with Bruhat order", format(w[a]) + " " + format(w[b]));
  r.detail = std::to_string(w.size() * w.size()) + " pairs";
  return r;
}

template <typename Elem>
CheckResult covers(CheckResult r) {
  auto w = wachs_elements<Elem>(r.kind, r.n);
  auto p = bruhat_poset(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::vector<std::string> closed, reduced;
    for (const auto& u : wachs_covers(w[k])) closed.push_back(format(u));
    for (auto j : p.lower_covers(k)) reduced.push_back(p.label(j));
    std::sort(closed.begin(), closed.end());
    std::sort(reduced.begin(), reduced.end());
    if (closed != reduced) return fail(r, "cover sets differ", format(w[k]));
  }
  r.detail = std::to_string(p.cover_count()) + " covers";
  return r;
}

inline CheckResult outside_hypotheses(CheckResult r) {
  r.status = Status::Skip;
  r.detail = "closed form assumes n >= 2 in type B";
  return r;
}

template <typename Elem>
CheckResult mobius_values(CheckResult r) {
  if (r.kind == Kind::B && r.n < 2) return outside_hypotheses(r);
  auto w = wachs_elements<Elem>(r.kind, r.n);
  auto p = bruhat_poset(w);
  MobiusTable mu(p);
  const auto e = *p.minimum();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (mu(e, k) != mobius_closed(encode(w[k])))
      return fail(r, "mu(e,v) = " + std::to_string(mu(e, k)), format(w[k]));
  return r;
}

template <typename Elem>
CheckResult charpoly(CheckResult r) {
  if (r.kind == Kind::B && r.n < 2) return outside_hypotheses(r);
  auto p = bruhat_poset(wachs_elements<Elem>(r.kind, r.n));
  auto got = characteristic_polynomial(p);
  auto want = closed_polys(r.kind, r.n).charpoly;
  if (got != want) return fail(r, "characteristic polynomial differs", to_string(got));
  r.detail = to_string(got);
  return r;
}

template <typename Elem>
CheckResult rankpoly(CheckResult r) {
  auto p = bruhat_poset(wachs_elements<Elem>(r.kind, r.n));
  auto got = rank_generating_polynomial(p);
  auto want = closed_polys(r.kind, r.n).rank_gen;
  if (got != want) return fail(r, "rank-generating polynomial differs", to_string(got));
  if (!reciprocal_check(got)) return fail(r, "rank-generating polynomial is not palindromic", to_string(got));
  r.detail = to_string(got);
  return r;
}

inline CheckResult weakiso(CheckResult r) {
  auto rep = weak_product_iso(r.kind, r.n);
  if (!rep.holds) return fail(r, rep.failure, "");
  if (!rep.is_lattice) return fail(r, "right weak order is not a lattice", "");
  if (!rep.is_complemented) return fail(r, "right weak order is not complemented", "");
  r.detail = std::to_string(rep.elements) + " elements";
  return r;
}

inline CheckResult selfdual(CheckResult r) {
  auto w = enumerate_wachs_A(r.n);
  auto p = bruhat_poset(w);
  const auto w0 = Permutation::longest(r.n);
  const int top = rank_lW(w0);
  std::vector<std::size_t> map;
  for (const auto& v : w) {
    auto image = v * w0;
    auto k = p.index_of(format(image));
    if (!k) return fail(r, "v w0 is not a Wachs permutation", format(v));
    if (rank_lW(image) != top - rank_lW(v)) return fail(r, "rank is not reversed", format(v));
    map.push_back(*k);
  }
  if (!dual_check(p, map)) return fail(r, "v -> v w0 is not order reversing", "");
  return r;
}

inline CheckResult statdist(CheckResult r) {
  if (!stats_distribution_check(r.n)) return fail(r, "distributions differ", "");
  return r;
}

inline CheckResult gi_stabilizer(CheckResult r) {
  auto g = stabilizer_GI(r.n);
  auto w = enumerate_wachs_A(r.n);
  if (g != w) return fail(r, "stabilizer differs from the Wachs set", "");
  r.detail = std::to_string(g.size()) + " elements";
  return r;
}

inline CheckResult nongraded_remark(CheckResult r) {
  const auto lo = parse_permutation("124365"), hi = parse_permutation("561234");
  std::vector<Permutation> elems;
  for (const auto& x : descent_class(6, singleton(1)))
    if (is_wachs(x) && bruhat_leq_A(lo, x) && bruhat_leq_A(x, hi)) elems.push_back(x);
  auto p = bruhat_poset(elems);
  auto g = grade(p);
  if (g.graded) return fail(r, "interval is graded", "");
  std::string a, b;
  for (auto x : g.witness->long_chain) a += (a.empty() ? "" : " < ") + p.label(x);
  for (auto x : g.witness->short_chain) b += (b.empty() ? "" : " < ") + p.label(x);
  r.detail = std::to_string(elems.size()) + " elements";
  r.witness = a + " | " + b;
  return r;
}

inline CheckResult nongraded_weak_left(CheckResult r) {
  auto p = r.kind == Kind::A ? weak_poset(enumerate_wachs_A(r.n), Side::Left)
                             : weak_poset(enumerate_wachs_B(r.n), Side::Left);
  auto g = grade(p);
  if (g.graded) return fail(r, "left weak order is graded", "");
  std::string a, b;
  for (auto x : g.witness->long_chain) a += (a.empty() ? "" : " < ") + p.label(x);
  for (auto x : g.witness->short_chain) b += (b.empty() ? "" : " < ") + p.label(x);
  r.witness = a + " | " + b;
  return r;
}

template <typename Elem>
CheckResult mobius_range(CheckResult r) {
  auto w = wachs_elements<Elem>(r.kind, r.n);
  auto p = bruhat_poset(w);
  MobiusTable mu(p);
  for (std::size_t u = 0; u < w.size(); ++u) {
    const auto& row = mu.row(u);
    for (std::size_t v = 0; v < w.size(); ++v)
      if (row[v] < -1 || row[v] > 1)
        return fail(r, "mu = " + std::to_string(row[v]), format(w[u]) + " " + format(w[v]));
  }
  r.detail = std::to_string(w.size()) + " elements";
  return r;
}

inline CheckResult lattice_left_odd(CheckResult r) {
  auto p = weak_poset(enumerate_wachs_A(r.n), Side::Left);
  auto rep = lattice_checks(p, false);
  if (!rep.is_lattice) {
    std::string wit;
    if (rep.witness) wit = p.label(rep.witness->first) + " " + p.label(rep.witness->second);
    return fail(r, "no meet or join", wit);
  }
  r.detail = std::to_string(p.size()) + " elements";
  return r;
}

/// n in [lo, hi] with the parity of lo.
inline std::vector<int> same_parity_sizes(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; n += 2) v.push_back(n);
  return v;
}

/// A single fixed instance, run whenever the range reaches it.
inline std::function<std::vector<int>(int)> fixed_size(int n) {
  return [n](int max_n) { return max_n >= n ? std::vector<int>{n} : std::vector<int>{}; };
}

}  // namespace checks

/// All registered checks in report order.
inline const std::vector<CheckSpec>& check_registry() {
  using namespace checks;
  static const std::vector<CheckSpec> registry = [] {
    std::vector<CheckSpec> v;
    auto both = [&](const std::string& stem, auto run_a, auto run_b) {
      v.push_back({stem + "-A", CheckFamily::Theorem, Kind::A, 1, 8,
                   [](int hi) { return all_sizes(1, hi); }, run_a});
      v.push_back({stem + "-B", CheckFamily::Theorem, Kind::B, 1, 6,
                   [](int hi) { return all_sizes(1, hi); }, run_b});
    };
    auto with = [](Kind k, const char* id, auto f) {
      return [k, id, f](int n) {
        CheckResult r;
        r.id = id;
        r.kind = k;
        r.n = n;
        return f(r);
      };
    };
    both("graded", with(Kind::A, "graded-A", graded<Permutation>),
         with(Kind::B, "graded-B", graded<SignedPermutation>));
    both("order", with(Kind::A, "order-A", order<Permutation>),
         with(Kind::B, "order-B", order<SignedPermutation>));
    both("covers", with(Kind::A, "covers-A", checks::covers<Permutation>),
         with(Kind::B, "covers-B", checks::covers<SignedPermutation>));
    both("mobius", with(Kind::A, "mobius-A", mobius_values<Permutation>),
         with(Kind::B, "mobius-B", mobius_values<SignedPermutation>));
    both("charpoly", with(Kind::A, "charpoly-A", checks::charpoly<Permutation>),
         with(Kind::B, "charpoly-B", checks::charpoly<SignedPermutation>));
    both("rankpoly", with(Kind::A, "rankpoly-A", rankpoly<Permutation>),
         with(Kind::B, "rankpoly-B", rankpoly<SignedPermutation>));
    both("weakiso", with(Kind::A, "weakiso-A", weakiso), with(Kind::B, "weakiso-B", weakiso));
    v.push_back({"selfdual-A", CheckFamily::Theorem, Kind::A, 1, 8,
                 [](int hi) { return all_sizes(1, hi); }, with(Kind::A, "selfdual-A", selfdual)});
    v.push_back({"statdist-A", CheckFamily::Theorem, Kind::A, 2, 8,
                 [](int hi) { return same_parity_sizes(2, hi); },
                 with(Kind::A, "statdist-A", statdist)});
    v.push_back({"gi-stabilizer", CheckFamily::Theorem, Kind::A, 2, 8,
                 [](int hi) { return same_parity_sizes(2, hi); },
                 with(Kind::A, "gi-stabilizer", gi_stabilizer)});
    v.push_back({"nongraded-remark", CheckFamily::Theorem, Kind::A, 6, 8, fixed_size(6),
                 with(Kind::A, "nongraded-remark", nongraded_remark)});
    // one instance in each type; the B one is sized for the B cap
    v.push_back({"nongraded-weakL", CheckFamily::Theorem, Kind::A, 5, 8, fixed_size(5),
                 with(Kind::A, "nongraded-weakL", nongraded_weak_left)});
    v.push_back({"nongraded-weakL", CheckFamily::Theorem, Kind::B, 3, 6, fixed_size(3),
                 with(Kind::B, "nongraded-weakL", nongraded_weak_left)});
    v.push_back({"mobiusA", CheckFamily::Conjecture, Kind::A, 1, 8,
                 [](int hi) { return all_sizes(1, hi); },
                 with(Kind::A, "mobiusA", mobius_range<Permutation>)});
    v.push_back({"mobiusB", CheckFamily::Conjecture, Kind::B, 1, 6,
                 [](int hi) { return all_sizes(1, hi); },
                 with(Kind::B, "mobiusB", mobius_range<SignedPermutation>)});
    v.push_back({"latticeAodd", CheckFamily::Conjecture, Kind::A, 3, 9,
                 [](int hi) { return same_parity_sizes(3, hi); },
                 with(Kind::A, "latticeAodd", lattice_left_odd)});
    return v;
  }();
  return registry;
}

/// The specs registered under an id in a family (two for nongraded-weakL).
inline std::vector<const CheckSpec*> find_checks(const std::string& id, CheckFamily family) {
  std::vector<const CheckSpec*> out;
  for (const auto& s : check_registry())
    if (s.id == id && s.family == family) out.push_back(&s);
  return out;
}

/// WACHS_THREADS if set to a positive integer, else the hardware count.
inline unsigned worker_count() {
  if (const char* env = std::getenv("WACHS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct CheckRequest {
  const CheckSpec* spec = nullptr;
  int max_n = 0;  ///< 0 selects the default cap
};

/// Expands requests into (check, n) tasks, enforcing caps unless allow_large.
/// Results come back in request order, then by n.
inline std::vector<CheckResult> run_checks(const std::vector<CheckRequest>& requests,
                                           bool allow_large = false, unsigned threads = 0) {
  struct Task {
    const CheckSpec* spec;
    int n;
  };
  std::vector<Task> tasks;
  for (const auto& req : requests) {
    const int max_n = req.max_n > 0 ? req.max_n : req.spec->default_cap;
    if (max_n > req.spec->default_cap && !allow_large)
      throw CapExceeded(req.spec->id + ": --max-n " + std::to_string(max_n) +
                        " is above the cap " + std::to_string(req.spec->default_cap) +
                        " (use --unsafe-large)");
    for (int n : req.spec->sizes(max_n)) tasks.push_back({req.spec, n});
  }
  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = tasks[k].spec->run(tasks[k].n);
      } catch (const std::exception& e) {
        r.id = tasks[k].spec->id;
        r.kind = tasks[k].spec->kind;
        r.n = tasks[k].n;
        r.status = Status::Fail;
        r.detail = std::string("error: ") + e.what();
      }
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
      results[k] = std::move(r);
    }
  };
  const unsigned count = std::min<std::size_t>(threads ? threads : worker_count(), tasks.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == Status::Fail; });
}

inline nlohmann::json to_json(const CheckResult& r, bool timings = true) {
  nlohmann::json j{{"id", r.id},
                   {"kind", to_string(r.kind)},
                   {"n", r.n},
                   {"status", to_string(r.status)},
                   {"detail", r.detail},
                   {"millis", timings ? r.millis : 0.0}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

inline nlohmann::json report_json(const std::vector<CheckResult>& results, bool timings = true) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) checks.push_back(to_json(r, timings));
  return {{"version", "1.0.0"}, {"checks", checks}};
}

}  // namespace wachs

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// `acceptance N` runs criterion N only.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanocone/cli.hpp"
#include "support/corpus.hpp"
#include "support/run.hpp"

using namespace fanocone;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  int failures = 0;

  void fail(const std::string& what) {
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + what;
    ok = false;
  }
};

struct Case {
  std::string name;
  ConePresentation p;
  bool weighted = false;
  WeightedAction w;
};

std::string tuple_name(const std::vector<std::int64_t>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::vector<Case> weighted_cases() {
  std::vector<Case> out;
  for (const auto& w : corpus::weighted()) out.push_back({tuple_name(w.a), from_weighted_action(w), true, w});
  return out;
}

std::vector<Case> hand_built_cases() {
  std::vector<Case> out;
  for (const auto& q : corpus::quotient_cases())
    out.push_back({tuple_name(q.a) + "/" + std::to_string(q.d), from_weighted_quotient({q.a}, q.d), false, {}});
  int i = 0;
  for (auto& p : corpus::extra_presentations()) out.push_back({"extra" + std::to_string(i++), std::move(p), false, {}});
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int passed = 0;
int failed = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << title;
  if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
  std::cout << "\n";
  (o.ok ? passed : failed)++;
}

std::map<Rational, std::int64_t> as_rational(const std::map<std::int64_t, std::int64_t>& m) {
  std::map<Rational, std::int64_t> out;
  for (auto [d, r] : m) out[Rational(d)] = r;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  auto want = [&](int id) { return only == 0 || only == id; };

  const auto weighted = weighted_cases();
  const auto hand = hand_built_cases();
  std::vector<Case> all = weighted;
  all.insert(all.end(), hand.begin(), hand.end());

  if (want(1)) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& c : weighted)
      if (minimal_discrepancy(c.p).md != Rational(c.p.n - 1)) o.fail(c.name);
    double s = seconds_since(t0);
    if (s >= 5.0) o.fail("runtime " + std::to_string(s) + " s");
    std::ostringstream d;
    d << weighted.size() << " weight vectors, " << s << " s";
    if (o.ok) o.detail = d.str();
    report(1, "md = n - 1 for weighted C^n", o);
  }

  if (want(2)) {
    Outcome o;
    int quotient_md0 = 0;
    for (const auto& c : all) {
      Rational md = minimal_discrepancy(c.p).md;
      if (Rational(2) * md != inf_lsft(c.p)) o.fail(c.name + ": 2 md != inf lSFT");
      if (c.p.r == Rational(1) && md == Rational(0)) ++quotient_md0;
      for (const auto& ch : c.p.charts)
        for (std::int64_t k = 1; k < ch.m; ++k)
          if (!(Rational(-2) < index_of_family_chart(ch, k, 0, c.p.r, c.p.r, c.p.n).lsft))
            o.fail(c.name + ": lSFT <= -2");
      for (const auto& f : enumerate_families(c.p, Rational(3)))
        if (!(Rational(-2) < f.lsft)) o.fail(c.name + ": family lSFT <= -2");
    }
    if (hand.size() < 20) o.fail("only " + std::to_string(hand.size()) + " hand-built presentations");
    if (quotient_md0 == 0) o.fail("no r = 1 presentation with md = 0");
    if (o.ok)
      o.detail = std::to_string(all.size()) + " presentations (" + std::to_string(hand.size()) + " hand-built, " +
                 std::to_string(quotient_md0) + " with r = 1, md = 0)";
    report(2, "2 md = inf lSFT > -2", o);
  }

  if (want(3)) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    int count = 0;
    auto check = [&](const ConePresentation& p, const std::string& name, std::int64_t depth) {
      SHProfile sh = degenerate_ranks(assemble_e1(p, Rational(depth)));
      if (!sh.degenerate) o.fail(name + ": mixed Z2 grades");
      if (sh.ranks != as_rational(expected_sh_homology_ball(p.n, depth))) o.fail(name + ": ranks differ");
      ++count;
    };
    for (const auto& w : corpus::weighted(2, 3, 8))
      if (corpus::pairwise_coprime(w.a)) check(from_weighted_action(w), tuple_name(w.a), 4 * w.size() + 2);
    for (auto a : std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {2, 1}, {1, 1, 2}, {3, 2}})
      check(from_weighted_action({a}), tuple_name(a), 4 * static_cast<std::int64_t>(a.size()) + 2);
    check(from_weighted_action({{3, 2}}), "(3,2) to 21", 21);
    double s = seconds_since(t0);
    if (s >= 5.0) o.fail("runtime " + std::to_string(s) + " s");
    if (o.ok) o.detail = std::to_string(count) + " tables, " + std::to_string(s) + " s";
    report(3, "SH table of homology-ball fillings", o);
  }

  if (want(4)) {
    Outcome o;
    for (const auto& c : all) {
      Rational lsft = inf_lsft(c.p);
      Rational expected_min = lsft - Rational(c.p.n - 3);
      SHProfile sh = certify_min_degree(assemble_e1(c.p, expected_min + Rational(1)));
      if (sh.min_degree + Rational(c.p.n - 3) != lsft) o.fail(c.name + ": min degree + n - 3 != inf lSFT");
      if (!sh.certified) o.fail(c.name + ": survivor not certified");
    }
    if (o.ok) o.detail = std::to_string(all.size()) + " presentations";
    report(4, "min SH degree + n - 3 = inf lSFT", o);
  }

  if (want(5)) {
    Outcome o;
    int families = 0;
    for (const auto& c : weighted) {
      for (const auto& m : compare_engines(c.w, Rational(3))) o.fail(c.name + " " + m);
      families += static_cast<int>(enumerate_families(c.p, Rational(3)).size());
    }
    if (o.ok) o.detail = std::to_string(families) + " families";
    report(5, "chart and weighted index engines agree", o);
  }

  if (want(6)) {
    Outcome o;
    int grid = 0;
    for (std::int64_t p = -12; p <= 12; ++p)
      for (std::int64_t q = 1; q <= 4; ++q)
        for (std::int64_t tn = 1; tn <= 9; ++tn)
          for (std::int64_t td = 1; td <= 3; ++td) {
            Rational rho(p, q), T(tn, td);
            if (rs_crossing_oracle({{rho}, T}) != rs_index_factor(rho, T)) o.fail(rho.str() + " over " + T.str());
            Rational turns = rho * T;
            Rational closed = turns.is_integer() ? turns * 2 : Rational(2 * turns.floor() + 1);
            if (closed != rs_index_factor(rho, T)) o.fail("closed form " + rho.str() + " over " + T.str());
            ++grid;
          }
    std::mt19937_64 rng(20261017);
    std::uniform_int_distribution<int> dim(1, 5), num(-20, 20), den(1, 8), tnum(1, 16);
    std::vector<DiagonalPath> paths;
    for (int i = 0; i < 1000; ++i) {
      DiagonalPath path{{}, Rational(tnum(rng), den(rng))};
      int d = dim(rng);
      for (int j = 0; j < d; ++j) path.speeds.emplace_back(num(rng), den(rng));
      paths.push_back(std::move(path));
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      std::vector<DiagonalPath> pair{paths[i], paths[(i + 1) % paths.size()]};
      for (const auto& f : check_axioms(pair)) o.fail(f);
    }
    if (grid < 200) o.fail("grid has only " + std::to_string(grid) + " pairs");
    if (o.ok) o.detail = std::to_string(grid) + " grid pairs, " + std::to_string(paths.size()) + " random paths";
    report(6, "RS normalization and axioms", o);
  }

  if (want(7)) {
    Outcome o;
    int families = 0;
    int integral = 0;
    for (const auto& c : all) {
      const Rational R = reeb_ratio(c.p).value;
      for (std::int64_t ell = 1; ell <= 4; ++ell) {
        const Rational want = Rational(2 * ell) * R;
        if (principal_indices(ell, R, c.p.n).rs != want) o.fail(c.name + ": principal rs");
        // Independently: ell full turns of the weighted circle on C^n.
        if (c.weighted && index_of_family_weighted(c.w, 1, 0, ell).rs != want) o.fail(c.name + ": weighted rs");
      }
      auto fam = enumerate_families(c.p, Rational(3));
      std::map<std::tuple<std::int64_t, std::int64_t, std::string>, Rational> base;
      for (const auto& f : fam)
        if (f.ell == 0) base[{f.isotropy_order, f.k, f.component_id}] = f.rs;
      for (const auto& f : fam) {
        ++families;
        if (f.z2 != (c.p.n - 1) % 2) o.fail(c.name + ": Z2 grade");
        // On C^n the trivialization is global and lcz is an integer of that parity.
        if (c.weighted) {
          ++integral;
          if (!f.lcz.is_integer() || mod_floor(f.lcz.num(), 2) != f.z2) o.fail(c.name + ": lcz parity");
        }
        if (f.principal()) continue;
        auto it = base.find({f.isotropy_order, f.k, f.component_id});
        if (it == base.end() || f.rs - it->second != Rational(2 * f.ell) * R) o.fail(c.name + ": period shift");
      }
    }
    if (o.ok) o.detail = std::to_string(families) + " families (lcz parity checked on " + std::to_string(integral) + " weighted ones)";
    report(7, "orbit structure", o);
  }

  if (want(8)) {
    Outcome o;
    const std::vector<std::vector<std::int64_t>> vectors = {{1, 1},    {2, 1},       {3, 2},    {1, 1, 1},
                                                            {1, 1, 2}, {1, 2, 3},    {2, 3, 5}, {1, 1, 1, 1},
                                                            {1, 2, 2, 3}, {4, 3, 2, 1}, {5, 7}, {1, 1, 1, 2, 3}};
    for (const auto& a : vectors) {
      const int n = static_cast<int>(a.size());
      std::int64_t prod = 1;
      for (auto x : a) prod *= x;
      GradedGroup table = wps_cohomology_table({a}, 4 * n);
      for (int k = 0; k <= 4 * n; ++k) {
        std::string want = k % 2 ? "0" : k <= 2 * n - 2 ? "Z" : prod == 1 ? "0" : "Z_" + std::to_string(prod);
        if (table[static_cast<std::size_t>(k)].str() != want)
          o.fail(tuple_name(a) + " H^" + std::to_string(k) + " = " + table[static_cast<std::size_t>(k)].str());
      }
    }
    if (o.ok) o.detail = std::to_string(vectors.size()) + " weight vectors";
    report(8, "weighted projective cohomology", o);
  }

  if (want(9)) {
    Outcome o;
    int equal = 0;
    for (const auto& c : all) {
      ShokurovReport s = shokurov_check(c.p);
      if (!s.bound_holds) o.fail(c.name + ": md > n - 1");
      if (s.equality != c.weighted) o.fail(c.name + ": equality " + (s.equality ? "without" : "despite") + " smooth cone");
      equal += s.equality;
    }
    if (o.ok) o.detail = std::to_string(equal) + " equality cases, all weighted C^n";
    report(9, "md <= n - 1, equality exactly for C^n", o);
  }

  if (want(10)) {
    Outcome o;
    int inputs = 0;
    for (const auto& c : all) {
      io::InputDocument doc{c.name, c.weighted ? std::optional(c.w) : std::nullopt, c.p, c.weighted};
      std::string v0, r0;
      for (int rep = 0; rep < 3; ++rep) {
        auto v = cli::cmd_verify(doc);
        auto r = cli::cmd_report(doc, std::nullopt);
        if (rep == 0) {
          v0 = v.out + v.err;
          r0 = r.out + r.err;
        } else if (v.out + v.err != v0 || r.out + r.err != r0) {
          o.fail(c.name);
        }
      }
      ++inputs;
    }
    for (const auto& path : corpus::files()) {
      const std::string arg = "\"" + path.string() + "\"";
      for (const char* cmd : {"verify ", "report ", "verify --text ", "report --json "}) {
        auto first = run::cli(cmd + arg);
        if (first.code != 0) o.fail(path.filename().string() + ": exit " + std::to_string(first.code));
        for (int rep = 1; rep < 3; ++rep) {
          auto again = run::cli(cmd + arg);
          if (again.out != first.out || again.code != first.code) o.fail(path.filename().string() + " " + cmd);
        }
      }
      ++inputs;
    }
    if (o.ok) o.detail = std::to_string(inputs) + " inputs, 3 runs each";
    report(10, "deterministic verify and report", o);
  }

  std::cout << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

#pragma once

// Command implementations behind tools/fanocone.  Every command returns its
// full output and an exit code (0 success, 1 identity failure, 2 input
// error); nothing is printed until the command has finished.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fanocone/cone_model.hpp"
#include "fanocone/discrepancy.hpp"
#include "fanocone/json_io.hpp"
#include "fanocone/orb_topology.hpp"
#include "fanocone/rational.hpp"
#include "fanocone/reeb_orbits.hpp"
#include "fanocone/ss_engine.hpp"
#include "fanocone/sympath_index.hpp"

namespace fanocone::cli {

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kInputError = 2 };

enum class Format { Json, Text };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

struct VerificationReport {
  int n = 0;
  Rational r;
  std::int64_t N = 1;
  std::size_t strata = 0;
  std::size_t charts = 0;
  bool weighted = false;

  Rational md;
  Rational inf_lsft;
  Rational sh_min_degree;
  bool survivor_certified = false;
  bool thm13_holds = false;     // 2 md = inf lSFT = min SH degree + n - 3
  bool thm14_scenario = false;  // md = n - 1
  bool shokurov_ok = false;
  bool engines_agree = true;
  bool engines_compared = false;
  std::vector<std::string> engine_mismatches;
};

inline VerificationReport verify(const io::InputDocument& doc) {
  const ConePresentation& p = doc.presentation;
  VerificationReport v;
  v.n = p.n;
  v.r = p.r;
  v.N = isotropy_lcm(p);
  v.strata = p.strata.size();
  v.charts = p.charts.size();
  v.weighted = doc.weights.has_value();

  v.md = minimal_discrepancy(p).md;
  v.inf_lsft = inf_lsft(p);
  const Rational expected_min = v.inf_lsft - Rational(p.n - 3);
  const SHProfile sh = certify_min_degree(assemble_e1(p, expected_min + Rational(1)));
  v.sh_min_degree = sh.min_degree;
  v.survivor_certified = sh.certified;

  v.thm13_holds = Rational(2) * v.md == v.inf_lsft && v.inf_lsft == v.sh_min_degree + Rational(p.n - 3) &&
                  v.survivor_certified;
  v.thm14_scenario = v.md == Rational(p.n - 1);
  v.shokurov_ok = shokurov_check(p).bound_holds;
  if (doc.weights) {
    v.engines_compared = true;
    v.engine_mismatches = compare_engines(*doc.weights, Rational(3));
    v.engines_agree = v.engine_mismatches.empty();
  }
  return v;
}

inline io::Json to_json(const VerificationReport& v) {
  io::Json out;
  out["presentation"] = io::Json{{"kind", v.weighted ? "weighted_action" : "presentation"},
                                 {"n", v.n},
                                 {"r", v.r.str()},
                                 {"N", v.N},
                                 {"strata", v.strata},
                                 {"charts", v.charts}};
  out["md"] = v.md.str();
  out["inf_lsft"] = v.inf_lsft.str();
  out["sh_min_degree"] = v.sh_min_degree.str();
  out["survivor_certified"] = v.survivor_certified;
  out["thm13_holds"] = v.thm13_holds;
  out["thm14_scenario"] = v.thm14_scenario;
  out["shokurov_ok"] = v.shokurov_ok;
  out["engines_compared"] = v.engines_compared;
  out["engines_agree"] = v.engines_agree;
  if (!v.engine_mismatches.empty()) out["engine_mismatches"] = v.engine_mismatches;
  return out;
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

template <typename Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const io::InputError& e) {
    return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const std::overflow_error& e) {
    return {kInputError, "", std::string("arithmetic overflow: ") + e.what() + "\n"};
  }
}

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  bool empty() const { return rows_.size() == 1; }

  std::string str(const std::string& indent = "  ") const {
    std::vector<std::size_t> width(rows_[0].size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    std::ostringstream os;
    for (const auto& r : rows_) {
      std::string line = indent;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << line << "\n";
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string signature(const FamilySignature& s) {
  return "(" + std::to_string(s.isotropy_order) + "," + std::to_string(s.k) + "," + std::to_string(s.ell) + "," +
         s.component_id + ")";
}

inline std::string families_text(const std::vector<OrbitFamily>& families) {
  Table t({"|G|", "k", "l", "component", "period", "dim", "rs", "lcz", "lsft"});
  for (const auto& f : families)
    t.add({std::to_string(f.isotropy_order), std::to_string(f.k), std::to_string(f.ell), f.component_id,
           f.period.str(), std::to_string(f.stratum_dim), f.rs.str(), f.lcz.str(), f.lsft.str()});
  return t.empty() ? "  (none)\n" : t.str();
}

inline std::string e1_text(const E1Page& page) {
  Table t({"degree", "p", "z2", "rank", "j", "source"});
  for (const auto& [key, list] : page.entries)
    for (const auto& c : list)
      t.add({key.degree.str(), std::to_string(key.p), std::to_string(key.z2), std::to_string(c.rank),
             std::to_string(c.j), signature(c.source)});
  return t.empty() ? "  (empty)\n" : t.str();
}

inline std::string discrepancy_text(const DiscrepancyResult& d) {
  std::ostringstream os;
  os << "minimal discrepancy: " << d.md << (d.capped_by_r ? " (attained by r - 1)" : "") << "\n";
  if (!d.klt) os << "  " << d.diagnosis << "\n";
  for (const auto& m : d.minimizers) os << "  minimizer: chart " << m.chart_label << ", k = " << m.k << "\n";
  return os.str();
}

inline std::string sh_text(const SHProfile& sh) {
  std::ostringstream os;
  os << "SH profile: min degree " << sh.min_degree << ", survivor " << (sh.certified ? "certified" : "NOT certified")
     << " at p = " << sh.survivor_p << " from " << signature(sh.survivor) << "\n";
  for (const auto& o : sh.obstructions) os << "  obstruction: " << o << "\n";
  if (sh.degenerate) {
    os << "  single Z2 grade: E1 = E-infinity\n";
    for (const auto& [deg, rank] : sh.ranks) os << "  degree " << deg << ": rank " << rank << "\n";
  } else {
    os << "  mixed Z2 grades: ranks beyond the minimal degree are not determined\n";
  }
  return os.str();
}

inline std::vector<OrbitFamily> families_below(const ConePresentation& p, const Rational& max_degree) {
  std::vector<OrbitFamily> out;
  for (auto& f : enumerate_families(p, period_bound(p, max_degree)))
    if (f.lcz <= max_degree) out.push_back(std::move(f));
  return out;
}

}  // namespace detail

inline CommandResult cmd_md(const io::InputDocument& doc, Format fmt = Format::Json) {
  return detail::guarded([&]() -> CommandResult {
    auto d = minimal_discrepancy(doc.presentation);
    if (fmt == Format::Text) return {kOk, detail::discrepancy_text(d), ""};
    return {kOk, detail::dump(io::to_json(d)), ""};
  });
}

inline CommandResult cmd_orbits(const io::InputDocument& doc, const Rational& max_period, Format fmt = Format::Json) {
  return detail::guarded([&]() -> CommandResult {
    auto families = enumerate_families(doc.presentation, max_period);
    if (fmt == Format::Text) return {kOk, detail::families_text(families), ""};
    io::Json arr = io::Json::array();
    for (const auto& f : families) arr.push_back(io::to_json(f));
    return {kOk, detail::dump(arr), ""};
  });
}

inline CommandResult cmd_cz(const std::vector<Rational>& speeds, const Rational& duration, Format fmt = Format::Json) {
  return detail::guarded([&]() -> CommandResult {
    DiagonalPath path{speeds, duration};
    IndexBundle b = index_bundle(path);
    Rational oracle = rs_crossing_oracle(path);
    if (fmt == Format::Text) {
      std::ostringstream os;
      os << "rs " << b.rs << "\nlcz " << b.lcz << "\nkernel_half_dim " << b.kernel_half_dim << "\nz2 "
         << (b.z2 ? std::to_string(*b.z2) : "undefined") << "\ncrossing count " << oracle << "\n";
      return {kOk, os.str(), ""};
    }
    io::Json j = io::to_json(b);
    j["crossing_rs"] = oracle.str();
    return {kOk, detail::dump(j), ""};
  });
}

inline CommandResult cmd_e1(const io::InputDocument& doc, const Rational& max_degree, Format fmt = Format::Json) {
  return detail::guarded([&]() -> CommandResult {
    E1Page page = assemble_e1(doc.presentation, max_degree);
    if (fmt == Format::Text) return {kOk, detail::e1_text(page), ""};
    return {kOk, detail::dump(io::to_json(page)), ""};
  });
}

// Page depth used when none is requested: 4n + 2, or two past the minimal
// degree if that is higher.
inline Rational default_max_degree(const ConePresentation& p) {
  Rational min_degree = inf_lsft(p) - Rational(p.n - 3);
  return max(Rational(4 * p.n + 2), min_degree + Rational(2));
}

inline CommandResult cmd_shmin(const io::InputDocument& doc, std::optional<Rational> max_degree,
                               Format fmt = Format::Json) {
  return detail::guarded([&]() -> CommandResult {
    Rational depth = max_degree ? *max_degree : default_max_degree(doc.presentation);
    SHProfile sh = degenerate_ranks(assemble_e1(doc.presentation, depth));
    if (fmt == Format::Text) return {kOk, detail::sh_text(sh), ""};
    io::Json j = io::to_json(sh);
    j["max_degree"] = depth.str();
    return {kOk, detail::dump(j), ""};
  });
}

inline CommandResult cmd_wps_cohomology(const WeightedAction& w, int max_degree, Format fmt = Format::Json) {
  return detail::guarded([&]() -> CommandResult {
    if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
    GradedGroup table = wps_cohomology_table(w, max_degree);
    std::int64_t index = fano_index_wps(w);
    if (fmt == Format::Text) {
      std::ostringstream os;
      os << "Fano index " << index << "\n";
      for (std::size_t k = 0; k < table.size(); ++k) os << "  H^" << k << " = " << table[k].str() << "\n";
      return {kOk, os.str(), ""};
    }
    io::Json groups = io::Json::array();
    for (std::size_t k = 0; k < table.size(); ++k) groups.push_back(io::Json{{"degree", k}, {"group", table[k].str()}});
    return {kOk, detail::dump(io::Json{{"weights", w.a}, {"fano_index", index}, {"groups", groups}}), ""};
  });
}

inline CommandResult cmd_verify(const io::InputDocument& doc, Format fmt = Format::Json) {
  return detail::guarded([&]() -> CommandResult {
    VerificationReport v = verify(doc);
    int code = v.thm13_holds ? kOk : kIdentityFailure;
    std::string err = v.thm13_holds ? "" : "identity 2 md = inf lSFT = min SH degree + n - 3 FAILED\n";
    if (fmt == Format::Json) return {code, detail::dump(to_json(v)), err};
    std::ostringstream os;
    os << "n = " << v.n << ", r = " << v.r << ", N = " << v.N << "\n"
       << "md                 " << v.md << "\n"
       << "inf lSFT           " << v.inf_lsft << "\n"
       << "min SH degree      " << v.sh_min_degree << (v.survivor_certified ? " (certified)" : " (not certified)") << "\n"
       << "2 md = inf lSFT = min SH degree + n - 3: " << detail::yes_no(v.thm13_holds) << "\n"
       << "md = n - 1: " << detail::yes_no(v.thm14_scenario) << "\n"
       << "md <= n - 1: " << detail::yes_no(v.shokurov_ok) << "\n";
    if (v.engines_compared) os << "index engines agree: " << detail::yes_no(v.engines_agree) << "\n";
    for (const auto& m : v.engine_mismatches) os << "  " << m << "\n";
    return {code, os.str(), err};
  });
}

inline CommandResult cmd_report(const io::InputDocument& doc, std::optional<Rational> max_degree,
                                Format fmt = Format::Text) {
  return detail::guarded([&]() -> CommandResult {
    const ConePresentation& p = doc.presentation;
    const Rational depth = max_degree ? *max_degree : Rational(4 * p.n + 2);
    const DiscrepancyResult d = minimal_discrepancy(p);
    const auto families = detail::families_below(p, depth);
    const E1Page page = assemble_e1(p, depth);
    std::optional<SHProfile> sh;
    if (!page.empty()) sh = degenerate_ranks(page);

    std::optional<std::map<std::int64_t, std::int64_t>> expected;
    bool matches = false;
    if (doc.homology_sphere_link) {
      expected = expected_sh_homology_ball(p.n, depth.floor());
      std::map<Rational, std::int64_t> want;
      for (auto [deg, rank] : *expected) want[Rational(deg)] = rank;
      matches = sh && sh->degenerate && sh->ranks == want;
      if (!sh) matches = want.empty();
    }

    if (fmt == Format::Json) {
      io::Json j;
      if (!doc.name.empty()) j["name"] = doc.name;
      j["n"] = p.n;
      j["r"] = p.r.str();
      j["N"] = isotropy_lcm(p);
      j["max_degree"] = depth.str();
      j["discrepancy"] = io::to_json(d);
      io::Json fam = io::Json::array();
      for (const auto& f : families) fam.push_back(io::to_json(f));
      j["families"] = std::move(fam);
      j["e1"] = io::to_json(page)["entries"];
      j["sh"] = sh ? io::to_json(*sh) : io::Json(nullptr);
      if (expected) {
        io::Json e = io::Json::object();
        for (auto [deg, rank] : *expected) e[std::to_string(deg)] = rank;
        j["expected_homology_ball"] = std::move(e);
        j["matches_expected"] = matches;
      }
      return {kOk, detail::dump(j), ""};
    }

    std::ostringstream os;
    if (!doc.name.empty()) os << doc.name << "\n";
    os << "n = " << p.n << ", r = " << p.r << ", N = " << isotropy_lcm(p) << ", " << p.strata.size() << " strata, "
       << p.charts.size() << " charts\n\n";
    os << detail::discrepancy_text(d) << "\n";
    os << "Reeb orbit families with lcz <= " << depth << ":\n" << detail::families_text(families) << "\n";
    os << "E1 page up to degree " << depth << ":\n" << detail::e1_text(page) << "\n";
    if (sh)
      os << detail::sh_text(*sh);
    else
      os << "SH profile: no classes up to degree " << depth << "\n";
    if (expected) {
      os << "\nexpected for a homology-ball filling:";
      if (expected->empty()) os << " (nothing up to this degree)";
      for (auto [deg, rank] : *expected) os << " " << deg;
      os << "\nmatches: " << detail::yes_no(matches) << "\n";
    }
    return {kOk, os.str(), ""};
  });
}

inline CommandResult cmd_export(const io::InputDocument& doc) {
  return {kOk, detail::dump(io::export_document(doc)), ""};
}

}  // namespace fanocone::cli

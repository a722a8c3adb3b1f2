// fanocone: command-line front end.
//
//   fanocone md FILE                     minimal discrepancy
//   fanocone orbits FILE --max-period P  Reeb orbit families
//   fanocone cz --speeds 1,1/2 --duration 3/2
//   fanocone e1 FILE --max-degree D      first page
//   fanocone shmin FILE                  minimal SH degree and ranks
//   fanocone wps-cohomology --weights 1,1,2 --max-degree 8
//   fanocone verify FILE                 identity checks (exit 1 on failure)
//   fanocone report FILE                 human-readable summary
//   fanocone export FILE                 presentation form of the input
//
// FILE may be "-" for stdin.  Exit codes: 0 ok, 1 identity failure, 2 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fanocone/cli.hpp"

namespace {

using fanocone::Rational;
namespace cli = fanocone::cli;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fanocone::io::InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int emit(const cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  std::cout.flush();
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of Fano cone singularities"};
  app.require_subcommand(1);

  std::string file;
  bool text = false;
  bool json = false;
  std::string max_period = "3";
  std::string max_degree;
  std::string speeds;
  std::string duration;
  std::string weights;
  int wps_degree = 8;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", file, "input file, or - for stdin")->required();
    auto* t = sub->add_flag("--text", text, "plain-text output");
    sub->add_flag("--json", json, "JSON output")->excludes(t);
  };

  auto* md = app.add_subcommand("md", "minimal discrepancy");
  add_common(md);
  auto* orbits = app.add_subcommand("orbits", "Reeb orbit families up to a period");
  add_common(orbits);
  orbits->add_option("--max-period", max_period, "largest period (rational)");
  auto* cz = app.add_subcommand("cz", "indices of a diagonal path exp(2 pi i a t), t in [0,T]");
  cz->add_option("--speeds", speeds, "comma-separated rational speeds")->required();
  cz->add_option("--duration", duration, "T (rational)")->required();
  {
    auto* t = cz->add_flag("--text", text, "plain-text output");
    cz->add_flag("--json", json, "JSON output")->excludes(t);
  }
  auto* e1 = app.add_subcommand("e1", "E1 page up to a total degree");
  add_common(e1);
  e1->add_option("--max-degree", max_degree, "largest total degree (rational)")->required();
  auto* shmin = app.add_subcommand("shmin", "minimal SH degree, and ranks when the page degenerates");
  add_common(shmin);
  shmin->add_option("--max-degree", max_degree, "largest total degree (rational)");
  auto* wps = app.add_subcommand("wps-cohomology", "orbifold cohomology of P(w)");
  wps->add_option("--weights", weights, "comma-separated positive integers")->required();
  wps->add_option("--max-degree", wps_degree, "largest degree")->check(CLI::NonNegativeNumber);
  {
    auto* t = wps->add_flag("--text", text, "plain-text output");
    wps->add_flag("--json", json, "JSON output")->excludes(t);
  }
  auto* verify = app.add_subcommand("verify", "check 2 md = inf lSFT = min SH degree + n - 3");
  add_common(verify);
  auto* report = app.add_subcommand("report", "human-readable summary");
  add_common(report);
  report->add_option("--max-degree", max_degree, "largest total degree (rational), default 4n+2");
  auto* exp = app.add_subcommand("export", "presentation form of the input");
  exp->add_option("input", file, "input file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  auto fmt = [&](cli::Format dflt) {
    if (text) return cli::Format::Text;
    if (json) return cli::Format::Json;
    return dflt;
  };
  auto optional_degree = [&]() -> std::optional<Rational> {
    if (max_degree.empty()) return std::nullopt;
    return Rational::parse(max_degree);
  };

  try {
    if (*cz) return emit(cli::cmd_cz(parse_rational_list(speeds), Rational::parse(duration), fmt(cli::Format::Json)));
    if (*wps) {
      fanocone::WeightedAction w;
      for (const auto& q : parse_rational_list(weights)) {
        if (!q.is_integer()) throw std::invalid_argument("weights must be integers");
        w.a.push_back(q.num());
      }
      return emit(cli::cmd_wps_cohomology(w, wps_degree, fmt(cli::Format::Json)));
    }

    const auto doc = fanocone::io::parse_input_text(read_input(file));
    if (*md) return emit(cli::cmd_md(doc, fmt(cli::Format::Json)));
    if (*orbits) return emit(cli::cmd_orbits(doc, Rational::parse(max_period), fmt(cli::Format::Json)));
    if (*e1) return emit(cli::cmd_e1(doc, Rational::parse(max_degree), fmt(cli::Format::Json)));
    if (*shmin) return emit(cli::cmd_shmin(doc, optional_degree(), fmt(cli::Format::Json)));
    if (*verify) return emit(cli::cmd_verify(doc, fmt(cli::Format::Json)));
    if (*report) return emit(cli::cmd_report(doc, optional_degree(), fmt(cli::Format::Text)));
    if (*exp) return emit(cli::cmd_export(doc));
  } catch (const fanocone::io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const std::overflow_error& e) {
    std::cerr << "arithmetic overflow: " << e.what() << "\n";
    return cli::kInputError;
  }
  return cli::kInputError;
}

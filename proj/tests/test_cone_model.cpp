#include "catch_amalgamated.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanocone/cone_model.hpp"
#include "support/corpus.hpp"

using namespace fanocone;

namespace {

bool has_message(const ConePresentation& p, const std::string& needle) {
  auto v = validate_presentation(p);
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.message.find(needle) != std::string::npos; });
}

ConePresentation a1_like() { return corpus::extra_presentations().front(); }

}  // namespace

TEST_CASE("weighted action (3,2)") {
  auto p = from_weighted_action({{3, 2}});
  CHECK(p.n == 2);
  CHECK(p.r == Rational(5));
  REQUIRE(p.strata.size() == 3);
  CHECK(p.strata[0].isotropy_order == 1);
  CHECK(p.strata[0].component_id == "1,2");
  CHECK(p.strata[0].complex_dim == 1);
  CHECK(p.strata[0].betti == std::vector<std::int64_t>{1, 0, 1});
  CHECK(p.strata[1].isotropy_order == 2);
  CHECK(p.strata[1].component_id == "2");
  CHECK(p.strata[2].isotropy_order == 3);
  REQUIRE(p.charts.size() == 2);
  CHECK(p.charts[0] == ChartData{3, {1, 1}, "axis1"});
  CHECK(p.charts[1] == ChartData{2, {1, 1}, "axis2"});
  CHECK(isotropy_lcm(p) == 6);
  CHECK(validate_presentation(p).empty());
}

TEST_CASE("weighted action (1,1,2) has a trivial chart") {
  auto p = from_weighted_action({{1, 1, 2}});
  CHECK(p.r == Rational(4));
  REQUIRE(p.strata.size() == 2);
  CHECK(p.strata[1].isotropy_order == 2);
  CHECK(p.strata[1].complex_dim == 0);
  CHECK(p.charts[0] == ChartData{1, {0, 0, 0}, "axis1"});
  CHECK(p.charts[2] == ChartData{2, {1, 1, 1}, "axis3"});
}

TEST_CASE("weighted action (4,2,1) nests strata") {
  auto p = from_weighted_action({{4, 2, 1}});
  REQUIRE(p.strata.size() == 3);
  CHECK(p.strata[1].isotropy_order == 2);
  CHECK(p.strata[1].component_id == "1,2");
  CHECK(p.strata[1].complex_dim == 1);
  CHECK(p.strata[2].isotropy_order == 4);
  CHECK(p.strata[2].component_id == "1");
  CHECK(p.charts[0] == ChartData{4, {1, 2, 3}, "axis1"});
  // k = 2 in Z/4 is the order-2 rotation, which belongs to the larger stratum.
  CHECK(admissible_element(p, 4, 1));
  CHECK_FALSE(admissible_element(p, 4, 2));
  CHECK(admissible_element(p, 4, 3));
  CHECK(admissible_element(p, 2, 1));
  CHECK(validate_presentation(p).empty());
}

TEST_CASE("chart helpers") {
  ChartData c{5, {2, 1, 3}, "c"};
  CHECK(chart_weight(c, 0, 3) == 1);
  CHECK(chart_weight(c, 2, 3) == 4);
  CHECK(chart_weight(c, 1, 5) == 0);
  CHECK(chart_fixed_dim(c, 5) == 2);
  CHECK(chart_fixed_dim(c, 2) == 0);
  // k/|G| = 1/5 of a turn: w1 * k' = 1 mod 5, so k' = 3.
  CHECK(chart_element_for(c, 5, 1) == 3);
  CHECK_THROWS_AS(chart_element_for(c, 2, 1), std::invalid_argument);
}

TEST_CASE("quotient cone builder") {
  auto p = from_weighted_quotient({{2, 1}}, 3);
  CHECK(p.r == Rational(1));
  CHECK(p.charts[0] == ChartData{2, {1, 1}, "axis1"});
  auto q = from_weighted_quotient({{3, 2}}, 5);
  CHECK(q.r == Rational(1));
  CHECK(q.charts[0] == ChartData{3, {1, 2}, "axis1"});  // -2 * 5^{-1} = -4 = 2 mod 3
  CHECK_THROWS_AS(from_weighted_quotient({{2, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(from_weighted_quotient({{2, 1}}, 0), std::invalid_argument);
  for (const auto& c : corpus::quotient_cases()) CHECK(validate_presentation(from_weighted_quotient({c.a}, c.d)).empty());
}

TEST_CASE("hand-built presentations are valid") {
  for (const auto& p : corpus::extra_presentations()) CHECK(validate_presentation(p).empty());
}

TEST_CASE("weighted action input errors") {
  CHECK_THROWS_AS(from_weighted_action({{}}), std::invalid_argument);
  CHECK_THROWS_AS(from_weighted_action({{3}}), std::invalid_argument);
  CHECK_THROWS_AS(from_weighted_action({{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_weighted_action({{2, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_weighted_action({{2, 4}}), std::invalid_argument);
}

TEST_CASE("presentation validation") {
  auto p = a1_like();
  CHECK(validate_presentation(p).empty());

  auto r0 = p;
  r0.r = Rational(0);
  CHECK(has_message(r0, "Fano condition violated"));
  CHECK_THROWS_AS(require_valid(r0), InvalidPresentation);

  auto bad_gcd = p;
  bad_gcd.charts[0] = {4, {2, 1}, "c"};
  bad_gcd.strata[1].isotropy_order = 4;
  CHECK(has_message(bad_gcd, "gcd(m,w1) != 1"));

  auto no_principal = p;
  no_principal.strata.erase(no_principal.strata.begin());
  CHECK(has_message(no_principal, "no isotropy-1 stratum"));

  auto dangling = p;
  dangling.strata[1].chart_ref = "nowhere";
  CHECK(has_message(dangling, "does not resolve"));

  auto wrong_dim = p;
  wrong_dim.charts[0].weights = {1, 0};
  CHECK(has_message(wrong_dim, "fixes a 1-dimensional locus"));

  auto short_betti = p;
  short_betti.strata[0].betti = {1};
  CHECK(has_message(short_betti, "betti must have"));

  auto n1 = p;
  n1.n = 1;
  CHECK(has_message(n1, "complex dimension"));

  auto bad_divisor = p;
  bad_divisor.strata[1].isotropy_order = 3;
  CHECK(has_message(bad_divisor, "does not divide m"));
}

TEST_CASE("corpus generator") {
  auto all = corpus::weighted();
  CHECK(all.size() > 300);
  for (const auto& w : all) {
    CHECK(std::is_sorted(w.a.rbegin(), w.a.rend()));
    CHECK(w.a.front() <= 8);
  }
}

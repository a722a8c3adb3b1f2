#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fanocone/cone_model.hpp"
#include "fanocone/rational.hpp"

namespace fanocone {

struct Minimizer {
  std::string chart_label;
  std::int64_t k = 0;

  friend bool operator==(const Minimizer&, const Minimizer&) = default;
  friend auto operator<=>(const Minimizer&, const Minimizer&) = default;
};

struct DiscrepancyResult {
  Rational md;
  std::vector<Minimizer> minimizers;  // sorted by (chart label, k)
  bool capped_by_r = false;
  bool klt = true;
  std::string diagnosis;
};

// (1/m)(r w_1(k) + sum_{i>=2} w_i(k)) for every k = 1..m-1, computed directly
// from k w_i mod m.
inline std::vector<std::pair<std::int64_t, Rational>> discrepancy_oracle(const ChartData& chart, const Rational& r) {
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::int64_t k = 1; k < chart.m; ++k) {
    Rational value = r * Rational(chart_weight(chart, 0, k));
    for (std::size_t i = 1; i < chart.weights.size(); ++i) value += Rational(chart_weight(chart, i, k));
    out.emplace_back(k, value / Rational(chart.m));
  }
  return out;
}

/// md(o, C) = min over charts and nontrivial k of {r, (1/m)(r w_1(k) + sum w_i(k))} - 1.
/// The weights of g^k are advanced incrementally, one group element at a time.
inline DiscrepancyResult minimal_discrepancy(const ConePresentation& p) {
  require_valid(p);
  DiscrepancyResult out;
  Rational best = p.r;
  out.capped_by_r = true;

  for (const auto& chart : p.charts) {
    std::vector<std::int64_t> w(chart.weights.size(), 0);
    for (std::int64_t k = 1; k < chart.m; ++k) {
      std::int64_t base = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] += chart.weights[i];
        if (w[i] >= chart.m) w[i] -= chart.m;
        if (i > 0) base += w[i];
      }
      Rational value = (p.r * Rational(w[0]) + Rational(base)) / Rational(chart.m);
      if (value < best) {
        best = value;
        out.minimizers.clear();
        out.capped_by_r = false;
      }
      if (value == best) out.minimizers.push_back({chart.label, k});
    }
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  out.md = best - Rational(1);
  if (!(Rational(-1) < out.md)) {
    out.klt = false;
    out.diagnosis = "md <= -1: the vertex is not klt";
  }
  return out;
}

struct ShokurovReport {
  Rational md;
  int n = 0;
  bool bound_holds = false;  // md <= n - 1
  bool equality = false;
  std::string note;
};

inline ShokurovReport shokurov_check(const ConePresentation& p) {
  ShokurovReport out;
  out.md = minimal_discrepancy(p).md;
  out.n = p.n;
  Rational bound(p.n - 1);
  out.bound_holds = out.md <= bound;
  out.equality = out.md == bound;
  if (!out.bound_holds)
    out.note = "md exceeds n-1";
  else if (out.equality)
    out.note = "md = n-1: smoothness expected per Shokurov";
  return out;
}

}  // namespace fanocone

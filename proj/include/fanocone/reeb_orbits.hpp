#pragma once

// Morse-Bott families of closed Reeb orbits of the conic contact form and
// their indices.  The contact form is normalized so that the principal orbit
// has period 1; a family is labelled by (G, k, l, component) and has period
// l + k/|G|.
//
// Two index engines:
//  * chart engine: local quotient chart plus the trivialization anomaly
//    correction, giving lSFT = (2/m)(r w_1(k) + sum_{i>=2} w_i(k)) - 2;
//  * weighted engine: for C^n with a weighted action, sum the U(1)
//    normalization over the n ambient coordinates under the global
//    trivialization of C^n.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fanocone/cone_model.hpp"
#include "fanocone/rational.hpp"
#include "fanocone/sympath_index.hpp"

namespace fanocone {

struct OrbitFamily {
  std::int64_t isotropy_order = 1;
  std::int64_t k = 0;
  std::int64_t ell = 0;
  std::string component_id;
  Rational period;
  int stratum_dim = 0;
  Rational rs;
  Rational lcz;
  int z2 = 0;
  Rational lsft;

  bool principal() const { return isotropy_order == 1; }
};

struct ReebRatio {
  Rational value;
};

struct FamilyIndices {
  Rational rs;
  Rational lcz;
  Rational lsft;
  int stratum_dim = 0;

  friend bool operator==(const FamilyIndices&, const FamilyIndices&) = default;
};

// Chart-engine output.  The lsft_tau* fields depend on the local
// trivialization and are kept for cross-checks only; they are filled for
// non-principal elements.
struct ChartFamilyIndices : FamilyIndices {
  Rational lsft_tau;        // orbit of g^k in the chart trivialization (2n-4)
  Rational lsft_tau_cover;  // its m-fold cover in the same trivialization
  Rational lsft_cover;      // the m-fold cover in the global trivialization
  Rational lsft_corrected;  // lsft_tau + (lsft_cover - lsft_tau_cover)/m
};

inline FamilyIndices principal_indices(std::int64_t ell, const Rational& R, int n) {
  if (ell < 1) throw std::invalid_argument("principal family needs l >= 1");
  FamilyIndices out;
  out.stratum_dim = n - 1;
  out.rs = Rational(2 * ell) * R;
  out.lcz = out.rs - Rational(n - 1);
  out.lsft = out.lcz + Rational(n - 3);
  return out;
}

/// Indices of the family through the chart centre belonging to g^k, shifted
/// by l full turns.  k is reduced mod m, carrying whole turns into l; k = 0
/// is the principal family.
inline ChartFamilyIndices index_of_family_chart(const ChartData& chart, std::int64_t k, std::int64_t ell,
                                                const Rational& r, const Rational& R, int n) {
  if (chart.m < 1 || static_cast<int>(chart.weights.size()) != n || std::gcd(chart.m, chart.weights.at(0)) != 1)
    throw std::invalid_argument("chart " + chart.label + " is invalid");
  if (k < 0 || ell < 0) throw std::invalid_argument("k and l must be nonnegative");
  ell += k / chart.m;
  k %= chart.m;

  ChartFamilyIndices out;
  if (k == 0) {
    static_cast<FamilyIndices&>(out) = principal_indices(ell, R, n);
    return out;
  }

  const Rational m(chart.m);
  const std::int64_t w1 = chart_weight(chart, 0, k);
  Rational base;
  for (std::size_t i = 1; i < chart.weights.size(); ++i) base += Rational(chart_weight(chart, i, k));
  out.stratum_dim = chart_fixed_dim(chart, k);
  out.lsft = Rational(2) * (r * Rational(w1) + base) / m - Rational(2);
  out.lcz = out.lsft - Rational(n - 3);
  out.rs = out.lcz + Rational(out.stratum_dim);

  // Anomaly route: linearized flow diag((m - w_i)/m) on the base directions.
  DiagonalPath local{{}, Rational(1)};
  for (std::size_t i = 1; i < chart.weights.size(); ++i)
    local.speeds.push_back(Rational(chart.m - chart_weight(chart, i, k), chart.m));
  out.lsft_tau = index_bundle(local).lcz + Rational(n - 3);
  local.duration = m;
  out.lsft_tau_cover = index_bundle(local).lcz + Rational(n - 3);
  out.lsft_cover = principal_indices(w1, R, n).lsft;
  out.lsft_corrected = out.lsft_tau + (out.lsft_cover - out.lsft_tau_cover) / m;

  Rational shift = Rational(2 * ell) * R;
  out.rs += shift;
  out.lcz += shift;
  out.lsft += shift;
  return out;
}

/// Weighted engine: T = l + k/m, rs = sum_i mu_RS(exp(2 pi i a_i t), [0, T]),
/// stratum_dim = #{i : a_i T integer} - 1.
inline FamilyIndices index_of_family_weighted(const WeightedAction& w, std::int64_t isotropy_order, std::int64_t k,
                                              std::int64_t ell) {
  require_valid(w);
  if (isotropy_order < 1) throw std::invalid_argument("isotropy order must be >= 1");
  bool divides_some = false;
  for (auto a : w.a) divides_some = divides_some || a % isotropy_order == 0;
  if (!divides_some) throw std::invalid_argument("no coordinate axis has this isotropy");
  if (k < 0 || ell < 0) throw std::invalid_argument("k and l must be nonnegative");
  if (k % isotropy_order == 0 && ell + k / isotropy_order == 0) throw std::invalid_argument("k = 0 with l = 0 is not an orbit");

  DiagonalPath path{{}, Rational(ell) + Rational(k, isotropy_order)};
  for (auto a : w.a) path.speeds.emplace_back(a);
  IndexBundle b = index_bundle(path);

  FamilyIndices out;
  const int n = static_cast<int>(w.size());
  out.stratum_dim = b.kernel_half_dim - 1;
  out.rs = b.rs;
  out.lcz = out.rs - Rational(out.stratum_dim);
  out.lsft = out.lcz + Rational(n - 3);
  return out;
}

/// R(M), cross-checked against the principal family: its l = 1 member must
/// have lSFT = 2R - 2.
inline ReebRatio reeb_ratio(const ConePresentation& p) {
  require_valid(p);
  ReebRatio out{p.r};
  const ChartData trivial{1, std::vector<std::int64_t>(static_cast<std::size_t>(p.n), 0), "principal"};
  Rational via_chart = index_of_family_chart(trivial, 1, 0, p.r, out.value, p.n).lsft;
  if (via_chart != Rational(2) * out.value - Rational(2) || principal_indices(1, out.value, p.n).lsft != via_chart)
    throw std::logic_error("principal orbit lSFT disagrees with 2R - 2");
  return out;
}

namespace detail {

inline OrbitFamily make_family(const ConePresentation& p, const Stratum& s, std::int64_t k, std::int64_t ell,
                               const Rational& R) {
  OrbitFamily f;
  f.isotropy_order = s.isotropy_order;
  f.k = k;
  f.ell = ell;
  f.component_id = s.component_id;
  f.period = Rational(ell) + Rational(k, s.isotropy_order);
  FamilyIndices idx;
  if (s.principal()) {
    idx = principal_indices(ell, R, p.n);
  } else {
    const ChartData& c = *find_chart(p, s.chart_ref);
    idx = index_of_family_chart(c, chart_element_for(c, s.isotropy_order, k), ell, p.r, R, p.n);
  }
  f.stratum_dim = idx.stratum_dim;
  f.rs = idx.rs;
  f.lcz = idx.lcz;
  f.lsft = idx.lsft;
  f.z2 = (p.n - 1) % 2;
  return f;
}

}  // namespace detail

/// Every family with 0 < period <= max_period, sorted by
/// (period, isotropy order, component, k).
inline std::vector<OrbitFamily> enumerate_families(const ConePresentation& p, const Rational& max_period) {
  require_valid(p);
  if (max_period.sign() <= 0) throw std::invalid_argument("max_period must be > 0");
  const Rational R = reeb_ratio(p).value;
  std::vector<OrbitFamily> out;
  for (const auto& s : p.strata) {
    if (s.principal()) {
      for (std::int64_t ell = 1; Rational(ell) <= max_period; ++ell) out.push_back(detail::make_family(p, s, 0, ell, R));
      continue;
    }
    for (std::int64_t k = 1; k < s.isotropy_order; ++k) {
      if (!admissible_element(p, s.isotropy_order, k)) continue;
      for (std::int64_t ell = 0; Rational(ell) + Rational(k, s.isotropy_order) <= max_period; ++ell)
        out.push_back(detail::make_family(p, s, k, ell, R));
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitFamily& a, const OrbitFamily& b) {
    return std::tie(a.period, a.isotropy_order, a.component_id, a.k) <
           std::tie(b.period, b.isotropy_order, b.component_id, b.k);
  });
  return out;
}

/// inf over all Reeb orbits of lSFT: for R > 0 the l = 0 families and the
/// principal orbit suffice.
inline Rational inf_lsft(const ConePresentation& p) {
  require_valid(p);
  const Rational R = reeb_ratio(p).value;
  Rational best = Rational(2) * R - Rational(2);
  for (const auto& c : p.charts)
    for (std::int64_t k = 1; k < c.m; ++k) best = min(best, index_of_family_chart(c, k, 0, p.r, R, p.n).lsft);
  return best;
}

/// Compares the chart engine with the weighted engine on every family of the
/// weighted action with period <= max_period.  Returns the disagreements.
inline std::vector<std::string> compare_engines(const WeightedAction& w, const Rational& max_period) {
  const ConePresentation p = from_weighted_action(w);
  std::vector<std::string> out;
  for (const auto& f : enumerate_families(p, max_period)) {
    FamilyIndices weighted = index_of_family_weighted(w, f.isotropy_order, f.k, f.ell);
    FamilyIndices chart{f.rs, f.lcz, f.lsft, f.stratum_dim};
    std::string sig = "(|G|=" + std::to_string(f.isotropy_order) + ", k=" + std::to_string(f.k) +
                      ", l=" + std::to_string(f.ell) + ")";
    if (!(weighted == chart))
      out.push_back(sig + ": chart engine rs/lcz/lsft " + chart.rs.str() + "/" + chart.lcz.str() + "/" +
                    chart.lsft.str() + " vs weighted " + weighted.rs.str() + "/" + weighted.lcz.str() + "/" +
                    weighted.lsft.str());
    if (!weighted.lcz.is_integer() || mod_floor(weighted.lcz.num(), 2) != f.z2)
      out.push_back(sig + ": Z2 grade from weighted lcz differs from n-1 mod 2");
  }
  return out;
}

}  // namespace fanocone

#pragma once

// Combinatorial model of a quasi-regular Fano cone: the base orbifold is
// described by its isotropy strata and by cyclic quotient charts of the total
// space of the dual polarization.  Nothing here knows about metrics or contact
// forms; only weights, chart data and the Fano ratio r enter.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanocone/rational.hpp"

namespace fanocone {

// Cyclic quotient chart C x C^{n-1} / (1/m)(w_1, ..., w_n).  The first
// coordinate is the fiber direction.
struct ChartData {
  std::int64_t m = 1;
  std::vector<std::int64_t> weights;
  std::string label;

  friend bool operator==(const ChartData&, const ChartData&) = default;
};

struct Stratum {
  std::int64_t isotropy_order = 1;
  std::string component_id;
  int complex_dim = 0;
  std::vector<std::int64_t> betti;  // b_0 .. b_{2 complex_dim}
  std::string chart_ref;            // may be empty for the principal stratum

  bool principal() const { return isotropy_order == 1; }

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct ConePresentation {
  int n = 2;
  Rational r;
  std::vector<Stratum> strata;
  std::vector<ChartData> charts;

  friend bool operator==(const ConePresentation&, const ConePresentation&) = default;
};

// C^* acting on C^n by t.z = (t^{a_1} z_1, ..., t^{a_n} z_n).
struct WeightedAction {
  std::vector<std::int64_t> a;

  std::size_t size() const { return a.size(); }
  friend bool operator==(const WeightedAction&, const WeightedAction&) = default;
};

struct Violation {
  std::string locus;
  std::string message;

  std::string str() const { return locus + ": " + message; }
  friend bool operator==(const Violation&, const Violation&) = default;
};

class InvalidPresentation : public std::invalid_argument {
 public:
  explicit InvalidPresentation(std::vector<Violation> violations)
      : std::invalid_argument(summary(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string summary(const std::vector<Violation>& v) {
    std::string out = "invalid presentation";
    for (const auto& x : v) out += "; " + x.str();
    return out;
  }
  std::vector<Violation> violations_;
};

inline const ChartData* find_chart(const ConePresentation& p, const std::string& label) {
  for (const auto& c : p.charts)
    if (c.label == label) return &c;
  return nullptr;
}

inline const Stratum* principal_stratum(const ConePresentation& p) {
  for (const auto& s : p.strata)
    if (s.principal()) return &s;
  return nullptr;
}

// N = lcm of all isotropy orders.
inline std::int64_t isotropy_lcm(const ConePresentation& p) {
  std::int64_t n = 1;
  for (const auto& s : p.strata)
    if (s.isotropy_order > 0) n = checked_lcm(n, s.isotropy_order);
  return n;
}

// Weight of g^k on coordinate i, in [0, m).
inline std::int64_t chart_weight(const ChartData& c, std::size_t i, std::int64_t k) {
  __int128 v = static_cast<__int128>(k % c.m) * c.weights[i];
  return mod_floor(static_cast<std::int64_t>(v % c.m), c.m);
}

// Number of base directions fixed by g^k, i.e. #{i >= 2 : w_i(k) = 0}.
inline int chart_fixed_dim(const ChartData& c, std::int64_t k) {
  int dim = 0;
  for (std::size_t i = 1; i < c.weights.size(); ++i)
    if (chart_weight(c, i, k) == 0) ++dim;
  return dim;
}

// The chart element whose orbit through the chart centre has period k/|G|
// (mod 1).  Needs |G| | m and gcd(w_1, m) = 1.
inline std::int64_t chart_element_for(const ChartData& c, std::int64_t isotropy_order, std::int64_t k) {
  if (isotropy_order <= 0 || c.m % isotropy_order != 0)
    throw std::invalid_argument("chart " + c.label + ": isotropy order does not divide m");
  std::int64_t scaled = mod_floor(k, isotropy_order) * (c.m / isotropy_order);
  std::int64_t inv = mod_inverse(c.weights.at(0), c.m);
  return static_cast<std::int64_t>(static_cast<__int128>(scaled) * inv % c.m);
}

// A rotation by k/|G| belongs to the stratum G only if it is not already an
// element of a strictly smaller isotropy group that fixes a larger stratum.
// Cyclic subgroups of S^1 are nested by divisibility of their orders.
inline bool admissible_element(const ConePresentation& p, std::int64_t isotropy_order, std::int64_t k) {
  if (isotropy_order <= 1) return false;
  std::int64_t kk = mod_floor(k, isotropy_order);
  if (kk == 0) return false;
  std::int64_t order = isotropy_order / std::gcd(kk, isotropy_order);
  for (const auto& s : p.strata) {
    std::int64_t h = s.isotropy_order;
    if (h <= 0 || h == isotropy_order || isotropy_order % h != 0) continue;
    if (h % order == 0) return false;
  }
  return true;
}

inline std::vector<Violation> validate_presentation(const ConePresentation& p) {
  std::vector<Violation> out;
  auto flag = [&](std::string locus, std::string msg) { out.push_back({std::move(locus), std::move(msg)}); };

  if (p.n < 2) flag("n", "complex dimension must be >= 2");
  if (p.r.sign() <= 0) flag("r", "Fano condition violated: r must be > 0");

  std::set<std::string> labels;
  std::vector<bool> chart_ok(p.charts.size(), true);
  for (std::size_t ci = 0; ci < p.charts.size(); ++ci) {
    const auto& c = p.charts[ci];
    std::string locus = "chart[" + std::to_string(ci) + "] '" + c.label + "'";
    auto bad = [&](std::string msg) {
      chart_ok[ci] = false;
      flag(locus, std::move(msg));
    };
    if (c.label.empty()) bad("empty label");
    if (!labels.insert(c.label).second) bad("duplicate label");
    if (c.m < 1) {
      bad("m must be >= 1");
      continue;
    }
    if (static_cast<int>(c.weights.size()) != p.n) bad("expected " + std::to_string(p.n) + " weights");
    for (std::size_t i = 0; i < c.weights.size(); ++i)
      if (c.weights[i] < 0 || c.weights[i] >= c.m) bad("weight w" + std::to_string(i + 1) + " outside [0, m)");
    if (!c.weights.empty() && std::gcd(c.m, c.weights[0]) != 1) bad("gcd(m,w1) != 1");
  }

  int principal = 0;
  std::set<std::pair<std::int64_t, std::string>> seen;
  for (std::size_t si = 0; si < p.strata.size(); ++si) {
    const auto& s = p.strata[si];
    std::string locus = "stratum[" + std::to_string(si) + "] (|G|=" + std::to_string(s.isotropy_order) +
                        ", component '" + s.component_id + "')";
    if (s.isotropy_order < 1) {
      flag(locus, "isotropy order must be >= 1");
      continue;
    }
    if (!seen.insert({s.isotropy_order, s.component_id}).second) flag(locus, "duplicate component");
    if (s.principal()) {
      ++principal;
      if (s.complex_dim != p.n - 1) flag(locus, "principal stratum must have complex_dim = n-1");
    } else if (s.complex_dim < 0 || s.complex_dim >= p.n - 1) {
      flag(locus, "complex_dim must lie in [0, n-2] for a non-principal stratum");
    }
    if (s.complex_dim >= 0 && s.betti.size() != static_cast<std::size_t>(2 * s.complex_dim + 1))
      flag(locus, "betti must have 2*complex_dim+1 entries");
    if (s.betti.empty() || s.betti[0] < 1) flag(locus, "b0 must be >= 1");
    for (auto b : s.betti)
      if (b < 0) flag(locus, "negative Betti number");

    if (s.chart_ref.empty()) {
      if (!s.principal()) flag(locus, "missing chart_ref");
      continue;
    }
    const ChartData* c = find_chart(p, s.chart_ref);
    if (c == nullptr) {
      flag(locus, "chart_ref '" + s.chart_ref + "' does not resolve");
      continue;
    }
    std::size_t ci = static_cast<std::size_t>(c - p.charts.data());
    if (!chart_ok[ci] || s.principal()) continue;
    if (c->m % s.isotropy_order != 0) {
      flag(locus, "isotropy order does not divide m of chart '" + c->label + "'");
      continue;
    }
    for (std::int64_t k = 1; k < s.isotropy_order; ++k) {
      if (!admissible_element(p, s.isotropy_order, k)) continue;
      int dim = chart_fixed_dim(*c, chart_element_for(*c, s.isotropy_order, k));
      if (dim != s.complex_dim) {
        flag(locus, "chart '" + c->label + "' fixes a " + std::to_string(dim) + "-dimensional locus for k=" +
                        std::to_string(k) + ", stratum says " + std::to_string(s.complex_dim));
        break;
      }
    }
  }
  if (principal == 0) flag("strata", "no isotropy-1 stratum");
  if (principal > 1) flag("strata", "more than one isotropy-1 stratum");
  return out;
}

inline void require_valid(const ConePresentation& p) {
  auto v = validate_presentation(p);
  if (!v.empty()) throw InvalidPresentation(std::move(v));
}

inline void require_valid(const WeightedAction& w) {
  if (w.a.empty()) throw std::invalid_argument("weighted action: empty weight list");
  if (w.a.size() < 2) throw std::invalid_argument("weighted action: need at least two weights");
  std::int64_t g = 0;
  for (auto x : w.a) {
    if (x < 1) throw std::invalid_argument("weighted action: weights must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw std::invalid_argument("weighted action: gcd of weights must be 1");
}

namespace detail {

inline std::vector<std::int64_t> projective_betti(int dim) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(2 * dim + 1), 0);
  for (int j = 0; j <= 2 * dim; j += 2) b[static_cast<std::size_t>(j)] = 1;
  return b;
}

inline std::string axis_label(std::size_t j) { return "axis" + std::to_string(j + 1); }

// Presentation of C^n / mu_d with mu_d inside the weighted C^*.  d = 1 is the
// plain weighted action.  Strata are the coordinate subspheres; every
// distinct gcd of a subset of weights is one isotropy order.
inline ConePresentation weighted_presentation(const WeightedAction& w, std::int64_t d) {
  const std::size_t n = w.a.size();
  ConePresentation p;
  p.n = static_cast<int>(n);
  std::int64_t sum = 0;
  for (auto x : w.a) sum += x;
  p.r = Rational(sum, d);

  std::set<std::int64_t> orders;
  for (auto x : w.a) {
    std::set<std::int64_t> next = orders;
    next.insert(x);
    for (auto g : orders) next.insert(std::gcd(g, x));
    orders = std::move(next);
  }
  for (auto g : orders) {
    Stratum s;
    s.isotropy_order = g;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (w.a[i] % g == 0) support.push_back(i);
    for (std::size_t t = 0; t < support.size(); ++t)
      s.component_id += (t ? "," : "") + std::to_string(support[t] + 1);
    s.complex_dim = static_cast<int>(support.size()) - 1;
    s.betti = projective_betti(s.complex_dim);
    if (g > 1) s.chart_ref = axis_label(support.front());
    p.strata.push_back(std::move(s));
  }

  for (std::size_t j = 0; j < n; ++j) {
    ChartData c;
    c.m = w.a[j];
    c.label = axis_label(j);
    std::int64_t u = mod_inverse(d, c.m);
    c.weights.push_back(mod_floor(1, c.m));
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) c.weights.push_back(mod_floor(-static_cast<std::int64_t>(static_cast<__int128>(w.a[i]) * u % c.m), c.m));
    p.charts.push_back(std::move(c));
  }
  return p;
}

}  // namespace detail

/// Presentation of C^n with the weighted C^*-action.  r is the sum of the
/// weights, charts sit at the coordinate axes with (m; 1, a_j - a_i mod a_j),
/// and each stratum is a weighted projective subspace carrying the rational
/// Betti numbers of projective space.
inline ConePresentation from_weighted_action(const WeightedAction& w) {
  require_valid(w);
  return detail::weighted_presentation(w, 1);
}

/// Presentation of the quotient cone C^n / mu_d, where mu_d is the order-d
/// subgroup of the weighted C^*.  The vertex is isolated when gcd(a_i, d) = 1
/// for every i, which is required.  r = (sum a_i) / d; isotropy strata are
/// those of the weighted action; the chart at axis j becomes
/// (a_j; 1, -a_i d^{-1} mod a_j).
inline ConePresentation from_weighted_quotient(const WeightedAction& w, std::int64_t d) {
  require_valid(w);
  if (d < 1) throw std::invalid_argument("quotient order must be >= 1");
  for (auto x : w.a)
    if (std::gcd(x, d) != 1) throw std::invalid_argument("quotient order must be coprime to every weight");
  return detail::weighted_presentation(w, d);
}

}  // namespace fanocone

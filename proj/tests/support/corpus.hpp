#pragma once

// Shared test corpus and independent oracles.

#include <cstdint>
#include <filesystem>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fanocone/cone_model.hpp"
#include "fanocone/rational.hpp"

namespace corpus {

using fanocone::ConePresentation;
using fanocone::Rational;
using fanocone::WeightedAction;

// Non-increasing weight vectors with n in [n_min, n_max], entries <= max_entry, gcd 1.
inline std::vector<WeightedAction> weighted(int n_min = 2, int n_max = 4, std::int64_t max_entry = 8) {
  std::vector<WeightedAction> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t cap) -> void {
    if (static_cast<int>(cur.size()) >= n_min) {
      std::int64_t g = 0;
      for (auto x : cur) g = std::gcd(g, x);
      if (g == 1) out.push_back({cur});
    }
    if (static_cast<int>(cur.size()) == n_max) return;
    for (std::int64_t x = cap; x >= 1; --x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  rec(rec, max_entry);
  return out;
}

inline bool pairwise_coprime(const std::vector<std::int64_t>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::gcd(a[i], a[j]) != 1) return false;
  return true;
}

struct Quotient {
  std::vector<std::int64_t> a;
  std::int64_t d;
};

// Quotient cones C^n / mu_d, gcd(a_i, d) = 1, none of them smooth.
inline const std::vector<Quotient>& quotient_cases() {
  static const std::vector<Quotient> cases = {
      {{2, 1}, 3},    {{1, 1}, 3},    {{3, 1}, 2},       {{3, 2}, 5},    {{1, 1, 1}, 2}, {{2, 1, 1}, 3},
      {{1, 1}, 2},    {{1, 1}, 5},    {{2, 1}, 5},       {{3, 1}, 4},    {{4, 3}, 5},    {{5, 2}, 3},
      {{3, 2}, 7},    {{1, 1, 1}, 3}, {{1, 1, 1}, 4},    {{1, 1, 2}, 5}, {{3, 2, 1}, 5}, {{2, 2, 1}, 3},
      {{1, 1, 1, 1}, 2}, {{1, 1, 1, 1}, 5}, {{3, 2, 1, 1}, 7}, {{4, 1, 1}, 3}, {{5, 3}, 2},   {{7, 4}, 3},
  };
  return cases;
}

// Hand-written presentations that are not produced by the builders.
inline std::vector<ConePresentation> extra_presentations() {
  using fanocone::ChartData;
  using fanocone::Stratum;
  std::vector<ConePresentation> out;
  {
    // r = 1, one A1 point.
    ConePresentation p{2, Rational(1), {{1, "Y", 1, {1, 0, 1}, ""}, {2, "p", 0, {1}, "c"}}, {{2, {1, 1}, "c"}}};
    out.push_back(p);
  }
  {
    // P^1 with points of order 2 and 3, r = 1/6.
    ConePresentation p{2, Rational(1, 6),
                       {{1, "Y", 1, {1, 0, 1}, ""}, {2, "p", 0, {1}, "c2"}, {3, "q", 0, {1}, "c3"}},
                       {{2, {1, 1}, "c2"}, {3, {1, 2}, "c3"}}};
    out.push_back(p);
  }
  {
    // Surface base with an orbifold curve of order 2 and an isolated order-4 point on it.
    ConePresentation p{3, Rational(3, 2),
                       {{1, "Y", 2, {1, 0, 1, 0, 1}, ""},
                        {2, "C", 1, {1, 0, 1}, "c4"},
                        {4, "x", 0, {1}, "c4"}},
                       {{4, {1, 2, 1}, "c4"}}};
    out.push_back(p);
  }
  return out;
}

inline std::vector<ConePresentation> hand_built() {
  std::vector<ConePresentation> out;
  for (const auto& q : quotient_cases()) out.push_back(fanocone::from_weighted_quotient({q.a}, q.d));
  for (auto& p : extra_presentations()) out.push_back(std::move(p));
  return out;
}

// Reid-Tai / toric oracle for C^n / mu_d with weights b: the minimal log
// discrepancy over interior lattice points of the quotient lattice is
// min(n, min_k sum_i frac(k b_i / d)), and md is one less.
inline Rational toric_md(const std::vector<std::int64_t>& b, std::int64_t d) {
  Rational best(static_cast<std::int64_t>(b.size()));
  for (std::int64_t k = 1; k < d; ++k) {
    Rational age;
    for (auto x : b) age += Rational(fanocone::mod_floor(k * x, d), d);
    best = fanocone::min(best, age);
  }
  return best - Rational(1);
}

inline std::filesystem::path dir() { return FANOCONE_CORPUS_DIR; }

inline std::vector<std::filesystem::path> files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir()))
    if (e.path().extension() == ".json" && e.path().filename().string().rfind("bad_", 0) != 0) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace corpus

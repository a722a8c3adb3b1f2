#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanocone/cone_model.hpp"

namespace fanocone {

struct GroupDescriptor {
  enum class Kind { Zero, Free, Torsion };
  Kind kind = Kind::Zero;
  std::int64_t value = 0;  // rank for Free, order for Torsion

  static GroupDescriptor zero() { return {}; }
  static GroupDescriptor free(std::int64_t rank) { return rank == 0 ? zero() : GroupDescriptor{Kind::Free, rank}; }
  static GroupDescriptor torsion(std::int64_t order) {
    return order == 1 ? zero() : GroupDescriptor{Kind::Torsion, order};
  }

  std::int64_t rational_rank() const { return kind == Kind::Free ? value : 0; }

  // "0", "Z", "Z^3", "Z_6".
  std::string str() const {
    switch (kind) {
      case Kind::Zero: return "0";
      case Kind::Free: return value == 1 ? "Z" : "Z^" + std::to_string(value);
      case Kind::Torsion: return "Z_" + std::to_string(value);
    }
    return "?";
  }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// Indexed by degree, starting at 0.
using GradedGroup = std::vector<GroupDescriptor>;

// H^k_orb(P(w), Z): Z in even degrees up to 2n-2, Z_d with d = prod w_i in
// even degrees from 2n on, 0 in odd degrees.
inline GroupDescriptor wps_cohomology(const WeightedAction& w, int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  if (w.a.empty()) throw std::invalid_argument("empty weight list");
  const int n = static_cast<int>(w.size());
  if (k % 2 != 0) return GroupDescriptor::zero();
  if (k <= 2 * n - 2) return GroupDescriptor::free(1);
  std::int64_t d = 1;
  for (auto x : w.a)
    if (__builtin_mul_overflow(d, x, &d)) throw std::overflow_error("weight product overflow");
  return GroupDescriptor::torsion(d);
}

inline GradedGroup wps_cohomology_table(const WeightedAction& w, int max_degree) {
  GradedGroup out;
  for (int k = 0; k <= max_degree; ++k) out.push_back(wps_cohomology(w, k));
  return out;
}

inline std::int64_t fano_index_wps(const WeightedAction& w) {
  std::int64_t sum = 0;
  bool all_one = true;
  for (auto x : w.a) {
    if (x < 1) throw std::invalid_argument("weights must be positive");
    sum += x;
    all_one = all_one && x == 1;
  }
  const auto n = static_cast<std::int64_t>(w.size());
  if (!all_one && sum <= n) throw std::logic_error("Fano index of a non-projective-space P(w) must exceed n");
  return sum;
}

// Integral cohomology of S^{2n-1} up to degree 2n.
inline GradedGroup sphere_cohomology(int n) {
  GradedGroup out(static_cast<std::size_t>(2 * n + 1));
  out[0] = GroupDescriptor::free(1);
  out[static_cast<std::size_t>(2 * n - 1)] = GroupDescriptor::free(1);
  return out;
}

struct GysinReport {
  bool consistent = false;            // every rational-rank constraint is satisfiable
  bool link_vanishes = false;         // H^k(M; Q) = 0 for 1 <= k <= 2n-2
  bool alpha_isomorphisms = false;    // alpha_{k-1} iso for 1 <= k <= 2n-3
  bool matches_projective = false;    // orbifold Q-ranks are those of P^{n-1}
  std::vector<std::int64_t> alpha_ranks;  // alpha_j : H^j -> H^{j+2}
  std::vector<std::string> issues;
};

/// Rational-rank consistency of the Gysin sequence
///   ... -> H^j_orb(Y) --alpha_j--> H^{j+2}_orb(Y) -> H^{j+2}(M) -> H^{j+1}_orb(Y) -> ...
/// for the circle bundle M -> Y of a (2n-1)-dimensional link.  Exactness
/// gives b_m(M) = (o_m - a_{m-2}) + (o_{m-1} - a_{m-1}), which determines
/// every rank a_j in turn; each must lie in [0, min(o_j, o_{j+2})].
inline GysinReport gysin_rank_check(const GradedGroup& orb, const GradedGroup& link, int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (orb.size() < static_cast<std::size_t>(2 * n - 1) || link.size() < static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("cohomology sequences must reach degree 2n-2 (orbifold) and 2n-1 (link)");
  for (const auto& g : orb)
    if (g.value < 0) throw std::invalid_argument("negative rank or order");
  for (const auto& g : link)
    if (g.value < 0) throw std::invalid_argument("negative rank or order");

  auto o = [&](int j) -> std::int64_t {
    return j < 0 || j >= static_cast<int>(orb.size()) ? 0 : orb[static_cast<std::size_t>(j)].rational_rank();
  };
  auto l = [&](int j) -> std::int64_t {
    return j < 0 || j >= static_cast<int>(link.size()) ? 0 : link[static_cast<std::size_t>(j)].rational_rank();
  };

  GysinReport out;
  out.consistent = true;
  auto& a = out.alpha_ranks;
  a.assign(static_cast<std::size_t>(2 * n), 0);
  auto alpha = [&](int j) -> std::int64_t { return j < 0 ? 0 : a[static_cast<std::size_t>(j)]; };

  for (int m = 0; m <= 2 * n; ++m) {
    std::int64_t next = o(m) + o(m - 1) - alpha(m - 2) - l(m);
    if (m == 0) {
      if (next != 0) {
        out.consistent = false;
        out.issues.push_back("degree 0: b0(M) differs from b0(Y)");
      }
      continue;
    }
    int j = m - 1;
    std::int64_t cap = std::min(o(j), o(j + 2));
    if (next < 0 || next > cap) {
      out.consistent = false;
      out.issues.push_back("degree " + std::to_string(m) + ": alpha_" + std::to_string(j) + " would need rank " +
                           std::to_string(next) + " outside [0, " + std::to_string(cap) + "]");
      next = std::clamp<std::int64_t>(next, 0, cap);
    }
    a[static_cast<std::size_t>(j)] = next;
  }

  out.link_vanishes = true;
  for (int k = 1; k <= 2 * n - 2; ++k) out.link_vanishes = out.link_vanishes && l(k) == 0;
  out.alpha_isomorphisms = true;
  for (int k = 1; k <= 2 * n - 3; ++k) {
    int j = k - 1;
    out.alpha_isomorphisms = out.alpha_isomorphisms && alpha(j) == o(j) && alpha(j) == o(j + 2);
  }
  out.matches_projective = true;
  for (int k = 0; k <= 2 * n - 2; ++k) out.matches_projective = out.matches_projective && o(k) == (k % 2 == 0 ? 1 : 0);

  if (out.consistent && out.link_vanishes) {
    if (!out.alpha_isomorphisms) {
      out.consistent = false;
      out.issues.push_back("vanishing link cohomology but some alpha is not an isomorphism");
    }
    if (!out.matches_projective) {
      out.consistent = false;
      out.issues.push_back("vanishing link cohomology but orbifold ranks differ from P^{n-1}");
    }
  }
  return out;
}

}  // namespace fanocone

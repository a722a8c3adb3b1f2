#pragma once

// First page of the period-filtration (Morse-Bott) spectral sequence for
// positive S^1-equivariant symplectic homology, built from the orbit
// families: a family at filtration p = N * period contributes H_j of its
// stratum in total degree lcz + j with Z2 grade (n - 1 + j) mod 2.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fanocone/cone_model.hpp"
#include "fanocone/rational.hpp"
#include "fanocone/reeb_orbits.hpp"

namespace fanocone {

struct FamilySignature {
  std::int64_t isotropy_order = 1;
  std::int64_t k = 0;
  std::int64_t ell = 0;
  std::string component_id;

  friend bool operator==(const FamilySignature&, const FamilySignature&) = default;
  friend auto operator<=>(const FamilySignature&, const FamilySignature&) = default;
};

// Ordered by (degree, p, z2), the order used for output tables.
struct E1Key {
  std::int64_t p = 0;
  Rational degree;
  int z2 = 0;

  friend bool operator==(const E1Key&, const E1Key&) = default;
  friend bool operator<(const E1Key& a, const E1Key& b) {
    return std::tie(a.degree, a.p, a.z2) < std::tie(b.degree, b.p, b.z2);
  }
};

struct E1Contribution {
  std::int64_t rank = 0;
  FamilySignature source;
  int j = 0;               // stratum homology degree
  Rational leading_degree;  // lcz of the source family
};

struct E1Page {
  std::int64_t N = 1;
  int n = 2;
  Rational max_degree;
  std::map<E1Key, std::vector<E1Contribution>> entries;

  bool empty() const { return entries.empty(); }
};

struct SHProfile {
  Rational min_degree;
  bool degenerate = false;
  std::map<Rational, std::int64_t> ranks;  // only when degenerate

  // Survivor certificate for the minimal-degree class.
  bool certified = false;
  std::int64_t survivor_p = 0;
  FamilySignature survivor;
  std::vector<std::string> obstructions;
};

/// Upper bound on the period of any family with lcz <= max_degree.  lcz
/// grows by 2R per full turn, so with lcz_min the smallest lcz over the
/// l = 0 families and the l = 1 principal family, periods beyond L cannot
/// reach max_degree once lcz_min + 2(L-1)R > max_degree.
inline Rational period_bound(const ConePresentation& p, const Rational& max_degree) {
  const Rational R = reeb_ratio(p).value;
  const Rational lcz_min = inf_lsft(p) - Rational(p.n - 3);
  if (max_degree < lcz_min) return Rational(1);
  std::int64_t L = ((max_degree - lcz_min) / (Rational(2) * R)).floor() + 2;
  return Rational(std::max<std::int64_t>(L, 1));
}

inline E1Page assemble_e1(const ConePresentation& p, const Rational& max_degree) {
  require_valid(p);
  if (reeb_ratio(p).value.sign() <= 0) throw std::invalid_argument("R <= 0: no completeness bound");
  E1Page page;
  page.N = isotropy_lcm(p);
  page.n = p.n;
  page.max_degree = max_degree;

  std::map<std::pair<std::int64_t, std::string>, const Stratum*> strata;
  for (const auto& s : p.strata) strata[{s.isotropy_order, s.component_id}] = &s;

  for (const auto& f : enumerate_families(p, period_bound(p, max_degree))) {
    if (max_degree < f.lcz) continue;
    const Stratum& s = *strata.at({f.isotropy_order, f.component_id});
    const std::int64_t filtration = (f.period * Rational(page.N)).num();
    for (std::size_t j = 0; j < s.betti.size(); ++j) {
      if (s.betti[j] == 0) continue;
      Rational degree = f.lcz + Rational(static_cast<std::int64_t>(j));
      if (max_degree < degree) break;
      E1Key key{filtration, degree, static_cast<int>((p.n - 1 + static_cast<int>(j)) % 2)};
      page.entries[key].push_back({s.betti[j], {f.isotropy_order, f.k, f.ell, f.component_id}, static_cast<int>(j), f.lcz});
    }
  }
  for (auto& [key, list] : page.entries)
    std::sort(list.begin(), list.end(), [](const E1Contribution& a, const E1Contribution& b) {
      return std::tie(a.source, a.j) < std::tie(b.source, b.j);
    });
  return page;
}

/// Picks the H_0 class of minimal total degree and, among those, maximal
/// filtration, then checks that nothing on the page can hit it: a
/// differential into it would come from an opposite-Z2 class one degree up
/// at strictly higher filtration, and such a class would sit in a block whose
/// leading term undercuts the choice.  The minimal degree is certified only
/// when no such class exists.
inline SHProfile certify_min_degree(const E1Page& page) {
  if (page.empty()) throw std::invalid_argument("empty E1 page");
  SHProfile out;
  const E1Key* best = nullptr;
  const E1Contribution* best_src = nullptr;
  for (const auto& [key, list] : page.entries)
    for (const auto& c : list) {
      if (c.j != 0) continue;
      if (best == nullptr || key.degree < best->degree || (key.degree == best->degree && key.p > best->p)) {
        best = &key;
        best_src = &c;
      }
    }
  if (best == nullptr) throw std::logic_error("E1 page has no H_0 class");

  out.min_degree = best->degree;
  out.survivor_p = best->p;
  out.survivor = best_src->source;
  if (page.entries.begin()->first.degree < best->degree)
    out.obstructions.push_back("a class of lower degree than every H_0 leading term");

  for (const auto& [key, list] : page.entries) {
    if (key.degree != best->degree + Rational(1) || key.z2 == best->z2 || key.p <= best->p) continue;
    for (const auto& c : list)
      out.obstructions.push_back("class at p=" + std::to_string(key.p) + ", degree " + key.degree.str() +
                                 " from block with leading degree " + c.leading_degree.str() + " could hit the survivor");
  }
  if (page.max_degree < best->degree + Rational(1))
    out.obstructions.push_back("page truncated below degree " + (best->degree + Rational(1)).str());
  out.certified = out.obstructions.empty();
  return out;
}

/// When every class has the same Z2 grade every differential vanishes, so
/// E1 = E-infinity and the ranks can be read off the page.  Otherwise only
/// the minimal degree is reported.
inline SHProfile degenerate_ranks(const E1Page& page) {
  if (page.empty()) return SHProfile{};
  SHProfile out = certify_min_degree(page);
  const int z2 = page.entries.begin()->first.z2;
  out.degenerate = std::all_of(page.entries.begin(), page.entries.end(), [&](const auto& e) { return e.first.z2 == z2; });
  if (!out.degenerate) return out;
  for (const auto& [key, list] : page.entries)
    for (const auto& c : list) out.ranks[key.degree] += c.rank;
  return out;
}

/// SH^{+,S^1} of a homology-ball filling: Q in degrees n+1+2m, zero elsewhere.
inline std::map<std::int64_t, std::int64_t> expected_sh_homology_ball(int n, std::int64_t max_degree) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t d = n + 1; d <= max_degree; d += 2) out[d] = 1;
  return out;
}

}  // namespace fanocone

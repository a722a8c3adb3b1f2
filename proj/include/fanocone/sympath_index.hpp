#pragma once

// Robbin-Salamon / lower Conley-Zehnder indices of diagonal unitary paths
//   t -> diag(exp(2 pi i rho_1 t), ..., exp(2 pi i rho_d t)),  t in [0, T].
// Two independent routes: the closed-form U(1) normalization summed over
// factors, and a crossing count over the exact crossing times.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanocone/rational.hpp"

namespace fanocone {

struct DiagonalPath {
  std::vector<Rational> speeds;
  Rational duration{1};
};

struct IndexBundle {
  Rational rs;
  Rational lcz;
  int kernel_half_dim = 0;
  std::optional<int> z2;  // set only when lcz is an integer

  friend bool operator==(const IndexBundle&, const IndexBundle&) = default;
};

inline void require_valid(const DiagonalPath& path) {
  if (path.duration.sign() <= 0) throw std::invalid_argument("path duration must be > 0");
}

// mu_RS of t -> exp(2 pi i speed t) on [0, duration]: 2T' when T' = speed *
// duration is an integer, otherwise 2 floor(T') + 1.
inline Rational rs_index_factor(const Rational& speed, const Rational& duration) {
  if (duration.sign() <= 0) throw std::invalid_argument("path duration must be > 0");
  Rational turns = speed * duration;
  if (turns.is_integer()) return turns * 2;
  return Rational(2 * turns.floor() + 1);
}

inline IndexBundle index_bundle(const DiagonalPath& path) {
  require_valid(path);
  IndexBundle out;
  for (const auto& rho : path.speeds) {
    out.rs += rs_index_factor(rho, path.duration);
    if ((rho * path.duration).is_integer()) ++out.kernel_half_dim;
  }
  out.lcz = out.rs - Rational(out.kernel_half_dim);
  if (out.lcz.is_integer()) out.z2 = static_cast<int>(mod_floor(out.lcz.num(), 2));
  return out;
}

// Signed crossing count of the path restricted to [from, to].  A factor with
// speed rho crosses the eigenvalue 1 whenever rho t is an integer; the
// crossing form there has signature 2 sign(rho), halved at the endpoints.
inline Rational rs_crossing_interval(const DiagonalPath& path, const Rational& from, const Rational& to) {
  if (!(from < to)) throw std::invalid_argument("crossing interval must be nonempty");
  std::map<Rational, Rational> crossings;  // time -> total contribution
  for (const auto& rho : path.speeds) {
    if (rho.sign() == 0) continue;
    Rational lo = rho * from, hi = rho * to;
    if (hi < lo) std::swap(lo, hi);
    for (std::int64_t j = lo.ceil(); Rational(j) <= hi; ++j) {
      Rational t = Rational(j) / rho;
      bool endpoint = t == from || t == to;
      crossings[t] += Rational(rho.sign() * (endpoint ? 1 : 2));
    }
  }
  Rational total;
  for (const auto& [t, c] : crossings) total += c;
  return total;
}

inline Rational rs_crossing_oracle(const DiagonalPath& path) {
  require_valid(path);
  return rs_crossing_interval(path, Rational(0), path.duration);
}

namespace detail {

inline std::string describe(const DiagonalPath& p) {
  std::string s = "speeds (";
  for (std::size_t i = 0; i < p.speeds.size(); ++i) s += (i ? ", " : "") + p.speeds[i].str();
  return s + "), T = " + p.duration.str();
}

// Same matrices, parametrized over a different duration.
inline DiagonalPath reparametrize(const DiagonalPath& p, const Rational& duration) {
  DiagonalPath out{{}, duration};
  for (const auto& rho : p.speeds) out.speeds.push_back(rho * p.duration / duration);
  return out;
}

}  // namespace detail

/// Runs the Conley-Zehnder axiom suite on every path and every pair of paths:
/// the lower-index identity, agreement with the crossing count, direct-sum
/// additivity, the loop property, concatenation additivity, the determinant
/// sign rule at nondegenerate endpoints, and the signature normalization for
/// short paths.  Returns one message per failure; empty means all hold.
inline std::vector<std::string> check_axioms(const std::vector<DiagonalPath>& paths) {
  std::vector<std::string> failures;
  auto fail = [&](const DiagonalPath& p, const std::string& what) {
    failures.push_back(what + " fails for " + detail::describe(p));
  };

  for (const auto& p : paths) {
    if (p.duration.sign() <= 0) {
      fail(p, "positive duration");
      continue;
    }
    const IndexBundle b = index_bundle(p);
    const auto d = static_cast<std::int64_t>(p.speeds.size());

    if (b.lcz + Rational(b.kernel_half_dim) != b.rs) fail(p, "lcz = rs - kernel_half_dim");
    if (rs_crossing_oracle(p) != b.rs) fail(p, "crossing count");

    // Loop: add mu turns to every factor.
    for (std::int64_t mu : {1, -1, 2}) {
      DiagonalPath looped = p;
      for (auto& rho : looped.speeds) rho += Rational(mu) / p.duration;
      if (index_bundle(looped).rs - b.rs != Rational(2 * mu * d)) fail(p, "loop property (" + std::to_string(mu) + ")");
    }

    // Concatenation at a few interior split points.
    for (std::int64_t parts : {2, 3}) {
      Rational split = p.duration / Rational(parts);
      Rational head = index_bundle(DiagonalPath{p.speeds, split}).rs;
      Rational tail = rs_crossing_interval(p, split, p.duration);
      if (head + tail != b.rs) fail(p, "concatenation at T/" + std::to_string(parts));
    }

    // Nondegenerate endpoint: (-1)^{d - mu_CZ} = sign det(id - phi(T)).
    // Each rotation block contributes 2 - 2 cos(theta) > 0 off the kernel.
    if (b.kernel_half_dim == 0) {
      int det_sign = 1;
      int parity = static_cast<int>(mod_floor(d - b.rs.num(), 2));
      if (!b.rs.is_integer() || (parity == 0 ? 1 : -1) != det_sign) fail(p, "determinant sign");
    }

    // exp(tJS) with |S| < 2 pi has index half the signature of S.
    bool short_path = b.kernel_half_dim == 0;
    Rational half_signature;
    for (const auto& rho : p.speeds) {
      Rational turns = rho * p.duration;
      if (!(Rational(-1) < turns && turns < Rational(1))) short_path = false;
      half_signature += Rational(rho.sign());
    }
    if (short_path && b.rs != half_signature) fail(p, "signature normalization");
  }

  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].duration.sign() <= 0) continue;
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (paths[j].duration.sign() <= 0) continue;
      DiagonalPath other = detail::reparametrize(paths[j], paths[i].duration);
      DiagonalPath sum = paths[i];
      sum.speeds.insert(sum.speeds.end(), other.speeds.begin(), other.speeds.end());
      IndexBundle a = index_bundle(paths[i]), b = index_bundle(paths[j]), s = index_bundle(sum);
      if (index_bundle(other) != b) fail(paths[j], "reparametrization invariance");
      if (s.rs != a.rs + b.rs || s.lcz != a.lcz + b.lcz || s.kernel_half_dim != a.kernel_half_dim + b.kernel_half_dim)
        fail(sum, "direct-sum additivity");
    }
  }
  return failures;
}

}  // namespace fanocone

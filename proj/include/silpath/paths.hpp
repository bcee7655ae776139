#pragma once

// Piecewise-linear paths in the level-zero weight space and the raising and
// lowering root operators, both on bare paths and on paths indexed by minimal
// coset representatives (the rational-cut analogue of Lakshmibai-Seshadri
// data).  A path is stored as a list of direction vectors together with the
// cut points 0 = a_0 < a_1 < ... < a_s = 1; the path moves with constant
// derivative dirs[u-1] on [a_{u-1}, a_u].

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "silpath/cartan.hpp"
#include "silpath/error.hpp"
#include "silpath/graphs.hpp"
#include "silpath/parabolic.hpp"
#include "silpath/rational.hpp"
#include "silpath/weyl.hpp"

namespace silpath {

struct PLPath {
  std::vector<LevelZeroWeight> dirs;
  std::vector<Rat> cuts;

  bool operator==(const PLPath& o) const { return dirs == o.dirs && cuts == o.cuts; }
  bool operator<(const PLPath& o) const {
    if (dirs != o.dirs) return dirs < o.dirs;
    return cuts < o.cuts;
  }
};

// Path indexed by Weyl group data: piece u carries the minimal representative
// elems[u-1]; the underlying direction is elems[u-1] applied to the shape.
struct SiLSPath {
  std::vector<AffineWeylElem> elems;
  std::vector<Rat> cuts;

  bool operator==(const SiLSPath& o) const { return elems == o.elems && cuts == o.cuts; }
  bool operator<(const SiLSPath& o) const {
    if (elems != o.elems) return elems < o.elems;
    return cuts < o.cuts;
  }
};

// Fixed data for one dominant shape: the root data, the shape written as
// fundamental-weight multiplicities, the stabilizer subset J = {i : mult_i = 0},
// and the least common multiple of the nonzero coroot pairings of the shape.
struct SilsContext {
  AffineCartanData cd;
  std::vector<Int> mult;
  LevelZeroWeight lambda;
  ParabolicSubset ps;
  Int n_lambda = 1;
};

inline SilsContext make_context(const AffineCartanData& cd, const std::vector<Int>& mult) {
  check_dim(cd, mult.size(), "shape multiplicities");
  bool nonzero = false;
  for (Int m : mult) {
    require(m >= 0, Errc::ConfigError, "shape multiplicities must be nonnegative");
    if (m > 0) nonzero = true;
  }
  require(nonzero, Errc::ConfigError, "shape must be nonzero");
  SilsContext ctx;
  ctx.cd = cd;
  ctx.mult = mult;
  ctx.lambda = weight_from_multiplicities(cd, mult);
  std::vector<int> J;
  for (int i = 1; i <= cd.rank; ++i)
    if (mult[i - 1] == 0) J.push_back(i);
  ctx.ps = build_parabolic(cd, J);
  ctx.n_lambda = 1;
  for (const auto& al : cd.positive_roots) {
    Rat c = pairing(cd, coroot_of(cd, al), ctx.lambda);
    require(is_integral(c), Errc::DataError, "shape has nonintegral coroot pairing");
    Int ci = c.numerator() < 0 ? -c.numerator() : c.numerator();
    if (ci != 0) ctx.n_lambda = std::lcm(ctx.n_lambda, ci);
  }
  return ctx;
}

// ---------------------------------------------------------------------------
// Bare piecewise-linear paths.

inline void validate_pl(const AffineCartanData& cd, const PLPath& p) {
  require(!p.dirs.empty() && p.cuts.size() == p.dirs.size() + 1, Errc::InvalidPath,
          "path needs one more cut than directions");
  require(p.cuts.front() == Rat(0) && p.cuts.back() == Rat(1), Errc::BadCuts,
          "cuts must run from 0 to 1");
  for (std::size_t u = 1; u < p.cuts.size(); ++u)
    require(p.cuts[u - 1] < p.cuts[u], Errc::BadCuts, "cuts must strictly increase");
  for (const auto& d : p.dirs) check_dim(cd, d.fun.size(), "path direction");
}

inline PLPath straight_pl(const LevelZeroWeight& mu) { return PLPath{{mu}, {Rat(0), Rat(1)}}; }

inline LevelZeroWeight pl_weight(const PLPath& p) {
  LevelZeroWeight w{std::vector<Rat>(p.dirs.front().fun.size(), Rat(0)), Rat(0)};
  for (std::size_t u = 0; u < p.dirs.size(); ++u)
    w = add(w, scale(p.dirs[u], p.cuts[u + 1] - p.cuts[u]));
  return w;
}

// Values of t -> <simple coroot i, path(t)> at the cut points.
inline std::vector<Rat> corner_values(const AffineCartanData& cd, const PLPath& p, int i) {
  std::vector<Rat> h(p.cuts.size(), Rat(0));
  for (std::size_t u = 1; u < p.cuts.size(); ++u) {
    Rat slope = pair_simple_acoroot(cd, i, p.dirs[u - 1]);
    h[u] = h[u - 1] + (p.cuts[u] - p.cuts[u - 1]) * slope;
  }
  return h;
}

inline LevelZeroWeight reflect_weight(const AffineCartanData& cd, int i,
                                      const LevelZeroWeight& mu) {
  Rat c = pair_simple_acoroot(cd, i, mu);
  LevelZeroWeight ai = weight_of_affine_root(cd, simple_affine_root(cd, i));
  return sub(mu, scale(ai, c));
}

namespace detail {

// Window [t0, t1] on which a raising operator reflects the path: t1 is the
// first time the pairing function reaches its minimum m, and t0 is the last
// time before t1 at which it equals m + 1.  Absent when the minimum exceeds -1.
inline std::optional<std::pair<Rat, Rat>> raise_window(const std::vector<Rat>& h,
                                                       const std::vector<Rat>& cuts) {
  Rat m = *std::min_element(h.begin(), h.end());
  if (m > Rat(-1)) return std::nullopt;
  std::size_t q = 0;
  while (h[q] != m) ++q;
  Rat t1 = cuts[q];
  Rat target = m + 1;
  for (std::size_t u = q; u >= 1; --u) {
    if (h[u - 1] == target) return std::make_pair(cuts[u - 1], t1);
    if (h[u - 1] > target) {
      Rat t0 = cuts[u - 1] + (target - h[u - 1]) * (cuts[u] - cuts[u - 1]) / (h[u] - h[u - 1]);
      return std::make_pair(t0, t1);
    }
  }
  fail(Errc::InvalidPath, "raising window not found");
}

// Window [t0, t1] for a lowering operator: t0 is the last time the pairing
// function attains its minimum m, and t1 is the first time after t0 at which
// it equals m + 1.  Absent when the endpoint value stays below m + 1.
inline std::optional<std::pair<Rat, Rat>> lower_window(const std::vector<Rat>& h,
                                                       const std::vector<Rat>& cuts) {
  Rat m = *std::min_element(h.begin(), h.end());
  if (h.back() - m < Rat(1)) return std::nullopt;
  std::size_t p = h.size() - 1;
  while (h[p] != m) --p;
  Rat t0 = cuts[p];
  Rat target = m + 1;
  for (std::size_t u = p + 1; u < h.size(); ++u) {
    if (h[u] == target) return std::make_pair(t0, cuts[u]);
    if (h[u] > target) {
      Rat t1 =
          cuts[u - 1] + (target - h[u - 1]) * (cuts[u] - cuts[u - 1]) / (h[u] - h[u - 1]);
      return std::make_pair(t0, t1);
    }
  }
  fail(Errc::InvalidPath, "lowering window not found");
}

// Split pieces at t0 and t1 where needed, then apply refl to every piece
// contained in [t0, t1].
template <class Piece, class Reflect>
void reflect_window(std::vector<Piece>& pieces, std::vector<Rat>& cuts, const Rat& t0,
                    const Rat& t1, Reflect refl) {
  auto split_at = [&](const Rat& t) {
    for (std::size_t u = 1; u < cuts.size(); ++u) {
      if (cuts[u - 1] < t && t < cuts[u]) {
        cuts.insert(cuts.begin() + static_cast<std::ptrdiff_t>(u), t);
        pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(u - 1), pieces[u - 1]);
        return;
      }
    }
  };
  split_at(t0);
  split_at(t1);
  for (std::size_t u = 1; u < cuts.size(); ++u)
    if (cuts[u - 1] >= t0 && cuts[u] <= t1) refl(pieces[u - 1]);
}

// Merge adjacent pieces with equal labels and drop zero-length pieces.
template <class Piece>
void normalize_pieces(std::vector<Piece>& pieces, std::vector<Rat>& cuts) {
  std::vector<Piece> nd;
  std::vector<Rat> nc{cuts.front()};
  for (std::size_t u = 1; u < cuts.size(); ++u) {
    if (cuts[u] == nc.back()) continue;
    if (!nd.empty() && pieces[u - 1] == nd.back()) {
      nc.back() = cuts[u];
    } else {
      nd.push_back(pieces[u - 1]);
      nc.push_back(cuts[u]);
    }
  }
  pieces = std::move(nd);
  cuts = std::move(nc);
}

}  // namespace detail

inline Rat pl_eps(const AffineCartanData& cd, const PLPath& p, int i) {
  auto h = corner_values(cd, p, i);
  return -*std::min_element(h.begin(), h.end());
}

inline Rat pl_phi(const AffineCartanData& cd, const PLPath& p, int i) {
  auto h = corner_values(cd, p, i);
  return h.back() - *std::min_element(h.begin(), h.end());
}

inline std::optional<PLPath> pl_e(const AffineCartanData& cd, const PLPath& p, int i) {
  auto win = detail::raise_window(corner_values(cd, p, i), p.cuts);
  if (!win) return std::nullopt;
  PLPath q = p;
  detail::reflect_window(q.dirs, q.cuts, win->first, win->second,
                         [&](LevelZeroWeight& d) { d = reflect_weight(cd, i, d); });
  detail::normalize_pieces(q.dirs, q.cuts);
  return q;
}

inline std::optional<PLPath> pl_f(const AffineCartanData& cd, const PLPath& p, int i) {
  auto win = detail::lower_window(corner_values(cd, p, i), p.cuts);
  if (!win) return std::nullopt;
  PLPath q = p;
  detail::reflect_window(q.dirs, q.cuts, win->first, win->second,
                         [&](LevelZeroWeight& d) { d = reflect_weight(cd, i, d); });
  detail::normalize_pieces(q.dirs, q.cuts);
  return q;
}

// Pointwise scaling t -> N * path(t); cuts are unchanged.
inline PLPath dilate(const PLPath& p, Int N) {
  require(N >= 1, Errc::ConfigError, "dilation factor must be positive");
  PLPath q = p;
  for (auto& d : q.dirs) d = scale(d, Rat(N));
  detail::normalize_pieces(q.dirs, q.cuts);
  return q;
}

// Concatenation of k paths traversed at k-fold speed, each on a window of
// length 1/k.
inline PLPath concat(const std::vector<PLPath>& parts) {
  require(!parts.empty(), Errc::ConfigError, "nothing to concatenate");
  Int k = static_cast<Int>(parts.size());
  PLPath q;
  q.cuts.push_back(Rat(0));
  for (Int j = 0; j < k; ++j) {
    const PLPath& p = parts[static_cast<std::size_t>(j)];
    for (std::size_t u = 1; u < p.cuts.size(); ++u) {
      q.dirs.push_back(scale(p.dirs[u - 1], Rat(k)));
      q.cuts.push_back((Rat(j) + p.cuts[u]) / k);
    }
  }
  detail::normalize_pieces(q.dirs, q.cuts);
  return q;
}

// ---------------------------------------------------------------------------
// Paths indexed by minimal coset representatives.

inline PLPath project_path(const SilsContext& ctx, const SiLSPath& p) {
  PLPath q;
  q.cuts = p.cuts;
  for (const auto& x : p.elems) q.dirs.push_back(apply_weight(ctx.cd, x, ctx.lambda));
  return q;
}

inline SiLSPath trivial_path(const SilsContext& ctx, const AffineWeylElem& x) {
  require(is_peterson_rep(ctx.cd, ctx.ps, x), Errc::NotAPetersonRep,
          "trivial path needs a minimal representative");
  return SiLSPath{{x}, {Rat(0), Rat(1)}};
}

inline SiLSPath initial_path(const SilsContext& ctx) {
  return trivial_path(ctx, affine_identity(ctx.cd));
}

// Full membership test: minimal representatives, strictly increasing cuts
// from 0 to 1, and between consecutive pieces a nonempty chain of admissible
// covers at the shared cut, running from the later piece up to the earlier.
inline void validate_sils(const SilsContext& ctx, const SiLSPath& p) {
  require(!p.elems.empty() && p.cuts.size() == p.elems.size() + 1, Errc::InvalidPath,
          "path needs one more cut than pieces");
  require(p.cuts.front() == Rat(0) && p.cuts.back() == Rat(1), Errc::BadCuts,
          "cuts must run from 0 to 1");
  for (std::size_t u = 1; u < p.cuts.size(); ++u)
    require(p.cuts[u - 1] < p.cuts[u], Errc::BadCuts, "cuts must strictly increase");
  for (const auto& x : p.elems)
    require(is_peterson_rep(ctx.cd, ctx.ps, x), Errc::NotAPetersonRep,
            "path piece is not a minimal representative");
  for (std::size_t u = 1; u < p.elems.size(); ++u) {
    require(!(p.elems[u - 1] == p.elems[u]), Errc::NotDecreasing, "adjacent pieces coincide");
    require(has_path(ctx.cd, ctx.ps, ctx.lambda, p.cuts[u], p.elems[u], p.elems[u - 1]),
            Errc::NotDecreasing, "adjacent pieces are not linked at their cut");
  }
}

inline LevelZeroWeight sils_weight(const SilsContext& ctx, const SiLSPath& p) {
  return pl_weight(project_path(ctx, p));
}

inline Int sils_eps(const SilsContext& ctx, const SiLSPath& p, int i) {
  Rat v = pl_eps(ctx.cd, project_path(ctx, p), i);
  require(is_integral(v), Errc::InvalidPath, "pairing minimum is not integral");
  return v.numerator();
}

inline Int sils_phi(const SilsContext& ctx, const SiLSPath& p, int i) {
  Rat v = pl_phi(ctx.cd, project_path(ctx, p), i);
  require(is_integral(v), Errc::InvalidPath, "pairing range is not integral");
  return v.numerator();
}

inline std::optional<SiLSPath> sils_e(const SilsContext& ctx, const SiLSPath& p, int i) {
  auto win = detail::raise_window(corner_values(ctx.cd, project_path(ctx, p), i), p.cuts);
  if (!win) return std::nullopt;
  AffineWeylElem ri = simple_reflection_affine(ctx.cd, i);
  SiLSPath q = p;
  detail::reflect_window(q.elems, q.cuts, win->first, win->second,
                         [&](AffineWeylElem& x) { x = mul(ri, x); });
  detail::normalize_pieces(q.elems, q.cuts);
  return q;
}

inline std::optional<SiLSPath> sils_f(const SilsContext& ctx, const SiLSPath& p, int i) {
  auto win = detail::lower_window(corner_values(ctx.cd, project_path(ctx, p), i), p.cuts);
  if (!win) return std::nullopt;
  AffineWeylElem ri = simple_reflection_affine(ctx.cd, i);
  SiLSPath q = p;
  detail::reflect_window(q.elems, q.cuts, win->first, win->second,
                         [&](AffineWeylElem& x) { x = mul(ri, x); });
  detail::normalize_pieces(q.elems, q.cuts);
  return q;
}

// Splits the path into N trivial factors: piece u contributes one factor per
// step of N * (a_u - a_{u-1}), which must be integral.
inline std::vector<SiLSPath> sigma_factors(const SilsContext& ctx, const SiLSPath& p, Int N) {
  require(N >= 1, Errc::ConfigError, "splitting factor must be positive");
  std::vector<SiLSPath> out;
  Int prev = 0;
  for (std::size_t u = 0; u < p.elems.size(); ++u) {
    Rat kr = Rat(N) * p.cuts[u + 1];
    require(is_integral(kr), Errc::BadMultiple, "cut is not a multiple of 1/N");
    Int k = kr.numerator();
    for (Int c = prev; c < k; ++c) out.push_back(trivial_path(ctx, p.elems[u]));
    prev = k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Literals.

inline std::string pl_str(const PLPath& p) {
  std::ostringstream os;
  os << "PL{";
  for (std::size_t u = 0; u < p.dirs.size(); ++u) {
    if (u) os << "; ";
    os << "(";
    for (std::size_t k = 0; k < p.dirs[u].fun.size(); ++k) {
      if (k) os << ",";
      os << rat_str(p.dirs[u].fun[k]);
    }
    os << "|" << rat_str(p.dirs[u].delta) << ") @ " << rat_str(p.cuts[u + 1]);
  }
  os << "}";
  return os.str();
}

inline std::string sils_str(const SilsContext& ctx, const SiLSPath& p) {
  std::ostringstream os;
  os << "SiLS{";
  for (std::size_t u = 0; u < p.elems.size(); ++u) {
    if (u) os << "; ";
    os << to_literal(ctx.cd, p.elems[u]) << " @ " << rat_str(p.cuts[u + 1]);
  }
  os << "}";
  return os.str();
}

namespace detail {

inline std::vector<std::pair<std::string, Rat>> parse_pieces(std::string_view s,
                                                             std::string_view prefix) {
  std::string body{trim(s)};
  require(body.size() >= prefix.size() + 2 && body.compare(0, prefix.size(), prefix) == 0 &&
              body[prefix.size()] == '{' && body.back() == '}',
          Errc::ParseError, "path literal must look like " + std::string(prefix) + "{...}");
  std::vector<std::pair<std::string, Rat>> out;
  std::string inner = body.substr(prefix.size() + 1, body.size() - prefix.size() - 2);
  for (std::string_view piece : split(inner, ';')) {
    auto at = piece.rfind('@');
    require(at != std::string::npos, Errc::ParseError, "path piece needs '@ cut'");
    out.emplace_back(std::string(trim(piece.substr(0, at))),
                     parse_rat(trim(piece.substr(at + 1))));
  }
  require(!out.empty(), Errc::ParseError, "path literal has no pieces");
  return out;
}

}  // namespace detail

inline PLPath parse_pl(const AffineCartanData& cd, std::string_view s) {
  PLPath p;
  p.cuts.push_back(Rat(0));
  for (const auto& [head, cut] : detail::parse_pieces(s, "PL")) {
    std::string_view h = detail::trim(head);
    require(h.size() >= 2 && h.front() == '(' && h.back() == ')', Errc::ParseError,
            "path direction must look like (c1,...,cn|d)");
    std::string_view inner = h.substr(1, h.size() - 2);
    auto bar = inner.rfind('|');
    require(bar != std::string_view::npos, Errc::ParseError, "path direction needs '|'");
    LevelZeroWeight d = zero_weight(cd);
    auto coords = detail::split(inner.substr(0, bar), ',');
    check_dim(cd, coords.size(), "path direction");
    for (int k = 0; k < cd.rank; ++k) d.fun[k] = parse_rat(detail::trim(coords[k]));
    d.delta = parse_rat(detail::trim(inner.substr(bar + 1)));
    p.dirs.push_back(d);
    p.cuts.push_back(cut);
  }
  validate_pl(cd, p);
  return p;
}

inline SiLSPath parse_sils(const SilsContext& ctx, std::string_view s) {
  SiLSPath p;
  p.cuts.push_back(Rat(0));
  for (const auto& [head, cut] : detail::parse_pieces(s, "SiLS")) {
    p.elems.push_back(parse_element(ctx.cd, head));
    p.cuts.push_back(cut);
  }
  validate_sils(ctx, p);
  return p;
}

}  // namespace silpath

#pragma once
// Finite and affine Weyl group elements with exact integer matrix actions.
//
// A finite element stores its action on coroot coordinates (m), on root
// coordinates (r), and the two inverse matrices; all four are maintained
// under multiplication so inversion and weight actions are O(n^2) lookups.
// An affine element is a pair w * t_xi in the extended presentation
// W_af = W x Q^vee acting at level zero.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "silpath/cartan.hpp"
#include "silpath/error.hpp"
#include "silpath/rational.hpp"

namespace silpath {

namespace matdet {

inline std::vector<Int> identity(int n) {
  std::vector<Int> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

inline std::vector<Int> mul(int n, const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return c;
}

inline std::vector<Int> apply(int n, const std::vector<Int>& a, const std::vector<Int>& v) {
  std::vector<Int> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += a[static_cast<std::size_t>(i) * n + j] * v[j];
  return r;
}

}  // namespace matdet

struct FiniteWeylElem {
  int n = 0;
  std::vector<Int> m;   // action on coroot coordinates
  std::vector<Int> mi;  // inverse action on coroot coordinates
  std::vector<Int> r;   // action on root coordinates
  std::vector<Int> ri;  // inverse action on root coordinates

  bool operator==(const FiniteWeylElem& o) const { return m == o.m; }
  bool operator<(const FiniteWeylElem& o) const { return m < o.m; }
  bool is_identity() const { return m == matdet::identity(n); }
};

inline FiniteWeylElem finite_identity(const AffineCartanData& cd) {
  FiniteWeylElem w;
  w.n = cd.rank;
  w.m = w.mi = w.r = w.ri = matdet::identity(cd.rank);
  return w;
}

// Simple reflection r_i, i in 1..n.
inline FiniteWeylElem simple_reflection(const AffineCartanData& cd, int i) {
  require(i >= 1 && i <= cd.rank, Errc::OutOfDomain, "finite index out of range");
  const int n = cd.rank;
  FiniteWeylElem w = finite_identity(cd);
  for (int j = 0; j < n; ++j) {
    w.m[static_cast<std::size_t>(i - 1) * n + j] -= cd.A[j][i - 1];
    w.r[static_cast<std::size_t>(i - 1) * n + j] -= cd.A[i - 1][j];
  }
  w.mi = w.m;
  w.ri = w.r;
  return w;
}

inline FiniteWeylElem mul(const FiniteWeylElem& a, const FiniteWeylElem& b) {
  require(a.n == b.n, Errc::DimensionMismatch, "finite mul: rank mismatch");
  FiniteWeylElem c;
  c.n = a.n;
  c.m = matdet::mul(a.n, a.m, b.m);
  c.r = matdet::mul(a.n, a.r, b.r);
  c.mi = matdet::mul(a.n, b.mi, a.mi);
  c.ri = matdet::mul(a.n, b.ri, a.ri);
  return c;
}

inline FiniteWeylElem inv(const FiniteWeylElem& a) {
  FiniteWeylElem c = a;
  std::swap(c.m, c.mi);
  std::swap(c.r, c.ri);
  return c;
}

inline Coweight apply_coweight(const FiniteWeylElem& w, const Coweight& xi) {
  require(static_cast<int>(xi.coords.size()) == w.n, Errc::DimensionMismatch, "apply_coweight");
  return Coweight{matdet::apply(w.n, w.m, xi.coords)};
}

inline FiniteRoot apply_root(const FiniteWeylElem& w, const FiniteRoot& al) {
  require(static_cast<int>(al.coords.size()) == w.n, Errc::DimensionMismatch, "apply_root");
  return FiniteRoot{matdet::apply(w.n, w.r, al.coords)};
}

// w * mu for a level-zero weight: fun'[i] = <w^{-1} alpha_i^vee, mu>.
inline LevelZeroWeight apply_weight(const FiniteWeylElem& w, const LevelZeroWeight& mu) {
  require(static_cast<int>(mu.fun.size()) == w.n, Errc::DimensionMismatch, "apply_weight");
  LevelZeroWeight out;
  out.fun.assign(mu.fun.size(), Rat(0));
  out.delta = mu.delta;
  const int n = w.n;
  for (int i = 0; i < n; ++i) {
    Rat s{0};
    for (int k = 0; k < n; ++k) {
      Int c = w.mi[static_cast<std::size_t>(k) * n + i];
      if (c != 0) s += Rat(c) * mu.fun[k];
    }
    out.fun[i] = s;
  }
  return out;
}

inline int length(const AffineCartanData& cd, const FiniteWeylElem& w) {
  int len = 0;
  for (const auto& al : cd.positive_roots)
    if (!is_positive_vector(apply_root(w, al).coords)) ++len;
  return len;
}

// Right descent: w(alpha_i) is a negative root.
inline bool is_right_descent(const AffineCartanData& cd, const FiniteWeylElem& w, int i) {
  FiniteRoot al;
  al.coords.assign(cd.rank, 0);
  al.coords[i - 1] = 1;
  return !is_positive_vector(apply_root(w, al).coords);
}

// Canonical reduced word, lexicographically smallest descent chosen each step.
inline std::vector<int> reduced_word(const AffineCartanData& cd, FiniteWeylElem w) {
  std::vector<int> rev;
  while (!w.is_identity()) {
    int found = 0;
    for (int i = 1; i <= cd.rank; ++i)
      if (is_right_descent(cd, w, i)) {
        found = i;
        break;
      }
    require(found != 0, Errc::DataError, "element with no descent");
    rev.push_back(found);
    w = mul(w, simple_reflection(cd, found));
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

inline FiniteWeylElem from_word(const AffineCartanData& cd, const std::vector<int>& word) {
  FiniteWeylElem w = finite_identity(cd);
  for (int i : word) w = mul(w, simple_reflection(cd, i));
  return w;
}

// ---------------------------------------------------------------------------
// Affine elements x = w * t_xi.

struct AffineWeylElem {
  FiniteWeylElem w;
  Coweight xi;

  bool operator==(const AffineWeylElem& o) const { return w == o.w && xi == o.xi; }
  bool operator<(const AffineWeylElem& o) const {
    if (w == o.w) return xi < o.xi;
    return w < o.w;
  }
  bool is_identity() const {
    return w.is_identity() &&
           std::all_of(xi.coords.begin(), xi.coords.end(), [](Int c) { return c == 0; });
  }
};

inline AffineWeylElem affine_identity(const AffineCartanData& cd) {
  return AffineWeylElem{finite_identity(cd), Coweight{std::vector<Int>(cd.rank, 0)}};
}

inline AffineWeylElem translation(const AffineCartanData& cd, const Coweight& xi) {
  check_dim(cd, xi.coords.size(), "coweight");
  return AffineWeylElem{finite_identity(cd), xi};
}

inline AffineWeylElem from_finite(const AffineCartanData& cd, const FiniteWeylElem& w) {
  return AffineWeylElem{w, Coweight{std::vector<Int>(cd.rank, 0)}};
}

// (w t_xi)(v t_zeta) = wv t_{v^{-1} xi + zeta}.
inline AffineWeylElem mul(const AffineWeylElem& a, const AffineWeylElem& b) {
  AffineWeylElem c;
  c.w = mul(a.w, b.w);
  Coweight moved = apply_coweight(inv(b.w), a.xi);
  c.xi.coords.resize(moved.coords.size());
  for (std::size_t k = 0; k < moved.coords.size(); ++k)
    c.xi.coords[k] = moved.coords[k] + b.xi.coords[k];
  return c;
}

// (w t_xi)^{-1} = w^{-1} t_{-w xi}.
inline AffineWeylElem inv(const AffineWeylElem& a) {
  AffineWeylElem c;
  c.w = inv(a.w);
  c.xi = apply_coweight(a.w, a.xi);
  for (Int& v : c.xi.coords) v = -v;
  return c;
}

// x(alpha + n delta) = w(alpha) + (n - <xi, alpha>) delta.
inline AffineRoot apply_affine_root(const AffineCartanData& cd, const AffineWeylElem& x,
                                    const AffineRoot& b) {
  AffineRoot out;
  out.finite = apply_root(x.w, b.finite);
  out.n = b.n - pairing_root(cd, x.xi, b.finite);
  return out;
}

// x * mu at level zero: w(mu) - <xi, mu> delta.
inline LevelZeroWeight apply_weight(const AffineCartanData& cd, const AffineWeylElem& x,
                                    const LevelZeroWeight& mu) {
  LevelZeroWeight out = apply_weight(x.w, mu);
  out.delta -= pairing(cd, x.xi, mu);
  return out;
}

// r_{alpha + n delta} = r_alpha t_{n alpha^vee}; requires a real root.
inline AffineWeylElem reflection(const AffineCartanData& cd, const AffineRoot& b) {
  require(is_real(cd, b), Errc::NotARealRoot, "reflection: not a real root");
  const int n = cd.rank;
  Coweight av = coroot_of(cd, b.finite);
  FiniteWeylElem w = finite_identity(cd);
  for (int j = 0; j < n; ++j) {
    Int prj = 0;  // <alpha_j^vee, alpha>
    Int pcj = 0;  // <alpha^vee, alpha_j>
    for (int t = 0; t < n; ++t) {
      prj += cd.A[j][t] * b.finite.coords[t];
      pcj += av.coords[t] * cd.A[t][j];
    }
    for (int k = 0; k < n; ++k) {
      w.m[static_cast<std::size_t>(k) * n + j] -= prj * av.coords[k];
      w.r[static_cast<std::size_t>(k) * n + j] -= pcj * b.finite.coords[k];
    }
  }
  w.mi = w.m;
  w.ri = w.r;
  AffineWeylElem x;
  x.w = w;
  x.xi.coords.resize(n);
  for (int k = 0; k < n; ++k) x.xi.coords[k] = b.n * av.coords[k];
  return x;
}

inline AffineWeylElem simple_reflection_affine(const AffineCartanData& cd, int i) {
  if (i == 0) return reflection(cd, simple_affine_root(cd, 0));
  return from_finite(cd, simple_reflection(cd, i));
}

// Length via the translation formula:
// l(w t_xi) = sum_{alpha > 0} | <xi, alpha> + [w(alpha) < 0] |.
inline Int length(const AffineCartanData& cd, const AffineWeylElem& x) {
  Int len = 0;
  for (const auto& al : cd.positive_roots) {
    Int v = pairing_root(cd, x.xi, al);
    if (!is_positive_vector(apply_root(x.w, al).coords)) v += 1;
    len += v < 0 ? -v : v;
  }
  return len;
}

// Semi-infinite length: l(w) + 2 <xi, rho>.
inline Int sil(const AffineCartanData& cd, const AffineWeylElem& x) {
  Int s = 0;
  for (Int v : x.xi.coords) s += v;
  return length(cd, x.w) + 2 * s;
}

// Minimal-length coset representative of w W_J, J given as 1-based indices.
inline FiniteWeylElem min_coset_rep(const AffineCartanData& cd, FiniteWeylElem w,
                                    const std::vector<int>& J) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J)
      if (is_right_descent(cd, w, j)) {
        w = mul(w, simple_reflection(cd, j));
        moved = true;
        break;
      }
  }
  return w;
}

// J-relative semi-infinite length: l(min coset rep of w) + 2 <xi, rho - rho_J>.
inline Int sil_J(const AffineCartanData& cd, const AffineWeylElem& x, const std::vector<int>& J) {
  LevelZeroWeight r = sub(rho(cd), rho_of(cd, J));
  Rat v = Rat(length(cd, min_coset_rep(cd, x.w, J))) + Rat(2) * pairing(cd, x.xi, r);
  require(is_integral(v), Errc::DataError, "sil_J not integral");
  return v.numerator();
}

// Canonical reduced word over the affine generators, smallest left descent
// stripped first; the word multiplies left to right.
inline std::vector<int> reduced_word_affine(const AffineCartanData& cd, AffineWeylElem x);

// Left descent at affine index i: l(r_i y) < l(y), tested on roots.
inline bool is_left_descent_affine(const AffineCartanData& cd, const AffineWeylElem& y, int i) {
  AffineRoot b = simple_affine_root(cd, i);
  return !is_positive(apply_affine_root(cd, inv(y), b));
}

// Bruhat order on W_af by the lifting recursion over left descents.
inline bool bruhat_leq(const AffineCartanData& cd, AffineWeylElem x, AffineWeylElem y) {
  Int lx = length(cd, x);
  Int ly = length(cd, y);
  while (true) {
    if (x == y) return true;
    if (lx >= ly) return false;
    int desc = -1;
    for (int i = 0; i <= cd.rank; ++i)
      if (is_left_descent_affine(cd, y, i)) {
        desc = i;
        break;
      }
    require(desc >= 0, Errc::DataError, "nonidentity element with no left descent");
    AffineWeylElem ri = simple_reflection_affine(cd, desc);
    y = mul(ri, y);
    --ly;
    AffineWeylElem rx = mul(ri, x);
    Int lrx = length(cd, rx);
    if (lrx < lx) {
      x = rx;
      lx = lrx;
    }
  }
}

inline std::vector<int> reduced_word_affine(const AffineCartanData& cd, AffineWeylElem x) {
  std::vector<int> word;
  while (!x.is_identity()) {
    int desc = -1;
    for (int i = 0; i <= cd.rank; ++i)
      if (is_left_descent_affine(cd, x, i)) {
        desc = i;
        break;
      }
    require(desc >= 0, Errc::DataError, "nonidentity element with no left descent");
    word.push_back(desc);
    x = mul(simple_reflection_affine(cd, desc), x);
  }
  return word;
}

// ---------------------------------------------------------------------------
// Element literal: `w=[1 2] t=[0,1]`.

inline std::string to_literal(const AffineCartanData& cd, const AffineWeylElem& x) {
  std::string s = "w=[";
  auto word = reduced_word(cd, x.w);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(word[k]);
  }
  s += "] t=[";
  for (int k = 0; k < cd.rank; ++k) {
    if (k) s += ',';
    s += std::to_string(x.xi.coords[k]);
  }
  s += ']';
  return s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

// Extracts the bracketed payload following `key=[`.
inline std::string_view bracket_payload(std::string_view s, std::string_view key) {
  std::string pat = std::string(key) + "=[";
  std::size_t at = s.find(pat);
  require(at != std::string_view::npos, Errc::ParseError,
          "element literal missing '" + pat + "'");
  std::size_t start = at + pat.size();
  std::size_t end = s.find(']', start);
  require(end != std::string_view::npos, Errc::ParseError, "element literal missing ']'");
  return s.substr(start, end - start);
}

}  // namespace detail

inline AffineWeylElem parse_element(const AffineCartanData& cd, std::string_view s) {
  std::string_view wpart = detail::bracket_payload(s, "w");
  std::string_view tpart = detail::bracket_payload(s, "t");
  FiniteWeylElem w = finite_identity(cd);
  for (std::string_view tok : detail::split(wpart, ' ')) {
    tok = detail::trim(tok);
    if (tok.empty()) continue;
    Rat v = parse_rat(tok);
    require(is_integral(v) && v.numerator() >= 1 && v.numerator() <= cd.rank, Errc::ParseError,
            "bad generator index in element literal");
    w = mul(w, simple_reflection(cd, static_cast<int>(v.numerator())));
  }
  std::vector<Int> coords;
  for (std::string_view tok : detail::split(tpart, ',')) {
    tok = detail::trim(tok);
    require(!tok.empty(), Errc::ParseError, "empty coordinate in element literal");
    Rat v = parse_rat(tok);
    require(is_integral(v), Errc::ParseError, "translation coordinate must be an integer");
    coords.push_back(v.numerator());
  }
  require(static_cast<int>(coords.size()) == cd.rank, Errc::ParseError,
          "translation coordinate count mismatch");
  return AffineWeylElem{w, Coweight{coords}};
}

}  // namespace silpath

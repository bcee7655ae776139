#pragma once
// Static tables for an untwisted affine root system: finite Cartan matrix,
// positive roots, highest root, marks and comarks, symmetrizer, rho vectors,
// and exact pairings between coweights, roots, and level-zero weights.
//
// Finite indices are 1-based (i = 1..n) in every public signature; the affine
// index set adds i = 0. Coordinate vectors are stored 0-based internally.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "silpath/error.hpp"
#include "silpath/rational.hpp"

namespace silpath {

// Integer vector over the simple roots alpha_1..alpha_n.
struct FiniteRoot {
  std::vector<Int> coords;
  auto operator<=>(const FiniteRoot&) const = default;
};

// Integer vector over the simple coroots alpha_1^vee..alpha_n^vee.
struct Coweight {
  std::vector<Int> coords;
  auto operator<=>(const Coweight&) const = default;
};

// Level-zero weight recorded by its pairings with the simple coroots plus a
// rational multiple of delta: mu = sum_i fun[i-1] * varpi_i + delta * (null root).
struct LevelZeroWeight {
  std::vector<Rat> fun;
  Rat delta{0};
  bool operator==(const LevelZeroWeight& o) const { return fun == o.fun && delta == o.delta; }
  bool operator<(const LevelZeroWeight& o) const {
    if (fun != o.fun) return std::lexicographical_compare(fun.begin(), fun.end(), o.fun.begin(), o.fun.end());
    return delta < o.delta;
  }
};

// Real affine root alpha + n*delta with alpha a finite root.
struct AffineRoot {
  FiniteRoot finite;
  Int n = 0;
  auto operator<=>(const AffineRoot&) const = default;
};

inline bool is_zero(const FiniteRoot& a) {
  return std::all_of(a.coords.begin(), a.coords.end(), [](Int c) { return c == 0; });
}

inline bool is_positive_vector(const std::vector<Int>& c) {
  for (Int v : c) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

struct AffineCartanData {
  char type_label = 0;
  int rank = 0;
  std::vector<std::vector<Int>> A;         // A[i-1][j-1] = <alpha_i^vee, alpha_j>
  std::vector<Int> d;                      // minimal symmetrizer: d_i * A_ij symmetric
  std::vector<FiniteRoot> positive_roots;  // sorted by (height, coords)
  FiniteRoot theta;                        // highest root
  std::vector<Int> marks;                  // a_0..a_n, coefficients of delta
  std::vector<Int> comarks;                // a_0^vee..a_n^vee, coefficients of the canonical central element
  std::set<std::vector<Int>> pos_coords;

  int n() const { return rank; }
  Int a(int i, int j) const { return A[i - 1][j - 1]; }

  bool is_positive_root(const FiniteRoot& al) const { return pos_coords.count(al.coords) != 0; }
  bool is_root(const FiniteRoot& al) const {
    if (is_positive_root(al)) return true;
    std::vector<Int> neg(al.coords);
    for (Int& v : neg) v = -v;
    return pos_coords.count(neg) != 0;
  }
};

inline void check_dim(const AffineCartanData& cd, std::size_t got, const char* what) {
  require(got == static_cast<std::size_t>(cd.rank), Errc::DimensionMismatch,
          std::string(what) + " has " + std::to_string(got) + " coordinates, rank is " +
              std::to_string(cd.rank));
}

namespace detail {

inline std::vector<std::vector<Int>> finite_cartan_matrix(char type, int rank) {
  auto chain = [&](int n) {
    std::vector<std::vector<Int>> A(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
    return A;
  };
  auto reject = [&] {
    fail(Errc::UnsupportedType,
         std::string("unsupported type ") + type + "_" + std::to_string(rank));
  };
  switch (type) {
    case 'A': {
      if (rank < 1) reject();
      return chain(rank);
    }
    case 'B': {
      if (rank < 2) reject();
      auto A = chain(rank);
      A[rank - 1][rank - 2] = -2;  // alpha_n short
      return A;
    }
    case 'C': {
      if (rank < 2) reject();
      auto A = chain(rank);
      A[rank - 2][rank - 1] = -2;  // alpha_n long
      return A;
    }
    case 'D': {
      if (rank < 4) reject();
      auto A = chain(rank - 1);
      for (auto& row : A) row.push_back(0);
      A.push_back(std::vector<Int>(rank, 0));
      A[rank - 1][rank - 1] = 2;
      A[rank - 1][rank - 3] = A[rank - 3][rank - 1] = -1;
      A[rank - 1][rank - 2] = A[rank - 2][rank - 1] = 0;
      return A;
    }
    case 'E': {
      if (rank < 6 || rank > 8) reject();
      // Node 2 hangs off node 4; nodes 1,3,4,5,..,n form a chain.
      std::vector<std::vector<Int>> A(rank, std::vector<Int>(rank, 0));
      for (int i = 0; i < rank; ++i) A[i][i] = 2;
      auto join = [&](int i, int j) { A[i - 1][j - 1] = A[j - 1][i - 1] = -1; };
      join(1, 3);
      join(3, 4);
      join(2, 4);
      for (int i = 4; i < rank; ++i) join(i, i + 1);
      return A;
    }
    case 'F': {
      if (rank != 4) reject();
      auto A = chain(4);
      A[2][1] = -2;  // alpha_3, alpha_4 short
      return A;
    }
    case 'G': {
      if (rank != 2) reject();
      return {{2, -1}, {-3, 2}};
    }
    default:
      reject();
  }
  return {};
}

inline std::size_t expected_pos_root_count(char type, int rank) {
  switch (type) {
    case 'A': return static_cast<std::size_t>(rank) * (rank + 1) / 2;
    case 'B':
    case 'C': return static_cast<std::size_t>(rank) * rank;
    case 'D': return static_cast<std::size_t>(rank) * (rank - 1);
    case 'E': return rank == 6 ? 36u : rank == 7 ? 63u : 120u;
    case 'F': return 24u;
    case 'G': return 6u;
    default: return 0u;
  }
}

}  // namespace detail

namespace detail {
inline AffineCartanData build_tables(char type, int rank) {
  AffineCartanData cd;
  cd.type_label = type;
  cd.rank = rank;
  cd.A = detail::finite_cartan_matrix(type, rank);
  const int n = rank;

  // Minimal positive integer symmetrizer: propagate d_i A_ij = d_j A_ji over
  // the (connected) diagram with exact rationals, then clear denominators and
  // common factors.
  std::vector<Rat> dr(n, Rat(0));
  dr[0] = Rat(1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (cd.A[i][j] == 0 || dr[i] == Rat(0)) continue;
        Rat dj = dr[i] * Rat(cd.A[i][j], cd.A[j][i]);
        if (dr[j] == Rat(0)) {
          dr[j] = dj;
          changed = true;
        } else {
          require(dr[j] == dj, Errc::DataError, "diagram not symmetrizable");
        }
      }
  }
  Int lcm_den = 1;
  for (const Rat& v : dr) {
    require(v > Rat(0), Errc::DataError, "diagram not connected");
    lcm_den = std::lcm(lcm_den, v.denominator());
  }
  cd.d.assign(n, 0);
  for (int i = 0; i < n; ++i) cd.d[i] = (dr[i] * Rat(lcm_den)).numerator();
  Int g = 0;
  for (Int v : cd.d) g = std::gcd(g, v);
  for (Int& v : cd.d) v /= g;

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping the nonnegative cone. Every positive root arises this way.
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<Int> c = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      Int pair_i = 0;
      for (int j = 0; j < n; ++j) pair_i += cd.A[i][j] * c[j];
      std::vector<Int> c2 = c;
      c2[i] -= pair_i;
      if (std::any_of(c2.begin(), c2.end(), [](Int v) { return v < 0; })) continue;
      if (seen.insert(c2).second) queue.push_back(c2);
    }
  }
  require(seen.size() == detail::expected_pos_root_count(type, rank), Errc::DataError,
          "positive root count mismatch");
  for (const auto& c : seen) cd.positive_roots.push_back(FiniteRoot{c});
  std::sort(cd.positive_roots.begin(), cd.positive_roots.end(),
            [](const FiniteRoot& x, const FiniteRoot& y) {
              Int hx = 0, hy = 0;
              for (Int v : x.coords) hx += v;
              for (Int v : y.coords) hy += v;
              if (hx != hy) return hx < hy;
              return x.coords < y.coords;
            });
  cd.pos_coords = std::move(seen);

  cd.theta = cd.positive_roots.back();
  {
    Int ht_top = 0, ht_next = 0;
    for (Int v : cd.theta.coords) ht_top += v;
    if (cd.positive_roots.size() >= 2) {
      const auto& prev = cd.positive_roots[cd.positive_roots.size() - 2];
      for (Int v : prev.coords) ht_next += v;
    }
    require(ht_top > ht_next || cd.positive_roots.size() == 1, Errc::DataError,
            "highest root not unique");
  }

  cd.marks.assign(1, 1);
  for (Int v : cd.theta.coords) cd.marks.push_back(v);

  // comarks are filled by build_cartan once coroot_of is available.
  return cd;
}
}  // namespace detail

// <xi, alpha> for a coweight and a finite root, via the Cartan matrix.
inline Int pairing_root(const AffineCartanData& cd, const Coweight& xi, const FiniteRoot& al) {
  check_dim(cd, xi.coords.size(), "coweight");
  check_dim(cd, al.coords.size(), "root");
  Int s = 0;
  for (int i = 0; i < cd.rank; ++i)
    for (int j = 0; j < cd.rank; ++j) s += xi.coords[i] * cd.A[i][j] * al.coords[j];
  return s;
}

// <xi, mu> for a coweight and a level-zero weight (delta pairs to zero).
inline Rat pairing(const AffineCartanData& cd, const Coweight& xi, const LevelZeroWeight& mu) {
  check_dim(cd, xi.coords.size(), "coweight");
  check_dim(cd, mu.fun.size(), "weight");
  Rat s{0};
  for (int i = 0; i < cd.rank; ++i) s += Rat(xi.coords[i]) * mu.fun[i];
  return s;
}

// alpha^vee for alpha in Delta: alpha^vee = sum_i (d_i c_i / d_alpha) alpha_i^vee.
inline Coweight coroot_of(const AffineCartanData& cd, const FiniteRoot& al) {
  check_dim(cd, al.coords.size(), "root");
  require(cd.is_root(al), Errc::NotARoot, "coroot_of: not a root");
  // 2*d_alpha = (alpha, alpha) under the symmetrized form G = diag(d) * A.
  Int norm2 = 0;
  for (int i = 0; i < cd.rank; ++i)
    for (int j = 0; j < cd.rank; ++j) norm2 += al.coords[i] * cd.d[i] * cd.A[i][j] * al.coords[j];
  require(norm2 > 0 && norm2 % 2 == 0, Errc::DataError, "root norm not even");
  Int da = norm2 / 2;
  Coweight cv;
  cv.coords.resize(cd.rank);
  for (int i = 0; i < cd.rank; ++i) {
    Int num = cd.d[i] * al.coords[i];
    require(num % da == 0, Errc::DataError, "coroot not integral");
    cv.coords[i] = num / da;
  }
  return cv;
}

inline AffineCartanData build_cartan(char type, int rank) {
  AffineCartanData cd = detail::build_tables(type, rank);
  Coweight tv = coroot_of(cd, cd.theta);
  cd.comarks.assign(1, 1);
  for (Int v : tv.coords) cd.comarks.push_back(v);
  return cd;
}

inline LevelZeroWeight zero_weight(const AffineCartanData& cd) {
  return LevelZeroWeight{std::vector<Rat>(cd.rank, Rat(0)), Rat(0)};
}

// The level-zero weight class of a finite root: fun[i-1] = <alpha_i^vee, alpha>.
inline LevelZeroWeight weight_of_root(const AffineCartanData& cd, const FiniteRoot& al) {
  check_dim(cd, al.coords.size(), "root");
  LevelZeroWeight mu = zero_weight(cd);
  for (int i = 0; i < cd.rank; ++i) {
    Int s = 0;
    for (int j = 0; j < cd.rank; ++j) s += cd.A[i][j] * al.coords[j];
    mu.fun[i] = Rat(s);
  }
  return mu;
}

// Weight of the affine root alpha + n*delta.
inline LevelZeroWeight weight_of_affine_root(const AffineCartanData& cd, const AffineRoot& b) {
  LevelZeroWeight mu = weight_of_root(cd, b.finite);
  mu.delta = Rat(b.n);
  return mu;
}

inline LevelZeroWeight add(const LevelZeroWeight& a, const LevelZeroWeight& b) {
  require(a.fun.size() == b.fun.size(), Errc::DimensionMismatch, "weight add");
  LevelZeroWeight r = a;
  for (std::size_t i = 0; i < r.fun.size(); ++i) r.fun[i] += b.fun[i];
  r.delta += b.delta;
  return r;
}

inline LevelZeroWeight sub(const LevelZeroWeight& a, const LevelZeroWeight& b) {
  require(a.fun.size() == b.fun.size(), Errc::DimensionMismatch, "weight sub");
  LevelZeroWeight r = a;
  for (std::size_t i = 0; i < r.fun.size(); ++i) r.fun[i] -= b.fun[i];
  r.delta -= b.delta;
  return r;
}

inline LevelZeroWeight scale(const LevelZeroWeight& a, const Rat& c) {
  LevelZeroWeight r = a;
  for (auto& v : r.fun) v *= c;
  r.delta *= c;
  return r;
}

// Half-sum of the positive roots with support inside J (1-based index list).
inline LevelZeroWeight rho_of(const AffineCartanData& cd, const std::vector<int>& J) {
  std::vector<char> inJ(cd.rank + 1, 0);
  for (int j : J) {
    require(j >= 1 && j <= cd.rank, Errc::OutOfDomain, "rho_of: index out of range");
    inJ[j] = 1;
  }
  LevelZeroWeight r = zero_weight(cd);
  for (const auto& al : cd.positive_roots) {
    bool keep = true;
    for (int i = 0; i < cd.rank; ++i)
      if (al.coords[i] != 0 && !inJ[i + 1]) {
        keep = false;
        break;
      }
    if (keep) r = add(r, weight_of_root(cd, al));
  }
  return scale(r, Rat(1, 2));
}

inline LevelZeroWeight rho(const AffineCartanData& cd) {
  std::vector<int> all;
  for (int i = 1; i <= cd.rank; ++i) all.push_back(i);
  return rho_of(cd, all);
}

// <alpha_i^vee, mu> for affine i in 0..n; i = 0 uses alpha_0^vee = c - theta^vee,
// and the central element pairs level-zero weights to zero.
inline Rat pair_simple_acoroot(const AffineCartanData& cd, int i, const LevelZeroWeight& mu) {
  require(i >= 0 && i <= cd.rank, Errc::OutOfDomain, "affine index out of range");
  check_dim(cd, mu.fun.size(), "weight");
  if (i > 0) return mu.fun[i - 1];
  Rat s{0};
  for (int k = 0; k < cd.rank; ++k) s -= Rat(cd.comarks[k + 1]) * mu.fun[k];
  return s;
}

// Dominant level-zero weight from nonnegative multiplicities of the
// level-zero fundamental weights.
inline LevelZeroWeight weight_from_multiplicities(const AffineCartanData& cd,
                                                  const std::vector<Int>& m) {
  check_dim(cd, m.size(), "weight multiplicities");
  LevelZeroWeight mu = zero_weight(cd);
  for (int i = 0; i < cd.rank; ++i) mu.fun[i] = Rat(m[i]);
  return mu;
}

inline bool same_data(const AffineCartanData& a, const AffineCartanData& b) {
  return a.type_label == b.type_label && a.rank == b.rank;
}

inline bool is_positive(const AffineRoot& b) {
  if (b.n > 0) return true;
  if (b.n < 0) return false;
  return is_positive_vector(b.finite.coords);
}

inline bool is_real(const AffineCartanData& cd, const AffineRoot& b) {
  return !is_zero(b.finite) && cd.is_root(b.finite);
}

inline AffineRoot negate(const AffineRoot& b) {
  AffineRoot r = b;
  r.n = -r.n;
  for (Int& v : r.finite.coords) v = -v;
  return r;
}

// Simple affine roots: alpha_i for i in I, and alpha_0 = delta - theta.
inline AffineRoot simple_affine_root(const AffineCartanData& cd, int i) {
  require(i >= 0 && i <= cd.rank, Errc::OutOfDomain, "affine index out of range");
  AffineRoot b;
  b.finite.coords.assign(cd.rank, 0);
  if (i == 0) {
    for (int k = 0; k < cd.rank; ++k) b.finite.coords[k] = -cd.theta.coords[k];
    b.n = 1;
  } else {
    b.finite.coords[i - 1] = 1;
    b.n = 0;
  }
  return b;
}

}  // namespace silpath

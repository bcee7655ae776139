#pragma once
// Parabolic data for a subset J of the finite index set: the root subsystem,
// its affine simple system, minimal coset representatives inside W_af, and
// the adjustment map that normalizes translation parts.

#include <algorithm>
#include <string>
#include <vector>

#include "silpath/cartan.hpp"
#include "silpath/error.hpp"
#include "silpath/weyl.hpp"

namespace silpath {

struct ParabolicSubset {
  std::vector<int> J;     // sorted 1-based indices
  std::vector<char> inJ;  // lookup, size rank + 1
  std::vector<FiniteRoot> delta_J_plus;
  std::vector<std::vector<int>> components;  // connected components of J
  std::vector<FiniteRoot> component_theta;   // highest root per component
  std::vector<AffineRoot> SJ;                // alpha_j (j in J) and delta - theta_K
  LevelZeroWeight rho_J;

  bool contains(int i) const { return i >= 1 && i < static_cast<int>(inJ.size()) && inJ[i]; }
  bool root_in_J(const FiniteRoot& al) const {
    for (std::size_t k = 0; k < al.coords.size(); ++k)
      if (al.coords[k] != 0 && !inJ[k + 1]) return false;
    return true;
  }
};

inline ParabolicSubset build_parabolic(const AffineCartanData& cd, std::vector<int> J) {
  ParabolicSubset ps;
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int j : J)
    require(j >= 1 && j <= cd.rank, Errc::OutOfDomain, "parabolic index out of range");
  ps.J = J;
  ps.inJ.assign(cd.rank + 1, 0);
  for (int j : J) ps.inJ[j] = 1;

  for (const auto& al : cd.positive_roots)
    if (ps.root_in_J(al)) ps.delta_J_plus.push_back(al);

  std::vector<char> seen(cd.rank + 1, 0);
  for (int j : J) {
    if (seen[j]) continue;
    std::vector<int> comp;
    std::vector<int> stack{j};
    seen[j] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : J)
        if (!seen[v] && cd.a(u, v) != 0) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    ps.components.push_back(comp);
  }

  for (const auto& comp : ps.components) {
    std::vector<char> inK(cd.rank + 1, 0);
    for (int j : comp) inK[j] = 1;
    FiniteRoot best;
    Int best_ht = -1;
    for (const auto& al : ps.delta_J_plus) {
      bool inside = true;
      Int ht = 0;
      for (std::size_t k = 0; k < al.coords.size(); ++k) {
        if (al.coords[k] != 0 && !inK[k + 1]) inside = false;
        ht += al.coords[k];
      }
      if (inside && ht > best_ht) {
        best_ht = ht;
        best = al;
      }
    }
    require(best_ht >= 0, Errc::DataError, "empty component");
    ps.component_theta.push_back(best);
  }

  for (int j : J) ps.SJ.push_back(simple_affine_root(cd, j));
  for (const auto& th : ps.component_theta) {
    AffineRoot b;
    b.finite.coords.resize(cd.rank);
    for (int k = 0; k < cd.rank; ++k) b.finite.coords[k] = -th.coords[k];
    b.n = 1;
    ps.SJ.push_back(b);
  }

  ps.rho_J = rho_of(cd, J);
  return ps;
}

// x lies in the set of minimal coset representatives iff it maps the affine
// simple system of Delta_J to positive roots; positivity on the finitely many
// generators propagates to the whole positive subsystem.
inline bool is_peterson_rep(const AffineCartanData& cd, const ParabolicSubset& ps,
                            const AffineWeylElem& x) {
  for (const auto& s : ps.SJ)
    if (!is_positive(apply_affine_root(cd, x, s))) return false;
  return true;
}

// Projection onto the minimal representative of x (W_J)_af: right-multiply by
// the reflection of a violated generator until none is violated. Each step
// strictly decreases the ordinary length.
inline AffineWeylElem proj_J(const AffineCartanData& cd, const ParabolicSubset& ps,
                             AffineWeylElem x) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& s : ps.SJ)
      if (!is_positive(apply_affine_root(cd, x, s))) {
        x = mul(x, reflection(cd, s));
        moved = true;
        break;
      }
  }
  return x;
}

// <xi, gamma> in {-1, 0} for every positive root gamma of Delta_J.
inline bool is_J_adjusted(const AffineCartanData& cd, const ParabolicSubset& ps,
                          const Coweight& xi) {
  for (const auto& al : ps.delta_J_plus) {
    Int v = pairing_root(cd, xi, al);
    if (v != 0 && v != -1) return false;
  }
  return true;
}

struct Adjustment {
  Coweight phi;       // correction in the coroot lattice of J
  FiniteWeylElem z;   // Weyl part of the projected translation
};

// proj of t_xi equals z t_{xi + phi}; phi lands in Q_J^vee and xi + phi is
// the unique J-adjusted element of xi + Q_J^vee.
inline Adjustment adjust(const AffineCartanData& cd, const ParabolicSubset& ps,
                         const Coweight& xi) {
  AffineWeylElem p = proj_J(cd, ps, translation(cd, xi));
  Adjustment out;
  out.z = p.w;
  out.phi.coords.resize(cd.rank);
  for (int k = 0; k < cd.rank; ++k) {
    out.phi.coords[k] = p.xi.coords[k] - xi.coords[k];
    require(out.phi.coords[k] == 0 || ps.inJ[k + 1], Errc::DataError,
            "adjustment left the J coroot lattice");
  }
  return out;
}

// Kill the J coordinates; the class of xi in the quotient by Q_J^vee.
inline Coweight project_Jc(const ParabolicSubset& ps, const Coweight& xi) {
  Coweight out = xi;
  for (std::size_t k = 0; k < out.coords.size(); ++k)
    if (ps.inJ[k + 1]) out.coords[k] = 0;
  return out;
}

// T_xi: the minimal representative of t_xi (W_J)_af.
inline AffineWeylElem translation_rep(const AffineCartanData& cd, const ParabolicSubset& ps,
                                      const Coweight& xi) {
  return proj_J(cd, ps, translation(cd, xi));
}

struct PetersonParts {
  FiniteWeylElem w;  // minimal coset representative in W^J
  Coweight xi;       // J-adjusted translation part
  FiniteWeylElem z;  // z_xi, the W_J part attached to xi
};

// Writes x in (W^J)_af as w z_xi t_xi.
inline PetersonParts peterson_decompose(const AffineCartanData& cd, const ParabolicSubset& ps,
                                        const AffineWeylElem& x) {
  require(is_peterson_rep(cd, ps, x), Errc::NotAPetersonRep,
          "peterson_decompose: " + to_literal(cd, x));
  PetersonParts out;
  out.xi = x.xi;
  Adjustment ad = adjust(cd, ps, x.xi);
  require(std::all_of(ad.phi.coords.begin(), ad.phi.coords.end(), [](Int c) { return c == 0; }),
          Errc::NotAPetersonRep, "translation part not J-adjusted");
  out.z = ad.z;
  out.w = mul(x.w, inv(ad.z));
  require(min_coset_rep(cd, out.w, ps.J) == out.w, Errc::DataError,
          "decomposition left W^J");
  return out;
}

inline FiniteWeylElem min_coset_rep(const AffineCartanData& cd, const FiniteWeylElem& w,
                                    const ParabolicSubset& ps) {
  return min_coset_rep(cd, w, ps.J);
}

}  // namespace silpath

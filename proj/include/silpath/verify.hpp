#pragma once

// Verification suites: each check pins a configuration, recomputes the claim
// from scratch with exact arithmetic, and reports pass or fail with a
// witness.  Checks are independent and run in parallel; report assembly is
// ordered.

#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "silpath/crystal.hpp"

namespace silpath {
namespace checks {

struct CheckReport {
  int id = 0;
  std::string name;
  bool pass = true;
  std::string detail;
};

namespace detail {

inline std::string wt_str(const LevelZeroWeight& w) { return weight_str(w); }

inline SilsContext ctx_of(char type, int rank, const std::vector<Int>& mult) {
  return make_context(build_cartan(type, rank), mult);
}

inline LabeledCrystalBall seed_ball(const SilsContext& ctx, int depth) {
  return generate_ball(ctx, make_node(ctx, initial_path(ctx)), depth);
}

inline std::set<AffineWeylElem> ball_vertices(const SilsContext& ctx, const LabeledCrystalBall& b) {
  std::set<AffineWeylElem> out;
  for (const auto& n : b.nodes)
    for (const auto& x : std::get<SiLSPath>(n.payload).elems) out.insert(x);
  return out;
}

inline std::vector<Coweight> coweight_box(int rank, Int lo, Int hi) {
  std::vector<Coweight> out{Coweight{std::vector<Int>(static_cast<std::size_t>(rank), lo)}};
  for (bool grown = true; grown;) {
    grown = false;
    Coweight next = out.back();
    for (int k = 0; k < rank; ++k) {
      if (next.coords[static_cast<std::size_t>(k)] < hi) {
        ++next.coords[static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j) next.coords[static_cast<std::size_t>(j)] = lo;
        out.push_back(next);
        grown = true;
        break;
      }
    }
  }
  return out;
}

inline CheckReport failed(CheckReport r, const std::string& witness) {
  r.pass = false;
  r.detail = witness;
  return r;
}

}  // namespace detail

// Check 1: the ball of the initial path is isomorphic to the ball of the
// one-column tensor product, with identical interior weight multiplicities.
inline CheckReport check_model_isomorphism() {
  CheckReport r{1, "model isomorphism"};
  struct Instance {
    char type;
    int rank;
    std::vector<Int> mult;
    int depth;
  };
  int weights = 0;
  for (const Instance& in : {Instance{'A', 2, {1, 1}, 6}, Instance{'A', 1, {1}, 8},
                             Instance{'A', 1, {2}, 6}}) {
    SilsContext ctx = detail::ctx_of(in.type, in.rank, in.mult);
    LabeledCrystalBall a = detail::seed_ball(ctx, in.depth);
    LabeledCrystalBall b = generate_ball(ctx, reference_seed(ctx), in.depth);
    std::string tag = std::string(1, in.type) + std::to_string(in.rank) + " depth " +
                      std::to_string(in.depth);
    IsoReport iso = iso_check(a, b);
    if (!iso.isomorphic) return detail::failed(r, tag + ": " + iso.detail);
    auto wa = weight_multiplicities(a, true);
    auto wb = weight_multiplicities(b, true);
    if (wa != wb) return detail::failed(r, tag + ": interior weight multiplicities differ");
    weights += static_cast<int>(wa.size());
  }
  r.detail = "3 instances isomorphic, " + std::to_string(weights) + " interior weight classes";
  return r;
}

// Check 2: projecting the ball onto the finite path model is surjective onto
// the straight-seed ball but not injective, so the two balls mismatch.
inline CheckReport check_projection_witness() {
  CheckReport r{2, "projection witness"};
  SilsContext ctx = detail::ctx_of('A', 2, {1, 1});
  LabeledCrystalBall a = detail::seed_ball(ctx, 6);
  LabeledCrystalBall b = generate_ball(ctx, make_node(ctx, straight_pl(ctx.lambda)), 6);
  std::map<PLPath, std::vector<int>> fibers;
  for (std::size_t id = 0; id < a.nodes.size(); ++id) {
    PLPath q = project_path(ctx, std::get<SiLSPath>(a.nodes[id].payload));
    silpath::detail::normalize_pieces(q.dirs, q.cuts);
    fibers[q].push_back(static_cast<int>(id));
  }
  for (std::size_t id = 0; id < b.nodes.size(); ++id)
    if (fibers.find(std::get<PLPath>(b.nodes[id].payload)) == fibers.end())
      return detail::failed(r, "projection misses node " + std::to_string(id) +
                                   " of the straight-seed ball");
  int collisions = 0;
  std::string witness;
  for (const auto& [q, ids] : fibers) {
    if (ids.size() < 2) continue;
    ++collisions;
    if (witness.empty())
      witness = node_str(ctx, a.nodes[static_cast<std::size_t>(ids[0])]) + " and " +
                node_str(ctx, a.nodes[static_cast<std::size_t>(ids[1])]);
  }
  if (collisions == 0) return detail::failed(r, "projection is injective on the ball");
  IsoReport iso = iso_check(a, b);
  if (iso.isomorphic) return detail::failed(r, "balls unexpectedly isomorphic");
  r.detail = "surjective onto " + std::to_string(b.nodes.size()) + " nodes, " +
             std::to_string(collisions) + " collision fibers (e.g. " + witness +
             "), mismatch: " + iso.detail;
  return r;
}

// Check 3: every ball node is a valid path and e/f invert each other across
// every edge.
inline CheckReport check_operator_stability() {
  CheckReport r{3, "operator stability"};
  struct Instance {
    char type;
    int rank;
    std::vector<Int> mult;
    int depth;
  };
  Int nodes = 0, edges = 0;
  for (const Instance& in : {Instance{'A', 2, {1, 1}, 6}, Instance{'A', 1, {1}, 8},
                             Instance{'A', 1, {2}, 6}, Instance{'A', 1, {2}, 8}}) {
    SilsContext ctx = detail::ctx_of(in.type, in.rank, in.mult);
    LabeledCrystalBall ball = detail::seed_ball(ctx, in.depth);
    std::string tag = std::string(1, in.type) + std::to_string(in.rank) + " depth " +
                      std::to_string(in.depth);
    for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
      try {
        validate_sils(ctx, std::get<SiLSPath>(ball.nodes[id].payload));
      } catch (const Error& e) {
        return detail::failed(r, tag + " node " + std::to_string(id) + ": " + e.what());
      }
      ++nodes;
    }
    for (const BallEdge& e : ball.edges) {
      auto down = op_f(ctx, ball.nodes[static_cast<std::size_t>(e.src)], e.i);
      auto up = op_e(ctx, ball.nodes[static_cast<std::size_t>(e.dst)], e.i);
      if (!down || !up || !(*down == ball.nodes[static_cast<std::size_t>(e.dst)]) ||
          !(*up == ball.nodes[static_cast<std::size_t>(e.src)]))
        return detail::failed(r, tag + ": operators fail to invert at edge " +
                                     std::to_string(e.src) + " -" + std::to_string(e.i) +
                                     "-> " + std::to_string(e.dst));
      ++edges;
    }
  }
  r.detail = std::to_string(nodes) + " nodes valid, " + std::to_string(edges) +
             " edges inverted";
  return r;
}

// Check 4: partition tuples classify components: the canonical representative
// round-trips, its ball matches the tuple tensored with the initial node, and
// the weight shifts by the tuple size.
inline CheckReport check_component_classification() {
  CheckReport r{4, "component classification"};
  SilsContext ctx = detail::ctx_of('A', 1, {2});
  for (Int k = 0; k <= 3; ++k) {
    std::vector<std::vector<Int>> parts{{}};
    if (k > 0) parts[0].push_back(k);
    PartitionTuple rho = make_partition_tuple(ctx, parts);
    std::string tag = "tuple " + par_str(rho);
    SiLSPath eta = xi_map(ctx, rho);
    try {
      validate_sils(ctx, eta);
    } catch (const Error& e) {
      return detail::failed(r, tag + ": representative invalid: " + e.what());
    }
    if (!(theta_map(ctx, eta) == rho))
      return detail::failed(r, tag + ": classification maps do not invert");
    CrystalNode seed = make_node(ctx, eta);
    LevelZeroWeight expect = ctx.lambda;
    expect.delta -= Rat(k);
    if (!(seed.wt == expect))
      return detail::failed(r, tag + ": weight is " + detail::wt_str(seed.wt) +
                                   ", expected " + detail::wt_str(expect));
    CrystalNode tens = node_of_tensor(
        ctx, {make_node(ctx, rho), make_node(ctx, initial_path(ctx))});
    IsoReport iso = iso_check(generate_ball(ctx, seed, 6), generate_ball(ctx, tens, 6));
    if (!iso.isomorphic) return detail::failed(r, tag + ": " + iso.detail);
  }
  r.detail = "4 components classified at depth 6";
  return r;
}

// Check 5: the closed-form coweight criterion for a directed path between
// translation nodes agrees with breadth-first reachability.
inline CheckReport check_translation_criterion() {
  CheckReport r{5, "translation criterion"};
  struct Instance {
    char type;
    int rank;
    std::vector<Int> mult;
  };
  Int cases = 0;
  for (const Instance& in : {Instance{'A', 1, {1}}, Instance{'A', 1, {2}},
                             Instance{'A', 1, {3}}, Instance{'A', 2, {1, 0}},
                             Instance{'A', 2, {1, 1}}, Instance{'A', 2, {2, 0}}}) {
    SilsContext ctx = detail::ctx_of(in.type, in.rank, in.mult);
    std::vector<Coweight> box;
    for (const Coweight& c : detail::coweight_box(in.rank, -2, 2))
      if (is_J_adjusted(ctx.cd, ctx.ps, c)) box.push_back(c);
    std::vector<AffineWeylElem> reps;
    std::vector<Int> sils;
    Int maxsil = 0;
    for (const Coweight& c : box) {
      reps.push_back(translation_rep(ctx.cd, ctx.ps, c));
      sils.push_back(sil_J(ctx.cd, reps.back(), ctx.ps.J));
      maxsil = std::max(maxsil, sils.back());
    }
    for (const Rat& a : {Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)}) {
      for (std::size_t s = 0; s < box.size(); ++s) {
        std::set<AffineWeylElem> visited{reps[s]};
        std::vector<AffineWeylElem> frontier{reps[s]};
        for (std::size_t head = 0; head < frontier.size(); ++head) {
          if (sil_J(ctx.cd, frontier[head], ctx.ps.J) >= maxsil) continue;
          for (const SiBEdge& e :
               sib_out_edges(ctx.cd, ctx.ps, frontier[head], ctx.lambda, a))
            if (visited.insert(e.dst).second) frontier.push_back(e.dst);
        }
        for (std::size_t t = 0; t < box.size(); ++t) {
          bool closed_form =
              translation_path_criterion(ctx.cd, ctx.ps, ctx.lambda, a, box[s], box[t]);
          bool reachable = s != t && visited.count(reps[t]) == 1;
          if (closed_form != reachable)
            return detail::failed(
                r, std::string(1, in.type) + std::to_string(in.rank) + " a=" + rat_str(a) +
                       ": criterion " + (closed_form ? "true" : "false") + " but path " +
                       (reachable ? "found" : "absent") + " for " +
                       to_literal(ctx.cd, reps[s]) + " -> " + to_literal(ctx.cd, reps[t]));
          ++cases;
        }
      }
    }
  }
  r.detail = std::to_string(cases) + " cases agree";
  return r;
}

// Check 6: edge enumeration, the length-and-shape test, and the membership
// plus length-increment test agree on every candidate label.
inline CheckReport check_edge_oracles() {
  CheckReport r{6, "edge oracle agreement"};
  struct Pool {
    SilsContext ctx;
    std::set<AffineWeylElem> vertices;
  };
  std::vector<Pool> pools;
  {
    SilsContext ctx = detail::ctx_of('A', 2, {1, 1});
    Pool p{ctx, detail::ball_vertices(ctx, detail::seed_ball(ctx, 6))};
    for (const Coweight& c : detail::coweight_box(2, -3, 3))
      p.vertices.insert(translation_rep(ctx.cd, ctx.ps, c));
    pools.push_back(std::move(p));
  }
  {
    SilsContext ctx = detail::ctx_of('A', 1, {1});
    pools.push_back(Pool{ctx, detail::ball_vertices(ctx, detail::seed_ball(ctx, 8))});
  }
  {
    SilsContext ctx = detail::ctx_of('A', 1, {2});
    pools.push_back(Pool{ctx, detail::ball_vertices(ctx, detail::seed_ball(ctx, 6))});
  }
  {
    SilsContext ctx = detail::ctx_of('A', 2, {2, 0});
    Pool p{ctx, {}};
    for (const Coweight& c : detail::coweight_box(2, -2, 2))
      p.vertices.insert(translation_rep(ctx.cd, ctx.ps, c));
    pools.push_back(std::move(p));
  }
  for (Pool& p : pools) {
    for (int round = 0; round < 2; ++round) {
      std::set<AffineWeylElem> extra;
      for (const AffineWeylElem& x : p.vertices)
        for (const SiBEdge& e : sib_out_edges(p.ctx.cd, p.ctx.ps, x)) extra.insert(e.dst);
      p.vertices.insert(extra.begin(), extra.end());
    }
  }
  Int pairs = 0;
  for (const Pool& p : pools) {
    const AffineCartanData& cd = p.ctx.cd;
    const ParabolicSubset& ps = p.ctx.ps;
    for (const AffineWeylElem& x : p.vertices) {
      std::set<AffineRoot> enumerated;
      for (const SiBEdge& e : sib_out_edges(cd, ps, x)) enumerated.insert(e.beta);
      PetersonParts parts = peterson_decompose(cd, ps, x);
      Int base = sil_J(cd, x, ps.J);
      for (const FiniteRoot& gamma : cd.positive_roots) {
        if (ps.root_in_J(gamma)) continue;
        for (Int n : {Int(0), Int(1)}) {
          AffineRoot beta{apply_root(parts.w, gamma), n};
          if (!is_positive(beta)) continue;
          bool via_enum = enumerated.count(beta) == 1;
          bool via_alt = sib_edge_alt_check(cd, ps, x, beta);
          AffineWeylElem y = mul(reflection(cd, beta), x);
          bool via_brute = is_peterson_rep(cd, ps, y) && sil_J(cd, y, ps.J) == base + 1;
          if (via_enum != via_alt || via_alt != via_brute)
            return detail::failed(
                r, "oracles split (" + std::string(via_enum ? "t" : "f") +
                       (via_alt ? "t" : "f") + (via_brute ? "t" : "f") + ") at " +
                       to_literal(cd, x) + " with label n=" + std::to_string(n));
          ++pairs;
        }
      }
    }
  }
  if (pairs < 1000)
    return detail::failed(r, "only " + std::to_string(pairs) + " candidate pairs covered");
  r.detail = std::to_string(pairs) + " (vertex, label) pairs agree";
  return r;
}

// Check 7: splitting a path into trivial factors multiplies weight and string
// lengths by N and intertwines the root operators.
inline CheckReport check_splitting_laws() {
  CheckReport r{7, "splitting laws"};
  SilsContext ctx = detail::ctx_of('A', 1, {2});
  LabeledCrystalBall ball = detail::seed_ball(ctx, 6);
  auto split = [&](const SiLSPath& p, Int N) {
    std::vector<CrystalNode> factors;
    for (const SiLSPath& piece : sigma_factors(ctx, p, N))
      factors.push_back(make_node(ctx, piece));
    return node_of_tensor(ctx, factors);
  };
  SiLSPath triv = initial_path(ctx);
  Int laws = 0;
  for (Int N : {ctx.n_lambda, 2 * ctx.n_lambda}) {
    CrystalNode split_initial = split(triv, N);
    const auto& f0 = std::get<TensorElem>(split_initial.payload).factors;
    if (static_cast<Int>(f0.size()) != N)
      return detail::failed(r, "splitting the initial path gave " +
                                   std::to_string(f0.size()) + " factors, expected " +
                                   std::to_string(N));
    for (const CrystalNode& f : f0)
      if (!(f == make_node(ctx, triv)))
        return detail::failed(r, "splitting the initial path gave a nontrivial factor");
    for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
      const CrystalNode& node = ball.nodes[id];
      const SiLSPath& eta = std::get<SiLSPath>(node.payload);
      CrystalNode image = split(eta, N);
      std::string tag = "node " + std::to_string(id) + " N=" + std::to_string(N);
      if (!(image.wt == scale(node.wt, Rat(N))))
        return detail::failed(r, tag + ": weight does not scale");
      for (int i = 0; i <= ctx.cd.rank; ++i) {
        if (!(image.eps[static_cast<std::size_t>(i)] ==
              ExtInt::of(N * sils_eps(ctx, eta, i))) ||
            !(image.phi[static_cast<std::size_t>(i)] ==
              ExtInt::of(N * sils_phi(ctx, eta, i))))
          return detail::failed(r, tag + ": string lengths do not scale at i=" +
                                       std::to_string(i));
        for (bool lower : {false, true}) {
          auto stepped = lower ? sils_f(ctx, eta, i) : sils_e(ctx, eta, i);
          if (!stepped) continue;
          std::optional<CrystalNode> lhs = image;
          for (Int k = 0; k < N && lhs; ++k)
            lhs = lower ? op_f(ctx, *lhs, i) : op_e(ctx, *lhs, i);
          if (!lhs || !(*lhs == split(*stepped, N)))
            return detail::failed(r, tag + ": splitting does not intertwine " +
                                         (lower ? "f_" : "e_") + std::to_string(i));
          ++laws;
        }
      }
    }
  }
  r.detail = std::to_string(laws) + " operator laws verified";
  return r;
}

// Check 8: the semi-infinite comparison agrees with the ordinary Bruhat
// comparison after translating both sides far in a dominant direction.  The
// stabilization point is found heuristically: the first N <= 6 whose window
// N..N+3 is constant is taken as the limit value.
inline CheckReport check_order_stabilization() {
  CheckReport r{8, "order stabilization"};
  struct Instance {
    char type;
    int rank;
    std::vector<Int> mult;
    int depth;
    Coweight xi;
  };
  Int pairs = 0;
  for (const Instance& in : {Instance{'A', 1, {2}, 6, Coweight{{1}}},
                             Instance{'A', 2, {1, 1}, 6, Coweight{{1, 1}}}}) {
    SilsContext ctx = detail::ctx_of(in.type, in.rank, in.mult);
    const AffineCartanData& cd = ctx.cd;
    std::set<AffineWeylElem> pool_set =
        detail::ball_vertices(ctx, detail::seed_ball(ctx, in.depth));
    std::vector<AffineWeylElem> pool(pool_set.begin(), pool_set.end());
    while (pool.size() > 40) {
      std::vector<AffineWeylElem> thinned;
      for (std::size_t k = 0; k < pool.size(); k += 2) thinned.push_back(pool[k]);
      pool.swap(thinned);
    }
    Coweight neg = in.xi;
    for (Int& c : neg.coords) c = -c;
    for (const AffineWeylElem& x : pool) {
      for (const AffineWeylElem& y : pool) {
        Int dx = sil(cd, x), dy = sil(cd, y);
        if (dx - dy > 3 || dy - dx > 3) continue;
        std::vector<bool> at_n;
        for (Int n = 0; n <= 9; ++n) {
          Coweight shift = neg;
          for (Int& c : shift.coords) c *= n;
          AffineWeylElem tr = translation(cd, shift);
          at_n.push_back(bruhat_leq(cd, mul(y, tr), mul(x, tr)));
        }
        std::optional<bool> limit;
        for (std::size_t N = 0; N <= 6; ++N) {
          if (at_n[N] == at_n[N + 1] && at_n[N] == at_n[N + 2] && at_n[N] == at_n[N + 3]) {
            limit = at_n[N];
            break;
          }
        }
        if (!limit)
          return detail::failed(r, "no stabilization by n=6 for " + to_literal(cd, x) +
                                       " vs " + to_literal(cd, y));
        bool si = semiinfinite_leq(cd, {}, x, y);
        if (si != *limit)
          return detail::failed(r, "orders disagree for " + to_literal(cd, x) + " vs " +
                                       to_literal(cd, y) + ": semi-infinite " +
                                       (si ? "true" : "false") + ", translated limit " +
                                       (*limit ? "true" : "false"));
        ++pairs;
      }
    }
  }
  r.detail = std::to_string(pairs) +
             " pairs agree; limit read from the first constant window n=N..N+3 with N<=6";
  return r;
}

// Check 9: the initial node is extremal, and acting by a word of simple
// reflections lands on the trivial path of the projected word product.
inline CheckReport check_extremality() {
  CheckReport r{9, "extremal action"};
  struct Instance {
    char type;
    int rank;
    std::vector<Int> mult;
  };
  Int words_checked = 0;
  for (const Instance& in : {Instance{'A', 2, {1, 1}}, Instance{'A', 1, {1}},
                             Instance{'A', 1, {2}}}) {
    SilsContext ctx = detail::ctx_of(in.type, in.rank, in.mult);
    const AffineCartanData& cd = ctx.cd;
    std::string tag = std::string(1, in.type) + std::to_string(in.rank);
    CrystalNode start = make_node(ctx, initial_path(ctx));
    if (!extremal_verify(ctx, start, 4))
      return detail::failed(r, tag + ": initial node is not extremal to length 4");
    std::vector<std::vector<int>> words{{}};
    for (std::size_t head = 0; head < words.size(); ++head) {
      AffineWeylElem x = affine_identity(cd);
      for (int i : words[head]) x = mul(simple_reflection_affine(cd, i), x);
      CrystalNode moved = weyl_action_word(ctx, words[head], start);
      CrystalNode expect = make_node(ctx, trivial_path(ctx, proj_J(cd, ctx.ps, x)));
      if (!(moved == expect))
        return detail::failed(r, tag + ": word action diverges at a word of length " +
                                     std::to_string(words[head].size()));
      ++words_checked;
      if (words[head].size() < 4) {
        for (int i = 0; i <= cd.rank; ++i) {
          auto w = words[head];
          w.push_back(i);
          words.push_back(std::move(w));
        }
      }
    }
  }
  r.detail = std::to_string(words_checked) + " words match; extremality to length 4";
  return r;
}

// Check 10: reflection lengths obey the coroot bound, the semi-infinite
// length moves by the sign of the pulled-back root, and every cut of every
// ball path clears denominators at the shape period.
inline CheckReport check_length_invariants() {
  CheckReport r{10, "length invariants"};
  struct TypeRank {
    char type;
    int rank;
  };
  Int bounds = 0;
  for (const TypeRank& tr : {TypeRank{'A', 1}, TypeRank{'A', 2}, TypeRank{'A', 3},
                             TypeRank{'B', 3}, TypeRank{'C', 2}, TypeRank{'G', 2}}) {
    AffineCartanData cd = build_cartan(tr.type, tr.rank);
    LevelZeroWeight rh = rho(cd);
    for (const FiniteRoot& al : cd.positive_roots) {
      Int len = length(cd, reflection(cd, AffineRoot{al, 0}).w);
      Rat bound = Rat(2) * pairing(cd, coroot_of(cd, al), rh) - Rat(1);
      if (Rat(len) > bound)
        return detail::failed(r, std::string(1, tr.type) + std::to_string(tr.rank) +
                                     ": reflection length " + std::to_string(len) +
                                     " exceeds bound " + rat_str(bound));
      ++bounds;
    }
  }
  AffineCartanData cd = build_cartan('A', 2);
  std::mt19937 rng(20240817u);
  Int signs = 0;
  for (int trial = 0; trial < 500; ++trial) {
    FiniteWeylElem v = finite_identity(cd);
    int steps = static_cast<int>(rng() % 7);
    for (int s = 0; s < steps; ++s)
      v = mul(simple_reflection(cd, 1 + static_cast<int>(rng() % 2)), v);
    Coweight zeta{{static_cast<Int>(rng() % 7) - 3, static_cast<Int>(rng() % 7) - 3}};
    AffineWeylElem x{v, zeta};
    FiniteRoot alpha = cd.positive_roots[rng() % cd.positive_roots.size()];
    bool negate = rng() % 2 == 1;
    Int n = static_cast<Int>(rng() % 2) + (negate ? 1 : 0);
    if (negate)
      for (Int& c : alpha.coords) c = -c;
    AffineRoot beta{alpha, n};
    AffineWeylElem rbx = mul(reflection(cd, beta), x);
    bool up = sil(cd, rbx) > sil(cd, x);
    bool pulled_positive = is_positive_vector(apply_root(inv(v), alpha).coords);
    if (up != pulled_positive)
      return detail::failed(r, "semi-infinite length sign rule fails at " +
                                   to_literal(cd, x));
    ++signs;
    for (int i = 0; i <= cd.rank; ++i) {
      AffineRoot simple = simple_affine_root(cd, i);
      AffineWeylElem rix = mul(simple_reflection_affine(cd, i), x);
      Int diff = sil(cd, rix) - sil(cd, x);
      bool pos = is_positive_vector(apply_root(inv(v), simple.finite).coords);
      if (diff != (pos ? 1 : -1))
        return detail::failed(r, "simple step is not a unit step at " + to_literal(cd, x));
    }
  }
  struct Instance {
    char type;
    int rank;
    std::vector<Int> mult;
    int depth;
  };
  Int cuts = 0;
  for (const Instance& in : {Instance{'A', 2, {1, 1}, 6}, Instance{'A', 1, {1}, 8},
                             Instance{'A', 1, {2}, 6}}) {
    SilsContext ctx = detail::ctx_of(in.type, in.rank, in.mult);
    LabeledCrystalBall ball = detail::seed_ball(ctx, in.depth);
    for (const CrystalNode& node : ball.nodes) {
      for (const Rat& a : std::get<SiLSPath>(node.payload).cuts) {
        if (!is_integral(a * Rat(ctx.n_lambda)))
          return detail::failed(r, "cut " + rat_str(a) +
                                       " does not clear the shape period " +
                                       std::to_string(ctx.n_lambda));
        ++cuts;
      }
    }
  }
  r.detail = std::to_string(bounds) + " reflection bounds, " + std::to_string(signs) +
             " sign-rule samples, " + std::to_string(cuts) + " cuts cleared";
  return r;
}

inline CheckReport run_criterion(int id) {
  switch (id) {
    case 1: return check_model_isomorphism();
    case 2: return check_projection_witness();
    case 3: return check_operator_stability();
    case 4: return check_component_classification();
    case 5: return check_translation_criterion();
    case 6: return check_edge_oracles();
    case 7: return check_splitting_laws();
    case 8: return check_order_stabilization();
    case 9: return check_extremality();
    case 10: return check_length_invariants();
    default: fail(Errc::ConfigError, "unknown criterion " + std::to_string(id));
  }
}

inline std::vector<int> suite_ids(const std::string& suite) {
  if (suite == "edges") return {6, 10};
  if (suite == "stability") return {3};
  if (suite == "sigma") return {7};
  if (suite == "translation") return {5};
  if (suite == "iso") return {1, 2, 9};
  if (suite == "components") return {4};
  if (suite == "appendix") return {8};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  fail(Errc::ConfigError, "unknown suite: " + suite);
}

inline std::vector<CheckReport> run_criteria(const std::vector<int>& ids) {
  std::vector<std::future<CheckReport>> futures;
  for (int id : ids)
    futures.push_back(std::async(std::launch::async, [id] { return run_criterion(id); }));
  std::vector<CheckReport> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace checks
}  // namespace silpath

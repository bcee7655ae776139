#pragma once

// Crystal structure on path nodes: tensor products with signature-rule
// routing, the Weyl group action, extremal-element checks, finite graph
// truncations (balls) with a labeled-graph isomorphism test, and the
// classification of connected components by tuples of partitions.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "silpath/cartan.hpp"
#include "silpath/error.hpp"
#include "silpath/graphs.hpp"
#include "silpath/parabolic.hpp"
#include "silpath/paths.hpp"
#include "silpath/rational.hpp"
#include "silpath/weyl.hpp"

namespace silpath {

// Integer extended by minus infinity, the eps/phi value of a bare partition
// tuple.
struct ExtInt {
  bool fin = true;
  Int v = 0;

  static ExtInt of(Int k) { return ExtInt{true, k}; }
  static ExtInt minus_inf() { return ExtInt{false, 0}; }
  bool operator==(const ExtInt& o) const { return fin == o.fin && (!fin || v == o.v); }
};

inline ExtInt emax(const ExtInt& a, const ExtInt& b) {
  if (!a.fin) return b;
  if (!b.fin) return a;
  return ExtInt::of(a.v > b.v ? a.v : b.v);
}
inline ExtInt eadd(const ExtInt& a, Int k) { return a.fin ? ExtInt::of(a.v + k) : a; }
inline bool egeq(const ExtInt& a, const ExtInt& b) {
  if (!b.fin) return true;
  if (!a.fin) return false;
  return a.v >= b.v;
}
inline bool egt(const ExtInt& a, const ExtInt& b) {
  if (!b.fin) return false;
  if (!a.fin) return false;
  return a.v > b.v;
}
inline std::string ext_str(const ExtInt& a) {
  return a.fin ? std::to_string(a.v) : std::string("-inf");
}

struct CrystalNode;

// Weakly decreasing positive parts per finite node; empty where the shape
// multiplicity is at most one.  Carries the trivial crystal structure.
struct PartitionTuple {
  std::vector<std::vector<Int>> parts;  // parts[i-1] for node i

  bool operator==(const PartitionTuple& o) const { return parts == o.parts; }
  bool operator<(const PartitionTuple& o) const { return parts < o.parts; }
};

struct TensorElem {
  std::vector<CrystalNode> factors;

  bool operator==(const TensorElem& o) const;
  bool operator<(const TensorElem& o) const;
};

using NodePayload = std::variant<SiLSPath, PLPath, PartitionTuple, TensorElem>;

struct CrystalNode {
  NodePayload payload;
  LevelZeroWeight wt;
  std::vector<ExtInt> eps;  // indexed by i = 0..rank
  std::vector<ExtInt> phi;

  bool operator==(const CrystalNode& o) const { return payload == o.payload; }
  bool operator<(const CrystalNode& o) const { return payload < o.payload; }
};

inline bool TensorElem::operator==(const TensorElem& o) const { return factors == o.factors; }
inline bool TensorElem::operator<(const TensorElem& o) const { return factors < o.factors; }

inline Int partition_tuple_size(const PartitionTuple& p) {
  Int total = 0;
  for (const auto& part : p.parts)
    for (Int c : part) total += c;
  return total;
}

inline PartitionTuple make_partition_tuple(const SilsContext& ctx,
                                           const std::vector<std::vector<Int>>& parts) {
  check_dim(ctx.cd, parts.size(), "partition tuple");
  for (int i = 1; i <= ctx.cd.rank; ++i) {
    const auto& part = parts[static_cast<std::size_t>(i - 1)];
    Int mi = ctx.mult[static_cast<std::size_t>(i - 1)];
    require(static_cast<Int>(part.size()) < mi || part.empty(), Errc::ConfigError,
            "partition at node " + std::to_string(i) + " is too long");
    for (std::size_t k = 0; k < part.size(); ++k) {
      require(part[k] > 0, Errc::ConfigError, "partition parts must be positive");
      require(k == 0 || part[k - 1] >= part[k], Errc::ConfigError,
              "partition parts must be weakly decreasing");
    }
  }
  return PartitionTuple{parts};
}

namespace detail {

inline Int pair_int(const AffineCartanData& cd, int i, const LevelZeroWeight& mu) {
  Rat r = pair_simple_acoroot(cd, i, mu);
  require(is_integral(r), Errc::InvalidPath, "node weight pairing is not integral");
  return r.numerator();
}

// eps/phi of factors[0..count-1] at direction i, by the tensor rule.
inline std::pair<ExtInt, ExtInt> tensor_eps_phi(const AffineCartanData& cd,
                                                const std::vector<CrystalNode>& factors,
                                                std::size_t count, int i) {
  ExtInt e = factors[0].eps[static_cast<std::size_t>(i)];
  ExtInt f = factors[0].phi[static_cast<std::size_t>(i)];
  Int c = pair_int(cd, i, factors[0].wt);
  for (std::size_t k = 1; k < count; ++k) {
    Int ck = pair_int(cd, i, factors[k].wt);
    e = emax(e, eadd(factors[k].eps[static_cast<std::size_t>(i)], -c));
    f = emax(factors[k].phi[static_cast<std::size_t>(i)], eadd(f, ck));
    c += ck;
  }
  return {e, f};
}

}  // namespace detail

inline CrystalNode make_node(const SilsContext& ctx, NodePayload payload) {
  CrystalNode n;
  n.payload = std::move(payload);
  int m = ctx.cd.rank + 1;
  n.eps.resize(static_cast<std::size_t>(m));
  n.phi.resize(static_cast<std::size_t>(m));
  if (auto* s = std::get_if<SiLSPath>(&n.payload)) {
    n.wt = sils_weight(ctx, *s);
    for (int i = 0; i < m; ++i) {
      n.eps[static_cast<std::size_t>(i)] = ExtInt::of(sils_eps(ctx, *s, i));
      n.phi[static_cast<std::size_t>(i)] = ExtInt::of(sils_phi(ctx, *s, i));
    }
  } else if (auto* p = std::get_if<PLPath>(&n.payload)) {
    validate_pl(ctx.cd, *p);
    n.wt = pl_weight(*p);
    for (int i = 0; i < m; ++i) {
      Rat e = pl_eps(ctx.cd, *p, i);
      Rat f = pl_phi(ctx.cd, *p, i);
      require(is_integral(e) && is_integral(f), Errc::InvalidPath,
              "node has nonintegral eps or phi");
      n.eps[static_cast<std::size_t>(i)] = ExtInt::of(e.numerator());
      n.phi[static_cast<std::size_t>(i)] = ExtInt::of(f.numerator());
    }
  } else if (auto* r = std::get_if<PartitionTuple>(&n.payload)) {
    n.wt = zero_weight(ctx.cd);
    n.wt.delta = Rat(-partition_tuple_size(*r));
    for (int i = 0; i < m; ++i) {
      n.eps[static_cast<std::size_t>(i)] = ExtInt::minus_inf();
      n.phi[static_cast<std::size_t>(i)] = ExtInt::minus_inf();
    }
  } else {
    const auto& t = std::get<TensorElem>(n.payload);
    require(!t.factors.empty(), Errc::ConfigError, "tensor needs at least one factor");
    n.wt = t.factors[0].wt;
    for (std::size_t k = 1; k < t.factors.size(); ++k) n.wt = add(n.wt, t.factors[k].wt);
    for (int i = 0; i < m; ++i) {
      auto [e, f] = detail::tensor_eps_phi(ctx.cd, t.factors, t.factors.size(), i);
      n.eps[static_cast<std::size_t>(i)] = e;
      n.phi[static_cast<std::size_t>(i)] = f;
    }
  }
  return n;
}

inline CrystalNode node_of_tensor(const SilsContext& ctx, std::vector<CrystalNode> factors) {
  return make_node(ctx, TensorElem{std::move(factors)});
}

inline std::optional<CrystalNode> op_e(const SilsContext& ctx, const CrystalNode& b, int i);
inline std::optional<CrystalNode> op_f(const SilsContext& ctx, const CrystalNode& b, int i);

namespace detail {

// Index of the factor a raising (lower = false) or lowering (lower = true)
// operator acts on, by the signature rule folded from the left.
inline std::size_t route(const AffineCartanData& cd, const std::vector<CrystalNode>& factors,
                         int i, bool lower) {
  std::size_t k = factors.size() - 1;
  while (k > 0) {
    auto [e, f] = tensor_eps_phi(cd, factors, k, i);
    const ExtInt& er = factors[k].eps[static_cast<std::size_t>(i)];
    bool left = lower ? egt(f, er) : egeq(f, er);
    if (!left) return k;
    --k;
  }
  return 0;
}

}  // namespace detail

inline std::optional<CrystalNode> op_e(const SilsContext& ctx, const CrystalNode& b, int i) {
  if (std::holds_alternative<SiLSPath>(b.payload)) {
    auto r = sils_e(ctx, std::get<SiLSPath>(b.payload), i);
    if (!r) return std::nullopt;
    return make_node(ctx, std::move(*r));
  }
  if (std::holds_alternative<PLPath>(b.payload)) {
    auto r = pl_e(ctx.cd, std::get<PLPath>(b.payload), i);
    if (!r) return std::nullopt;
    return make_node(ctx, std::move(*r));
  }
  if (std::holds_alternative<PartitionTuple>(b.payload)) return std::nullopt;
  const auto& t = std::get<TensorElem>(b.payload);
  std::size_t k = detail::route(ctx.cd, t.factors, i, false);
  auto r = op_e(ctx, t.factors[k], i);
  if (!r) return std::nullopt;
  TensorElem nt = t;
  nt.factors[k] = std::move(*r);
  return make_node(ctx, std::move(nt));
}

inline std::optional<CrystalNode> op_f(const SilsContext& ctx, const CrystalNode& b, int i) {
  if (std::holds_alternative<SiLSPath>(b.payload)) {
    auto r = sils_f(ctx, std::get<SiLSPath>(b.payload), i);
    if (!r) return std::nullopt;
    return make_node(ctx, std::move(*r));
  }
  if (std::holds_alternative<PLPath>(b.payload)) {
    auto r = pl_f(ctx.cd, std::get<PLPath>(b.payload), i);
    if (!r) return std::nullopt;
    return make_node(ctx, std::move(*r));
  }
  if (std::holds_alternative<PartitionTuple>(b.payload)) return std::nullopt;
  const auto& t = std::get<TensorElem>(b.payload);
  std::size_t k = detail::route(ctx.cd, t.factors, i, true);
  auto r = op_f(ctx, t.factors[k], i);
  if (!r) return std::nullopt;
  TensorElem nt = t;
  nt.factors[k] = std::move(*r);
  return make_node(ctx, std::move(nt));
}

// r_i b = f_i^n b when n = <alpha_i^vee, wt b> is nonnegative, e_i^{-n} b
// otherwise.
inline CrystalNode weyl_action(const SilsContext& ctx, int i, const CrystalNode& b) {
  Int n = detail::pair_int(ctx.cd, i, b.wt);
  CrystalNode cur = b;
  for (Int k = 0; k < (n >= 0 ? n : -n); ++k) {
    auto r = n >= 0 ? op_f(ctx, cur, i) : op_e(ctx, cur, i);
    require(r.has_value(), Errc::DataError, "group action step left the crystal");
    cur = std::move(*r);
  }
  return cur;
}

// word[0] acts first.
inline CrystalNode weyl_action_word(const SilsContext& ctx, const std::vector<int>& word,
                                    const CrystalNode& b) {
  CrystalNode cur = b;
  for (int i : word) cur = weyl_action(ctx, i, cur);
  return cur;
}

// Checks the extremality pattern at every node y b over words y of length at
// most len: no raising at nonnegative pairing, no lowering at nonpositive
// pairing.
inline bool extremal_verify(const SilsContext& ctx, const CrystalNode& b, int len) {
  require(len >= 0, Errc::ConfigError, "word length must be nonnegative");
  std::set<CrystalNode> seen{b};
  std::vector<std::pair<CrystalNode, int>> order{{b, 0}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const CrystalNode& cur = order[head].first;
    int d = order[head].second;
    for (int i = 0; i <= ctx.cd.rank; ++i) {
      Int c = detail::pair_int(ctx.cd, i, cur.wt);
      if (c >= 0 && op_e(ctx, cur, i).has_value()) return false;
      if (c <= 0 && op_f(ctx, cur, i).has_value()) return false;
    }
    if (d == len) continue;
    for (int i = 0; i <= ctx.cd.rank; ++i) {
      CrystalNode next = weyl_action(ctx, i, order[head].first);
      if (seen.insert(next).second) order.emplace_back(std::move(next), d + 1);
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Finite truncations.

struct BallEdge {
  int src = 0;
  int i = 0;
  int dst = 0;
};

struct LabeledCrystalBall {
  int depth = 0;
  std::vector<CrystalNode> nodes;  // id = position
  std::vector<int> dist;
  std::vector<char> boundary;  // nodes whose operators were not explored
  std::vector<BallEdge> edges;  // (src, i, dst) with f_i(src) = dst
  std::map<CrystalNode, int> index;
};

inline LabeledCrystalBall generate_ball(const SilsContext& ctx, const CrystalNode& seed,
                                        int depth) {
  require(depth >= 0, Errc::ConfigError, "ball depth must be nonnegative");
  LabeledCrystalBall ball;
  ball.depth = depth;
  ball.nodes.push_back(seed);
  ball.dist.push_back(0);
  ball.index.emplace(seed, 0);
  for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
    if (ball.dist[id] == depth) continue;
    for (int i = 0; i <= ctx.cd.rank; ++i) {
      for (bool lower : {false, true}) {
        auto r = lower ? op_f(ctx, ball.nodes[id], i) : op_e(ctx, ball.nodes[id], i);
        if (!r) continue;
        if (ball.index.emplace(*r, static_cast<int>(ball.nodes.size())).second) {
          ball.nodes.push_back(std::move(*r));
          ball.dist.push_back(ball.dist[id] + 1);
        }
      }
    }
  }
  for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
    ball.boundary.push_back(ball.dist[id] == depth ? 1 : 0);
    for (int i = 0; i <= ctx.cd.rank; ++i) {
      auto r = op_f(ctx, ball.nodes[id], i);
      if (!r) continue;
      auto it = ball.index.find(*r);
      if (it != ball.index.end())
        ball.edges.push_back(BallEdge{static_cast<int>(id), i, it->second});
    }
  }
  return ball;
}

struct IsoReport {
  bool isomorphic = true;
  std::string detail;
};

// Synchronized walk over two balls of equal depth: matched nodes must agree
// on weight, eps, phi, and boundary status, and corresponding operators must
// land on matched nodes.  The detail of a mismatch names the operator word
// from the seeds to the disagreement.
inline IsoReport iso_check(const LabeledCrystalBall& a, const LabeledCrystalBall& b) {
  require(a.depth == b.depth, Errc::ConfigError, "balls have different depths");
  auto fault = [](const std::string& word, const std::string& what) {
    return IsoReport{false, "at seed" + (word.empty() ? "" : word) + ": " + what};
  };
  std::map<std::pair<int, int>, int> outA, outB, inA, inB;
  for (const auto& e : a.edges) {
    outA[{e.src, e.i}] = e.dst;
    inA[{e.dst, e.i}] = e.src;
  }
  for (const auto& e : b.edges) {
    outB[{e.src, e.i}] = e.dst;
    inB[{e.dst, e.i}] = e.src;
  }
  std::vector<int> mapAB(a.nodes.size(), -1), mapBA(b.nodes.size(), -1);
  std::vector<std::pair<int, int>> queue{{0, 0}};
  std::vector<std::string> word(a.nodes.size());
  mapAB[0] = 0;
  mapBA[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    const CrystalNode& nx = a.nodes[static_cast<std::size_t>(x)];
    const CrystalNode& ny = b.nodes[static_cast<std::size_t>(y)];
    if (!(nx.wt == ny.wt)) return fault(word[static_cast<std::size_t>(x)], "weights differ");
    if (nx.eps != ny.eps) return fault(word[static_cast<std::size_t>(x)], "eps differ");
    if (nx.phi != ny.phi) return fault(word[static_cast<std::size_t>(x)], "phi differ");
    if (a.boundary[static_cast<std::size_t>(x)] != b.boundary[static_cast<std::size_t>(y)])
      return fault(word[static_cast<std::size_t>(x)], "boundary status differs");
    if (a.boundary[static_cast<std::size_t>(x)]) continue;
    int rank = static_cast<int>(nx.eps.size()) - 1;
    for (int i = 0; i <= rank; ++i) {
      for (bool lower : {true, false}) {
        const auto& mA = lower ? outA : inA;
        const auto& mB = lower ? outB : inB;
        auto itA = mA.find({x, i});
        auto itB = mB.find({y, i});
        std::string step = (lower ? " f" : " e") + std::to_string(i);
        if ((itA == mA.end()) != (itB == mB.end()))
          return fault(word[static_cast<std::size_t>(x)] + step, "operator defined on one side only");
        if (itA == mA.end()) continue;
        int tx = itA->second, ty = itB->second;
        if (mapAB[static_cast<std::size_t>(tx)] == -1 &&
            mapBA[static_cast<std::size_t>(ty)] == -1) {
          mapAB[static_cast<std::size_t>(tx)] = ty;
          mapBA[static_cast<std::size_t>(ty)] = tx;
          word[static_cast<std::size_t>(tx)] = word[static_cast<std::size_t>(x)] + step;
          queue.emplace_back(tx, ty);
        } else if (mapAB[static_cast<std::size_t>(tx)] != ty) {
          return fault(word[static_cast<std::size_t>(x)] + step, "matching is not a bijection");
        }
      }
    }
  }
  if (a.nodes.size() != b.nodes.size())
    return IsoReport{false, "node counts differ: " + std::to_string(a.nodes.size()) + " vs " +
                                std::to_string(b.nodes.size())};
  for (std::size_t k = 0; k < mapAB.size(); ++k)
    if (mapAB[k] == -1) return IsoReport{false, "node " + std::to_string(k) + " unmatched"};
  return IsoReport{true, ""};
}

inline std::map<LevelZeroWeight, Int> weight_multiplicities(const LabeledCrystalBall& ball,
                                                            bool interior_only) {
  std::map<LevelZeroWeight, Int> out;
  for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
    if (interior_only && ball.boundary[id]) continue;
    ++out[ball.nodes[id].wt];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification of connected components.

// All fractions k / mult_i in [0, 1] over active nodes, sorted.
inline std::vector<Rat> turn_set(const SilsContext& ctx) {
  std::set<Rat> vals;
  for (int i = 1; i <= ctx.cd.rank; ++i) {
    Int mi = ctx.mult[static_cast<std::size_t>(i - 1)];
    if (mi == 0) continue;
    for (Int k = 0; k <= mi; ++k) vals.insert(Rat(k, mi));
  }
  return std::vector<Rat>(vals.begin(), vals.end());
}

// Translation form: x = T_xi for a J-adjusted xi.
inline std::optional<Coweight> translation_form(const SilsContext& ctx,
                                                const AffineWeylElem& x) {
  if (!is_peterson_rep(ctx.cd, ctx.ps, x)) return std::nullopt;
  PetersonParts parts = peterson_decompose(ctx.cd, ctx.ps, x);
  if (!parts.w.is_identity()) return std::nullopt;
  return parts.xi;
}

inline bool is_canonical_form(const SilsContext& ctx, const SiLSPath& p) {
  if (!p.elems.back().is_identity()) return false;
  for (const auto& x : p.elems)
    if (!translation_form(ctx, x)) return false;
  return true;
}

// Reads the partition tuple off a canonical representative.
inline PartitionTuple theta_map(const SilsContext& ctx, const SiLSPath& p) {
  validate_sils(ctx, p);
  require(p.elems.back().is_identity(), Errc::NotCanonicalForm,
          "canonical form ends with the identity");
  std::size_t s = p.elems.size();
  std::vector<Coweight> xi;
  for (const auto& x : p.elems) {
    auto t = translation_form(ctx, x);
    require(t.has_value(), Errc::NotCanonicalForm, "piece is not in translation form");
    xi.push_back(*t);
  }
  std::vector<Rat> tau = turn_set(ctx);
  std::vector<std::size_t> q(s + 1, 0);
  for (std::size_t u = 0; u <= s; ++u) {
    auto it = std::find(tau.begin(), tau.end(), p.cuts[u]);
    require(it != tau.end(), Errc::NotCanonicalForm, "cut is not a turning point of the shape");
    q[u] = static_cast<std::size_t>(it - tau.begin());
  }
  for (std::size_t u = 1; u + 1 <= s; ++u)
    require(translation_path_criterion(ctx.cd, ctx.ps, ctx.lambda, p.cuts[u], xi[u], xi[u - 1]),
            Errc::NotCanonicalForm, "adjacent pieces fail the translation criterion");
  // zeta[t] = xi_u for the stretch q[u-1] < t <= q[u].
  std::vector<Coweight> zeta(tau.size());
  for (std::size_t u = 1; u <= s; ++u)
    for (std::size_t t = q[u - 1] + 1; t <= q[u]; ++t) zeta[t] = xi[u - 1];
  PartitionTuple rho;
  rho.parts.resize(static_cast<std::size_t>(ctx.cd.rank));
  for (int i = 1; i <= ctx.cd.rank; ++i) {
    Int mi = ctx.mult[static_cast<std::size_t>(i - 1)];
    std::vector<Int>& part = rho.parts[static_cast<std::size_t>(i - 1)];
    for (Int k = 1; k <= mi - 1; ++k) {
      Rat frac(k, mi);
      auto it = std::find(tau.begin(), tau.end(), frac);
      std::size_t pk = static_cast<std::size_t>(it - tau.begin());
      part.push_back(zeta[pk].coords[static_cast<std::size_t>(i - 1)]);
    }
    while (!part.empty() && part.back() == 0) part.pop_back();
    for (std::size_t k = 0; k < part.size(); ++k)
      require(part[k] > 0 && (k == 0 || part[k - 1] >= part[k]), Errc::DataError,
              "classification readout is not a partition");
  }
  return rho;
}

// Builds the canonical representative attached to a partition tuple.
inline SiLSPath xi_map(const SilsContext& ctx, const PartitionTuple& rho) {
  PartitionTuple checked = make_partition_tuple(ctx, rho.parts);
  std::vector<Rat> tau = turn_set(ctx);
  std::size_t p = tau.size() - 1;
  auto part_at = [&](int i, Int k) -> Int {
    const auto& part = checked.parts[static_cast<std::size_t>(i - 1)];
    if (k < 1 || k > static_cast<Int>(part.size())) return 0;
    return part[static_cast<std::size_t>(k - 1)];
  };
  std::vector<Coweight> zeta(p + 1, Coweight{std::vector<Int>(ctx.cd.rank, 0)});
  for (std::size_t t = p - 1; t >= 1; --t) {
    zeta[t] = zeta[t + 1];
    for (int i = 1; i <= ctx.cd.rank; ++i) {
      if (ctx.ps.contains(i)) continue;
      Rat km = tau[t] * Rat(ctx.mult[static_cast<std::size_t>(i - 1)]);
      if (!is_integral(km)) continue;
      Int k = km.numerator();
      zeta[t].coords[static_cast<std::size_t>(i - 1)] +=
          part_at(i, k) - part_at(i, k + 1);
    }
    if (t == 1) break;
  }
  SiLSPath out;
  out.cuts.push_back(Rat(0));
  for (std::size_t t = 1; t <= p - 1; ++t) {
    if (zeta[t] == zeta[t + 1]) continue;
    Adjustment ad = adjust(ctx.cd, ctx.ps, zeta[t]);
    Coweight xi = zeta[t];
    for (int k = 0; k < ctx.cd.rank; ++k)
      xi.coords[static_cast<std::size_t>(k)] += ad.phi.coords[static_cast<std::size_t>(k)];
    out.elems.push_back(translation_rep(ctx.cd, ctx.ps, xi));
    out.cuts.push_back(tau[t]);
  }
  out.elems.push_back(affine_identity(ctx.cd));
  out.cuts.push_back(Rat(1));
  return out;
}

// All partition tuples for the shape with total size at most bound.
inline std::vector<PartitionTuple> partition_tuples_up_to(const SilsContext& ctx, Int bound) {
  std::vector<std::vector<std::vector<Int>>> per_node;
  for (int i = 1; i <= ctx.cd.rank; ++i) {
    Int maxlen = ctx.mult[static_cast<std::size_t>(i - 1)] - 1;
    std::vector<std::vector<Int>> opts{{}};
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int remaining, Int cap) -> void {
      if (static_cast<Int>(cur.size()) >= maxlen) return;
      for (Int v = 1; v <= (cap < remaining ? cap : remaining); ++v) {
        cur.push_back(v);
        opts.push_back(cur);
        self(self, remaining - v, v);
        cur.pop_back();
      }
    };
    if (maxlen > 0) rec(rec, bound, bound);
    per_node.push_back(std::move(opts));
  }
  std::vector<PartitionTuple> out;
  PartitionTuple cur;
  cur.parts.resize(static_cast<std::size_t>(ctx.cd.rank));
  auto rec = [&](auto&& self, int i, Int used) -> void {
    if (i > ctx.cd.rank) {
      out.push_back(cur);
      return;
    }
    for (const auto& opt : per_node[static_cast<std::size_t>(i - 1)]) {
      Int sz = 0;
      for (Int v : opt) sz += v;
      if (used + sz > bound) continue;
      cur.parts[static_cast<std::size_t>(i - 1)] = opt;
      self(self, i + 1, used + sz);
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Searches the connected component of eta for the canonical representative,
// visiting at most budget nodes.
inline SiLSPath component_rep_search(const SilsContext& ctx, const SiLSPath& eta, Int budget) {
  require(budget >= 1, Errc::ConfigError, "budget must be positive");
  CrystalNode seed = make_node(ctx, eta);
  std::set<CrystalNode> seen{seed};
  std::vector<CrystalNode> order{std::move(seed)};
  for (std::size_t head = 0; head < order.size() && static_cast<Int>(head) < budget; ++head) {
    const SiLSPath& cand = std::get<SiLSPath>(order[head].payload);
    if (is_canonical_form(ctx, cand)) return cand;
    for (int i = 0; i <= ctx.cd.rank; ++i) {
      for (bool lower : {false, true}) {
        auto r = lower ? op_f(ctx, order[head], i) : op_e(ctx, order[head], i);
        if (!r) continue;
        if (seen.insert(*r).second) order.push_back(std::move(*r));
      }
    }
  }
  fail(Errc::BudgetExceeded, "no canonical representative within budget");
}

struct DecompositionReport {
  bool ok = true;
  Int tuples_checked = 0;
  std::string detail;
};

// For every partition tuple of size at most bound, the component of its
// canonical representative must match the tuple tensored with the component
// of the trivial path, node for node, to the given depth.
inline DecompositionReport decomposition_check(const SilsContext& ctx, Int bound, int depth) {
  DecompositionReport report;
  for (const auto& rho : partition_tuples_up_to(ctx, bound)) {
    SiLSPath eta = xi_map(ctx, rho);
    PartitionTuple back = theta_map(ctx, eta);
    CrystalNode seedA = make_node(ctx, eta);
    CrystalNode seedB = node_of_tensor(
        ctx, {make_node(ctx, rho), make_node(ctx, initial_path(ctx))});
    std::string tag = "tuple of size " + std::to_string(partition_tuple_size(rho));
    if (!(back == rho)) {
      report.ok = false;
      report.detail = tag + ": classification maps do not invert";
      return report;
    }
    if (!(seedA.wt == seedB.wt)) {
      report.ok = false;
      report.detail = tag + ": seed weights differ";
      return report;
    }
    IsoReport iso = iso_check(generate_ball(ctx, seedA, depth), generate_ball(ctx, seedB, depth));
    ++report.tuples_checked;
    if (!iso.isomorphic) {
      report.ok = false;
      report.detail = tag + ": " + iso.detail;
      return report;
    }
  }
  return report;
}

// Reference product of one-column factors: node i contributes mult_i straight
// paths through its fundamental weight.
inline CrystalNode reference_seed(const SilsContext& ctx) {
  std::vector<CrystalNode> factors;
  for (int i = 1; i <= ctx.cd.rank; ++i) {
    LevelZeroWeight wi = zero_weight(ctx.cd);
    wi.fun[static_cast<std::size_t>(i - 1)] = Rat(1);
    for (Int k = 0; k < ctx.mult[static_cast<std::size_t>(i - 1)]; ++k)
      factors.push_back(make_node(ctx, straight_pl(wi)));
  }
  require(!factors.empty(), Errc::ConfigError, "shape is zero");
  return node_of_tensor(ctx, std::move(factors));
}

// ---------------------------------------------------------------------------
// Literals and export.

inline std::string par_str(const PartitionTuple& rho) {
  std::ostringstream os;
  os << "Par{";
  bool first = true;
  for (std::size_t k = 0; k < rho.parts.size(); ++k) {
    if (rho.parts[k].empty()) continue;
    if (!first) os << "; ";
    first = false;
    os << (k + 1) << ":[";
    for (std::size_t j = 0; j < rho.parts[k].size(); ++j) {
      if (j) os << " ";
      os << rho.parts[k][j];
    }
    os << "]";
  }
  os << "}";
  return os.str();
}

inline std::string node_str(const SilsContext& ctx, const CrystalNode& b) {
  if (auto* s = std::get_if<SiLSPath>(&b.payload)) return sils_str(ctx, *s);
  if (auto* p = std::get_if<PLPath>(&b.payload)) return pl_str(*p);
  if (auto* r = std::get_if<PartitionTuple>(&b.payload)) return par_str(*r);
  const auto& t = std::get<TensorElem>(b.payload);
  std::string out = "tensor{";
  for (std::size_t k = 0; k < t.factors.size(); ++k) {
    if (k) out += "; ";
    out += node_str(ctx, t.factors[k]);
  }
  return out + "}";
}

namespace detail {

// Split on sep at brace depth zero.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '{' || c == '[' || c == '(') ++depth;
    if (c == '}' || c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

inline std::string_view literal_body(std::string_view s, std::string_view prefix) {
  std::string_view t = trim(s);
  require(t.size() >= prefix.size() + 2 && t.substr(0, prefix.size()) == prefix &&
              t[prefix.size()] == '{' && t.back() == '}',
          Errc::ParseError, "literal must look like " + std::string(prefix) + "{...}");
  return t.substr(prefix.size() + 1, t.size() - prefix.size() - 2);
}

}  // namespace detail

inline PartitionTuple parse_par(const SilsContext& ctx, std::string_view s) {
  std::string_view body = detail::literal_body(s, "Par");
  std::vector<std::vector<Int>> parts(static_cast<std::size_t>(ctx.cd.rank));
  if (!detail::trim(body).empty()) {
    for (std::string_view item : detail::split_top(body, ';')) {
      item = detail::trim(item);
      auto colon = item.find(':');
      require(colon != std::string_view::npos, Errc::ParseError,
              "partition entry needs 'node:[parts]'");
      Rat node = parse_rat(detail::trim(item.substr(0, colon)));
      require(is_integral(node) && node.numerator() >= 1 && node.numerator() <= ctx.cd.rank,
              Errc::ParseError, "partition node out of range");
      std::string_view rest = detail::trim(item.substr(colon + 1));
      require(rest.size() >= 2 && rest.front() == '[' && rest.back() == ']', Errc::ParseError,
              "partition parts need brackets");
      std::vector<Int>& dst = parts[static_cast<std::size_t>(node.numerator() - 1)];
      for (std::string_view tok : detail::split(rest.substr(1, rest.size() - 2), ' ')) {
        if (detail::trim(tok).empty()) continue;
        Rat v = parse_rat(detail::trim(tok));
        require(is_integral(v), Errc::ParseError, "partition parts must be integers");
        dst.push_back(v.numerator());
      }
    }
  }
  return make_partition_tuple(ctx, parts);
}

inline CrystalNode parse_node(const SilsContext& ctx, std::string_view s) {
  std::string_view t = detail::trim(s);
  if (t.substr(0, 5) == "SiLS{") return make_node(ctx, parse_sils(ctx, t));
  if (t.substr(0, 3) == "PL{") return make_node(ctx, parse_pl(ctx.cd, t));
  if (t.substr(0, 4) == "Par{") return make_node(ctx, parse_par(ctx, t));
  if (t.substr(0, 7) == "tensor{") {
    std::string_view body = detail::literal_body(t, "tensor");
    std::vector<CrystalNode> factors;
    for (std::string_view item : detail::split_top(body, ';'))
      factors.push_back(parse_node(ctx, item));
    return node_of_tensor(ctx, std::move(factors));
  }
  fail(Errc::ParseError, "unknown node literal: " + std::string(t.substr(0, 24)));
}

inline std::string weight_str(const LevelZeroWeight& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.fun.size(); ++k) {
    if (k) out += ",";
    out += rat_str(w.fun[k]);
  }
  return out + "|" + rat_str(w.delta) + ")";
}

inline nlohmann::ordered_json ball_json(const SilsContext& ctx, const LabeledCrystalBall& ball) {
  nlohmann::ordered_json j;
  j["cartan"] = {{"type", std::string(1, ctx.cd.type_label)}, {"rank", ctx.cd.rank}};
  j["shape"] = ctx.mult;
  j["depth"] = ball.depth;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
    const CrystalNode& n = ball.nodes[id];
    nlohmann::ordered_json jn;
    jn["id"] = id;
    jn["payload"] = node_str(ctx, n);
    jn["wt"] = nlohmann::ordered_json::array();
    for (const Rat& c : n.wt.fun) jn["wt"].push_back(rat_str(c));
    jn["delta"] = rat_str(n.wt.delta);
    jn["eps"] = nlohmann::ordered_json::array();
    jn["phi"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n.eps.size(); ++i) {
      jn["eps"].push_back(n.eps[i].fin ? nlohmann::ordered_json(n.eps[i].v)
                                       : nlohmann::ordered_json(nullptr));
      jn["phi"].push_back(n.phi[i].fin ? nlohmann::ordered_json(n.phi[i].v)
                                       : nlohmann::ordered_json(nullptr));
    }
    jn["dist"] = ball.dist[id];
    jn["boundary"] = static_cast<bool>(ball.boundary[id]);
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : ball.edges)
    j["edges"].push_back({{"src", e.src}, {"i", e.i}, {"dst", e.dst}});
  return j;
}

inline std::string ball_dot(const SilsContext& ctx, const LabeledCrystalBall& ball) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
    os << "  n" << id << " [label=\"" << id << ": " << node_str(ctx, ball.nodes[id])
       << "\\nwt=" << weight_str(ball.nodes[id].wt) << "\"";
    if (ball.boundary[id]) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : ball.edges)
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace silpath

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "silpath/crystal.hpp"

using namespace silpath;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::DataError;
}

CrystalNode sils_node(const SilsContext& ctx, const AffineWeylElem& x) {
  return make_node(ctx, trivial_path(ctx, x));
}

CrystalNode seed_node(const SilsContext& ctx) { return make_node(ctx, initial_path(ctx)); }

std::vector<CrystalNode> flatten(const CrystalNode& b) {
  if (const auto* t = std::get_if<TensorElem>(&b.payload)) {
    std::vector<CrystalNode> out;
    for (const auto& f : t->factors) {
      auto sub = flatten(f);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  return {b};
}

Int as_int(const ExtInt& v) {
  REQUIRE(v.fin);
  return v.v;
}

}  // namespace

TEST_CASE("node caches") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});

  CrystalNode e = seed_node(ctx);
  CHECK(e.wt.fun == std::vector<Rat>{Rat(2)});
  CHECK(e.wt.delta == Rat(0));
  CHECK(as_int(e.eps[1]) == 0);
  CHECK(as_int(e.phi[1]) == 2);
  CHECK(as_int(e.eps[0]) == 2);
  CHECK(as_int(e.phi[0]) == 0);

  CrystalNode par = make_node(ctx, make_partition_tuple(ctx, {{1}}));
  CHECK(par.wt.fun == std::vector<Rat>{Rat(0)});
  CHECK(par.wt.delta == Rat(-1));
  CHECK(par.eps[0] == ExtInt::minus_inf());
  CHECK(par.phi[1] == ExtInt::minus_inf());

  LevelZeroWeight w1 = zero_weight(cd);
  w1.fun[0] = Rat(1);
  CrystalNode pl = make_node(ctx, straight_pl(w1));
  CHECK(as_int(pl.eps[1]) == 0);
  CHECK(as_int(pl.phi[1]) == 1);
  CHECK(as_int(pl.eps[0]) == 1);
  CHECK(as_int(pl.phi[0]) == 0);

  CrystalNode two = node_of_tensor(ctx, {pl, pl});
  CHECK(two.wt.fun == std::vector<Rat>{Rat(2)});
  CHECK(as_int(two.eps[1]) == 0);
  CHECK(as_int(two.phi[1]) == 2);

  for (const CrystalNode* n : {&e, &pl, &two}) {
    for (int i = 0; i <= cd.rank; ++i) {
      Rat c = pair_simple_acoroot(cd, i, n->wt);
      CHECK(Rat(as_int(n->phi[i]) - as_int(n->eps[i])) == c);
    }
  }

  CHECK(code_of([&] { make_partition_tuple(ctx, {{1, 2}}); }) == Errc::ConfigError);
  CHECK(code_of([&] { make_partition_tuple(ctx, {{0}}); }) == Errc::ConfigError);
  CHECK(code_of([&] { make_partition_tuple(ctx, {{2, 1}}); }) == Errc::ConfigError);
  CHECK(code_of([&] { make_partition_tuple(ctx, {{1}, {1}}); }) == Errc::DimensionMismatch);
  CHECK(code_of([&] { node_of_tensor(ctx, {}); }) == Errc::ConfigError);
}

TEST_CASE("tensor routing") {
  auto cd = build_cartan('A', 1);
  auto c1 = make_context(cd, {1});

  CrystalNode he = seed_node(c1);
  CrystalNode hr1 = sils_node(c1, simple_reflection_affine(cd, 1));

  auto fhe = op_f(c1, he, 1);
  REQUIRE(fhe.has_value());
  CHECK(*fhe == hr1);

  CrystalNode pair = node_of_tensor(c1, {he, he});
  auto fpair = op_f(c1, pair, 1);
  REQUIRE(fpair.has_value());
  CHECK(*fpair == node_of_tensor(c1, {hr1, he}));

  CrystalNode mixed = node_of_tensor(c1, {hr1, he});
  CHECK(as_int(mixed.eps[1]) == 1);
  auto emixed = op_e(c1, mixed, 1);
  REQUIRE(emixed.has_value());
  CHECK(*emixed == node_of_tensor(c1, {he, he}));
  auto fmixed = op_f(c1, mixed, 1);
  REQUIRE(fmixed.has_value());
  CHECK(*fmixed == node_of_tensor(c1, {hr1, hr1}));

  auto c2 = make_context(cd, {2});
  CrystalNode rho = make_node(c2, make_partition_tuple(c2, {{1}}));
  CrystalNode big = seed_node(c2);
  CrystalNode routed = node_of_tensor(c2, {rho, big});
  CHECK(routed.eps[1] == big.eps[1]);
  CHECK(routed.phi[1] == big.phi[1]);
  CHECK(routed.wt.delta == Rat(-1));
  auto fr = op_f(c2, routed, 1);
  REQUIRE(fr.has_value());
  auto fbig = op_f(c2, big, 1);
  REQUIRE(fbig.has_value());
  CHECK(*fr == node_of_tensor(c2, {rho, *fbig}));
  CrystalNode solo = node_of_tensor(c2, {rho});
  CHECK_FALSE(op_e(c2, solo, 1).has_value());
  CHECK_FALSE(op_f(c2, solo, 0).has_value());
}

TEST_CASE("tensor products agree with concatenation") {
  auto cd = build_cartan('A', 2);
  auto ctx = make_context(cd, {1, 1});

  LevelZeroWeight w1 = zero_weight(cd), w2 = zero_weight(cd);
  w1.fun[0] = Rat(1);
  w2.fun[1] = Rat(1);
  PLPath p1 = straight_pl(w1), p2 = straight_pl(w2);

  std::vector<std::pair<PLPath, PLPath>> reached{{p1, p2}};
  std::map<std::string, bool> seen;
  int compared = 0;
  for (std::size_t head = 0; head < reached.size() && head < 40; ++head) {
    auto [a, b] = reached[head];
    CrystalNode tn = node_of_tensor(ctx, {make_node(ctx, a), make_node(ctx, b)});
    PLPath cat = concat({a, b});
    for (int i = 0; i <= cd.rank; ++i) {
      CHECK(Rat(as_int(tn.eps[i])) == pl_eps(cd, cat, i));
      CHECK(Rat(as_int(tn.phi[i])) == pl_phi(cd, cat, i));
      auto tf = op_f(ctx, tn, i);
      auto cf = pl_f(cd, cat, i);
      CHECK(tf.has_value() == cf.has_value());
      if (tf && cf) {
        auto parts = flatten(*tf);
        REQUIRE(parts.size() == 2);
        PLPath na = std::get<PLPath>(parts[0].payload);
        PLPath nb = std::get<PLPath>(parts[1].payload);
        CHECK(concat({na, nb}) == *cf);
        if (seen.emplace(pl_str(na) + pl_str(nb), true).second) reached.emplace_back(na, nb);
      }
      ++compared;
    }
  }
  CHECK(compared >= 30);
}

TEST_CASE("tensor associativity") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {1});
  CrystalNode he = seed_node(ctx);
  CrystalNode hr1 = sils_node(ctx, simple_reflection_affine(cd, 1));

  CrystalNode flat = node_of_tensor(ctx, {he, hr1, he});
  CrystalNode nested = node_of_tensor(ctx, {node_of_tensor(ctx, {he, hr1}), he});
  CHECK(flat.wt == nested.wt);
  CHECK(flat.eps == nested.eps);
  CHECK(flat.phi == nested.phi);
  for (int i = 0; i <= cd.rank; ++i) {
    for (bool lower : {false, true}) {
      auto a = lower ? op_f(ctx, flat, i) : op_e(ctx, flat, i);
      auto b = lower ? op_f(ctx, nested, i) : op_e(ctx, nested, i);
      CHECK(a.has_value() == b.has_value());
      if (a && b) CHECK(flatten(*a) == flatten(*b));
    }
  }
}

TEST_CASE("ball generation") {
  auto cd = build_cartan('A', 1);
  auto c1 = make_context(cd, {1});

  LabeledCrystalBall b0 = generate_ball(c1, seed_node(c1), 0);
  CHECK(b0.nodes.size() == 1);
  CHECK(b0.boundary[0] == 1);
  CHECK(b0.edges.empty());

  LabeledCrystalBall b1 = generate_ball(c1, seed_node(c1), 1);
  REQUIRE(b1.nodes.size() == 3);
  CHECK(b1.dist == std::vector<int>{0, 1, 1});
  LevelZeroWeight mw = zero_weight(cd);
  mw.fun[0] = Rat(-1);
  LevelZeroWeight md = mw;
  md.delta = Rat(1);
  std::map<LevelZeroWeight, Int> wm = weight_multiplicities(b1, false);
  CHECK(wm.size() == 3);
  CHECK(wm.at(mw) == 1);
  CHECK(wm.at(md) == 1);
  std::map<LevelZeroWeight, Int> interior = weight_multiplicities(b1, true);
  CHECK(interior.size() == 1);

  LabeledCrystalBall b2 = generate_ball(c1, seed_node(c1), 2);
  CHECK(b2.nodes.size() == 5);

  auto c2 = make_context(cd, {2});
  LabeledCrystalBall big = generate_ball(c2, seed_node(c2), 2);
  SiLSPath mid = parse_sils(c2, "SiLS{w=[1] t=[0] @ 1/2; w=[] t=[0] @ 1}");
  auto it = big.index.find(make_node(c2, mid));
  REQUIRE(it != big.index.end());
  CHECK(big.dist[static_cast<std::size_t>(it->second)] == 1);

  CHECK(code_of([&] { generate_ball(c1, seed_node(c1), -1); }) == Errc::ConfigError);
}

TEST_CASE("balls are closed at interior nodes") {
  auto a1 = build_cartan('A', 1);
  auto a2 = build_cartan('A', 2);
  for (const auto& [ctx, depth] : {std::pair{make_context(a1, {2}), 3},
                                   std::pair{make_context(a2, {1, 1}), 2}}) {
    LabeledCrystalBall ball = generate_ball(ctx, seed_node(ctx), depth);
    std::map<std::pair<int, int>, int> out, in;
    for (const auto& e : ball.edges) {
      out[{e.src, e.i}] = e.dst;
      in[{e.dst, e.i}] = e.src;
    }
    for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
      CHECK(ball.boundary[id] == (ball.dist[id] == depth ? 1 : 0));
      if (ball.boundary[id]) continue;
      for (int i = 0; i <= ctx.cd.rank; ++i) {
        auto f = op_f(ctx, ball.nodes[id], i);
        auto e = op_e(ctx, ball.nodes[id], i);
        CHECK(f.has_value() == (out.count({static_cast<int>(id), i}) == 1));
        CHECK(e.has_value() == (in.count({static_cast<int>(id), i}) == 1));
        if (f) CHECK(ball.index.at(*f) == out.at({static_cast<int>(id), i}));
        if (e) CHECK(ball.index.at(*e) == in.at({static_cast<int>(id), i}));
      }
    }
    for (const auto& e : ball.edges) {
      auto f = op_f(ctx, ball.nodes[static_cast<std::size_t>(e.src)], e.i);
      REQUIRE(f.has_value());
      CHECK(ball.index.at(*f) == e.dst);
      auto back = op_e(ctx, ball.nodes[static_cast<std::size_t>(e.dst)], e.i);
      REQUIRE(back.has_value());
      CHECK(ball.index.at(*back) == e.src);
    }
  }
}

TEST_CASE("group action on nodes") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});

  CrystalNode he = seed_node(ctx);
  CrystalNode r1he = weyl_action(ctx, 1, he);
  CHECK(r1he == sils_node(ctx, simple_reflection_affine(cd, 1)));
  CHECK(weyl_action(ctx, 1, r1he) == he);

  auto f1 = op_f(ctx, he, 1);
  REQUIRE(f1.has_value());
  auto f11 = op_f(ctx, *f1, 1);
  REQUIRE(f11.has_value());
  CHECK(r1he == *f11);

  auto a2 = build_cartan('A', 2);
  for (const auto& ctx2 : {make_context(a2, {1, 1}), make_context(a2, {2, 0}), ctx}) {
    const AffineCartanData& cd2 = ctx2.cd;
    CrystalNode start = seed_node(ctx2);
    std::vector<std::vector<int>> words{{}};
    for (std::size_t head = 0; head < words.size() && head < 30; ++head) {
      AffineWeylElem x = affine_identity(cd2);
      for (int i : words[head]) x = mul(simple_reflection_affine(cd2, i), x);
      CrystalNode moved = weyl_action_word(ctx2, words[head], start);
      SiLSPath expect = trivial_path(ctx2, proj_J(cd2, ctx2.ps, x));
      CHECK(moved == make_node(ctx2, expect));
      if (words[head].size() < 3) {
        for (int i = 0; i <= cd2.rank; ++i) {
          auto w = words[head];
          w.push_back(i);
          words.push_back(std::move(w));
        }
      }
    }
  }
}

TEST_CASE("extremal checks") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});
  CrystalNode he = seed_node(ctx);
  CHECK(extremal_verify(ctx, he, 4));
  auto f1 = op_f(ctx, he, 1);
  REQUIRE(f1.has_value());
  CHECK_FALSE(extremal_verify(ctx, *f1, 1));
  CHECK_FALSE(extremal_verify(ctx, *f1, 0));
  CHECK(extremal_verify(ctx, weyl_action(ctx, 0, weyl_action(ctx, 1, he)), 2));

  CrystalNode par = make_node(ctx, make_partition_tuple(ctx, {{2}}));
  CHECK(extremal_verify(ctx, node_of_tensor(ctx, {par, he}), 2));
}

TEST_CASE("ball isomorphism") {
  auto cd = build_cartan('A', 1);
  auto c1 = make_context(cd, {1});
  auto c2 = make_context(cd, {2});

  LabeledCrystalBall a = generate_ball(c1, seed_node(c1), 3);
  IsoReport self = iso_check(a, a);
  CHECK(self.isomorphic);

  LabeledCrystalBall ref = generate_ball(c1, reference_seed(c1), 3);
  IsoReport against_ref = iso_check(a, ref);
  CHECK(against_ref.isomorphic);

  LabeledCrystalBall b = generate_ball(c2, seed_node(c2), 3);
  IsoReport mism = iso_check(a, b);
  CHECK_FALSE(mism.isomorphic);
  CHECK_FALSE(mism.detail.empty());

  CHECK(code_of([&] { iso_check(a, generate_ball(c1, seed_node(c1), 2)); }) ==
        Errc::ConfigError);

  LabeledCrystalBall ref2 = generate_ball(c2, reference_seed(c2), 3);
  CHECK(iso_check(b, ref2).isomorphic);
}

TEST_CASE("classification maps") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});

  SiLSPath triv = initial_path(ctx);
  PartitionTuple empty = theta_map(ctx, triv);
  CHECK(empty.parts == std::vector<std::vector<Int>>{{}});
  CHECK(xi_map(ctx, empty) == triv);

  for (Int k : {Int(1), Int(2), Int(3), Int(7)}) {
    PartitionTuple rho = make_partition_tuple(ctx, {{k}});
    SiLSPath eta = xi_map(ctx, rho);
    REQUIRE(eta.elems.size() == 2);
    CHECK(eta.elems[0] == translation(cd, Coweight{{k}}));
    CHECK(eta.elems[1].is_identity());
    CHECK(eta.cuts == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
    validate_sils(ctx, eta);
    CHECK(theta_map(ctx, eta) == rho);
    CHECK(sils_weight(ctx, eta).delta == Rat(-k));
  }

  SiLSPath three{{translation(cd, Coweight{{3}}), affine_identity(cd)},
                 {Rat(0), Rat(1, 2), Rat(1)}};
  CHECK(theta_map(ctx, three) == make_partition_tuple(ctx, {{3}}));

  SiLSPath bent = parse_sils(ctx, "SiLS{w=[1] t=[0] @ 1/2; w=[] t=[0] @ 1}");
  CHECK(code_of([&] { theta_map(ctx, bent); }) == Errc::NotCanonicalForm);
  CHECK(code_of([&] { xi_map(ctx, PartitionTuple{{{2, 1}}}); }) == Errc::ConfigError);

  auto a2 = build_cartan('A', 2);
  auto pctx = make_context(a2, {2, 0});
  for (Int k : {Int(1), Int(2), Int(3), Int(4)}) {
    PartitionTuple rho = make_partition_tuple(pctx, {{k}, {}});
    SiLSPath eta = xi_map(pctx, rho);
    REQUIRE(eta.elems.size() == 2);
    PetersonParts parts = peterson_decompose(pctx.cd, pctx.ps, eta.elems[0]);
    CHECK(parts.w.is_identity());
    CHECK(parts.xi == Coweight{{k, k / 2}});
    validate_sils(pctx, eta);
    CHECK(theta_map(pctx, eta) == rho);
  }

  auto mctx = make_context(a2, {2, 1});
  for (const auto& parts : std::vector<std::vector<std::vector<Int>>>{
           {{}, {}}, {{1}, {}}, {{3}, {}}}) {
    PartitionTuple rho = make_partition_tuple(mctx, parts);
    SiLSPath eta = xi_map(mctx, rho);
    validate_sils(mctx, eta);
    CHECK(theta_map(mctx, eta) == rho);
    CHECK(sils_weight(mctx, eta).delta == Rat(-partition_tuple_size(rho)));
  }
}

TEST_CASE("membership of straightened tuples matches the coweight criterion") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});
  std::vector<Rat> cuts{Rat(1, 3), Rat(1, 2), Rat(1)};
  int agreements = 0;
  for (Int x1 = 0; x1 <= 3; ++x1) {
    for (Int x2 = 0; x2 <= 2; ++x2) {
      if (x1 == x2) continue;
      for (const Rat& a : cuts) {
        AffineWeylElem first = translation(cd, Coweight{{x1}});
        AffineWeylElem second = translation(cd, Coweight{{x2}});
        SiLSPath p{{first, second}, {Rat(0), a, Rat(1)}};
        bool valid = true;
        try {
          validate_sils(ctx, p);
        } catch (const Error&) {
          valid = false;
        }
        bool crit = a < Rat(1) &&
                    translation_path_criterion(cd, ctx.ps, ctx.lambda, a, Coweight{{x2}},
                                               Coweight{{x1}});
        CHECK(valid == crit);
        ++agreements;
      }
    }
  }
  CHECK(agreements >= 20);
}

TEST_CASE("component representative search") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});

  SiLSPath triv = initial_path(ctx);
  CHECK(component_rep_search(ctx, triv, 100) == triv);

  auto f1 = sils_f(ctx, triv, 1);
  REQUIRE(f1.has_value());
  CHECK(component_rep_search(ctx, *f1, 100) == triv);

  PartitionTuple rho = make_partition_tuple(ctx, {{2}});
  SiLSPath canon = xi_map(ctx, rho);
  CHECK(component_rep_search(ctx, canon, 100) == canon);
  auto moved = sils_f(ctx, canon, 1);
  REQUIRE(moved.has_value());
  CHECK(component_rep_search(ctx, *moved, 400) == canon);

  CHECK(code_of([&] { component_rep_search(ctx, *f1, 1); }) == Errc::BudgetExceeded);
  CHECK(code_of([&] { component_rep_search(ctx, triv, 0); }) == Errc::ConfigError);
}

TEST_CASE("splitting commutes with the operators") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});

  std::vector<SiLSPath> pool{initial_path(ctx)};
  std::map<std::string, bool> seen;
  int checked = 0;
  for (std::size_t head = 0; head < pool.size() && head < 12; ++head) {
    for (int i = 0; i <= cd.rank; ++i) {
      for (bool lower : {false, true}) {
        auto r = lower ? sils_f(ctx, pool[head], i) : sils_e(ctx, pool[head], i);
        if (!r) continue;
        if (seen.emplace(sils_str(ctx, *r), true).second) pool.push_back(*r);
        for (Int N : {Int(2), Int(4)}) {
          auto split = [&](const SiLSPath& p) {
            std::vector<CrystalNode> factors;
            for (const SiLSPath& piece : sigma_factors(ctx, p, N))
              factors.push_back(make_node(ctx, piece));
            return node_of_tensor(ctx, factors);
          };
          CrystalNode before = split(pool[head]);
          std::optional<CrystalNode> stepped = before;
          for (Int k = 0; k < N && stepped; ++k)
            stepped = lower ? op_f(ctx, *stepped, i) : op_e(ctx, *stepped, i);
          REQUIRE(stepped.has_value());
          CHECK(*stepped == split(*r));
          ++checked;
        }
      }
    }
  }
  CHECK(checked >= 16);
}

TEST_CASE("component decomposition") {
  auto cd = build_cartan('A', 1);

  auto c1 = make_context(cd, {1});
  DecompositionReport r1 = decomposition_check(c1, 3, 2);
  CHECK(r1.ok);
  CHECK(r1.tuples_checked == 1);

  auto c2 = make_context(cd, {2});
  DecompositionReport r2 = decomposition_check(c2, 2, 2);
  CHECK(r2.ok);
  CHECK(r2.tuples_checked == 3);

  auto a2 = build_cartan('A', 2);
  auto c3 = make_context(a2, {1, 1});
  DecompositionReport r3 = decomposition_check(c3, 2, 1);
  CHECK(r3.ok);
  CHECK(r3.tuples_checked == 1);
}

TEST_CASE("partition tuple enumeration") {
  auto cd = build_cartan('A', 1);
  auto c2 = make_context(cd, {2});
  auto tuples = partition_tuples_up_to(c2, 3);
  CHECK(tuples.size() == 4);

  auto a2 = build_cartan('A', 2);
  auto c3 = make_context(a2, {3, 2});
  auto big = partition_tuples_up_to(c3, 2);
  std::set<std::string> reprs;
  for (const auto& t : big) reprs.insert(par_str(t));
  CHECK(reprs.size() == big.size());
  CHECK(reprs.count("Par{}") == 1);
  CHECK(reprs.count("Par{1:[1 1]}") == 1);
  CHECK(reprs.count("Par{1:[1]; 2:[1]}") == 1);
  CHECK(reprs.count("Par{1:[1 1 1]}") == 0);
  CHECK(big.size() == 7);
}

TEST_CASE("node literals") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {2});

  CrystalNode he = seed_node(ctx);
  CHECK(node_str(ctx, he) == "SiLS{w=[] t=[0] @ 1}");
  CHECK(parse_node(ctx, node_str(ctx, he)) == he);

  CrystalNode par = make_node(ctx, make_partition_tuple(ctx, {{1}}));
  CHECK(node_str(ctx, par) == "Par{1:[1]}");
  CHECK(parse_node(ctx, "Par{ 1 : [ 1 ] }") == par);
  CHECK(node_str(ctx, make_node(ctx, make_partition_tuple(ctx, {{}}))) == "Par{}");
  CHECK(parse_node(ctx, "Par{}") == make_node(ctx, make_partition_tuple(ctx, {{}})));

  LevelZeroWeight w1 = zero_weight(cd);
  w1.fun[0] = Rat(2);
  CrystalNode pl = make_node(ctx, straight_pl(w1));
  CHECK(parse_node(ctx, node_str(ctx, pl)) == pl);

  CrystalNode tens = node_of_tensor(ctx, {par, he, pl});
  CHECK(node_str(ctx, tens) == "tensor{Par{1:[1]}; SiLS{w=[] t=[0] @ 1}; " +
                                   node_str(ctx, pl) + "}");
  CHECK(parse_node(ctx, node_str(ctx, tens)) == tens);

  CrystalNode nested = node_of_tensor(ctx, {node_of_tensor(ctx, {par, he}), pl});
  CHECK(parse_node(ctx, node_str(ctx, nested)) == nested);

  CHECK(code_of([&] { parse_node(ctx, "blob{}"); }) == Errc::ParseError);
  CHECK(code_of([&] { parse_node(ctx, "Par{5:[1]}"); }) == Errc::ParseError);
  CHECK(code_of([&] { parse_node(ctx, "Par{1:[1/2]}"); }) == Errc::ParseError);
  CHECK(code_of([&] { parse_node(ctx, "Par{1:1}"); }) == Errc::ParseError);
  CHECK(code_of([&] { parse_node(ctx, "tensor{}"); }) == Errc::ParseError);
}

TEST_CASE("ball export") {
  auto cd = build_cartan('A', 1);
  auto ctx = make_context(cd, {1});
  LabeledCrystalBall ball = generate_ball(ctx, seed_node(ctx), 1);

  nlohmann::ordered_json j = ball_json(ctx, ball);
  CHECK(j["cartan"]["type"] == "A");
  CHECK(j["cartan"]["rank"] == 1);
  CHECK(j["shape"] == std::vector<Int>{1});
  CHECK(j["depth"] == 1);
  CHECK(j["nodes"].size() == 3);
  CHECK(j["nodes"][0]["id"] == 0);
  CHECK(j["nodes"][0]["boundary"] == false);
  CHECK(j["nodes"][0]["payload"] == "SiLS{w=[] t=[0] @ 1}");
  auto text = j.dump();
  auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["edges"].size() == ball.edges.size());

  CrystalNode par = make_node(make_context(cd, {2}), make_partition_tuple(make_context(cd, {2}), {{1}}));
  nlohmann::ordered_json jn = ball_json(make_context(cd, {2}),
                                        generate_ball(make_context(cd, {2}), par, 0));
  CHECK(jn["nodes"][0]["eps"][0].is_null());

  std::string dot = ball_dot(ctx, ball);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("turn set") {
  auto a2 = build_cartan('A', 2);
  auto ctx = make_context(a2, {2, 3});
  CHECK(turn_set(ctx) == std::vector<Rat>{Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)});
  auto pctx = make_context(a2, {2, 0});
  CHECK(turn_set(pctx) == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "silpath/cartan.hpp"
#include "silpath/weyl.hpp"

using namespace silpath;

namespace {

std::vector<Int> vi(std::initializer_list<Int> v) { return std::vector<Int>(v); }

AffineWeylElem word_product(const AffineCartanData& cd, const std::vector<int>& word) {
  AffineWeylElem x = affine_identity(cd);
  for (int i : word) x = mul(x, simple_reflection_affine(cd, i));
  return x;
}

// All products of subwords of a fixed word.
std::set<AffineWeylElem> subword_closure(const AffineCartanData& cd, const std::vector<int>& word) {
  std::set<AffineWeylElem> acc{affine_identity(cd)};
  for (int i : word) {
    std::set<AffineWeylElem> next = acc;
    for (const auto& x : acc) next.insert(mul(x, simple_reflection_affine(cd, i)));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("finite group structure in A2") {
  auto cd = build_cartan('A', 2);
  auto r1 = simple_reflection(cd, 1);
  auto r2 = simple_reflection(cd, 2);
  CHECK(mul(r1, r1).is_identity());
  CHECK(mul(mul(r1, r2), r1) == mul(mul(r2, r1), r2));
  CHECK(length(cd, finite_identity(cd)) == 0);
  CHECK(length(cd, r1) == 1);
  CHECK(length(cd, mul(r1, r2)) == 2);
  auto w0 = mul(mul(r1, r2), r1);
  CHECK(length(cd, w0) == 3);
  CHECK(reduced_word(cd, mul(r1, r2)) == std::vector<int>{1, 2});
  CHECK(reduced_word(cd, w0) == std::vector<int>{1, 2, 1});
  CHECK(from_word(cd, {1, 2, 1}) == w0);

  CHECK(apply_root(r1, FiniteRoot{vi({1, 0})}).coords == vi({-1, 0}));
  CHECK(apply_root(r1, FiniteRoot{vi({0, 1})}).coords == vi({1, 1}));
  CHECK(apply_coweight(r2, Coweight{vi({1, 0})}).coords == vi({1, 1}));

  LevelZeroWeight varpi1{{Rat(1), Rat(0)}, Rat(0)};
  auto moved = apply_weight(r1, varpi1);
  CHECK(moved.fun == std::vector<Rat>{Rat(-1), Rat(1)});

  CHECK(inv(mul(r1, r2)) == mul(r2, r1));
}

TEST_CASE("finite action is a homomorphism") {
  auto cd = build_cartan('G', 2);
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> gen(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteWeylElem a = finite_identity(cd), b = finite_identity(cd);
    for (int k = 0; k < 5; ++k) a = mul(a, simple_reflection(cd, gen(rng)));
    for (int k = 0; k < 5; ++k) b = mul(b, simple_reflection(cd, gen(rng)));
    LevelZeroWeight mu{{Rat(2), Rat(-1)}, Rat(1, 3)};
    CHECK(apply_weight(mul(a, b), mu) == apply_weight(a, apply_weight(b, mu)));
    FiniteRoot al{vi({1, 1})};
    CHECK(apply_root(mul(a, b), al) == apply_root(a, apply_root(b, al)));
    CHECK(mul(a, inv(a)).is_identity());
    CHECK(length(cd, a) == length(cd, inv(a)));
  }
}

TEST_CASE("affine composition and inversion") {
  auto cd = build_cartan('A', 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(0, 2);
  LevelZeroWeight mu{{Rat(1), Rat(2)}, Rat(0)};
  for (int trial = 0; trial < 25; ++trial) {
    AffineWeylElem x = affine_identity(cd), y = affine_identity(cd);
    for (int k = 0; k < 6; ++k) x = mul(x, simple_reflection_affine(cd, gen(rng)));
    for (int k = 0; k < 6; ++k) y = mul(y, simple_reflection_affine(cd, gen(rng)));
    CHECK(apply_weight(cd, mul(x, y), mu) == apply_weight(cd, x, apply_weight(cd, y, mu)));
    CHECK(mul(x, inv(x)) == affine_identity(cd));
    CHECK(length(cd, x) == length(cd, inv(x)));
    AffineRoot b = simple_affine_root(cd, 1);
    CHECK(apply_affine_root(cd, mul(x, y), b) ==
          apply_affine_root(cd, x, apply_affine_root(cd, y, b)));
  }
}

TEST_CASE("translations act on affine roots") {
  auto cd = build_cartan('A', 1);
  auto t = translation(cd, Coweight{vi({1})});
  AffineRoot alpha = simple_affine_root(cd, 1);
  auto image = apply_affine_root(cd, t, alpha);
  CHECK(image.finite.coords == vi({1}));
  CHECK(image.n == -2);
}

TEST_CASE("reflections") {
  auto cd = build_cartan('A', 1);
  AffineRoot a0 = simple_affine_root(cd, 0);
  auto r0 = reflection(cd, a0);
  CHECK(r0.w == simple_reflection(cd, 1));
  CHECK(r0.xi.coords == vi({-1}));
  CHECK(r0 == simple_reflection_affine(cd, 0));
  CHECK(mul(r0, r0) == affine_identity(cd));

  AffineRoot neg{FiniteRoot{vi({-1})}, 1};
  auto rneg = reflection(cd, neg);
  CHECK(rneg == r0);
  CHECK(length(cd, rneg) == 1);

  auto a2 = build_cartan('A', 2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gen(0, 2);
  AffineRoot beta{FiniteRoot{vi({1, 1})}, 2};
  auto rb = reflection(a2, beta);
  CHECK(mul(rb, rb) == affine_identity(a2));
  for (int trial = 0; trial < 10; ++trial) {
    AffineWeylElem x = affine_identity(a2);
    for (int k = 0; k < 5; ++k) x = mul(x, simple_reflection_affine(a2, gen(rng)));
    AffineRoot xb = apply_affine_root(a2, x, beta);
    CHECK(reflection(a2, xb) == mul(mul(x, rb), inv(x)));
  }

  CHECK_THROWS_AS(reflection(a2, AffineRoot{FiniteRoot{vi({0, 0})}, 1}), Error);
  CHECK_THROWS_AS(reflection(a2, AffineRoot{FiniteRoot{vi({2, 1})}, 0}), Error);
}

TEST_CASE("length of translations and reflections in A1") {
  auto cd = build_cartan('A', 1);
  Coweight av{vi({1})};
  Coweight nav{vi({-1})};
  CHECK(length(cd, translation(cd, av)) == 2);
  CHECK(length(cd, translation(cd, nav)) == 2);
  auto r1 = from_finite(cd, simple_reflection(cd, 1));
  CHECK(length(cd, mul(r1, translation(cd, av))) == 3);
  CHECK(length(cd, simple_reflection_affine(cd, 0)) == 1);
}

TEST_CASE("length agrees with reduced words") {
  for (char type : {'A', 'C'}) {
    auto cd = build_cartan(type, 2);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> gen(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> word;
      for (int k = 0; k < 8; ++k) word.push_back(gen(rng));
      AffineWeylElem x = word_product(cd, word);
      Int len = length(cd, x);
      CHECK(len <= 8);
      auto rw = reduced_word_affine(cd, x);
      CHECK(static_cast<Int>(rw.size()) == len);
      CHECK(word_product(cd, rw) == x);
    }
  }
}

TEST_CASE("semi-infinite length") {
  auto cd = build_cartan('A', 1);
  CHECK(sil(cd, translation(cd, Coweight{vi({1})})) == 2);
  CHECK(sil(cd, simple_reflection_affine(cd, 0)) == -1);
  CHECK(sil(cd, simple_reflection_affine(cd, 1)) == 1);
  CHECK(sil(cd, translation(cd, Coweight{vi({-1})})) == -2);

  // parity of sil matches parity of length
  auto a2 = build_cartan('A', 2);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    AffineWeylElem x = affine_identity(a2);
    for (int k = 0; k < 7; ++k) x = mul(x, simple_reflection_affine(a2, gen(rng)));
    CHECK(((sil(a2, x) - length(a2, x)) % 2 + 2) % 2 == 0);
  }
}

TEST_CASE("relative semi-infinite length") {
  auto a2 = build_cartan('A', 2);
  auto x = mul(from_finite(a2, simple_reflection(a2, 2)), translation(a2, Coweight{vi({1, 0})}));
  CHECK(sil_J(a2, x, {2}) == 3);
  CHECK(sil_J(a2, x, {}) == sil(a2, x));

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    AffineWeylElem y = affine_identity(a2);
    for (int k = 0; k < 6; ++k) y = mul(y, simple_reflection_affine(a2, gen(rng)));
    CHECK(sil_J(a2, y, {}) == sil(a2, y));
  }
}

TEST_CASE("bruhat order in the infinite dihedral group") {
  auto cd = build_cartan('A', 1);
  std::vector<AffineWeylElem> elems;
  for (int len = 0; len <= 6; ++len) {
    for (int start : {0, 1}) {
      std::vector<int> word;
      for (int k = 0; k < len; ++k) word.push_back((start + k) % 2);
      elems.push_back(word_product(cd, word));
      if (len == 0) break;
    }
  }
  for (const auto& x : elems)
    for (const auto& y : elems) {
      bool expect = x == y || length(cd, x) < length(cd, y);
      CHECK(bruhat_leq(cd, x, y) == expect);
    }
}

TEST_CASE("bruhat order matches the subword characterization") {
  auto cd = build_cartan('A', 2);
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<int> len(0, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> wy;
    int ly = len(rng);
    for (int k = 0; k < ly; ++k) wy.push_back(gen(rng));
    AffineWeylElem y = word_product(cd, wy);
    auto closure = subword_closure(cd, reduced_word_affine(cd, y));
    std::vector<int> wx;
    int lx = len(rng);
    for (int k = 0; k < lx; ++k) wx.push_back(gen(rng));
    AffineWeylElem x = word_product(cd, wx);
    CHECK(bruhat_leq(cd, x, y) == (closure.count(x) != 0));
  }
}

TEST_CASE("element literal round trip") {
  auto cd = build_cartan('A', 2);
  auto x = parse_element(cd, "w=[1 2] t=[0,1]");
  CHECK(x.w == mul(simple_reflection(cd, 1), simple_reflection(cd, 2)));
  CHECK(x.xi.coords == vi({0, 1}));
  CHECK(to_literal(cd, x) == "w=[1 2] t=[0,1]");
  CHECK(to_literal(cd, affine_identity(cd)) == "w=[] t=[0,0]");
  CHECK(parse_element(cd, to_literal(cd, x)) == x);

  std::mt19937 rng(29);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int trial = 0; trial < 15; ++trial) {
    AffineWeylElem z = affine_identity(cd);
    for (int k = 0; k < 6; ++k) z = mul(z, simple_reflection_affine(cd, gen(rng)));
    CHECK(parse_element(cd, to_literal(cd, z)) == z);
  }

  CHECK_THROWS_AS(parse_element(cd, "w=[3] t=[0,0]"), Error);
  CHECK_THROWS_AS(parse_element(cd, "w=[1] t=[0]"), Error);
  CHECK_THROWS_AS(parse_element(cd, "w=[1] t=[0,1/2]"), Error);
  CHECK_THROWS_AS(parse_element(cd, "nonsense"), Error);
  try {
    parse_element(cd, "w=[1] t=[a,b]");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "instances.hpp"
#include "nichols/tensor_algebra.hpp"

using namespace nichols;
using namespace nichols::testing;

namespace {

UnityScalar z5() { return UnityScalar::root_of_unity(5, 1); }
UnityScalar z3() { return UnityScalar::root_of_unity(3, 1); }

BraidingMatrix random_matrix(std::mt19937& rng, Int theta, Int torsion) {
  std::uniform_int_distribution<Int> de(0, torsion - 1);
  BraidingMatrix b = empty_matrix(theta, torsion);
  for (Int i = 0; i < theta; ++i)
    for (Int j = 0; j < theta; ++j) b.q(i, j) = UnityScalar::root_of_unity(torsion, de(rng));
  return b;
}

// independent oracle: the defining sum over S_n via Matsumoto lifts
TensorElement defining_symmetrizer(const BraidingMatrix& b, const TensorElement& x, Int n) {
  TensorElement acc(b.theta);
  for (const auto& p : all_permutations(n)) acc = acc + apply_braid_word(b, matsumoto_lift(p), x);
  return acc;
}

}  // namespace

TEST_CASE("braid generator action on words") {
  BraidingMatrix b = empty_matrix(2, 1);
  b.generics = {"q12", "q11"};
  b.q(0, 1) = UnityScalar::generic("q12");
  b.q(0, 0) = UnityScalar::generic("q11");
  TensorElement r = braid_generator_action(b, 0, {0, 1});
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == Word{1, 0});
  CHECK(r.terms().begin()->second.terms().begin()->first == UnityScalar::generic("q12"));

  TensorElement rr = braid_generator_action(b, 0, {0, 0});
  CHECK(rr.terms().begin()->first == Word{0, 0});
  CHECK(rr.terms().begin()->second.terms().begin()->first == UnityScalar::generic("q11"));
  CHECK_THROWS_AS(braid_generator_action(b, 1, {0, 0}), Error);
}

TEST_CASE("braid relations hold on all short words") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    BraidingMatrix b = random_matrix(rng, 3, 12);
    for (Int len : {3, 4, 5}) {
      // enumerate a few words of the given length
      for (int w = 0; w < 20; ++w) {
        Word word(len);
        for (auto& l : word) l = static_cast<int>(rng() % 3);
        TensorElement x = TensorElement::basis_word(3, word);
        for (Int k = 0; k + 2 < len; ++k) {
          TensorElement lhs = apply_braid_generator(
              b, k, apply_braid_generator(b, k + 1, apply_braid_generator(b, k, x)));
          TensorElement rhs = apply_braid_generator(
              b, k + 1, apply_braid_generator(b, k, apply_braid_generator(b, k + 1, x)));
          CHECK((lhs - rhs).is_zero());
        }
        for (Int k = 0; k + 3 < len; ++k) {
          TensorElement lhs = apply_braid_generator(b, k, apply_braid_generator(b, k + 2, x));
          TensorElement rhs = apply_braid_generator(b, k + 2, apply_braid_generator(b, k, x));
          CHECK((lhs - rhs).is_zero());
        }
      }
    }
  }
}

TEST_CASE("matsumoto lifts") {
  CHECK(matsumoto_lift({0, 1, 2}).empty());
  CHECK(matsumoto_lift({1, 0}) == std::vector<Int>{0});
  // longest element of S_3: both reduced words act equally
  std::vector<Int> w0 = {2, 1, 0};
  auto words = all_reduced_words(w0);
  CHECK(words.size() == 2);
  std::mt19937 rng(5);
  BraidingMatrix b = random_matrix(rng, 2, 7);
  TensorElement x = TensorElement::basis_word(2, {0, 1, 1});
  CHECK((apply_braid_word(b, words[0], x) - apply_braid_word(b, words[1], x)).is_zero());
}

TEST_CASE("matsumoto independence for n <= 4") {
  std::mt19937 rng(7);
  BraidingMatrix b = random_matrix(rng, 2, 9);
  for (Int n : {2, 3, 4}) {
    for (const auto& p : all_permutations(n)) {
      auto words = all_reduced_words(p);
      Word base(n);
      for (Int i = 0; i < n; ++i) base[i] = static_cast<int>(i % 2);
      TensorElement x = TensorElement::basis_word(2, base);
      TensorElement ref = apply_braid_word(b, words[0], x);
      for (size_t k = 1; k < words.size(); ++k)
        CHECK((apply_braid_word(b, words[k], x) - ref).is_zero());
      CHECK((apply_braid_word(b, matsumoto_lift(p), x) - ref).is_zero());
    }
  }
}

TEST_CASE("factorized symmetrizer equals the defining sum") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    BraidingMatrix b = random_matrix(rng, 2, 10);
    for (Int n : {2, 3, 4}) {
      for (int w = 0; w < 6; ++w) {
        Word word(n);
        for (auto& l : word) l = static_cast<int>(rng() % 2);
        TensorElement x = TensorElement::basis_word(2, word);
        CHECK((symmetrize(b, x) - defining_symmetrizer(b, x, n)).is_zero());
      }
    }
  }
}

TEST_CASE("symmetrizer matrix on small blocks") {
  // n = 2 on letters {1,2}: matrix of 1 + c
  BraidingMatrix b = empty_matrix(2, 5);
  b.q(0, 0) = z5();
  b.q(1, 1) = z5();
  b.q(0, 1) = z5().pow(2);
  b.q(1, 0) = z5();
  auto m = symmetrizer_matrix(b, {1, 1}, nullptr);
  auto f = CycField::get(5);
  // words in lex order: (0,1), (1,0)
  CHECK(m[0][0] == CycNumber::one(f));
  CHECK(m[1][1] == CycNumber::one(f));
  CHECK(m[1][0] == CycNumber::root_power(f, 2));  // q_01 * (1 0)
  CHECK(m[0][1] == CycNumber::root_power(f, 1));
  CHECK(rank_cyc(m) == 2);

  // edge product 1 identifies the two words: rank drops to 1
  BraidingMatrix disc = b;
  disc.q(1, 0) = z5().pow(3);
  CHECK(rank_cyc(symmetrizer_matrix(disc, {1, 1}, nullptr)) == 1);

  // q_11 = -1: S_2 on (1,1) vanishes
  BraidingMatrix neg = empty_matrix(1, 2);
  neg.q(0, 0) = minus_one();
  auto m2 = symmetrizer_matrix(neg, {2}, nullptr);
  CHECK(m2[0][0].is_zero());
  CHECK(rank_cyc(m2) == 0);
}

TEST_CASE("degree three block at a cube root vanishes both ways") {
  BraidingMatrix b = empty_matrix(1, 3);
  b.q(0, 0) = z3();
  auto m = symmetrizer_matrix(b, {3}, nullptr);
  CHECK(m.size() == 1);
  CHECK(m[0][0].is_zero());
  TensorElement x = TensorElement::basis_word(1, {0, 0, 0});
  TensorElement oracle = defining_symmetrizer(b, x, 3);
  CHECK(oracle.is_zero());
  CHECK(rank_cyc(m) == 0);
}

TEST_CASE("graded dims on rank one lines") {
  BraidingMatrix neg = empty_matrix(1, 2);
  neg.q(0, 0) = minus_one();
  HilbertTable t = graded_dims(neg, 4);
  CHECK(t.dims.at({0}) == 1);
  CHECK(t.dims.at({1}) == 1);
  CHECK(t.dims.at({2}) == 0);
  CHECK(t.dims.at({3}) == 0);

  BraidingMatrix cube = empty_matrix(1, 3);
  cube.q(0, 0) = z3();
  HilbertTable t3 = graded_dims(cube, 4);
  CHECK(t3.dims.at({1}) == 1);
  CHECK(t3.dims.at({2}) == 1);
  CHECK(t3.dims.at({3}) == 0);
  CHECK(t3.dims.at({4}) == 0);
}

TEST_CASE("graded dims demand a specialization for generics") {
  BraidingMatrix b = instance_A(2, UnityScalar::generic("q"), {}, 1);
  b.generics = {"q"};
  CHECK_THROWS_AS(graded_dims(b, 3), Error);
  SpecializationMap m;
  m.target_order = 5;
  m.assignments["q"] = 1;
  HilbertTable t = graded_dims(b, 3, &m);
  CHECK(t.dims.at({1, 1}) == 2);
}

TEST_CASE("block cap reports breach") {
  BraidingMatrix b = random_matrix(*(new std::mt19937(13)), 3, 5);
  CHECK_THROWS_AS(graded_dims(b, 8, nullptr, 100), Error);
}

TEST_CASE("braided commutator") {
  BraidingMatrix b = empty_matrix(2, 1);
  b.generics = {"a", "b", "c", "d"};
  b.q(0, 0) = UnityScalar::generic("a");
  b.q(0, 1) = UnityScalar::generic("b");
  b.q(1, 0) = UnityScalar::generic("c");
  b.q(1, 1) = UnityScalar::generic("d");
  TensorElement x1 = TensorElement::generator(2, 0), x2 = TensorElement::generator(2, 1);
  TensorElement c12 = braided_commutator(b, x1, x2);
  CHECK(c12.terms().size() == 2);
  CHECK(c12.terms().at({0, 1}) == ScalarSum(Rational(1)));
  CHECK(c12.terms().at({1, 0}) == -ScalarSum(UnityScalar::generic("b")));

  TensorElement cxx = braided_commutator(b, x1, x1);
  // (1 - a) * (0,0)
  ScalarSum expect = ScalarSum(Rational(1)) - ScalarSum(UnityScalar::generic("a"));
  CHECK(cxx.terms().at({0, 0}) == expect);
}

TEST_CASE("nested commutator matches direct expansion") {
  BraidingMatrix b = empty_matrix(3, 7);
  std::mt19937 rng(17);
  std::uniform_int_distribution<Int> de(0, 6);
  for (Int i = 0; i < 3; ++i)
    for (Int j = 0; j < 3; ++j) b.q(i, j) = UnityScalar::root_of_unity(7, de(rng));
  TensorElement x1 = TensorElement::generator(3, 0);
  TensorElement x2 = TensorElement::generator(3, 1);
  TensorElement x3 = TensorElement::generator(3, 2);
  TensorElement lhs = braided_commutator(b, x1, braided_commutator(b, x2, x3));
  // brute force: x1(x2x3 - q23 x3x2) - q12 q13 (x2x3 - q23 x3x2) x1
  TensorElement inner = x2.concat(x3) - x3.concat(x2).scaled(ScalarSum(b.q(1, 2)));
  TensorElement rhs = x1.concat(inner) - inner.concat(x1).scaled(ScalarSum(b.q(0, 1) * b.q(0, 2)));
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("root vector expressions") {
  RootVectorExpr u13 = root_vector_expr(SuperFamily::A, 3, {1, 1, 1});
  CHECK(u13.str() == "[x1,[x2,x3]]");
  RootVectorExpr v12 = root_vector_expr(SuperFamily::B, 2, {1, 2});
  CHECK(v12.str() == "[[x1,x2],x2]");
  CHECK(v12.degree == IntVec{1, 2});
  RootVectorExpr wt1 = root_vector_expr(SuperFamily::C, 3, {2, 2, 1});
  CHECK(wt1.str() == "[[x1,x2],[x1,[x2,x3]]]");
  RootVectorExpr ud = root_vector_expr(SuperFamily::D, 4, {0, 1, 1, 1});
  CHECK(ud.str() == "[[x2,x4],x3]");
  CHECK_THROWS_AS(root_vector_expr(SuperFamily::A, 3, {2, 0, 0}), Error);
}

TEST_CASE("root exponent") {
  BraidingMatrix b = instance_B1(z5(), z3(), 15);
  RootDatum d1 = root_exponent(b, {1, 0});
  CHECK(d1.q_alpha == z5());
  CHECK(d1.order.value() == 5);
  RootDatum d = root_exponent(b, {1, 2});
  // q_alpha = q11 (q12 q21)^2 q22^4
  UnityScalar expect = b.q(0, 0) * b.edge(0, 1).pow(2) * b.q(1, 1).pow(4);
  CHECK(d.q_alpha == expect);
  RootDatum zero = root_exponent(b, {0, 0});
  CHECK(zero.q_alpha.is_one());
}

TEST_CASE("relations for Cartan A2") {
  BraidingMatrix b = instance_A(2, z5(), {}, 5);
  ClassifyResult cls = classify_braiding(b);
  auto rels = relations_for(b, cls, false);
  bool serre12 = false, serre21 = false;
  for (const auto& r : rels) {
    if (r.tag == "serre(1,2)") {
      serre12 = true;
      CHECK(r.degree == IntVec{2, 1});
    }
    if (r.tag == "serre(2,1)") serre21 = true;
  }
  CHECK(serre12);
  CHECK(serre21);
  for (const auto& r : rels)
    if (r.element) {
      auto v = verify_relation(b, *r.element);
      CHECK(v.annihilated);
    }
}

TEST_CASE("relations for the B2 instance with a cube-root tail") {
  // q_11 = -1, q_22 = zeta_3, edge zeta_3
  BraidingMatrix b = instance_B2(2, z3(), {1}, 6);
  ClassifyResult cls = classify_braiding(b);
  REQUIRE(cls.components[0].descriptor.has_value());
  CHECK(cls.components[0].descriptor->family == SuperFamily::B);
  auto rels = relations_for(b, cls, false);
  bool b1 = false;
  for (const auto& r : rels)
    if (r.tag == "B1") {
      b1 = true;
      CHECK(total_degree(r.degree) == 5);
    }
  CHECK(b1);
  for (const auto& r : rels)
    if (r.element) CHECK(verify_relation(b, *r.element).annihilated);
}

TEST_CASE("minimal power set for the B-1 display") {
  BraidingMatrix b = instance_B1(z5(), z3(), 15);
  ClassifyResult cls = classify_braiding(b);
  REQUIRE(cls.components[0].descriptor->display == "B-1");
  auto rels = relations_for(b, cls, true, 20);
  std::vector<std::string> powers;
  for (const auto& r : rels)
    if (r.tag.rfind("power", 0) == 0) powers.push_back(r.tag);
  // x_alpha1^5, x_alpha2^3, x_{alpha1+2alpha2}^N only
  CHECK(powers.size() == 3);
  auto rels_full = relations_for(b, cls, false, 20);
  std::vector<std::string> full_powers;
  for (const auto& r : rels_full)
    if (r.tag.rfind("power", 0) == 0) full_powers.push_back(r.tag);
  CHECK(full_powers.size() == 4);
}

TEST_CASE("verify relation outcomes with witnesses") {
  BraidingMatrix neg = empty_matrix(1, 2);
  neg.q(0, 0) = minus_one();
  TensorElement xx = TensorElement::basis_word(1, {0, 0});
  CHECK(verify_relation(neg, xx).annihilated);

  BraidingMatrix cube = empty_matrix(1, 3);
  cube.q(0, 0) = z3();
  auto out = verify_relation(cube, xx);
  CHECK(!out.annihilated);
  // witness (1 + zeta_3) * (1,1)
  ScalarSum w = out.witness.terms().at({0, 0});
  ScalarSum expect = ScalarSum(Rational(1)) + ScalarSum(z3());
  CHECK(w == expect);
}

TEST_CASE("degree cap on verification") {
  BraidingMatrix neg = empty_matrix(1, 2);
  neg.q(0, 0) = minus_one();
  TensorElement big = TensorElement::basis_word(1, Word(9, 0));
  CHECK_THROWS_AS(verify_relation(neg, big), Error);
}

TEST_CASE("graded dims deterministic across thread counts") {
  BraidingMatrix b = instance_A(2, z5(), {1}, 10);
  ThreadPool one(1), four(4);
  HilbertTable t1 = graded_dims(b, 5, nullptr, kDefaultBlockCap, &one);
  HilbertTable t4 = graded_dims(b, 5, nullptr, kDefaultBlockCap, &four);
  CHECK(t1 == t4);
  CHECK(t1.str() == t4.str());
}

TEST_CASE("twist invariance of graded dims") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<Int> de(0, 9);
  BraidingMatrix b = instance_A(2, z5(), {1}, 10);
  HilbertTable base = graded_dims(b, 4);
  for (int trial = 0; trial < 5; ++trial) {
    BraidingMatrix t = b;
    UnityScalar tw = UnityScalar::root_of_unity(10, de(rng));
    t.q(0, 1) = t.q(0, 1) * tw;
    t.q(1, 0) = t.q(1, 0) * tw.inverse();
    CHECK(graded_dims(t, 4) == base);
  }
}

TEST_CASE("super sign compatibility of graded dims") {
  // the diagonal sign transform and the full sign twist (-1)^{k_i k_j} q_ij
  // are twist equivalent, so their Nichols algebras have equal dimensions
  std::mt19937 rng(29);
  std::uniform_int_distribution<Int> de(0, 9);
  std::uniform_int_distribution<int> dp(0, 1);
  for (int trial = 0; trial < 3; ++trial) {
    BraidingMatrix b = random_matrix(rng, 2, 10);
    std::vector<int> parity = {dp(rng), dp(rng)};
    BraidingMatrix diag = super_sign_transform(b, parity);
    BraidingMatrix full = b;
    full.torsion = lcm_int(b.torsion, 2);
    for (Int i = 0; i < 2; ++i)
      for (Int j = 0; j < 2; ++j)
        if (parity[i] * parity[j] % 2 == 1) full.q(i, j) = full.q(i, j) * minus_one();
    CHECK(twist_equivalent(diag, full));
    CHECK(graded_dims(diag, 4) == graded_dims(full, 4));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nichols/braiding.hpp"

using namespace nichols;

namespace {

BraidingMatrix cartan_a2_generic() {
  BraidingMatrix b;
  b.theta = 2;
  b.torsion = 1;
  b.generics = {"q"};
  UnityScalar q = UnityScalar::generic("q");
  b.entries = {q, q.inverse(), UnityScalar(), q};
  return b;
}

// vertex labels q, zeta_3 with edge q^-1 (two-vertex B instance)
BraidingMatrix b2_q_zeta(Int torsion, Int qexp) {
  BraidingMatrix b;
  b.theta = 2;
  b.torsion = torsion;
  UnityScalar q = UnityScalar::root_of_unity(torsion, qexp);
  UnityScalar zeta = UnityScalar::root_of_unity(3, 1);
  b.entries = {q, q.inverse(), UnityScalar(), zeta};
  return b;
}

}  // namespace

TEST_CASE("dynkin diagram basics") {
  BraidingMatrix b1;
  b1.theta = 1;
  b1.generics = {"q"};
  b1.entries = {UnityScalar::generic("q")};
  DynkinDiagram d1 = dynkin_of(b1);
  CHECK(d1.vertex.size() == 1);
  CHECK(d1.edges.empty());

  BraidingMatrix a2 = cartan_a2_generic();
  DynkinDiagram d2 = dynkin_of(a2);
  CHECK(d2.vertex[0] == UnityScalar::generic("q"));
  CHECK(d2.edges.size() == 1);
  CHECK(d2.edges.begin()->second == UnityScalar::generic("q", -1));
}

TEST_CASE("tipo-style B2 diagram labels") {
  BraidingMatrix b = b2_q_zeta(15, 3);  // q = zeta_5
  DynkinDiagram d = dynkin_of(b);
  CHECK(d.vertex[0] == UnityScalar::root_of_unity(5, 1));
  CHECK(d.vertex[1] == UnityScalar::root_of_unity(3, 1));
  CHECK(d.edge_label(0, 1).value() == UnityScalar::root_of_unity(5, 4));
}

TEST_CASE("twist equivalence ignores the edge split") {
  BraidingMatrix a = cartan_a2_generic();
  BraidingMatrix b = a;
  UnityScalar t = UnityScalar::root_of_unity(7, 2);
  b.torsion = 7;
  b.q(0, 1) = b.q(0, 1) * t;
  b.q(1, 0) = b.q(1, 0) * t.inverse();
  CHECK(twist_equivalent(a, b));
  // transpose of a symmetric diagram
  BraidingMatrix c = a;
  std::swap(c.q(0, 1), c.q(1, 0));
  CHECK(twist_equivalent(a, c));
}

TEST_CASE("twist equivalence distinguishes different diagrams") {
  BraidingMatrix b1 = b2_q_zeta(15, 3);
  // a C-type two-vertex instance: labels q, q^2 with edge q^-2
  BraidingMatrix c;
  c.theta = 2;
  c.torsion = 15;
  UnityScalar q = UnityScalar::root_of_unity(5, 1);
  c.entries = {q, q.pow(-2), UnityScalar(), q.pow(2)};
  CHECK(!twist_equivalent(b1, c, true));
}

TEST_CASE("twist equivalence is an equivalence relation on a pool") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> de(0, 9);
  std::vector<BraidingMatrix> pool;
  for (int k = 0; k < 6; ++k) {
    BraidingMatrix b = b2_q_zeta(15, 3);
    UnityScalar t = UnityScalar::root_of_unity(10, de(rng));
    b.torsion = 30;
    b.q(0, 1) = b.q(0, 1) * t;
    b.q(1, 0) = b.q(1, 0) * t.inverse();
    pool.push_back(b);
  }
  for (const auto& x : pool) CHECK(twist_equivalent(x, x));
  for (const auto& x : pool)
    for (const auto& y : pool) CHECK(twist_equivalent(x, y) == twist_equivalent(y, x));
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool)
        if (twist_equivalent(x, y) && twist_equivalent(y, z)) CHECK(twist_equivalent(x, z));
}

TEST_CASE("super sign transform") {
  BraidingMatrix a2 = cartan_a2_generic();
  BraidingMatrix same = super_sign_transform(a2, {0, 0});
  CHECK(same.q(0, 0) == a2.q(0, 0));
  BraidingMatrix flip = super_sign_transform(a2, {1, 0});
  CHECK(flip.q(0, 0) == a2.q(0, 0) * minus_one());
  CHECK(flip.q(0, 1) == a2.q(0, 1));
  // involution on the diagonal
  BraidingMatrix twice = super_sign_transform(flip, {1, 0});
  CHECK(twice.q(0, 0) == a2.q(0, 0));
}

TEST_CASE("super sign transform diagram matches the full sign twist") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<Int> de(0, 11);
  std::uniform_int_distribution<int> dp(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    BraidingMatrix b;
    b.theta = 3;
    b.torsion = 12;
    b.entries.assign(9, UnityScalar());
    for (Int i = 0; i < 3; ++i)
      for (Int j = 0; j < 3; ++j) b.q(i, j) = UnityScalar::root_of_unity(12, de(rng));
    std::vector<int> k = {dp(rng), dp(rng), dp(rng)};
    BraidingMatrix lhs = super_sign_transform(b, k);
    // full twist (-1)^{k_i k_j} q_ij
    BraidingMatrix rhs = b;
    rhs.torsion = lcm_int(b.torsion, 2);
    for (Int i = 0; i < 3; ++i)
      for (Int j = 0; j < 3; ++j)
        if (k[i] * k[j] % 2 == 1) rhs.q(i, j) = rhs.q(i, j) * minus_one();
    CHECK(dynkin_of(lhs) == dynkin_of(rhs));
  }
}

TEST_CASE("connected components") {
  BraidingMatrix b;
  b.theta = 3;
  b.torsion = 5;
  b.entries.assign(9, UnityScalar());
  for (Int i = 0; i < 3; ++i) b.q(i, i) = UnityScalar::root_of_unity(5, 1);
  CHECK(connected_components(b).size() == 3);
  // A_3 chain
  b.q(0, 1) = UnityScalar::root_of_unity(5, 4);
  b.q(1, 2) = UnityScalar::root_of_unity(5, 4);
  CHECK(connected_components(b).size() == 1);
}

TEST_CASE("braiding from YD datum") {
  // Gamma = Z/2, g = sigma, chi = sgn, odd
  YDDatum d;
  d.invariant_factors = {2};
  d.elements = {{1}};
  d.characters = {{1}};
  d.parities = {1};
  auto [b, par] = braiding_from_yd_datum(d);
  CHECK(b.q(0, 0) == minus_one());
  CHECK(par == std::vector<int>{1});

  YDDatum triv;
  triv.invariant_factors = {4};
  triv.elements = {{1}, {2}};
  triv.characters = {{0}, {0}};
  triv.parities = {0, 0};
  auto [bt, pt] = braiding_from_yd_datum(triv);
  for (Int i = 0; i < 2; ++i)
    for (Int j = 0; j < 2; ++j) CHECK(bt.q(i, j).is_one());

  YDDatum z5;
  z5.invariant_factors = {5};
  z5.elements = {{1}};
  z5.characters = {{2}};
  z5.parities = {0};
  auto [b5, p5] = braiding_from_yd_datum(z5);
  CHECK(b5.q(0, 0) == UnityScalar::root_of_unity(5, 2));
}

TEST_CASE("YD datum diagram invariant under transposition") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<Int> dv(0, 5);
  std::uniform_int_distribution<int> dp(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    YDDatum d;
    d.invariant_factors = {6};
    for (int j = 0; j < 3; ++j) {
      d.elements.push_back({dv(rng)});
      d.characters.push_back({dv(rng)});
      d.parities.push_back(dp(rng));
    }
    auto [b, par] = braiding_from_yd_datum(d);
    YDDatum t = d;
    std::swap(t.elements, t.characters);
    auto [bt, part] = braiding_from_yd_datum(t);
    CHECK(dynkin_of(super_sign_transform(b, par)) == dynkin_of(super_sign_transform(bt, part)));
  }
}

TEST_CASE("parse and serialize round trip") {
  std::string text =
      "torsion = 15\n"
      "generics = q\n"
      "theta = 2\n"
      "constraints = q^2!=1\n"
      "row 1 = z^5 q^-1\n"
      "row 2 = 1 q^1\n"
      "parity = 1 0\n";
  BraidingMatrix b = BraidingMatrix::parse(text);
  CHECK(b.theta == 2);
  CHECK(b.q(0, 0) == UnityScalar::root_of_unity(3, 1));
  CHECK(b.q(0, 1) == UnityScalar::generic("q", -1));
  CHECK(b.parity.value() == std::vector<int>{1, 0});
  std::string s = b.serialize();
  BraidingMatrix b2 = BraidingMatrix::parse(s);
  CHECK(b2.serialize() == s);
  CHECK(b2.entries == b.entries);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(BraidingMatrix::parse("theta = 2\nrow 1 = 1 1\n"), Error);           // missing row 2
  CHECK_THROWS_AS(BraidingMatrix::parse("theta = 1\nrow 1 = q^1\n"), Error);           // undeclared generic
  CHECK_THROWS_AS(BraidingMatrix::parse("torsion = 5\nrow 1 = 1\n"), Error);           // no theta
  CHECK_THROWS_AS(BraidingMatrix::parse("theta = 1\nrow 1 = 1\nparity = 1 0\n"), Error);
}

TEST_CASE("constraint checking at specialization") {
  BraidingMatrix b = BraidingMatrix::parse(
      "torsion = 1\ngenerics = q\ntheta = 1\nconstraints = q^2!=1\nrow 1 = q^1\n");
  SpecializationMap ok;
  ok.target_order = 5;
  ok.assignments["q"] = 1;
  CHECK_NOTHROW(b.check_constraints(ok));
  SpecializationMap bad;
  bad.target_order = 4;
  bad.assignments["q"] = 2;  // q = -1, q^2 = 1
  CHECK_THROWS_AS(b.check_constraints(bad), Error);
}

TEST_CASE("dot export") {
  BraidingMatrix b = b2_q_zeta(15, 3);
  std::string dot = dynkin_dot(b);
  CHECK(dot.find("graph dynkin") != std::string::npos);
  CHECK(dot.find("v1 -- v2") != std::string::npos);
  CHECK(dot.find("z^3") != std::string::npos);
}

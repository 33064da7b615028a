#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nichols/superroots.hpp"

using namespace nichols;

namespace {

ParityFunction parity(std::initializer_list<int> v) { return ParityFunction{std::vector<int>(v)}; }

IntVec vec(std::initializer_list<Int> v) { return IntVec(v); }

// s_i applied to the full +- set, positive half returned
std::vector<IntVec> reflect_root_set(const std::vector<IntVec>& pos, Int i) {
  IntVec row = cartan_row_of_roots(pos, i);
  std::set<IntVec> out;
  for (const auto& v : pos) {
    IntVec w = v;
    Int s = 0;
    for (size_t t = 0; t < w.size(); ++t) s += row[t] * w[t];
    w[i] -= s;
    bool neg = true;
    for (Int x : w)
      if (x > 0) neg = false;
    if (neg)
      for (auto& x : w) x = -x;
    out.insert(w);
  }
  return std::vector<IntVec>(out.begin(), out.end());
}

}  // namespace

TEST_CASE("parity extends multiplicatively") {
  ParityFunction p = parity({-1, 1, -1});
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c) {
        IntVec v = {a, b, c};
        IntVec w = {c, a, b};
        CHECK(p.of(vec_add(v, w)) == p.of(v) * p.of(w));
      }
}

TEST_CASE("type A root sets") {
  SuperRootSet a3 = build_classical(SuperFamily::A, 3, parity({1, 1, 1}));
  std::vector<IntVec> expect = {vec({0, 0, 1}), vec({0, 1, 0}), vec({0, 1, 1}),
                                vec({1, 0, 0}), vec({1, 1, 0}), vec({1, 1, 1})};
  CHECK(a3.positive == expect);
  // parity does not change the type A set
  CHECK(build_classical(SuperFamily::A, 3, parity({-1, 1, -1})).positive == expect);
}

TEST_CASE("type B root sets") {
  SuperRootSet b2 = build_classical(SuperFamily::B, 2, parity({1, 1}));
  CHECK(b2.positive == std::vector<IntVec>{vec({0, 1}), vec({1, 0}), vec({1, 1}), vec({1, 2})});
  for (Int theta : {2, 3, 4, 5}) {
    ParityFunction p(std::vector<int>(theta, 1));
    p.sign[0] = -1;
    CHECK(static_cast<Int>(build_classical(SuperFamily::B, theta, p).positive.size()) == theta * theta);
  }
}

TEST_CASE("type C conditional roots recomputed by brute force") {
  // all-even parity keeps every w-tilde
  SuperRootSet c3 = build_classical(SuperFamily::C, 3, parity({1, 1, 1}));
  CHECK(static_cast<Int>(c3.positive.size()) == 9);
  std::set<IntVec> set(c3.positive.begin(), c3.positive.end());
  CHECK(set.count(vec({2, 2, 1})));  // w-tilde_1 = u_{1,2} + u_{1,3}
  CHECK(set.count(vec({0, 2, 1})));  // w-tilde_2
  CHECK(set.count(vec({1, 2, 1})));  // w_12 = u_{1,3} + u_{2,2}

  // independent recomputation of the case split for several parities
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        ParityFunction p = parity({s1, s2, s3});
        SuperRootSet c = build_classical(SuperFamily::C, 3, p);
        std::set<IntVec> got(c.positive.begin(), c.positive.end());
        // u_{i,theta-1} parities: p(u_{1,2}) = s1*s2, p(u_{2,2}) = s2
        CHECK(got.count(vec({2, 2, 1})) == (s1 * s2 == 1 ? 1 : 0));
        CHECK(got.count(vec({0, 2, 1})) == (s2 == 1 ? 1 : 0));
      }
}

TEST_CASE("type D conditional roots") {
  // theta = 4, all even: Cartan D_4 with 12 roots, no tip pair root
  SuperRootSet d4 = build_classical(SuperFamily::D, 4, parity({1, 1, 1, 1}));
  CHECK(static_cast<Int>(d4.positive.size()) == 12);
  std::set<IntVec> set(d4.positive.begin(), d4.positive.end());
  CHECK(!set.count(vec({0, 0, 1, 1})));
  CHECK(set.count(vec({0, 1, 1, 1})));     // u_{2,4}... reindexed: alpha_2+alpha_3+alpha_4
  CHECK(set.count(vec({1, 1, 0, 1})));     // u-tilde_1 = u_{1,2} + alpha_4
  CHECK(set.count(vec({1, 2, 1, 1})));     // z_12 = u_{1,4} + u_{2,2}

  // odd tip parity brings in alpha_{theta-1} + alpha_theta and all z-tilde
  SuperRootSet d4s = build_classical(SuperFamily::D, 4, parity({1, 1, -1, 1}));
  std::set<IntVec> sset(d4s.positive.begin(), d4s.positive.end());
  CHECK(sset.count(vec({0, 0, 1, 1})));
  CHECK(sset.count(vec({2, 2, 1, 1})));  // z-tilde_1 = u_{1,4} + u_{1,2}
  CHECK(sset.count(vec({0, 2, 1, 1})));  // z-tilde_2
  CHECK(static_cast<Int>(d4s.positive.size()) == 15);
}

TEST_CASE("exceptional displayed sets") {
  SuperRootSet x0 = build_exceptional(SuperFamily::D21, 0);
  CHECK(x0.positive.size() == 7);
  for (Int k = 1; k <= 3; ++k) CHECK(build_exceptional(SuperFamily::D21, k).positive.size() == 7);
  CHECK(build_exceptional(SuperFamily::F4, 0).positive.size() == 18);
  CHECK(build_exceptional(SuperFamily::G3, 0).positive.size() == 13);
  CHECK_THROWS_AS(build_exceptional(SuperFamily::D21, 4), Error);
}

TEST_CASE("F(4) object pins the corrected chain") {
  // The 18-root F(4) object: without 1 2 2 0 and 1 2 3 1 the set is not
  // closed under its own string reflections, and 1 2 1 0 is not a root.
  SuperRootSet f4 = build_exceptional(SuperFamily::F4, 0);
  std::set<IntVec> set(f4.positive.begin(), f4.positive.end());
  CHECK(set.count(vec({1, 2, 2, 0})));
  CHECK(set.count(vec({1, 2, 3, 1})));
  CHECK(!set.count(vec({1, 2, 1, 0})));
  for (Int i = 0; i < 4; ++i) {
    auto image = reflect_root_set(f4.positive, i);
    for (const auto& v : image) {
      bool pure = true;
      bool nonneg = true;
      for (Int x : v)
        if (x < 0) nonneg = false;
      CHECK((pure && nonneg));
    }
  }
}

TEST_CASE("D(2,1;a): single reflections produce the listed objects") {
  SuperRootSet x0 = build_exceptional(SuperFamily::D21, 0);
  for (Int k = 1; k <= 3; ++k) {
    auto img = reflect_root_set(x0.positive, k - 1);
    CHECK(img == build_exceptional(SuperFamily::D21, k).positive);
  }
}

TEST_CASE("parity reflection") {
  // A_2, p = (-,+), a_12 = -1: reflection at 1 flips vertex 2
  ParityFunction p = parity({-1, 1});
  SuperRootSet a2 = build_classical(SuperFamily::A, 2, p);
  IntVec row = cartan_row_of_roots(a2.positive, 0);
  ParityFunction hat = parity_reflect(p, 0, row);
  CHECK(hat.sign == std::vector<int>{-1, -1});
  // isolated vertex keeps parity: string length 0
  ParityFunction p3 = parity({-1, 1, 1});
  IntVec row3 = {2, -1, 0};
  ParityFunction hat3 = parity_reflect(p3, 0, row3);
  CHECK(hat3.sign[2] == 1);
  // double reflection restores
  CHECK(parity_reflect(hat, 0, row).sign == p.sign);
  // reflecting at an even vertex is the identity
  CHECK(parity_reflect(parity({1, -1}), 0, row).sign == std::vector<int>{1, -1});
}

TEST_CASE("family atlas of type A") {
  FamilyAtlas atlas = family_atlas(SuperFamily::A, 2, parity({-1, 1}));
  CHECK(atlas.objects.size() >= 2);
  auto sets = atlas.distinct_root_sets();
  CHECK(sets.size() == 1);  // same roots for every object
  CHECK(sets[0].size() == 3);

  FamilyAtlas even = family_atlas(SuperFamily::A, 3, parity({1, 1, 1}));
  CHECK(even.objects.size() == 1);
}

TEST_CASE("family atlases are closed under every reflection") {
  struct Case {
    SuperFamily f;
    Int theta;
    std::vector<int> p0;
  };
  std::vector<Case> cases = {
      {SuperFamily::A, 3, {-1, 1, 1}},  {SuperFamily::B, 3, {1, -1, 1}},
      {SuperFamily::C, 3, {-1, -1, 1}}, {SuperFamily::C, 4, {1, -1, 1, 1}},
      {SuperFamily::D, 3, {1, -1, 1}},  {SuperFamily::D, 4, {1, 1, -1, 1}},
      {SuperFamily::D, 5, {-1, 1, -1, 1, 1}},
  };
  for (const auto& c : cases) {
    FamilyAtlas atlas = family_atlas(c.f, c.theta, ParityFunction{c.p0});
    CHECK(!atlas.objects.empty());
    auto sets = atlas.distinct_root_sets();
    std::set<std::vector<IntVec>> pool(sets.begin(), sets.end());
    for (const auto& S : sets)
      for (Int i = 0; i < c.theta; ++i) CHECK(pool.count(reflect_positive_roots(S, i)));
  }
}

TEST_CASE("C and D displays live in one atlas") {
  // reflecting the C_3 set at the odd middle vertex lands on a D_3 display
  ParityFunction p{{-1, -1, 1}};
  SuperRootSet c3 = build_classical(SuperFamily::C, 3, p);
  auto image = reflect_positive_roots(c3.positive, 1);
  ParityFunction d_par{{1, -1, -1}};
  CHECK(image == build_classical(SuperFamily::D, 3, d_par).positive);
  // and the closure contains both shapes
  FamilyAtlas atlas = family_atlas(SuperFamily::C, 3, p);
  bool has_c = false, has_d = false;
  for (const auto& S : atlas.distinct_root_sets()) {
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) {
          ParityFunction q{{s1, s2, s3}};
          if (S == build_classical(SuperFamily::C, 3, q).positive) has_c = true;
          if (S == build_classical(SuperFamily::D, 3, q).positive) has_d = true;
        }
  }
  CHECK(has_c);
  CHECK(has_d);
}

TEST_CASE("every constructed root has homomorphic parity") {
  FamilyAtlas atlas = family_atlas(SuperFamily::D, 4, ParityFunction{{1, -1, 1, -1}});
  for (const auto& obj : atlas.objects)
    for (const auto& v : obj.positive) {
      int expect = 1;
      for (Int t = 0; t < 4; ++t)
        if (mod_pos(v[t], 2) == 1 && obj.parity->sign[t] == -1) expect = -expect;
      CHECK(obj.parity->of(v) == expect);
    }
}

TEST_CASE("exceptional atlas sizes") {
  CHECK(family_atlas_exceptional(SuperFamily::D21).objects.size() == 4);
  CHECK(family_atlas_exceptional(SuperFamily::F4).objects.size() == 6);
  CHECK(family_atlas_exceptional(SuperFamily::G3).objects.size() == 4);
}

TEST_CASE("root counts stay pinned across the exceptional atlases") {
  for (const auto& obj : family_atlas_exceptional(SuperFamily::D21).objects) CHECK(obj.positive.size() == 7);
  for (const auto& obj : family_atlas_exceptional(SuperFamily::F4).objects) CHECK(obj.positive.size() == 18);
  for (const auto& obj : family_atlas_exceptional(SuperFamily::G3).objects) CHECK(obj.positive.size() == 13);
}

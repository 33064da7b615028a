#include "nichols/superroots.hpp"

#include <algorithm>
#include <set>

namespace nichols {

std::string family_name(SuperFamily f) {
  switch (f) {
    case SuperFamily::A: return "A";
    case SuperFamily::B: return "B";
    case SuperFamily::C: return "C";
    case SuperFamily::D: return "D";
    case SuperFamily::D21: return "D(2,1;a)";
    case SuperFamily::F4: return "F(4)";
    case SuperFamily::G3: return "G(3)";
  }
  return "?";
}

int ParityFunction::of(const IntVec& v) const {
  Int odd = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (sign[i] < 0) odd += v[i];
  return mod_pos(odd, 2) ? -1 : 1;
}

namespace {

// u_{ij} = alpha_i + ... + alpha_j, 1-based inclusive
IntVec u_root(Int theta, Int i, Int j) {
  IntVec v(theta, 0);
  for (Int t = i; t <= j; ++t) v[t - 1] = 1;
  return v;
}

void push(SuperRootSet& rs, IntVec v, RootSymbol sym, Int i, Int j) {
  rs.labels.push_back({v, sym, i, j});
  rs.positive.push_back(std::move(v));
}

void finish(SuperRootSet& rs) {
  std::sort(rs.positive.begin(), rs.positive.end());
  std::sort(rs.labels.begin(), rs.labels.end(),
            [](const LabeledRoot& a, const LabeledRoot& b) { return a.degree < b.degree; });
}

}  // namespace

SuperRootSet build_classical(SuperFamily f, Int theta, const ParityFunction& p) {
  if (p.theta() != theta) throw Error(ErrKind::Arg, "parity rank mismatch");
  Int min_theta = f == SuperFamily::D ? 3 : 2;
  if (theta < min_theta)
    throw Error(ErrKind::Arg, family_name(f) + " needs rank >= " + std::to_string(min_theta));
  SuperRootSet rs;
  rs.family = f;
  rs.theta = theta;
  rs.parity = p;
  switch (f) {
    case SuperFamily::A:
      for (Int i = 1; i <= theta; ++i)
        for (Int j = i; j <= theta; ++j) push(rs, u_root(theta, i, j), RootSymbol::U, i, j);
      break;
    case SuperFamily::B:
      for (Int i = 1; i <= theta; ++i)
        for (Int j = i; j <= theta; ++j) push(rs, u_root(theta, i, j), RootSymbol::U, i, j);
      for (Int i = 1; i < theta; ++i)
        for (Int j = i + 1; j <= theta; ++j)
          push(rs, vec_add(u_root(theta, i, theta), u_root(theta, j, theta)), RootSymbol::V, i, j);
      break;
    case SuperFamily::C: {
      for (Int i = 1; i <= theta; ++i)
        for (Int j = i; j <= theta; ++j) push(rs, u_root(theta, i, j), RootSymbol::U, i, j);
      for (Int i = 1; i < theta - 1; ++i)
        for (Int j = i + 1; j <= theta - 1; ++j)
          push(rs, vec_add(u_root(theta, i, theta), u_root(theta, j, theta - 1)), RootSymbol::W, i, j);
      for (Int i = 1; i <= theta - 1; ++i)
        if (p.of(u_root(theta, i, theta - 1)) == 1)
          push(rs, vec_add(u_root(theta, i, theta - 1), u_root(theta, i, theta)), RootSymbol::Wtilde, i, 0);
      break;
    }
    case SuperFamily::D: {
      for (Int i = 1; i <= theta; ++i)
        for (Int j = i; j <= theta; ++j)
          if (!(i == theta - 1 && j == theta)) push(rs, u_root(theta, i, j), RootSymbol::U, i, j);
      if (p.of(u_root(theta, theta - 1, theta - 1)) == -1)
        push(rs, u_root(theta, theta - 1, theta), RootSymbol::TipPair, theta - 1, theta);
      for (Int i = 1; i <= theta - 2; ++i) {
        IntVec v = u_root(theta, i, theta - 2);
        v[theta - 1] += 1;
        push(rs, std::move(v), RootSymbol::Utilde, i, 0);
      }
      for (Int i = 1; i < theta - 2; ++i)
        for (Int j = i + 1; j <= theta - 2; ++j)
          push(rs, vec_add(u_root(theta, i, theta), u_root(theta, j, theta - 2)), RootSymbol::Z, i, j);
      for (Int i = 1; i <= theta - 2; ++i)
        if (p.of(u_root(theta, i, theta - 1)) == -1)
          push(rs, vec_add(u_root(theta, i, theta), u_root(theta, i, theta - 2)), RootSymbol::Ztilde, i, 0);
      break;
    }
    default:
      throw Error(ErrKind::Arg, "build_classical: not a classical family");
  }
  finish(rs);
  return rs;
}

SuperRootSet build_exceptional(SuperFamily f, Int object_index) {
  SuperRootSet rs;
  rs.family = f;
  auto add = [&rs](std::initializer_list<Int> v) {
    rs.positive.push_back(IntVec(v));
    rs.labels.push_back({IntVec(v), RootSymbol::Plain, 0, 0});
  };
  if (f == SuperFamily::D21) {
    rs.theta = 3;
    if (object_index == 0) {
      add({1, 0, 0}); add({0, 1, 0}); add({0, 0, 1});
      add({1, 1, 0}); add({1, 0, 1}); add({0, 1, 1});
      add({1, 1, 1});
    } else if (object_index >= 1 && object_index <= 3) {
      add({1, 0, 0}); add({0, 1, 0}); add({0, 0, 1});
      add({1, 1, 1});
      IntVec top = {1, 1, 1};
      top[object_index - 1] += 1;
      rs.positive.push_back(top);
      rs.labels.push_back({top, RootSymbol::Plain, 0, 0});
      for (Int j = 1; j <= 3; ++j) {
        if (j == object_index) continue;
        IntVec v(3, 0);
        v[object_index - 1] = 1;
        v[j - 1] = 1;
        rs.positive.push_back(v);
        rs.labels.push_back({v, RootSymbol::Plain, 0, 0});
      }
    } else {
      throw Error(ErrKind::Arg, "D(2,1;a) objects are 0..3");
    }
  } else if (f == SuperFamily::F4) {
    if (object_index != 0) throw Error(ErrKind::Arg, "only the listed F(4) object is built directly");
    // The F(4) system has 18 positive roots; the roots 1 2 2 0 and 1 2 3 1
    // complete the odd chain between 1 1 2 0 and 1 2 3 2 (root-system
    // axioms force them, matching the Weyl-groupoid computation).
    rs.theta = 4;
    add({1, 0, 0, 0}); add({1, 1, 0, 0}); add({1, 1, 1, 0}); add({1, 1, 2, 0}); add({1, 2, 2, 0});
    add({1, 1, 1, 1}); add({1, 1, 2, 1}); add({1, 2, 2, 1}); add({1, 2, 3, 1}); add({1, 2, 3, 2});
    add({0, 1, 1, 1}); add({0, 1, 2, 1}); add({0, 1, 1, 0}); add({0, 1, 2, 0}); add({0, 1, 0, 0});
    add({0, 0, 1, 0}); add({0, 0, 1, 1}); add({0, 0, 0, 1});
  } else if (f == SuperFamily::G3) {
    if (object_index != 0) throw Error(ErrKind::Arg, "only the listed G(3) object is built directly");
    rs.theta = 3;
    add({1, 0, 0}); add({1, 1, 0}); add({1, 1, 1}); add({1, 2, 1});
    add({1, 3, 1}); add({1, 3, 2}); add({1, 4, 2});
    add({0, 1, 0}); add({0, 1, 1}); add({0, 2, 1}); add({0, 3, 1}); add({0, 3, 2}); add({0, 0, 1});
  } else {
    throw Error(ErrKind::Arg, "build_exceptional: not an exceptional family");
  }
  finish(rs);
  return rs;
}

ParityFunction parity_reflect(const ParityFunction& p, Int i, const IntVec& cartan_row) {
  if (p.sign[i] == 1) return p;
  ParityFunction out = p;
  for (Int k = 0; k < p.theta(); ++k) {
    Int m = -cartan_row[k];  // string length, m_ii = -2 keeps the vertex
    if (mod_pos(m, 2) == 1) out.sign[k] = -out.sign[k];
  }
  return out;
}

IntVec cartan_row_of_roots(const std::vector<IntVec>& positive, Int i) {
  Int theta = positive.empty() ? 0 : static_cast<Int>(positive[0].size());
  std::set<IntVec> set(positive.begin(), positive.end());
  IntVec row(theta, 0);
  row[i] = 2;
  for (Int j = 0; j < theta; ++j) {
    if (j == i) continue;
    IntVec probe(theta, 0);
    probe[j] = 1;
    Int k = 0;
    while (true) {
      probe[i] = k + 1;
      if (!set.count(probe)) break;
      ++k;
    }
    row[j] = -k;
  }
  return row;
}

std::vector<std::vector<IntVec>> FamilyAtlas::distinct_root_sets() const {
  std::set<std::vector<IntVec>> sets;
  for (const auto& o : objects) sets.insert(o.positive);
  return std::vector<std::vector<IntVec>>(sets.begin(), sets.end());
}

std::vector<IntVec> reflect_positive_roots(const std::vector<IntVec>& pos, Int i) {
  Int theta = pos.empty() ? 0 : static_cast<Int>(pos[0].size());
  IntVec row = cartan_row_of_roots(pos, i);
  std::set<IntVec> out;
  for (const auto& v : pos) {
    IntVec w = v;
    Int s = 0;
    for (Int t = 0; t < theta; ++t) s += row[t] * w[t];
    w[i] -= s;
    bool neg = true;
    for (Int t = 0; t < theta; ++t)
      if (w[t] > 0) neg = false;
    if (neg)
      for (Int t = 0; t < theta; ++t) w[t] = -w[t];
    out.insert(w);
  }
  return std::vector<IntVec>(out.begin(), out.end());
}

namespace {

// Closure of a positive root set under all string reflections.
FamilyAtlas root_set_closure(SuperFamily f, SuperRootSet start, Int object_cap) {
  FamilyAtlas atlas;
  atlas.family = f;
  atlas.theta = start.theta;
  Int theta = start.theta;
  std::set<std::vector<IntVec>> seen = {start.positive};
  std::vector<std::vector<IntVec>> queue = {start.positive};
  atlas.objects.push_back(std::move(start));
  for (size_t cur = 0; cur < queue.size(); ++cur) {
    std::vector<IntVec> pos = queue[cur];
    for (Int i = 0; i < theta; ++i) {
      std::vector<IntVec> next = reflect_positive_roots(pos, i);
      if (seen.insert(next).second) {
        if (static_cast<Int>(seen.size()) > object_cap) throw Error(ErrKind::Cap, "family atlas object cap");
        queue.push_back(next);
        SuperRootSet rs;
        rs.family = f;
        rs.theta = theta;
        rs.positive = next;
        for (const auto& v : next) rs.labels.push_back({v, RootSymbol::Plain, 0, 0});
        atlas.objects.push_back(std::move(rs));
      }
    }
  }
  return atlas;
}

}  // namespace

FamilyAtlas family_atlas(SuperFamily f, Int theta, const ParityFunction& p0, Int object_cap) {
  if (f == SuperFamily::D21 || f == SuperFamily::F4 || f == SuperFamily::G3)
    return family_atlas_exceptional(f, object_cap);
  if (f == SuperFamily::A || f == SuperFamily::B) {
    // one shared root set; the objects are the reachable parities
    FamilyAtlas atlas;
    atlas.family = f;
    atlas.theta = theta;
    std::set<ParityFunction> seen = {p0};
    std::vector<ParityFunction> queue = {p0};
    for (size_t cur = 0; cur < queue.size(); ++cur) {
      ParityFunction p = queue[cur];
      SuperRootSet rs = build_classical(f, theta, p);
      for (Int i = 0; i < theta; ++i) {
        if (p.sign[i] != -1) continue;
        IntVec row = cartan_row_of_roots(rs.positive, i);
        ParityFunction next = parity_reflect(p, i, row);
        if (seen.insert(next).second) {
          if (static_cast<Int>(seen.size()) > object_cap) throw Error(ErrKind::Cap, "family atlas object cap");
          queue.push_back(next);
        }
      }
      atlas.objects.push_back(std::move(rs));
    }
    return atlas;
  }
  // Types C and D share one atlas: reflections can exchange the two displayed
  // shapes (and reorder vertices), so the objects are tracked by root set.
  return root_set_closure(f, build_classical(f, theta, p0), object_cap);
}

FamilyAtlas family_atlas_exceptional(SuperFamily f, Int object_cap) {
  return root_set_closure(f, build_exceptional(f, 0), object_cap);
}

}  // namespace nichols

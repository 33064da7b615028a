#include "nichols/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nichols {

namespace {

Int default_cartan_cap(Int theta) { return 8 * theta; }

std::string q_key(const std::vector<UnityScalar>& q) {
  std::string key;
  for (const auto& s : q) {
    key += s.key();
    key += '|';
  }
  return key;
}

// Cartan row of an object: a_ij for fixed i, a_ii = 2.
std::optional<IntVec> cartan_row(const GroupoidObject& obj, Int theta, Int i, Int cap) {
  IntVec row(theta);
  row[i] = 2;
  for (Int j = 0; j < theta; ++j) {
    if (j == i) continue;
    auto a = cartan_entry(obj, theta, i, j, cap);
    if (!a) return std::nullopt;
    row[j] = *a;
  }
  return row;
}

// s_i in the shared coordinates: v - (sum_j a_ij v_j) e_i
IntVec apply_reflection(const IntVec& row, Int i, const IntVec& v) {
  Int s = 0;
  for (size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
  IntVec out = v;
  out[i] -= s;
  return out;
}

bool all_nonneg(const IntVec& v) {
  for (Int x : v)
    if (x < 0) return false;
  return true;
}

bool all_nonpos(const IntVec& v) {
  for (Int x : v)
    if (x > 0) return false;
  return true;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

std::optional<Int> cartan_entry(const GroupoidObject& obj, Int theta, Int i, Int j, Int cap) {
  if (i == j) return 2;
  const UnityScalar& qii = obj.at(theta, i, i);
  UnityScalar prod = obj.at(theta, i, j) * obj.at(theta, j, i);
  UnityScalar qpow;  // q_ii^n
  for (Int n = 0; n <= cap; ++n) {
    if (q_number(n + 1, qii) == ZeroFlag::Zero) return -n;
    if ((qpow * prod).is_one()) return -n;
    qpow = qpow * qii;
  }
  return std::nullopt;
}

std::optional<Int> cartan_entry(const BraidingMatrix& b, Int i, Int j) {
  GroupoidObject seed;
  seed.q = b.entries;
  return cartan_entry(seed, b.theta, i, j, default_cartan_cap(b.theta));
}

GroupoidObject reflect(const BraidingMatrix& seed, const GroupoidObject& obj, Int i, Int cartan_cap) {
  Int theta = seed.theta;
  auto row = cartan_row(obj, theta, i, cartan_cap);
  if (!row)
    throw Error(ErrKind::Arg, "reflection undefined: no Cartan entry at vertex " + std::to_string(i + 1));
  GroupoidObject out;
  out.base.resize(theta);
  for (Int j = 0; j < theta; ++j) {
    IntVec fj = obj.base[j];
    const IntVec& fi = obj.base[i];
    for (Int t = 0; t < theta; ++t) fj[t] -= (*row)[j] * fi[t];
    out.base[j] = std::move(fj);
  }
  out.q.resize(theta * theta);
  for (Int j = 0; j < theta; ++j)
    for (Int k = 0; k < theta; ++k) out.q[j * theta + k] = seed.chi(out.base[j], out.base[k]);
  if (seed.parity) {
    std::vector<int> p(theta);
    for (Int j = 0; j < theta; ++j) {
      Int s = 0;
      for (Int t = 0; t < theta; ++t) s += (*seed.parity)[t] * out.base[j][t];
      p[j] = static_cast<int>(mod_pos(s, 2));
    }
    out.parity = p;
  }
  return out;
}

Int GroupoidAtlas::reflection_target(Int obj, Int i) const {
  return morphisms[obj * seed.theta + i].target;
}

GroupoidAtlas explore(const BraidingMatrix& seed, Int object_cap, Int root_cap) {
  if (object_cap < 1 || root_cap < 1) throw Error(ErrKind::Arg, "caps must be positive");
  Int theta = seed.theta;
  Int ccap = default_cartan_cap(theta);
  GroupoidAtlas atlas;
  atlas.seed = seed;

  GroupoidObject e;
  e.q = seed.entries;
  e.base.assign(theta, IntVec(theta, 0));
  for (Int j = 0; j < theta; ++j) e.base[j][j] = 1;
  if (seed.parity) e.parity = seed.parity;

  std::unordered_map<std::string, Int> index;
  atlas.objects.push_back(e);
  index[q_key(e.q)] = 0;

  for (Int cur = 0; cur < static_cast<Int>(atlas.objects.size()); ++cur) {
    for (Int i = 0; i < theta; ++i) {
      GroupoidObject obj = atlas.objects[cur];  // copy: vector may reallocate
      if (!cartan_row(obj, theta, i, ccap)) {
        atlas.status = AtlasStatus::ReflectionUndefined;
        atlas.failed_object = cur;
        atlas.failed_index = i;
        return atlas;
      }
      GroupoidObject next = reflect(seed, obj, i, ccap);
      std::string key = q_key(next.q);
      auto it = index.find(key);
      Int target;
      if (it == index.end()) {
        if (static_cast<Int>(atlas.objects.size()) >= object_cap) {
          atlas.status = AtlasStatus::ObjectCapExceeded;
          atlas.failed_object = cur;
          atlas.failed_index = i;
          return atlas;
        }
        target = static_cast<Int>(atlas.objects.size());
        atlas.objects.push_back(next);
        index[key] = target;
      } else {
        target = it->second;
      }
      atlas.morphisms.push_back({cur, i, target});
    }
  }

  // Root collection: start from the simple roots at every object and push
  // along every reflection until nothing new appears.
  Int nobj = static_cast<Int>(atlas.objects.size());
  std::vector<std::set<IntVec>> roots(nobj);
  for (Int o = 0; o < nobj; ++o)
    for (Int i = 0; i < theta; ++i) {
      IntVec v(theta, 0);
      v[i] = 1;
      roots[o].insert(v);
      roots[o].insert(negate(v));
    }
  // cache Cartan rows per (object, index)
  std::vector<IntVec> rows(nobj * theta);
  for (const auto& m : atlas.morphisms)
    rows[m.source * theta + m.index] = *cartan_row(atlas.objects[m.source], theta, m.index, ccap);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& m : atlas.morphisms) {
      const IntVec& row = rows[m.source * theta + m.index];
      for (const IntVec& v : roots[m.source]) {
        IntVec w = apply_reflection(row, m.index, v);
        if (roots[m.target].insert(std::move(w)).second) {
          changed = true;
          if (static_cast<Int>(roots[m.target].size()) > 2 * root_cap) {
            atlas.status = AtlasStatus::RootCapExceeded;
            atlas.failed_object = m.target;
            atlas.roots.assign(nobj, {});
            return atlas;
          }
        }
      }
    }
  }
  atlas.roots.resize(nobj);
  for (Int o = 0; o < nobj; ++o) atlas.roots[o] = std::vector<IntVec>(roots[o].begin(), roots[o].end());
  return atlas;
}

std::vector<IntVec> positive_roots(const GroupoidAtlas& atlas, Int obj) {
  if (!atlas.complete()) throw Error(ErrKind::Cap, "atlas incomplete; no root sets");
  std::vector<IntVec> out;
  for (const auto& v : atlas.roots[obj])
    if (all_nonneg(v)) out.push_back(v);
  return out;  // roots are stored sorted
}

Int cartan_from_roots(const std::vector<IntVec>& positive, Int i, Int j) {
  std::set<IntVec> set(positive.begin(), positive.end());
  IntVec base(positive.empty() ? 0 : positive[0].size(), 0);
  if (base.empty()) return 0;
  base[i] = 1;
  Int k = 0;
  while (true) {
    IntVec probe = base;
    probe[j] += k + 1;
    if (!set.count(probe)) break;
    ++k;
  }
  return -k;
}

RootSystemReport verify_root_system(const GroupoidAtlas& atlas) {
  RootSystemReport rep;
  if (!atlas.complete()) {
    rep.violations.push_back("atlas incomplete");
    return rep;
  }
  Int theta = atlas.seed.theta;
  Int ccap = default_cartan_cap(theta);
  Int nobj = static_cast<Int>(atlas.objects.size());

  std::vector<std::set<IntVec>> full(nobj);
  std::vector<std::vector<IntVec>> pos(nobj);
  for (Int o = 0; o < nobj; ++o) {
    full[o] = std::set<IntVec>(atlas.roots[o].begin(), atlas.roots[o].end());
    pos[o] = positive_roots(atlas, o);
  }

  // axiom 1: every root has a sign, and the set is the positive half union its negative
  for (Int o = 0; o < nobj; ++o) {
    for (const auto& v : full[o]) {
      if (!all_nonneg(v) && !all_nonpos(v)) {
        rep.violations.push_back("axiom1: mixed-sign root " + vec_str(v) + " at object " + std::to_string(o + 1));
        continue;
      }
      if (!full[o].count(negate(v)))
        rep.violations.push_back("axiom1: root set not symmetric at object " + std::to_string(o + 1));
    }
    if (2 * pos[o].size() != full[o].size())
      rep.violations.push_back("axiom1: positive/negative split mismatch at object " + std::to_string(o + 1));
  }

  // axiom 2: s_i(Delta^X) = Delta^{r_i X} for every reflection
  for (const auto& m : atlas.morphisms) {
    auto row = cartan_row(atlas.objects[m.source], theta, m.index, ccap);
    std::set<IntVec> image;
    for (const auto& v : full[m.source]) image.insert(apply_reflection(*row, m.index, v));
    if (image != full[m.target])
      rep.violations.push_back("axiom2: s_" + std::to_string(m.index + 1) + " image mismatch from object " +
                               std::to_string(m.source + 1));
  }

  // axiom 3: the only multiples of alpha_i are +-alpha_i
  for (Int o = 0; o < nobj; ++o)
    for (const auto& v : full[o]) {
      Int support = -1;
      bool pure = true;
      for (Int t = 0; t < theta; ++t)
        if (v[t] != 0) {
          if (support >= 0) pure = false;
          support = t;
        }
      if (pure && support >= 0 && v[support] != 1 && v[support] != -1)
        rep.violations.push_back("axiom3: multiple " + vec_str(v) + " at object " + std::to_string(o + 1));
    }

  // axiom 4: (r_i r_j)^{m_ij} = id on objects
  for (Int o = 0; o < nobj; ++o)
    for (Int i = 0; i < theta; ++i)
      for (Int j = i + 1; j < theta; ++j) {
        Int m = 0;
        for (const auto& v : pos[o]) {
          bool in_cone = true;
          for (Int t = 0; t < theta; ++t)
            if (t != i && t != j && v[t] != 0) in_cone = false;
          if (in_cone) ++m;
        }
        Int cur = o;
        for (Int rep_i = 0; rep_i < m; ++rep_i) {
          cur = atlas.reflection_target(cur, j);
          cur = atlas.reflection_target(cur, i);
        }
        if (cur != o)
          rep.violations.push_back("axiom4: (r_" + std::to_string(i + 1) + " r_" + std::to_string(j + 1) +
                                   ")^" + std::to_string(m) + " misses object " + std::to_string(o + 1));
      }

  // Cartan scheme: row i is shared between an object and its i-reflection
  for (const auto& m : atlas.morphisms) {
    auto rs = cartan_row(atlas.objects[m.source], theta, m.index, ccap);
    auto rt = cartan_row(atlas.objects[m.target], theta, m.index, ccap);
    if (!(rs && rt && *rs == *rt))
      rep.violations.push_back("cartan scheme: row " + std::to_string(m.index + 1) + " changes across object " +
                               std::to_string(m.source + 1) + " -> " + std::to_string(m.target + 1));
  }

  // matrix-side Cartan entries match the root strings
  for (Int o = 0; o < nobj; ++o)
    for (Int i = 0; i < theta; ++i)
      for (Int j = 0; j < theta; ++j) {
        if (i == j) continue;
        auto a = cartan_entry(atlas.objects[o], theta, i, j, ccap);
        Int from_roots = cartan_from_roots(pos[o], j, i);
        if (!a || *a != from_roots)
          rep.violations.push_back("cartan entries: a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") vs root string at object " + std::to_string(o + 1));
      }

  return rep;
}

std::string root_set_text(const std::vector<IntVec>& positive) {
  std::ostringstream out;
  for (const auto& v : positive) out << "  " << vec_str(v) << "\n";
  return out.str();
}

std::string atlas_text(const GroupoidAtlas& atlas) {
  std::ostringstream out;
  const char* status = "complete";
  switch (atlas.status) {
    case AtlasStatus::Complete: break;
    case AtlasStatus::ObjectCapExceeded: status = "object cap exceeded"; break;
    case AtlasStatus::RootCapExceeded: status = "root cap exceeded"; break;
    case AtlasStatus::ReflectionUndefined: status = "reflection undefined"; break;
  }
  out << "status = " << status << "\n";
  out << "objects = " << atlas.objects.size() << "\n";
  Int theta = atlas.seed.theta;
  for (size_t o = 0; o < atlas.objects.size(); ++o) {
    out << "object " << (o + 1) << "\n";
    const auto& obj = atlas.objects[o];
    for (Int i = 0; i < theta; ++i) {
      out << "  row " << (i + 1) << " =";
      for (Int j = 0; j < theta; ++j) out << ' ' << obj.at(theta, i, j).str(atlas.seed.torsion);
      out << "\n";
    }
    for (Int j = 0; j < theta; ++j) out << "  base " << (j + 1) << " = " << vec_str(obj.base[j]) << "\n";
    if (obj.parity) {
      out << "  parity =";
      for (int k : *obj.parity) out << ' ' << k;
      out << "\n";
    }
    if (atlas.complete()) {
      auto pos = positive_roots(atlas, static_cast<Int>(o));
      out << "  positive roots (" << pos.size() << ")\n";
      for (const auto& v : pos) out << "    " << vec_str(v) << "\n";
    }
  }
  out << "morphisms\n";
  for (const auto& m : atlas.morphisms)
    out << "  " << (m.source + 1) << " -(" << (m.index + 1) << ")-> " << (m.target + 1) << "\n";
  return out.str();
}

std::string atlas_dot(const GroupoidAtlas& atlas) {
  std::ostringstream out;
  out << "graph weyl_atlas {\n  node [shape=box];\n";
  for (size_t o = 0; o < atlas.objects.size(); ++o) out << "  X" << (o + 1) << ";\n";
  for (const auto& m : atlas.morphisms)
    if (m.source <= m.target)
      out << "  X" << (m.source + 1) << " -- X" << (m.target + 1) << " [label=\"" << (m.index + 1) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace nichols

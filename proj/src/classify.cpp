#include "nichols/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nichols {

namespace {

bool is_minus_one(const UnityScalar& s) { return s == minus_one(); }

bool order_not_in(const UnityScalar& s, std::initializer_list<Int> orders) {
  auto ord = s.multiplicative_order();
  if (!ord) return true;  // generic: infinite order
  for (Int n : orders)
    if (*ord == n) return false;
  return true;
}

bool primitive_cube_root(const UnityScalar& s) {
  auto ord = s.multiplicative_order();
  return ord && *ord == 3;
}

// vertex orderings that lay the diagram out as a path 1-2-...-theta
std::vector<std::vector<Int>> path_orders(const DynkinDiagram& d) {
  std::vector<std::vector<Int>> out;
  Int theta = d.theta;
  if (theta == 1) {
    out.push_back({0});
    return out;
  }
  if (static_cast<Int>(d.edges.size()) != theta - 1) return out;
  std::vector<Int> ends;
  for (Int v = 0; v < theta; ++v) {
    size_t deg = d.neighbors(v).size();
    if (deg > 2) return out;
    if (deg == 1) ends.push_back(v);
    if (deg == 0) return out;
  }
  if (ends.size() != 2) return out;
  for (Int start : ends) {
    std::vector<Int> order = {start};
    Int prev = -1, cur = start;
    while (static_cast<Int>(order.size()) < theta) {
      Int next = -1;
      for (Int w : d.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<Int>(order.size()) == theta) out.push_back(order);
  }
  return out;
}

struct PathView {
  std::vector<UnityScalar> vertex;
  std::vector<UnityScalar> edge;  // edge[i] between positions i and i+1
};

PathView view_along(const DynkinDiagram& d, const std::vector<Int>& order) {
  PathView v;
  for (Int p : order) v.vertex.push_back(d.vertex[p]);
  for (size_t i = 0; i + 1 < order.size(); ++i) v.edge.push_back(*d.edge_label(order[i], order[i + 1]));
  return v;
}

// chain pattern with parameter Q over a prefix [0, len) of a path view
std::optional<std::set<Int>> chain_marks(const PathView& v, Int len, const UnityScalar& Q) {
  std::set<Int> marks;
  if (len == 1) {
    if (is_minus_one(v.vertex[0])) return std::set<Int>{1};
    if (v.vertex[0] == Q) return std::set<Int>{};
    return std::nullopt;
  }
  UnityScalar Qi = Q.inverse();
  for (Int i = 1; i < len; ++i) {
    const UnityScalar& e = v.edge[i - 1];
    if (e == Q)
      marks.insert(i + 1);
    else if (e != Qi)
      return std::nullopt;
  }
  if (is_minus_one(v.vertex[0]))
    marks.insert(1);
  else if (v.vertex[0] != v.edge[0].inverse())
    return std::nullopt;
  for (Int i = 2; i < len; ++i) {
    const UnityScalar& tl = v.edge[i - 2];
    const UnityScalar& tr = v.edge[i - 1];
    if (tl == tr) {
      if (v.vertex[i - 1] != tr.inverse()) return std::nullopt;
    } else {
      if (!is_minus_one(v.vertex[i - 1])) return std::nullopt;
      if (!(tl * tr).is_one()) return std::nullopt;
    }
  }
  if (marks.count(len)) {
    if (!is_minus_one(v.vertex[len - 1])) return std::nullopt;
  } else if (v.vertex[len - 1] != Q) {
    return std::nullopt;
  }
  return marks;
}

std::string param_str(const std::string& name, const UnityScalar& s, Int torsion) {
  Int ambient = lcm_int(torsion, s.torsion_order());
  std::string val = s.str(ambient);
  if (ambient != torsion && s.torsion_exp() != 0) val += "@" + std::to_string(ambient);
  return name + "=" + val;
}

std::string marks_str(const std::set<Int>& marks) {
  std::string s;
  for (Int m : marks) {
    if (!s.empty()) s += ",";
    s += std::to_string(m);
  }
  return "marks={" + s + "}";
}

struct MatchOut {
  std::vector<Int> relabeling;
  std::string params;
};

using Matcher =
    std::function<std::optional<MatchOut>(const BraidingMatrix&, const DynkinDiagram&)>;

// ---- chain families --------------------------------------------------------

std::optional<MatchOut> match_A(const BraidingMatrix& b, const DynkinDiagram& d) {
  for (const auto& order : path_orders(d)) {
    PathView v = view_along(d, order);
    Int theta = d.theta;
    if (theta == 1) {
      const UnityScalar& q = v.vertex[0];
      if (is_minus_one(q)) return MatchOut{order, "odd point"};
      if (order_not_in(q, {1, 2})) return MatchOut{order, param_str("q", q, b.torsion)};
      return std::nullopt;
    }
    UnityScalar Q = v.vertex[theta - 1].pow(2) * v.edge[theta - 2];
    if (!order_not_in(Q, {1, 2})) continue;
    auto marks = chain_marks(v, theta, Q);
    if (marks) return MatchOut{order, param_str("q", Q, b.torsion) + ", " + marks_str(*marks)};
  }
  return std::nullopt;
}

std::optional<MatchOut> match_B1(const BraidingMatrix& b, const DynkinDiagram& d) {
  if (d.theta != 2) return std::nullopt;
  for (const auto& order : path_orders(d)) {
    PathView v = view_along(d, order);
    const UnityScalar& q = v.vertex[0];
    const UnityScalar& zeta = v.vertex[1];
    if (!primitive_cube_root(zeta)) continue;
    if (q.is_one() || is_minus_one(q) || q == zeta || q == zeta.pow(2)) continue;
    if (v.edge[0] != q.inverse()) continue;
    return MatchOut{order, param_str("q", q, b.torsion) + ", " + param_str("zeta", zeta, b.torsion)};
  }
  return std::nullopt;
}

std::optional<MatchOut> match_tail_family(const BraidingMatrix& b, const DynkinDiagram& d,
                                          const std::function<std::optional<UnityScalar>(const UnityScalar&)>& tip_to_q,
                                          const std::function<UnityScalar(const UnityScalar&)>& chain_param,
                                          const std::function<UnityScalar(const UnityScalar&)>& glue_edge,
                                          const std::function<bool(const UnityScalar&)>& side_cond,
                                          const char* qname) {
  if (d.theta < 2) return std::nullopt;
  for (const auto& order : path_orders(d)) {
    PathView v = view_along(d, order);
    Int theta = d.theta;
    auto q = tip_to_q(v.vertex[theta - 1]);
    if (!q || !side_cond(*q)) continue;
    if (v.edge[theta - 2] != glue_edge(*q)) continue;
    auto marks = chain_marks(v, theta - 1, chain_param(*q));
    if (marks) return MatchOut{order, param_str(qname, *q, b.torsion) + ", " + marks_str(*marks)};
  }
  return std::nullopt;
}

std::optional<MatchOut> match_B2(const BraidingMatrix& b, const DynkinDiagram& d) {
  return match_tail_family(
      b, d, [](const UnityScalar& tip) { return std::optional<UnityScalar>(tip); },
      [](const UnityScalar& q) { return q.pow(2); }, [](const UnityScalar& q) { return q.pow(-2); },
      [](const UnityScalar& q) { return order_not_in(q, {1, 2}); }, "q");
}

std::optional<MatchOut> match_B3(const BraidingMatrix& b, const DynkinDiagram& d) {
  return match_tail_family(
      b, d,
      [](const UnityScalar& tip) {
        return primitive_cube_root(tip) ? std::optional<UnityScalar>(tip) : std::nullopt;
      },
      [](const UnityScalar& z) { return minus_one() * z.pow(2); },
      [](const UnityScalar& z) { return minus_one() * z; }, [](const UnityScalar&) { return true; },
      "zeta");
}

std::optional<MatchOut> match_C(const BraidingMatrix& b, const DynkinDiagram& d) {
  if (d.theta < 2) return std::nullopt;
  for (const auto& order : path_orders(d)) {
    PathView v = view_along(d, order);
    Int theta = d.theta;
    const UnityScalar& tip = v.vertex[theta - 1];
    if (!order_not_in(tip, {1, 2})) continue;  // q^4 != 1 means tip^2 != 1
    // candidates for q: chain edges carry q^{+-1}; for a single odd chain
    // vertex the parameter is only pinned through q^2 = tip
    std::vector<UnityScalar> cands;
    if (theta >= 3) {
      cands.push_back(v.edge[0]);
      cands.push_back(v.edge[0].inverse());
    } else if (!is_minus_one(v.vertex[0])) {
      cands.push_back(v.vertex[0]);
    } else {
      // tip = q^2 and glue = q^-2 suffice: existence of the square root
      if ((v.edge[0] * tip).is_one()) {
        auto marks = chain_marks(v, theta - 1, v.vertex[0]);  // {-1} chain
        if (marks)
          return MatchOut{order, std::string("q^2") + "=" + tip.str(lcm_int(b.torsion, tip.torsion_order())) +
                                     ", " + marks_str(*marks)};
      }
      continue;
    }
    for (const auto& q : cands) {
      if (q.pow(2) != tip) continue;
      if (v.edge[theta - 2] != q.pow(-2)) continue;
      if (!order_not_in(q, {1, 2, 4})) continue;
      auto marks = chain_marks(v, theta - 1, q);
      if (marks) return MatchOut{order, param_str("q", q, b.torsion) + ", " + marks_str(*marks)};
    }
  }
  return std::nullopt;
}

// ---- fork families ---------------------------------------------------------

std::optional<MatchOut> match_D1(const BraidingMatrix& b, const DynkinDiagram& d) {
  Int theta = d.theta;
  if (theta < 3) return std::nullopt;
  if (static_cast<Int>(d.edges.size()) != theta - 1) return std::nullopt;
  for (Int a = 0; a < theta; ++a)
    for (Int c = a + 1; c < theta; ++c) {
      if (d.adjacent(a, c)) continue;
      if (d.vertex[a] != d.vertex[c]) continue;
      if (d.neighbors(a).size() != 1 || d.neighbors(c).size() != 1) continue;
      Int j = d.neighbors(a)[0];
      if (d.neighbors(c)[0] != j) continue;
      UnityScalar q = d.vertex[a].inverse();
      if (!order_not_in(q, {1, 2})) continue;
      if (*d.edge_label(j, a) != q || *d.edge_label(j, c) != q) continue;
      // remaining vertices form a path ending at j
      std::vector<Int> rest;
      for (Int vtx = 0; vtx < theta; ++vtx)
        if (vtx != a && vtx != c) rest.push_back(vtx);
      DynkinDiagram sub;
      sub.theta = theta - 2;
      std::vector<Int> back(theta, -1);
      for (size_t k = 0; k < rest.size(); ++k) {
        back[rest[k]] = static_cast<Int>(k);
        sub.vertex.push_back(d.vertex[rest[k]]);
      }
      for (const auto& [e, label] : d.edges)
        if (back[e.first] >= 0 && back[e.second] >= 0)
          sub.edges[{std::min(back[e.first], back[e.second]), std::max(back[e.first], back[e.second])}] = label;
      for (const auto& order : path_orders(sub)) {
        if (rest[order[theta - 3]] != j) continue;
        PathView v = view_along(sub, order);
        auto marks = chain_marks(v, theta - 2, q.inverse());
        if (!marks) continue;
        std::vector<Int> relab;
        for (Int p : order) relab.push_back(rest[p]);
        relab.push_back(a);
        relab.push_back(c);
        return MatchOut{relab, param_str("q", q, b.torsion) + ", " + marks_str(*marks)};
      }
      if (theta == 3) {
        // chain part is the junction alone
        PathView v;
        v.vertex = {d.vertex[j]};
        auto marks = chain_marks(v, 1, q.inverse());
        if (marks) return MatchOut{{j, a, c}, param_str("q", q, b.torsion) + ", " + marks_str(*marks)};
      }
    }
  return std::nullopt;
}

std::optional<MatchOut> match_D2(const BraidingMatrix& b, const DynkinDiagram& d) {
  Int theta = d.theta;
  if (theta < 3) return std::nullopt;
  if (static_cast<Int>(d.edges.size()) != theta) return std::nullopt;  // path + triangle edge
  for (Int a = 0; a < theta; ++a)
    for (Int c = a + 1; c < theta; ++c) {
      if (!d.adjacent(a, c)) continue;
      if (!is_minus_one(d.vertex[a]) || !is_minus_one(d.vertex[c])) continue;
      auto na = d.neighbors(a), nc = d.neighbors(c);
      if (na.size() != 2 || nc.size() != 2) continue;
      Int j = -1;
      for (Int x : na)
        if (x != c && std::find(nc.begin(), nc.end(), x) != nc.end()) j = x;
      if (j < 0) continue;
      UnityScalar qinv = *d.edge_label(j, a);
      if (*d.edge_label(j, c) != qinv) continue;
      UnityScalar q = qinv.inverse();
      if (!order_not_in(q, {1, 2})) continue;
      if (*d.edge_label(a, c) != q.pow(2)) continue;
      std::vector<Int> rest;
      for (Int vtx = 0; vtx < theta; ++vtx)
        if (vtx != a && vtx != c) rest.push_back(vtx);
      if (theta == 3) {
        PathView v;
        v.vertex = {d.vertex[j]};
        auto marks = chain_marks(v, 1, q);
        if (marks) return MatchOut{{j, a, c}, param_str("q", q, b.torsion) + ", " + marks_str(*marks)};
        continue;
      }
      DynkinDiagram sub;
      sub.theta = theta - 2;
      std::vector<Int> back(theta, -1);
      for (size_t k = 0; k < rest.size(); ++k) {
        back[rest[k]] = static_cast<Int>(k);
        sub.vertex.push_back(d.vertex[rest[k]]);
      }
      for (const auto& [e, label] : d.edges)
        if (back[e.first] >= 0 && back[e.second] >= 0)
          sub.edges[{std::min(back[e.first], back[e.second]), std::max(back[e.first], back[e.second])}] = label;
      for (const auto& order : path_orders(sub)) {
        if (rest[order[theta - 3]] != j) continue;
        PathView v = view_along(sub, order);
        auto marks = chain_marks(v, theta - 2, q);
        if (!marks) continue;
        std::vector<Int> relab;
        for (Int p : order) relab.push_back(rest[p]);
        relab.push_back(a);
        relab.push_back(c);
        return MatchOut{relab, param_str("q", q, b.torsion) + ", " + marks_str(*marks)};
      }
    }
  return std::nullopt;
}

// ---- rank-3 and rank-4 exceptional displays --------------------------------

std::optional<MatchOut> match_D21_path(const BraidingMatrix& b, const DynkinDiagram& d) {
  if (d.theta != 3) return std::nullopt;
  for (const auto& order : path_orders(d)) {
    PathView v = view_along(d, order);
    if (!is_minus_one(v.vertex[1])) continue;
    const UnityScalar& q = v.vertex[0];
    const UnityScalar& r = v.vertex[2];
    if (q.is_one() || r.is_one()) continue;
    UnityScalar s = (q * r).inverse();
    if (s.is_one()) continue;
    if (v.edge[0] != q.inverse() || v.edge[1] != r.inverse()) continue;
    return MatchOut{order, param_str("q", q, b.torsion) + ", " + param_str("r", r, b.torsion) + ", " +
                               param_str("s", s, b.torsion)};
  }
  return std::nullopt;
}

std::optional<MatchOut> match_D21_triangle(const BraidingMatrix& b, const DynkinDiagram& d) {
  if (d.theta != 3 || d.edges.size() != 3) return std::nullopt;
  for (Int i = 0; i < 3; ++i)
    if (!is_minus_one(d.vertex[i])) return std::nullopt;
  UnityScalar q = *d.edge_label(0, 1), r = *d.edge_label(1, 2), s = *d.edge_label(0, 2);
  if (!(q * r * s).is_one()) return std::nullopt;
  if (q.is_one() || r.is_one() || s.is_one()) return std::nullopt;
  return MatchOut{{0, 1, 2}, param_str("q", q, b.torsion) + ", " + param_str("r", r, b.torsion) + ", " +
                                 param_str("s", s, b.torsion)};
}

bool fg_side_conditions(const UnityScalar& q) { return order_not_in(q, {1, 2, 3}); }

// path display given by label exponents of q: vertex[i] = sign_i * q^{ve[i]},
// edge[i] = q^{ee[i]} (sign via odd flag)
std::optional<MatchOut> match_exponent_path(const BraidingMatrix& b, const DynkinDiagram& d,
                                            const std::vector<Int>& ve, const std::vector<bool>& vminus,
                                            const std::vector<Int>& ee,
                                            const std::function<std::optional<UnityScalar>(const PathView&)>& derive) {
  if (d.theta != static_cast<Int>(ve.size())) return std::nullopt;
  for (const auto& order : path_orders(d)) {
    PathView v = view_along(d, order);
    auto q = derive(v);
    if (!q || !fg_side_conditions(*q)) continue;
    bool ok = true;
    for (size_t i = 0; i < ve.size() && ok; ++i) {
      UnityScalar want = q->pow(ve[i]);
      if (vminus[i]) want = want * minus_one();
      if (v.vertex[i] != want) ok = false;
    }
    for (size_t i = 0; i < ee.size() && ok; ++i)
      if (v.edge[i] != q->pow(ee[i])) ok = false;
    if (ok) return MatchOut{order, param_str("q", *q, b.torsion)};
  }
  return std::nullopt;
}

std::optional<MatchOut> match_perm_shape(const BraidingMatrix& b, const DynkinDiagram& d, Int theta,
                                         const std::vector<std::pair<Int, Int>>& adj,
                                         const std::function<std::optional<UnityScalar>(
                                             const std::function<UnityScalar(Int)>&,
                                             const std::function<UnityScalar(Int, Int)>&)>& check) {
  if (d.theta != theta) return std::nullopt;
  std::vector<Int> perm(theta);
  for (Int i = 0; i < theta; ++i) perm[i] = i;
  do {
    bool shape = static_cast<Int>(d.edges.size()) == static_cast<Int>(adj.size());
    for (const auto& [x, y] : adj)
      if (!d.adjacent(perm[x], perm[y])) shape = false;
    if (shape) {
      auto vtx = [&](Int i) { return d.vertex[perm[i]]; };
      auto edg = [&](Int i, Int j) { return *d.edge_label(perm[i], perm[j]); };
      auto q = check(vtx, edg);
      if (q) return MatchOut{perm, param_str("q", *q, b.torsion)};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

struct DisplayMatcher {
  const char* display;
  SuperFamily family;
  Matcher fn;
};

const std::vector<DisplayMatcher>& display_matchers() {
  static const std::vector<DisplayMatcher> table = [] {
    std::vector<DisplayMatcher> t;
    t.push_back({"A", SuperFamily::A, match_A});
    t.push_back({"B-1", SuperFamily::B, match_B1});
    t.push_back({"B-2", SuperFamily::B, match_B2});
    t.push_back({"B-3", SuperFamily::B, match_B3});
    t.push_back({"C", SuperFamily::C, match_C});
    t.push_back({"D-1", SuperFamily::D, match_D1});
    t.push_back({"D-2", SuperFamily::D, match_D2});
    t.push_back({"D21-1", SuperFamily::D21, match_D21_path});
    t.push_back({"D21-2", SuperFamily::D21, match_D21_triangle});
    auto vderive = [](Int pos, Int exp, bool neg) {
      return [pos, exp, neg](const PathView& v) -> std::optional<UnityScalar> {
        UnityScalar s = v.vertex[pos];
        if (neg) s = s * minus_one();
        if (exp == 1) return s;
        if (exp == -1) return s.inverse();
        return std::nullopt;
      };
    };
    auto ederive = [](Int pos, Int exp) {
      return [pos, exp](const PathView& v) -> std::optional<UnityScalar> {
        return exp == 1 ? v.edge[pos] : v.edge[pos].inverse();
      };
    };
    t.push_back({"F4-1", SuperFamily::F4, [vderive](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_exponent_path(b, d, {0, 1, 2, 2}, {true, false, false, false},
                                              {-1, -2, -2}, vderive(1, 1, false));
                 }});
    t.push_back({"F4-2", SuperFamily::F4, [ederive](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_exponent_path(b, d, {0, 0, 2, 2}, {true, true, false, false},
                                              {1, -2, -2}, ederive(0, 1));
                 }});
    t.push_back({"F4-3", SuperFamily::F4, [](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_perm_shape(
                       b, d, 4, {{0, 1}, {0, 3}, {1, 3}, {1, 2}},
                       [](const auto& v, const auto& e) -> std::optional<UnityScalar> {
                         UnityScalar q = v(3);
                         if (!fg_side_conditions(q)) return std::nullopt;
                         if (!is_minus_one(v(0)) || !is_minus_one(v(1))) return std::nullopt;
                         if (v(2) != q.pow(2)) return std::nullopt;
                         if (e(0, 1) != q.pow(2) || e(0, 3) != q.inverse() || e(1, 3) != q.inverse() ||
                             e(1, 2) != q.pow(-2))
                           return std::nullopt;
                         return q;
                       });
                 }});
    t.push_back({"F4-4", SuperFamily::F4, [](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_perm_shape(
                       b, d, 4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}},
                       [](const auto& v, const auto& e) -> std::optional<UnityScalar> {
                         UnityScalar q = e(1, 3);
                         if (!fg_side_conditions(q)) return std::nullopt;
                         if (!is_minus_one(v(1)) || !is_minus_one(v(2)) || !is_minus_one(v(3)))
                           return std::nullopt;
                         if (v(0) != q.pow(2)) return std::nullopt;
                         if (e(0, 1) != q.pow(-2) || e(1, 2) != q.pow(2) || e(2, 3) != q.pow(-3))
                           return std::nullopt;
                         return q;
                       });
                 }});
    t.push_back({"F4-5", SuperFamily::F4, [vderive](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_exponent_path(b, d, {2, 1, 0, -3}, {false, false, true, false},
                                              {-2, -1, 3}, vderive(1, 1, false));
                 }});
    t.push_back({"F4-6", SuperFamily::F4, [](const BraidingMatrix& b, const DynkinDiagram& d) {
                   auto derive = [](const PathView& v) -> std::optional<UnityScalar> {
                     return v.edge[2] * v.vertex[0].inverse();  // q^3 / q^2
                   };
                   return match_exponent_path(b, d, {2, 2, 0, -3}, {false, false, true, false},
                                              {-2, -2, 3}, derive);
                 }});
    t.push_back({"G3-1", SuperFamily::G3, [vderive](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_exponent_path(b, d, {0, 1, 3}, {true, false, false}, {-1, -3},
                                              vderive(1, 1, false));
                 }});
    t.push_back({"G3-2", SuperFamily::G3, [ederive](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_exponent_path(b, d, {0, 0, 3}, {true, true, false}, {1, -3},
                                              ederive(0, 1));
                 }});
    t.push_back({"G3-3", SuperFamily::G3, [](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_perm_shape(
                       b, d, 3, {{0, 1}, {1, 2}, {0, 2}},
                       [](const auto& v, const auto& e) -> std::optional<UnityScalar> {
                         UnityScalar q = v(0);
                         if (!fg_side_conditions(q)) return std::nullopt;
                         if (!is_minus_one(v(1)) || !is_minus_one(v(2))) return std::nullopt;
                         if (e(0, 1) != q.inverse() || e(1, 2) != q.pow(3) || e(0, 2) != q.pow(-2))
                           return std::nullopt;
                         return q;
                       });
                 }});
    t.push_back({"G3-4", SuperFamily::G3, [vderive](const BraidingMatrix& b, const DynkinDiagram& d) {
                   return match_exponent_path(b, d, {-1, 0, 3}, {true, true, false}, {2, -3},
                                              vderive(0, -1, true));
                 }});
    return t;
  }();
  return table;
}

}  // namespace

std::optional<SimpleChainDescriptor> detect_simple_chain(const BraidingMatrix& b) {
  DynkinDiagram d = dynkin_of(b);
  // path-shaped in the given order: edges exactly {i, i+1}
  if (static_cast<Int>(d.edges.size()) != b.theta - 1) return std::nullopt;
  for (Int i = 0; i + 1 < b.theta; ++i)
    if (!d.adjacent(i, i + 1)) return std::nullopt;
  SimpleChainDescriptor out;
  out.length = b.theta;
  if (b.theta == 1) {
    const UnityScalar& q = d.vertex[0];
    if (is_minus_one(q)) {
      out.marked = {1};
      return out;
    }
    if (q.is_one()) return std::nullopt;
    out.q = q;
    return out;
  }
  std::vector<Int> order(b.theta);
  for (Int i = 0; i < b.theta; ++i) order[i] = i;
  PathView v = view_along(d, order);
  UnityScalar Q = v.vertex[b.theta - 1].pow(2) * v.edge[b.theta - 2];
  auto marks = chain_marks(v, b.theta, Q);
  if (!marks) return std::nullopt;
  out.q = Q;
  out.marked = *marks;
  return out;
}

std::string SuperTypeDescriptor::str() const {
  std::string s = family_name(family) + "(" + std::to_string(theta) + "; " + params + ") via diagram " + display;
  if (all_displays.size() > 1) {
    s += " [also";
    for (const auto& a : all_displays)
      if (a != display) s += " " + a;
    s += "]";
  }
  return s;
}

std::optional<SuperTypeDescriptor> match_family(const BraidingMatrix& b) {
  DynkinDiagram d = dynkin_of(b);
  std::optional<SuperTypeDescriptor> out;
  for (const auto& m : display_matchers()) {
    auto r = m.fn(b, d);
    if (!r) continue;
    if (!out) {
      SuperTypeDescriptor desc;
      desc.family = m.family;
      desc.theta = b.theta;
      desc.display = m.display;
      desc.relabeling = r->relabeling;
      desc.params = r->params;
      out = desc;
    }
    out->all_displays.push_back(m.display);
  }
  return out;
}

BraidingMatrix restrict_to(const BraidingMatrix& b, const std::vector<Int>& vertices) {
  BraidingMatrix sub;
  sub.theta = static_cast<Int>(vertices.size());
  sub.torsion = b.torsion;
  sub.generics = b.generics;
  sub.constraints = b.constraints;
  sub.entries.assign(sub.theta * sub.theta, UnityScalar());
  for (Int i = 0; i < sub.theta; ++i)
    for (Int j = 0; j < sub.theta; ++j) sub.q(i, j) = b.q(vertices[i], vertices[j]);
  if (b.parity) {
    std::vector<int> p;
    for (Int v : vertices) p.push_back((*b.parity)[v]);
    sub.parity = p;
  }
  return sub;
}

ParityFunction parity_from_diagonal(const BraidingMatrix& b, const std::vector<Int>& relabeling) {
  ParityFunction p;
  for (Int k = 0; k < b.theta; ++k)
    p.sign.push_back(is_minus_one(b.q(relabeling[k], relabeling[k])) ? -1 : 1);
  return p;
}

bool root_sets_match(const GroupoidAtlas& atlas, const FamilyAtlas& family) {
  if (!atlas.complete()) return false;
  Int theta = atlas.seed.theta;
  std::set<std::vector<IntVec>> weyl_sets;
  for (size_t o = 0; o < atlas.objects.size(); ++o) weyl_sets.insert(positive_roots(atlas, static_cast<Int>(o)));
  auto family_sets = family.distinct_root_sets();
  if (weyl_sets.size() != family_sets.size()) return false;
  std::vector<Int> perm(theta);
  for (Int i = 0; i < theta; ++i) perm[i] = i;
  do {
    std::set<std::vector<IntVec>> mapped;
    for (const auto& S : family_sets) {
      std::set<IntVec> ms;
      for (const auto& v : S) {
        IntVec w(theta);
        for (Int t = 0; t < theta; ++t) w[perm[t]] = v[t];
        ms.insert(w);
      }
      mapped.insert(std::vector<IntVec>(ms.begin(), ms.end()));
    }
    if (mapped == weyl_sets) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool ClassifyResult::all_cross_checks_ok() const {
  for (const auto& c : components)
    if (c.cross_check_ran && !c.cross_check_ok) return false;
  return true;
}

std::string ClassifyResult::report() const {
  std::ostringstream out;
  for (const auto& c : components) {
    out << "component {";
    for (size_t i = 0; i < c.vertices.size(); ++i) {
      if (i) out << ",";
      out << (c.vertices[i] + 1);
    }
    out << "} : ";
    if (c.descriptor)
      out << c.descriptor->str();
    else
      out << "not super type";
    if (c.cross_check_ran && !c.cross_check_ok) out << " [internal error: " << c.cross_check_msg << "]";
    out << "\n";
  }
  return out.str();
}

ClassifyResult classify_braiding(const BraidingMatrix& b, bool cross_validate, Int object_cap, Int root_cap) {
  ClassifyResult result;
  for (const auto& comp : connected_components(b)) {
    ClassifyComponent c;
    c.vertices = comp;
    BraidingMatrix sub = restrict_to(b, comp);
    c.descriptor = match_family(sub);
    if (c.descriptor && cross_validate) {
      c.cross_check_ran = true;
      try {
        GroupoidAtlas atlas = explore(sub, object_cap, root_cap);
        if (!atlas.complete()) {
          c.cross_check_ok = false;
          c.cross_check_msg = "exploration incomplete";
        } else {
          auto rep = verify_root_system(atlas);
          if (!rep.ok()) {
            c.cross_check_ok = false;
            c.cross_check_msg = "root system axioms: " + rep.violations.front();
          } else {
            SuperFamily f = c.descriptor->family;
            FamilyAtlas fam =
                (f == SuperFamily::D21 || f == SuperFamily::F4 || f == SuperFamily::G3)
                    ? family_atlas_exceptional(f, object_cap)
                    : family_atlas(f, sub.theta, parity_from_diagonal(sub, c.descriptor->relabeling),
                                   object_cap);
            if (!root_sets_match(atlas, fam)) {
              c.cross_check_ok = false;
              c.cross_check_msg = "groupoid roots differ from the direct construction";
            }
          }
        }
      } catch (const Error& e) {
        c.cross_check_ok = false;
        c.cross_check_msg = e.what();
      }
    }
    result.components.push_back(std::move(c));
  }
  return result;
}

}  // namespace nichols

#include "nichols/braiding.hpp"

#include <algorithm>
#include <sstream>

namespace nichols {

UnityScalar BraidingMatrix::chi(const IntVec& u, const IntVec& v) const {
  UnityScalar r;
  for (Int i = 0; i < theta; ++i) {
    if (u[i] == 0) continue;
    for (Int j = 0; j < theta; ++j) {
      if (v[j] == 0) continue;
      r = r * q(i, j).pow(u[i] * v[j]);
    }
  }
  return r;
}

void BraidingMatrix::check_constraints(const SpecializationMap& m) const {
  for (const auto& c : constraints) {
    if (specialize(c.monomial, m).is_one())
      throw Error(ErrKind::Arg, "specialization violates constraint " + c.monomial.str(torsion) + " != 1");
  }
}

// -------------------------------------------------------------------- parsing

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

BraidingMatrix BraidingMatrix::parse(const std::string& text) {
  BraidingMatrix b;
  std::map<Int, std::vector<std::string>> rows;
  std::vector<std::string> constraint_toks;
  std::istringstream in(text);
  std::string line;
  bool saw_theta = false;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrKind::Parse, "expected 'key = value': " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "torsion") {
      b.torsion = std::stoll(val);
      if (b.torsion < 1) throw Error(ErrKind::Parse, "torsion must be positive");
    } else if (key == "generics") {
      b.generics = split_ws(val);
    } else if (key == "theta") {
      b.theta = std::stoll(val);
      saw_theta = true;
    } else if (key == "constraints") {
      constraint_toks = split_ws(val);
    } else if (key.rfind("row ", 0) == 0) {
      Int idx = std::stoll(key.substr(4));
      rows[idx] = split_ws(val);
    } else if (key == "parity") {
      std::vector<int> p;
      for (const auto& t : split_ws(val)) {
        if (t != "0" && t != "1") throw Error(ErrKind::Parse, "parity entries must be 0 or 1");
        p.push_back(t == "1" ? 1 : 0);
      }
      b.parity = p;
    } else {
      throw Error(ErrKind::Parse, "unknown key '" + key + "'");
    }
  }
  if (!saw_theta || b.theta < 1) throw Error(ErrKind::Parse, "missing or invalid theta");
  b.entries.assign(b.theta * b.theta, UnityScalar());
  for (Int i = 1; i <= b.theta; ++i) {
    auto it = rows.find(i);
    if (it == rows.end()) throw Error(ErrKind::Parse, "missing row " + std::to_string(i));
    if (static_cast<Int>(it->second.size()) != b.theta)
      throw Error(ErrKind::Parse, "row " + std::to_string(i) + " needs " + std::to_string(b.theta) + " entries");
    for (Int j = 0; j < b.theta; ++j) b.q(i - 1, j) = UnityScalar::parse(it->second[j], b.torsion);
  }
  if (b.parity && static_cast<Int>(b.parity->size()) != b.theta)
    throw Error(ErrKind::Parse, "parity needs theta entries");
  for (const auto& t : constraint_toks) {
    size_t neq = t.find("!=");
    if (neq == std::string::npos || t.substr(neq + 2) != "1")
      throw Error(ErrKind::Parse, "constraint must look like MONO!=1, got '" + t + "'");
    b.constraints.push_back({UnityScalar::parse(t.substr(0, neq), b.torsion)});
  }
  // declared generics must cover everything that occurs
  for (const auto& s : b.entries)
    for (const auto& [name, e] : s.generic_exps())
      if (std::find(b.generics.begin(), b.generics.end(), name) == b.generics.end())
        throw Error(ErrKind::Parse, "generic '" + name + "' used but not declared");
  return b;
}

std::string BraidingMatrix::serialize() const {
  std::ostringstream out;
  out << "torsion = " << torsion << "\n";
  if (!generics.empty()) {
    out << "generics =";
    for (const auto& g : generics) out << ' ' << g;
    out << "\n";
  }
  out << "theta = " << theta << "\n";
  if (!constraints.empty()) {
    out << "constraints =";
    for (const auto& c : constraints) out << ' ' << c.monomial.str(torsion) << "!=1";
    out << "\n";
  }
  for (Int i = 0; i < theta; ++i) {
    out << "row " << (i + 1) << " =";
    for (Int j = 0; j < theta; ++j) out << ' ' << q(i, j).str(torsion);
    out << "\n";
  }
  if (parity) {
    out << "parity =";
    for (int k : *parity) out << ' ' << k;
    out << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------------- diagrams

DynkinDiagram dynkin_of(const BraidingMatrix& b) {
  DynkinDiagram d;
  d.theta = b.theta;
  for (Int i = 0; i < b.theta; ++i) d.vertex.push_back(b.q(i, i));
  for (Int i = 0; i < b.theta; ++i)
    for (Int j = i + 1; j < b.theta; ++j) {
      UnityScalar e = b.edge(i, j);
      if (!e.is_one()) d.edges[{i, j}] = e;
    }
  return d;
}

bool DynkinDiagram::adjacent(Int i, Int j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) > 0;
}

std::optional<UnityScalar> DynkinDiagram::edge_label(Int i, Int j) const {
  if (i > j) std::swap(i, j);
  auto it = edges.find({i, j});
  if (it == edges.end()) return std::nullopt;
  return it->second;
}

std::vector<Int> DynkinDiagram::neighbors(Int i) const {
  std::vector<Int> out;
  for (Int j = 0; j < theta; ++j)
    if (j != i && adjacent(i, j)) out.push_back(j);
  return out;
}

namespace {

bool match_permuted(const DynkinDiagram& a, const DynkinDiagram& b, std::vector<Int>& perm,
                    std::vector<bool>& used, Int pos) {
  if (pos == a.theta) return true;
  for (Int cand = 0; cand < a.theta; ++cand) {
    if (used[cand]) continue;
    if (!(a.vertex[pos] == b.vertex[cand])) continue;
    bool ok = true;
    for (Int prev = 0; prev < pos && ok; ++prev) {
      auto ea = a.edge_label(prev, pos);
      auto eb = b.edge_label(perm[prev], cand);
      if (ea.has_value() != eb.has_value()) ok = false;
      else if (ea && !(*ea == *eb)) ok = false;
    }
    if (!ok) continue;
    perm[pos] = cand;
    used[cand] = true;
    if (match_permuted(a, b, perm, used, pos + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b, bool up_to_relabeling) {
  if (a.theta != b.theta) return false;
  DynkinDiagram da = dynkin_of(a), db = dynkin_of(b);
  if (da == db) return true;
  if (!up_to_relabeling) return false;
  std::vector<Int> perm(a.theta, -1);
  std::vector<bool> used(a.theta, false);
  return match_permuted(da, db, perm, used, 0);
}

std::vector<std::vector<Int>> connected_components(const BraidingMatrix& b) {
  std::vector<Int> comp(b.theta, -1);
  Int ncomp = 0;
  for (Int s = 0; s < b.theta; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Int> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      Int v = stack.back();
      stack.pop_back();
      for (Int w = 0; w < b.theta; ++w)
        if (comp[w] < 0 && !b.edge(v, w).is_one()) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<Int>> out(ncomp);
  for (Int v = 0; v < b.theta; ++v) out[comp[v]].push_back(v);
  return out;
}

BraidingMatrix super_sign_transform(const BraidingMatrix& b, const std::vector<int>& parity) {
  if (static_cast<Int>(parity.size()) != b.theta) throw Error(ErrKind::Arg, "parity length mismatch");
  BraidingMatrix r = b;
  r.torsion = lcm_int(b.torsion, 2);
  for (Int i = 0; i < b.theta; ++i)
    if (parity[i] & 1) r.q(i, i) = r.q(i, i) * minus_one();
  return r;
}

std::pair<BraidingMatrix, std::vector<int>> braiding_from_yd_datum(const YDDatum& d) {
  size_t theta = d.elements.size();
  if (d.characters.size() != theta || d.parities.size() != theta)
    throw Error(ErrKind::Arg, "datum arity mismatch");
  Int L = 1;
  for (Int m : d.invariant_factors) {
    if (m < 1) throw Error(ErrKind::Arg, "invariant factors must be positive");
    L = lcm_int(L, m);
  }
  BraidingMatrix b;
  b.theta = static_cast<Int>(theta);
  b.torsion = L;
  b.entries.assign(theta * theta, UnityScalar());
  for (size_t i = 0; i < theta; ++i)
    for (size_t j = 0; j < theta; ++j) {
      Int e = 0;
      for (size_t t = 0; t < d.invariant_factors.size(); ++t)
        e += mod_pos(d.elements[i][t] * d.characters[j][t], d.invariant_factors[t]) * (L / d.invariant_factors[t]);
      b.q(i, j) = UnityScalar::root_of_unity(L, e);
    }
  b.parity = d.parities;
  return {b, d.parities};
}

std::string dynkin_dot(const BraidingMatrix& b) {
  DynkinDiagram d = dynkin_of(b);
  std::ostringstream out;
  out << "graph dynkin {\n  node [shape=circle];\n";
  for (Int i = 0; i < d.theta; ++i)
    out << "  v" << (i + 1) << " [label=\"" << d.vertex[i].str(b.torsion) << "\"];\n";
  for (const auto& [e, label] : d.edges)
    out << "  v" << (e.first + 1) << " -- v" << (e.second + 1) << " [label=\"" << label.str(b.torsion)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace nichols

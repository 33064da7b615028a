#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/scalars.hpp"

namespace nichols {

/// Non-degeneracy condition declared with a matrix: monomial != 1.
struct ScalarConstraint {
  UnityScalar monomial;
};

/// Braiding matrix of diagonal type: c(x_i (x) x_j) = q_ij x_j (x) x_i.
struct BraidingMatrix {
  Int theta = 0;
  Int torsion = 1;                      // ambient order for z-literals
  std::vector<std::string> generics;    // declared generic parameter names
  std::vector<UnityScalar> entries;     // theta*theta, row major
  std::vector<ScalarConstraint> constraints;
  std::optional<std::vector<int>> parity;  // 0/1 per vertex when declared

  const UnityScalar& q(Int i, Int j) const { return entries[i * theta + j]; }
  UnityScalar& q(Int i, Int j) { return entries[i * theta + j]; }
  UnityScalar edge(Int i, Int j) const { return q(i, j) * q(j, i); }

  /// The bilinear form chi on Z^theta with chi(e_i, e_j) = q_ij.
  UnityScalar chi(const IntVec& u, const IntVec& v) const;

  bool has_generics() const { return !generics.empty(); }
  void check_constraints(const SpecializationMap& m) const;  // throws on violation

  static BraidingMatrix parse(const std::string& text);
  std::string serialize() const;
};

struct DynkinDiagram {
  Int theta = 0;
  std::vector<UnityScalar> vertex;                  // q_ii
  std::map<std::pair<Int, Int>, UnityScalar> edges; // {i<j} -> q_ij q_ji != 1

  bool operator==(const DynkinDiagram& o) const { return theta == o.theta && vertex == o.vertex && edges == o.edges; }
  bool adjacent(Int i, Int j) const;
  std::optional<UnityScalar> edge_label(Int i, Int j) const;
  std::vector<Int> neighbors(Int i) const;
};

DynkinDiagram dynkin_of(const BraidingMatrix& b);

/// Twist equivalence = equality of generalized Dynkin diagrams, optionally up
/// to a vertex relabeling (backtracking match; theta stays desk-sized).
bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b, bool up_to_relabeling = false);

std::vector<std::vector<Int>> connected_components(const BraidingMatrix& b);

/// Diagonal sign twist: q_ii -> (-1)^{k_i} q_ii, off-diagonal untouched.
BraidingMatrix super_sign_transform(const BraidingMatrix& b, const std::vector<int>& parity);

/// Yetter-Drinfeld datum over a finite abelian group in invariant factors.
struct YDDatum {
  std::vector<Int> invariant_factors;            // m_1, ..., m_r
  std::vector<IntVec> elements;                  // g_j as exponent vectors
  std::vector<IntVec> characters;                // chi_j as exponent vectors
  std::vector<int> parities;                     // k_j in {0,1}
};

/// q_ij = chi_j(g_i) paired through the invariant factors; parity passthrough.
std::pair<BraidingMatrix, std::vector<int>> braiding_from_yd_datum(const YDDatum& d);

std::string dynkin_dot(const BraidingMatrix& b);

}  // namespace nichols

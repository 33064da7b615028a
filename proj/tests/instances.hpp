#pragma once

// Builders for the classified diagram families, used across the test suites.
// Edges are split as q_ij = label, q_ji = 1.

#include <set>

#include "nichols/braiding.hpp"

namespace nichols::testing {

inline BraidingMatrix empty_matrix(Int theta, Int torsion) {
  BraidingMatrix b;
  b.theta = theta;
  b.torsion = torsion;
  b.entries.assign(theta * theta, UnityScalar());
  return b;
}

inline void set_edge(BraidingMatrix& b, Int i, Int j, const UnityScalar& label) {
  b.q(i, j) = label;
  b.q(j, i) = UnityScalar();
}

// Simple chain with parameter Q and marked subset (1-based): vertex 1 is odd
// iff 1 is marked; the edge left of vertex i carries Q iff i is marked.
inline BraidingMatrix simple_chain(Int theta, const UnityScalar& Q, const std::set<Int>& marks, Int torsion) {
  BraidingMatrix b = empty_matrix(theta, torsion);
  std::vector<UnityScalar> edge(theta);  // edge[i] between vertices i, i+1 (1-based left index)
  for (Int i = 1; i < theta; ++i) edge[i] = marks.count(i + 1) ? Q : Q.inverse();
  for (Int i = 1; i < theta; ++i) set_edge(b, i - 1, i, edge[i]);
  // vertex labels
  if (theta == 1) {
    b.q(0, 0) = marks.count(1) ? minus_one() : Q;
    return b;
  }
  b.q(0, 0) = marks.count(1) ? minus_one() : edge[1].inverse();
  for (Int i = 2; i < theta; ++i)
    b.q(i - 1, i - 1) = (edge[i - 1] == edge[i]) ? edge[i].inverse() : minus_one();
  b.q(theta - 1, theta - 1) = marks.count(theta) ? minus_one() : Q;
  return b;
}

// Chain plus one extra vertex glued at the right end.
inline BraidingMatrix chain_plus_vertex(Int theta, const UnityScalar& chain_q, const std::set<Int>& marks,
                                        const UnityScalar& glue_edge, const UnityScalar& tip, Int torsion) {
  BraidingMatrix chain = simple_chain(theta - 1, chain_q, marks, torsion);
  BraidingMatrix b = empty_matrix(theta, torsion);
  for (Int i = 0; i < theta - 1; ++i)
    for (Int j = 0; j < theta - 1; ++j) b.q(i, j) = chain.q(i, j);
  set_edge(b, theta - 2, theta - 1, glue_edge);
  b.q(theta - 1, theta - 1) = tip;
  return b;
}

inline BraidingMatrix instance_A(Int theta, const UnityScalar& q, const std::set<Int>& marks, Int torsion) {
  return simple_chain(theta, q, marks, torsion);
}

inline BraidingMatrix instance_B1(const UnityScalar& q, const UnityScalar& zeta, Int torsion) {
  BraidingMatrix b = empty_matrix(2, torsion);
  b.q(0, 0) = q;
  b.q(1, 1) = zeta;
  set_edge(b, 0, 1, q.inverse());
  return b;
}

inline BraidingMatrix instance_B2(Int theta, const UnityScalar& q, const std::set<Int>& marks, Int torsion) {
  return chain_plus_vertex(theta, q.pow(2), marks, q.pow(-2), q, torsion);
}

inline BraidingMatrix instance_B3(Int theta, const UnityScalar& zeta, const std::set<Int>& marks, Int torsion) {
  UnityScalar chain_q = minus_one() * zeta.pow(2);
  return chain_plus_vertex(theta, chain_q, marks, minus_one() * zeta, zeta, torsion);
}

inline BraidingMatrix instance_C(Int theta, const UnityScalar& q, const std::set<Int>& marks, Int torsion) {
  return chain_plus_vertex(theta, q, marks, q.pow(-2), q.pow(2), torsion);
}

inline BraidingMatrix instance_D1(Int theta, const UnityScalar& q, const std::set<Int>& marks, Int torsion) {
  BraidingMatrix chain = simple_chain(theta - 2, q.inverse(), marks, torsion);
  BraidingMatrix b = empty_matrix(theta, torsion);
  for (Int i = 0; i < theta - 2; ++i)
    for (Int j = 0; j < theta - 2; ++j) b.q(i, j) = chain.q(i, j);
  b.q(theta - 2, theta - 2) = q.inverse();
  b.q(theta - 1, theta - 1) = q.inverse();
  set_edge(b, theta - 3, theta - 2, q);
  set_edge(b, theta - 3, theta - 1, q);
  return b;
}

inline BraidingMatrix instance_D2(Int theta, const UnityScalar& q, const std::set<Int>& marks, Int torsion) {
  BraidingMatrix chain = simple_chain(theta - 2, q, marks, torsion);
  BraidingMatrix b = empty_matrix(theta, torsion);
  for (Int i = 0; i < theta - 2; ++i)
    for (Int j = 0; j < theta - 2; ++j) b.q(i, j) = chain.q(i, j);
  b.q(theta - 2, theta - 2) = minus_one();
  b.q(theta - 1, theta - 1) = minus_one();
  set_edge(b, theta - 3, theta - 2, q.inverse());
  set_edge(b, theta - 3, theta - 1, q.inverse());
  set_edge(b, theta - 2, theta - 1, q.pow(2));
  return b;
}

inline BraidingMatrix instance_D21_path(const UnityScalar& q, const UnityScalar& r, Int torsion) {
  BraidingMatrix b = empty_matrix(3, torsion);
  b.q(0, 0) = q;
  b.q(1, 1) = minus_one();
  b.q(2, 2) = r;
  set_edge(b, 0, 1, q.inverse());
  set_edge(b, 1, 2, r.inverse());
  return b;
}

inline BraidingMatrix instance_D21_triangle(const UnityScalar& q, const UnityScalar& r, const UnityScalar& s,
                                            Int torsion) {
  BraidingMatrix b = empty_matrix(3, torsion);
  for (Int i = 0; i < 3; ++i) b.q(i, i) = minus_one();
  set_edge(b, 0, 1, q);
  set_edge(b, 1, 2, r);
  set_edge(b, 0, 2, s);
  return b;
}

inline BraidingMatrix path_instance(const std::vector<UnityScalar>& vertices,
                                    const std::vector<UnityScalar>& edges, Int torsion) {
  Int theta = static_cast<Int>(vertices.size());
  BraidingMatrix b = empty_matrix(theta, torsion);
  for (Int i = 0; i < theta; ++i) b.q(i, i) = vertices[i];
  for (Int i = 0; i + 1 < theta; ++i) set_edge(b, i, i + 1, edges[i]);
  return b;
}

inline BraidingMatrix instance_F4(int display, const UnityScalar& q, Int torsion) {
  UnityScalar m1 = minus_one();
  switch (display) {
    case 1:
      return path_instance({m1, q, q.pow(2), q.pow(2)}, {q.inverse(), q.pow(-2), q.pow(-2)}, torsion);
    case 2:
      return path_instance({m1, m1, q.pow(2), q.pow(2)}, {q, q.pow(-2), q.pow(-2)}, torsion);
    case 3: {
      BraidingMatrix b = empty_matrix(4, torsion);
      b.q(0, 0) = m1;
      b.q(1, 1) = m1;
      b.q(2, 2) = q.pow(2);
      b.q(3, 3) = q;
      set_edge(b, 0, 1, q.pow(2));
      set_edge(b, 0, 3, q.inverse());
      set_edge(b, 1, 3, q.inverse());
      set_edge(b, 1, 2, q.pow(-2));
      return b;
    }
    case 4: {
      BraidingMatrix b = empty_matrix(4, torsion);
      b.q(0, 0) = q.pow(2);
      b.q(1, 1) = m1;
      b.q(2, 2) = m1;
      b.q(3, 3) = m1;
      set_edge(b, 0, 1, q.pow(-2));
      set_edge(b, 1, 2, q.pow(2));
      set_edge(b, 2, 3, q.pow(-3));
      set_edge(b, 1, 3, q);
      return b;
    }
    case 5:
      return path_instance({q.pow(2), q, m1, q.pow(-3)}, {q.pow(-2), q.inverse(), q.pow(3)}, torsion);
    case 6:
      return path_instance({q.pow(2), q.pow(2), m1, q.pow(-3)}, {q.pow(-2), q.pow(-2), q.pow(3)}, torsion);
  }
  throw Error(ErrKind::Arg, "F4 display 1..6");
}

inline BraidingMatrix instance_G3(int display, const UnityScalar& q, Int torsion) {
  UnityScalar m1 = minus_one();
  switch (display) {
    case 1:
      return path_instance({m1, q, q.pow(3)}, {q.inverse(), q.pow(-3)}, torsion);
    case 2:
      return path_instance({m1, m1, q.pow(3)}, {q, q.pow(-3)}, torsion);
    case 3: {
      BraidingMatrix b = empty_matrix(3, torsion);
      b.q(0, 0) = q;
      b.q(1, 1) = m1;
      b.q(2, 2) = m1;
      set_edge(b, 0, 1, q.inverse());
      set_edge(b, 1, 2, q.pow(3));
      set_edge(b, 0, 2, q.pow(-2));
      return b;
    }
    case 4:
      return path_instance({m1 * q.inverse(), m1, q.pow(3)}, {q.pow(2), q.pow(-3)}, torsion);
  }
  throw Error(ErrKind::Arg, "G3 display 1..4");
}

}  // namespace nichols::testing

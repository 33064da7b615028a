#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"

namespace nichols {

/// One object of the Weyl groupoid: the q-matrix at an ordered basis of
/// Z^theta, the basis itself in seed coordinates, and an optional parity.
struct GroupoidObject {
  std::vector<UnityScalar> q;        // theta*theta, row major
  std::vector<IntVec> base;          // base[j] = f_j in seed coordinates
  std::optional<std::vector<int>> parity;

  const UnityScalar& at(Int theta, Int i, Int j) const { return q[i * theta + j]; }
};

struct Morphism {
  Int source;
  Int index;   // reflected vertex, 0-based
  Int target;
};

enum class AtlasStatus { Complete, ObjectCapExceeded, RootCapExceeded, ReflectionUndefined };

struct GroupoidAtlas {
  BraidingMatrix seed;
  std::vector<GroupoidObject> objects;   // [0] is the seed object
  std::vector<Morphism> morphisms;       // one per (object, index), source-major order
  AtlasStatus status = AtlasStatus::Complete;
  Int failed_object = -1;  // for ReflectionUndefined / caps
  Int failed_index = -1;
  std::vector<std::vector<IntVec>> roots;  // full root sets per object, sorted

  bool complete() const { return status == AtlasStatus::Complete; }
  Int reflection_target(Int obj, Int i) const;
};

/// a_ij at an object, from the q-matrix: the least n with
/// (n+1)_{q_ii} = 0 or q_ii^n q_ij q_ji = 1, negated; empty if none <= cap.
std::optional<Int> cartan_entry(const GroupoidObject& obj, Int theta, Int i, Int j, Int cap);
std::optional<Int> cartan_entry(const BraidingMatrix& b, Int i, Int j);  // seed object, default cap

/// Reflection of an object at vertex i; q-matrix recomputed bilinearly from
/// the seed, parity pulled back along the new basis. Throws on undefined
/// Cartan entries.
GroupoidObject reflect(const BraidingMatrix& seed, const GroupoidObject& obj, Int i, Int cartan_cap);

constexpr Int kDefaultObjectCap = 10000;
constexpr Int kDefaultRootCap = 10000;

/// Breadth-first closure of the seed object under all defined reflections,
/// objects deduplicated by exact q-matrix equality, followed by root
/// propagation to a fixpoint. Cap breaches land in the status, never throw.
GroupoidAtlas explore(const BraidingMatrix& seed, Int object_cap = kDefaultObjectCap,
                      Int root_cap = kDefaultRootCap);

/// Positive half of the root set of one object. Requires a complete atlas.
std::vector<IntVec> positive_roots(const GroupoidAtlas& atlas, Int obj);

/// -max{ k : alpha_i + k*alpha_j in Delta }, on a positive root set.
Int cartan_from_roots(const std::vector<IntVec>& positive, Int i, Int j);

struct RootSystemReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the four root-system axioms, the Cartan-scheme row condition, and
/// the consistency of matrix-side and root-side Cartan entries.
RootSystemReport verify_root_system(const GroupoidAtlas& atlas);

std::string atlas_text(const GroupoidAtlas& atlas);
std::string atlas_dot(const GroupoidAtlas& atlas);
std::string root_set_text(const std::vector<IntVec>& positive);

}  // namespace nichols

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/superroots.hpp"
#include "nichols/weyl.hpp"

namespace nichols {

/// C(theta, q; i_1 < ... < i_j): a path-shaped braiding where the edge left
/// of vertex i carries q exactly when i is marked, and vertex 1 is odd
/// exactly when 1 is marked.
struct SimpleChainDescriptor {
  Int length = 0;
  std::optional<UnityScalar> q;  // absent only for the single odd vertex
  std::set<Int> marked;          // 1-based
};

/// Checks the chain conditions on the matrix as indexed (vertices already in
/// path order); match_family handles relabelings.
std::optional<SimpleChainDescriptor> detect_simple_chain(const BraidingMatrix& b);

struct SuperTypeDescriptor {
  SuperFamily family;
  Int theta = 0;
  std::string display;            // which classified diagram matched
  std::vector<Int> relabeling;    // family position k -> input vertex relabeling[k]
  std::string params;             // human-readable parameter list
  std::vector<std::string> all_displays;  // every display that matched

  std::string str() const;
};

/// Matches a connected braiding against the classified diagram families,
/// trying vertex relabelings; twist-class information only.
std::optional<SuperTypeDescriptor> match_family(const BraidingMatrix& b);

struct ClassifyComponent {
  std::vector<Int> vertices;  // 0-based indices into the input matrix
  std::optional<SuperTypeDescriptor> descriptor;
  bool cross_check_ran = false;
  bool cross_check_ok = true;
  std::string cross_check_msg;
};

struct ClassifyResult {
  std::vector<ClassifyComponent> components;
  bool all_cross_checks_ok() const;
  std::string report() const;  // one line per component
};

BraidingMatrix restrict_to(const BraidingMatrix& b, const std::vector<Int>& vertices);

/// Splits into connected components and matches each; when cross_validate is
/// set, every match is validated against the Weyl groupoid and the direct
/// root-system constructions.
ClassifyResult classify_braiding(const BraidingMatrix& b, bool cross_validate = false,
                                 Int object_cap = kDefaultObjectCap, Int root_cap = kDefaultRootCap);

/// Starting parity for the direct constructions: odd exactly at q_ii = -1.
ParityFunction parity_from_diagonal(const BraidingMatrix& b, const std::vector<Int>& relabeling);

/// True when the atlas' distinct positive root sets equal the family
/// construction's, up to one global vertex permutation.
bool root_sets_match(const GroupoidAtlas& atlas, const FamilyAtlas& family);

}  // namespace nichols

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/common.hpp"

namespace nichols {

enum class SuperFamily { A, B, C, D, D21, F4, G3 };

std::string family_name(SuperFamily f);

/// Multiplicative parity on Z^theta, determined by its values +-1 on the
/// simple roots.
struct ParityFunction {
  std::vector<int> sign;  // +1 or -1 per simple root

  Int theta() const { return static_cast<Int>(sign.size()); }
  int of(const IntVec& v) const;
  bool operator==(const ParityFunction& o) const { return sign == o.sign; }
  bool operator<(const ParityFunction& o) const { return sign < o.sign; }
};

/// Which displayed symbol a positive root instantiates; (i, j) are 1-based
/// as in the displays.
enum class RootSymbol { U, V, W, Wtilde, Utilde, Z, Ztilde, TipPair, Plain };

struct LabeledRoot {
  IntVec degree;
  RootSymbol symbol;
  Int i = 0, j = 0;
};

struct SuperRootSet {
  SuperFamily family;
  Int theta = 0;
  std::optional<ParityFunction> parity;  // classical families
  std::vector<IntVec> positive;          // sorted
  std::vector<LabeledRoot> labels;       // same roots, with symbols

  bool same_roots(const SuperRootSet& o) const { return positive == o.positive; }
};

/// The displayed positive root sets for A, B, C, D at a given parity;
/// conditional members included exactly per the case split.
SuperRootSet build_classical(SuperFamily f, Int theta, const ParityFunction& p);

/// The displayed sets for D(2,1;a) (objects 0..3), F(4) and G(3) (object 0).
SuperRootSet build_exceptional(SuperFamily f, Int object_index);

/// Parity after reflecting at an odd vertex i (0-based): each vertex k flips
/// by (-1)^{m_ik} with m_ik the length of its i-string. Even i returns p.
ParityFunction parity_reflect(const ParityFunction& p, Int i, const IntVec& cartan_row);

/// Cartan row at a root set: a_ij = -max{ k : alpha_j + k alpha_i in Delta },
/// the convention under which s_i permutes the displayed sets.
IntVec cartan_row_of_roots(const std::vector<IntVec>& positive, Int i);

/// Positive half of s_i applied to a full root set, with the row above.
std::vector<IntVec> reflect_positive_roots(const std::vector<IntVec>& positive, Int i);

struct FamilyAtlas {
  SuperFamily family;
  Int theta = 0;
  std::vector<SuperRootSet> objects;
  /// Distinct positive root sets across all objects, sorted.
  std::vector<std::vector<IntVec>> distinct_root_sets() const;
};

/// Closure of a starting object: parity reflections at odd vertices for
/// A-D, root-set reflections for D(2,1;a), F(4), G(3).
FamilyAtlas family_atlas(SuperFamily f, Int theta, const ParityFunction& p0, Int object_cap = 10000);
FamilyAtlas family_atlas_exceptional(SuperFamily f, Int object_cap = 10000);

}  // namespace nichols

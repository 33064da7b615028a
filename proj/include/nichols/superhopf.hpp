#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/scalars.hpp"

namespace nichols {

using CycVec = std::vector<CycNumber>;
using CycMat = std::vector<std::vector<CycNumber>>;

/// Finite-dimensional Hopf superalgebra by structure constants over
/// Q(zeta_order). A purely even presentation is an ordinary Hopf algebra.
struct SuperHopfPresentation {
  Int dim = 0;
  Int order = 1;  // coefficient field Q(zeta_order)
  std::vector<std::string> labels;
  std::vector<int> parity;                 // 0/1 per basis element
  std::vector<std::vector<CycVec>> mult;   // mult[i][j] = coords of b_i b_j
  CycVec unit;                             // coords of 1
  std::vector<CycMat> comult;              // comult[i][j][k]: b_i -> sum b_j (x) b_k
  CycVec counit;                           // eps(b_i)
  CycMat antipode;                         // S(b_i) = sum_j antipode[i][j] b_j
  std::vector<Int> grouplikes;             // declared group-like basis indices

  CycNumber zero() const;
  CycNumber one() const;
  CycVec zero_vec() const { return CycVec(dim, zero()); }

  CycVec mul(const CycVec& a, const CycVec& b) const;
  CycVec mul3(const CycVec& a, const CycVec& b, const CycVec& c) const;
  CycMat delta(const CycVec& a) const;
  CycVec apply_antipode(const CycVec& a) const;
  CycNumber eps(const CycVec& a) const;
  CycVec basis(Int i) const;

  static SuperHopfPresentation parse(const std::string& text);
  std::string serialize() const;
};

struct AxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks every Hopf-superalgebra axiom by structure-constant contraction:
/// grading, (co)associativity, (co)unit, the sign-twisted multiplicativity
/// of the coproduct, the counit morphism property, the antipode convolution
/// identities, and that declared group-likes are group-like.
AxiomReport verify_super_hopf(const SuperHopfPresentation& h);

/// Bosonization H -> H # k(Z/2): basis b_i#1, b_i#s, ordinary Hopf algebra.
SuperHopfPresentation bosonize(const SuperHopfPresentation& h);

/// Correspondence between pairs (ordinary H, group-like u with u^2 = 1) and
/// pairs (super H, group-like g with g^2 = 1 acting by parity).
SuperHopfPresentation aeg_to_super(const SuperHopfPresentation& ordinary, Int u_index);
SuperHopfPresentation aeg_to_ordinary(const SuperHopfPresentation& super, Int g_index);

struct SuperModulePresentation {
  Int dim = 0;
  std::vector<int> parity;
  std::vector<std::vector<CycVec>> action;  // action[h][v] = coords in V
  // optional coaction: coaction[v][h][w], v -> sum h (x) w
  std::optional<std::vector<CycMat>> coaction;
};

AxiomReport verify_supermodule(const SuperHopfPresentation& h, const SuperModulePresentation& v);
AxiomReport verify_supercomodule(const SuperHopfPresentation& h, const SuperModulePresentation& v);

/// Tensor product of supermodules with the sign-twisted diagonal action.
SuperModulePresentation tensor_supermodules(const SuperHopfPresentation& h,
                                            const SuperModulePresentation& v,
                                            const SuperModulePresentation& w);

/// The Yetter-Drinfeld compatibility, checked on every basis pair.
AxiomReport verify_yd_compat(const SuperHopfPresentation& h, const SuperModulePresentation& v);

/// Braiding c(x (x) y) = (-1)^{|x_0||y|} x_{-1}.y (x) x_0 as a matrix from
/// V (x) W to W (x) V, indices row-major (v*dimW + w / w*dimV + v).
CycMat yd_braiding(const SuperHopfPresentation& h, const SuperModulePresentation& v,
                   const SuperModulePresentation& w);

/// Braided Hopf algebra R in the Yetter-Drinfeld category over H.
struct BraidedHopfData {
  SuperHopfPresentation r;        // structure maps of R (same container)
  SuperModulePresentation yd;     // H-action and H-coaction on R's basis
};

AxiomReport verify_braided_hopf(const BraidedHopfData& r, const SuperHopfPresentation& h);

/// Radford biproduct R#H with the sign-twisted structure maps.
SuperHopfPresentation biproduct(const BraidedHopfData& r, const SuperHopfPresentation& h);

/// incl: the same R viewed over the bosonization H^sigma.
BraidedHopfData incl_over_bosonization(const BraidedHopfData& r, const SuperHopfPresentation& h);

bool same_presentation(const SuperHopfPresentation& a, const SuperHopfPresentation& b);

/// Structure constants of a#(h#s^k) against (a#h)#s^k under the canonical
/// basis bijection; used for the bosonization compatibility check.
bool bosonization_compatible(const BraidedHopfData& r, const SuperHopfPresentation& h);

// ---- example zoo ------------------------------------------------------------

SuperHopfPresentation trivial_hopf();           // the ground field
SuperHopfPresentation group_algebra_z2();
SuperHopfPresentation exterior_line();          // Lambda(x), |x| = 1
SuperHopfPresentation exterior_line_even();     // same tables, parity dropped
SuperHopfPresentation sweedler();               // 4-dim ordinary
SuperHopfPresentation super_sweedler();         // its super partner: x odd, primitive
/// One-dimensional module-comodule over kZ/2: coaction by sigma^g_elem,
/// action by the character chi_sign, parity k.
SuperModulePresentation super_line(int g_elem, int chi_sign, int k);
BraidedHopfData nichols_line_over_z2();         // R = Lambda(x) in YD over kZ/2

}  // namespace nichols

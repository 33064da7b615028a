#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nichols/common.hpp"

namespace nichols {

/// Element of the multiplicative group generated by a root of unity and a
/// set of named generic parameters (assumed non-torsion and independent).
/// The torsion part is kept in lowest terms, so equality is field-by-field.
class UnityScalar {
public:
  UnityScalar() = default;  // the identity
  static UnityScalar root_of_unity(Int order, Int exp);
  static UnityScalar generic(const std::string& name, Int exp = 1);

  Int torsion_order() const { return order_; }
  Int torsion_exp() const { return exp_; }
  const std::map<std::string, Int>& generic_exps() const { return gen_; }
  bool has_generics() const { return !gen_.empty(); }

  UnityScalar operator*(const UnityScalar& o) const;
  UnityScalar inverse() const;
  UnityScalar pow(Int k) const;
  bool is_one() const { return order_ == 1 && gen_.empty(); }
  bool operator==(const UnityScalar& o) const;
  bool operator!=(const UnityScalar& o) const { return !(*this == o); }
  bool operator<(const UnityScalar& o) const;

  /// Multiplicative order; empty when a generic appears (non-torsion).
  std::optional<Int> multiplicative_order() const;

  /// Literal form, torsion exponent rescaled to the given ambient order.
  std::string str(Int ambient) const;
  /// Ambient-free form; torsion printed at its reduced order.
  std::string str() const { return str(order_); }
  /// Unambiguous canonical key (order, exponent, generics) for hashing.
  std::string key() const;

  /// Parses the literal grammar  z^INT [* NAME^INT]... , or `1`.
  /// `z^a` is read as the ambient-order root raised to a.
  static UnityScalar parse(const std::string& text, Int ambient);

private:
  void reduce();
  Int order_ = 1;  // reduced torsion order
  Int exp_ = 0;    // exponent, coprime to order_ unless 0
  std::map<std::string, Int> gen_;
};

UnityScalar minus_one();

class CycField;
using CycFieldRef = std::shared_ptr<const CycField>;

/// The field Q(zeta_L) presented as Q[t]/Phi_L(t); caches the cyclotomic
/// polynomial and the reduction table for one ambient order L.
class CycField {
public:
  static CycFieldRef get(Int order);
  Int order() const { return order_; }
  Int degree() const { return degree_; }
  const std::vector<Rational>& phi() const { return phi_; }
  // t^k mod Phi_L for degree <= k <= 2*degree-2
  const std::vector<std::vector<Rational>>& power_table() const { return powers_; }

private:
  explicit CycField(Int order);
  Int order_;
  Int degree_;
  std::vector<Rational> phi_;
  std::vector<std::vector<Rational>> powers_;
};

/// Exact element of Q(zeta_L): dense coefficient vector modulo Phi_L.
class CycNumber {
public:
  CycNumber() = default;  // zero over Q(zeta_1) = Q
  explicit CycNumber(Rational r);
  static CycNumber zero(const CycFieldRef& f);
  static CycNumber one(const CycFieldRef& f);
  static CycNumber from_rational(const CycFieldRef& f, const Rational& r);
  static CycNumber root_power(const CycFieldRef& f, Int k);
  /// Reduces an arbitrary coefficient vector (any length) mod Phi_L.
  static CycNumber from_coeffs(const CycFieldRef& f, std::vector<Rational> c);

  Int order() const { return field_ ? field_->order() : 1; }
  const CycFieldRef& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator-() const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber inverse() const;  // throws Error(Arg) on zero
  CycNumber pow(Int k) const;

  /// Numeric evaluation at zeta_L = exp(2*pi*i/L); sanity oracle only.
  std::complex<double> to_complex() const;

  std::string str() const;  // polynomial in z, canonical

private:
  CycFieldRef field_;            // null means plain rationals (L = 1)
  std::vector<Rational> c_;      // size degree, reduced
  void ensure(const CycFieldRef& f);
};

/// Assignment of every generic parameter to a root of unity in Q(zeta_L).
struct SpecializationMap {
  Int target_order = 1;
  std::map<std::string, Int> assignments;  // name -> c, meaning zeta_L^c

  static SpecializationMap parse(const std::string& text);  // "q=z^2,r=z^3" with L = lcm-supplied
};

/// specialize(s*t) = specialize(s)*specialize(t); torsion embeds by index.
CycNumber specialize(const UnityScalar& s, const SpecializationMap& m);

/// Finite Q-linear combination of UnityScalars. Closed under + and *; the
/// zero test reduces each generic monomial into the cyclotomic field, so it
/// is exact even across relations like 1 + zeta + zeta^2 = 0.
class ScalarSum {
public:
  ScalarSum() = default;
  ScalarSum(const UnityScalar& s) { terms_[s] = 1; }
  explicit ScalarSum(Rational r);

  static ScalarSum zero() { return ScalarSum(); }

  const std::map<UnityScalar, Rational>& terms() const { return terms_; }
  bool is_structurally_zero() const { return terms_.empty(); }
  bool is_zero() const;  // exact
  ScalarSum operator+(const ScalarSum& o) const;
  ScalarSum operator-(const ScalarSum& o) const;
  ScalarSum operator-() const;
  ScalarSum operator*(const ScalarSum& o) const;
  ScalarSum& operator+=(const ScalarSum& o);
  void scale(const UnityScalar& s);        // multiply every term
  void scale_rat(const Rational& r);
  bool operator==(const ScalarSum& o) const { return (*this - o).is_zero(); }

  /// Evaluation in Q(zeta_L); every generic must be assigned.
  CycNumber specialize(const SpecializationMap& m) const;
  /// Shortcut when no generics occur: specializes with an empty map.
  CycNumber to_cyc(Int order) const;

  std::string str(Int ambient) const;

private:
  std::map<UnityScalar, Rational> terms_;
  void prune(const UnityScalar& key);
};

enum class ZeroFlag { Zero, Nonzero };

/// (n)_q = 1 + q + ... + q^(n-1); exact symbolic zero test.
ZeroFlag q_number(Int n, const UnityScalar& q);
/// Gaussian binomial zero test at a UnityScalar (q-Lucas).
ZeroFlag q_binomial(Int n, Int j, const UnityScalar& q);

CycNumber q_number_cyc(Int n, const CycNumber& q);
/// Gaussian binomial by the q-Pascal recursion; never divides.
CycNumber q_binomial_cyc(Int n, Int j, const CycNumber& q);
/// Product-formula evaluation, defined only when no q-factorial vanishes.
std::optional<CycNumber> q_binomial_product(Int n, Int j, const CycNumber& q);

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& r);

}  // namespace nichols

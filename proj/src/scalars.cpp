#include "nichols/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace nichols {

// ---------------------------------------------------------------- UnityScalar

UnityScalar UnityScalar::root_of_unity(Int order, Int exp) {
  if (order < 1) throw Error(ErrKind::Arg, "root order must be positive");
  UnityScalar s;
  s.order_ = order;
  s.exp_ = mod_pos(exp, order);
  s.reduce();
  return s;
}

UnityScalar UnityScalar::generic(const std::string& name, Int exp) {
  UnityScalar s;
  if (exp != 0) s.gen_[name] = exp;
  return s;
}

void UnityScalar::reduce() {
  exp_ = mod_pos(exp_, order_);
  Int g = gcd_int(exp_, order_);
  if (g == 0) {  // exp == 0
    order_ = 1;
    exp_ = 0;
    return;
  }
  order_ /= g;
  exp_ /= g;
}

UnityScalar UnityScalar::operator*(const UnityScalar& o) const {
  UnityScalar r;
  Int n = lcm_int(order_, o.order_);
  r.order_ = n;
  r.exp_ = mod_pos(exp_ * (n / order_) + o.exp_ * (n / o.order_), n);
  r.gen_ = gen_;
  for (const auto& [k, v] : o.gen_) {
    Int e = (r.gen_.count(k) ? r.gen_[k] : 0) + v;
    if (e == 0)
      r.gen_.erase(k);
    else
      r.gen_[k] = e;
  }
  r.reduce();
  return r;
}

UnityScalar UnityScalar::inverse() const { return pow(-1); }

UnityScalar UnityScalar::pow(Int k) const {
  UnityScalar r;
  r.order_ = order_;
  r.exp_ = mod_pos(exp_ * mod_pos(k, order_), order_);
  for (const auto& [n, v] : gen_)
    if (v * k != 0) r.gen_[n] = v * k;
  r.reduce();
  return r;
}

bool UnityScalar::operator==(const UnityScalar& o) const {
  return order_ == o.order_ && exp_ == o.exp_ && gen_ == o.gen_;
}

bool UnityScalar::operator<(const UnityScalar& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  if (exp_ != o.exp_) return exp_ < o.exp_;
  return gen_ < o.gen_;
}

std::optional<Int> UnityScalar::multiplicative_order() const {
  if (!gen_.empty()) return std::nullopt;
  return order_;  // reduced form: gcd(exp, order) = 1
}

std::string UnityScalar::str(Int ambient) const {
  if (ambient % order_ != 0) throw Error(ErrKind::Arg, "ambient order does not contain scalar torsion");
  std::string s;
  if (exp_ != 0) s = "z^" + std::to_string(exp_ * (ambient / order_));
  for (const auto& [n, v] : gen_) {
    if (!s.empty()) s += '*';
    s += n + "^" + std::to_string(v);
  }
  return s.empty() ? "1" : s;
}

std::string UnityScalar::key() const {
  std::string s = std::to_string(order_) + ":" + std::to_string(exp_);
  for (const auto& [n, v] : gen_) s += "," + n + ":" + std::to_string(v);
  return s;
}

UnityScalar UnityScalar::parse(const std::string& text, Int ambient) {
  if (text.empty()) throw Error(ErrKind::Parse, "empty scalar literal");
  UnityScalar r;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    if (tok.empty()) throw Error(ErrKind::Parse, "empty factor in scalar literal '" + text + "'");
    if (tok == "1") continue;
    size_t caret = tok.find('^');
    std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
    Int exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoll(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error(ErrKind::Parse, "bad exponent in scalar literal '" + text + "'");
      }
    }
    if (name == "z")
      r = r * root_of_unity(ambient, exp);
    else if (!name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      r = r * generic(name, exp);
    else
      throw Error(ErrKind::Parse, "bad factor '" + tok + "' in scalar literal");
  }
  return r;
}

UnityScalar minus_one() { return UnityScalar::root_of_unity(2, 1); }

// ------------------------------------------------------------------ CycField

namespace {

// Integer-coefficient dense polynomials, lowest degree first.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

// Exact division, remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
  }
  if (!num.empty()) throw Error(ErrKind::Internal, "inexact polynomial division");
  return q;
}

Poly cyclotomic(Int n) {
  if (n == 1) return {Rational(-1), Rational(1)};
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (Int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic(d));
  return num;
}

}  // namespace

CycField::CycField(Int order) : order_(order) {
  phi_ = cyclotomic(order);
  degree_ = static_cast<Int>(phi_.size()) - 1;
  // reduction of t^k for k in [degree, 2*degree-2]
  std::vector<Rational> cur(degree_, Rational(0));
  // t^degree = -(phi_0 + ... + phi_{d-1} t^{d-1})  (phi monic)
  for (Int i = 0; i < degree_; ++i) cur[i] = -phi_[i];
  powers_.push_back(cur);
  for (Int k = degree_ + 1; k <= 2 * degree_ - 2; ++k) {
    std::vector<Rational> next(degree_, Rational(0));
    Rational top = cur[degree_ - 1];
    for (Int i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (Int i = 0; i < degree_; ++i) next[i] += top * powers_[0][i];
    powers_.push_back(next);
    cur = next;
  }
}

CycFieldRef CycField::get(Int order) {
  static std::mutex mu;
  static std::unordered_map<Int, CycFieldRef> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto f = CycFieldRef(new CycField(order));
  cache[order] = f;
  return f;
}

// ----------------------------------------------------------------- CycNumber

CycNumber::CycNumber(Rational r) {
  if (r != 0) c_ = {std::move(r)};
}

CycNumber CycNumber::zero(const CycFieldRef& f) {
  CycNumber x;
  x.field_ = f;
  x.c_.assign(f->degree(), Rational(0));
  return x;
}

CycNumber CycNumber::one(const CycFieldRef& f) { return from_rational(f, Rational(1)); }

CycNumber CycNumber::from_rational(const CycFieldRef& f, const Rational& r) {
  CycNumber x = zero(f);
  x.c_[0] = r;
  return x;
}

CycNumber CycNumber::root_power(const CycFieldRef& f, Int k) {
  std::vector<Rational> c(mod_pos(k, f->order()) + 1, Rational(0));
  c.back() = 1;
  return from_coeffs(f, std::move(c));
}

CycNumber CycNumber::from_coeffs(const CycFieldRef& f, std::vector<Rational> c) {
  // long division by Phi (monic)
  const auto& phi = f->phi();
  size_t d = phi.size() - 1;
  while (c.size() > d) {
    Rational top = c.back();
    size_t shift = c.size() - 1 - d;
    if (top != 0)
      for (size_t i = 0; i < d; ++i) c[shift + i] -= top * phi[i];
    c.pop_back();
  }
  c.resize(d, Rational(0));
  CycNumber x;
  x.field_ = f;
  x.c_ = std::move(c);
  return x;
}

void CycNumber::ensure(const CycFieldRef& f) {
  if (!field_) {
    Rational r = c_.empty() ? Rational(0) : c_[0];
    *this = from_rational(f, r);
  } else if (field_->order() != f->order()) {
    throw Error(ErrKind::Arg, "mixed cyclotomic orders " + std::to_string(field_->order()) + " and " +
                                  std::to_string(f->order()));
  }
}

bool CycNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNumber::is_one() const {
  if (c_.empty()) return false;
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNumber::operator==(const CycNumber& o) const { return (*this - o).is_zero(); }

CycNumber CycNumber::operator+(const CycNumber& o) const {
  CycNumber a = *this, b = o;
  if (a.field_ == nullptr && b.field_ == nullptr) {
    Rational x = a.c_.empty() ? Rational(0) : a.c_[0];
    Rational y = b.c_.empty() ? Rational(0) : b.c_[0];
    return CycNumber(x + y);
  }
  if (!a.field_) a.ensure(b.field_);
  if (!b.field_) b.ensure(a.field_);
  a.ensure(b.field_);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator*(const CycNumber& o) const {
  CycNumber a = *this, b = o;
  if (a.field_ == nullptr && b.field_ == nullptr) {
    Rational x = a.c_.empty() ? Rational(0) : a.c_[0];
    Rational y = b.c_.empty() ? Rational(0) : b.c_[0];
    return CycNumber(x * y);
  }
  if (!a.field_) a.ensure(b.field_);
  if (!b.field_) b.ensure(a.field_);
  a.ensure(b.field_);
  Int d = a.field_->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (Int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (Int j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(d, Rational(0));
  const auto& table = a.field_->power_table();
  for (Int k = 0; k < d; ++k) out[k] = prod[k];
  for (Int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = table[k - d];
    for (Int i = 0; i < d; ++i) out[i] += prod[k] * row[i];
  }
  CycNumber r;
  r.field_ = a.field_;
  r.c_ = std::move(out);
  return r;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw Error(ErrKind::Arg, "division by zero in Q(zeta)");
  if (!field_) return CycNumber(1 / c_[0]);
  // extended Euclid in Q[t]: a*this + b*Phi = 1
  Poly r0 = field_->phi();
  Poly r1 = c_;
  poly_trim(r1);
  Poly s0 = {}, s1 = {Rational(1)};  // coefficients of `this`
  while (!r1.empty()) {
    // quotient of r0 by r1
    Poly q;
    Poly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      poly_trim(rem);
    }
    Poly s2 = s0;  // s0 - q*s1
    Poly qs = poly_mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 is the gcd, a nonzero constant (Phi is irreducible, this != 0 mod Phi)
  if (r0.size() != 1) throw Error(ErrKind::Internal, "cyclotomic inverse: nontrivial gcd");
  Rational inv_c = 1 / r0[0];
  for (auto& x : s0) x *= inv_c;
  return from_coeffs(field_, std::move(s0));
}

CycNumber CycNumber::pow(Int k) const {
  CycNumber base = k < 0 ? inverse() : *this;
  Int e = k < 0 ? -k : k;
  CycNumber acc = field_ ? one(field_) : CycNumber(Rational(1));
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::complex<double> CycNumber::to_complex() const {
  Int L = order();
  std::complex<double> z = std::polar(1.0, 2.0 * M_PI / static_cast<double>(L));
  std::complex<double> acc(0.0, 0.0);
  std::complex<double> zp(1.0, 0.0);
  for (const auto& x : c_) {
    acc += x.get_d() * zp;
    zp *= z;
  }
  return acc;
}

std::string CycNumber::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    bool neg = a < 0;
    Rational mag = neg ? Rational(-a) : a;
    std::string term;
    if (i == 0)
      term = rational_str(mag);
    else {
      std::string zp = i == 1 ? "z" : "z^" + std::to_string(i);
      term = (mag == 1) ? zp : rational_str(mag) + "*" + zp;
    }
    if (s.empty())
      s = neg ? "-" + term : term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s;
}

// ----------------------------------------------------------- SpecializationMap

SpecializationMap SpecializationMap::parse(const std::string& text) {
  SpecializationMap m;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrKind::Parse, "bad assignment '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    if (val.size() < 3 || val[0] != 'z' || val[1] != '^')
      throw Error(ErrKind::Parse, "assignment value must be z^INT, got '" + val + "'");
    Int c;
    try {
      c = std::stoll(val.substr(2));
    } catch (const std::exception&) {
      throw Error(ErrKind::Parse, "bad exponent in '" + val + "'");
    }
    m.assignments[name] = c;
  }
  return m;
}

CycNumber specialize(const UnityScalar& s, const SpecializationMap& m) {
  Int L = m.target_order;
  if (L % s.torsion_order() != 0)
    throw Error(ErrKind::Arg, "target order " + std::to_string(L) + " not divisible by torsion order " +
                                  std::to_string(s.torsion_order()));
  Int e = s.torsion_exp() * (L / s.torsion_order());
  for (const auto& [name, k] : s.generic_exps()) {
    auto it = m.assignments.find(name);
    if (it == m.assignments.end())
      throw Error(ErrKind::Arg, "no assignment for generic parameter '" + name + "'");
    e += it->second * k;
  }
  return CycNumber::root_power(CycField::get(L), mod_pos(e, L));
}

// ------------------------------------------------------------------ ScalarSum

ScalarSum::ScalarSum(Rational r) {
  if (r != 0) terms_[UnityScalar()] = std::move(r);
}

void ScalarSum::prune(const UnityScalar& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

ScalarSum& ScalarSum::operator+=(const ScalarSum& o) {
  for (const auto& [s, r] : o.terms_) {
    terms_[s] += r;
    prune(s);
  }
  return *this;
}

ScalarSum ScalarSum::operator+(const ScalarSum& o) const {
  ScalarSum r = *this;
  r += o;
  return r;
}

ScalarSum ScalarSum::operator-() const {
  ScalarSum r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

ScalarSum ScalarSum::operator-(const ScalarSum& o) const { return *this + (-o); }

ScalarSum ScalarSum::operator*(const ScalarSum& o) const {
  ScalarSum r;
  for (const auto& [s1, c1] : terms_)
    for (const auto& [s2, c2] : o.terms_) {
      UnityScalar key = s1 * s2;
      r.terms_[key] += c1 * c2;
      r.prune(key);
    }
  return r;
}

void ScalarSum::scale(const UnityScalar& s) {
  std::map<UnityScalar, Rational> out;
  for (const auto& [k, c] : terms_) out[k * s] += c;
  terms_ = std::move(out);
}

void ScalarSum::scale_rat(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return;
  }
  for (auto& [k, c] : terms_) c *= r;
}

bool ScalarSum::is_zero() const {
  if (terms_.empty()) return true;
  // group by generic monomial, reduce each torsion combination in Q(zeta_N)
  std::map<std::map<std::string, Int>, std::vector<std::pair<UnityScalar, Rational>>> groups;
  for (const auto& [s, c] : terms_) groups[s.generic_exps()].push_back({s, c});
  for (const auto& [mono, parts] : groups) {
    Int L = 1;
    for (const auto& [s, c] : parts) L = lcm_int(L, s.torsion_order());
    auto f = CycField::get(L);
    CycNumber acc = CycNumber::zero(f);
    for (const auto& [s, c] : parts) {
      CycNumber t = CycNumber::root_power(f, s.torsion_exp() * (L / s.torsion_order()));
      acc = acc + t * CycNumber::from_rational(f, c);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

CycNumber ScalarSum::specialize(const SpecializationMap& m) const {
  auto f = CycField::get(m.target_order);
  CycNumber acc = CycNumber::zero(f);
  for (const auto& [s, c] : terms_)
    acc = acc + nichols::specialize(s, m) * CycNumber::from_rational(f, c);
  return acc;
}

CycNumber ScalarSum::to_cyc(Int order) const {
  SpecializationMap m;
  m.target_order = order;
  return specialize(m);
}

std::string ScalarSum::str(Int ambient) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [u, c] : terms_) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    std::string term = u.is_one() ? rational_str(mag)
                                  : (mag == 1 ? u.str(ambient) : rational_str(mag) + "*" + u.str(ambient));
    if (s.empty())
      s = neg ? "-" + term : term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s;
}

// -------------------------------------------------------------- q-combinatorics

ZeroFlag q_number(Int n, const UnityScalar& q) {
  if (n == 0) return ZeroFlag::Zero;
  auto ord = q.multiplicative_order();
  if (!ord) return ZeroFlag::Nonzero;          // generic q, char 0
  if (*ord == 1) return ZeroFlag::Nonzero;     // (n)_1 = n
  return (n % *ord == 0) ? ZeroFlag::Zero : ZeroFlag::Nonzero;
}

ZeroFlag q_binomial(Int n, Int j, const UnityScalar& q) {
  if (j < 0 || j > n) return ZeroFlag::Zero;
  auto ord = q.multiplicative_order();
  if (!ord || *ord == 1) return ZeroFlag::Nonzero;
  // q-Lucas at a primitive d-th root: (n j)_q = (n/d j/d) * (n%d j%d)_q,
  // and the ordinary binomial never vanishes in char 0 once j <= n.
  Int d = *ord;
  return (j % d > n % d) ? ZeroFlag::Zero : ZeroFlag::Nonzero;
}

CycNumber q_number_cyc(Int n, const CycNumber& q) {
  CycNumber acc(Rational(0));
  CycNumber p(Rational(1));
  for (Int i = 0; i < n; ++i) {
    acc = acc + p;
    p = p * q;
  }
  return acc;
}

CycNumber q_binomial_cyc(Int n, Int j, const CycNumber& q) {
  if (j < 0 || j > n) return CycNumber(Rational(0));
  // row-by-row Pascal: C(n,j) = C(n-1,j-1) + q^j C(n-1,j)
  std::vector<CycNumber> row = {CycNumber(Rational(1))};
  for (Int r = 1; r <= n; ++r) {
    std::vector<CycNumber> next(r + 1, CycNumber(Rational(0)));
    for (Int k = 0; k <= r; ++k) {
      if (k > 0) next[k] = next[k] + row[k - 1];
      if (k < r) next[k] = next[k] + q.pow(k) * row[k];
    }
    row = std::move(next);
  }
  return row[j];
}

std::optional<CycNumber> q_binomial_product(Int n, Int j, const CycNumber& q) {
  // (n)_q! / ((j)_q! (n-j)_q!) via factor-by-factor division
  CycNumber num(Rational(1)), den(Rational(1));
  for (Int k = 1; k <= n; ++k) num = num * q_number_cyc(k, q);
  for (Int k = 1; k <= j; ++k) den = den * q_number_cyc(k, q);
  for (Int k = 1; k <= n - j; ++k) den = den * q_number_cyc(k, q);
  if (den.is_zero()) return std::nullopt;
  return num * den.inverse();
}

// ------------------------------------------------------------------ rationals

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrKind::Parse, "empty rational");
  try {
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw Error(ErrKind::Parse, "bad rational '" + text + "'");
  }
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace nichols

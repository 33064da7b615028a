#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nichols {

using Int = std::int64_t;
using Rational = mpq_class;
using IntVec = std::vector<Int>;

enum class ErrKind { Parse, Cap, Verify, Arg, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

private:
  ErrKind kind_;
};

inline Int gcd_int(Int a, Int b) { return std::gcd(a, b); }
inline Int lcm_int(Int a, Int b) { return a / std::gcd(a, b) * b; }

// a mod n in [0, n)
inline Int mod_pos(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

inline Int total_degree(const IntVec& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline std::string vec_str(const IntVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace nichols

#ifndef SGDOPS_NUMERIC_HPP
#define SGDOPS_NUMERIC_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sgdops {

using Rat = mpq_class;
using Int = mpz_class;

// gmpxx has no long long constructors; lattice coordinates are long long.
inline Rat rat_of(long long x) { return Rat(static_cast<long>(x)); }
inline Int int_of(long long x) { return Int(static_cast<long>(x)); }

// Lattice points and integer vectors. Desk-scale coordinates fit in 64 bits
// with wide margins; all polynomial coefficients are exact rationals.
using Vec = std::vector<long long>;

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& a) {
  for (long long x : a)
    if (x != 0) return false;
  return true;
}

inline long long linf_norm(const Vec& a) {
  long long m = 0;
  for (long long x : a) m = std::max(m, x < 0 ? -x : x);
  return m;
}

inline long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Content of an integer vector (gcd of entries), 0 for the zero vector.
inline long long content(const Vec& a) {
  long long g = 0;
  for (long long x : a) g = gcd_ll(g, x);
  return g;
}

struct VecHash {
  size_t operator()(const Vec& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= std::hash<long long>{}(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Raised on invalid user input (configs, malformed matrices).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation cannot be certified (window instability,
// unsupported semigroup structure, internal containment violations).
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgdops

#endif

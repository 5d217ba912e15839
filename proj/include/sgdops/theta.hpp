#ifndef SGDOPS_THETA_HPP
#define SGDOPS_THETA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgdops/numeric.hpp"

namespace sgdops {

class ConeData;

// Exponent vector in theta_1..theta_n.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded reverse lexicographic order with theta_1 > ... > theta_n.
// With elim0 set, the first variable is an elimination block in front.
struct MonOrder {
  bool elim0 = false;
  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

// Exact multivariate polynomial in theta over Q. Canonical: zero
// coefficients are never stored.
class ThetaPoly {
 public:
  ThetaPoly() = default;
  explicit ThetaPoly(int nvars) : nvars_(nvars) {}

  static ThetaPoly constant(int nvars, const Rat& c);
  static ThetaPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  size_t num_terms() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);

  ThetaPoly operator+(const ThetaPoly& o) const;
  ThetaPoly operator-(const ThetaPoly& o) const;
  ThetaPoly operator*(const ThetaPoly& o) const;
  ThetaPoly operator*(const Rat& c) const;
  ThetaPoly operator-() const;
  bool operator==(const ThetaPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // f(theta) * t^m = f(m) t^m: exact evaluation at integer and rational points.
  Rat eval(const Vec& point) const;
  Rat eval(const std::vector<Rat>& point) const;

  // Leading monomial under the given order; polynomial must be nonzero.
  Monomial leading_monomial(const MonOrder& ord) const;

  // Same polynomial viewed in a ring with one extra variable in front.
  ThetaPoly lift_front() const;
  // Inverse of lift_front; requires degree 0 in the front variable.
  ThetaPoly drop_front() const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Rat> terms_;
};

// Integer affine-linear form c . theta + shift.
struct LinearForm {
  Vec coeffs;
  long long shift = 0;

  LinearForm() = default;
  LinearForm(Vec c, long long s) : coeffs(std::move(c)), shift(s) {}

  bool is_constant() const { return is_zero(coeffs); }
  Rat eval(const Vec& p) const { return rat_of(dot(coeffs, p) + shift); }
  Rat eval(const std::vector<Rat>& p) const;
  ThetaPoly to_poly(int nvars) const;
  LinearForm offset(long long delta) const { return LinearForm(coeffs, shift + delta); }

  // Primitive representative with positive leading coefficient; returns the
  // scalar q with *this == q * primitive.
  LinearForm primitive_form(Rat& scale) const;

  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs && shift == o.shift; }
  bool operator<(const LinearForm& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return shift < o.shift;
  }
};

// Product of affine-linear factors with a rational scalar. The empty
// product is the constant 1.
struct FactoredGenerator {
  Rat scalar = 1;
  std::vector<LinearForm> factors;  // kept sorted (multiset)

  void push(const LinearForm& f) { factors.push_back(f); }
  void canonicalize();
  int degree() const { return static_cast<int>(factors.size()); }
  ThetaPoly expand(int nvars) const;
  Rat eval(const Vec& p) const;
  FactoredGenerator times(const FactoredGenerator& o) const;
};

// (alpha, n)! = alpha (alpha - 1) ... (alpha - n); the empty product when n < 0.
FactoredGenerator descending_factorial(const LinearForm& h, long long n);

// Multiset operations on canonicalized factor lists.
std::vector<LinearForm> multiset_gcd(const std::vector<LinearForm>& a,
                                     const std::vector<LinearForm>& b);
std::vector<LinearForm> multiset_sub(const std::vector<LinearForm>& a,
                                     const std::vector<LinearForm>& b);
std::vector<LinearForm> multiset_union_max(const std::vector<LinearForm>& a,
                                           const std::vector<LinearForm>& b);

// Rendering. Variables print as theta1..thetan; when a cone is supplied,
// linear forms matching a facet support function print as h1..hm.
std::string poly_to_string(const ThetaPoly& p, const ConeData* cone = nullptr);
std::string linear_form_to_string(const LinearForm& f, int nvars, const ConeData* cone = nullptr);
std::string factored_to_string(const FactoredGenerator& g, int nvars,
                               const ConeData* cone = nullptr);

// Parser for the same grammar: theta<i>, h<i> (cone required), df(expr, n),
// rational constants, + - * ^ and parentheses.
ThetaPoly parse_poly(const std::string& text, int nvars, const ConeData* cone = nullptr);

}  // namespace sgdops

#endif

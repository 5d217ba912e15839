#ifndef SGDOPS_INTMAT_HPP
#define SGDOPS_INTMAT_HPP

#include <vector>

#include "sgdops/numeric.hpp"

namespace sgdops {

// Integer matrix whose columns are the semigroup generators.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::vector<long long> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  Vec column(int j) const;
  std::vector<Vec> columns() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<long long> e_;
};

// Rank over the rationals.
int rank(const std::vector<Vec>& vectors);

// Elementary divisors of the integer matrix with the given columns
// (diagonal of the Smith normal form, zeroes trimmed).
std::vector<long long> elementary_divisors(const IntMatrix& a);

// Basis of {w : w . v = 0 for all v in vectors}, integer and primitive.
std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& vectors, int dim);

// True iff some nontrivial nonnegative rational combination of the columns
// is zero, i.e. the cone over the columns contains a line.
bool has_nonneg_dependence(const IntMatrix& a);

struct LatticePointedness {
  bool zza_full;  // columns generate the full lattice Z^k
  bool pointed;   // cone over the columns contains no line
};

LatticePointedness check_lattice_and_pointed(const IntMatrix& a);

}  // namespace sgdops

#endif

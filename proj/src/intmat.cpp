#include "sgdops/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace sgdops {

IntMatrix::IntMatrix(int rows, int cols, std::vector<long long> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) throw InputError("matrix must be nonempty");
  if (e_.size() != static_cast<size_t>(rows_) * cols_)
    throw InputError("matrix entry count does not match dimensions");
  for (int j = 0; j < cols_; ++j)
    if (is_zero(column(j))) throw InputError("matrix has a zero column");
}

Vec IntMatrix::column(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Vec> IntMatrix::columns() const {
  std::vector<Vec> cs;
  cs.reserve(cols_);
  for (int j = 0; j < cols_; ++j) cs.push_back(column(j));
  return cs;
}

int rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  size_t n = vectors[0].size();
  std::vector<std::vector<Rat>> m;
  for (const Vec& v : vectors) {
    std::vector<Rat> row(n);
    for (size_t i = 0; i < n; ++i) row[i] = rat_of(v[i]);
    m.push_back(std::move(row));
  }
  int r = 0;
  for (size_t col = 0; col < n && r < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (size_t i = r; i < m.size(); ++i)
      if (m[i][col] != 0) {
        piv = static_cast<int>(i);
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[r][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<long long> elementary_divisors(const IntMatrix& a) {
  int r = a.rows(), c = a.cols();
  std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m[i][j] = a.at(i, j);

  auto abs_ll = [](long long x) { return x < 0 ? -x : x; };
  std::vector<long long> divisors;
  int top = 0;
  while (top < r && top < c) {
    // Find a nonzero pivot of minimal absolute value in the working block.
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = top; i < r; ++i)
      for (int j = top; j < c; ++j)
        if (m[i][j] != 0 && (pi < 0 || abs_ll(m[i][j]) < best)) {
          pi = i;
          pj = j;
          best = abs_ll(m[i][j]);
        }
    if (pi < 0) break;
    std::swap(m[top], m[pi]);
    for (int i = 0; i < r; ++i) std::swap(m[i][top], m[i][pj]);

    bool clean = true;
    for (int i = top + 1; i < r; ++i) {
      long long q = m[i][top] / m[top][top];
      for (int j = top; j < c; ++j) m[i][j] -= q * m[top][j];
      if (m[i][top] != 0) clean = false;
    }
    for (int j = top + 1; j < c; ++j) {
      long long q = m[top][j] / m[top][top];
      for (int i = top; i < r; ++i) m[i][j] -= q * m[i][top];
      if (m[top][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller pivot now exists; redo this block
    divisors.push_back(abs_ll(m[top][top]));
    ++top;
  }
  // Divisibility chain is not needed by callers; they only inspect the set.
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& vectors, int dim) {
  // Solve w . v = 0 over Q by Gaussian elimination, then clear denominators.
  std::vector<std::vector<Rat>> rows;
  for (const Vec& v : vectors) {
    std::vector<Rat> row(dim);
    for (int i = 0; i < dim; ++i) row[i] = rat_of(v[i]);
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < dim && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = static_cast<int>(i);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[r][col];
      for (int j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> w(dim, Rat(0));
    w[free] = 1;
    for (int i = r - 1; i >= 0; --i) {
      Rat s(0);
      for (int j = 0; j < dim; ++j)
        if (j != pivot_col[i]) s += rows[i][j] * w[j];
      w[pivot_col[i]] = -s / rows[i][pivot_col[i]];
    }
    Int lcm(1);
    for (int j = 0; j < dim; ++j) {
      Int den = w[j].get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    Vec iw(dim);
    for (int j = 0; j < dim; ++j) {
      Rat scaled = w[j] * Rat(lcm);
      iw[j] = static_cast<long long>(scaled.get_num().get_si());
    }
    long long g = content(iw);
    if (g > 1)
      for (auto& x : iw) x /= g;
    basis.push_back(std::move(iw));
  }
  return basis;
}

namespace {

// One linear constraint sum_i c[i] x_i + c0 (>= 0 or == 0).
struct Constraint {
  std::vector<Rat> c;
  Rat c0;
  bool eq;
};

// Exact Fourier-Motzkin feasibility for tiny systems.
bool feasible(std::vector<Constraint> cons, int nvars) {
  for (int v = nvars - 1; v >= 0; --v) {
    // Use an equality to eliminate v when possible.
    int eq_idx = -1;
    for (size_t i = 0; i < cons.size(); ++i)
      if (cons[i].eq && cons[i].c[v] != 0) {
        eq_idx = static_cast<int>(i);
        break;
      }
    std::vector<Constraint> next;
    if (eq_idx >= 0) {
      Constraint e = cons[eq_idx];
      for (size_t i = 0; i < cons.size(); ++i) {
        if (static_cast<int>(i) == eq_idx) continue;
        Constraint g = cons[i];
        if (g.c[v] != 0) {
          Rat f = g.c[v] / e.c[v];
          for (int j = 0; j < nvars; ++j) g.c[j] -= f * e.c[j];
          g.c0 -= f * e.c0;
        }
        next.push_back(std::move(g));
      }
    } else {
      std::vector<Constraint> lower, upper, rest;
      for (auto& g : cons) {
        if (g.c[v] > 0)
          lower.push_back(g);
        else if (g.c[v] < 0)
          upper.push_back(g);
        else
          rest.push_back(g);
      }
      next = rest;
      for (auto& lo : lower)
        for (auto& up : upper) {
          Constraint g;
          g.eq = false;
          g.c.assign(nvars, Rat(0));
          Rat a = lo.c[v], b = -up.c[v];
          for (int j = 0; j < nvars; ++j) g.c[j] = b * lo.c[j] + a * up.c[j];
          g.c0 = b * lo.c0 + a * up.c0;
          next.push_back(std::move(g));
        }
    }
    cons = std::move(next);
  }
  for (auto& g : cons) {
    if (g.eq && g.c0 != 0) return false;
    if (!g.eq && g.c0 < 0) return false;
  }
  return true;
}

}  // namespace

bool has_nonneg_dependence(const IntMatrix& a) {
  int k = a.rows(), l = a.cols();
  std::vector<Constraint> cons;
  for (int i = 0; i < k; ++i) {
    Constraint e;
    e.eq = true;
    e.c.assign(l, Rat(0));
    for (int j = 0; j < l; ++j) e.c[j] = rat_of(a.at(i, j));
    e.c0 = 0;
    cons.push_back(std::move(e));
  }
  for (int j = 0; j < l; ++j) {
    Constraint g;
    g.eq = false;
    g.c.assign(l, Rat(0));
    g.c[j] = 1;
    g.c0 = 0;
    cons.push_back(std::move(g));
  }
  Constraint sum;  // lambda_1 + ... + lambda_l = 1 forces nontriviality
  sum.eq = true;
  sum.c.assign(l, Rat(1));
  sum.c0 = -1;
  cons.push_back(std::move(sum));
  return feasible(std::move(cons), l);
}

LatticePointedness check_lattice_and_pointed(const IntMatrix& a) {
  LatticePointedness out{};
  std::vector<long long> div = elementary_divisors(a);
  out.zza_full = static_cast<int>(div.size()) == a.rows() &&
                 std::all_of(div.begin(), div.end(), [](long long d) { return d == 1; });
  out.pointed = !has_nonneg_dependence(a);
  return out;
}

}  // namespace sgdops

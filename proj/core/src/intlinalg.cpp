#include "houghton/intlinalg.hpp"

#include "houghton/errors.hpp"

#include <stdexcept>
#include <utility>

namespace houghton {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw InputError("matrix shape mismatch");
  IntMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& x, const IntVector& v) {
  if (x.cols() != v.size()) throw InputError("matrix-vector shape mismatch");
  IntVector out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out[i] += x(i, j) * v[j];
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact (Bareiss)
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntVector SmithForm::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& S = f.S;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    while (true) {
      // Pivot: entry of least absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs_int(S(i, j)) < abs_int(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return f;
      S.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      f.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const Int q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const Int q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with an offending entry into the pivot row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      S.add_row_multiple(t, bad, 1);
      f.U.add_row_multiple(t, bad, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
    f.rank = t + 1;
  }
  return f;
}

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw InputError("right-hand side length mismatch");
  const SmithForm f = smith_normal_form(a);
  const IntVector c = f.U * b;
  const std::size_t k = a.cols();
  IntVector y(k);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < f.rank) {
      if (c[i] % f.S(i, i) != 0) return std::nullopt;
      y[i] = c[i] / f.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  DiophantineSolution sol;
  sol.particular = f.V * y;
  for (std::size_t j = f.rank; j < k; ++j) sol.kernel.push_back(f.V.column(j));
  if (a * sol.particular != b) throw std::logic_error("Diophantine solution failed verification");
  return sol;
}

std::optional<TpSolution> feasibility_in_Tp(const std::vector<IntVector>& deltas,
                                            const IntVector& t_x, int n, int p) {
  if (n < 1 || p < 1) throw InputError("block layout needs n >= 1 and p >= 1");
  const std::size_t dim = static_cast<std::size_t>(n) * static_cast<std::size_t>(p);
  if (t_x.size() != dim) throw InputError("translation vector has wrong length");
  for (const auto& d : deltas)
    if (d.size() != dim) throw InputError("generator translation has wrong length");
  // Unknowns (alpha, a): sum alpha_i delta_i - sum_j a_j 1_{block j} = -t_x.
  const std::size_t e = deltas.size();
  IntMatrix A(dim, e + static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t r = 0; r < dim; ++r) A(r, i) = deltas[i][r];
  for (std::size_t r = 0; r < dim; ++r) A(r, e + r / static_cast<std::size_t>(p)) = -1;
  IntVector rhs(dim);
  for (std::size_t r = 0; r < dim; ++r) rhs[r] = -t_x[r];
  const auto sol = solve_diophantine(A, rhs);
  if (!sol) return std::nullopt;
  TpSolution out;
  out.alpha.assign(sol->particular.begin(), sol->particular.begin() + e);
  out.blockValues.assign(sol->particular.begin() + e, sol->particular.end());
  for (const auto& v : sol->kernel) {
    IntVector part(v.begin(), v.begin() + e);
    bool zero = true;
    for (const auto& x : part) zero = zero && x == 0;
    if (!zero) out.alphaKernel.push_back(std::move(part));
  }
  return out;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  IntMatrix m = IntMatrix::from_rows(vectors, dim);
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < m.rows(); ++col) {
    // Euclid on column `col` among rows >= row.
    while (true) {
      std::size_t piv = m.rows();
      for (std::size_t i = row; i < m.rows(); ++i)
        if (m(i, col) != 0 && (piv == m.rows() || abs_int(m(i, col)) < abs_int(m(piv, col))))
          piv = i;
      if (piv == m.rows()) break;
      m.swap_rows(row, piv);
      bool done = true;
      for (std::size_t i = row + 1; i < m.rows(); ++i) {
        m.add_row_multiple(i, row, -(m(i, col) / m(row, col)));
        if (m(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) m.negate_row(row);
    ++row;
  }
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < row; ++i) basis.push_back(m.row(i));
  return basis;
}

}  // namespace houghton

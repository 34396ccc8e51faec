#pragma once

#include "houghton/integer.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace houghton {

using IntVector = std::vector<Int>;

// Dense row-major matrix of big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t j, std::size_t k);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);  // row dst += f row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);  // throws InputError on shape
IntVector operator*(const IntMatrix& x, const IntVector& v);

// Exact determinant (fraction-free elimination). Square matrices only.
Int determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix U, S, V;  // U * A * V = S
  std::size_t rank = 0;
  IntVector diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

struct DiophantineSolution {
  IntVector particular;
  std::vector<IntVector> kernel;  // basis of {x : A x = 0}
};

// Integer solutions of A x = b.
std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a, const IntVector& b);

struct TpSolution {
  IntVector alpha;                      // coefficients of the deltas
  IntVector blockValues;                // the constant value on each block of p rays
  std::vector<IntVector> alphaKernel;   // alpha-parts of homogeneous solutions
};

// sum_i alpha_i delta_i + t_x constant on each of the n blocks of p
// consecutive coordinates.
std::optional<TpSolution> feasibility_in_Tp(const std::vector<IntVector>& deltas,
                                            const IntVector& t_x, int n, int p);

// Echelon basis of the Z-span of the given vectors (positive pivots).
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim);

}  // namespace houghton

#pragma once

#include "houghton/intlinalg.hpp"

#include <functional>
#include <map>
#include <random>

namespace houghton::testing {

// Cofactor expansion along the first row.
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Int term = m(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Int(-term);
  }
  return det;
}

// k-th determinantal divisor: gcd of all k x k minors.
inline Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
  std::vector<std::size_t> rows, cols;
  Int g = 0;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rows.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t r = start; r < a.rows(); ++r) {
      rows.push_back(r);
      pick_rows(r + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cols.size() == k) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      g = gcd_int(g, cofactor_det(m));
      return;
    }
    for (std::size_t c = start; c < a.cols(); ++c) {
      cols.push_back(c);
      pick_cols(c + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Feasibility of A x = b over the box [-B, B]^cols, meeting in the middle
// over a split of the columns.
inline bool box_feasible(const IntMatrix& a, const IntVector& b, int B) {
  const std::size_t k = a.cols();
  const std::size_t h = k / 2;
  auto sums = [&](std::size_t lo, std::size_t hi, const std::function<void(const IntVector&)>& f) {
    IntVector x(hi - lo, Int(-B));
    while (true) {
      IntVector s(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = lo; j < hi; ++j) s[i] += a(i, j) * x[j - lo];
      f(s);
      std::size_t p = 0;
      while (p < x.size() && x[p] == B) x[p++] = -B;
      if (p == x.size()) return;
      ++x[p];
    }
  };
  std::map<IntVector, bool> left;
  sums(0, h, [&](const IntVector& s) { left[s] = true; });
  bool found = false;
  sums(h, k, [&](const IntVector& s) {
    if (found) return;
    IntVector need(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) need[i] = b[i] - s[i];
    if (left.count(need)) found = true;
  });
  return found;
}

// Rank over the rationals by fraction-free elimination.
inline std::size_t rational_rank(IntMatrix m) {
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

// Whether A x = b has a solution modulo q, meeting in the middle over residues.
inline bool modular_feasible(const IntMatrix& a, const IntVector& b, int q) {
  const std::size_t k = a.cols(), h = k / 2;
  auto sums = [&](std::size_t lo, std::size_t hi, const std::function<void(const IntVector&)>& f) {
    IntVector x(hi - lo);
    while (true) {
      IntVector s(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = lo; j < hi; ++j) s[i] += a(i, j) * x[j - lo];
        s[i] = mod_floor(s[i], Int(q));
      }
      f(s);
      std::size_t p = 0;
      while (p < x.size() && x[p] == q - 1) x[p++] = 0;
      if (p == x.size()) return;
      ++x[p];
    }
  };
  std::map<IntVector, bool> left;
  sums(0, h, [&](const IntVector& s) { left[s] = true; });
  bool found = false;
  sums(h, k, [&](const IntVector& s) {
    if (found) return;
    IntVector need(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) need[i] = mod_floor(b[i] - s[i], Int(q));
    if (left.count(need)) found = true;
  });
  return found;
}

enum class Feasibility { Feasible, Infeasible, Unknown };

// Feasible when the box holds a solution. Infeasible only with a certificate:
// a rank jump over Q or no solution modulo some q <= qmax. Otherwise unknown.
inline Feasibility certified_feasibility(const IntMatrix& a, const IntVector& b, int B, int qmax) {
  if (box_feasible(a, b, B)) return Feasibility::Feasible;
  IntMatrix ab(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) ab(i, j) = a(i, j);
    ab(i, a.cols()) = b[i];
  }
  if (rational_rank(ab) > rational_rank(a)) return Feasibility::Infeasible;
  for (int q = 2; q <= qmax; ++q)
    if (!modular_feasible(a, b, q)) return Feasibility::Infeasible;
  return Feasibility::Unknown;
}

}  // namespace houghton::testing

#pragma once

#include <string>
#include <vector>

#include "detarr/polynomial.hpp"

namespace detarr {

/// Dense row-major matrix of polynomials sharing one ambient ring.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int ambient);
  static PolyMatrix from_rows(int ambient, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix identity(int size, int ambient);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int ambient() const { return ambient_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, Polynomial p);

  bool is_diagonal() const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  void swap_rows(int a, int b);

  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const;

  int rows_;
  int cols_;
  int ambient_;
  std::vector<Polynomial> entries_;
};

/// Fraction-free (Bareiss) elimination; every division is exact.
Polynomial det_bareiss(const PolyMatrix& m);

inline constexpr int kCofactorMaxSize = 6;

/// Laplace expansion along the first row. Independent oracle for
/// det_bareiss; refuses matrices larger than kCofactorMaxSize.
Polynomial det_cofactor(const PolyMatrix& m);

/// det([[a1, a2], [a3, a4]]) computed as det(a1*a4 - a3*a2). Requires equal
/// square blocks with a1 and a3 diagonal and nonzero on the diagonal.
Polynomial det_block_diag(const PolyMatrix& a1, const PolyMatrix& a2, const PolyMatrix& a3,
                          const PolyMatrix& a4);

/// Stacks four equal square blocks into [[a1, a2], [a3, a4]].
PolyMatrix assemble_blocks(const PolyMatrix& a1, const PolyMatrix& a2, const PolyMatrix& a3,
                           const PolyMatrix& a4);

/// Integer matrix obtained by evaluating every entry at a point.
std::vector<std::vector<Integer>> eval_matrix(const PolyMatrix& m, const Point& point);

/// Exact integer determinant by fraction-free elimination.
Integer det_integer(std::vector<std::vector<Integer>> m);

/// Elementary symmetric polynomial of degree k in z_i..z_n with z_j
/// omitted. z_s is modelled by x_s of the ambient ring.
Polynomial sym_poly(int i, int j, int k, int n);

/// The (n+1-i) x (n+1-i) matrix (sym_poly(i, j, k, n)) with row j in
/// [i, n] and column k in [0, n-i].
PolyMatrix sym_poly_matrix(int i, int n);

}  // namespace detarr

#include "detarr/polymatrix.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace detarr {

PolyMatrix::PolyMatrix(int rows, int cols, int ambient)
    : rows_(rows), cols_(cols), ambient_(ambient) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Polynomial(ambient));
}

PolyMatrix PolyMatrix::from_rows(int ambient, const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), ambient);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

PolyMatrix PolyMatrix::identity(int size, int ambient) {
  PolyMatrix m(size, size, ambient);
  for (int i = 0; i < size; ++i) m.set(i, i, Polynomial::constant(ambient, 1));
  return m;
}

std::size_t PolyMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(r) * cols_ + c;
}

void PolyMatrix::set(int r, int c, Polynomial p) {
  if (p.ambient() != ambient_) throw std::invalid_argument("matrix entry ambient mismatch");
  entries_[index(r, c)] = std::move(p);
}

bool PolyMatrix::is_diagonal() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (r != c && !at(r, c).is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || ambient_ != o.ambient_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix r(rows_, o.cols_, ambient_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      Polynomial s(ambient_);
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        s += at(i, k) * o.at(k, j);
      }
      r.set(i, j, std::move(s));
    }
  }
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ambient_ != o.ambient_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

void PolyMatrix::swap_rows(int a, int b) {
  for (int c = 0; c < cols_; ++c) std::swap(entries_[index(a, c)], entries_[index(b, c)]);
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[";
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

namespace {

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  }
}

}  // namespace

Polynomial det_bareiss(const PolyMatrix& input) {
  require_square(input);
  const int n = input.rows();
  PolyMatrix a = input;
  bool negate = false;
  Polynomial prev = Polynomial::constant(a.ambient(), 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int r = k + 1;
      while (r < n && a.at(r, k).is_zero()) ++r;
      // A zero pivot column below row k makes the cofactor expansion along
      // that column vanish term by term.
      if (r == n) return Polynomial(a.ambient());
      a.swap_rows(k, r);
      negate = !negate;
    }
    const Polynomial pivot = a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Polynomial lead = a.at(i, k);
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = pivot * a.at(i, j);
        if (!lead.is_zero() && !a.at(k, j).is_zero()) num -= lead * a.at(k, j);
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        a.set(i, j, std::move(*q));
      }
      a.set(i, k, Polynomial(a.ambient()));
    }
    prev = pivot;
  }
  Polynomial d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

Polynomial det_cofactor(const PolyMatrix& m) {
  require_square(m);
  if (m.rows() > kCofactorMaxSize) {
    throw std::invalid_argument("det_cofactor limited to " + std::to_string(kCofactorMaxSize) + "x" +
                                std::to_string(kCofactorMaxSize) + " matrices");
  }
  const int n = m.rows();
  std::vector<int> rows(n), cols(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);

  std::function<Polynomial(std::size_t, std::vector<int>&)> expand = [&](std::size_t depth,
                                                                         std::vector<int>& free_cols) {
    if (free_cols.empty()) return Polynomial::constant(m.ambient(), 1);
    Polynomial total(m.ambient());
    const int row = rows[depth];
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
      const Polynomial& entry = m.at(row, free_cols[c]);
      if (entry.is_zero()) continue;
      std::vector<int> rest = free_cols;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c));
      Polynomial minor = entry * expand(depth + 1, rest);
      if (c % 2 == 0) {
        total += minor;
      } else {
        total -= minor;
      }
    }
    return total;
  };
  return expand(0, cols);
}

PolyMatrix assemble_blocks(const PolyMatrix& a1, const PolyMatrix& a2, const PolyMatrix& a3,
                           const PolyMatrix& a4) {
  const int k = a1.rows();
  for (const PolyMatrix* b : {&a1, &a2, &a3, &a4}) {
    if (!b->is_square() || b->rows() != k || b->ambient() != a1.ambient()) {
      throw std::invalid_argument("blocks must be square, of equal size and share the ambient ring");
    }
  }
  PolyMatrix out(2 * k, 2 * k, a1.ambient());
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      out.set(r, c, a1.at(r, c));
      out.set(r, c + k, a2.at(r, c));
      out.set(r + k, c, a3.at(r, c));
      out.set(r + k, c + k, a4.at(r, c));
    }
  }
  return out;
}

Polynomial det_block_diag(const PolyMatrix& a1, const PolyMatrix& a2, const PolyMatrix& a3,
                          const PolyMatrix& a4) {
  const int k = a1.rows();
  for (const PolyMatrix* b : {&a1, &a2, &a3, &a4}) {
    if (!b->is_square() || b->rows() != k || b->ambient() != a1.ambient()) {
      throw std::invalid_argument("blocks must be square, of equal size and share the ambient ring");
    }
  }
  if (!a1.is_diagonal() || !a3.is_diagonal()) throw std::invalid_argument("a1 and a3 must be diagonal");
  for (int i = 0; i < k; ++i) {
    if (a1.at(i, i).is_zero() || a3.at(i, i).is_zero()) {
      throw std::invalid_argument("a1 and a3 need nonzero diagonal entries");
    }
  }
  return det_bareiss(a1 * a4 - a3 * a2);
}

std::vector<std::vector<Integer>> eval_matrix(const PolyMatrix& m, const Point& point) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out[r][c] = eval(m.at(r, c), point);
  }
  return out;
}

Integer det_integer(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("determinant of non-square integer matrix");
  }
  bool negate = false;
  Integer prev = 1, num, t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(num.get_mpz_t(), a[k][k].get_mpz_t(), a[i][j].get_mpz_t());
        mpz_mul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        num -= t;
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return negate ? Integer(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

Polynomial sym_poly(int i, int j, int k, int n) {
  check_ambient(n);
  if (i < 1 || i > j || j > n) throw std::invalid_argument("sym_poly requires 1 <= i <= j <= n");
  if (k < 0 || k > n - i) throw std::invalid_argument("sym_poly degree outside [0, n-i]");
  std::vector<int> pool;
  for (int s = i; s <= n; ++s) {
    if (s != j) pool.push_back(s);
  }
  Polynomial total(n);
  if (k > static_cast<int>(pool.size())) return total;
  // Walk the k-subsets of pool in lexicographic order.
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  const int m = static_cast<int>(pool.size());
  while (true) {
    Monomial mono;
    for (int p : pick) mono = mono * Monomial::of(VarId::x(pool[p]));
    total += Polynomial::monomial(n, mono, 1);
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  return total;
}

PolyMatrix sym_poly_matrix(int i, int n) {
  check_ambient(n);
  if (i < 1 || i > n) throw std::invalid_argument("sym_poly_matrix requires 1 <= i <= n");
  const int size = n + 1 - i;
  PolyMatrix m(size, size, n);
  for (int j = i; j <= n; ++j) {
    for (int k = 0; k <= n - i; ++k) m.set(j - i, k, sym_poly(i, j, k, n));
  }
  return m;
}

}  // namespace detarr

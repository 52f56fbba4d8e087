#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over the variables x1..xn, y1..yn of a generic 2 x n matrix.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace detarr {

using Integer = mpz_class;

/// Largest supported column count. Monomials store one exponent byte per
/// variable, so the ring has at most 2 * kMaxColumns variables.
inline constexpr int kMaxColumns = 16;

enum class VarKind : std::uint8_t { X, Y };

/// A ring variable: x_index or y_index, index is 1-based.
struct VarId {
  VarKind kind = VarKind::X;
  int index = 1;

  static constexpr VarId x(int i) { return {VarKind::X, i}; }
  static constexpr VarId y(int i) { return {VarKind::Y, i}; }

  /// Storage slot; the canonical variable order is x1 < y1 < x2 < y2 < ...
  constexpr int slot() const { return 2 * (index - 1) + (kind == VarKind::Y ? 1 : 0); }
  static constexpr VarId from_slot(int s) {
    return {(s % 2) ? VarKind::Y : VarKind::X, s / 2 + 1};
  }

  std::string name() const;

  friend constexpr bool operator==(VarId, VarId) = default;
};

class Monomial {
 public:
  static constexpr int kSlots = 2 * kMaxColumns;

  Monomial() = default;
  static Monomial of(VarId v, int power = 1);

  int exponent(VarId v) const { return exps_[v.slot()]; }
  int exponent_at_slot(int s) const { return exps_[s]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Product; throws std::overflow_error if a single exponent exceeds 255.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this, assuming divides(o).
  Monomial cofactor_in(const Monomial& o) const;
  /// Lower the exponent of v by one (v must occur).
  Monomial without_one(VarId v) const;

  /// Highest slot with a nonzero exponent, -1 for the unit monomial.
  int top_slot() const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint8_t, kSlots> exps_{};
  std::uint16_t degree_ = 0;
};

/// Graded reverse-lexicographic order with x1 < y1 < x2 < y2 < ...
/// Returns true when a is strictly greater than b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

struct Term {
  Monomial monomial;
  Integer coeff;
};

/// Element of Z[x1..xn, y1..yn]. Terms are kept sorted by descending
/// grevlex order with nonzero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(int ambient = 0);
  static Polynomial constant(int ambient, const Integer& c);
  static Polynomial variable(int ambient, VarId v);
  static Polynomial monomial(int ambient, const Monomial& m, const Integer& c);

  int ambient() const { return ambient_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term when is_constant(); throws otherwise.
  Integer constant_value() const;
  /// Total degree, nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading_term() const;
  Integer coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial scaled(const Integer& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  std::string to_string() const;

 private:
  friend class PolynomialBuilder;
  int ambient_ = 0;
  std::vector<Term> terms_;
};

/// Accumulates terms in any order and produces a canonical polynomial.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(int ambient) : ambient_(ambient) {}
  void add(const Monomial& m, const Integer& c);
  Polynomial build() &&;

 private:
  int ambient_;
  std::map<Monomial, Integer, GrevlexGreater> acc_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// q with q * d == p exactly over Z, or nullopt when d does not divide p.
/// Throws std::domain_error when d is zero.
std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& d);

Polynomial partial_derivative(const Polynomial& p, VarId v);

/// Assignment of integer values to ring variables.
class Point {
 public:
  Point() = default;
  void set(VarId v, Integer value);
  const Integer* find(VarId v) const;

 private:
  std::array<std::optional<Integer>, Monomial::kSlots> values_{};
};

/// Exact value at a point; throws std::invalid_argument naming the first
/// occurring variable the point leaves unassigned.
Integer eval(const Polynomial& p, const Point& point);

/// Parses integers, x<i>, y<i>, + - * ^ and parentheses. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, int ambient);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

void check_ambient(int ambient);
void require_same_ambient(const Polynomial& a, const Polynomial& b);

}  // namespace detarr

template <>
struct std::hash<detarr::Monomial> {
  std::size_t operator()(const detarr::Monomial& m) const { return m.hash(); }
};

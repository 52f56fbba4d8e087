#pragma once

// Logarithmic derivations of determinantal arrangements and Saito's
// criterion.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detarr/arrangement.hpp"
#include "detarr/polymatrix.hpp"
#include "detarr/polynomial.hpp"

namespace detarr {

/// Vector field sum_i g_i d/dx_i + h_i d/dy_i with polynomial coefficients.
class Derivation {
 public:
  explicit Derivation(int ambient = 0);
  /// The coordinate field d/dv.
  static Derivation partial(int ambient, VarId v);

  int ambient() const { return ambient_; }
  const Polynomial& coeff(VarId v) const;
  void set(VarId v, Polynomial p);

  bool is_zero() const;
  /// Largest coefficient degree, nullopt for the zero field.
  std::optional<int> degree() const;
  /// Every nonzero coefficient is homogeneous of one common degree.
  bool is_homogeneous() const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  Derivation scaled(const Polynomial& p) const;
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend bool operator==(const Derivation& a, const Derivation& b) = default;

  /// `(p)*d/dx1 + ...`, accepted back by parse_derivation.
  std::string to_string() const;

 private:
  int ambient_;
  std::vector<Polynomial> coeffs_;  // indexed by VarId::slot()
};

/// d(p) = sum g_i dp/dx_i + h_i dp/dy_i.
Polynomial apply(const Derivation& d, const Polynomial& p);

/// d(f) lies in the principal ideal (f). Throws std::domain_error if f = 0.
bool is_logarithmic(const Derivation& d, const Polynomial& f);

struct EdgeMembership {
  Edge edge;
  std::optional<Polynomial> quotient;  // d(minor) / minor when divisible

  bool passes() const { return quotient.has_value(); }
};

/// Membership of d(minor(i, j)) in (minor(i, j)) for every edge. All edges
/// passing implies d is logarithmic for the product by the Leibniz rule.
std::vector<EdgeMembership> is_logarithmic_componentwise(const Derivation& d, const Arrangement& a);

/// Symmetric coefficient of the degree n+1 basis fields: the sum over
/// m-subsets S of T = {4..n} \ {k} of prod_{s in S} x_s * prod_{t in T\S} y_t.
Polynomial a_coeff(int m, int k, int n);

/// Explicit basis of the logarithmic derivations of the complete-graph
/// arrangement, in column order beta, alpha, gamma, theta_1..theta_n,
/// phi_0..phi_{n-4}:
///   alpha = sum x_k d/dy_k, beta = sum y_k d/dx_k, gamma = sum y_k d/dy_k,
///   theta_k = x_k d/dx_k + y_k d/dy_k,
///   phi_m = sum_{k>=4} a_coeff(m,k,n) minor(2,k) minor(3,k) (x_1 d/dx_k + y_1 d/dy_k).
std::vector<Derivation> std_basis(int n);
std::vector<std::string> std_basis_names(int n);

/// 2n x 2n coefficient matrix: row i < n holds the d/dx_{i+1} coefficients,
/// row n+i the d/dy_{i+1} ones; column j is derivation j.
PolyMatrix saito_matrix(std::span<const Derivation> ds);

enum class SaitoMode { Symbolic, Randomized };

struct RandomizedOptions {
  std::uint64_t seed = 0;
  int points = 32;                 // comparison points besides the reference point
  long long coordinate_bound = 1000000;
  int threads = 1;
  int max_resamples = 64;
};

struct SaitoReport {
  SaitoMode mode = SaitoMode::Symbolic;
  std::optional<Polynomial> determinant;  // symbolic mode only
  Polynomial f;
  int f_degree = 0;
  std::optional<int> determinant_degree;  // exact, or structural in randomized mode
  bool basis = false;
  Integer c_num = 0;  // det = (c_num / c_den) * f, c_den > 0
  Integer c_den = 1;
  std::string reason;  // why the verdict failed, empty on success

  // Randomized mode.
  std::uint64_t seed = 0;
  std::vector<std::vector<Integer>> sample_points;  // reference point first; x1,y1,x2,y2,...
  double failure_bound = 0.0;  // Schwartz-Zippel bound on a false Basis verdict

  double seconds = 0.0;

  Integer abs_c_num() const { return abs(c_num); }
};

/// Saito's criterion: the 2n derivations form a basis of Der(-log f) iff
/// det(saito_matrix) is a nonzero constant multiple of f. The derivations
/// are assumed logarithmic; this only checks the determinant.
SaitoReport saito_check(std::span<const Derivation> ds, const Polynomial& f, SaitoMode mode,
                        const RandomizedOptions& options = {});

/// One derivation per non-empty, non-comment line.
Derivation parse_derivation(std::string_view text, int ambient);
std::vector<Derivation> parse_derivations(std::string_view text, int ambient);

}  // namespace detarr

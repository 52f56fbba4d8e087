#pragma once

// Poincare polynomials of determinantal arrangement complements, kept in
// factored form.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "detarr/graph.hpp"
#include "detarr/polynomial.hpp"

namespace detarr {

/// Dense univariate integer polynomial in t; coeffs[i] multiplies t^i.
class UniPoly {
 public:
  UniPoly() : coeffs_{1} {}
  explicit UniPoly(std::vector<Integer> coeffs);
  /// 1 + b t
  static UniPoly linear(const Integer& b);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;
  friend bool operator<(const UniPoly& a, const UniPoly& b);

  /// e.g. "1+2t+t^3"
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Product of factors with multiplicities. Equal factors are merged, unit
/// factors dropped, and factors sorted by descending degree so the printed
/// form is canonical; comparisons still go through expand().
class FactoredUniPoly {
 public:
  FactoredUniPoly() = default;

  void multiply(const UniPoly& factor, int multiplicity = 1);
  void multiply(const FactoredUniPoly& other);

  const std::vector<std::pair<UniPoly, int>>& factors() const { return factors_; }
  UniPoly expand() const;

  int linear_factor_count() const;
  bool has_cubic_factor() const;

  /// e.g. "(1+t^3)(1+t)^4(1+2t)", "1" when empty.
  std::string to_string() const;

 private:
  std::vector<std::pair<UniPoly, int>> factors_;
};

/// prod_i (1 + b_i t)
FactoredUniPoly terao_poincare(const std::vector<int>& degrees);

/// (1+t^3)(1+t)^(n-1) prod_{k=1}^{n-2} (1+kt) for the complete graph K_n.
FactoredUniPoly poincare_complete(int n);

/// Fibration product along chordal_build_order, multiplied over connected
/// components. In a component with edges, the second vertex contributes
/// (1+t^3)(1+t) and every later vertex with d earlier neighbours
/// (1+t)(1+(d-1)t). Isolated vertices contribute 1. Throws NotChordalError.
FactoredUniPoly poincare_chordal(const Graph& g);

/// Betti numbers: coefficients of the expanded product.
std::vector<Integer> betti(const FactoredUniPoly& p);

struct HomotopyReport {
  std::string pi1 = "not computed (extension data only)";
  std::string pi2 = "0";
  std::string pi_higher = "pi_i(S^3) for i >= 3";
};

/// Higher homotopy groups of the complement; only defined for chordal
/// graphs. Throws NotChordalError.
HomotopyReport homotopy_report(const Graph& g);

/// {"factored": [[coeffs, mult], ...], "expanded": [...],
///  "linear_term_count": int, "cubic_present": bool}
nlohmann::json poincare_json(const FactoredUniPoly& p);

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json integer_json(const Integer& v);

}  // namespace detarr

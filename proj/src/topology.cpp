#include "detarr/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace detarr {

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::linear(const Integer& b) { return UniPoly({1, b}); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return UniPoly(std::vector<Integer>{});
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                                      [](const Integer& x, const Integer& y) { return x < y; });
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (!out.empty()) {
      out += negative ? "-" : "+";
    } else if (negative) {
      out += "-";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

void FactoredUniPoly::multiply(const UniPoly& factor, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative factor multiplicity");
  if (multiplicity == 0 || factor.is_one()) return;
  auto it = std::find_if(factors_.begin(), factors_.end(), [&](const auto& f) { return f.first == factor; });
  if (it != factors_.end()) {
    it->second += multiplicity;
    return;
  }
  factors_.emplace_back(factor, multiplicity);
  std::sort(factors_.begin(), factors_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

void FactoredUniPoly::multiply(const FactoredUniPoly& other) {
  for (const auto& [f, mult] : other.factors_) multiply(f, mult);
}

UniPoly FactoredUniPoly::expand() const {
  UniPoly out;
  for (const auto& [f, mult] : factors_) {
    for (int k = 0; k < mult; ++k) out = out * f;
  }
  return out;
}

int FactoredUniPoly::linear_factor_count() const {
  int count = 0;
  for (const auto& [f, mult] : factors_) {
    if (f.degree() == 1) count += mult;
  }
  return count;
}

bool FactoredUniPoly::has_cubic_factor() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.first.degree() == 3; });
}

std::string FactoredUniPoly::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [f, mult] : factors_) {
    out += "(" + f.to_string() + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

FactoredUniPoly terao_poincare(const std::vector<int>& degrees) {
  FactoredUniPoly p;
  for (int b : degrees) {
    if (b < 0) throw std::invalid_argument("terao_poincare: negative degree");
    p.multiply(UniPoly::linear(b));
  }
  return p;
}

namespace {

const UniPoly& sphere3() {
  static const UniPoly s({1, 0, 0, 1});
  return s;
}

}  // namespace

FactoredUniPoly poincare_complete(int n) {
  if (n < 2) throw std::invalid_argument("poincare_complete requires n >= 2");
  FactoredUniPoly p;
  p.multiply(sphere3());
  p.multiply(UniPoly::linear(1), n - 1);
  for (int k = 1; k <= n - 2; ++k) p.multiply(UniPoly::linear(k));
  return p;
}

FactoredUniPoly poincare_chordal(const Graph& g) {
  const BuildOrder build = chordal_build_order(g);
  FactoredUniPoly p;
  bool component_started = false;  // current component already has an edge
  for (std::size_t k = 0; k < build.order.size(); ++k) {
    const int d = build.earlier_degree[k];
    if (d == 0) {
      // New component (or isolated vertex): its first column is free.
      component_started = false;
      continue;
    }
    if (!component_started) {
      // Second column of a component: GL(2)-like complement, S^3 x S^1.
      if (d != 1) throw std::logic_error("build order entered a component through a vertex with d > 1");
      p.multiply(sphere3());
      p.multiply(UniPoly::linear(1));
      component_started = true;
      continue;
    }
    // Fibre: the plane minus d distinct lines through the origin.
    p.multiply(UniPoly::linear(1));
    p.multiply(UniPoly::linear(d - 1));
  }
  return p;
}

std::vector<Integer> betti(const FactoredUniPoly& p) { return p.expand().coeffs(); }

HomotopyReport homotopy_report(const Graph& g) {
  ChordalityVerdict verdict = is_chordal(g);
  if (!verdict.chordal()) throw NotChordalError(verdict.witness);
  return HomotopyReport{};
}

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return nlohmann::json(v.get_si());
  return nlohmann::json(v.get_str());
}

nlohmann::json poincare_json(const FactoredUniPoly& p) {
  nlohmann::json factored = nlohmann::json::array();
  for (const auto& [f, mult] : p.factors()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(integer_json(c));
    factored.push_back(nlohmann::json::array({coeffs, mult}));
  }
  nlohmann::json expanded = nlohmann::json::array();
  for (const auto& c : betti(p)) expanded.push_back(integer_json(c));
  return {
      {"factored", factored},
      {"expanded", expanded},
      {"linear_term_count", p.linear_factor_count()},
      {"cubic_present", p.has_cubic_factor()},
  };
}

}  // namespace detarr

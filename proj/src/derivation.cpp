#include "detarr/derivation.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "expression.hpp"

namespace detarr {

Derivation::Derivation(int ambient) : ambient_(ambient) {
  check_ambient(ambient);
  coeffs_.assign(2 * ambient, Polynomial(ambient));
}

Derivation Derivation::partial(int ambient, VarId v) {
  Derivation d(ambient);
  d.set(v, Polynomial::constant(ambient, 1));
  return d;
}

const Polynomial& Derivation::coeff(VarId v) const {
  if (v.index < 1 || v.index > ambient_) throw std::out_of_range("derivation variable out of range");
  return coeffs_[v.slot()];
}

void Derivation::set(VarId v, Polynomial p) {
  if (v.index < 1 || v.index > ambient_) throw std::out_of_range("derivation variable out of range");
  if (p.ambient() != ambient_) throw std::invalid_argument("derivation coefficient ambient mismatch");
  coeffs_[v.slot()] = std::move(p);
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> Derivation::degree() const {
  std::optional<int> best;
  for (const auto& p : coeffs_) {
    if (auto d = p.degree(); d && (!best || *d > *best)) best = d;
  }
  return best;
}

bool Derivation::is_homogeneous() const {
  std::optional<int> common;
  for (const auto& p : coeffs_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    if (common && *common != *p.degree()) return false;
    common = p.degree();
  }
  return true;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (o.ambient_ != ambient_) throw std::invalid_argument("derivation ambient mismatch");
  for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] += o.coeffs_[s];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  if (o.ambient_ != ambient_) throw std::invalid_argument("derivation ambient mismatch");
  for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] -= o.coeffs_[s];
  return *this;
}

Derivation Derivation::scaled(const Polynomial& p) const {
  Derivation r(ambient_);
  for (std::size_t s = 0; s < coeffs_.size(); ++s) r.coeffs_[s] = p * coeffs_[s];
  return r;
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[s].to_string() + ")*d/d" + VarId::from_slot(static_cast<int>(s)).name();
  }
  return out.empty() ? "0" : out;
}

Polynomial apply(const Derivation& d, const Polynomial& p) {
  require_same_ambient(Polynomial(d.ambient()), p);
  Polynomial out(p.ambient());
  for (int i = 1; i <= d.ambient(); ++i) {
    for (VarId v : {VarId::x(i), VarId::y(i)}) {
      const Polynomial& g = d.coeff(v);
      if (g.is_zero()) continue;
      Polynomial dp = partial_derivative(p, v);
      if (!dp.is_zero()) out += g * dp;
    }
  }
  return out;
}

bool is_logarithmic(const Derivation& d, const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("is_logarithmic: f must be nonzero");
  return exact_div(apply(d, f), f).has_value();
}

std::vector<EdgeMembership> is_logarithmic_componentwise(const Derivation& d, const Arrangement& a) {
  if (d.ambient() != a.columns()) throw std::invalid_argument("derivation and arrangement ambient differ");
  std::vector<EdgeMembership> out;
  out.reserve(a.graph().edge_count());
  for (const Edge& e : a.graph().edges()) {
    const Polynomial m = minor(e.first, e.second, a.columns());
    out.push_back({e, exact_div(apply(d, m), m)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// The explicit basis for the complete graph

Polynomial a_coeff(int m, int k, int n) {
  check_ambient(n);
  if (n < 4 || k < 4 || k > n || m < 0 || m > n - 4) {
    throw std::invalid_argument("a_coeff requires n >= 4, 4 <= k <= n, 0 <= m <= n-4");
  }
  std::vector<int> pool;
  for (int s = 4; s <= n; ++s) {
    if (s != k) pool.push_back(s);
  }
  const int size = static_cast<int>(pool.size());
  PolynomialBuilder acc(n);
  // Subsets of pool with exactly m members take x, the rest take y.
  for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
    if (std::popcount(mask) != m) continue;
    Monomial mono;
    for (int b = 0; b < size; ++b) {
      mono = mono * Monomial::of((mask >> b) & 1u ? VarId::x(pool[b]) : VarId::y(pool[b]));
    }
    acc.add(mono, 1);
  }
  return std::move(acc).build();
}

std::vector<Derivation> std_basis(int n) {
  check_ambient(n);
  if (n < 3) throw std::invalid_argument("std_basis requires n >= 3");
  auto var = [n](VarId v) { return Polynomial::variable(n, v); };

  Derivation alpha(n), beta(n), gamma(n);
  for (int k = 1; k <= n; ++k) {
    alpha.set(VarId::y(k), var(VarId::x(k)));
    beta.set(VarId::x(k), var(VarId::y(k)));
    gamma.set(VarId::y(k), var(VarId::y(k)));
  }
  std::vector<Derivation> basis{beta, alpha, gamma};
  for (int k = 1; k <= n; ++k) {
    Derivation theta(n);
    theta.set(VarId::x(k), var(VarId::x(k)));
    theta.set(VarId::y(k), var(VarId::y(k)));
    basis.push_back(std::move(theta));
  }
  const Polynomial x1 = var(VarId::x(1));
  const Polynomial y1 = var(VarId::y(1));
  for (int m = 0; m <= n - 4; ++m) {
    Derivation phi(n);
    for (int k = 4; k <= n; ++k) {
      const Polynomial weight = a_coeff(m, k, n) * minor(2, k, n) * minor(3, k, n);
      phi.set(VarId::x(k), weight * x1);
      phi.set(VarId::y(k), weight * y1);
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

std::vector<std::string> std_basis_names(int n) {
  if (n < 3) throw std::invalid_argument("std_basis requires n >= 3");
  std::vector<std::string> names{"beta", "alpha", "gamma"};
  for (int k = 1; k <= n; ++k) names.push_back("theta" + std::to_string(k));
  for (int m = 0; m <= n - 4; ++m) names.push_back("phi" + std::to_string(m));
  return names;
}

PolyMatrix saito_matrix(std::span<const Derivation> ds) {
  if (ds.empty()) throw std::invalid_argument("saito_matrix needs derivations");
  const int n = ds.front().ambient();
  if (static_cast<int>(ds.size()) != 2 * n) {
    throw std::invalid_argument("saito_matrix needs exactly 2n = " + std::to_string(2 * n) + " derivations, got " +
                                std::to_string(ds.size()));
  }
  PolyMatrix m(2 * n, 2 * n, n);
  for (int j = 0; j < 2 * n; ++j) {
    if (ds[j].ambient() != n) throw std::invalid_argument("derivations do not share an ambient ring");
    for (int i = 1; i <= n; ++i) {
      m.set(i - 1, j, ds[j].coeff(VarId::x(i)));
      m.set(n + i - 1, j, ds[j].coeff(VarId::y(i)));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Saito's criterion

namespace {

void reduce(Integer& num, Integer& den) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
}

void saito_symbolic(const PolyMatrix& m, SaitoReport& report) {
  Polynomial det = det_bareiss(m);
  report.determinant_degree = det.degree();
  report.determinant = det;
  if (det.is_zero()) {
    report.reason = "determinant is identically zero";
    return;
  }
  const Term& lt_det = det.leading_term();
  const Term& lt_f = report.f.leading_term();
  if (!(lt_det.monomial == lt_f.monomial)) {
    report.reason = "determinant is not a constant multiple of f (leading monomials differ)";
    return;
  }
  Integer num = lt_det.coeff;
  Integer den = lt_f.coeff;
  reduce(num, den);
  // det = (num/den) f  <=>  den*det is divisible by f with constant quotient num.
  auto q = exact_div(det.scaled(den), report.f);
  if (!q || !q->is_constant() || q->constant_value() != num) {
    report.reason = "determinant is not a constant multiple of f";
    return;
  }
  report.c_num = num;
  report.c_den = den;
  report.basis = true;
}

void saito_randomized(const PolyMatrix& m, std::span<const Derivation> ds, const RandomizedOptions& opt,
                      SaitoReport& report) {
  const int n = m.ambient();
  report.seed = opt.seed;
  if (opt.points < 1) throw std::invalid_argument("randomized Saito check needs at least one point");

  // Each homogeneous column contributes its degree, so det is homogeneous
  // of the summed degree (or zero).
  int structural = 0;
  for (const auto& d : ds) {
    if (d.is_zero()) {
      report.determinant_degree.reset();
      report.reason = "a derivation is zero, so the determinant vanishes";
      return;
    }
    if (!d.is_homogeneous()) {
      report.reason = "derivation coefficients are not homogeneous; no structural degree check";
      return;
    }
    structural += *d.degree();
  }
  report.determinant_degree = structural;

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long long> coord(-opt.coordinate_bound, opt.coordinate_bound);
  auto draw = [&] {
    std::vector<Integer> values(2 * n);
    for (auto& v : values) v = Integer(std::to_string(coord(rng)));
    return values;
  };
  auto to_point = [n](const std::vector<Integer>& values) {
    Point p;
    for (int i = 1; i <= n; ++i) {
      p.set(VarId::x(i), values[VarId::x(i).slot()]);
      p.set(VarId::y(i), values[VarId::y(i).slot()]);
    }
    return p;
  };

  std::vector<Integer> reference;
  Integer f_ref;
  int attempts = 0;
  do {
    if (attempts++ == opt.max_resamples) {
      throw std::runtime_error("randomized Saito check: every sampled point lies on V(f)");
    }
    reference = draw();
    f_ref = eval(report.f, to_point(reference));
  } while (f_ref == 0);

  report.sample_points.push_back(reference);
  for (int k = 0; k < opt.points; ++k) report.sample_points.push_back(draw());

  // Points are drawn up front so the schedule cannot affect the report.
  const std::size_t total = report.sample_points.size();
  std::vector<Integer> det_values(total), f_values(total);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const Point p = to_point(report.sample_points[k]);
      det_values[k] = det_integer(eval_matrix(m, p));
      f_values[k] = eval(report.f, p);
    }
  };
  const std::size_t threads = static_cast<std::size_t>(std::max(1, opt.threads));
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (std::size_t b = 0; b < total; b += chunk) {
      jobs.push_back(std::async(std::launch::async, work, b, std::min(total, b + chunk)));
    }
    for (auto& j : jobs) j.get();
  }

  const double domain = 2.0 * static_cast<double>(opt.coordinate_bound) + 1.0;
  const int degree_bound = std::max(structural, report.f_degree);
  report.failure_bound = std::pow(std::min(1.0, degree_bound / domain), opt.points);

  if (structural != report.f_degree) {
    report.reason = "structural determinant degree " + std::to_string(structural) + " differs from deg f = " +
                    std::to_string(report.f_degree);
    return;
  }
  Integer num = det_values[0];
  Integer den = f_values[0];
  if (num == 0) {
    report.reason = "determinant vanishes at the reference point";
    return;
  }
  reduce(num, den);
  for (std::size_t k = 1; k < total; ++k) {
    if (den * det_values[k] != num * f_values[k]) {
      report.reason = "det / f is not constant across sample points";
      return;
    }
  }
  report.c_num = num;
  report.c_den = den;
  report.basis = true;
}

}  // namespace

SaitoReport saito_check(std::span<const Derivation> ds, const Polynomial& f, SaitoMode mode,
                        const RandomizedOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (f.is_zero()) throw std::domain_error("saito_check: f must be nonzero");
  const PolyMatrix m = saito_matrix(ds);
  if (f.ambient() != m.ambient()) throw std::invalid_argument("f and derivations have different ambient rings");

  SaitoReport report;
  report.mode = mode;
  report.f = f;
  report.f_degree = *f.degree();
  if (mode == SaitoMode::Symbolic) {
    saito_symbolic(m, report);
  } else {
    saito_randomized(m, ds, options, report);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Derivation parse_derivation(std::string_view text, int ambient) {
  detail::ParsedExpr e = detail::parse_expression(text, ambient);
  if (!e.scalar.is_zero()) throw ParseError("derivation has a term without d/dx<i> or d/dy<i>", 0);
  Derivation d(ambient);
  if (e.has_field) {
    for (int s = 0; s < 2 * ambient; ++s) d.set(VarId::from_slot(s), std::move(e.field[s]));
  }
  return d;
}

std::vector<Derivation> parse_derivations(std::string_view text, int ambient) {
  std::vector<Derivation> out;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_derivation(line, ambient));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

}  // namespace detarr

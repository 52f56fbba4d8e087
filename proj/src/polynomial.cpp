#include "detarr/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "expression.hpp"

namespace detarr {

std::string VarId::name() const {
  return (kind == VarKind::X ? "x" : "y") + std::to_string(index);
}

void check_ambient(int ambient) {
  if (ambient < 0 || ambient > kMaxColumns) {
    throw std::invalid_argument("ambient column count " + std::to_string(ambient) +
                                " outside [0, " + std::to_string(kMaxColumns) + "]");
  }
}

void require_same_ambient(const Polynomial& a, const Polynomial& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument("ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                                std::to_string(b.ambient()));
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(VarId v, int power) {
  if (v.index < 1 || v.index > kMaxColumns) throw std::invalid_argument("variable index out of range");
  if (power < 0 || power > 255) throw std::overflow_error("exponent out of range");
  Monomial m;
  m.exps_[v.slot()] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) {
    const int e = exps_[s] + o.exps_[s];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exps_[s] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] > o.exps_[s]) return false;
  }
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& o) const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) r.exps_[s] = static_cast<std::uint8_t>(o.exps_[s] - exps_[s]);
  r.degree_ = static_cast<std::uint16_t>(o.degree_ - degree_);
  return r;
}

Monomial Monomial::without_one(VarId v) const {
  Monomial r = *this;
  --r.exps_[v.slot()];
  --r.degree_;
  return r;
}

int Monomial::top_slot() const {
  for (int s = kSlots - 1; s >= 0; --s) {
    if (exps_[s] != 0) return s;
  }
  return -1;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  // Ties are broken at the smallest variable (x1 first): the monomial with
  // the smaller exponent there is the larger one.
  for (int s = 0; s < Monomial::kSlots; ++s) {
    const int ea = a.exponent_at_slot(s);
    const int eb = b.exponent_at_slot(s);
    if (ea != eb) return ea < eb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(int ambient) : ambient_(ambient) { check_ambient(ambient); }

Polynomial Polynomial::constant(int ambient, const Integer& c) {
  return monomial(ambient, Monomial{}, c);
}

Polynomial Polynomial::variable(int ambient, VarId v) {
  if (v.index < 1 || v.index > ambient) {
    throw std::invalid_argument("variable " + v.name() + " outside ambient n=" + std::to_string(ambient));
  }
  return monomial(ambient, Monomial::of(v), 1);
}

Polynomial Polynomial::monomial(int ambient, const Monomial& m, const Integer& c) {
  Polynomial p(ambient);
  if (m.top_slot() >= 2 * ambient) throw std::invalid_argument("monomial outside ambient ring");
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Integer Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Integer(0) : terms_[0].coeff;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grevlex_greater(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists with sign applied to the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grevlex_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grevlex_greater(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, negate_b ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ambient(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ambient(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ambient(a, b);
  Polynomial r(a.ambient_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single term preserves the order.
    const Polynomial& single = a.terms_.size() == 1 ? a : b;
    const Polynomial& other = a.terms_.size() == 1 ? b : a;
    const Term& t = single.terms_[0];
    r.terms_.reserve(other.terms_.size());
    for (const auto& u : other.terms_) r.terms_.push_back({t.monomial * u.monomial, t.coeff * u.coeff});
    return r;
  }
  std::unordered_map<Monomial, Integer> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Integer prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      mpz_mul(prod.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial);
      if (inserted) {
        it->second = prod;
      } else {
        it->second += prod;
      }
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return grevlex_greater(x.monomial, y.monomial); });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Integer& c) const {
  Polynomial r(ambient_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ambient_ != b.ambient_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ambient_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    Integer mag = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    // x variables first, then y variables.
    std::string mono;
    for (VarKind kind : {VarKind::X, VarKind::Y}) {
      for (int i = 1; i <= ambient_; ++i) {
        const VarId v{kind, i};
        const int e = t.monomial.exponent(v);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += v.name();
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

void PolynomialBuilder::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  if (m.top_slot() >= 2 * ambient_) throw std::invalid_argument("monomial outside ambient ring");
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc_.erase(it);
  }
}

Polynomial PolynomialBuilder::build() && {
  Polynomial p(ambient_);
  p.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_) p.terms_.push_back({m, std::move(c)});
  return p;
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& d) {
  require_same_ambient(p, d);
  if (d.is_zero()) throw std::domain_error("exact_div by the zero polynomial");
  if (p.is_zero()) return Polynomial(p.ambient());
  if (*p.degree() < *d.degree()) return std::nullopt;

  const Term& lead = d.leading_term();
  if (d.term_count() == 1) {
    // Monomial divisor: every term must be divisible on its own.
    PolynomialBuilder q(p.ambient());
    for (const auto& t : p.terms()) {
      if (!lead.monomial.divides(t.monomial) || !mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
        return std::nullopt;
      }
      q.add(lead.monomial.cofactor_in(t.monomial), t.coeff / lead.coeff);
    }
    return std::move(q).build();
  }

  // With a single divisor, {d} is a Groebner basis of (d), so the first
  // leading term of the remainder that LT(d) cannot absorb certifies that
  // p is not in (d).
  std::map<Monomial, Integer, GrevlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.monomial, t.coeff);
  PolynomialBuilder quotient(p.ambient());
  Integer qc, prod;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.monomial.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    const Monomial qm = lead.monomial.cofactor_in(it->first);
    rem.erase(it);
    bool skip_lead = true;
    for (const auto& t : d.terms()) {
      if (skip_lead) {
        skip_lead = false;
        continue;
      }
      mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
      auto [slot, inserted] = rem.try_emplace(qm * t.monomial);
      slot->second -= prod;
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.add(qm, qc);
  }
  return std::move(quotient).build();
}

Polynomial partial_derivative(const Polynomial& p, VarId v) {
  if (v.index < 1 || v.index > kMaxColumns) throw std::invalid_argument("variable index out of range");
  PolynomialBuilder b(p.ambient());
  for (const auto& t : p.terms()) {
    const int e = t.monomial.exponent(v);
    if (e == 0) continue;
    b.add(t.monomial.without_one(v), t.coeff * e);
  }
  return std::move(b).build();
}

void Point::set(VarId v, Integer value) {
  if (v.index < 1 || v.index > kMaxColumns) throw std::invalid_argument("variable index out of range");
  values_[v.slot()] = std::move(value);
}

const Integer* Point::find(VarId v) const {
  const auto& slot = values_[v.slot()];
  return slot ? &*slot : nullptr;
}

Integer eval(const Polynomial& p, const Point& point) {
  Integer total = 0;
  Integer term, power;
  for (const auto& t : p.terms()) {
    term = t.coeff;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      const int e = t.monomial.exponent_at_slot(s);
      if (e == 0) continue;
      const Integer* value = point.find(VarId::from_slot(s));
      if (value == nullptr) {
        throw std::invalid_argument("eval: variable " + VarId::from_slot(s).name() + " is unassigned");
      }
      mpz_pow_ui(power.get_mpz_t(), value->get_mpz_t(), static_cast<unsigned long>(e));
      term *= power;
    }
    total += term;
  }
  return total;
}

Polynomial parse_polynomial(std::string_view text, int ambient) {
  detail::ParsedExpr e = detail::parse_expression(text, ambient);
  if (e.has_field) {
    throw ParseError("derivation operator d/d... not allowed in a polynomial", 0);
  }
  return std::move(e.scalar);
}

}  // namespace detarr

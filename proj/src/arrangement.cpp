#include "detarr/arrangement.hpp"

#include <stdexcept>
#include <string>

namespace detarr {

Polynomial minor(int i, int j, int n) {
  check_ambient(n);
  if (!(1 <= i && i < j && j <= n)) {
    throw std::invalid_argument("minor(" + std::to_string(i) + "," + std::to_string(j) +
                                ") requires 1 <= i < j <= " + std::to_string(n));
  }
  const Monomial xi_yj = Monomial::of(VarId::x(i)) * Monomial::of(VarId::y(j));
  const Monomial xj_yi = Monomial::of(VarId::x(j)) * Monomial::of(VarId::y(i));
  return Polynomial::monomial(n, xi_yj, 1) - Polynomial::monomial(n, xj_yi, 1);
}

Arrangement::Arrangement(Graph g) : graph_(std::move(g)), cache_(std::make_shared<Cache>()) {
  check_ambient(graph_.vertex_count());
}

const Polynomial& Arrangement::defining_poly() const {
  if (graph_.edge_count() == 0) throw std::invalid_argument("arrangement of an edgeless graph has no divisor");
  std::call_once(cache_->once, [this] {
    const int n = graph_.vertex_count();
    Polynomial f = Polynomial::constant(n, 1);
    for (auto [i, j] : graph_.edges()) f *= minor(i, j, n);
    cache_->poly = std::move(f);
  });
  return *cache_->poly;
}

Polynomial defining_poly(const Arrangement& a) { return a.defining_poly(); }

Polynomial plucker_residual(int i, int j, int k, int l, int n) {
  if (!(i < j && j < k && k < l)) {
    throw std::invalid_argument("plucker_residual needs distinct indices i < j < k < l");
  }
  return minor(i, k, n) * minor(j, l, n) - minor(i, j, n) * minor(k, l, n) - minor(i, l, n) * minor(j, k, n);
}

}  // namespace detarr

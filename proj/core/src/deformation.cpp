#include "nilrig/deformation.hpp"

#include <stdexcept>

#include "nilrig/cohomology.hpp"

namespace nilrig {

namespace {

ConditionResult zero_test(std::string name, const MultiMap& m) {
  return {std::move(name), m.is_zero(), m.first_nonzero()};
}

ConditionResult zero_test(std::string name, const Cochain& c) {
  ConditionResult r{std::move(name), c.is_zero(), std::nullopt};
  if (!c.is_zero()) r.witness = c.entries().begin()->first;
  return r;
}

void require_bilinear(const MultiMap& m, const char* what) {
  if (m.arity() != 2) throw std::invalid_argument(std::string(what) + " must be bilinear");
}

void require_symmetric(const MultiMap& m, const char* what) {
  require_bilinear(m, what);
  for (const auto& [t, v] : m.entries())
    if (m.value({t[1], t[0]}) != v) throw std::invalid_argument(std::string(what) + " is not symmetric");
}

Vector mult(const MultiMap& a, const Vector& x, const Vector& y) { return a.eval({x, y}); }

}  // namespace

bool DeformationCheck::all_hold() const {
  for (const auto& c : conditions)
    if (!c.holds) return false;
  return true;
}

const ConditionResult& DeformationCheck::operator[](std::string_view name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw std::out_of_range("no condition named " + std::string(name));
}

DeformationCheck check_linear_deformation_2step(const LieAlgebra& mu0, const Cochain& phi) {
  if (phi.arity() != 2 || phi.dim() != mu0.dim()) throw std::invalid_argument("phi must be a 2-cochain on g");
  const MultiMap p = phi.to_multimap();
  DeformationCheck out;
  out.conditions.push_back(zero_test("ch_cocycle", ch_delta2(mu0, phi)));
  out.conditions.push_back(zero_test("quadratic", comp1(p, p)));
  return out;
}

DeformationCheck check_linear_deformation_3step(const LieAlgebra& mu0, const Cochain& phi) {
  if (phi.arity() != 2 || phi.dim() != mu0.dim()) throw std::invalid_argument("phi must be a 2-cochain on g");
  const MultiMap p = phi.to_multimap();
  DeformationCheck out;
  out.conditions.push_back(zero_test("chevalley_cocycle", chevalley_delta2(mu0, phi)));
  out.conditions.push_back(zero_test("jacobiator_square", bullet_square(phi)));
  out.conditions.push_back(zero_test("r_cocycle", r_delta2(mu0, phi)));
  out.conditions.push_back(zero_test("mixed_quadratic", attached_defect(mu0, p)));
  out.conditions.push_back(zero_test("cubic", comp1(p, comp1(p, p))));
  return out;
}

MultiMap attached_defect(const LieAlgebra& mu, const MultiMap& phi) {
  require_bilinear(phi, "phi");
  if (phi.dim() != mu.dim()) throw std::invalid_argument("dimension mismatch");
  const MultiMap m = bracket_map(mu);
  return comp1(m, comp1(phi, phi)) + comp1(phi, comp1(phi, m)) + comp1(phi, comp1(m, phi));
}

bool is_attached(const LieAlgebra& mu, const MultiMap& phi) {
  const DefectList d = three_step_defect(mu);
  if (!d.clean()) throw std::invalid_argument("is_attached: the bracket is not 3-step");
  return attached_defect(mu, phi).is_zero();
}

MultiMap tensor_comp(const MultiMap& f, const MultiMap& g, const MultiMap& h) {
  require_bilinear(f, "f");
  require_bilinear(g, "g");
  require_bilinear(h, "h");
  const std::size_t n = f.dim();
  if (g.dim() != n || h.dim() != n) throw std::invalid_argument("dimension mismatch");
  MultiMap out(4, n);
  for (const auto& [u, gv] : g.entries())
    for (const auto& [w, hv] : h.entries()) {
      const Vector v = mult(f, gv, hv);
      out.add({u[0], u[1], w[0], w[1]}, 1, v);
    }
  return out;
}

MultiMap PermCombination::apply(const MultiMap& f) const {
  MultiMap out(f.arity(), f.dim());
  for (const auto& [sigma, c] : terms) out += f.permuted(sigma).scaled(c);
  return out;
}

PermCombination PermCombination::jordan_v() {
  return {{{{2, 3, 4, 1}, Rational(1)}, {{3, 1, 4, 2}, Rational(1)}, {{1, 2, 4, 3}, Rational(1)}}};
}

MultiMap jordan_linearized_defect(const MultiMap& a) {
  require_symmetric(a, "A");
  const std::size_t n = a.dim();
  MultiMap out(4, n);
  auto x = [&](std::size_t i) { return unit_vector(n, i); };
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t i3 = 0; i3 < n; ++i3)
        for (std::size_t i4 = 0; i4 < n; ++i4) {
          const Vector x1 = x(i1), x2 = x(i2), x3 = x(i3), x4 = x(i4);
          const Vector p23 = mult(a, x2, x3), p31 = mult(a, x3, x1), p12 = mult(a, x1, x2);
          Vector v = mult(a, mult(a, p23, x4), x1);
          axpy(v, 1, mult(a, mult(a, p31, x4), x2));
          axpy(v, 1, mult(a, mult(a, p12, x4), x3));
          axpy(v, -1, mult(a, p23, mult(a, x4, x1)));
          axpy(v, -1, mult(a, p31, mult(a, x4, x2)));
          axpy(v, -1, mult(a, p12, mult(a, x4, x3)));
          out.add({i1, i2, i3, i4}, 1, v);
        }
  return out;
}

MultiMap jordan_identity_map(const MultiMap& mu) {
  require_bilinear(mu, "mu");
  return PermCombination::jordan_v().apply(comp1(mu, comp1(mu, mu)) - tensor_comp(mu, mu, mu));
}

MultiMap jordan_cocycle_defect(const MultiMap& mu, const MultiMap& phi) {
  require_symmetric(mu, "A");
  require_symmetric(phi, "phi");
  if (mu.dim() != phi.dim()) throw std::invalid_argument("dimension mismatch");
  MultiMap f = comp1(phi, comp1(mu, mu)) + comp1(mu, comp1(phi, mu)) + comp1(mu, comp1(mu, phi));
  f -= tensor_comp(mu, mu, phi);
  f -= tensor_comp(mu, phi, mu);
  f -= tensor_comp(phi, mu, mu);
  return PermCombination::jordan_v().apply(f);
}

}  // namespace nilrig

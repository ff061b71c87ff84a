#pragma once

#include "coboundary.hpp"

namespace lie2 {

// The four components of a degree-2 cochain.
struct Degree2Parts {
  static constexpr ComponentKey psi{0, 1, 0};    // g_{-1} -> V_0
  static constexpr ComponentKey omega{2, 0, 0};  // ∧²g_0 -> V_0
  static constexpr ComponentKey nu{1, 1, -1};    // g_0 ⊗ g_{-1} -> V_{-1}
  static constexpr ComponentKey theta{3, 0, -1}; // ∧³g_0 -> V_{-1}
};

// The 2-cocycle conditions written out term by term, evaluated directly
// from the structure maps rather than through D. c.p. over four arguments is
// the signed sum over unshuffles.
inline AxiomReport cocycle_equations(const Cochain& c, const Lie2Algebra& L, const Representation& mu) {
  if (c.degree != 2) throw std::invalid_argument("cocycle equations are stated for degree 2 cochains");
  if (!(c.shape == shape_of(L, mu))) throw DimensionMismatch("cochain does not live on this algebra and module");
  const auto& V = mu.module;
  const std::size_t m = L.dim0, n = L.dim1;
  const MultilinearMap zero_psi(0, 1, m, n, V.dim0), zero_omega(2, 0, m, n, V.dim0), zero_nu(1, 1, m, n, V.dim1),
      zero_theta(3, 0, m, n, V.dim1);
  const auto& Psi = c.has(Degree2Parts::psi) ? c[Degree2Parts::psi] : zero_psi;
  const auto& Om = c.has(Degree2Parts::omega) ? c[Degree2Parts::omega] : zero_omega;
  const auto& Nu = c.has(Degree2Parts::nu) ? c[Degree2Parts::nu] : zero_nu;
  const auto& Th = c.has(Degree2Parts::theta) ? c[Degree2Parts::theta] : zero_theta;
  auto psi = [&](const Vector& a) { return Psi.evaluate<Rational>({}, {a}); };
  auto omega = [&](const Vector& x, const Vector& y) { return Om.evaluate<Rational>({x, y}); };
  auto nu = [&](const Vector& x, const Vector& a) { return Nu.evaluate<Rational>({x}, {a}); };
  auto theta = [&](const Vector& x, const Vector& y, const Vector& z) { return Th.evaluate<Rational>({x, y, z}); };

  AxiomReport rep;
  auto& e01 = rep.add("2-cocycle01", "mu0(x)psi(a) - psi([x,a]) + omega(x,da) - ∂nu(x,a) = 0");
  auto& e02 = rep.add("2-cocycle02", "mu1(a)psi(b) + mu1(b)psi(a) - nu(db,a) - nu(da,b) = 0");
  auto& e1 = rep.add("2-cocycle1", "-psi(l3(x,y,z)) + mu0(x)omega(y,z) + c.p. - omega([x,y],z) + c.p. - ∂theta(x,y,z) = 0");
  auto& e2 = rep.add("2-cocycle2",
                     "mu1(a)omega(x,y) + mu0(x)nu(y,a) - mu0(y)nu(x,a) - nu([x,y],a) + nu(x,[y,a]) - nu(y,[x,a]) "
                     "- theta(x,y,da) + mu2(x,y)psi(a) = 0");
  auto& e3 = rep.add("2-cocycle3", "mu2(z,t)omega(x,y) - nu(t,l3(x,y,z)) + mu0(x)theta(y,z,t) - theta([x,y],z,t) + c.p. = 0");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      auto r = mu.mu0[i].x0.apply(psi(fa));
      r = sub(r, psi(L.action(x, fa)));
      r = add(r, omega(x, L.diff(fa)));
      r = sub(r, V.partial.apply(nu(x, fa)));
      e01.record({{'e', i}, {'f', a}}, std::move(r));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto fa = L.f(a), fb = L.f(b);
      auto r = add(mu.mu1[a].apply(psi(fb)), mu.mu1[b].apply(psi(fa)));
      r = sub(r, nu(L.diff(fb), fa));
      r = sub(r, nu(L.diff(fa), fb));
      e02.record({{'f', a}, {'f', b}}, std::move(r));
    }
  for (const auto& t : combinations(m, 3)) {
    std::vector<Vector> v = {L.e(t[0]), L.e(t[1]), L.e(t[2])};
    auto r = neg(psi(L.jacobiator(v[0], v[1], v[2])));
    for (int k = 0; k < 3; ++k) {
      const auto &x = v[k], &y = v[(k + 1) % 3], &z = v[(k + 2) % 3];
      r = add(r, mu.mu0_of(x).x0.apply(omega(y, z)));
      r = sub(r, omega(L.bracket(x, y), z));
    }
    r = sub(r, V.partial.apply(theta(v[0], v[1], v[2])));
    e1.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}}, std::move(r));
  }
  for (const auto& t : combinations(m, 2))
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(t[0]), y = L.e(t[1]), fa = L.f(a);
      auto r = mu.mu1[a].apply(omega(x, y));
      r = add(r, mu.mu0[t[0]].x1.apply(nu(y, fa)));
      r = sub(r, mu.mu0[t[1]].x1.apply(nu(x, fa)));
      r = sub(r, nu(L.bracket(x, y), fa));
      r = add(r, nu(x, L.action(y, fa)));
      r = sub(r, nu(y, L.action(x, fa)));
      r = sub(r, theta(x, y, L.diff(fa)));
      r = add(r, mu.mu2_at(t[0], t[1]).apply(psi(fa)));
      e2.record({{'e', t[0]}, {'e', t[1]}, {'f', a}}, std::move(r));
    }
  static const auto sh22 = shuffles(4, 2);
  static const auto sh31 = shuffles(4, 3);
  static const auto sh13 = shuffles(4, 1);
  for (const auto& t : combinations(m, 4)) {
    std::vector<Vector> x;
    for (auto i : t) x.push_back(L.e(i));
    auto r = zeros<Rational>(V.dim1);
    for (const auto& s : sh22)
      axpy(r, Rational(s.sign),
           mu.mu2_of(x[s.rest[0]], x[s.rest[1]]).apply(omega(x[s.chosen[0]], x[s.chosen[1]])));
    for (const auto& s : sh31)
      axpy(r, Rational(-s.sign), nu(x[s.rest[0]], L.jacobiator(x[s.chosen[0]], x[s.chosen[1]], x[s.chosen[2]])));
    for (const auto& s : sh13)
      axpy(r, Rational(s.sign), mu.mu0_of(x[s.chosen[0]]).x1.apply(theta(x[s.rest[0]], x[s.rest[1]], x[s.rest[2]])));
    for (const auto& s : sh22)
      axpy(r, Rational(-s.sign), theta(L.bracket(x[s.chosen[0]], x[s.chosen[1]]), x[s.rest[0]], x[s.rest[1]]));
    e3.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}, {'e', t[3]}}, std::move(r));
  }
  return rep;
}

}  // namespace lie2

#pragma once

#include "lie2_algebra.hpp"
#include "report.hpp"

namespace lie2 {

// Residuals of the five defining identities, evaluated on increasing basis
// tuples. Each identity is multilinear and alternating (or symmetric in the
// g_{-1} pair), so this covers every tuple.
template <class S>
BasicReport<S> check_axioms(const BasicLie2Algebra<S>& L) {
  L.check_shape();
  const std::size_t m = L.dim0, n = L.dim1;
  BasicReport<S> rep;
  auto& c1 = rep.add("i", "d[x,a] = [x,da]");
  auto& c2 = rep.add("ii", "[da,b] = [a,db]");
  auto& c3 = rep.add("iii", "[[x,y],z] + c.p. + d l3(x,y,z) = 0");
  auto& c4 = rep.add("iv", "[[x,y],a] + [[y,a],x] + [[a,x],y] + l3(x,y,da) = 0");
  auto& c5 = rep.add("v", "l3([x,y],z,t) + c.p. = [l3(x,y,z),t] + c.p.");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto r = sub(L.diff(L.action(L.e(i), L.f(a))), L.bracket(L.e(i), L.diff(L.f(a))));
      c1.record({{'e', i}, {'f', a}}, std::move(r));
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      // [a,db] = -[db,a]
      auto r = add(L.action(L.diff(L.f(a)), L.f(b)), L.action(L.diff(L.f(b)), L.f(a)));
      c2.record({{'f', a}, {'f', b}}, std::move(r));
    }

  for (const auto& t : combinations(m, 3)) {
    auto x = L.e(t[0]), y = L.e(t[1]), z = L.e(t[2]);
    auto r = L.diff(L.jacobiator(x, y, z));
    r = add(r, L.bracket(L.bracket(x, y), z));
    r = add(r, L.bracket(L.bracket(y, z), x));
    r = add(r, L.bracket(L.bracket(z, x), y));
    c3.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}}, std::move(r));
  }

  for (const auto& t : combinations(m, 2))
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(t[0]), y = L.e(t[1]), fa = L.f(a);
      // [[y,a],x] = -[x,[y,a]],  [[a,x],y] = [y,[x,a]]
      auto r = L.action(L.bracket(x, y), fa);
      r = sub(r, L.action(x, L.action(y, fa)));
      r = add(r, L.action(y, L.action(x, fa)));
      r = add(r, L.jacobiator(x, y, L.diff(fa)));
      c4.record({{'e', t[0]}, {'e', t[1]}, {'f', a}}, std::move(r));
    }

  // c.p. over four arguments is read as the sum over unshuffles with signs.
  static const auto sh22 = shuffles(4, 2);
  static const auto sh31 = shuffles(4, 3);
  for (const auto& t : combinations(m, 4)) {
    std::vector<std::vector<S>> xs;
    for (auto i : t) xs.push_back(L.e(i));
    auto r = zeros<S>(n);
    for (const auto& s : sh22) {
      auto v = L.jacobiator(L.bracket(xs[s.chosen[0]], xs[s.chosen[1]]), xs[s.rest[0]], xs[s.rest[1]]);
      axpy(r, S(s.sign), v);
    }
    for (const auto& s : sh31) {
      // -[l3(..),t] = [t,l3(..)]
      auto v = L.action(xs[s.rest[0]], L.jacobiator(xs[s.chosen[0]], xs[s.chosen[1]], xs[s.chosen[2]]));
      axpy(r, S(s.sign), v);
    }
    c5.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}, {'e', t[3]}}, std::move(r));
  }
  return rep;
}

}  // namespace lie2

#pragma once

#include "cochain.hpp"

#include <optional>

namespace lie2 {

class DegreeOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct CohomologyConfig {
  int max_degree = 3;  // highest cochain degree that may be produced
};

namespace detail {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

inline SparseVec sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

inline SparseVec basis_sparse(std::size_t i) { return {{i, Rational(1)}}; }

// A linear combination of coordinates of the source cochain space. Used to
// assemble D column by column in one pass.
class SparseRow {
 public:
  SparseRow() = default;
  explicit SparseRow(int zero) {
    if (zero != 0) throw std::logic_error("SparseRow only has a zero constant");
  }
  void add_term(std::size_t idx, const Rational& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx, [](const auto& t, std::size_t i) { return t.first < i; });
    if (it != terms_.end() && it->first == idx) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    } else if (!is_zero(c)) {
      terms_.insert(it, {idx, c});
    }
  }
  void add_scaled(const Rational& c, const SparseRow& x) {
    if (is_zero(c) || x.terms_.empty()) return;
    std::vector<std::pair<std::size_t, Rational>> out;
    out.reserve(terms_.size() + x.terms_.size());
    auto a = terms_.cbegin();
    auto b = x.terms_.cbegin();
    while (a != terms_.cend() || b != x.terms_.cend()) {
      if (b == x.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == terms_.cend() || b->first < a->first) {
        out.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        Rational v = a->second + c * b->second;
        if (!is_zero(v)) out.emplace_back(a->first, v);
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
  }
  const std::vector<std::pair<std::size_t, Rational>>& terms() const { return terms_; }
  friend bool operator==(const SparseRow&, const SparseRow&) = default;

 private:
  std::vector<std::pair<std::size_t, Rational>> terms_;
};

inline bool is_zero(const SparseRow& r) { return r.terms().empty(); }
using lie2::is_zero;
inline void accumulate(Rational& y, const Rational& c, const Rational& x) { y += c * x; }
inline void accumulate(SparseRow& y, const Rational& c, const SparseRow& x) { y.add_scaled(c, x); }

// Values of an actual cochain.
struct CochainSource {
  const Cochain& f;
  bool has(const ComponentKey& k) const { return f.has(k); }
  void accumulate_at(const ComponentKey& k, const Tuple& xs, const Tuple& as, const Rational& coef,
                     std::vector<Rational>& out) const {
    const auto& comp = f[k];
    auto b = comp.block(comp.tuple_index(xs, as));
    for (std::size_t r = 0; r < out.size(); ++r)
      if (!lie2::is_zero(b[r])) out[r] += coef * b[r];
  }
};

// Formal coordinates: the value at (key, tuple, r) is the coordinate with
// that flat index in the canonical basis.
struct CoordinateSource {
  std::map<ComponentKey, std::size_t> offsets;
  std::map<ComponentKey, std::size_t> out_dims;
  std::map<ComponentKey, const MultilinearMap*> layout;
  Cochain zero;

  CoordinateSource(const CoordinateSource&) = delete;
  CoordinateSource(const CochainShape& sh, int degree) : zero(Cochain::zero(sh, degree)) {
    std::size_t off = 0;
    for (const auto& [k, c] : zero.components) {
      offsets[k] = off;
      out_dims[k] = c.out_dim();
      off += c.size();
    }
    for (const auto& [k, c] : zero.components) layout[k] = &c;
  }
  bool has(const ComponentKey& k) const { return offsets.count(k) > 0; }
  void accumulate_at(const ComponentKey& k, const Tuple& xs, const Tuple& as, const Rational& coef,
                     std::vector<SparseRow>& out) const {
    const std::size_t base = offsets.at(k) + layout.at(k)->tuple_index(xs, as) * out_dims.at(k);
    for (std::size_t r = 0; r < out.size(); ++r) out[r].add_term(base + r, coef);
  }
};

// f(xs..., as...) with sparse arguments, expanded multilinearly.
template <class T, class Source>
std::vector<T> eval(const Source& f, const ComponentKey& k, std::size_t out_dim, const std::vector<SparseVec>& xs,
                    const std::vector<SparseVec>& as) {
  std::vector<T> out(out_dim, T(0));
  if (!f.has(k)) return out;
  Tuple xi(xs.size()), ai(as.size());
  auto rec = [&](auto&& self, std::size_t pos, const Rational& coef) -> void {
    if (pos < xs.size()) {
      for (const auto& [i, c] : xs[pos]) {
        xi[pos] = i;
        self(self, pos + 1, coef * c);
      }
      return;
    }
    std::size_t qpos = pos - xs.size();
    if (qpos < as.size()) {
      for (const auto& [j, c] : as[qpos]) {
        ai[qpos] = j;
        self(self, pos + 1, coef * c);
      }
      return;
    }
    Tuple x = xi, a = ai;
    int s = sort_alternating(x);
    if (s == 0) return;
    std::sort(a.begin(), a.end());
    f.accumulate_at(k, x, a, s > 0 ? coef : Rational(-coef), out);
  };
  rec(rec, 0, Rational(1));
  return out;
}

template <class T>
void add_matrix_image(std::vector<T>& out, const Rational& sign, const Matrix& M, const std::vector<T>& v) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (lie2::is_zero(M(r, c)) || is_zero(v[c])) continue;
      accumulate(out[r], Rational(sign * M(r, c)), v[c]);
    }
}

template <class T>
void add_scaled(std::vector<T>& out, const Rational& sign, const std::vector<T>& v) {
  for (std::size_t r = 0; r < out.size(); ++r)
    if (!is_zero(v[r])) accumulate(out[r], sign, v[r]);
}

inline Rational parity(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

template <class V>
std::vector<V> without(const std::vector<V>& v, std::size_t i) {
  std::vector<V> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) out.push_back(v[k]);
  return out;
}

// D = ∂̂ + d̂ + d_μ^{(1,0)} + d_μ^{(0,1)} + d_{μ2} + d_{l3}, one output tuple at a time.
template <class T, class Source>
BasicCochain<T> coboundary_kernel(const Lie2Algebra& L, const Representation& mu, int degree, const Source& f) {
  const CochainShape sh = shape_of(L, mu);
  BasicCochain<T> g = BasicCochain<T>::zero(sh, degree + 1);
  static const auto sh2 = [] {
    std::vector<std::vector<Shuffle>> t(16);
    for (std::size_t n = 2; n < t.size(); ++n) t[n] = shuffles(n, 2);
    return t;
  }();
  static const auto sh3 = [] {
    std::vector<std::vector<Shuffle>> t(16);
    for (std::size_t n = 3; n < t.size(); ++n) t[n] = shuffles(n, 3);
    return t;
  }();

  for (auto& [key, comp] : g.components) {
    const int P = key.p, Q = key.q, S = key.s;
    const std::size_t od = sh.target_dim(S);
    if (static_cast<std::size_t>(P) >= sh2.size()) throw DegreeOverflow("too many g_0 arguments");
    comp.for_each_tuple_mut([&](const Tuple& xs, const Tuple& as, std::span<T> block) {
      std::vector<T> out(od, T(0));
      std::vector<SparseVec> X, A;
      for (auto i : xs) X.push_back(basis_sparse(i));
      for (auto j : as) A.push_back(basis_sparse(j));

      // ∂̂ : (P,Q,-1) -> (P,Q,0), sign (-1)^P
      if (S == 0) {
        ComponentKey src{P, Q, -1};
        auto v = eval<T>(f, src, sh.v1, X, A);
        add_matrix_image(out, parity(P), mu.module.partial, v);
      }
      // d̂ : (P+1,Q-1,S) -> (P,Q,S), d a_i placed in the last g_0 slot
      if (Q >= 1) {
        ComponentKey src{P + 1, Q - 1, S};
        for (int i = 0; i < Q; ++i) {
          auto x2 = X;
          x2.push_back(sparse(L.d.column(as[i])));
          auto v = eval<T>(f, src, od, x2, without(A, i));
          add_scaled(out, parity(P + 1), v);
        }
      }
      // d_μ^{(1,0)} : (P-1,Q,S) -> (P,Q,S); indices below are 1-based in the signs
      if (P >= 1) {
        ComponentKey src{P - 1, Q, S};
        if (f.has(src)) {
          for (int i = 0; i < P; ++i) {
            auto v = eval<T>(f, src, od, without(X, i), A);
            const auto& M = S == 0 ? mu.mu0[xs[i]].x0 : mu.mu0[xs[i]].x1;
            add_matrix_image(out, parity(i + 1 + 1), M, v);
          }
          for (int i = 0; i < P; ++i)
            for (int j = i + 1; j < P; ++j) {
              std::vector<SparseVec> x2 = {sparse(L.l2_00.value({xs[i], xs[j]}))};
              for (int k = 0; k < P; ++k)
                if (k != i && k != j) x2.push_back(X[k]);
              auto v = eval<T>(f, src, od, x2, A);
              add_scaled(out, parity((i + 1) + (j + 1)), v);
            }
          for (int i = 0; i < P; ++i)
            for (int j = 0; j < Q; ++j) {
              auto a2 = A;
              a2[j] = sparse(L.l2_01.value({xs[i]}, {as[j]}));
              auto v = eval<T>(f, src, od, without(X, i), a2);
              add_scaled(out, parity(i + 1), v);
            }
        }
      }
      if (S == -1) {
        // d_μ^{(0,1)} : (P,Q-1,0) -> (P,Q,-1), sign (-1)^P
        if (Q >= 1) {
          ComponentKey src{P, Q - 1, 0};
          for (int i = 0; i < Q; ++i) {
            auto v = eval<T>(f, src, sh.v0, X, without(A, i));
            add_matrix_image(out, parity(P), mu.mu1[as[i]], v);
          }
        }
        // d_{μ2} : (P-2,Q,0) -> (P,Q,-1), over (2,P-2)-unshuffles
        if (P >= 2) {
          ComponentKey src{P - 2, Q, 0};
          if (f.has(src))
            for (const auto& s : sh2[P]) {
              std::vector<SparseVec> rest;
              for (auto k : s.rest) rest.push_back(X[k]);
              auto v = eval<T>(f, src, sh.v0, rest, A);
              add_matrix_image(out, Rational(parity(P - 2) * s.sign), mu.mu2_at(xs[s.chosen[0]], xs[s.chosen[1]]), v);
            }
        }
      }
      // d_{l3} : (P-3,Q+1,S) -> (P,Q,S), l3 in the last symmetric slot
      if (P >= 3) {
        ComponentKey src{P - 3, Q + 1, S};
        if (f.has(src))
          for (const auto& s : sh3[P]) {
            std::vector<SparseVec> rest;
            for (auto k : s.rest) rest.push_back(X[k]);
            auto a2 = A;
            a2.push_back(sparse(L.l3.value({xs[s.chosen[0]], xs[s.chosen[1]], xs[s.chosen[2]]})));
            auto v = eval<T>(f, src, od, rest, a2);
            add_scaled(out, Rational(-s.sign), v);
          }
      }
      for (std::size_t r = 0; r < od; ++r) block[r] = std::move(out[r]);
    });
  }
  return g;
}

inline void check_degree(int degree, const CohomologyConfig& cfg) {
  if (degree < -1) throw std::invalid_argument("cochain degree must be at least -1");
  if (degree + 1 > cfg.max_degree)
    throw DegreeOverflow("D on degree " + std::to_string(degree) + " exceeds the configured maximum degree " +
                         std::to_string(cfg.max_degree));
}

}  // namespace detail

inline Cochain apply_D(const Cochain& c, const Lie2Algebra& L, const Representation& mu, const CohomologyConfig& cfg = {}) {
  detail::check_degree(c.degree, cfg);
  if (!(c.shape == shape_of(L, mu))) throw DimensionMismatch("cochain does not live on this algebra and module");
  return detail::coboundary_kernel<Rational>(L, mu, c.degree, detail::CochainSource{c});
}

// Matrix of D: (degree n) -> (degree n+1) in the canonical bases.
inline Matrix coboundary_matrix(const Lie2Algebra& L, const Representation& mu, int n, const CohomologyConfig& cfg = {}) {
  detail::check_degree(n, cfg);
  L.check_shape();
  mu.check_shape(L.space());
  const CochainShape sh = shape_of(L, mu);
  detail::CoordinateSource src(sh, n);
  auto img = detail::coboundary_kernel<detail::SparseRow>(L, mu, n, src);
  const std::size_t cols = src.zero.dimension();
  auto rows = img.flatten();
  Matrix M(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r].terms()) M(r, c) = v;
  return M;
}

inline std::size_t cohomology_dim(const Lie2Algebra& L, const Representation& mu, int n, const CohomologyConfig& cfg = {}) {
  Matrix Dn = coboundary_matrix(L, mu, n, cfg);
  auto ker = kernel_basis(Dn);
  if (n == -1) return ker.size();
  Matrix Dprev = coboundary_matrix(L, mu, n - 1, cfg);
  std::vector<Vector> im;
  for (std::size_t c = 0; c < Dprev.cols(); ++c) im.push_back(Dprev.column(c));
  if (ker.empty()) {
    if (rank(Dprev) != 0) throw BrokenComplex("image is not contained in kernel");
    return 0;
  }
  return quotient_dim(ker, im);
}

inline bool is_cocycle(const Cochain& c, const Lie2Algebra& L, const Representation& mu, const CohomologyConfig& cfg = {}) {
  return apply_D(c, L, mu, cfg).is_zero();
}

// Some b with D b = c, or nothing.
inline std::optional<Cochain> is_coboundary(const Cochain& c, const Lie2Algebra& L, const Representation& mu,
                                            const CohomologyConfig& cfg = {}) {
  const CochainShape sh = shape_of(L, mu);
  if (c.degree == -1) {
    if (c.is_zero()) return Cochain::zero(sh, -2);
    return std::nullopt;
  }
  Matrix D = coboundary_matrix(L, mu, c.degree - 1, cfg);
  auto x = solve(D, c.flatten());
  if (!x) return std::nullopt;
  return Cochain::from_flat(sh, c.degree - 1, *x);
}

// D_{n+1} D_n, zero when the complex is sound
inline Matrix d_squared(const Lie2Algebra& L, const Representation& mu, int n, const CohomologyConfig& cfg = {}) {
  return coboundary_matrix(L, mu, n + 1, cfg) * coboundary_matrix(L, mu, n, cfg);
}

}  // namespace lie2

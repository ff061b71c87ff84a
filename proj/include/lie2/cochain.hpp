#pragma once

#include "representation.hpp"

#include <compare>
#include <map>

namespace lie2 {

// Hom(∧^p g_0 ⊗ ⊙^q g_{-1}, V_s), of degree p + 2q + s.
struct ComponentKey {
  int p = 0, q = 0, s = 0;
  int degree() const { return p + 2 * q + s; }
  friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;
};

inline std::string to_string(const ComponentKey& k) {
  return "(" + std::to_string(k.p) + "," + std::to_string(k.q) + "," + std::to_string(k.s) + ")";
}

// Dimensions a cochain complex lives on: the algebra and the module.
struct CochainShape {
  std::size_t m = 0, n = 0;    // g_0, g_{-1}
  std::size_t v0 = 0, v1 = 0;  // V_0, V_{-1}
  std::size_t target_dim(int s) const { return s == 0 ? v0 : v1; }
  friend bool operator==(const CochainShape&, const CochainShape&) = default;
};

inline CochainShape shape_of(const Lie2Algebra& L, const Representation& mu) {
  return {L.dim0, L.dim1, mu.module.dim0, mu.module.dim1};
}

// Keys of total degree `degree`, sorted by (p,q,s). Keys whose domain is
// empty (p > m, or q > 0 with n = 0) are dropped.
inline std::vector<ComponentKey> cochain_keys(const CochainShape& sh, int degree) {
  std::vector<ComponentKey> keys;
  for (int q = 0; 2 * q <= degree + 1; ++q)
    for (int s : {-1, 0}) {
      int p = degree - 2 * q - s;
      if (p < 0 || static_cast<std::size_t>(p) > sh.m) continue;
      if (q > 0 && sh.n == 0) continue;
      keys.push_back({p, q, s});
    }
  std::sort(keys.begin(), keys.end());
  return keys;
}

template <class T>
struct BasicCochain {
  int degree = 0;
  CochainShape shape;
  std::map<ComponentKey, BasicMultilinearMap<T>> components;

  static BasicCochain zero(const CochainShape& sh, int degree) {
    BasicCochain c;
    c.degree = degree;
    c.shape = sh;
    for (const auto& k : cochain_keys(sh, degree))
      c.components.emplace(k, BasicMultilinearMap<T>(k.p, k.q, sh.m, sh.n, sh.target_dim(k.s)));
    return c;
  }

  BasicMultilinearMap<T>& operator[](const ComponentKey& k) {
    auto it = components.find(k);
    if (it == components.end()) throw std::out_of_range("cochain has no component " + to_string(k));
    return it->second;
  }
  const BasicMultilinearMap<T>& operator[](const ComponentKey& k) const {
    auto it = components.find(k);
    if (it == components.end()) throw std::out_of_range("cochain has no component " + to_string(k));
    return it->second;
  }
  bool has(const ComponentKey& k) const { return components.count(k) > 0; }

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& [k, c] : components) d += c.size();
    return d;
  }

  // canonical flat coordinates: keys in order, then tuples, then target index
  std::vector<T> flatten() const {
    std::vector<T> v;
    v.reserve(dimension());
    for (const auto& [k, c] : components) v.insert(v.end(), c.data().begin(), c.data().end());
    return v;
  }

  static BasicCochain from_flat(const CochainShape& sh, int degree, const std::vector<T>& v) {
    BasicCochain c = zero(sh, degree);
    if (v.size() != c.dimension()) throw DimensionMismatch("flat cochain has the wrong length");
    std::size_t off = 0;
    for (auto& [k, comp] : c.components)
      for (auto& x : comp.data()) x = v[off++];
    return c;
  }

  bool is_zero() const {
    for (const auto& [k, c] : components)
      if (!c.is_zero()) return false;
    return true;
  }

  friend BasicCochain operator+(BasicCochain a, const BasicCochain& b) {
    a.check_compatible(b);
    for (auto& [k, c] : a.components) c = c + b[k];
    return a;
  }
  friend BasicCochain operator-(BasicCochain a, const BasicCochain& b) {
    a.check_compatible(b);
    for (auto& [k, c] : a.components) c = c - b[k];
    return a;
  }
  friend BasicCochain operator*(const T& s, BasicCochain a) {
    for (auto& [k, c] : a.components) c = s * c;
    return a;
  }
  friend bool operator==(const BasicCochain& a, const BasicCochain& b) {
    return a.degree == b.degree && a.shape == b.shape && a.components == b.components;
  }

 private:
  void check_compatible(const BasicCochain& b) const {
    if (degree != b.degree || !(shape == b.shape)) throw DimensionMismatch("cochains of different degree or shape");
  }
};

using Cochain = BasicCochain<Rational>;

struct CochainSpaceDim {
  std::size_t total = 0;
  std::vector<std::pair<ComponentKey, std::size_t>> breakdown;
};

inline CochainSpaceDim cochain_space_dim(const CochainShape& sh, int degree) {
  if (degree < -1) throw std::invalid_argument("cochain degree must be at least -1");
  CochainSpaceDim out;
  for (const auto& k : cochain_keys(sh, degree)) {
    std::size_t d = binomial(sh.m, k.p) * multiset_count(sh.n, k.q) * sh.target_dim(k.s);
    out.breakdown.push_back({k, d});
    out.total += d;
  }
  return out;
}

inline CochainSpaceDim cochain_space_dim(const Lie2Algebra& L, const Representation& mu, int degree) {
  return cochain_space_dim(shape_of(L, mu), degree);
}

}  // namespace lie2

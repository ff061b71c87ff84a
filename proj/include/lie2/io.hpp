#pragma once

#include "extension.hpp"
#include "nijenhuis.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lie2::io {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Human-readable rationals: "fraction" (default, p/q) or "latex" (\frac{p}{q}),
// chosen by LIE2_RATIONAL_STYLE. Files always use p/q.
inline std::string pretty(const Rational& q) {
  const char* style = std::getenv("LIE2_RATIONAL_STYLE");
  if (style && std::string_view(style) == "latex" && q.get_den() != 1) {
    std::string sign = q < 0 ? "-" : "";
    mpz_class num = abs(q.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
  }
  return q.get_str();
}

inline std::string pretty(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + pretty(v[i]);
  return s + "]";
}

inline Rational rational_from(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational written as \"p/q\" or an integer");
}

inline json rational_to(const Rational& q) { return q.get_str(); }

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::size_t count_from(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline Vector vector_from(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(where + ": expected a list of " + std::to_string(n) + " rationals");
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational_from(j[i], where));
  return v;
}

inline json vector_to(const Vector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_to(q));
  return a;
}

inline Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix M(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = vector_from(j[r], cols, where + " row " + std::to_string(r + 1));
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = row[c];
  }
  return M;
}

inline json matrix_to(const Matrix& M) {
  json a = json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Vector row(M.row(r).begin(), M.row(r).end());
    a.push_back(vector_to(row));
  }
  return a;
}

// Sparse tensor: [{indices: 1-based, alternating block then symmetric block, out: [...]}].
inline MultilinearMap tensor_from(const json& j, std::size_t p, std::size_t q, std::size_t m, std::size_t n,
                                  std::size_t out, const std::string& where) {
  MultilinearMap T(p, q, m, n, out);
  if (j.is_null()) return T;
  if (!j.is_array()) throw ParseError(where + ": expected a list of entries");
  std::vector<bool> seen(T.tuple_count(), false);
  for (const auto& e : j) {
    const auto& idx = field(e, "indices", where);
    if (!idx.is_array() || idx.size() != p + q)
      throw ParseError(where + ": each entry needs " + std::to_string(p + q) + " indices");
    Tuple xs, as;
    for (std::size_t k = 0; k < p + q; ++k) {
      std::size_t i = count_from(idx[k], where);
      std::size_t bound = k < p ? m : n;
      if (i < 1 || i > bound) throw ParseError(where + ": index " + std::to_string(i) + " out of range");
      (k < p ? xs : as).push_back(i - 1);
    }
    for (std::size_t k = 1; k < xs.size(); ++k)
      if (xs[k - 1] >= xs[k]) throw ParseError(where + ": alternating indices must be strictly increasing");
    for (std::size_t k = 1; k < as.size(); ++k)
      if (as[k - 1] > as[k]) throw ParseError(where + ": symmetric indices must be weakly increasing");
    std::size_t t = T.tuple_index(xs, as);
    if (seen[t]) throw ParseError(where + ": repeated entry " + idx.dump());
    seen[t] = true;
    T.set(xs, as, vector_from(field(e, "out", where), out, where));
  }
  return T;
}

inline json tensor_to(const MultilinearMap& T) {
  json a = json::array();
  T.for_each_tuple([&](const Tuple& xs, const Tuple& as, std::span<const Rational> b) {
    Vector v(b.begin(), b.end());
    if (is_zero(v)) return;
    json idx = json::array();
    for (auto i : xs) idx.push_back(i + 1);
    for (auto i : as) idx.push_back(i + 1);
    a.push_back({{"indices", idx}, {"out", vector_to(v)}});
  });
  return a;
}

struct AlgebraFile {
  Lie2Algebra algebra;
  std::optional<Matrix> form;  // for a quadratic g_0
  std::string name, description;
};

inline AlgebraFile algebra_from(const json& j) {
  const std::string w = "algebra";
  AlgebraFile f;
  std::size_t m = count_from(field(j, "g0_dim", w), w + ".g0_dim");
  std::size_t n = count_from(field(j, "gm1_dim", w), w + ".gm1_dim");
  Lie2Algebra& L = f.algebra;
  L = Lie2Algebra(m, n);
  if (j.contains("d")) L.d = matrix_from(j["d"], m, n, w + ".d");
  if (j.contains("l2_00")) L.l2_00 = tensor_from(j["l2_00"], 2, 0, m, n, m, w + ".l2_00");
  if (j.contains("l2_01")) L.l2_01 = tensor_from(j["l2_01"], 1, 1, m, n, n, w + ".l2_01");
  if (j.contains("l3")) L.l3 = tensor_from(j["l3"], 3, 0, m, n, n, w + ".l3");
  if (j.contains("form")) f.form = matrix_from(j["form"], m, m, w + ".form");
  if (j.contains("name")) f.name = j["name"].get<std::string>();
  if (j.contains("description")) f.description = j["description"].get<std::string>();
  return f;
}

inline json algebra_to(const AlgebraFile& f) {
  json j;
  if (!f.name.empty()) j["name"] = f.name;
  if (!f.description.empty()) j["description"] = f.description;
  const auto& L = f.algebra;
  j["g0_dim"] = L.dim0;
  j["gm1_dim"] = L.dim1;
  j["d"] = matrix_to(L.d);
  j["l2_00"] = tensor_to(L.l2_00);
  j["l2_01"] = tensor_to(L.l2_01);
  j["l3"] = tensor_to(L.l3);
  if (f.form) j["form"] = matrix_to(*f.form);
  return j;
}

inline json algebra_to(const Lie2Algebra& L) { return algebra_to(AlgebraFile{L, std::nullopt, "", ""}); }

inline TwoTermComplex complex_from(const json& j) {
  const std::string w = "complex";
  TwoTermComplex V;
  V.dim0 = count_from(field(j, "dim0", w), w + ".dim0");
  V.dim1 = count_from(field(j, "dim1", w), w + ".dim1");
  V.partial = j.contains("partial") ? matrix_from(j["partial"], V.dim0, V.dim1, w + ".partial") : Matrix(V.dim0, V.dim1);
  return V;
}

inline json complex_to(const TwoTermComplex& V) {
  return {{"dim0", V.dim0}, {"dim1", V.dim1}, {"partial", matrix_to(V.partial)}};
}

// {module, mu0: [{x0, x1}] per e_i, mu1: [matrix] per f_a, mu2: [{indices:[i,j], value}]}
inline Representation representation_from(const json& j, const GradedSpace& g) {
  const std::string w = "representation";
  Representation mu = Representation::zero(g, complex_from(field(j, "module", w)));
  const auto& V = mu.module;
  if (j.contains("mu0")) {
    const auto& a = j["mu0"];
    if (!a.is_array() || a.size() != g.dim0) throw ParseError(w + ".mu0: expected one entry per basis vector of g_0");
    for (std::size_t i = 0; i < g.dim0; ++i)
      mu.mu0[i] = {matrix_from(field(a[i], "x0", w + ".mu0"), V.dim0, V.dim0, w + ".mu0.x0"),
                   matrix_from(field(a[i], "x1", w + ".mu0"), V.dim1, V.dim1, w + ".mu0.x1")};
  }
  if (j.contains("mu1")) {
    const auto& a = j["mu1"];
    if (!a.is_array() || a.size() != g.dim1) throw ParseError(w + ".mu1: expected one matrix per basis vector of g_-1");
    for (std::size_t b = 0; b < g.dim1; ++b) mu.mu1[b] = matrix_from(a[b], V.dim1, V.dim0, w + ".mu1");
  }
  if (j.contains("mu2")) {
    for (const auto& e : j["mu2"]) {
      const auto& idx = field(e, "indices", w + ".mu2");
      if (!idx.is_array() || idx.size() != 2) throw ParseError(w + ".mu2: indices must be a pair");
      std::size_t a = count_from(idx[0], w), b = count_from(idx[1], w);
      if (a < 1 || b > g.dim0 || a >= b) throw ParseError(w + ".mu2: indices must satisfy 1 <= i < j <= dim g_0");
      mu.set_mu2(a - 1, b - 1, matrix_from(field(e, "value", w + ".mu2"), V.dim1, V.dim0, w + ".mu2.value"));
    }
  }
  return mu;
}

inline json representation_to(const Representation& mu) {
  json j;
  j["module"] = complex_to(mu.module);
  j["mu0"] = json::array();
  for (const auto& p : mu.mu0) j["mu0"].push_back({{"x0", matrix_to(p.x0)}, {"x1", matrix_to(p.x1)}});
  j["mu1"] = json::array();
  for (const auto& a : mu.mu1) j["mu1"].push_back(matrix_to(a));
  j["mu2"] = json::array();
  for (const auto& t : combinations(mu.g0_dim(), 2)) {
    Matrix v = mu.mu2_at(t[0], t[1]);
    if (!v.is_zero()) j["mu2"].push_back({{"indices", {t[0] + 1, t[1] + 1}}, {"value", matrix_to(v)}});
  }
  return j;
}

// {degree, shape: {m, n, v0, v1}, components: [{p, q, s, entries: [{indices, target_index, value}]}]}
inline Cochain cochain_from(const json& j) {
  const std::string w = "cochain";
  int degree = field(j, "degree", w).get<int>();
  const auto& sj = field(j, "shape", w);
  CochainShape sh{count_from(field(sj, "m", w), w), count_from(field(sj, "n", w), w), count_from(field(sj, "v0", w), w),
                  count_from(field(sj, "v1", w), w)};
  if (degree < -1) throw ParseError(w + ": degree must be at least -1");
  Cochain c = Cochain::zero(sh, degree);
  if (!j.contains("components")) return c;
  for (const auto& comp : j["components"]) {
    ComponentKey k{field(comp, "p", w).get<int>(), field(comp, "q", w).get<int>(), field(comp, "s", w).get<int>()};
    if (!c.has(k)) throw ParseError(w + ": component " + to_string(k) + " does not occur in degree " + std::to_string(degree));
    auto& T = c[k];
    const std::size_t p = T.alt_arity(), q = T.sym_arity();
    for (const auto& e : field(comp, "entries", w)) {
      const auto& idx = field(e, "indices", w);
      if (!idx.is_array() || idx.size() != p + q) throw ParseError(w + ": entry has the wrong number of indices");
      Tuple xs, as;
      for (std::size_t t = 0; t < p + q; ++t) {
        std::size_t i = count_from(idx[t], w);
        if (i < 1 || i > (t < p ? sh.m : sh.n)) throw ParseError(w + ": index out of range");
        (t < p ? xs : as).push_back(i - 1);
      }
      for (std::size_t t = 1; t < xs.size(); ++t)
        if (xs[t - 1] >= xs[t]) throw ParseError(w + ": alternating indices must be strictly increasing");
      for (std::size_t t = 1; t < as.size(); ++t)
        if (as[t - 1] > as[t]) throw ParseError(w + ": symmetric indices must be weakly increasing");
      std::size_t r = count_from(field(e, "target_index", w), w);
      if (r < 1 || r > T.out_dim()) throw ParseError(w + ": target_index out of range");
      T.block(T.tuple_index(xs, as))[r - 1] = rational_from(field(e, "value", w), w);
    }
  }
  return c;
}

inline json cochain_to(const Cochain& c) {
  json j;
  j["degree"] = c.degree;
  j["shape"] = {{"m", c.shape.m}, {"n", c.shape.n}, {"v0", c.shape.v0}, {"v1", c.shape.v1}};
  j["components"] = json::array();
  for (const auto& [k, T] : c.components) {
    json entries = json::array();
    T.for_each_tuple([&](const Tuple& xs, const Tuple& as, std::span<const Rational> b) {
      for (std::size_t r = 0; r < b.size(); ++r) {
        if (is_zero(b[r])) continue;
        json idx = json::array();
        for (auto i : xs) idx.push_back(i + 1);
        for (auto i : as) idx.push_back(i + 1);
        entries.push_back({{"indices", idx}, {"target_index", r + 1}, {"value", rational_to(b[r])}});
      }
    });
    j["components"].push_back({{"p", k.p}, {"q", k.q}, {"s", k.s}, {"entries", entries}});
  }
  return j;
}

inline NijenhuisOperator nijenhuis_from(const json& j, const GradedSpace& g) {
  return {matrix_from(field(j, "N0", "operator"), g.dim0, g.dim0, "operator.N0"),
          matrix_from(field(j, "N1", "operator"), g.dim1, g.dim1, "operator.N1")};
}

inline json nijenhuis_to(const NijenhuisOperator& N) { return {{"N0", matrix_to(N.N0)}, {"N1", matrix_to(N.N1)}}; }

inline TrivializationCandidate candidate_from(const json& j, const GradedSpace& g) {
  const std::string w = "candidate";
  return {matrix_from(field(j, "N0", w), g.dim0, g.dim0, w + ".N0"),
          matrix_from(field(j, "N1", w), g.dim1, g.dim1, w + ".N1"),
          tensor_from(j.contains("N2") ? j["N2"] : json(), 2, 0, g.dim0, g.dim1, g.dim1, w + ".N2")};
}

inline json candidate_to(const TrivializationCandidate& t) {
  return {{"N0", matrix_to(t.N0)}, {"N1", matrix_to(t.N1)}, {"N2", tensor_to(t.N2)}};
}

inline EquivalenceWitness witness_from(const json& j, const GradedSpace& g, const TwoTermComplex& h) {
  const std::string w = "witness";
  return {matrix_from(field(j, "b0", w), h.dim0, g.dim0, w + ".b0"), matrix_from(field(j, "b1", w), h.dim1, g.dim1, w + ".b1"),
          tensor_from(j.contains("b2") ? j["b2"] : json(), 2, 0, g.dim0, g.dim1, h.dim1, w + ".b2")};
}

inline json witness_to(const EquivalenceWitness& w) {
  return {{"b0", matrix_to(w.b0)}, {"b1", matrix_to(w.b1)}, {"b2", tensor_to(w.b2)}};
}

// {base: algebra, fiber: complex, rep: representation, cocycle: cochain}
inline ExtensionDatum extension_from(const json& j) {
  ExtensionDatum E;
  E.base = algebra_from(field(j, "base", "extension")).algebra;
  E.fiber = complex_from(field(j, "fiber", "extension"));
  E.rep = representation_from(field(j, "rep", "extension"), E.base.space());
  if (!(E.rep.module == E.fiber)) throw ParseError("extension: rep.module differs from fiber");
  E.cocycle = j.contains("cocycle") ? cochain_from(j["cocycle"]) : Cochain::zero(shape_of(E.base, E.rep), 2);
  if (!(E.cocycle.shape == shape_of(E.base, E.rep)) || E.cocycle.degree != 2)
    throw ParseError("extension: cocycle must be a degree 2 cochain of base with values in fiber");
  return E;
}

inline json extension_to(const ExtensionDatum& E) {
  return {{"base", algebra_to(E.base)},
          {"fiber", complex_to(E.fiber)},
          {"rep", representation_to(E.rep)},
          {"cocycle", cochain_to(E.cocycle)}};
}

inline Splitting splitting_from(const json& j, const GradedSpace& ext, const GradedSpace& g) {
  return {matrix_from(field(j, "sigma0", "splitting"), ext.dim0, g.dim0, "splitting.sigma0"),
          matrix_from(field(j, "sigma1", "splitting"), ext.dim1, g.dim1, "splitting.sigma1")};
}

template <class S>
json report_to(const BasicReport<S>& r) {
  json a = json::array();
  for (const auto& c : r.conditions) {
    json e = {{"name", c.name}, {"statement", c.statement}, {"pass", c.pass()}, {"checked", c.checked},
              {"violations", c.violations.size()}};
    if (!c.pass()) {
      const auto& v = c.violations.front();
      json res = json::array();
      for (const auto& x : v.residual) res.push_back(to_string(x));
      e["witness"] = {{"args", describe(v.args)}, {"residual", res}};
    }
    a.push_back(e);
  }
  return a;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace lie2::io

// Command-line front end. Exit codes: 0 pass, 1 mathematical failure, 2 input error.
#include "lie2/io.hpp"
#include "lie2/lie2.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace lie2;
using io::json;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct Options {
  std::string report_path;  // JobResult JSON, "-" for stdout
};

io::AlgebraFile load_algebra(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    const auto& e = catalog::entry(spec.substr(8));
    io::AlgebraFile f{e.algebra(), std::nullopt, e.name, e.description};
    if (e.name == "str_sl2") f.form = catalog::sl2_quadratic().form;
    return f;
  }
  return io::algebra_from(io::read_json_file(spec));
}

template <class S>
void print_report(const BasicReport<S>& r) {
  for (const auto& c : r.conditions) {
    std::cout << (c.pass() ? "PASS  " : "FAIL  ") << c.name << "  " << c.statement;
    if (!c.pass()) {
      const auto& v = c.violations.front();
      std::cout << "\n      at " << describe(v.args) << ", residual [";
      for (std::size_t i = 0; i < v.residual.size(); ++i) {
        if (i) std::cout << ", ";
        if constexpr (std::is_same_v<S, Rational>)
          std::cout << io::pretty(v.residual[i]);
        else
          std::cout << to_string(v.residual[i]);
      }
      std::cout << "]";
    }
    std::cout << "\n";
  }
  for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
}

void emit(const Options& o, json result) {
  if (!o.report_path.empty()) io::write_json_file(o.report_path, result);
}

int cmd_verify(const Options& o, const std::string& file) {
  auto f = load_algebra(file);
  auto rep = check_axioms(f.algebra);
  std::cout << "algebra: dim g0 = " << f.algebra.dim0 << ", dim g-1 = " << f.algebra.dim1 << "\n";
  print_report(rep);
  json result = {{"command", "verify"}, {"input", file}, {"pass", rep.pass()}, {"axioms", io::report_to(rep)}};
  bool ok = rep.pass();
  if (f.form) {
    QuadraticLieAlgebra s{LieAlgebraData(f.algebra.dim0), *f.form};
    s.lie.bracket = f.algebra.l2_00;
    auto q = check_quadratic(s);
    std::cout << "quadratic structure on g0:\n";
    print_report(q);
    result["quadratic"] = io::report_to(q);
    ok = ok && q.pass();
  }
  std::cout << (ok ? "verdict: PASS" : "verdict: FAIL") << "\n";
  result["pass"] = ok;
  emit(o, result);
  return ok ? kPass : kFail;
}

Representation load_rep(const std::string& spec, const Lie2Algebra& L) {
  if (spec == "adjoint") return adjoint_representation(L);
  return io::representation_from(io::read_json_file(spec), L.space());
}

int cmd_cohomology(const Options& o, const std::string& file, const std::string& rep_spec, int degree, int max_degree) {
  auto L = load_algebra(file).algebra;
  auto axioms = check_axioms(L);
  if (!axioms.pass()) {
    std::cerr << "input is not a Lie 2-algebra: " << failure_summary(axioms) << "\n";
    return kFail;
  }
  auto mu = load_rep(rep_spec, L);
  auto rr = check_representation(mu, L);
  if (!rr.pass()) {
    std::cerr << "input is not a representation: " << failure_summary(rr) << "\n";
    return kFail;
  }
  CohomologyConfig cfg;
  cfg.max_degree = std::max(max_degree, degree + 1);
  std::size_t dim;
  try {
    dim = cohomology_dim(L, mu, degree, cfg);
  } catch (const BrokenComplex& e) {
    std::cerr << "internal error: D^2 != 0 (" << e.what() << ")\n";
    return kFail;
  }
  bool d2 = true;
  if (degree >= 0) d2 = d_squared(L, mu, degree - 1, cfg).is_zero();
  std::cout << dim << "\n";
  std::cout << "D^2 = 0 at degree " << degree - 1 << ": " << (d2 ? "verified" : "FAILED") << "\n";
  emit(o, {{"command", "cohomology"}, {"input", file}, {"rep", rep_spec}, {"degree", degree}, {"dimension", dim},
           {"cochain_dim", cochain_space_dim(L, mu, degree).total}, {"d_squared_zero", d2}});
  return d2 ? kPass : kFail;
}

NijenhuisOperator load_operator(const std::string& spec, const Lie2Algebra& L) {
  if (spec.rfind("builtin:", 0) == 0) {
    auto N = catalog::entry(spec.substr(8)).nijenhuis();
    if (!N) throw InvalidInput("builtin has no operator");
    return *N;
  }
  return io::nijenhuis_from(io::read_json_file(spec), L.space());
}

int cmd_nijenhuis(const Options& o, const std::string& file, std::string op, const std::string& out) {
  auto L = load_algebra(file).algebra;
  if (op.empty()) {
    if (file.rfind("builtin:", 0) != 0) throw InvalidInput("--op is required for file inputs");
    op = file;
  }
  auto N = load_operator(op, L);
  auto rep = check_nijenhuis(L, N);
  print_report(rep);
  json result = {{"command", "nijenhuis"}, {"input", file}, {"pass", rep.pass()}, {"conditions", io::report_to(rep)}};
  if (rep.pass()) {
    auto w = nijenhuis_deformation(L, N);
    result["datum"] = io::cochain_to(to_cochain(w));
    if (!out.empty()) io::write_json_file(out, result["datum"]);
    std::cout << "induced deformation datum equals D(N0,N1)\n";
  }
  std::cout << (rep.pass() ? "verdict: PASS" : "verdict: FAIL") << "\n";
  emit(o, result);
  return rep.pass() ? kPass : kFail;
}

DeformationDatum load_datum(const std::string& path, const Lie2Algebra& L) {
  auto c = io::cochain_from(io::read_json_file(path));
  if (!(c.shape == CochainShape{L.dim0, L.dim1, L.dim0, L.dim1}) || c.degree != 2)
    throw io::ParseError("datum must be a degree 2 cochain of the adjoint module");
  return datum_from_cochain(c);
}

int cmd_deform(const Options& o, const std::string& file, const std::string& datum, const std::string& lambda,
               const std::string& out) {
  auto in = load_algebra(file);
  const auto& L = in.algebra;
  auto w = load_datum(datum, L);
  Rational lam;
  try {
    lam = parse_rational(lambda);
  } catch (const std::invalid_argument& e) {
    throw io::ParseError(std::string("--lambda: ") + e.what());
  }
  auto rep = check_deformation_datum(L, w);
  print_report(rep);
  auto D = deform(L, w, lam);
  // metadata carries over; the invariant form only while the bracket is unchanged
  auto j = io::algebra_to(io::AlgebraFile{D, D == L ? in.form : std::nullopt, in.name, in.description});
  if (!out.empty()) io::write_json_file(out, j);
  std::cout << (rep.pass() ? "verdict: PASS" : "verdict: FAIL") << "\n";
  emit(o, {{"command", "deform"}, {"input", file}, {"lambda", lam.get_str()}, {"pass", rep.pass()},
           {"conditions", io::report_to(rep)}, {"algebra", j}});
  return rep.pass() ? kPass : kFail;
}

int cmd_trivialize(const Options& o, const std::string& file, const std::string& datum, const std::string& cand) {
  auto L = load_algebra(file).algebra;
  auto w = load_datum(datum, L);
  auto t = io::candidate_from(io::read_json_file(cand), L.space());
  auto r = check_trivializing_morphism(L, w, t);
  std::cout << "morphism (1+λN0, 1+λN1, λN2):\n";
  print_report(r.morphism);
  std::cout << "unfolded conditions:\n";
  print_report(r.unfolded);
  std::cout << (r.pass() ? "verdict: PASS" : "verdict: FAIL") << "\n";
  emit(o, {{"command", "trivialize"}, {"input", file}, {"pass", r.pass()}, {"morphism", io::report_to(r.morphism)},
           {"unfolded", io::report_to(r.unfolded)}});
  return r.pass() ? kPass : kFail;
}

int cmd_extend(const Options& o, const std::string& file, const std::string& out) {
  auto E = io::extension_from(io::read_json_file(file));
  auto rr = check_representation(E.rep, E.base);
  bool closed = is_cocycle(E.cocycle, E.base, E.rep);
  auto X = build_extension(E);
  auto ax = check_axioms(X);
  std::cout << "representation: " << (rr.pass() ? "PASS" : "FAIL") << "\n";
  std::cout << "2-cocycle: " << (closed ? "PASS" : "FAIL") << "\n";
  std::cout << "extension axioms:\n";
  print_report(ax);
  bool ok = rr.pass() && closed && ax.pass();
  auto j = io::algebra_to(X);
  if (!out.empty()) io::write_json_file(out, j);
  std::cout << (ok ? "verdict: PASS" : "verdict: FAIL") << "\n";
  emit(o, {{"command", "extend"}, {"input", file}, {"pass", ok}, {"representation", io::report_to(rr)},
           {"cocycle", closed}, {"axioms", io::report_to(ax)}, {"algebra", j}});
  return ok ? kPass : kFail;
}

// Exit 0 with a witness when the two extensions are equivalent, 1 when not.
int cmd_classify(const Options& o, const std::string& base, const std::string& rep, const std::string& fc1,
                 const std::string& fc2, const std::string& out) {
  auto L = load_algebra(base).algebra;
  auto mu = load_rep(rep, L);
  auto c1 = io::cochain_from(io::read_json_file(fc1));
  auto c2 = io::cochain_from(io::read_json_file(fc2));
  auto w = classify(L, mu.module, mu, c1, c2);
  json result = {{"command", "classify"}, {"equivalent", w.has_value()}};
  if (w) {
    result["witness"] = io::witness_to(*w);
    if (!out.empty()) io::write_json_file(out, result["witness"]);
    auto F = induced_equivalence(L.space(), mu.module, *w);
    bool hom = check_homomorphism(F, build_extension({L, mu.module, mu, c1}), build_extension({L, mu.module, mu, c2})).pass();
    result["homomorphism"] = hom;
    std::cout << "equivalent: witness b with D(b) = c1 - c2 found; induced morphism " << (hom ? "verified" : "FAILED")
              << "\n";
  } else {
    std::cout << "not equivalent: c1 - c2 is not a coboundary\n";
  }
  emit(o, result);
  return w ? kPass : kFail;
}

int cmd_catalog(const Options& o, const std::string& dir) {
  json list = json::array();
  for (const auto& e : catalog::entries()) {
    std::cout << e.name << "  " << e.description << "\n";
    list.push_back({{"name", e.name}, {"description", e.description}});
    if (dir.empty()) continue;
    std::filesystem::create_directories(dir);
    auto f = load_algebra("builtin:" + e.name);
    io::write_json_file(dir + "/" + e.name + ".json", io::algebra_to(f));
    if (auto N = e.nijenhuis(); N && !(N->N0.is_zero() && N->N1.is_zero()))
      io::write_json_file(dir + "/" + e.name + ".nijenhuis.json", io::nijenhuis_to(*N));
  }
  emit(o, {{"command", "catalog"}, {"entries", list}});
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie 2-algebras over the rationals: axioms, cohomology, deformations, Nijenhuis operators, extensions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--report", o.report_path, "write a JSON job result to this file (- for stdout)");

  std::string file, rep = "adjoint", op, datum, cand, out, lambda = "1", c1, c2, dir;
  int degree = 0, max_degree = CohomologyConfig{}.max_degree;

  auto* verify = app.add_subcommand("verify", "check the Lie 2-algebra axioms");
  verify->add_option("algebra", file, "algebra file or builtin:NAME")->required();

  auto* coh = app.add_subcommand("cohomology", "dimension of H^n(g; V)");
  coh->add_option("algebra", file, "algebra file or builtin:NAME")->required();
  coh->add_option("--rep", rep, "adjoint or a representation file");
  coh->add_option("--degree", degree, "cohomology degree n >= -1")->required();
  coh->add_option("--max-degree", max_degree, "largest cochain degree to assemble");

  auto* nij = app.add_subcommand("nijenhuis", "check a Nijenhuis operator and emit its deformation datum");
  nij->add_option("algebra", file, "algebra file or builtin:NAME")->required();
  nij->add_option("--op", op, "operator file or builtin:NAME (defaults to the builtin's operator)");
  nij->add_option("--output", out, "write the induced datum (degree 2 cochain)");

  auto* def = app.add_subcommand("deform", "check a deformation datum and instantiate the deformed algebra");
  def->add_option("algebra", file, "algebra file or builtin:NAME")->required();
  def->add_option("--datum", datum, "degree 2 adjoint cochain file")->required();
  def->add_option("--lambda", lambda, "value of the parameter, p/q (use --lambda=-p/q for negatives)");
  def->add_option("--output", out, "write the deformed algebra");

  auto* triv = app.add_subcommand("trivialize", "check that (1+λN0, 1+λN1, λN2) trivializes a deformation");
  triv->add_option("algebra", file, "algebra file or builtin:NAME")->required();
  triv->add_option("--datum", datum, "degree 2 adjoint cochain file")->required();
  triv->add_option("--candidate", cand, "file with N0, N1, N2")->required();

  auto* ext = app.add_subcommand("extend", "build the abelian extension of an extension datum");
  ext->add_option("datum", file, "extension datum file")->required();
  ext->add_option("--output", out, "write the extension algebra");

  auto* cls = app.add_subcommand("classify", "decide whether two 2-cocycles give equivalent extensions");
  cls->add_option("algebra", file, "base algebra file or builtin:NAME")->required();
  cls->add_option("--rep", rep, "adjoint or a representation file");
  cls->add_option("--c1", c1, "first cocycle")->required();
  cls->add_option("--c2", c2, "second cocycle")->required();
  cls->add_option("--output", out, "write the equivalence witness");

  auto* cat = app.add_subcommand("catalog", "list builtin examples");
  cat->add_option("--write", dir, "write the builtin algebras as JSON files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*verify) return cmd_verify(o, file);
    if (*coh) return cmd_cohomology(o, file, rep, degree, max_degree);
    if (*nij) return cmd_nijenhuis(o, file, op, out);
    if (*def) return cmd_deform(o, file, datum, lambda, out);
    if (*triv) return cmd_trivialize(o, file, datum, cand);
    if (*ext) return cmd_extend(o, file, out);
    if (*cls) return cmd_classify(o, file, rep, c1, c2, out);
    if (*cat) return cmd_catalog(o, dir);
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DegreeOverflow& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

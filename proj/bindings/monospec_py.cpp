// Python bindings for the main workbench operations. Values cross the
// boundary as decimal strings so arbitrary precision survives the trip.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monospec/curves.hpp"
#include "monospec/expr.hpp"
#include "monospec/intrel.hpp"
#include "monospec/modeq.hpp"
#include "monospec/specfun.hpp"

namespace py = pybind11;
using namespace monospec;

namespace {


std::string py_eval(const std::string& expr, int digits) {
    PrecisionContext ctx(digits);
    return eval_expr(expr, ctx).to_string();
}

py::dict py_es_solve(long n, long m, int digits) {
    PrecisionContext ctx(digits);
    ESData d = es_solve(ESPair(n, m), ctx);
    py::dict out;
    out["n"] = n;
    out["m"] = m;
    out["t"] = d.t.to_string();
    out["b"] = d.b.to_string();
    out["b_raw"] = d.b_raw.to_string();
    out["alpha"] = d.alpha.to_string();
    out["chi_cbrt"] = d.chi_cbrt.to_string();
    out["chi"] = d.chi.to_string();
    return out;
}

std::string py_solve_ratio(int r, const std::string& target, int digits) {
    PrecisionContext ctx(digits);
    return solve_ratio(Signature(r), eval_expr(target, ctx), ctx).to_string();
}

std::string py_hyp2f1(int r, const std::string& t, int digits) {
    PrecisionContext ctx(digits);
    return hyp2f1_unit(Signature(r), eval_expr(t, ctx), ctx).to_string();
}

std::string py_hyp_ratio(int r, const std::string& t, int digits) {
    PrecisionContext ctx(digits);
    return hyp_ratio(Signature(r), eval_expr(t, ctx), ctx).to_string();
}

std::string py_modular_partner(const std::string& alpha, long n, int r, int digits) {
    PrecisionContext ctx(digits);
    return modular_partner(eval_expr(alpha, ctx), n, Signature(r), ctx).to_string();
}

std::string py_gamma(long p, long q, int digits) {
    PrecisionContext ctx(digits);
    return gamma_q(QRational(p, q), ctx).to_string();
}

std::string py_ellip_k(const std::string& k, int digits) {
    PrecisionContext ctx(digits);
    return ellip_k(EllipticModulus::from_k(eval_expr(k, ctx), ctx), ctx).to_string();
}

std::string py_ellip_e(const std::string& k, int digits) {
    PrecisionContext ctx(digits);
    BigReal kk = eval_expr(k, ctx);
    if (kk == 1L) return ellip_e(EllipticModulus{kk, ctx.real(0)}, ctx).to_string();
    return ellip_e(EllipticModulus::from_k(kk, ctx), ctx).to_string();
}

std::string py_weier(const std::string& g2, const std::string& g3, int digits) {
    PrecisionContext ctx(digits);
    return weier_half_period({eval_expr(g2, ctx), eval_expr(g3, ctx)}, ctx).to_string();
}

py::tuple py_richelot(const std::vector<std::string>& roots, int digits) {
    PrecisionContext ctx(digits);
    if (roots.size() != 6) throw domain_error("richelot_periods: need 6 roots");
    std::array<BigReal, 6> e{ctx.real(0), ctx.real(0), ctx.real(0),
                             ctx.real(0), ctx.real(0), ctx.real(0)};
    for (int i = 0; i < 6; ++i) e[i] = eval_expr(roots[i], ctx);
    auto [a, b] = richelot_periods(e, ctx);
    return py::make_tuple(a.to_string(), b.to_string());
}

std::string py_ramanujan(int series, long N, int digits) {
    PrecisionContext ctx(digits);
    return ramanujan_sum(series, N, ctx).to_string();
}

std::string py_curve_table1(int row, py::kwargs kw, int digits) {
    PrecisionContext ctx(digits);
    Table1Params p;
    if (kw.contains("m")) p.m = kw["m"].cast<long>();
    if (kw.contains("sign")) p.sign = kw["sign"].cast<int>();
    if (kw.contains("eps")) p.eps = kw["eps"].cast<int>();
    if (kw.contains("k")) p.k = eval_expr(kw["k"].cast<std::string>(), ctx);
    if (kw.contains("a")) p.a = eval_expr(kw["a"].cast<std::string>(), ctx);
    if (kw.contains("alpha")) p.alpha = eval_expr(kw["alpha"].cast<std::string>(), ctx);
    if (kw.contains("beta")) p.beta = eval_expr(kw["beta"].cast<std::string>(), ctx);
    if (kw.contains("gamma")) p.gamma = eval_expr(kw["gamma"].cast<std::string>(), ctx);
    return curve_to_json(build_table1(row, p, ctx));
}

std::string py_curve_trigonal(long n, long m, int digits) {
    PrecisionContext ctx(digits);
    return curve_to_json(build_symmetric_trigonal(ESPair(n, m), ctx));
}

py::dict py_check_h1(const std::string& curve_json, int digits) {
    PrecisionContext ctx(digits);
    H1Report rep = check_h1(curve_from_json(curve_json, ctx), ctx);
    py::dict out;
    out["ok"] = rep.ok;
    out["max_residual"] = rep.max_residual.to_string(10);
    py::list v;
    for (auto [r, j] : rep.violations) v.append(py::make_tuple(r, j));
    out["violations"] = v;
    return out;
}

py::dict py_charge2(const std::string& k, int digits) {
    PrecisionContext ctx(digits);
    Charge2Result r = charge2_es_check(eval_expr(k, ctx), ctx);
    py::dict out;
    out["p1"] = py::make_tuple(r.p1.re.to_string(), r.p1.im.to_string());
    out["p2"] = py::make_tuple(r.p2.re.to_string(), r.p2.im.to_string());
    out["relation"] = r.relation.coeffs;
    out["residual"] = r.residual.to_string(10);
    out["primitive"] = primitive_check(r.relation);
    return out;
}

py::object py_find_relation(const std::vector<std::string>& values, double max_norm,
                            int digits) {
    PrecisionContext ctx(digits);
    std::vector<BigReal> x;
    for (const auto& v : values) x.push_back(eval_expr(v, ctx));
    auto r = find_relation(x, max_norm, ctx);
    if (!r) return py::none();
    py::dict out;
    out["coeffs"] = r->coeffs;
    out["residual"] = r->residual.to_string(10);
    return out;
}

py::object py_rational_detect(const std::string& x, long long max_den, int digits) {
    PrecisionContext ctx(digits);
    auto r = rational_detect(eval_expr(x, ctx), max_den, ctx);
    if (!r) return py::none();
    return py::make_tuple(r->p, r->q);
}

py::object py_probe(const std::string& x, int dmax, double hmax, int digits) {
    PrecisionContext ctx(digits);
    auto rep = algebraicity_probe(eval_expr(x, ctx), dmax, hmax, ctx);
    if (!rep.found) return py::none();
    py::list out;
    for (long long c : *rep.found) out.append(c);
    return out;
}

} // namespace

PYBIND11_MODULE(_monospec, mod) {
    mod.doc() = "High-precision workbench for monopole spectral curves";

    py::register_exception<domain_error>(mod, "DomainError");
    py::register_exception<constraint_error>(mod, "ConstraintError");
    py::register_exception<precision_error>(mod, "PrecisionError");
    py::register_exception<accuracy_error>(mod, "AccuracyError");
    py::register_exception<verification_error>(mod, "VerificationError");

    mod.def("eval_expr", &py_eval, py::arg("expr"), py::arg("digits") = 50,
            "Evaluate an exact expression to a decimal string");
    mod.def("es_solve", &py_es_solve, py::arg("n"), py::arg("m"), py::arg("digits") = 50,
            "Solve the Ercolani-Sinha constraints for the pair (n,m)");
    mod.def("solve_ratio", &py_solve_ratio, py::arg("r"), py::arg("target"),
            py::arg("digits") = 50);
    mod.def("hyp2f1_unit", &py_hyp2f1, py::arg("r"), py::arg("t"), py::arg("digits") = 50);
    mod.def("hyp_ratio", &py_hyp_ratio, py::arg("r"), py::arg("t"), py::arg("digits") = 50);
    mod.def("modular_partner", &py_modular_partner, py::arg("alpha"), py::arg("n"),
            py::arg("r"), py::arg("digits") = 50);
    mod.def("gamma_q", &py_gamma, py::arg("p"), py::arg("q"), py::arg("digits") = 50);
    mod.def("ellip_k", &py_ellip_k, py::arg("k"), py::arg("digits") = 50);
    mod.def("ellip_e", &py_ellip_e, py::arg("k"), py::arg("digits") = 50);
    mod.def("weier_half_period", &py_weier, py::arg("g2"), py::arg("g3"),
            py::arg("digits") = 50);
    mod.def("richelot_periods", &py_richelot, py::arg("roots"), py::arg("digits") = 50);
    mod.def("ramanujan_sum", &py_ramanujan, py::arg("series"), py::arg("N"),
            py::arg("digits") = 50);
    mod.def("build_table1",
            [](int row, int digits, py::kwargs kw) { return py_curve_table1(row, kw, digits); },
            py::arg("row"), py::arg("digits") = 50);
    mod.def("build_symmetric_trigonal", &py_curve_trigonal, py::arg("n"), py::arg("m"),
            py::arg("digits") = 50);
    mod.def("check_h1", &py_check_h1, py::arg("curve_json"), py::arg("digits") = 50);
    mod.def("charge2_es_check", &py_charge2, py::arg("k"), py::arg("digits") = 50);
    mod.def("find_relation", &py_find_relation, py::arg("values"), py::arg("max_norm"),
            py::arg("digits") = 50);
    mod.def("rational_detect", &py_rational_detect, py::arg("x"), py::arg("max_den"),
            py::arg("digits") = 50);
    mod.def("algebraicity_probe", &py_probe, py::arg("x"), py::arg("dmax"), py::arg("hmax"),
            py::arg("digits") = 50);

    mod.attr("__version__") = "0.1.0";
}

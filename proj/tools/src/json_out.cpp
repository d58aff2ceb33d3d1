#include "json_out.hpp"

#include "dnc/expression.hpp"

namespace dnc::cli {

std::string coefficient_text(const Signature& sig, const PhasePolynomial& c) {
    if (sig.angles().exact()) return c.to_string();
    return CoefficientTraits<Complex>::to_string(c.eval(sig.angles()));
}

json element_json(const Signature& sig, const ExactElement& x) {
    json out;
    out["expression"] = sig.angles().exact() ? print_expression(sig, x) : print_expression(sig, to_numeric(x, sig.angles()));
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"monomial", to_string(sig, m)}, {"coefficient", coefficient_text(sig, c)}});
    out["terms"] = std::move(terms);
    return out;
}

json state_json(const Signature& sig, const ExactState& v) {
    json out = json::object();
    for (const auto& [k, c] : v.amplitudes()) out[to_string(k)] = coefficient_text(sig, c);
    return out;
}

json report_json(const Report& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"residual", f.residual}});
    return {{"suite", r.suite},
            {"pass", r.pass()},
            {"cases", r.cases},
            {"failure_count", r.failure_count},
            {"failures", std::move(failures)},
            {"wall_ms", r.wall_ms},
            {"mode", to_string(r.mode)}};
}

} // namespace dnc::cli

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "json_out.hpp"

#include "dnc/deformation.hpp"
#include "dnc/errors.hpp"
#include "dnc/expression.hpp"
#include "dnc/ktheory.hpp"
#include "dnc/normkit.hpp"
#include "dnc/representation.hpp"
#include "dnc/stinespring.hpp"

namespace {

using namespace dnc;
using cli::json;

struct Common {
    std::string config;
    cli::Overrides flags;
    bool pretty = false;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--config", c.config, "JSON config file");
    app->add_option("--n", c.flags.n, "number of generators");
    app->add_option("--l", c.flags.l, "number of isometries (generators 1..l)");
    app->add_option("--phi", c.flags.phi, "angle phi_ij as i,j=p/q (repeatable)");
    app->add_option("--K", c.flags.K, "truncation cutoff");
    app->add_option("--band", c.flags.band, "safe band width");
    app->add_option("--mode", c.flags.mode, "exact or numeric");
    app->add_option("--seed", c.flags.seed, "seed for randomized suites");
    app->add_option("--cases", c.flags.cases, "number of random cases per suite");
    app->add_flag("--pretty", c.pretty, "indent JSON output");
}

std::vector<std::int64_t> parse_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::config_error, what + ": cannot read '" + text + "'");
        }
    }
    return out;
}

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal forms, representations and verification suites for doubly non-commuting isometries"};
    app.require_subcommand(1);
    Common common;
    add_common(&app, common);

    std::string x_text, y_text, index_text, box_text = "3,3,3", summand_text;
    std::vector<std::string> vectors, suites;
    std::int64_t E = 2, G = 2;

    auto with_common = [&](CLI::App* sub) {
        add_common(sub, common);
        return sub;
    };

    auto* normalize_cmd = with_common(app.add_subcommand("normalize", "normal form of an expression"));
    normalize_cmd->add_option("expr", x_text)->required();
    auto* mul_cmd = with_common(app.add_subcommand("mul", "product of two expressions"));
    mul_cmd->add_option("x", x_text)->required();
    mul_cmd->add_option("y", y_text)->required();
    auto* adjoint_cmd = with_common(app.add_subcommand("adjoint", "adjoint of an expression"));
    adjoint_cmd->add_option("expr", x_text)->required();
    auto* theta_cmd = with_common(app.add_subcommand("theta", "torus average of an expression"));
    theta_cmd->add_option("expr", x_text)->required();
    auto* norm_cmd = with_common(app.add_subcommand("norm", "exact norm of a projection-subalgebra element"));
    norm_cmd->add_option("expr", x_text)->required();

    auto* rep_cmd = app.add_subcommand("rep", "standard representation");
    rep_cmd->require_subcommand(1);
    auto* rep_apply = with_common(rep_cmd->add_subcommand("apply", "apply an expression to a basis vector"));
    rep_apply->add_option("expr", x_text)->required();
    rep_apply->add_option("--index", index_text, "basis label k1,...,kn")->required();

    auto* extract_cmd = with_common(app.add_subcommand("extract", "recover an expression from its action"));
    extract_cmd->add_option("expr", x_text)->required();
    extract_cmd->add_option("--box", box_text, "exponent bounds E,F,G")->capture_default_str();

    auto* st_cmd = app.add_subcommand("stinespring", "Stinespring space Gram matrices");
    st_cmd->require_subcommand(1);
    auto* st_gram = with_common(st_cmd->add_subcommand("gram", "Gram matrix of [x (x) ee_k] vectors"));
    st_gram->add_option("vectors", vectors, "vectors as EXPR@k1,...,kl");
    st_gram->add_option("--summand", summand_text, "use the standard basis of the summand L_k, k = k1,...,kl");
    st_gram->add_option("--E", E, "isometry exponent bound for --summand")->capture_default_str();
    st_gram->add_option("--G", G, "unitary exponent bound for --summand")->capture_default_str();

    auto* deform_cmd = app.add_subcommand("deform", "deformed product and intertwiner");
    deform_cmd->require_subcommand(1);
    auto* deform_mul = with_common(deform_cmd->add_subcommand("mul", "deformed product of two untwisted expressions"));
    deform_mul->add_option("x", x_text)->required();
    deform_mul->add_option("y", y_text)->required();
    auto* deform_verify = with_common(deform_cmd->add_subcommand("verify", "check the intertwining unitary on the band"));

    auto* ktheory_cmd = with_common(app.add_subcommand("ktheory", "ranks of K_0 and K_1"));

    auto* verify_cmd = with_common(app.add_subcommand("verify", "run verification suites"));
    verify_cmd->add_option("--suite", suites, "suite name, or 'all' (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const SuiteConfig cfg = cli::load_config(common.config, common.flags);
        const Signature& sig = cfg.sig;
        const bool pretty = common.pretty;

        if (normalize_cmd->parsed()) {
            emit({{"input", x_text}, {"result", cli::element_json(sig, parse_expression(x_text, sig))}}, pretty);
        } else if (mul_cmd->parsed()) {
            auto r = mul(sig, parse_expression(x_text, sig), parse_expression(y_text, sig));
            emit({{"result", cli::element_json(sig, r)}}, pretty);
        } else if (adjoint_cmd->parsed()) {
            emit({{"result", cli::element_json(sig, adjoint(sig, parse_expression(x_text, sig)))}}, pretty);
        } else if (theta_cmd->parsed()) {
            emit({{"result", cli::element_json(sig, theta(sig, parse_expression(x_text, sig)))}}, pretty);
        } else if (norm_cmd->parsed()) {
            auto x = parse_expression(x_text, sig);
            auto sym = diagonal_symbol(sig, x);
            json cells = json::array();
            for (std::size_t f = 0; f < sym.cell_count(); ++f)
                cells.push_back({{"cell", sym.cell(f)}, {"value", cli::coefficient_text(sig, sym.values[f])}});
            json out{{"cutoff", sym.cutoff}, {"symbol", cells}};
            if (sig.angles().exact()) {
                auto nv = pal_norm(sig, x);
                out["norm"] = nv.norm;
                out["norm_squared"] = nv.norm_squared ? json(nv.norm_squared->get_str()) : json(nullptr);
            } else {
                out["norm"] = pal_norm(sig, to_numeric(x, sig.angles())).norm;
                out["norm_squared"] = nullptr;
            }
            emit(out, pretty);
        } else if (rep_apply->parsed()) {
            auto k = parse_list(index_text, "--index");
            if (k.size() != static_cast<std::size_t>(sig.n()))
                throw Error(ErrorCode::config_error, "--index: expected " + std::to_string(sig.n()) + " entries");
            Truncation trunc(cfg.K, cfg.band);
            auto v = apply_element(sig, trunc, parse_expression(x_text, sig), ExactState::basis(k));
            emit(cli::state_json(sig, v), pretty);
        } else if (extract_cmd->parsed()) {
            auto b = parse_list(box_text, "--box");
            if (b.size() != 3) throw Error(ErrorCode::config_error, "--box: expected E,F,G");
            ExponentBox box{b[0], b[1], b[2]};
            auto x = parse_expression(x_text, sig);
            Truncation trunc(cfg.K, 0);
            StateOracle<PhasePolynomial> oracle = [&](const MultiIndex& k) {
                return apply_element(sig, trunc, x, ExactState::basis(k));
            };
            auto y = extract_coefficients(sig, trunc, oracle, box);
            emit({{"recovered", cli::element_json(sig, y)}, {"matches", y == x}}, pretty);
        } else if (st_gram->parsed()) {
            std::vector<StVector<PhasePolynomial>> vs;
            if (!summand_text.empty()) vs = summand_basis(sig, parse_list(summand_text, "--summand"), E, G);
            for (const auto& v : vectors) {
                auto at = v.rfind('@');
                if (at == std::string::npos) throw Error(ErrorCode::config_error, "vector '" + v + "' needs @k1,...,kl");
                IsometryIndex k = at + 1 < v.size() ? parse_list(v.substr(at + 1), "vector label") : IsometryIndex{};
                vs.push_back({parse_expression(v.substr(0, at), sig), k});
            }
            auto g = gram_matrix(sig, vs);
            json rows = json::array();
            for (const auto& row : g) {
                json r = json::array();
                for (const auto& c : row) r.push_back(cli::coefficient_text(sig, c));
                rows.push_back(std::move(r));
            }
            json labels = json::array();
            for (const auto& v : vs) labels.push_back(print_expression(sig, v.x) + " @ " + to_string(MultiIndex(v.k)));
            emit({{"vectors", labels},
                  {"gram", rows},
                  {"orthonormal", is_identity(g)},
                  {"min_eigenvalue", gram_min_eigenvalue(g, sig.angles())}},
                 pretty);
        } else if (deform_mul->parsed()) {
            DeformationContext ctx(sig);
            auto r = deformed_mul(ctx, parse_expression(x_text, ctx.base()), parse_expression(y_text, ctx.base()));
            emit({{"result", cli::element_json(ctx.base(), r)}}, pretty);
        } else if (deform_verify->parsed()) {
            auto report = verify_intertwiner(DeformationContext(sig), Truncation(cfg.K, cfg.band));
            for (const auto& row : report.rows)
                emit({{"generator", row.generator},
                      {"adjoint", row.star},
                      {"checked", row.checked},
                      {"mismatches", row.mismatches},
                      {"max_residual", row.max_residual},
                      {"mode", to_string(report.mode)}},
                     pretty);
            return report.ok(1e-12) ? 0 : 1;
        } else if (ktheory_cmd->parsed()) {
            auto k = kgroups(sig.n(), sig.l());
            emit({{"n", sig.n()}, {"l", sig.l()}, {"k0", group_string(k.k0_rank)}, {"k1", group_string(k.k1_rank)},
                  {"k0_rank", k.k0_rank}, {"k1_rank", k.k1_rank}},
                 pretty);
        } else if (verify_cmd->parsed()) {
            if (suites.empty()) suites = cli::configured_suites(common.config);
            if (suites.empty()) throw Error(ErrorCode::config_error, "--suite: no suite selected");
            if (std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
            bool all_pass = true;
            for (const auto& s : suites) {
                auto r = run_suite(cfg, s);
                all_pass = all_pass && r.pass();
                emit(cli::report_json(r), pretty);
            }
            return all_pass ? 0 : 1;
        }
    } catch (const SyntaxError& e) {
        emit({{"error", to_string(e.code())}, {"message", e.what()}, {"offset", e.offset()}}, common.pretty);
        return 2;
    } catch (const Error& e) {
        emit({{"error", to_string(e.code())}, {"message", e.what()}}, common.pretty);
        return 2;
    } catch (const std::exception& e) {
        emit({{"error", "InternalError"}, {"message", e.what()}}, common.pretty);
        return 3;
    }
    return 0;
}

#include "dnc/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "dnc/deformation.hpp"
#include "dnc/errors.hpp"
#include "dnc/expression.hpp"
#include "dnc/ktheory.hpp"
#include "dnc/normkit.hpp"
#include "dnc/random.hpp"
#include "dnc/representation.hpp"
#include "dnc/stinespring.hpp"

namespace dnc {

namespace {

constexpr std::size_t kKeptFailures = 20;
constexpr double kNumericTolerance = 1e-12;

std::size_t cases_or(const SuiteConfig& cfg, std::size_t fallback) { return cfg.cases ? cfg.cases : fallback; }

Word power_word(int i, std::int64_t k, bool star) { return Word(static_cast<std::size_t>(k), Letter{i, star}); }

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string join(const std::vector<std::int64_t>& v) { return to_string(MultiIndex(v)); }

/// Largest shift of any coordinate while the word acts right to left.
std::int64_t reach(const Word& w) {
    std::map<int, std::int64_t> shift;
    std::int64_t out = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto& s = shift[it->index];
        s += it->star ? -1 : 1;
        out = std::max<std::int64_t>(out, std::llabs(s));
    }
    return out;
}

/// One relation lhs = c * rhs between words.
struct WordRelation {
    std::string name;
    Word lhs;
    Phase c;
    Word rhs;
};

std::string describe(const WordRelation& r) {
    return r.name + ": " + to_string(r.lhs) + " = " + r.c.to_string() + " * " + to_string(r.rhs);
}

/// Empty when the two sides agree on e_k.
std::string action_residual(const Signature& sig, const Truncation& trunc, const WordRelation& r, const MultiIndex& k) {
    auto a = apply_word(sig, trunc, r.lhs, k);
    auto b = apply_word(sig, trunc, r.rhs, k);
    if (!a || !b) return (!a && !b) ? "" : "one side annihilates e_k";
    if (a->index != b->index) return "images " + to_string(a->index) + " and " + to_string(b->index);
    Phase rhs = r.c * b->phase;
    if (sig.angles().exact()) return a->phase == rhs ? "" : a->phase.to_string() + " vs " + rhs.to_string();
    double d = std::abs(phase_eval(a->phase, sig.angles()).value - phase_eval(rhs, sig.angles()).value);
    return d <= kNumericTolerance ? "" : "residual " + std::to_string(d);
}

// ---------------------------------------------------------------------------

void confluence(const SuiteConfig& cfg, Report& rep) {
    Rng words(cfg.seed), strategy_a(cfg.seed ^ 0xa5a5a5a5ULL), strategy_b(cfg.seed * 7919 + 17);
    const auto& sig = cfg.sig;
    for (std::size_t c = 0; c < cases_or(cfg, 10000); ++c) {
        Word w = random_word(sig, 12, words);
        auto a = normalize(sig, w, RewriteStrategy::leftmost);
        auto b = normalize(sig, w, RewriteStrategy::randomized, &strategy_a);
        auto d = normalize(sig, w, RewriteStrategy::randomized, &strategy_b);
        ++rep.cases;
        if (!(a.phase == b.phase && a.monomial == b.monomial && b.phase == d.phase && b.monomial == d.monomial))
            rep.fail(to_string(w), a.phase.to_string() + " " + to_string(sig, a.monomial) + " vs " +
                                       b.phase.to_string() + " " + to_string(sig, b.monomial));
        // normal monomials are fixed points
        auto again = normalize(sig, a.monomial.word(sig), RewriteStrategy::randomized, &strategy_b);
        if (!again.phase.is_identity() || again.monomial != a.monomial)
            rep.fail(to_string(sig, a.monomial), "normal monomial is not a fixed point");
    }
}

std::vector<WordRelation> defining_relations(const Signature& sig) {
    std::vector<WordRelation> out;
    for (int i = 1; i <= sig.n(); ++i) {
        out.push_back({"isometry", {{i, true}, {i, false}}, {}, {}});
        if (!sig.is_isometry(i)) out.push_back({"unitary", {{i, false}, {i, true}}, {}, {}});
        for (int j = 1; j <= sig.n(); ++j) {
            if (i == j) continue;
            out.push_back({"star-commutation", {{i, true}, {j, false}}, sig.z(i, j).inverse(), {{j, false}, {i, true}}});
            out.push_back({"commutation", {{i, false}, {j, false}}, sig.z(i, j), {{j, false}, {i, false}}});
        }
    }
    return out;
}

std::vector<WordRelation> lemma_relations(const Signature& sig, std::int64_t max_k) {
    std::vector<WordRelation> out;
    auto proj = [](int i, std::int64_t k) { return cat(power_word(i, k, false), power_word(i, k, true)); };
    for (int i = 1; i <= sig.n(); ++i) {
        for (int j = 1; j <= sig.n(); ++j) {
            if (i == j) continue;
            out.push_back({"adjoint-swap", {{j, true}, {i, false}}, sig.z(i, j), {{i, false}, {j, true}}});
            out.push_back({"adjoint-pair", {{j, true}, {i, true}}, sig.z(i, j).inverse(), {{i, true}, {j, true}}});
            for (std::int64_t k = 0; k <= max_k; ++k)
                for (bool star : {false, true}) {
                    Word g{{i, star}};
                    out.push_back({"range-commutes", cat(g, proj(j, k)), {}, cat(proj(j, k), g)});
                }
        }
        for (std::int64_t k = 0; k <= max_k; ++k) {
            out.push_back({"power-isometry", cat(power_word(i, k, true), power_word(i, k, false)), {}, {}});
            out.push_back({"idempotent", cat(proj(i, k), proj(i, k)), {}, proj(i, k)});
            for (std::int64_t m = k; m <= max_k; ++m) {
                out.push_back({"nested-range", cat(proj(i, k), proj(i, m)), {}, proj(i, m)});
                out.push_back({"nested-range", cat(proj(i, m), proj(i, k)), {}, proj(i, m)});
            }
        }
    }
    return out;
}

void relations(const SuiteConfig& cfg, Report& rep) {
    const auto& sig = cfg.sig;
    Truncation trunc(cfg.K, cfg.band);
    auto rels = defining_relations(sig);
    auto lemma = lemma_relations(sig, 4);
    rels.insert(rels.end(), lemma.begin(), lemma.end());

    std::map<std::int64_t, std::vector<MultiIndex>> bases;
    for (const auto& r : rels) {
        // the relation as an identity of normal forms
        auto l = normalize(sig, r.lhs);
        auto rr = normalize(sig, r.rhs);
        ++rep.cases;
        if (l.monomial != rr.monomial || l.phase != r.c * rr.phase)
            rep.fail(describe(r), "normal forms differ: " + l.phase.to_string() + " " + to_string(sig, l.monomial) +
                                      " vs " + (r.c * rr.phase).to_string() + " " + to_string(sig, rr.monomial));

        std::int64_t headroom = std::max({cfg.band, reach(r.lhs), reach(r.rhs)});
        if (headroom > cfg.K) continue;
        auto [it, fresh] = bases.try_emplace(headroom);
        if (fresh) it->second = trunc.band_basis(sig, headroom);
        for (const auto& k : it->second) {
            ++rep.cases;
            if (auto res = action_residual(sig, trunc, r, k); !res.empty()) rep.fail(describe(r) + " on e" + to_string(k), res);
        }
    }

    // range projections are selfadjoint as elements
    for (int i = 1; i <= sig.n(); ++i)
        for (std::int64_t k = 0; k <= 4; ++k) {
            auto p = from_word<PhasePolynomial>(sig, cat(power_word(i, k, false), power_word(i, k, true)));
            ++rep.cases;
            if (adjoint(sig, p) != p) rep.fail("s" + std::to_string(i) + "^" + std::to_string(k) + " s*^k", "not selfadjoint");
        }

    // isometry property on random band-supported vectors
    Rng rng(cfg.seed);
    auto basis = trunc.band_basis(sig, std::max<std::int64_t>(cfg.band, 1));
    if (basis.empty()) return;
    for (int i = 1; i <= sig.n(); ++i)
        for (int trial = 0; trial < 20; ++trial) {
            NumericState v, w;
            for (int t = 0; t < 4; ++t) {
                v.add(basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(basis.size()) - 1))],
                      Complex(static_cast<double>(uniform(rng, -3, 3)), static_cast<double>(uniform(rng, -3, 3))));
                w.add(basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(basis.size()) - 1))],
                      Complex(static_cast<double>(uniform(rng, -3, 3)), static_cast<double>(uniform(rng, -3, 3))));
            }
            auto inner = [](const NumericState& a, const NumericState& b) {
                Complex s = 0;
                for (const auto& [k, c] : a.amplitudes()) s += c * std::conj(b.amplitude(k));
                return s;
            };
            auto gv = apply_generator(sig, trunc, i, false, v);
            auto gw = apply_generator(sig, trunc, i, false, w);
            double d = std::abs(inner(gv, gw) - inner(v, w));
            ++rep.cases;
            if (d > 1e-9) rep.fail("isometry s" + std::to_string(i), "inner product residual " + std::to_string(d));
        }
}

/// sigma(x) e_k applied one generator at a time, without apply_word.
ExactState letterwise_image(const Signature& sig, const Truncation& trunc, const ExactElement& x, const MultiIndex& k) {
    ExactState out;
    for (const auto& [m, c] : x.terms()) {
        ExactState v = ExactState::basis(k);
        Word w = m.word(sig);
        for (auto it = w.rbegin(); it != w.rend() && !v.is_zero(); ++it)
            v = apply_generator(sig, trunc, it->index, it->star, v);
        for (const auto& [idx, a] : v.amplitudes()) out.add(idx, a * c);
    }
    return out;
}

void injectivity(const SuiteConfig& cfg, Report& rep) {
    const auto& sig = cfg.sig;
    Rng rng(cfg.seed);
    ExponentBox box{3, 3, 3};
    while (box.E + box.F + 1 > cfg.K && box.F > 0) {
        --box.E;
        box.F = std::min(box.F, box.E);
    }
    box.E = std::max<std::int64_t>(0, std::min(box.E, cfg.K - box.F - 1));
    box.G = std::min(box.G, cfg.K - 1);
    Truncation trunc(cfg.K, 0);
    for (std::size_t c = 0; c < cases_or(cfg, 500); ++c) {
        auto x = random_element(sig, box, 6, rng);
        StateOracle<PhasePolynomial> oracle = [&](const MultiIndex& k) { return letterwise_image(sig, trunc, x, k); };
        ++rep.cases;
        try {
            auto y = extract_coefficients(sig, trunc, oracle, box);
            if (y != x) rep.fail(print_expression(sig, x), "recovered " + print_expression(sig, y));
        } catch (const Error& e) {
            rep.fail(print_expression(sig, x), e.what());
        }
    }
}

void norm(const SuiteConfig& cfg, Report& rep) {
    const auto& sig = cfg.sig;
    Rng rng(cfg.seed);
    for (std::size_t c = 0; c < cases_or(cfg, 200); ++c) {
        auto x = random_projection_element(sig, 4, 5, rng);
        ++rep.cases;
        auto sym = diagonal_symbol(sig, x);
        auto nv = pal_norm(sig, x);
        if (!nv.norm_squared) {
            rep.fail(print_expression(sig, x), "no exact norm");
            continue;
        }
        // the truncated operator on the window 0 <= k_i <= N is diagonal
        Truncation trunc(std::max<std::int64_t>(sym.cutoff, 0), 0);
        mpq_class best = 0;
        bool diagonal = true, symbol_matches = true;
        for (std::size_t flat = 0; flat < sym.cell_count(); ++flat) {
            auto cell = sym.cell(flat);
            MultiIndex k(static_cast<std::size_t>(sig.n()), 0);
            for (std::size_t d = 0; d < sym.slots.size(); ++d) k[static_cast<std::size_t>(sym.slots[d] - 1)] = cell[d];
            auto image = apply_element(sig, trunc, x, ExactState::basis(k));
            for (const auto& [idx, a] : image.amplitudes())
                if (idx != k) diagonal = false;
            auto value = image.amplitude(k);
            if (value != sym.values[flat]) symbol_matches = false;
            if (auto s = value.as_scalar()) best = std::max(best, s->norm_squared());
            else diagonal = false;
        }
        if (!diagonal) rep.fail(print_expression(sig, x), "truncated operator is not a scalar diagonal");
        if (!symbol_matches) rep.fail(print_expression(sig, x), "diagonal symbol differs from the operator diagonal");
        if (best != *nv.norm_squared)
            rep.fail(print_expression(sig, x), "norm^2 " + nv.norm_squared->get_str() + " vs operator " + best.get_str());

        auto xx = mul(sig, adjoint(sig, x), x);
        auto n2 = pal_norm(sig, xx);
        ++rep.cases;
        if (!n2.norm_squared || *n2.norm_squared != *nv.norm_squared * *nv.norm_squared)
            rep.fail(print_expression(sig, x), "C*-identity fails");

        // symbol is multiplicative and *-preserving
        auto y = random_projection_element(sig, 4, 5, rng);
        auto sxy = diagonal_symbol(sig, mul(sig, x, y));
        auto sx = diagonal_symbol(sig, x), sy = diagonal_symbol(sig, y), sxs = diagonal_symbol(sig, adjoint(sig, x));
        ++rep.cases;
        for (std::size_t flat = 0; flat < sxy.cell_count(); ++flat) {
            auto cell = sxy.cell(flat);
            if (sxy.values[flat] != sx.at(cell) * sy.at(cell) || sxs.at(cell) != sx.at(cell).conj()) {
                rep.fail(print_expression(sig, x) + " ; " + print_expression(sig, y), "symbol not a *-homomorphism at " + join(cell));
                break;
            }
        }
    }
}

/// Every l-tuple with entries in [0, top], in lexicographic order.
std::vector<IsometryIndex> tuples(std::size_t l, std::int64_t top) {
    std::vector<IsometryIndex> out;
    IsometryIndex t(l, 0);
    for (;;) {
        out.push_back(t);
        std::size_t d = l;
        while (d > 0 && t[d - 1] == top) t[--d] = 0;
        if (d == 0) return out;
        ++t[d - 1];
    }
}

void stinespring(const SuiteConfig& cfg, Report& rep) {
    const auto& sig = cfg.sig;
    const auto l = static_cast<std::size_t>(sig.l());
    std::vector<int> iso, uni;
    for (int i = 1; i <= sig.n(); ++i) (sig.is_isometry(i) ? iso : uni).push_back(i);
    Rng rng(cfg.seed);

    // norm trichotomy: ||[s^e s^{*f} u^g (x) ee_k]||^2 is 1 iff f <= k, else 0
    const std::int64_t top = l <= 2 ? 5 : 2;
    auto labels = tuples(l, top);
    for (const auto& f : labels)
        for (const auto& k : labels) {
            NormalMonomial m(sig.n());
            for (std::size_t d = 0; d < l; ++d) m.power(iso[d]) = {uniform(rng, 0, 3), f[d]};
            for (int j : uni) m.power(j) = {uniform(rng, -2, 2), 0};
            StVector<PhasePolynomial> v{ExactElement::monomial(m, PhasePolynomial(random_phase(sig, rng))), k};
            bool below = true;
            for (std::size_t d = 0; d < l; ++d) below = below && f[d] <= k[d];
            auto value = st_inner(sig, v, v);
            ++rep.cases;
            if (value != PhasePolynomial(below ? 1 : 0))
                rep.fail(to_string(sig, m) + " at ee" + join(k), "norm^2 " + value.to_string());
        }

    // orthonormal bases of the summands L_k
    std::vector<IsometryIndex> summands{IsometryIndex(l, 0)};
    if (l > 0) {
        IsometryIndex a(l), b(l);
        for (std::size_t d = 0; d < l; ++d) {
            a[d] = static_cast<std::int64_t>(d % 2) + 1;
            b[d] = 2 - static_cast<std::int64_t>(d % 2);
        }
        summands.push_back(a);
        summands.push_back(b);
    }
    std::vector<std::vector<StVector<PhasePolynomial>>> bases;
    for (const auto& k : summands) {
        auto basis = summand_basis(sig, k, 2, 2);
        auto g = gram_matrix(sig, basis);
        ++rep.cases;
        if (!is_identity(g)) rep.fail("summand ee" + join(k) + ", " + std::to_string(basis.size()) + " vectors",
                                      "Gram matrix is not the identity");
        bases.push_back(std::move(basis));
    }

    // phi(y^* x) ee_k has no component along ee_k' for k' != k
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = 0; b < bases.size(); ++b) {
            if (a == b) continue;
            for (int trial = 0; trial < 20; ++trial) {
                const auto& v = bases[a][static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(bases[a].size()) - 1))];
                const auto& w = bases[b][static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(bases[b].size()) - 1))];
                auto th = theta(sig, mul(sig, adjoint(sig, w.x), v.x));
                MultiIndex from(static_cast<std::size_t>(sig.n()), 0), to(from);
                for (std::size_t d = 0; d < l; ++d) {
                    from[static_cast<std::size_t>(iso[d] - 1)] = v.k[d];
                    to[static_cast<std::size_t>(iso[d] - 1)] = w.k[d];
                }
                std::int64_t reach_all = 0;
                for (const auto& [m, c] : th.terms()) reach_all = std::max<std::int64_t>(reach_all, static_cast<std::int64_t>(m.word(sig).size()));
                Truncation trunc(reach_all + 4, 0);
                auto image = apply_element(sig, trunc, th, ExactState::basis(from));
                ++rep.cases;
                if (!image.amplitude(to).is_zero() || st_inner(sig, v, w) != PhasePolynomial(0))
                    rep.fail("ee" + join(v.k) + " vs ee" + join(w.k), "cross-summand inner product is nonzero");
            }
        }

    // two routes to the phi eigenvalue agree; Gram matrices are positive
    ExponentBox box{2, 2, 2};
    for (int trial = 0; trial < 30; ++trial) {
        IsometryIndex k(l);
        for (auto& v : k) v = uniform(rng, 0, 3);
        auto x = random_element(sig, box, 4, rng);
        ++rep.cases;
        if (phi_eigenvalue(sig, x, k) != phi_eigenvalue_direct(sig, x, k))
            rep.fail(print_expression(sig, x) + " at ee" + join(k), "phi eigenvalue routes disagree");
        std::vector<StVector<PhasePolynomial>> vs;
        for (int t = 0; t < 6; ++t) vs.push_back({random_element(sig, box, 3, rng), k});
        double lo = gram_min_eigenvalue(gram_matrix(sig, vs), sig.angles());
        ++rep.cases;
        if (lo < -1e-10) rep.fail("random Gram at ee" + join(k), "min eigenvalue " + std::to_string(lo));
    }

    // unimodular reduction for e <= k <= 3
    for (const auto& k : tuples(l, 3))
        for (const auto& e : tuples(l, 3)) {
            bool ok = true;
            for (std::size_t d = 0; d < l; ++d) ok = ok && e[d] <= k[d];
            if (!ok) continue;
            ++rep.cases;
            try {
                auto red = check_unimodular_reduction(sig, e, k);
                if (!red.residual.is_zero()) rep.fail("e=" + join(e) + " k=" + join(k), "residual " + red.residual.to_string());
            } catch (const std::exception& ex) {
                rep.fail("e=" + join(e) + " k=" + join(k), ex.what());
            }
        }
}

void deformation(const SuiteConfig& cfg, Report& rep) {
    DeformationContext ctx(cfg.sig);
    const auto& target = ctx.target();
    const auto& base = ctx.base();
    Rng rng(cfg.seed);
    ExponentBox box{2, 2, 2};
    const std::size_t count = cases_or(cfg, 1000);
    for (std::size_t c = 0; c < count; ++c) {
        auto m1 = random_monomial(target, box, rng), m2 = random_monomial(target, box, rng),
             m3 = random_monomial(target, box, rng);
        auto x = ExactElement::monomial(m1), y = ExactElement::monomial(m2), z = ExactElement::monomial(m3);

        ++rep.cases;
        auto lhs = psi(ctx, mul(target, x, y));
        auto rhs = deformed_mul(ctx, psi(ctx, x), psi(ctx, y));
        if (lhs != rhs)
            rep.fail(to_string(target, m1) + " ; " + to_string(target, m2),
                     print_expression(base, lhs) + " vs " + print_expression(base, rhs));

        ++rep.cases;
        auto a1 = deformed_mul(ctx, deformed_mul(ctx, x, y), z);
        auto a2 = deformed_mul(ctx, x, deformed_mul(ctx, y, z));
        if (a1 != a2)
            rep.fail(to_string(base, m1) + " ; " + to_string(base, m2) + " ; " + to_string(base, m3), "not associative");

        ++rep.cases;
        if (adjoint(base, deformed_mul(ctx, x, y)) != deformed_mul(ctx, adjoint(base, y), adjoint(base, x)))
            rep.fail(to_string(base, m1) + " ; " + to_string(base, m2), "deformed product is not *-compatible");

        ++rep.cases;
        if (psi(ctx, adjoint(target, x)) != adjoint(base, psi(ctx, x)))
            rep.fail(to_string(target, m1), "psi does not commute with adjoints");

        ++rep.cases;
        auto p = degree(base, m1), q = degree(base, m2), r = degree(base, m3);
        Degree qr(q.size());
        for (std::size_t d = 0; d < q.size(); ++d) qr[d] = q[d] + r[d];
        if (cocycle(ctx, p, qr) != cocycle(ctx, p, q) * cocycle(ctx, p, r) || !cocycle(ctx, p, p).is_identity())
            rep.fail(join(p) + " ; " + join(q), "cocycle is not a bicharacter");

        if (target.angles().exact()) {
            // the phase word equals exp(2 pi i <Theta p, q>)
            mpq_class pairing = 0;
            for (int i = 1; i <= target.n(); ++i)
                for (int j = 1; j <= target.n(); ++j)
                    pairing += ctx.theta().exact_entry(i, j) * p[static_cast<std::size_t>(j - 1)] * q[static_cast<std::size_t>(i - 1)];
            auto v = phase_eval(cocycle(ctx, p, q), target.angles());
            mpq_class want = 2 * pairing;
            ++rep.cases;
            mpq_class got = v.half_turns.value_or(-1);
            mpq_class diff = got - want;
            diff.canonicalize();
            if (diff.get_den() != 1 || diff.get_num() % 2 != 0)
                rep.fail(join(p) + " ; " + join(q), "cocycle " + got.get_str() + " vs Theta pairing " + want.get_str());
        }
    }

    // psi is a bijection on basis monomials
    ++rep.cases;
    for (int i = 1; i <= target.n(); ++i) {
        auto img = psi(ctx, ExactElement::generator(target, i));
        if (img != ExactElement::generator(base, i)) rep.fail("s" + std::to_string(i), "psi(s_i) != s'_i");
    }
}

void intertwiner(const SuiteConfig& cfg, Report& rep) {
    Truncation trunc(cfg.K, cfg.band);
    std::vector<Signature> variants{cfg.sig};
    const auto& angles = cfg.sig.angles();
    if (cfg.sig.n() >= 2) {
        // another branch of phi: same z, different w
        variants.push_back(Signature::with_kinds(cfg.sig.kinds(), angles.shifted_branch(1, 2, 1)));
        if (cfg.sig.n() >= 3)
            variants.push_back(Signature::with_kinds(cfg.sig.kinds(), variants.back().angles().shifted_branch(2, 3, -1)));
    }
    for (const auto& sig : variants) {
        auto report = verify_intertwiner(DeformationContext(sig), trunc);
        for (const auto& row : report.rows) {
            rep.cases += row.checked;
            std::string gen = "s" + std::to_string(row.generator) + (row.star ? "*" : "");
            if (row.mismatches != 0 || row.max_residual > kNumericTolerance)
                rep.fail(gen + " at e" + to_string(row.witness),
                         std::to_string(row.mismatches) + " mismatches, max residual " + std::to_string(row.max_residual));
        }
    }
}

/// Extension of sig by one isometry and one unitary, angles extended at random.
Signature extension(const Signature& sig, Rng& rng) {
    auto kinds = sig.kinds();
    kinds.push_back(GeneratorKind::isometry);
    kinds.push_back(GeneratorKind::unitary);
    const int n = sig.n() + 2;
    AngleAssignment angles = sig.angles().resized(n);
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(i + 1, sig.n() + 1); j <= n; ++j) {
            if (angles.exact()) angles = angles.with(i, j, mpq_class(static_cast<long>(uniform(rng, 0, 7)), 8));
            else angles = angles.with(i, j, std::uniform_real_distribution<double>(0, 1)(rng));
        }
    auto big = Signature::with_kinds(kinds, angles);
    return sig.twisted() ? big : big.untwisted();
}

std::vector<ExponentTuple> sample_tuples(const Signature& sig, std::int64_t top) {
    std::vector<ExponentTuple> out;
    ExponentTuple t(static_cast<std::size_t>(sig.n()));
    for (int i = 1; i <= sig.n(); ++i) t[static_cast<std::size_t>(i - 1)] = sig.is_isometry(i) ? 0 : -top;
    for (;;) {
        out.push_back(t);
        int d = sig.n();
        for (; d >= 1; --d) {
            auto& v = t[static_cast<std::size_t>(d - 1)];
            if (v < top) {
                ++v;
                break;
            }
            v = sig.is_isometry(d) ? 0 : -top;
        }
        if (d == 0) return out;
    }
}

void choice(const SuiteConfig& cfg, Report& rep) {
    const auto& sig = cfg.sig;
    auto all = sample_tuples(sig, 3);
    Rng rng(cfg.seed);
    std::vector<MonomialChoice> choices{MonomialChoice::reversed()};
    for (int r = 0; r < 3; ++r) choices.push_back(MonomialChoice::random_interleaving(rng()));
    auto canonical = MonomialChoice::canonical();

    // the canonical choice reproduces the standard representation
    Truncation trunc(4, 0);
    for (const auto& t : all) {
        if (!trunc.contains(sig, t)) continue;
        for (int i = 1; i <= sig.n(); ++i)
            for (bool star : {false, true}) {
                MultiIndex next = t;
                next[static_cast<std::size_t>(i - 1)] += star ? -1 : 1;
                if (!trunc.contains(sig, next) && !(star && sig.is_isometry(i) && t[static_cast<std::size_t>(i - 1)] == 0))
                    continue;
                ++rep.cases;
                auto a = choice_apply_letter(sig, canonical, trunc, Letter{i, star}, t);
                auto b = apply_letter(sig, trunc, Letter{i, star}, t);
                if (a != b) rep.fail(std::string("canonical ") + (star ? "s*" : "s") + std::to_string(i) + " on " + join(t),
                                     "differs from the standard representation");
            }
    }

    for (const auto& other : choices) {
        auto report = verify_choice_equivalence(sig, canonical, other, all);
        rep.cases += report.checked;
        for (const auto& v : report.violations)
            rep.fail(other.name() + " s" + std::to_string(v.generator) + " at " + join(v.tuple),
                     v.lhs.to_string() + " vs " + v.rhs.to_string());

        // the choice representation satisfies the defining relations; mu intertwines it with the canonical one
        for (const auto& t : all) {
            if (!trunc.in_band(sig, t, 2)) continue;
            for (int i = 1; i <= sig.n(); ++i) {
                ++rep.cases;
                auto up = choice_apply_letter(sig, other, trunc, Letter{i, false}, t);
                auto back = choice_apply_letter(sig, other, trunc, Letter{i, true}, up->index);
                if (!back || back->index != t || !(up->phase * back->phase).is_identity())
                    rep.fail(other.name() + " s" + std::to_string(i) + " at " + join(t), "s_i^* s_i != 1");
                auto canon = choice_apply_letter(sig, canonical, trunc, Letter{i, false}, t);
                Phase lhs = canon->phase * mu_constant(sig, other, canonical, t);
                Phase rhs = up->phase * mu_constant(sig, other, canonical, up->index);
                ++rep.cases;
                if (lhs != rhs) rep.fail(other.name() + " s" + std::to_string(i) + " at " + join(t), "mu does not intertwine");
                for (int j = 1; j <= sig.n(); ++j) {
                    if (j == i) continue;
                    auto ij = choice_apply_letter(sig, other, trunc, Letter{j, false}, up->index);
                    auto uj = choice_apply_letter(sig, other, trunc, Letter{j, false}, t);
                    auto ji = choice_apply_letter(sig, other, trunc, Letter{i, false}, uj->index);
                    ++rep.cases;
                    // s_j s_i = z_ji s_i s_j
                    if (up->phase * ij->phase != sig.z(j, i) * uj->phase * ji->phase)
                        rep.fail(other.name() + " s" + std::to_string(j) + " s" + std::to_string(i) + " at " + join(t),
                                 "commutation relation fails");
                }
            }
        }
    }
}

void embedding(const SuiteConfig& cfg, Report& rep) {
    const auto& sig = cfg.sig;
    Rng rng(cfg.seed);
    auto big = extension(sig, rng);
    ExponentBox box{2, 2, 2};
    for (std::size_t c = 0; c < cases_or(cfg, 200); ++c) {
        auto x = random_element(sig, box, 4, rng), y = random_element(sig, box, 4, rng);
        ++rep.cases;
        if (embed(sig, big, mul(sig, x, y)) != mul(big, embed(sig, big, x), embed(sig, big, y)))
            rep.fail(print_expression(sig, x) + " ; " + print_expression(sig, y), "embed does not preserve products");
        ++rep.cases;
        if (embed(sig, big, adjoint(sig, x)) != adjoint(big, embed(sig, big, x)))
            rep.fail(print_expression(sig, x), "embed does not preserve adjoints");
        ++rep.cases;
        if (embed(sig, big, x).size() != x.size()) rep.fail(print_expression(sig, x), "embed merged basis monomials");
    }
    // the embedded copy sits in the extension's standard representation with the extra slots at zero
    Truncation trunc(cfg.K, 0);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_element(sig, {1, 1, 1}, 3, rng);
        MultiIndex k(static_cast<std::size_t>(sig.n()));
        for (int i = 1; i <= sig.n(); ++i) k[static_cast<std::size_t>(i - 1)] = sig.is_isometry(i) ? uniform(rng, 0, 2) : uniform(rng, -2, 2);
        MultiIndex kk = k;
        kk.push_back(0);
        kk.push_back(0);
        auto small_image = apply_element(sig, trunc, x, ExactState::basis(k));
        auto big_image = apply_element(big, trunc, embed(sig, big, x), ExactState::basis(kk));
        ExactState lifted;
        for (const auto& [idx, a] : small_image.amplitudes()) {
            MultiIndex j = idx;
            j.push_back(0);
            j.push_back(0);
            lifted.add(j, a);
        }
        ++rep.cases;
        if (lifted != big_image) rep.fail(print_expression(sig, x), "embedded action differs on the first summand");
    }
    ++rep.cases;
    try {
        auto bad = big.untwisted() == big ? Signature(sig.n() + 1, 0) : big.untwisted();
        check_embedding(sig, bad);
        if (!(sig.n() == 0)) rep.fail("untwisted or reordered extension", "incompatible extension accepted");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::incompatible_signatures) rep.fail("incompatible extension", e.what());
    }
}

void ktheory_table(const SuiteConfig&, Report& rep) {
    // K-theory of C(T^m): even and odd binomial sums; Toeplitz factors contribute (Z, 0)
    auto binomial = [](int m, int j) {
        std::uint64_t r = 1;
        for (int t = 1; t <= j; ++t) r = r * static_cast<std::uint64_t>(m - j + t) / static_cast<std::uint64_t>(t);
        return r;
    };
    for (int n = 0; n <= 5; ++n)
        for (int l = 0; l <= n; ++l) {
            std::uint64_t even = 0, odd = 0;
            for (int j = 0; j <= n - l; ++j) (j % 2 ? odd : even) += binomial(n - l, j);
            ++rep.cases;
            auto k = kgroups(n, l);
            if (k.k0_rank != even || k.k1_rank != odd || !k.torsion_free)
                rep.fail("n=" + std::to_string(n) + " l=" + std::to_string(l),
                         "(" + std::to_string(k.k0_rank) + "," + std::to_string(k.k1_rank) + ") vs (" +
                             std::to_string(even) + "," + std::to_string(odd) + ")");
        }
    for (auto [n, l] : {std::pair{1, 2}, std::pair{-1, 0}, std::pair{2, -1}}) {
        ++rep.cases;
        try {
            kgroups(n, l);
            rep.fail("n=" + std::to_string(n) + " l=" + std::to_string(l), "accepted");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::invalid_signature) rep.fail("n=" + std::to_string(n), e.what());
        }
    }
}

void theta_suite(const SuiteConfig& cfg, Report& rep) {
    const auto& sig = cfg.sig;
    Rng rng(cfg.seed);
    ExponentBox box{2, 2, 2};
    for (std::size_t c = 0; c < cases_or(cfg, 100); ++c) {
        auto x = random_element(sig, box, 5, rng);
        auto th = theta(sig, x);
        ++rep.cases;
        if (theta(sig, th) != th) rep.fail(print_expression(sig, x), "theta is not idempotent");
        ++rep.cases;
        try {
            auto w = theta_faithful_witness(sig, x);
            if (w.is_zero()) rep.fail(print_expression(sig, x), "theta(x^* x) vanishes");
            // on ee_k with k above every f, the symbol of theta(x^* x) is ||sigma(x) e_k||^2 > 0
            MultiIndex k(static_cast<std::size_t>(sig.n()), 0);
            IsometryIndex kk;
            for (int i = 1; i <= sig.n(); ++i)
                if (sig.is_isometry(i)) {
                    for (const auto& [m, coeff] : x.terms())
                        k[static_cast<std::size_t>(i - 1)] = std::max(k[static_cast<std::size_t>(i - 1)], m.power(i).f);
                    kk.push_back(k[static_cast<std::size_t>(i - 1)]);
                }
            auto image = apply_element(sig, Truncation(12, 0), to_numeric(x, sig.angles()), NumericState::basis(k));
            double norm2 = 0;
            for (const auto& [idx, a] : image.amplitudes()) norm2 += std::norm(a);
            double symbol = phi_eigenvalue(sig, w, kk).eval(sig.angles()).real();
            if (norm2 <= 1e-9 || std::abs(norm2 - symbol) > 1e-9)
                rep.fail(print_expression(sig, x), "symbol " + std::to_string(symbol) + " vs ||sigma(x) e_k||^2 " + std::to_string(norm2));
        } catch (const Error& e) {
            rep.fail(print_expression(sig, x), e.what());
        }
        ++rep.cases;
        for (const auto& [m, coeff] : th.terms())
            if (!in_projection_algebra(sig, ExactElement::monomial(m))) rep.fail(print_expression(sig, x), "theta kept an unbalanced monomial");

        std::vector<mpq_class> s(static_cast<std::size_t>(sig.n())), t(s.size()), st(s.size());
        for (std::size_t d = 0; d < s.size(); ++d) {
            s[d] = mpq_class(static_cast<long>(uniform(rng, 0, 11)), 12);
            t[d] = mpq_class(static_cast<long>(uniform(rng, 0, 7)), 8);
            st[d] = s[d] + t[d];
        }
        ++rep.cases;
        if (theta(sig, alpha(sig, t, x)) != th) rep.fail(print_expression(sig, x), "theta is not gauge invariant");
        ++rep.cases;
        if (alpha(sig, s, alpha(sig, t, x)) != alpha(sig, st, x)) rep.fail(print_expression(sig, x), "alpha is not an action");
    }
    ++rep.cases;
    try {
        theta_faithful_witness(sig, ExactElement{});
        rep.fail("0", "zero input accepted");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::zero_input) rep.fail("0", e.what());
    }
}

using SuiteFn = void (*)(const SuiteConfig&, Report&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"confluence", confluence},   {"relations", relations},       {"injectivity", injectivity},
        {"norm", norm},               {"stinespring", stinespring},   {"deformation", deformation},
        {"intertwiner", intertwiner}, {"embedding", embedding},       {"choice", choice},
        {"ktheory-table", ktheory_table}, {"theta", theta_suite},
    };
    return suites;
}

} // namespace

void Report::fail(std::string inputs, std::string residual) {
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back({std::move(inputs), std::move(residual)});
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

Report run_suite(const SuiteConfig& cfg, std::string_view name) {
    for (const auto& [suite, fn] : registry()) {
        if (suite != name) continue;
        Report rep;
        rep.suite = suite;
        rep.mode = cfg.sig.angles().mode();
        auto start = std::chrono::steady_clock::now();
        fn(cfg, rep);
        rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
    throw Error(ErrorCode::config_error, "unknown suite '" + std::string(name) + "'");
}

} // namespace dnc

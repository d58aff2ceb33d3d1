// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails or exceeds its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "dnc/deformation.hpp"
#include "dnc/random.hpp"
#include "dnc/verify.hpp"

using namespace dnc;

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

void absorb(Outcome& out, const Report& r, const Signature& sig) {
    out.cases += r.cases;
    out.failures += r.failure_count;
    if (out.first_failure.empty() && !r.failures.empty())
        out.first_failure = r.suite + " (n=" + std::to_string(sig.n()) + ", l=" + std::to_string(sig.l()) +
                            "): " + r.failures.front().inputs + " -> " + r.failures.front().residual;
}

Outcome run(const std::vector<Signature>& sigs, const std::vector<std::string>& suites, std::int64_t K,
            std::int64_t band, std::size_t cases, std::uint64_t seed) {
    Outcome out;
    for (std::size_t s = 0; s < sigs.size(); ++s)
        for (const auto& name : suites) {
            SuiteConfig cfg;
            cfg.sig = sigs[s];
            cfg.K = K;
            cfg.band = band;
            cfg.cases = cases;
            cfg.seed = seed + s;
            absorb(out, run_suite(cfg, name), cfg.sig);
        }
    return out;
}

/// Every (n, l) with n in [n_lo, n_hi], angles drawn from rng.
std::vector<Signature> all_shapes(int n_lo, int n_hi, Rng& rng, int max_l = 99) {
    std::vector<Signature> out;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int l = 0; l <= std::min(n, max_l); ++l) out.emplace_back(n, l, random_angles(n, rng));
    return out;
}

Outcome intertwiner(const std::vector<Signature>& sigs, std::int64_t K, std::int64_t band, double tol) {
    Outcome out;
    for (const auto& sig : sigs) {
        auto report = verify_intertwiner(DeformationContext(sig), Truncation(K, band));
        for (const auto& row : report.rows) {
            out.cases += row.checked;
            bool bad = row.mismatches != 0 || row.max_residual > tol;
            if (bad) {
                ++out.failures;
                if (out.first_failure.empty())
                    out.first_failure = "generator " + std::to_string(row.generator) + (row.star ? "*" : "") +
                                        " witness " + to_string(row.witness) + " residual " +
                                        std::to_string(row.max_residual);
            }
        }
    }
    return out;
}

struct Criterion {
    int number;
    std::string name;
    double limit_s;  // 0: no stated limit
    std::string tolerance;
    std::function<Outcome()> body;
};

} // namespace

int main() {
    Rng rng(20240611);
    std::vector<Criterion> criteria;

    criteria.push_back({1, "confluence of two rewrite strategies, 10^4 words", 10, "exact", [&] {
                            std::vector<Signature> sigs;
                            for (int s = 0; s < 10; ++s) sigs.push_back(random_signature(rng, 4));
                            return run(sigs, {"confluence"}, 8, 2, 1000, 100);
                        }});
    criteria.push_back({2, "defining and lemma relations on the band, n <= 4, K = 8", 30, "exact", [&] {
                            return run(all_shapes(0, 4, rng), {"relations"}, 8, 2, 0, 200);
                        }});
    criteria.push_back({3, "injectivity round trip, 504 elements, n <= 3, box 3,3,3", 60, "exact", [&] {
                            return run(all_shapes(1, 3, rng), {"injectivity"}, 8, 0, 56, 300);
                        }});
    criteria.push_back({4, "exact norm on the projection subalgebra, l <= 3", 0, "exact", [&] {
                            std::vector<Signature> sigs;
                            for (auto [n, l] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}})
                                sigs.emplace_back(n, l, random_angles(n, rng));
                            return run(sigs, {"norm"}, 8, 2, 200, 400);
                        }});
    criteria.push_back({5, "Stinespring trichotomy, summand Gram matrices, cross-summand orthogonality", 60, "exact", [&] {
                            std::vector<Signature> sigs;
                            for (auto [n, l] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}})
                                sigs.emplace_back(n, l, random_angles(n, rng));
                            return run(sigs, {"stinespring"}, 8, 2, 0, 500);
                        }});
    criteria.push_back({6, "psi homomorphism and deformed associativity, 10^3 pairs and triples", 30, "exact", [&] {
                            std::vector<Signature> sigs{Signature(4, 2, random_angles(4, rng)),
                                                        Signature(3, 1, random_angles(3, rng))};
                            return run(sigs, {"deformation"}, 8, 2, 1000, 600);
                        }});
    criteria.push_back({7, "intertwiner, n <= 4, K = 6, 3 assignments x 2 branches, numeric irrational", 0,
                        "exact; numeric 1e-12", [&] {
                            std::vector<Signature> sigs;
                            for (auto [n, l] : {std::pair{1, 1}, {2, 1}, {3, 1}, {4, 2}, {4, 0}})
                                for (int a = 0; a < 3; ++a) {
                                    auto angles = random_angles(n, rng);
                                    sigs.emplace_back(n, l, angles);
                                    if (n >= 2) sigs.emplace_back(n, l, angles.shifted_branch(1, 2, a % 2 ? 1 : -1));
                                }
                            auto out = intertwiner(sigs, 6, 2, 0);
                            AngleAssignment irr(4, AngleMode::numeric);
                            irr = irr.with(1, 2, std::sqrt(2.0) - 1)
                                      .with(1, 3, 1 / std::numbers::pi)
                                      .with(1, 4, std::numbers::e - 2)
                                      .with(2, 3, std::sqrt(3.0) / 2)
                                      .with(2, 4, std::numbers::ln2)
                                      .with(3, 4, std::numbers::phi - 1);
                            auto num = intertwiner({Signature(4, 2, irr), Signature(4, 2, irr.shifted_branch(2, 4, 1))}, 6, 2, 1e-12);
                            out.cases += num.cases;
                            out.failures += num.failures;
                            if (out.first_failure.empty()) out.first_failure = num.first_failure;
                            return out;
                        }});
    criteria.push_back({8, "embedding commutes with mul and adjoint; lambda/mu identity for 3 random choices", 0, "exact", [&] {
                            auto sig = Signature(3, 2, random_angles(3, rng));
                            auto out = run({sig}, {"embedding"}, 8, 2, 200, 800);
                            auto choice = run({sig, Signature(3, 1, random_angles(3, rng))}, {"choice"}, 8, 2, 0, 801);
                            out.cases += choice.cases;
                            out.failures += choice.failures;
                            if (out.first_failure.empty()) out.first_failure = choice.first_failure;
                            return out;
                        }});
    criteria.push_back({9, "K-group table, 0 <= l <= n <= 5", 1, "exact", [&] {
                            return run({Signature(0, 0)}, {"ktheory-table"}, 8, 2, 0, 900);
                        }});
    criteria.push_back({10, "theta idempotent and faithful on 100 elements", 0, "exact", [&] {
                            std::vector<Signature> sigs;
                            for (auto [n, l] : {std::pair{2, 1}, {3, 2}, {4, 2}, {3, 0}})
                                sigs.emplace_back(n, l, random_angles(n, rng));
                            return run(sigs, {"theta"}, 8, 2, 100, 1000);
                        }});

    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        std::string crash;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            crash = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit_s == 0 || secs < c.limit_s;
        bool pass = crash.empty() && out.failures == 0 && out.cases > 0 && in_time;
        all = all && pass;
        std::string limit = c.limit_s == 0 ? "none" : std::to_string(static_cast<int>(c.limit_s)) + "s";
        std::printf("%s criterion %d: %s | cases=%zu failures=%zu time=%.2fs limit=%s tol=%s\n", pass ? "PASS" : "FAIL",
                    c.number, c.name.c_str(), out.cases, out.failures, secs, limit.c_str(), c.tolerance.c_str());
        if (!crash.empty()) std::printf("    error: %s\n", crash.c_str());
        if (!out.first_failure.empty()) std::printf("    first failure: %s\n", out.first_failure.c_str());
        if (!in_time) std::printf("    over the time limit\n");
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}

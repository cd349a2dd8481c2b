#pragma once

#include <atomic>
#include <chrono>
#include <thread>

#include "planar_ramsey/constructions.hpp"
#include "planar_ramsey/detect.hpp"
#include "planar_ramsey/sat.hpp"

namespace ramsey {

enum class ArrowOutcome { Arrows, NotArrows, Undecided };

struct ArrowStats {
    std::uint64_t detector_nodes = 0;
    std::uint64_t solver_conflicts = 0;
    std::uint64_t embeddings_blocked = 0;
    std::uint64_t colorings_checked = 0;  // exhaustive mode
    long long wall_ms = 0;
};

struct Verdict {
    ArrowOutcome outcome = ArrowOutcome::Undecided;
    EdgeColoring certificate;  // NOT_ARROWS only
    ArrowStats stats;
    std::string method;        // "cegar" | "eager" | "exhaustive"
};

class VerificationInconclusive : public std::runtime_error {
public:
    explicit VerificationInconclusive(const std::string& w) : std::runtime_error(w) {}
};

// True iff no color class of c contains a copy of h. The detector runs with
// exactness required: a budget hit raises VerificationInconclusive instead
// of passing silently.
inline bool verify_certificate(const Graph& g, const Graph& h, int k, const EdgeColoring& c,
                               std::uint64_t budget = kNoBudget,
                               Embedding* counterexample = nullptr, int* bad_color = nullptr) {
    if (c.k != k) return false;
    if (!validate_coloring(g, c)) return false;
    ColorView cv(g, c);
    for (int color = 0; color < k; ++color) {
        DetectResult r = detail::find_mono_copy_impl(g, cv, color, h, budget);
        if (r.status == DetectStatus::BudgetExceeded)
            throw VerificationInconclusive("verify_certificate: detector budget exceeded");
        if (r.found()) {
            if (counterexample) *counterexample = r.embedding;
            if (bad_color) *bad_color = color;
            return false;
        }
    }
    return true;
}

namespace detail {

inline bool pattern_is_c4(const Graph& h) {
    if (h.vertex_count() != 4 || h.edge_count() != 4) return false;
    for (int v = 0; v < 4; ++v)
        if (h.degree(v) != 2) return false;
    return is_connected(h);
}

struct ArrowProblem {
    const Graph* g;
    const Graph* h;
    int k;
    std::uint64_t budget;
    bool eager_c4;
};

// One CEGAR run with a given decision-order seed. stop/stopflag lets a
// portfolio cancel losers.
inline Verdict run_cegar(const ArrowProblem& prob, std::uint64_t order_seed,
                         std::atomic<bool>* stop) {
    const Graph& g = *prob.g;
    const Graph& h = *prob.h;
    int k = prob.k;
    Verdict verdict;
    verdict.method = prob.eager_c4 ? "eager" : "cegar";
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](ArrowOutcome oc) {
        verdict.outcome = oc;
        verdict.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
        return verdict;
    };

    sat::Solver solver;
    int m = g.edge_count();
    for (int i = 0; i < m * k; ++i) solver.new_var();
    auto var = [&](int edge, int color) { return edge * k + color; };

    if (order_seed != 0) {
        // deterministic permutation of the branching tie-order
        std::vector<int> perm(m * k);
        for (int i = 0; i < m * k; ++i) perm[i] = i;
        ramsey::detail::Rng rng(order_seed);
        for (int i = m * k - 1; i > 0; --i) {
            int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[i], perm[j]);
        }
        solver.set_decision_order(perm);
    }

    // exactly-one color per edge
    for (int e = 0; e < m; ++e) {
        std::vector<sat::Lit> atLeast;
        for (int c = 0; c < k; ++c) atLeast.push_back(sat::mk_lit(var(e, c), true));
        solver.add_clause(atLeast);
        for (int c1 = 0; c1 < k; ++c1)
            for (int c2 = c1 + 1; c2 < k; ++c2)
                solver.add_clause({sat::mk_lit(var(e, c1), false), sat::mk_lit(var(e, c2), false)});
    }
    // symmetry breaking: colors are interchangeable, fix edge 0
    if (m > 0) solver.add_clause({sat::mk_lit(var(0, 0), true)});

    if (prob.eager_c4) {
        for (const auto& cyc : enumerate_c4s(g)) {
            int e[4] = {g.edge_index(cyc[0], cyc[1]), g.edge_index(cyc[1], cyc[2]),
                        g.edge_index(cyc[2], cyc[3]), g.edge_index(cyc[3], cyc[0])};
            for (int c = 0; c < k; ++c) {
                std::vector<sat::Lit> block;
                for (int j = 0; j < 4; ++j) block.push_back(sat::mk_lit(var(e[j], c), false));
                solver.add_clause(block);
                ++verdict.stats.embeddings_blocked;
            }
        }
    }

    std::vector<int> colors(m);
    while (true) {
        if (stop && stop->load()) return finish(ArrowOutcome::Undecided);
        std::uint64_t used = verdict.stats.solver_conflicts + verdict.stats.detector_nodes;
        if (used >= prob.budget) return finish(ArrowOutcome::Undecided);
        std::uint64_t before = solver.stats_conflicts;
        sat::SolveResult sres = solver.solve(prob.budget - used);
        verdict.stats.solver_conflicts += solver.stats_conflicts - before;
        if (sres == sat::SolveResult::Unsat) return finish(ArrowOutcome::Arrows);
        if (sres == sat::SolveResult::Budget) return finish(ArrowOutcome::Undecided);

        for (int e = 0; e < m; ++e) {
            colors[e] = -1;
            for (int c = 0; c < k; ++c)
                if (solver.model_value(var(e, c))) {
                    colors[e] = c;
                    break;
                }
            ramsey::detail::require(colors[e] >= 0, "cegar: partial model");
        }
        ColorView cv(g, k, colors);
        bool anyCopy = false;
        for (int c = 0; c < k && !anyCopy; ++c) {
            std::uint64_t usedNow = verdict.stats.solver_conflicts + verdict.stats.detector_nodes;
            if (usedNow >= prob.budget) return finish(ArrowOutcome::Undecided);
            DetectResult r = find_mono_copy_impl(g, cv, c, h, prob.budget - usedNow);
            verdict.stats.detector_nodes += r.nodes;
            if (r.status == DetectStatus::BudgetExceeded) return finish(ArrowOutcome::Undecided);
            if (r.found()) {
                anyCopy = true;
                std::vector<sat::Lit> block;
                std::set<int> edgesUsed;
                for (const auto& [u, v] : h.edges())
                    edgesUsed.insert(g.edge_index(r.embedding.map[u], r.embedding.map[v]));
                for (int ei : edgesUsed) block.push_back(sat::mk_lit(var(ei, c), false));
                solver.add_clause(block);
                ++verdict.stats.embeddings_blocked;
            }
        }
        if (!anyCopy) {
            verdict.certificate = coloring_from_dense(g, k, colors);
            return finish(ArrowOutcome::NotArrows);
        }
    }
}

}  // namespace detail

// Decides whether every k-coloring of g's edges contains a monochromatic
// copy of h. CEGAR: a propositional core enforces exactly-one-color per
// edge, candidate colorings come from the CDCL solver, and each
// monochromatic embedding the detector finds is blocked by a clause
// forbidding that edge set in that color. Infeasibility then proves ARROWS
// (the final conflict is at decision level zero); a candidate surviving all
// detectors is a NOT_ARROWS certificate. For a C4 pattern all 4-cycles are
// blocked eagerly up front instead.
//
// The budget counts solver conflicts plus detector nodes. `jobs` > 1 runs a
// deterministic-portfolio of decision orders, first finisher wins;
// certificates are re-verified on the calling thread either way.
inline Verdict decide_arrows(const Graph& g, const Graph& h, int k,
                             std::uint64_t budget = 50'000'000, int jobs = 1) {
    if (k < 2 || k > 8) throw std::invalid_argument("decide_arrows: k must be in 2..8");
    if (h.vertex_count() == 0 || h.edge_count() == 0)
        throw std::invalid_argument("decide_arrows: pattern must have at least one edge");
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 0)
            throw std::invalid_argument("decide_arrows: patterns with isolated vertices unsupported");

    detail::ArrowProblem prob{&g, &h, k, budget, detail::pattern_is_c4(h)};
    Verdict verdict;
    if (jobs <= 1) {
        verdict = detail::run_cegar(prob, 0, nullptr);
    } else {
        std::atomic<bool> stop{false};
        std::vector<Verdict> results(jobs);
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back([&, j] {
                results[j] = detail::run_cegar(prob, static_cast<std::uint64_t>(j) * 7919 + j, &stop);
                if (results[j].outcome != ArrowOutcome::Undecided) stop.store(true);
            });
        for (auto& t : threads) t.join();
        verdict = results[0];
        for (int j = 0; j < jobs; ++j)
            if (results[j].outcome != ArrowOutcome::Undecided) {
                verdict = results[j];
                break;
            }
    }
    if (verdict.outcome == ArrowOutcome::NotArrows) {
        if (!verify_certificate(g, h, k, verdict.certificate))
            throw std::logic_error("decide_arrows: certificate failed re-verification");
    }
    return verdict;
}

// Ground-truth oracle: enumerates every coloring up to the color symmetry
// of the first edge (its color is fixed to 0) and runs the detector on each.
// Hard cap k^|E| <= 2^24.
inline Verdict exhaustive_arrows(const Graph& g, const Graph& h, int k) {
    if (k < 2) throw std::invalid_argument("exhaustive_arrows: k must be >= 2");
    double total = 1;
    for (int i = 0; i < g.edge_count(); ++i) total *= k;
    if (total > static_cast<double>(1 << 24))
        throw SizeCapExceeded("exhaustive_arrows: k^|E| exceeds 2^24");
    auto t0 = std::chrono::steady_clock::now();
    Verdict verdict;
    verdict.method = "exhaustive";
    int m = g.edge_count();
    std::vector<int> colors(m, 0);
    ColorView cv(g, k, colors);
    while (true) {
        ++verdict.stats.colorings_checked;
        cv.rebuild(g, colors);
        bool anyCopy = false;
        for (int c = 0; c < k && !anyCopy; ++c) {
            DetectResult r = detail::find_mono_copy_impl(g, cv, c, h, kNoBudget);
            verdict.stats.detector_nodes += r.nodes;
            if (r.found()) anyCopy = true;
        }
        if (!anyCopy) {
            verdict.outcome = ArrowOutcome::NotArrows;
            verdict.certificate = coloring_from_dense(g, k, colors);
            break;
        }
        // odometer over edges 1..m-1 (edge 0 pinned to color 0)
        int pos = 1;
        while (pos < m && colors[pos] == k - 1) colors[pos++] = 0;
        if (pos >= m) {
            verdict.outcome = ArrowOutcome::Arrows;
            break;
        }
        ++colors[pos];
    }
    verdict.stats.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return verdict;
}

inline const char* outcome_name(ArrowOutcome oc) {
    switch (oc) {
        case ArrowOutcome::Arrows: return "ARROWS";
        case ArrowOutcome::NotArrows: return "NOT_ARROWS";
        default: return "UNDECIDED";
    }
}

}  // namespace ramsey

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {
namespace sat {

// Literal encoding: variable v (0-based) -> positive literal 2v, negative
// literal 2v+1.
using Lit = int;
inline Lit mk_lit(int var, bool positive) { return 2 * var + (positive ? 0 : 1); }
inline int lit_var(Lit l) { return l >> 1; }
inline bool lit_sign(Lit l) { return (l & 1) == 0; }
inline Lit lit_neg(Lit l) { return l ^ 1; }

enum class SolveResult { Sat, Unsat, Budget };

// Conflict-driven clause learning solver: two-watched-literal propagation,
// first-UIP learning with clause minimization, activity-driven decisions
// (deterministic, index tie-break), Luby restarts, and periodic deletion of
// cold learnt clauses. Clauses may be added between solve() calls; learnt
// clauses stay valid since the clause set only grows.
class Solver {
public:
    int new_var() {
        int v = nvars_++;
        watches_.resize(2 * nvars_);
        assign_.push_back(0);
        level_.push_back(-1);
        reason_.push_back(-1);
        activity_.push_back(0.0);
        phase_.push_back(false);
        seen_.push_back(0);
        in_heap_.push_back(true);
        order_.push_back(v);
        return v;
    }

    int num_vars() const { return nvars_; }

    // Decision order permutation: variables are tried in order of activity
    // with ties broken by this permutation's rank (default: index order).
    void set_decision_order(const std::vector<int>& perm) {
        if (static_cast<int>(perm.size()) != nvars_)
            throw std::invalid_argument("decision order size mismatch");
        rank_.assign(nvars_, 0);
        for (int i = 0; i < nvars_; ++i) rank_[perm[i]] = i;
    }

    // Returns false if the clause is already falsified at level 0 (solver
    // becomes permanently UNSAT).
    bool add_clause(std::vector<Lit> lits) {
        if (unsat_) return false;
        backtrack(0);  // clause addition invalidates any in-progress search
        // normalize: dedupe, drop false lits, detect tautology/satisfied
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        std::vector<Lit> out;
        for (Lit l : lits) {
            if (value(l) == 1) return true;                      // satisfied at root
            if (std::binary_search(lits.begin(), lits.end(), lit_neg(l)) && lit_neg(l) > l)
                return true;                                     // tautology
            if (value(l) == 0) out.push_back(l);                 // unassigned
        }
        if (out.empty()) {
            unsat_ = true;
            return false;
        }
        if (out.size() == 1) {
            enqueue(out[0], -1);
            if (propagate() >= 0) {
                unsat_ = true;
                return false;
            }
            return true;
        }
        attach_clause(std::move(out), false);
        return true;
    }

    SolveResult solve(std::uint64_t conflict_budget) {
        if (unsat_) return SolveResult::Unsat;
        budget_conflicts_ = conflict_budget;
        conflicts_this_call_ = 0;
        std::uint64_t restart_unit = 64;
        int luby_idx = 1;
        std::uint64_t next_restart = restart_unit * luby(luby_idx);

        // restart from scratch on re-entry (model may have been invalidated
        // by clauses added since)
        backtrack(0);
        if (propagate() >= 0) {
            unsat_ = true;
            return SolveResult::Unsat;
        }

        while (true) {
            int confl = propagate();
            if (confl >= 0) {
                ++stats_conflicts;
                ++conflicts_this_call_;
                if (decision_level() == 0) {
                    unsat_ = true;
                    return SolveResult::Unsat;  // refutation complete: conflict at level 0
                }
                std::vector<Lit> learnt;
                int backLevel = analyze(confl, learnt);
                backtrack(backLevel);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    int ci = attach_clause(std::move(learnt), true);
                    enqueue(clauses_[ci].lits[0], ci);
                }
                decay_activities();
                if (conflicts_this_call_ >= budget_conflicts_) return SolveResult::Budget;
                if (stats_conflicts >= next_restart) {
                    ++luby_idx;
                    next_restart = stats_conflicts + restart_unit * luby(luby_idx);
                    backtrack(0);
                    if (learnt_count_ > 4000 + 8 * static_cast<std::uint64_t>(norig_))
                        reduce_db();
                }
            } else {
                int v = pick_branch_var();
                if (v < 0) return SolveResult::Sat;  // full assignment
                ++stats_decisions;
                trail_lim_.push_back(static_cast<int>(trail_.size()));
                enqueue(mk_lit(v, phase_[v]), -1);
            }
        }
    }

    // Model access after Sat.
    bool model_value(int var) const { return assign_[var] == 1; }

    bool permanently_unsat() const { return unsat_; }

    std::uint64_t stats_conflicts = 0;
    std::uint64_t stats_decisions = 0;
    std::uint64_t stats_propagations = 0;

private:
    struct Clause {
        std::vector<Lit> lits;
        bool learnt = false;
        bool deleted = false;
        double activity = 0.0;
    };

    int nvars_ = 0;
    bool unsat_ = false;
    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;  // per literal: clause indices watching it
    std::vector<signed char> assign_;        // 0 unassigned, 1 true, -1 false (per var)
    std::vector<int> level_;
    std::vector<int> reason_;                // clause index or -1
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;
    std::vector<double> activity_;
    std::vector<bool> phase_;
    std::vector<signed char> seen_;
    std::vector<bool> in_heap_;
    std::vector<int> order_;
    std::vector<int> rank_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::uint64_t budget_conflicts_ = 0;
    std::uint64_t conflicts_this_call_ = 0;
    std::uint64_t learnt_count_ = 0;
    int norig_ = 0;

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    // -1 false, 0 unassigned, 1 true
    int value(Lit l) const {
        signed char a = assign_[lit_var(l)];
        if (a == 0) return 0;
        return (a == 1) == lit_sign(l) ? 1 : -1;
    }

    // Luby sequence 1,1,2,1,1,2,4,... (1-indexed)
    static std::uint64_t luby(int i) {
        while (true) {
            int k = 1;
            while ((1 << k) - 1 < i) ++k;
            if ((1 << k) - 1 == i) return 1ULL << (k - 1);
            i -= (1 << (k - 1)) - 1;
        }
    }

    int attach_clause(std::vector<Lit> lits, bool learnt) {
        detail_sort_watch(lits);
        Clause c;
        c.lits = std::move(lits);
        c.learnt = learnt;
        c.activity = learnt ? clause_inc_ : 0.0;
        int ci = static_cast<int>(clauses_.size());
        clauses_.push_back(std::move(c));
        watches_[lit_neg(clauses_[ci].lits[0])].push_back(ci);
        watches_[lit_neg(clauses_[ci].lits[1])].push_back(ci);
        if (learnt)
            ++learnt_count_;
        else
            ++norig_;
        return ci;
    }

    // put two sensible watch candidates first: unassigned or highest level
    void detail_sort_watch(std::vector<Lit>& lits) {
        auto key = [&](Lit l) {
            int v = value(l);
            if (v == 0) return 1 << 30;
            if (v == 1) return (1 << 29) + level_[lit_var(l)];
            return level_[lit_var(l)];
        };
        for (int slot = 0; slot < 2 && slot < static_cast<int>(lits.size()); ++slot) {
            int best = slot;
            for (int i = slot + 1; i < static_cast<int>(lits.size()); ++i)
                if (key(lits[i]) > key(lits[best])) best = i;
            std::swap(lits[slot], lits[best]);
        }
    }

    void enqueue(Lit l, int reasonClause) {
        detail_assert(value(l) == 0, "enqueue on assigned literal");
        int v = lit_var(l);
        assign_[v] = lit_sign(l) ? 1 : -1;
        level_[v] = decision_level();
        reason_[v] = reasonClause;
        phase_[v] = lit_sign(l);
        trail_.push_back(l);
    }

    static void detail_assert(bool c, const char* m) {
        if (!c) throw std::logic_error(std::string("sat: ") + m);
    }

    // Returns conflicting clause index or -1.
    int propagate() {
        while (qhead_ < trail_.size()) {
            Lit p = trail_[qhead_++];
            ++stats_propagations;
            std::vector<int>& ws = watches_[p];
            size_t keep = 0;
            for (size_t wi = 0; wi < ws.size(); ++wi) {
                int ci = ws[wi];
                Clause& c = clauses_[ci];
                if (c.deleted) continue;
                // ensure the falsified literal (neg p) sits at slot 1
                Lit falsified = lit_neg(p);
                if (c.lits[0] == falsified) std::swap(c.lits[0], c.lits[1]);
                if (value(c.lits[0]) == 1) {
                    ws[keep++] = ci;  // satisfied
                    continue;
                }
                bool moved = false;
                for (size_t k = 2; k < c.lits.size(); ++k) {
                    if (value(c.lits[k]) != -1) {
                        std::swap(c.lits[1], c.lits[k]);
                        watches_[lit_neg(c.lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                // unit or conflict
                ws[keep++] = ci;
                if (value(c.lits[0]) == -1) {
                    // conflict: keep remaining watches, restore and report
                    for (size_t rest = wi + 1; rest < ws.size(); ++rest) ws[keep++] = ws[rest];
                    ws.resize(keep);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(c.lits[0], ci);
            }
            ws.resize(keep);
        }
        return -1;
    }

    void bump_var(int v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (auto& a : activity_) a *= 1e-100;
            var_inc_ *= 1e-100;
        }
    }

    void decay_activities() {
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
    }

    int analyze(int conflClause, std::vector<Lit>& learnt) {
        learnt.clear();
        learnt.push_back(-1);  // slot for the asserting literal
        int counter = 0;
        Lit p = -1;  // undefined on the first round
        int ci = conflClause;
        size_t idx = trail_.size();
        std::vector<int> toClear;
        do {
            detail_assert(ci >= 0, "analyze: missing reason");
            Clause& c = clauses_[ci];
            if (c.learnt) c.activity += clause_inc_;
            // a reason clause has its asserting literal at slot 0; skip it
            for (size_t j = (p == -1 ? 0 : 1); j < c.lits.size(); ++j) {
                Lit q = c.lits[j];
                int v = lit_var(q);
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                toClear.push_back(v);
                bump_var(v);
                if (level_[v] == decision_level())
                    ++counter;
                else
                    learnt.push_back(q);
            }
            while (!seen_[lit_var(trail_[idx - 1])]) --idx;
            --idx;
            p = trail_[idx];
            int v = lit_var(p);
            seen_[v] = 0;
            ci = reason_[v];
            --counter;
        } while (counter > 0);
        learnt[0] = lit_neg(p);
        // minimize: drop literals implied by the rest
        std::vector<Lit> minimized = {learnt[0]};
        for (size_t i = 1; i < learnt.size(); ++i) {
            int v = lit_var(learnt[i]);
            int r = reason_[v];
            bool redundant = false;
            if (r >= 0) {
                redundant = true;
                for (Lit q : clauses_[r].lits) {
                    int qv = lit_var(q);
                    if (qv == v) continue;
                    if (!seen_[qv] && level_[qv] != 0) {
                        redundant = false;
                        break;
                    }
                }
            }
            if (!redundant) minimized.push_back(learnt[i]);
        }
        learnt = std::move(minimized);
        for (int v : toClear) seen_[v] = 0;

        int backLevel = 0;
        if (learnt.size() > 1) {
            size_t maxi = 1;
            for (size_t i = 2; i < learnt.size(); ++i)
                if (level_[lit_var(learnt[i])] > level_[lit_var(learnt[maxi])]) maxi = i;
            std::swap(learnt[1], learnt[maxi]);
            backLevel = level_[lit_var(learnt[1])];
        }
        return backLevel;
    }

    void backtrack(int toLevel) {
        if (decision_level() <= toLevel) return;
        int boundary = trail_lim_[toLevel];
        for (int i = static_cast<int>(trail_.size()) - 1; i >= boundary; --i) {
            int v = lit_var(trail_[i]);
            assign_[v] = 0;
            reason_[v] = -1;
            level_[v] = -1;
        }
        trail_.resize(boundary);
        trail_lim_.resize(toLevel);
        qhead_ = trail_.size();
    }

    int pick_branch_var() {
        int best = -1;
        for (int v = 0; v < nvars_; ++v) {
            if (assign_[v] != 0) continue;
            if (best < 0 || activity_[v] > activity_[best] ||
                (activity_[v] == activity_[best] && tie_rank(v) < tie_rank(best)))
                best = v;
        }
        return best;
    }

    int tie_rank(int v) const { return rank_.empty() ? v : rank_[v]; }

    void reduce_db() {
        // drop the colder half of learnt clauses; keep binaries and reasons
        std::vector<std::pair<double, int>> cands;
        for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
            Clause& c = clauses_[ci];
            if (!c.learnt || c.deleted || c.lits.size() <= 2) continue;
            bool isReason = false;
            for (Lit l : c.lits)
                if (value(l) == 1 && reason_[lit_var(l)] == ci) isReason = true;
            if (!isReason) cands.push_back({c.activity, ci});
        }
        std::sort(cands.begin(), cands.end());
        for (size_t i = 0; i < cands.size() / 2; ++i) {
            clauses_[cands[i].second].deleted = true;
            --learnt_count_;
        }
    }
};

}  // namespace sat
}  // namespace ramsey

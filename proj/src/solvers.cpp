#include "satchoice/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace satchoice {

namespace {

class DpllSolver {
public:
    DpllSolver(const Formula& f, std::uint64_t budget) : f_(f), budget_(budget) {
        value_.assign(static_cast<std::size_t>(f.n) + 1, 0);
        occ_.resize(2 * static_cast<std::size_t>(f.n) + 2);
        const auto mc = f.clauses.size();
        unassigned_.resize(mc);
        sat_count_.assign(mc, 0);
        active_clauses_ = static_cast<long>(mc);
        for (std::size_t c = 0; c < mc; ++c) {
            unassigned_[c] = f.clauses[c].width();
            for (const Literal& lit : f.clauses[c].literals)
                occ_[occ_index(lit)].push_back(static_cast<int>(c));
        }
    }

    SolveResult solve() {
        // top-level units
        for (std::size_t c = 0; c < f_.clauses.size(); ++c)
            if (f_.clauses[c].width() == 1) {
                const Literal lit = f_.clauses[c].literals[0];
                if (value_[static_cast<std::size_t>(lit.var)] == 0 &&
                    !set_and_propagate(lit.var, lit.positive))
                    return {SolveStatus::Unsat, Assignment(f_.n)};
            }
        const SolveStatus status = search();
        SolveResult result{status, Assignment(f_.n)};
        if (status == SolveStatus::Sat) {
            for (int v = 1; v <= f_.n; ++v)
                result.assignment.set(v, value_[static_cast<std::size_t>(v)] >= 0);
        }
        return result;
    }

private:
    static std::size_t occ_index(const Literal& lit) {
        return 2 * static_cast<std::size_t>(lit.var) + (lit.positive ? 0 : 1);
    }

    bool set_and_propagate(int var, bool val) {
        std::size_t queue_head = queue_.size();
        queue_.push_back({var, val});
        bool ok = true;
        while (ok && queue_head < queue_.size()) {
            const auto [v, value] = queue_[queue_head++];
            const auto uv = static_cast<std::size_t>(v);
            if (value_[uv] != 0) {
                ok = (value_[uv] > 0) == value;
                continue;
            }
            value_[uv] = value ? 1 : -1;
            trail_.push_back(v);
            for (int c : occ_[occ_index({v, value})]) {
                const auto uc = static_cast<std::size_t>(c);
                unassigned_[uc]--;
                if (sat_count_[uc]++ == 0) active_clauses_--;
            }
            for (int c : occ_[occ_index({v, !value})]) {
                const auto uc = static_cast<std::size_t>(c);
                unassigned_[uc]--;
                if (sat_count_[uc] > 0) continue;
                if (unassigned_[uc] == 0) {
                    ok = false;
                } else if (unassigned_[uc] == 1) {
                    for (const Literal& lit : f_.clauses[uc].literals)
                        if (value_[static_cast<std::size_t>(lit.var)] == 0) {
                            queue_.push_back({lit.var, lit.positive});
                            break;
                        }
                }
            }
        }
        queue_.clear();
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const int v = trail_.back();
            trail_.pop_back();
            const auto uv = static_cast<std::size_t>(v);
            const bool value = value_[uv] > 0;
            value_[uv] = 0;
            for (int c : occ_[occ_index({v, value})]) {
                const auto uc = static_cast<std::size_t>(c);
                unassigned_[uc]++;
                if (--sat_count_[uc] == 0) active_clauses_++;
            }
            for (int c : occ_[occ_index({v, !value})])
                unassigned_[static_cast<std::size_t>(c)]++;
        }
    }

    // Assigns every pure literal; cannot conflict since the opposite
    // polarity occurs only in already satisfied clauses.
    void assign_pure_literals() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> polarity(static_cast<std::size_t>(f_.n) + 1, 0);  // bit 1 pos, bit 2 neg
            for (std::size_t c = 0; c < f_.clauses.size(); ++c) {
                if (sat_count_[c] > 0) continue;
                for (const Literal& lit : f_.clauses[c].literals)
                    if (value_[static_cast<std::size_t>(lit.var)] == 0)
                        polarity[static_cast<std::size_t>(lit.var)] |= lit.positive ? 1 : 2;
            }
            for (int v = 1; v <= f_.n; ++v) {
                const int p = polarity[static_cast<std::size_t>(v)];
                if ((p == 1 || p == 2) && value_[static_cast<std::size_t>(v)] == 0) {
                    set_and_propagate(v, p == 1);
                    changed = true;
                }
            }
        }
    }

    SolveStatus search() {
        if (++nodes_ > budget_) return SolveStatus::BudgetExhausted;
        assign_pure_literals();
        if (active_clauses_ == 0) return SolveStatus::Sat;

        // branch on the most frequent variable in active clauses, true first
        std::vector<long> count(static_cast<std::size_t>(f_.n) + 1, 0);
        for (std::size_t c = 0; c < f_.clauses.size(); ++c) {
            if (sat_count_[c] > 0) continue;
            for (const Literal& lit : f_.clauses[c].literals)
                if (value_[static_cast<std::size_t>(lit.var)] == 0)
                    count[static_cast<std::size_t>(lit.var)]++;
        }
        int branch_var = 0;
        long best = 0;
        for (int v = 1; v <= f_.n; ++v)
            if (count[static_cast<std::size_t>(v)] > best) {
                best = count[static_cast<std::size_t>(v)];
                branch_var = v;
            }
        if (branch_var == 0) return SolveStatus::Sat;  // active clauses all falsified? impossible; guard

        for (const bool val : {true, false}) {
            const std::size_t mark = trail_.size();
            if (set_and_propagate(branch_var, val)) {
                const SolveStatus status = search();
                if (status != SolveStatus::Unsat) return status;
            }
            undo_to(mark);
        }
        return SolveStatus::Unsat;
    }

    const Formula& f_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<int>> occ_;
    std::vector<int> unassigned_;
    std::vector<int> sat_count_;
    long active_clauses_ = 0;
    std::vector<int> trail_;
    std::vector<std::pair<int, bool>> queue_;
};

}  // namespace

SolveResult dpll_sat(const Formula& f, std::uint64_t node_budget) {
    for (const Clause& c : f.clauses)
        if (c.width() == 0) return {SolveStatus::Unsat, Assignment(f.n)};
    DpllSolver solver(f, node_budget);
    return solver.solve();
}

namespace {

// literal node: 2*(var-1) for positive, +1 for negative
std::size_t node_of(const Literal& lit) {
    return 2 * static_cast<std::size_t>(lit.var - 1) + (lit.positive ? 0 : 1);
}

}  // namespace

SolveResult two_sat_scc(const Formula& f) {
    const std::size_t node_count = 2 * static_cast<std::size_t>(f.n);
    std::vector<std::vector<int>> adj(node_count);
    auto add_implication = [&](const Literal& from, const Literal& to) {
        adj[node_of(from)].push_back(static_cast<int>(node_of(to)));
    };
    for (const Clause& c : f.clauses) {
        if (c.width() > 2) throw std::invalid_argument("two_sat_scc: clause width > 2");
        const Literal u = c.literals[0];
        const Literal v = c.width() == 2 ? c.literals[1] : u;  // unit as self-pair
        add_implication(u.negated(), v);
        add_implication(v.negated(), u);
    }

    // iterative Tarjan; components numbered in reverse topological order
    std::vector<int> comp(node_count, -1), low(node_count), num(node_count, -1), stack;
    std::vector<std::pair<int, std::size_t>> dfs;  // (node, next edge index)
    int timer = 0, components = 0;
    for (std::size_t root = 0; root < node_count; ++root) {
        if (num[root] != -1) continue;
        dfs.emplace_back(static_cast<int>(root), 0);
        while (!dfs.empty()) {
            auto& [u, edge] = dfs.back();
            const auto uu = static_cast<std::size_t>(u);
            if (edge == 0) {
                num[uu] = low[uu] = timer++;
                stack.push_back(u);
            }
            if (edge < adj[uu].size()) {
                const int w = adj[uu][edge++];
                const auto uw = static_cast<std::size_t>(w);
                if (num[uw] == -1)
                    dfs.emplace_back(w, 0);
                else if (comp[uw] == -1)
                    low[uu] = std::min(low[uu], num[uw]);
            } else {
                if (low[uu] == num[uu]) {
                    for (;;) {
                        const int w = stack.back();
                        stack.pop_back();
                        comp[static_cast<std::size_t>(w)] = components;
                        if (w == u) break;
                    }
                    components++;
                }
                dfs.pop_back();
                if (!dfs.empty()) {
                    const auto up = static_cast<std::size_t>(dfs.back().first);
                    low[up] = std::min(low[up], low[uu]);
                }
            }
        }
    }

    SolveResult result{SolveStatus::Sat, Assignment(f.n)};
    for (int v = 1; v <= f.n; ++v) {
        const std::size_t pos = node_of({v, true});
        const std::size_t neg = node_of({v, false});
        if (comp[pos] == comp[neg]) return {SolveStatus::Unsat, Assignment(f.n)};
        // smaller component index = later in topological order
        result.assignment.set(v, comp[pos] < comp[neg]);
    }
    return result;
}

}  // namespace satchoice

#include "satchoice/formula.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace satchoice {

namespace {

std::vector<int> canonical(const Clause& c) {
    std::vector<int> lits;
    lits.reserve(c.literals.size());
    for (const Literal& lit : c.literals) lits.push_back(lit.encoded());
    std::sort(lits.begin(), lits.end());
    return lits;
}

}  // namespace

bool same_formula(const Formula& a, const Formula& b) {
    if (a.n != b.n || a.clauses.size() != b.clauses.size()) return false;
    std::map<std::vector<int>, int> counts;
    for (const Clause& c : a.clauses) counts[canonical(c)]++;
    for (const Clause& c : b.clauses) {
        auto it = counts.find(canonical(c));
        if (it == counts.end() || it->second == 0) return false;
        it->second--;
    }
    return true;
}

void validate(const Formula& f) {
    for (const Clause& c : f.clauses) {
        if (c.width() < 1) throw std::invalid_argument("empty clause in formula");
        if (f.width > 0 && c.width() != f.width)
            throw std::invalid_argument("clause width differs from declared width " +
                                        std::to_string(f.width));
        std::vector<int> vars;
        for (const Literal& lit : c.literals) {
            if (lit.var < 1 || lit.var > f.n)
                throw std::invalid_argument("variable index " + std::to_string(lit.var) +
                                            " out of range 1.." + std::to_string(f.n));
            vars.push_back(lit.var);
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw std::invalid_argument("repeated variable within a clause");
    }
}

}  // namespace satchoice

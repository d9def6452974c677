#include "satchoice/dimacs.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace satchoice {

Formula parse_dimacs(std::istream& in) {
    Formula f;
    bool have_header = false;
    int declared_m = 0;
    Clause current;
    int line_no = 0;
    int clause_line = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            if (!(hs >> p >> cnf >> f.n >> declared_m) || cnf != "cnf" || f.n < 0 ||
                declared_m < 0)
                throw DimacsError(line_no, "malformed header, expected 'p cnf <n> <m>'");
            have_header = true;
            continue;
        }
        if (!have_header) throw DimacsError(line_no, "clause before 'p cnf' header");
        std::istringstream ls(line);
        int encoded;
        while (ls >> encoded) {
            if (encoded == 0) {
                if (current.width() < 1) throw DimacsError(line_no, "empty clause");
                f.clauses.push_back(std::move(current));
                current = Clause{};
                continue;
            }
            const int var = std::abs(encoded);
            if (var > f.n)
                throw DimacsError(line_no, "literal index " + std::to_string(encoded) +
                                               " out of range, n = " + std::to_string(f.n));
            if (current.literals.empty()) clause_line = line_no;
            current.literals.push_back(Literal::from_encoded(encoded));
        }
        if (!ls.eof()) throw DimacsError(line_no, "non-numeric token in clause");
    }
    if (!have_header) throw DimacsError(line_no, "missing 'p cnf' header");
    if (!current.literals.empty())
        throw DimacsError(clause_line, "unterminated clause (missing trailing 0)");
    if (f.m() != declared_m)
        throw DimacsError(line_no, "header declares " + std::to_string(declared_m) +
                                       " clauses, found " + std::to_string(f.m()));

    std::set<int> widths;
    for (const Clause& c : f.clauses) widths.insert(c.width());
    f.width = widths.size() == 1 ? *widths.begin() : 0;
    return f;
}

Formula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

Formula parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in);
}

void emit_dimacs(const Formula& f, std::ostream& out) {
    out << "p cnf " << f.n << ' ' << f.m() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c.literals) out << lit.encoded() << ' ';
        out << "0\n";
    }
}

std::string emit_dimacs(const Formula& f) {
    std::ostringstream out;
    emit_dimacs(f, out);
    return out.str();
}

}  // namespace satchoice

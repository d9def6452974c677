#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "satchoice/formula.hpp"

namespace satchoice {

struct DimacsError : std::runtime_error {
    int line;
    DimacsError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);
Formula parse_dimacs_file(const std::string& path);

void emit_dimacs(const Formula& f, std::ostream& out);
std::string emit_dimacs(const Formula& f);

}  // namespace satchoice

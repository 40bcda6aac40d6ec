#pragma once

// Expression language over symmetric functions.
//
// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | 'kron') factor)*
//   factor  := '-' factor | primary
//   primary := rational | atom | '(' expr ')'
//   atom    := ('p'|'h'|'e'|'s'|'m'|'ht'|'st') '[' (int (',' int)*)? ']'
//   rational:= int ('/' int)?
//
// '*' is the ring (outer) product, except between two values in the same
// character basis where it is the character (pointwise tensor) product;
// 'kron' always takes the internal Kronecker product. Values in different
// bases are reconciled by converting the right operand.

#include "symchar/rational.hpp"
#include "symchar/sym_func.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symchar {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct EvalOptions {
    int maxDegree = 16;  // cap on any materialized index size (incl. paddings)
};

// parse and evaluate; throws ParseError on syntax errors and
// std::invalid_argument on validation failures (bad partition, degree cap)
SymFunc parse_expression(const std::string& text, const EvalOptions& opts = {});

// degree-guard helpers shared with the CLI: reject work whose materialized
// index sizes (including character-basis paddings) would exceed maxDegree
void check_conversion_degree(const SymFunc& f, BasisTag target, const EvalOptions& opts);

// "4*st[] + 7*st[1] - st[2,1]"; parses back to an equal SymFunc
std::string render_expression(const SymFunc& f);

// one term per line, "st[2,1] : 3", sorted by (index size, lex)
std::string render_lines(const SymFunc& f);

}  // namespace symchar

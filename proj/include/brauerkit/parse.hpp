#pragma once

#include "brauerkit/algebra.hpp"

namespace brauerkit {

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line),
          col(col) {}
    int line;
    int col;
};

// Polynomial grammar (documented in the README):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*')? factor)*        (juxtaposition multiplies)
//   factor := INT | VAR ('^' ['-'] INT)? | '(' expr ')' ('^' INT)?
// Integer coefficients; variables must be declared in the ring; negative
// exponents only on the ring's Laurent variable. `line` seeds error positions.
MultiPoly parse_poly(const std::string& text, const RingPtr& ring, int line = 1);

// One job document: `key: value` lines, '#' comments, blank lines ignored.
struct JobSpec {
    enum class Kind { CompleteIntersection, DoublePlane, EllipticWeierstrass };
    Kind kind;
    unsigned long prime = 0;        // 0: stay rational where applicable
    int precision = 1;
    int order = 0;                  // 0: derive from prime/hmax as p^hmax + 1
    int hmax = 1;
    std::vector<std::string> vars;    // CI: x0..xn; DP: x0,x1,x2; EW: t
    std::vector<std::string> params;  // optional family parameters
    std::vector<std::string> polys;   // CI: n-2 lines; DP: the sextic
    std::map<int, std::string> weierstrass;  // EW: i -> a_i(t) source text
    std::vector<std::string> outputs;        // subset of log fgl p_series height landweber
    int effective_order() const;
};

JobSpec parse_job(const std::string& document);

}  // namespace brauerkit

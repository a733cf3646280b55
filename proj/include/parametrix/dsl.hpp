#ifndef PARAMETRIX_DSL_HPP
#define PARAMETRIX_DSL_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parametrix/diffop.hpp"

namespace parametrix {

// Diagnostic codes are stable; tests and callers match on them.
enum class DslErrorCode {
    syntax,
    unknown_identifier,
    nonlinear_term,
    derivative_range,
    duplicate_unknown,
};

struct ParseError : std::runtime_error {
    ParseError(DslErrorCode code_, int line_, int col_, const std::string& detail);
    DslErrorCode code;
    int line;
    int col;
};

const char* dsl_error_code_name(DslErrorCode code);

// Parsed .lps source. Equation coefficients live over the n derivative
// symbols plus one trailing symbol per declared parameter, so lowering is
// a plain substitution.
struct SystemSource {
    std::string name;
    int nvars = 0;
    std::vector<std::string> unknowns;
    std::vector<std::string> params;
    std::map<std::string, Rational> param_defaults;
    std::vector<std::vector<Polynomial>> equations;  // [eq][unknown], nvars+params symbols
    std::vector<std::string> equation_names;
};

SystemSource parse_system(const std::string& text);

OperatorTemplate to_template(const SystemSource& src);

// All parameters must be bound by `bindings` or by in-file defaults.
OperatorMatrix lower_to_operator(const SystemSource& src,
                                 const std::map<std::string, Rational>& bindings);

// Inverse of parsing up to entrywise equality of the lowered matrix.
std::string render_system(const OperatorMatrix& op, const std::string& name);

}  // namespace parametrix

#endif

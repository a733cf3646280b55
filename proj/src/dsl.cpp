#include "parametrix/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parametrix/analysis.hpp"

namespace parametrix {

const char* dsl_error_code_name(DslErrorCode code) {
    switch (code) {
        case DslErrorCode::syntax: return "E_SYNTAX";
        case DslErrorCode::unknown_identifier: return "E_UNKNOWN_ID";
        case DslErrorCode::nonlinear_term: return "E_NONLINEAR";
        case DslErrorCode::derivative_range: return "E_DERIV_RANGE";
        case DslErrorCode::duplicate_unknown: return "E_DUP_UNKNOWN";
    }
    return "E_SYNTAX";
}

ParseError::ParseError(DslErrorCode code_, int line_, int col_, const std::string& detail)
    : std::runtime_error(std::string(dsl_error_code_name(code_)) + " at " + std::to_string(line_) +
                         ":" + std::to_string(col_) + ": " + detail),
      code(code_), line(line_), col(col_) {}

namespace {

struct LineScanner {
    const std::string& s;
    int line;
    size_t pos = 0;

    [[noreturn]] void fail(DslErrorCode code, const std::string& detail) const {
        throw ParseError(code, line, static_cast<int>(pos) + 1, detail);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail(DslErrorCode::syntax, "expected identifier");
        return s.substr(start, pos - start);
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) fail(DslErrorCode::syntax, "expected number");
        return s.substr(start, pos - start);
    }
    int integer() {
        std::string t = number();
        try {
            return std::stoi(t);
        } catch (...) {
            fail(DslErrorCode::syntax, "bad integer '" + t + "'");
        }
    }
};

bool is_derivative_symbol(const std::string& id) {
    if (id.size() < 2 || id[0] != 'd') return false;
    return std::all_of(id.begin() + 1, id.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Builder {
    SystemSource src;
    bool have_system = false, have_n = false, have_unknowns = false;
    int total_vars() const { return src.nvars + static_cast<int>(src.params.size()); }

    int unknown_index(const std::string& id) const {
        auto it = std::find(src.unknowns.begin(), src.unknowns.end(), id);
        return it == src.unknowns.end() ? -1 : static_cast<int>(it - src.unknowns.begin());
    }
    int param_index(const std::string& id) const {
        auto it = std::find(src.params.begin(), src.params.end(), id);
        return it == src.params.end() ? -1 : static_cast<int>(it - src.params.begin());
    }
};

void parse_equation(Builder& b, LineScanner& sc) {
    std::vector<Polynomial> row(static_cast<size_t>(b.src.unknowns.size()),
                                Polynomial(b.total_vars()));
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
        if (sc.s[sc.pos] == '-') sign = -1;
        ++sc.pos;
    }
    while (true) {
        Rational coeff(1);
        Monomial mon(b.total_vars());
        int unknown = -1;
        bool any = false;
        while (true) {
            if (sc.eof()) sc.fail(DslErrorCode::syntax, "unterminated term");
            char c = sc.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string lit = sc.number();
                try {
                    coeff *= Rational::parse(lit);
                } catch (const std::exception&) {
                    sc.fail(DslErrorCode::syntax, "bad rational '" + lit + "'");
                }
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t at = sc.pos;
                std::string id = sc.ident();
                if (is_derivative_symbol(id)) {
                    int idx = std::stoi(id.substr(1));
                    if (idx < 1 || idx > b.src.nvars) {
                        sc.pos = at;
                        sc.fail(DslErrorCode::derivative_range,
                                "derivative " + id + " out of range 1..d" + std::to_string(b.src.nvars));
                    }
                    int exp = 1;
                    if (sc.consume('^')) exp = sc.integer();
                    for (int k = 0; k < exp; ++k) mon = mon.raised(idx - 1);
                } else if (int u = b.unknown_index(id); u >= 0) {
                    if (unknown >= 0) {
                        sc.pos = at;
                        sc.fail(DslErrorCode::nonlinear_term, "product of unknowns");
                    }
                    unknown = u;
                } else if (int p = b.param_index(id); p >= 0) {
                    mon = mon.raised(b.src.nvars + p);
                } else {
                    sc.pos = at;
                    sc.fail(DslErrorCode::unknown_identifier, "unknown identifier '" + id + "'");
                }
                any = true;
            } else {
                sc.fail(DslErrorCode::syntax, "unexpected character in term");
            }
            if (sc.consume('*')) continue;
            break;
        }
        if (!any || unknown < 0)
            sc.fail(DslErrorCode::syntax, "term does not reference an unknown");
        row[static_cast<size_t>(unknown)].add_term(mon, sign > 0 ? coeff : -coeff);
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sign = c == '+' ? 1 : -1;
            ++sc.pos;
            continue;
        }
        break;
    }
    if (!sc.consume('=')) sc.fail(DslErrorCode::syntax, "expected '= 0'");
    if (sc.peek() != '0') sc.fail(DslErrorCode::syntax, "right-hand side must be 0");
    ++sc.pos;
    if (!sc.eof()) sc.fail(DslErrorCode::syntax, "trailing input after '= 0'");
    b.src.equations.push_back(std::move(row));
    b.src.equation_names.push_back("eq" + std::to_string(b.src.equations.size()));
}

}  // namespace

SystemSource parse_system(const std::string& text) {
    Builder b;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        LineScanner sc{raw, lineno};
        if (sc.eof()) continue;
        size_t kw_at = sc.pos;
        std::string kw = sc.ident();
        if (kw == "system") {
            if (b.have_system) sc.fail(DslErrorCode::syntax, "duplicate system line");
            b.src.name = sc.ident();
            b.have_system = true;
        } else if (kw == "n") {
            if (!b.have_system) sc.fail(DslErrorCode::syntax, "n before system line");
            if (!sc.consume('=')) sc.fail(DslErrorCode::syntax, "expected '=' after n");
            int n = sc.integer();
            if (n < 1 || n > kMaxVars) sc.fail(DslErrorCode::syntax, "n out of range 1..8");
            b.src.nvars = n;
            b.have_n = true;
        } else if (kw == "param") {
            if (!b.have_n) sc.fail(DslErrorCode::syntax, "param before n");
            if (b.have_unknowns) sc.fail(DslErrorCode::syntax, "param after unknowns");
            std::string id = sc.ident();
            if (is_derivative_symbol(id))
                sc.fail(DslErrorCode::syntax, "reserved derivative symbol '" + id + "'");
            if (b.param_index(id) >= 0)
                sc.fail(DslErrorCode::duplicate_unknown, "duplicate parameter '" + id + "'");
            if (b.total_vars() + 1 > kMaxVars)
                sc.fail(DslErrorCode::syntax, "too many symbols (n + params must stay <= 8)");
            b.src.params.push_back(id);
            if (sc.consume('=')) {
                std::string lit = sc.number();
                try {
                    b.src.param_defaults[id] = Rational::parse(lit);
                } catch (const std::exception&) {
                    sc.fail(DslErrorCode::syntax, "bad rational '" + lit + "'");
                }
            }
            if (!sc.eof()) sc.fail(DslErrorCode::syntax, "trailing input after param");
        } else if (kw == "unknowns") {
            if (!b.have_n) sc.fail(DslErrorCode::syntax, "unknowns before n");
            if (b.have_unknowns) sc.fail(DslErrorCode::syntax, "duplicate unknowns line");
            while (true) {
                std::string id = sc.ident();
                if (is_derivative_symbol(id))
                    sc.fail(DslErrorCode::syntax, "reserved derivative symbol '" + id + "'");
                if (b.unknown_index(id) >= 0 || b.param_index(id) >= 0)
                    sc.fail(DslErrorCode::duplicate_unknown, "duplicate unknown '" + id + "'");
                b.src.unknowns.push_back(id);
                if (!sc.consume(',')) break;
            }
            if (!sc.eof()) sc.fail(DslErrorCode::syntax, "trailing input after unknowns");
            b.have_unknowns = true;
        } else if (kw == "eq") {
            if (!b.have_unknowns) sc.fail(DslErrorCode::syntax, "eq before unknowns");
            parse_equation(b, sc);
        } else {
            sc.pos = kw_at;
            sc.fail(DslErrorCode::syntax, "unknown directive '" + kw + "'");
        }
    }
    LineScanner tail{raw, lineno == 0 ? 1 : lineno};
    if (!b.have_system) tail.fail(DslErrorCode::syntax, "missing system line");
    if (!b.have_n) tail.fail(DslErrorCode::syntax, "missing n line");
    if (!b.have_unknowns) tail.fail(DslErrorCode::syntax, "missing unknowns line");
    return b.src;
}

OperatorTemplate to_template(const SystemSource& src) {
    OperatorTemplate tmpl;
    tmpl.base_nvars = src.nvars;
    tmpl.params = src.params;
    tmpl.defaults = src.param_defaults;
    int total = src.nvars + static_cast<int>(src.params.size());
    OperatorMatrix raw(static_cast<int>(src.equations.size()),
                       static_cast<int>(src.unknowns.size()), total);
    for (size_t i = 0; i < src.equations.size(); ++i)
        for (size_t k = 0; k < src.unknowns.size(); ++k)
            raw.set(static_cast<int>(i), static_cast<int>(k), src.equations[i][k]);
    raw.set_unknown_names(src.unknowns);
    raw.set_equation_names(src.equation_names);
    tmpl.raw = raw;
    return tmpl;
}

OperatorMatrix lower_to_operator(const SystemSource& src,
                                 const std::map<std::string, Rational>& bindings) {
    return substitute_params(to_template(src), bindings);
}

std::string render_system(const OperatorMatrix& op, const std::string& name) {
    std::ostringstream out;
    out << "system " << name << "\n";
    out << "n = " << op.nvars() << "\n";
    out << "unknowns ";
    for (int k = 0; k < op.cols(); ++k) {
        if (k) out << ", ";
        out << op.unknown_names()[static_cast<size_t>(k)];
    }
    out << "\n";
    for (int i = 0; i < op.rows(); ++i) {
        ModuleVector row = op.row(i);
        if (row.is_zero())
            out << "eq 0*" << op.unknown_names()[0] << " = 0\n";
        else
            out << "eq " << render_linear_combination(row, op.unknown_names()) << " = 0\n";
    }
    return out.str();
}

}  // namespace parametrix

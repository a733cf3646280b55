#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "parametrix/dsl.hpp"
#include "parametrix/gallery.hpp"
#include "parametrix/report.hpp"

namespace {

using namespace parametrix;

struct CommonOptions {
    std::string input;
    int n = 0;  // 0 = entry default
    std::vector<std::string> params;
    std::string order = "degrevlex";
    bool json = false;
    int degree_cap = 10;
    unsigned seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", opt.input, "gallery:NAME or path to a .lps file")->required();
    cmd->add_option("--n", opt.n, "space dimension for gallery entries");
    cmd->add_option("--param", opt.params, "parameter binding NAME=RATIONAL (repeatable)");
    cmd->add_option("--order", opt.order, "monomial order: lex|deglex|degrevlex")
        ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
    cmd->add_flag("--json", opt.json, "machine-readable report");
    cmd->add_option("--degree-cap", opt.degree_cap, "involutive completion degree cap");
    cmd->add_option("--seed", opt.seed, "seed for randomized coordinate-change fallback");
}

std::map<std::string, Rational> parse_bindings(const std::vector<std::string>& params) {
    std::map<std::string, Rational> out;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad --param '" + p + "' (expected NAME=RATIONAL)");
        out[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
    }
    return out;
}

int default_n(const std::string& gallery_name) {
    if (gallery_name == "kalman") return 1;
    if (gallery_name == "maxwell-first") return 4;
    if (gallery_name == "einstein") return 3;
    return 2;
}

OperatorMatrix resolve_input(const CommonOptions& opt) {
    auto bindings = parse_bindings(opt.params);
    if (opt.input.rfind("gallery:", 0) == 0) {
        std::string name = opt.input.substr(8);
        int n = opt.n > 0 ? opt.n : default_n(name);
        return gallery_build(name, n, bindings).op;
    }
    std::ifstream in(opt.input);
    if (!in) throw std::invalid_argument("cannot open input file '" + opt.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    SystemSource src = parse_system(buf.str());
    return lower_to_operator(src, bindings);
}

int effective_degree_cap(const CommonOptions& opt, bool cap_given) {
    if (cap_given) return opt.degree_cap;
    if (const char* env = std::getenv("PARAMETRIX_DEGREE_CAP")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw std::invalid_argument("bad PARAMETRIX_DEGREE_CAP value");
        }
    }
    return opt.degree_cap;
}

void emit(const ordered_json& j, const std::string& text, bool json) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_gallery_cmd(bool json, const std::string& filter) {
    auto catalog = gallery_catalog();
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    for (const auto& g : catalog) {
        bool keep = filter.empty() || (filter == "torsion" && g.known_torsion_config) ||
                    (filter != "torsion" && g.name.find(filter) != std::string::npos);
        if (!keep) continue;
        ordered_json j;
        j["name"] = g.name;
        j["n"] = g.supported_n;
        j["params"] = g.params;
        j["expected"] = g.expected;
        rows.push_back(std::move(j));
        text << g.name << "  (n: " << g.supported_n
             << (g.params.empty() ? "" : ", params: " + g.params) << ")\n    " << g.expected
             << "\n";
    }
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = "gallery";
    doc["entries"] = std::move(rows);
    emit(doc, text.str(), json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parametrix: torsion-free test and parametrization of linear "
                 "constant-coefficient PDE systems"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string gallery_filter;

    CLI::App* cmd_test = app.add_subcommand("test", "run the five-step torsion-free test");
    add_common(cmd_test, opt);
    CLI::App* cmd_adjoint = app.add_subcommand("adjoint", "formal adjoint of the operator");
    add_common(cmd_adjoint, opt);
    CLI::App* cmd_cc = app.add_subcommand("cc", "generating compatibility conditions");
    add_common(cmd_cc, opt);
    CLI::App* cmd_par = app.add_subcommand("parametrize", "candidate parametrization D_-1");
    add_common(cmd_par, opt);
    CLI::App* cmd_inv = app.add_subcommand("involution", "involutive completion and class counts");
    add_common(cmd_inv, opt);
    CLI::App* cmd_gal = app.add_subcommand("gallery", "list built-in systems");
    cmd_gal->add_flag("--json", opt.json, "machine-readable listing");
    cmd_gal->add_option("--filter", gallery_filter, "filter: 'torsion' or name substring");

    CLI11_PARSE(app, argc, argv);

    try {
        MonomialOrder ord = MonomialOrder::parse(opt.order);
        if (cmd_gal->parsed()) return run_gallery_cmd(opt.json, gallery_filter);

        if (cmd_test->parsed()) {
            OperatorMatrix op = resolve_input(opt);
            TestReport rep = torsion_free_test(op, ord);
            emit(test_report_json(rep, ord), test_report_text(rep, ord), opt.json);
            return rep.torsion_free ? 0 : 2;
        }
        if (cmd_adjoint->parsed()) {
            OperatorMatrix op = resolve_input(opt);
            emit(single_stage_json("adjoint", adjoint(op), ord),
                 single_stage_text("adjoint", adjoint(op), ord), opt.json);
            return 0;
        }
        if (cmd_cc->parsed()) {
            OperatorMatrix op = resolve_input(opt);
            OperatorMatrix cc = compatibility_conditions(op, ord);
            emit(single_stage_json("cc", cc, ord), single_stage_text("cc", cc, ord), opt.json);
            return 0;
        }
        if (cmd_par->parsed()) {
            OperatorMatrix op = resolve_input(opt);
            Parametrization p = parametrize(op, ord);
            emit(parametrization_json(p, ord), parametrization_text(p, ord), opt.json);
            return 0;
        }
        if (cmd_inv->parsed()) {
            OperatorMatrix op = resolve_input(opt);
            CompletionOptions copts;
            copts.degree_cap = effective_degree_cap(opt, cmd_inv->count("--degree-cap") > 0);
            copts.seed = opt.seed;
            InvolutiveSystem sys = involutive_completion(op.row_vectors(), op.nvars(), copts);
            emit(involution_json(sys, op.unknown_names(), ord),
                 involution_text(sys, op.unknown_names(), ord), opt.json);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

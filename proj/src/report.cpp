#include "parametrix/report.hpp"

#include <sstream>

namespace parametrix {

namespace {

std::string equation_line(const OperatorMatrix& op, int i, const MonomialOrder& ord) {
    return op.equation_names()[static_cast<size_t>(i)] + ": " +
           render_linear_combination(op.row(i), op.unknown_names(), ord) + " = 0";
}

void matrix_text(std::ostream& out, const std::string& title, const OperatorMatrix& op,
                 const MonomialOrder& ord) {
    out << title << " (" << op.rows() << " x " << op.cols() << ", order " << op.max_order()
        << ")\n";
    for (int i = 0; i < op.rows(); ++i) out << "  " << equation_line(op, i, ord) << "\n";
}

}  // namespace

ordered_json matrix_json(const OperatorMatrix& op, const MonomialOrder& ord) {
    ordered_json j;
    j["rows"] = op.rows();
    j["cols"] = op.cols();
    j["nvars"] = op.nvars();
    j["order"] = op.max_order();
    j["equations"] = op.equation_names();
    j["unknowns"] = op.unknown_names();
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < op.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < op.cols(); ++k) row.push_back(op.at(i, k).str(ord));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string render_parametrization_rows(const OperatorMatrix& op, const MonomialOrder& ord) {
    std::ostringstream out;
    for (int i = 0; i < op.rows(); ++i) {
        ModuleVector row = op.row(i);
        out << "  " << op.equation_names()[static_cast<size_t>(i)] << " = "
            << render_linear_combination(row, op.unknown_names(), ord) << "\n";
    }
    return out.str();
}

ordered_json test_report_json(const TestReport& rep, const MonomialOrder& ord) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = "test";
    j["order"] = ord.name();
    j["verdict"]["torsion_free"] = rep.torsion_free;
    j["operators"]["input"] = matrix_json(rep.input, ord);
    j["operators"]["adjoint_of_input"] = matrix_json(rep.adjoint_of_input, ord);
    j["operators"]["cc_of_adjoint"] = matrix_json(rep.cc_of_adjoint, ord);
    j["operators"]["candidate_parametrization"] = matrix_json(rep.candidate_parametrization, ord);
    j["operators"]["cc_of_candidate"] = matrix_json(rep.cc_of_candidate, ord);
    j["parametrization"]["order"] = rep.candidate_parametrization.max_order();
    j["parametrization"]["potentials"] = rep.candidate_parametrization.unknown_names();
    ordered_json torsion = ordered_json::array();
    for (const auto& cert : rep.torsion) {
        ordered_json c;
        c["element"] = cert.element_label;
        if (cert.annihilator)
            c["annihilator"] = cert.annihilator->str(ord);
        else
            c["annihilator"] = nullptr;
        c["status"] = cert.exhausted ? "annihilator search exhausted" : "ok";
        torsion.push_back(std::move(c));
    }
    j["torsion"] = std::move(torsion);
    j["counts"]["cc_rows"] = rep.cc_of_candidate.rows();
    j["counts"]["potentials"] = rep.candidate_parametrization.cols();
    j["counts"]["torsion_certificates"] = rep.torsion.size();
    j["counts"]["orders"] = rep.orders;
    j["timing_ms"] = rep.timing_ms;
    return j;
}

std::string test_report_text(const TestReport& rep, const MonomialOrder& ord) {
    std::ostringstream out;
    out << "torsion-free test (order " << ord.name() << ")\n";
    matrix_text(out, "step 1  D = input", rep.input, ord);
    matrix_text(out, "step 2  ad(D)", rep.adjoint_of_input, ord);
    matrix_text(out, "step 3  CC(ad(D)) = ad(D_-1)", rep.cc_of_adjoint, ord);
    out << "step 4  D_-1 (candidate parametrization, " << rep.candidate_parametrization.cols()
        << " potentials, order " << rep.candidate_parametrization.max_order() << ")\n"
        << render_parametrization_rows(rep.candidate_parametrization, ord);
    matrix_text(out, "step 5  D' = CC(D_-1)", rep.cc_of_candidate, ord);
    if (rep.torsion_free) {
        out << "verdict: torsion-free (D and D' present the same module)\n";
    } else {
        out << "verdict: torsion (D < D' strictly)\n";
        out << "torsion certificates:\n";
        for (const auto& cert : rep.torsion) {
            out << "  element " << cert.element_label;
            if (cert.annihilator)
                out << ", annihilator " << cert.annihilator->str(ord);
            else
                out << ", torsion suspected, annihilator search exhausted";
            out << "\n";
        }
    }
    out << "counts: cc_rows=" << rep.cc_of_candidate.rows()
        << " potentials=" << rep.candidate_parametrization.cols()
        << " certificates=" << rep.torsion.size() << "\n";
    out << "orders:";
    for (const auto& [k, v] : rep.orders) out << " " << k << "=" << v;
    out << "\n";
    out << "timing_ms:";
    for (const auto& [k, v] : rep.timing_ms) out << " " << k << "=" << v;
    out << "\n";
    return out.str();
}

ordered_json single_stage_json(const std::string& command, const OperatorMatrix& result,
                               const MonomialOrder& ord) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["order"] = ord.name();
    j["result"] = matrix_json(result, ord);
    j["counts"]["rows"] = result.rows();
    j["counts"]["cols"] = result.cols();
    j["counts"]["max_order"] = result.max_order();
    return j;
}

std::string single_stage_text(const std::string& command, const OperatorMatrix& result,
                              const MonomialOrder& ord) {
    std::ostringstream out;
    matrix_text(out, command + " result", result, ord);
    return out.str();
}

ordered_json parametrization_json(const Parametrization& p, const MonomialOrder& ord) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = "parametrize";
    j["order"] = ord.name();
    j["result"] = matrix_json(p.op, ord);
    j["parametrization"]["order"] = p.order;
    j["parametrization"]["potentials"] = p.potential_names;
    j["counts"]["potentials"] = p.potential_names.size();
    j["counts"]["max_order"] = p.order;
    return j;
}

std::string parametrization_text(const Parametrization& p, const MonomialOrder& ord) {
    std::ostringstream out;
    out << "parametrization with " << p.potential_names.size() << " potentials, order " << p.order
        << "\n"
        << render_parametrization_rows(p.op, ord);
    return out.str();
}

ordered_json involution_json(const InvolutiveSystem& sys, const std::vector<std::string>& unknowns,
                             const MonomialOrder& ord) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = "involution";
    j["order"] = ord.name();
    j["involutive"] = sys.involutive;
    j["nvars"] = sys.nvars;
    j["unknowns"] = unknowns;
    j["system_order"] = sys.order();
    ordered_json eqs = ordered_json::array();
    for (const auto& e : sys.equations) {
        ordered_json je;
        je["equation"] = render_linear_combination(e.row, unknowns, ord) + " = 0";
        je["order"] = e.order;
        je["class"] = e.klass;
        je["multiplicative"] = e.multiplicative;
        eqs.push_back(std::move(je));
    }
    j["equations"] = std::move(eqs);
    ordered_json change = ordered_json::array();
    for (const auto& row : sys.coordinate_change) {
        ordered_json jrow = ordered_json::array();
        for (const auto& c : row) jrow.push_back(c.str());
        change.push_back(std::move(jrow));
    }
    j["coordinate_change"] = std::move(change);
    std::map<std::string, int> class_counts;
    for (const auto& e : sys.equations)
        if (e.order == sys.order()) class_counts["class" + std::to_string(e.klass)]++;
    j["counts"]["equations"] = sys.equations.size();
    j["counts"]["top_order_by_class"] = class_counts;
    j["full_torsion"] = full_torsion_check(sys);
    return j;
}

std::string involution_text(const InvolutiveSystem& sys, const std::vector<std::string>& unknowns,
                            const MonomialOrder& ord) {
    std::ostringstream out;
    out << "involutive completion: " << sys.equations.size() << " equations, order " << sys.order()
        << "\n";
    for (const auto& e : sys.equations) {
        out << "  [order " << e.order << ", class " << e.klass << ", mult {";
        for (size_t i = 0; i < e.multiplicative.size(); ++i) {
            if (i) out << ",";
            out << "d" << e.multiplicative[static_cast<size_t>(i)];
        }
        out << "}] " << render_linear_combination(e.row, unknowns, ord) << " = 0\n";
    }
    out << "coordinate change:\n";
    for (const auto& row : sys.coordinate_change) {
        out << "  [";
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << " ";
            out << row[j].str();
        }
        out << "]\n";
    }
    out << "full torsion (class-n count = m): " << (full_torsion_check(sys) ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace parametrix

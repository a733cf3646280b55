#ifndef PARAMETRIX_REPORT_HPP
#define PARAMETRIX_REPORT_HPP

#include <string>

#include <json.hpp>

#include "parametrix/analysis.hpp"
#include "parametrix/janet.hpp"

namespace parametrix {

using ordered_json = nlohmann::ordered_json;

// report-v1: stable key order, canonical polynomial rendering; timing
// fields are the only run-dependent part.
inline constexpr const char* kReportSchema = "report-v1";

ordered_json matrix_json(const OperatorMatrix& op, const MonomialOrder& ord);

ordered_json test_report_json(const TestReport& rep, const MonomialOrder& ord);
std::string test_report_text(const TestReport& rep, const MonomialOrder& ord);

ordered_json single_stage_json(const std::string& command, const OperatorMatrix& result,
                               const MonomialOrder& ord);
std::string single_stage_text(const std::string& command, const OperatorMatrix& result,
                              const MonomialOrder& ord);

ordered_json parametrization_json(const Parametrization& p, const MonomialOrder& ord);
std::string parametrization_text(const Parametrization& p, const MonomialOrder& ord);

ordered_json involution_json(const InvolutiveSystem& sys, const std::vector<std::string>& unknowns,
                             const MonomialOrder& ord);
std::string involution_text(const InvolutiveSystem& sys, const std::vector<std::string>& unknowns,
                            const MonomialOrder& ord);

// "s11 = d2^2*phi1" style listing of a parametrizing operator.
std::string render_parametrization_rows(const OperatorMatrix& op, const MonomialOrder& ord);

}  // namespace parametrix

#endif

#include "pvi/report.hpp"

#include <sstream>

namespace pvi {

std::string report_text(const VerifyReport& rep) {
    std::ostringstream os;
    os << (rep.passed ? "PASS " : "FAIL ") << rep.label << " theta=" << rep.theta.str()
       << " path=" << (rep.path == VerifyPath::Exact ? "exact" : "numeric")
       << " max_residual=" << rep.max_residual;
    if (rep.path == VerifyPath::Numeric) os << " samples=" << rep.samples;
    os << " time=" << rep.wall_seconds << "s";
    return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string report_json(const VerifyReport& rep) {
    std::ostringstream os;
    os << "{\"entry\":\"" << json_escape(rep.label) << "\",\"theta\":[\""
       << to_string(rep.theta.t0) << "\",\"" << to_string(rep.theta.t1) << "\",\""
       << to_string(rep.theta.tt) << "\",\"" << to_string(rep.theta.ti) << "\"],\"path\":\""
       << (rep.path == VerifyPath::Exact ? "exact" : "numeric") << "\",\"passed\":"
       << (rep.passed ? "true" : "false") << ",\"max_residual\":\"" << rep.max_residual
       << "\",\"samples\":" << rep.samples << "}";
    return os.str();
}

}  // namespace pvi

#include "schwarzlab/slack.hpp"

#include <cmath>
#include <stdexcept>

namespace schwarzlab {

std::string_view to_string(Equation eq) {
    switch (eq) {
        case Equation::Eq1: return "eq1";
        case Equation::Eq2: return "eq2";
        case Equation::Eq4: return "eq4";
        case Equation::Eq6: return "eq6";
        case Equation::Eq7: return "eq7";
        case Equation::Eq8: return "eq8";
        case Equation::Eq11: return "eq11";
        case Equation::Eq15: return "eq15";
        case Equation::Eq16: return "eq16";
        case Equation::Eq17: return "eq17";
        case Equation::Chain: return "chain";
    }
    throw std::logic_error("unknown equation tag");
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Equality: return "equality";
    }
    throw std::logic_error("unknown verdict");
}

std::optional<Equation> parse_equation(std::string_view text) {
    for (Equation eq : {Equation::Eq1, Equation::Eq2, Equation::Eq4, Equation::Eq6,
                        Equation::Eq7, Equation::Eq8, Equation::Eq11, Equation::Eq15,
                        Equation::Eq16, Equation::Eq17, Equation::Chain}) {
        if (to_string(eq) == text) {
            return eq;
        }
    }
    return std::nullopt;
}

namespace {

SlackReport classify(Equation eq, double bound, double measured, double slack,
                     Tolerances tol) {
    SlackReport report;
    report.equation = eq;
    report.bound = bound;
    report.measured = measured;
    report.slack = slack;
    report.tolerance = tol.violation;
    if (slack < -tol.violation) {
        report.verdict = Verdict::Violated;
    } else if (std::abs(slack) <= tol.equality) {
        report.verdict = Verdict::Equality;
    } else {
        report.verdict = Verdict::Holds;
    }
    return report;
}

}  // namespace

SlackReport make_lower_bound_report(Equation eq, double bound, double measured,
                                    Tolerances tol) {
    return classify(eq, bound, measured, measured - bound, tol);
}

SlackReport make_upper_bound_report(Equation eq, double bound, double measured,
                                    Tolerances tol) {
    return classify(eq, bound, measured, bound - measured, tol);
}

nlohmann::json SlackReport::to_json() const {
    return {{"equation", std::string(schwarzlab::to_string(equation))},
            {"bound", bound},
            {"measured", measured},
            {"slack", slack},
            {"tolerance", tolerance},
            {"verdict", std::string(schwarzlab::to_string(verdict))}};
}

}  // namespace schwarzlab

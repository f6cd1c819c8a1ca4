#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace schwarzlab {

enum class Verdict { Holds, Violated, Equality };

/// Wire-format tags for the checked inequalities.  "chain" is the pointwise
/// radial growth inequality; the rest follow the report schema used by the
/// CLI and the suite driver.
enum class Equation {
    Eq1,    // sharp boundary bound            |f'(b)| >= 2/(1+|f'(0)|)        lower
    Eq2,    // boundary magnification           |f'(b)| >= 1                    lower
    Eq4,    // arc-length bound                 sigma >= 2s/(1+|f'(0)|)         lower
    Eq6,    // interior bound                   |f(z)| <= |z|(|z|+a)/(1+a|z|)   upper
    Eq7,    // quotient-map bound               |f(z)/z| <= (|z|+a)/(1+a|z|)    upper
    Eq8,    // general boundary bound (shifted maps)                            lower
    Eq11,   // recentered boundary derivative   |F'(b)| <= |f'(b)|(1+|c|)/(1-|c|) upper
    Eq15,   // order-k interior bound                                           upper
    Eq16,   // order-k boundary bound           |f'(b)| >= k + (1-|a_k|)/(1+|a_k|) lower
    Eq17,   // automorphism floor               |f'(b)| >= (1-|f(0)|)/(1+|f(0)|) lower
    Chain,  // (1-|f(z)|)/(1-|z|) >= (1+|z|)/(1+a|z|)                           lower
};

std::string_view to_string(Equation eq);
std::string_view to_string(Verdict verdict);
std::optional<Equation> parse_equation(std::string_view text);

/// Classification thresholds.  A check is Violated when its signed slack
/// falls below -violation; it counts as Equality when |slack| <= equality.
/// Defaults sit two orders above double-precision accumulation at degree <= 16;
/// the equality threshold is the tighter of the two.
struct Tolerances {
    double violation = 1e-9;
    double equality = 1e-10;
};

/// One bound check.  Signed slack convention: measured - bound for lower
/// bounds, bound - measured for upper bounds, so that in both cases
/// "inequality holds" is exactly "slack >= -tolerance".
struct SlackReport {
    Equation equation;
    double bound = 0.0;
    double measured = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;  // the violation threshold used for the verdict
    Verdict verdict = Verdict::Holds;

    nlohmann::json to_json() const;
};

SlackReport make_lower_bound_report(Equation eq, double bound, double measured,
                                    Tolerances tol = {});
SlackReport make_upper_bound_report(Equation eq, double bound, double measured,
                                    Tolerances tol = {});

}  // namespace schwarzlab

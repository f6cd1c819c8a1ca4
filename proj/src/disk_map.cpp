#include "schwarzlab/disk_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schwarzlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEvalDomainSlack = 1e-12;

Complex json_to_complex(const nlohmann::json& j) {
    return Complex{j.at("re").get<double>(), j.at("im").get<double>()};
}

nlohmann::json complex_to_json(Complex z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

// (value, derivative) of w^m for small integer m >= 1.
std::pair<Complex, Complex> integer_power_with_derivative(Complex w, Complex dw, int m) {
    Complex value = w;
    Complex deriv = dw;
    for (int i = 1; i < m; ++i) {
        deriv = deriv * w + value * dw;  // product rule, keeps w = 0 exact
        value *= w;
    }
    return {value, deriv};
}

}  // namespace

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_finite(Complex value, const char* what) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw std::invalid_argument(std::string(what) + " must have finite components");
    }
}

DiskPoint::DiskPoint(Complex value) : value_(value) {
    require_finite(value, "DiskPoint");
    if (std::abs(value) >= 1.0) {
        throw std::invalid_argument("DiskPoint requires |value| < 1");
    }
}

BoundaryPoint::BoundaryPoint(double angle) {
    require_finite(angle, "BoundaryPoint angle");
    angle_ = std::fmod(angle, kTwoPi);
    if (angle_ < 0.0) {
        angle_ += kTwoPi;
    }
    if (angle_ >= kTwoPi) {  // fmod can land exactly on 2*pi after the shift
        angle_ = 0.0;
    }
}

Complex BlaschkeFactor::operator()(Complex z) const {
    const Complex a = zero.value();
    return (z - a) / (1.0 - std::conj(a) * z);
}

Complex BlaschkeFactor::derivative(Complex z) const {
    const Complex a = zero.value();
    const Complex den = 1.0 - std::conj(a) * z;
    return (1.0 - std::norm(a)) / (den * den);
}

DiskSelfMap::DiskSelfMap(double phase, std::vector<ZeroSpec> zeros,
                         std::optional<Complex> post_shift)
    : phase_(phase), post_shift_(post_shift) {
    require_finite(phase, "phase");
    if (zeros.empty()) {
        throw std::invalid_argument("DiskSelfMap requires at least one zero (degree >= 1)");
    }
    // Merge entries with bit-identical positions so multiplicities are canonical.
    for (const ZeroSpec& entry : zeros) {
        require_finite(entry.position, "zero position");
        if (std::abs(entry.position) >= 1.0) {
            throw std::invalid_argument("zero position must satisfy |a| < 1");
        }
        if (entry.multiplicity < 1) {
            throw std::invalid_argument("zero multiplicity must be >= 1");
        }
        bool merged = false;
        for (ZeroSpec& existing : zeros_) {
            if (existing.position == entry.position) {
                existing.multiplicity += entry.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) {
            zeros_.push_back(entry);
        }
    }
    if (post_shift_) {
        require_finite(*post_shift_, "post_shift");
        if (std::abs(*post_shift_) >= 1.0) {
            throw std::invalid_argument("post_shift must satisfy |c| < 1");
        }
    }
    degree_ = 0;
    origin_multiplicity_ = 0;
    for (const ZeroSpec& entry : zeros_) {
        degree_ += entry.multiplicity;
        if (entry.position == Complex{0.0, 0.0}) {
            origin_multiplicity_ = entry.multiplicity;
        }
    }
}

DiskSelfMap DiskSelfMap::power(int k, double alpha) {
    if (k < 1) {
        throw std::invalid_argument("power map requires k >= 1");
    }
    return DiskSelfMap(alpha, {ZeroSpec{Complex{0.0, 0.0}, k}});
}

bool DiskSelfMap::is_rotation() const {
    return !post_shift_ && degree_ == 1 && origin_multiplicity_ == 1;
}

std::pair<Complex, Complex> DiskSelfMap::eval_with_derivative(Complex z) const {
    require_finite(z, "evaluation point");
    if (std::abs(z) > 1.0 + kEvalDomainSlack) {
        throw std::domain_error("evaluation point lies outside the closed unit disk");
    }
    Complex value = std::polar(1.0, phase_);
    Complex deriv{0.0, 0.0};
    for (const ZeroSpec& entry : zeros_) {
        const Complex a = entry.position;
        const Complex den = 1.0 - std::conj(a) * z;
        const Complex factor = (z - a) / den;
        const Complex factor_deriv = (1.0 - std::norm(a)) / (den * den);
        auto [fv, fd] = integer_power_with_derivative(factor, factor_deriv, entry.multiplicity);
        deriv = deriv * fv + value * fd;
        value *= fv;
    }
    if (post_shift_) {
        const Complex c = *post_shift_;
        const Complex den = 1.0 + std::conj(c) * value;
        deriv *= (1.0 - std::norm(c)) / (den * den);
        value = (value + c) / den;
    }
    return {value, deriv};
}

Complex DiskSelfMap::eval(Complex z) const {
    require_finite(z, "evaluation point");
    if (std::abs(z) > 1.0 + kEvalDomainSlack) {
        throw std::domain_error("evaluation point lies outside the closed unit disk");
    }
    Complex value = std::polar(1.0, phase_);
    for (const ZeroSpec& entry : zeros_) {
        const Complex a = entry.position;
        const Complex factor = (z - a) / (1.0 - std::conj(a) * z);
        for (int i = 0; i < entry.multiplicity; ++i) {
            value *= factor;
        }
    }
    if (post_shift_) {
        const Complex c = *post_shift_;
        value = (value + c) / (1.0 + std::conj(c) * value);
    }
    return value;
}

Complex DiskSelfMap::derivative(Complex z) const {
    return eval_with_derivative(z).second;
}

LeadingOrder DiskSelfMap::leading_order() const {
    if (post_shift_ || origin_multiplicity_ == 0) {
        return LeadingOrder{0, eval(Complex{0.0, 0.0})};
    }
    Complex coefficient = std::polar(1.0, phase_);
    for (const ZeroSpec& entry : zeros_) {
        if (entry.position == Complex{0.0, 0.0}) {
            continue;
        }
        for (int i = 0; i < entry.multiplicity; ++i) {
            coefficient *= -entry.position;
        }
    }
    return LeadingOrder{origin_multiplicity_, coefficient};
}

nlohmann::json DiskSelfMap::to_json() const {
    nlohmann::json zeros = nlohmann::json::array();
    for (const ZeroSpec& entry : zeros_) {
        zeros.push_back({{"re", entry.position.real()},
                         {"im", entry.position.imag()},
                         {"mult", entry.multiplicity}});
    }
    nlohmann::json j{{"phase", phase_}, {"zeros", zeros}};
    j["post_shift"] = post_shift_ ? complex_to_json(*post_shift_) : nlohmann::json(nullptr);
    return j;
}

DiskSelfMap DiskSelfMap::from_json(const nlohmann::json& j) {
    std::vector<ZeroSpec> zeros;
    for (const nlohmann::json& entry : j.at("zeros")) {
        zeros.push_back(ZeroSpec{json_to_complex(entry), entry.at("mult").get<int>()});
    }
    std::optional<Complex> post_shift;
    if (j.contains("post_shift") && !j.at("post_shift").is_null()) {
        post_shift = json_to_complex(j.at("post_shift"));
    }
    return DiskSelfMap(j.at("phase").get<double>(), std::move(zeros), post_shift);
}

bool DiskSelfMap::operator==(const DiskSelfMap& other) const {
    if (phase_ != other.phase_ || post_shift_.has_value() != other.post_shift_.has_value() ||
        zeros_.size() != other.zeros_.size()) {
        return false;
    }
    if (post_shift_ && *post_shift_ != *other.post_shift_) {
        return false;
    }
    for (std::size_t i = 0; i < zeros_.size(); ++i) {
        if (zeros_[i].position != other.zeros_[i].position ||
            zeros_[i].multiplicity != other.zeros_[i].multiplicity) {
            return false;
        }
    }
    return true;
}

DiskSelfMap extremal_map(double a) { return extremal_map(1, a); }

DiskSelfMap extremal_map(int k, double a) {
    if (k < 1) {
        throw std::invalid_argument("extremal_map requires k >= 1");
    }
    require_finite(a, "extremal parameter");
    if (a < 0.0 || a >= 1.0) {
        throw std::invalid_argument("extremal_map requires 0 <= a < 1");
    }
    std::vector<ZeroSpec> zeros{ZeroSpec{Complex{0.0, 0.0}, k}};
    if (a != 0.0) {
        zeros.push_back(ZeroSpec{Complex{-a, 0.0}, 1});
    }
    return DiskSelfMap(0.0, std::move(zeros));
}

double additive_boundary_speed(const DiskSelfMap& f, BoundaryPoint b) {
    if (f.post_shift()) {
        throw std::invalid_argument("additive boundary speed is defined for pure Blaschke products");
    }
    const Complex point = b.point();
    double sum = 0.0;
    for (const ZeroSpec& entry : f.zeros()) {
        const double term = (1.0 - std::norm(entry.position)) /
                            std::norm(1.0 - std::conj(entry.position) * point);
        sum += entry.multiplicity * term;
    }
    return sum;
}

}  // namespace schwarzlab

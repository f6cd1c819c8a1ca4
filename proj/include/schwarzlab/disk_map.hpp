#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace schwarzlab {

using Complex = std::complex<double>;

/// Throws std::invalid_argument if either component is NaN or infinite.
void require_finite(Complex value, const char* what);
void require_finite(double value, const char* what);

/// A point strictly inside the unit disk, |value| < 1, checked at construction.
class DiskPoint {
public:
    explicit DiskPoint(Complex value);
    explicit DiskPoint(double re, double im = 0.0) : DiskPoint(Complex{re, im}) {}

    Complex value() const { return value_; }
    double modulus() const { return std::abs(value_); }

private:
    Complex value_;
};

/// A point on the unit circle, stored as an angle normalized to [0, 2*pi).
/// The represented point exp(i*angle) has modulus 1 by construction.
class BoundaryPoint {
public:
    explicit BoundaryPoint(double angle);

    double angle() const { return angle_; }
    Complex point() const { return std::polar(1.0, angle_); }

private:
    double angle_;
};

/// Degree-1 building block (z - a) / (1 - conj(a) z) with zero a inside the disk.
/// Maps the disk to the disk and is unimodular on |z| = 1.
struct BlaschkeFactor {
    DiskPoint zero;

    Complex operator()(Complex z) const;
    /// (1 - |a|^2) / (1 - conj(a) z)^2; pole lies outside the closed disk.
    Complex derivative(Complex z) const;
};

/// One distinct zero of a Blaschke product together with its multiplicity.
struct ZeroSpec {
    Complex position;
    int multiplicity = 1;
};

struct LeadingOrder {
    int order = 0;          // multiplicity of the zero at the origin
    Complex coefficient;    // first nonzero Taylor coefficient at the origin
};

/// A holomorphic self-map of the unit disk:
///
///     f = T_c ( e^{i phase} * prod_j B_{a_j}(z)^{m_j} )
///
/// with B_a the Blaschke factor with zero a and T_c(w) = (w + c)/(1 + conj(c) w)
/// the optional post-composed disk automorphism sending 0 to c ("post shift",
/// realizing f(0) != 0).  Degree >= 1; constant maps are unrepresentable.
///
/// Evaluation always works in factored form; zeros are never expanded into
/// polynomial coefficients, so maps with zeros close to the boundary stay
/// accurate.  Instances are immutable and safe to share across threads.
class DiskSelfMap {
public:
    DiskSelfMap(double phase, std::vector<ZeroSpec> zeros,
                std::optional<Complex> post_shift = std::nullopt);

    static DiskSelfMap identity() { return power(1, 0.0); }
    static DiskSelfMap rotation(double alpha) { return power(1, alpha); }
    /// e^{i alpha} z^k
    static DiskSelfMap power(int k, double alpha = 0.0);

    double phase() const { return phase_; }
    const std::vector<ZeroSpec>& zeros() const { return zeros_; }
    const std::optional<Complex>& post_shift() const { return post_shift_; }

    /// Total multiplicity of the zero list.
    int degree() const { return degree_; }
    /// Multiplicity of the zero at the origin (exact position 0).
    int origin_multiplicity() const { return origin_multiplicity_; }
    /// True iff post_shift is absent and the origin is among the zeros,
    /// which is exactly the condition f(0) = 0 for this representation.
    bool fixes_origin() const { return !post_shift_ && origin_multiplicity_ > 0; }
    /// True iff f is e^{i alpha} z.
    bool is_rotation() const;
    /// True iff f has degree 1 (a disk automorphism, possibly shifted).
    bool is_automorphism() const { return degree_ == 1; }

    /// f(z).  Accepts |z| <= 1 + 1e-12, rejects anything farther outside.
    Complex eval(Complex z) const;
    /// f'(z) by the factored closed form (product rule over factors, chain
    /// rule through the post shift).  Same domain as eval.
    Complex derivative(Complex z) const;
    /// Both at once; cheaper than two separate calls.
    std::pair<Complex, Complex> eval_with_derivative(Complex z) const;

    Complex derivative_at_origin() const { return derivative(Complex{0.0, 0.0}); }
    Complex boundary_derivative(BoundaryPoint b) const { return derivative(b.point()); }

    /// Order of vanishing at the origin and the first nonzero Taylor
    /// coefficient, computed analytically: a_k = e^{i phase} * prod(-a_j)^{m_j}
    /// over the off-origin zeros.  For maps with f(0) != 0 returns {0, f(0)}.
    LeadingOrder leading_order() const;

    nlohmann::json to_json() const;
    static DiskSelfMap from_json(const nlohmann::json& j);

    bool operator==(const DiskSelfMap& other) const;

private:
    double phase_;
    std::vector<ZeroSpec> zeros_;
    std::optional<Complex> post_shift_;
    int degree_;
    int origin_multiplicity_;
};

/// z (z + a) / (1 + a z): zeros {0, -a}, phase 0.  Attains equality in the
/// sharp boundary bound at b = 1 and in the interior bound on the positive
/// real axis; derivative_at_origin() == a.  Requires 0 <= a < 1.
DiskSelfMap extremal_map(double a);

/// z^k (z + a) / (1 + a z): the order-k analogue.  leading_order() is (k, a).
/// Requires k >= 1, 0 <= a < 1.
DiskSelfMap extremal_map(int k, double a);

/// Independent additive route to |f'(b)| for maps without post shift:
///
///     sum_j m_j (1 - |a_j|^2) / |1 - conj(a_j) b|^2
///
/// (each term is a Poisson kernel, so the sum is positive).  Throws if the
/// map carries a post shift.
double additive_boundary_speed(const DiskSelfMap& f, BoundaryPoint b);

}  // namespace schwarzlab

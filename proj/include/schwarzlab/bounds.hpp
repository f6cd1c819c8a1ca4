#pragma once

#include <utility>
#include <vector>

#include "schwarzlab/disk_map.hpp"
#include "schwarzlab/slack.hpp"

namespace schwarzlab::bounds {

/// Sharp boundary bound (eq1): |f'(b)| >= 2/(1+|f'(0)|) for maps with
/// f(0) = 0.  As internal soundness checks the report also verifies the
/// magnification consequence |f'(b)| >= 1 (throwing on violation, since a
/// genuine counterexample would falsify the underlying theorem rather than
/// indicate bad input).  Rejects maps with f(0) != 0; use
/// general_boundary_bound for those.
SlackReport boundary_bound(const DiskSelfMap& f, BoundaryPoint b, Tolerances tol = {});

/// Magnification floor (eq2): |f'(b)| >= 1, same preconditions as eq1.
SlackReport magnification_bound(const DiskSelfMap& f, BoundaryPoint b, Tolerances tol = {});

/// Interior bound (eq6): |f(z)| <= |z| (|z|+a)/(1+a|z|) with a = |f'(0)|.
SlackReport interior_bound(const DiskSelfMap& f, DiskPoint z, Tolerances tol = {});

/// Quotient-map bound (eq7): |f(z)/z| <= (|z|+a)/(1+a|z|), z != 0.  An
/// algebraic rearrangement of eq6: slack(eq6) = |z| * slack(eq7).
SlackReport quotient_bound(const DiskSelfMap& f, DiskPoint z, Tolerances tol = {});

/// Diameter endpoints of the image of |z| < r under G(z) = (z+a)/(1+az):
/// ((a-r)/(1-ar), (a+r)/(1+ar)).  Requires 0 <= a < 1, 0 < r < 1.
std::pair<double, double> schwarz_pick_interval(double a, double r);

/// Pointwise radial growth inequality (chain):
/// (1-|f(z)|)/(1-|z|) >= (1+|z|)/(1+a|z|).  The bound side tends to
/// 2/(1+a) as |z| -> 1.
SlackReport radial_chain(const DiskSelfMap& f, DiskPoint z, Tolerances tol = {});

/// Radial probe along b: radii t_j = 1 - 2^-j and growth quotients
/// (1 - |f(t_j b)|)/(1 - t_j), j = 1..depth.
struct SequenceProbe {
    BoundaryPoint b;
    std::vector<double> radii;
    std::vector<double> quotients;
};

SequenceProbe sequence_probe(const DiskSelfMap& f, BoundaryPoint b, int depth);

/// The sound per-rung floor for the probe: the chain bound (1+t)/(1+a t)
/// at radius t, with a = |f'(0)|.  Each quotient is >= this floor and the
/// floor increases to 2/(1+a) as t -> 1.
double probe_chain_floor(const DiskSelfMap& f, double radius);

/// Tolerance for comparing a probe quotient at rung j against its floor.
/// The quotient divides 1-|f| by 2^-j, so cancellation noise grows like
/// 2^j * eps; the returned value is max(1e-9, 2^j * 8e-15).
double probe_rung_tolerance(int rung);

/// Moebius recentering F = (f - f(0)) / (1 - conj(f(0)) f): composes the
/// automorphism sending f(0) to 0 onto f, keeping the zero list intact.
/// F(0) = 0 (exactly when f already fixes the origin, else to ~1e-14) and
/// |F'(0)| <= 1.  When f(0) = 0 the input is returned unchanged.
DiskSelfMap recenter(const DiskSelfMap& f);

/// Residual of the exact identity
/// |F'(b)| = |f'(b)| (1-|f(0)|^2) / |1 - conj(f(0)) f(b)|^2.
double recenter_identity_residual(const DiskSelfMap& f, BoundaryPoint b);

/// Recentered-derivative bound (eq11): |F'(b)| <= |f'(b)| (1+|f(0)|)/(1-|f(0)|).
/// Also verifies the exact identity above to 1e-10 and throws on failure.
SlackReport recenter_derivative_bound(const DiskSelfMap& f, BoundaryPoint b,
                                      Tolerances tol = {});

/// General boundary bound (eq8), no origin-fixing hypothesis:
/// |f'(b)| >= [2/(1+|F'(0)|)] * [(1-|f(0)|)/(1+|f(0)|)].  For maps with
/// f(0) = 0 this reproduces boundary_bound bit for bit.
SlackReport general_boundary_bound(const DiskSelfMap& f, BoundaryPoint b,
                                   Tolerances tol = {});

/// Automorphism floor (eq17): |f'(b)| >= (1-|f(0)|)/(1+|f(0)|).  The bound
/// never exceeds the eq8 bound (checked internally).
SlackReport julia_bound(const DiskSelfMap& f, BoundaryPoint b, Tolerances tol = {});

/// Order-k interior bound (eq15): |f(z)| <= |z|^k (|z|+|a_k|)/(1+|a_k||z|)
/// with (k, a_k) from leading_order().  Rejects maps with a post shift.
SlackReport order_interior_bound(const DiskSelfMap& f, DiskPoint z, Tolerances tol = {});

/// Order-k boundary bound (eq16): |f'(b)| >= k + (1-|a_k|)/(1+|a_k|).
/// For k = 1 the bound is computed as 2/(1+|a_1|), which is the same number
/// algebraically and keeps it bitwise identical to boundary_bound's.
SlackReport order_boundary_bound(const DiskSelfMap& f, BoundaryPoint b,
                                 Tolerances tol = {});

}  // namespace schwarzlab::bounds

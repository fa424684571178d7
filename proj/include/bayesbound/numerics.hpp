#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bayesbound/prob.hpp"

namespace bayesbound {

using RealFn = std::function<double(double)>;

struct QuadratureSpec {
    double abs_tol = 1e-10;
    /// Truncation half-width for real-line integrals.
    double tail_halfwidth = 60.0;
    int max_depth = 48;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod (G7, K15) quadrature on [a, b]. Subdivides until
/// the embedded error estimate meets the tolerance or max_depth is reached;
/// the result carries the achieved estimate either way.
QuadratureResult integrate_adaptive(const RealFn& f, double a, double b,
                                    const QuadratureSpec& spec = {});

/// As integrate_adaptive, but throws MaxDepthExceeded (carrying the best
/// estimate and its error bound) when the tolerance cannot be certified.
double integrate(const RealFn& f, double a, double b, const QuadratureSpec& spec = {});

/// Adaptive quadrature over [points.front(), points.back()], run separately
/// on each consecutive segment. Seeding segment edges at known structure
/// (peaks, kinks) keeps narrow features from being stepped over.
QuadratureResult integrate_segments_adaptive(const RealFn& f, std::span<const double> points,
                                             const QuadratureSpec& spec = {});
double integrate_segments(const RealFn& f, std::span<const double> points,
                          const QuadratureSpec& spec = {});

/// Integral over the real line, truncated to [-T, T] (T = spec.tail_halfwidth)
/// and pre-split into unit-width panels. The caller is responsible for the
/// tails beyond +-T contributing less than the tolerance.
QuadratureResult integrate_real_line_adaptive(const RealFn& f, const QuadratureSpec& spec = {});
double integrate_real_line(const RealFn& f, const QuadratureSpec& spec = {});

/// Brackets sign changes of f on a uniform scan of [a, b] and refines each
/// bracket by bisection to 1e-10. Returns sorted roots; roots closer than
/// scan_step may merge.
std::vector<double> find_roots(const RealFn& f, double a, double b, double scan_step);

struct ScalarExtremum {
    double arg = 0.0;
    double value = 0.0;
};

/// Golden-section minimum of f on [a, b]; exact for unimodal f, otherwise a
/// local minimum. |arg error| <= tol.
ScalarExtremum minimize_scalar(const RealFn& f, double a, double b, double tol);

struct SimplexMaximum {
    Pmf argmax;
    double value;
};

/// Heuristic maximum of f over the probability simplex of the given
/// dimension. dim == 2 reduces to a golden-section line search; dims 3..6 use
/// iterated grid refinement (step 0.05, four x5 refinements around the
/// incumbent). The result is the best point found, not a certified optimum.
SimplexMaximum maximize_over_simplex(const std::function<double(const Pmf&)>& f, int dim,
                                     double tol);

}  // namespace bayesbound

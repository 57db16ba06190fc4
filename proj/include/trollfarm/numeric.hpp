#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace trollfarm {

// Error taxonomy shared by all modules. Domain/singularity errors mean the
// caller passed an argument outside an operation's mathematical domain;
// convergence/bracket/numerical errors mean an iterative scheme could not
// reach its target.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct SingularityError : DomainError {
    using DomainError::DomainError;
};
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BracketError : ConvergenceError {
    using ConvergenceError::ConvergenceError;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Standard distributions
// ---------------------------------------------------------------------------

double normal_pdf(double z, double mean = 0.0, double sd = 1.0);
double normal_cdf(double z, double mean = 0.0, double sd = 1.0);
// Inverse standard-normal cdf, accurate to ~1e-15 (rational approximation
// polished with Newton steps). Returns -inf/+inf at p = 0/1.
double normal_quantile(double p, double mean = 0.0, double sd = 1.0);

double logistic_pdf(double x, double location, double scale);
double logistic_cdf(double x, double location, double scale);
double logistic_quantile(double p, double location, double scale);

// ---------------------------------------------------------------------------
// Adaptive quadrature
// ---------------------------------------------------------------------------

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;  // conservative estimate (sum of |K15 - G7| per segment)
};

// Adaptive Gauss-Kronrod (G7/K15) to an absolute tolerance. Endpoints are
// never evaluated (all Kronrod nodes are interior), so integrands with
// removable endpoint forms are fine. Infinite endpoints are mapped to a
// finite interval by a rational substitution. Throws NumericalError with the
// achieved tolerance if max_segments subdivisions cannot reach abs_tol.
IntegralResult integrate(const std::function<double(double)>& f, double lo,
                         double hi, double abs_tol = 1e-9,
                         int max_segments = 4000);

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

// Expands [lo, hi] geometrically around its midpoint until f(lo) and f(hi)
// straddle `target`, assuming f monotone. Throws BracketError after
// max_doublings expansions.
std::pair<double, double> bracket_monotone(
    const std::function<double(double)>& f, double target, double lo,
    double hi, int max_doublings = 200);

// Bisection for monotone f (either direction) on a bracketing interval.
// Stops when |f(mid) - target| <= value_tol or after max_steps halvings;
// never throws once bracketed (after ~60 steps the interval is at machine
// resolution and the midpoint is returned as the root).
double bisect_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi, double value_tol = 1e-10,
                       int max_steps = 200);

}  // namespace trollfarm

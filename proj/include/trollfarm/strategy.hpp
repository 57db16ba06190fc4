#pragma once

#include <functional>

#include "trollfarm/signal_model.hpp"

namespace trollfarm {

// The sender's choice object for one voter type: interception mass plus the
// message distribution. Immutable after construction.
struct TrollStrategy {
    double type_x = 0.5;
    double alpha = 0.0;                       // mass of trolls targeting the type
    std::function<double(double)> density;    // message density, zero off support
    std::function<double(double)> cdf;        // closed form from kappa differences
    double support_lo = 0.0;                  // -inf allowed
    double support_hi = 0.0;                  // +inf allowed
    // Received signals at or above this value make the voter vote for the
    // government. -inf when every signal does.
    double acceptance_threshold = 0.0;

    // Degenerate "no trolls" strategy (alpha = 0, empty support). Used for
    // types outside (0, 1), whose votes are fixed, and as a baseline.
    static TrollStrategy none(double x);
};

// kappa_x(s) = (x F0(s) - (1 - x) F1(s)) / (1 - 2x). Runs from 0 at -inf to
// -1 at +inf; its value at the cutoff pins the optimal troll mass.
double kappa(const SignalModel& model, double x, double s);

// d/ds of kappa: (x f0(s) - (1 - x) f1(s)) / (1 - 2x). Vanishes exactly at
// the cutoff and is positive on the side of the cutoff the trolls target.
double kappa_prime(const SignalModel& model, double x, double s);

// Optimal interception mass for a type-x voter. Continuous on each side of
// 1/2 with both one-sided limits equal to 1; x = 1/2 itself returns that
// limit value.
double optimal_mass(const SignalModel& model, double x);

// The unique optimal strategy: for x <= 1/2 trolls flood all signals below
// the cutoff, for x > 1/2 they reinforce all signals above it, in both cases
// pinning the posterior to exactly x on the support.
TrollStrategy optimal_strategy(const SignalModel& model, double x);

// Posterior on state 1 when messages are the (1 - alpha) informative /
// alpha troll mixture.
double posterior_with_trolls(const SignalModel& model,
                             const TrollStrategy& strategy, double s);

// Lower support endpoint of the reach-capped strategy for x <= 1/2: the
// unique root of kappa_x(s*) - kappa_x(s_hat) = cap / (1 - cap), found by
// bisection on the increasing branch of kappa.
double s_hat(const SignalModel& model, double x, double cap);

// Reach-capped optimum. A slack cap reproduces optimal_strategy. A binding
// cap shrinks the flooded interval to [s_hat, cutoff] for x <= 1/2; for
// x > 1/2 it keeps the support and reuses the unconstrained density shape
// kappa' / (-1 - kappa(cutoff)), which is feasible for every cap below the
// optimal mass and leaves the posterior at or above x on the support.
TrollStrategy constrained_strategy(const SignalModel& model, double x,
                                   double cap);

// Generalisation used for non-Bayesian perception: the same construction
// with the acceptance boundary at `threshold` instead of the Bayesian
// cutoff. optimal_strategy(model, x) == optimal_strategy_at(model, x,
// cutoff(model, x)).
double optimal_mass_at(const SignalModel& model, double x, double threshold);
TrollStrategy optimal_strategy_at(const SignalModel& model, double x,
                                  double threshold);

}  // namespace trollfarm

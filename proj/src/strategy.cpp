#include "trollfarm/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trollfarm/numeric.hpp"

namespace trollfarm {

namespace {

constexpr double kHalfGuard = 1e-9;  // kappa denominator vanishes at x = 1/2

void require_interior_type(double x, const char* who) {
    if (!(x > 0.0 && x < 1.0))
        throw DomainError(std::string(who) + ": type x = " + std::to_string(x) +
                          " outside (0, 1)");
}

void require_off_half(double x, const char* who) {
    if (std::abs(x - 0.5) < kHalfGuard)
        throw SingularityError(std::string(who) +
                               ": x = 1/2 is a removable singularity; use "
                               "one-sided limits");
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

TrollStrategy TrollStrategy::none(double x) {
    TrollStrategy s;
    s.type_x = x;
    s.alpha = 0.0;
    s.density = [](double) { return 0.0; };
    s.cdf = [](double) { return 1.0; };
    // empty support
    s.support_lo = std::numeric_limits<double>::infinity();
    s.support_hi = -std::numeric_limits<double>::infinity();
    s.acceptance_threshold =
        x <= 0.0 ? -std::numeric_limits<double>::infinity()
                 : std::numeric_limits<double>::infinity();
    return s;
}

double kappa(const SignalModel& model, double x, double s) {
    require_interior_type(x, "kappa");
    require_off_half(x, "kappa");
    return (x * model.cdf_0(s) - (1.0 - x) * model.cdf_1(s)) / (1.0 - 2.0 * x);
}

double kappa_prime(const SignalModel& model, double x, double s) {
    require_interior_type(x, "kappa_prime");
    require_off_half(x, "kappa_prime");
    return (x * model.density_0(s) - (1.0 - x) * model.density_1(s)) /
           (1.0 - 2.0 * x);
}

double optimal_mass_at(const SignalModel& model, double x, double threshold) {
    require_interior_type(x, "optimal_mass_at");
    if (std::abs(x - 0.5) < kHalfGuard) return 1.0;  // one-sided limit value
    const double k = kappa(model, x, threshold);
    double alpha;
    if (x < 0.5) {
        alpha = k / (k + 1.0);
    } else {
        alpha = (k + 1.0) / k;
    }
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("optimal_mass_at: threshold " +
                          std::to_string(threshold) +
                          " incompatible with type " + std::to_string(x) +
                          " (implied mass " + std::to_string(alpha) + ")");
    return alpha;
}

double optimal_mass(const SignalModel& model, double x) {
    require_interior_type(x, "optimal_mass");
    if (std::abs(x - 0.5) < kHalfGuard) return 1.0;
    return optimal_mass_at(model, x, cutoff(model, x));
}

TrollStrategy optimal_strategy_at(const SignalModel& model, double x,
                                  double threshold) {
    require_interior_type(x, "optimal_strategy_at");
    require_off_half(x, "optimal_strategy_at");
    const double s_star = cutoff(model, x);
    if (x < 0.5 && threshold > s_star + 1e-12)
        throw DomainError(
            "optimal_strategy_at: threshold above the cutoff for x < 1/2");
    if (x > 0.5 && threshold < s_star - 1e-12)
        throw DomainError(
            "optimal_strategy_at: threshold below the cutoff for x > 1/2");

    const double alpha = optimal_mass_at(model, x, threshold);
    const double ratio = (1.0 - alpha) / alpha;

    TrollStrategy strat;
    strat.type_x = x;
    strat.alpha = alpha;
    if (x < 0.5) {
        strat.support_lo = -std::numeric_limits<double>::infinity();
        strat.support_hi = threshold;
        strat.acceptance_threshold = -std::numeric_limits<double>::infinity();
        strat.density = [model, x, ratio, threshold](double s) {
            if (s >= threshold) return 0.0;
            return ratio * kappa_prime(model, x, s);
        };
        // kappa(-inf) = 0, so the cdf is a plain kappa rescaling
        strat.cdf = [model, x, ratio, threshold](double s) {
            return clamp01(ratio * kappa(model, x, std::min(s, threshold)));
        };
    } else {
        strat.support_lo = threshold;
        strat.support_hi = std::numeric_limits<double>::infinity();
        strat.acceptance_threshold = threshold;
        strat.density = [model, x, ratio, threshold](double s) {
            if (s < threshold) return 0.0;
            return ratio * kappa_prime(model, x, s);
        };
        const double k_at = kappa(model, x, threshold);
        strat.cdf = [model, x, ratio, threshold, k_at](double s) {
            if (s < threshold) return 0.0;
            return clamp01(ratio * (kappa(model, x, s) - k_at));
        };
    }
    return strat;
}

TrollStrategy optimal_strategy(const SignalModel& model, double x) {
    require_interior_type(x, "optimal_strategy");
    require_off_half(x, "optimal_strategy");
    return optimal_strategy_at(model, x, cutoff(model, x));
}

double posterior_with_trolls(const SignalModel& model,
                             const TrollStrategy& strategy, double s) {
    const double alpha = strategy.alpha;
    const double f0 = model.density_0(s);
    const double f1 = model.density_1(s);
    const double troll = alpha > 0.0 ? alpha * strategy.density(s) : 0.0;
    const double num = (1.0 - alpha) * f1 + troll;
    const double den = (1.0 - alpha) * (f0 + f1) + 2.0 * troll;
    if (den < std::numeric_limits<double>::min())
        throw DomainError("posterior_with_trolls: mixture density vanishes at "
                          "s = " + std::to_string(s));
    return num / den;
}

double s_hat(const SignalModel& model, double x, double cap) {
    require_interior_type(x, "s_hat");
    require_off_half(x, "s_hat");
    if (x > 0.5)
        throw DomainError(
            "s_hat: defined for x < 1/2 only (capped strategies for x > 1/2 "
            "keep the cutoff as support endpoint)");
    if (!(cap > 0.0))
        throw DomainError("s_hat: cap must be positive, got " +
                          std::to_string(cap));
    const double alpha_star = optimal_mass(model, x);
    if (cap >= alpha_star)
        throw PreconditionError(
            "s_hat: cap " + std::to_string(cap) + " is not binding (optimal "
            "mass " + std::to_string(alpha_star) +
            "); use optimal_strategy");

    const double s_star = cutoff(model, x);
    const double k_star = kappa(model, x, s_star);
    const double target = k_star - cap / (1.0 - cap);  // in (0, k_star)

    // kappa is strictly increasing below the cutoff, from 0 at -inf
    auto k = [&model, x](double s) { return kappa(model, x, s); };
    double width = std::max(1.0, 0.1 * (model.support_probe.second -
                                        model.support_probe.first));
    double lo = s_star - width;
    int doublings = 0;
    while (k(lo) > target) {
        if (doublings++ >= 200)
            throw BracketError("s_hat: could not bracket below the cutoff");
        width *= 2.0;
        lo = s_star - width;
    }
    return bisect_monotone(k, target, lo, s_star, 1e-12, 200);
}

TrollStrategy constrained_strategy(const SignalModel& model, double x,
                                   double cap) {
    require_interior_type(x, "constrained_strategy");
    require_off_half(x, "constrained_strategy");
    if (!(cap > 0.0 && cap <= 1.0))
        throw DomainError("constrained_strategy: cap = " + std::to_string(cap) +
                          " outside (0, 1]");
    const double alpha_star = optimal_mass(model, x);
    if (cap >= alpha_star) return optimal_strategy(model, x);

    const double s_star = cutoff(model, x);
    TrollStrategy strat;
    strat.type_x = x;
    strat.alpha = cap;
    if (x < 0.5) {
        const double lo = s_hat(model, x, cap);
        const double ratio = (1.0 - cap) / cap;
        const double k_lo = kappa(model, x, lo);
        strat.support_lo = lo;
        strat.support_hi = s_star;
        strat.acceptance_threshold = lo;
        strat.density = [model, x, ratio, lo, s_star](double s) {
            if (s < lo || s > s_star) return 0.0;
            return ratio * kappa_prime(model, x, s);
        };
        strat.cdf = [model, x, ratio, lo, s_star, k_lo](double s) {
            if (s < lo) return 0.0;
            return clamp01(ratio *
                           (kappa(model, x, std::min(s, s_star)) - k_lo));
        };
    } else {
        // Unconstrained density shape renormalised by Z = -1 - kappa(s*);
        // feasible whenever cap <= optimal mass, and the posterior stays at
        // or above x on [s*, inf).
        const double k_star = kappa(model, x, s_star);
        const double z = -1.0 - k_star;
        strat.support_lo = s_star;
        strat.support_hi = std::numeric_limits<double>::infinity();
        strat.acceptance_threshold = s_star;
        strat.density = [model, x, z, s_star](double s) {
            if (s < s_star) return 0.0;
            return kappa_prime(model, x, s) / z;
        };
        strat.cdf = [model, x, z, s_star, k_star](double s) {
            if (s < s_star) return 0.0;
            return clamp01((kappa(model, x, s) - k_star) / z);
        };
    }
    return strat;
}

}  // namespace trollfarm

#include "trollfarm/signal_model.hpp"

#include <cmath>
#include <limits>

#include "trollfarm/numeric.hpp"

namespace trollfarm {

SignalModel gaussian_signal_model(double mu, double sigma) {
    if (!(mu > 0.0))
        throw DomainError("gaussian_signal_model: mu must be positive, got " +
                          std::to_string(mu));
    if (!(sigma > 0.0))
        throw DomainError(
            "gaussian_signal_model: sigma must be positive, got " +
            std::to_string(sigma));
    SignalModel model;
    model.density_0 = [mu, sigma](double s) { return normal_pdf(s, -mu, sigma); };
    model.density_1 = [mu, sigma](double s) { return normal_pdf(s, mu, sigma); };
    model.cdf_0 = [mu, sigma](double s) { return normal_cdf(s, -mu, sigma); };
    model.cdf_1 = [mu, sigma](double s) { return normal_cdf(s, mu, sigma); };
    // invert exp(2 mu s / sigma^2) = x / (1 - x)
    model.cutoff_closed_form = [mu, sigma](double x) {
        return sigma * sigma / (2.0 * mu) * (std::log(x) - std::log1p(-x));
    };
    model.support_probe = {-(mu + 6.0 * sigma), mu + 6.0 * sigma};
    return model;
}

double likelihood_ratio(const SignalModel& model, double s) {
    const double f0 = model.density_0(s);
    if (f0 < std::numeric_limits<double>::min())
        throw DomainError("likelihood_ratio: f0 underflows at s = " +
                          std::to_string(s));
    return model.density_1(s) / f0;
}

double posterior_no_trolls(const SignalModel& model, double s) {
    const double f0 = model.density_0(s);
    const double f1 = model.density_1(s);
    const double denom = f0 + f1;
    if (denom < std::numeric_limits<double>::min())
        throw DomainError("posterior_no_trolls: both densities vanish at s = " +
                          std::to_string(s));
    return f1 / denom;
}

double cutoff(const SignalModel& model, double x) {
    if (!(x > 0.0 && x < 1.0))
        throw DomainError("cutoff: type x = " + std::to_string(x) +
                          " outside (0, 1)");
    if (model.cutoff_closed_form) return (*model.cutoff_closed_form)(x);

    const double target = x / (1.0 - x);
    auto ratio = [&model](double s) { return likelihood_ratio(model, s); };
    auto [lo, hi] = bracket_monotone(ratio, target, model.support_probe.first,
                                     model.support_probe.second);
    return bisect_monotone(ratio, target, lo, hi, 1e-10, 200);
}

OrderCheck is_more_informative(const SignalModel& candidate,
                               const SignalModel& baseline,
                               std::span<const double> type_grid) {
    if (type_grid.empty())
        throw PreconditionError("is_more_informative: empty type grid");
    constexpr double tol = 1e-9;
    OrderCheck check;
    for (double x : type_grid) {
        if (!(x > 0.0 && x < 1.0))
            throw PreconditionError(
                "is_more_informative: grid type " + std::to_string(x) +
                " outside (0, 1)");
        const double s_cand = cutoff(candidate, x);
        const double s_base = cutoff(baseline, x);
        const bool ok0 = candidate.cdf_0(s_cand) >= baseline.cdf_0(s_base) - tol;
        const bool ok1 = candidate.cdf_1(s_cand) <= baseline.cdf_1(s_base) + tol;
        if (!(ok0 && ok1)) {
            check.holds = false;
            check.violations.push_back(x);
        }
    }
    return check;
}

AuditReport audit_signal_model(const SignalModel& model, int grid_points) {
    AuditReport report;
    auto fail = [&report](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    const double f0_at_0 = model.density_0(0.0);
    const double f1_at_0 = model.density_1(0.0);
    if (std::abs(f0_at_0 - f1_at_0) >
        1e-9 * std::max({1.0, f0_at_0, f1_at_0}))
        fail("densities differ at s = 0");

    const auto [lo, hi] = model.support_probe;
    const double step = (hi - lo) / (grid_points - 1);
    double prev_ratio = -std::numeric_limits<double>::infinity();
    const double diff_h = 1e-5 * std::max(1.0, hi - lo);
    for (int i = 0; i < grid_points; ++i) {
        const double s = lo + i * step;
        const double f0 = model.density_0(s);
        const double f1 = model.density_1(s);
        const double F0 = model.cdf_0(s);
        const double F1 = model.cdf_1(s);
        if (f0 < 0.0 || f1 < 0.0) {
            fail("negative density at s = " + std::to_string(s));
            break;
        }
        if (F0 < F1 - 1e-12) {
            fail("F0 < F1 at s = " + std::to_string(s));
            break;
        }
        if (f0 >= std::numeric_limits<double>::min()) {
            const double ratio = f1 / f0;
            if (ratio <= prev_ratio) {
                fail("likelihood ratio not strictly increasing at s = " +
                     std::to_string(s));
                break;
            }
            prev_ratio = ratio;
        }
        // cdf consistent with density: central difference within 1e-6
        const double d0 =
            (model.cdf_0(s + diff_h) - model.cdf_0(s - diff_h)) / (2.0 * diff_h);
        const double d1 =
            (model.cdf_1(s + diff_h) - model.cdf_1(s - diff_h)) / (2.0 * diff_h);
        if (std::abs(d0 - f0) > 1e-6 || std::abs(d1 - f1) > 1e-6) {
            fail("cdf/density mismatch at s = " + std::to_string(s));
            break;
        }
    }
    return report;
}

}  // namespace trollfarm

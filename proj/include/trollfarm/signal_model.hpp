#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trollfarm {

// An information structure: state-conditional signal densities and cdfs with
// full support on the real line. Constructors are free to supply arbitrary
// function pairs; consistency is audited separately, not enforced here.
struct SignalModel {
    std::function<double(double)> density_0;  // f0
    std::function<double(double)> density_1;  // f1
    std::function<double(double)> cdf_0;      // F0
    std::function<double(double)> cdf_1;      // F1
    // Analytic decision cutoff s(x) when the family admits one; the engine
    // falls back to monotone bisection otherwise.
    std::optional<std::function<double(double)>> cutoff_closed_form;
    // Finite bracket that seeds root searches; expanded geometrically when a
    // root lies outside.
    std::pair<double, double> support_probe{-1.0, 1.0};
};

// Gaussian location family: state-theta signals are N((2*theta - 1) * mu,
// sigma^2), so the likelihood ratio is exp(2 * mu * s / sigma^2).
SignalModel gaussian_signal_model(double mu, double sigma);

// f1(s) / f0(s). Throws DomainError when f0(s) underflows below the smallest
// normalised double.
double likelihood_ratio(const SignalModel& model, double s);

// Posterior on state 1 from the prior 1/2: m(s) / (m(s) + 1), evaluated as
// f1 / (f0 + f1) to stay stable when one density is tiny.
double posterior_no_trolls(const SignalModel& model, double s);

// The signal making a type-x voter indifferent: the root of
// m(s) = x / (1 - x). Uses the closed form when present, otherwise bisection
// seeded from support_probe.
double cutoff(const SignalModel& model, double x);

struct OrderCheck {
    bool holds = true;
    std::vector<double> violations;  // grid points where an inequality fails
};

// Informativeness partial order: candidate is more informative than baseline
// iff at every grid type x, F0-at-cutoff is weakly higher and F1-at-cutoff
// weakly lower for the candidate. Verified numerically; never inferred from
// parameter order (the Gaussian family is not globally ordered at small mu).
OrderCheck is_more_informative(const SignalModel& candidate,
                               const SignalModel& baseline,
                               std::span<const double> type_grid);

struct AuditReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Probe-grid audit of the structural assumptions: equal densities at 0,
// strictly increasing likelihood ratio, F0 >= F1, and cdf/density
// consistency under central differences (tolerance 1e-6).
AuditReport audit_signal_model(const SignalModel& model,
                               int grid_points = 1000);

}  // namespace trollfarm

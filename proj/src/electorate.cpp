#include "trollfarm/electorate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "trollfarm/numeric.hpp"

namespace trollfarm {

Electorate normal_electorate(double mean, double sd) {
    if (!(sd > 0.0))
        throw DomainError("normal_electorate: sd must be positive, got " +
                          std::to_string(sd));
    Electorate e;
    e.cdf = [mean, sd](double x) { return normal_cdf(x, mean, sd); };
    e.pdf = [mean, sd](double x) { return normal_pdf(x, mean, sd); };
    e.quantile = [mean, sd](double p) { return normal_quantile(p, mean, sd); };
    return e;
}

Electorate logistic_electorate(double location, double scale) {
    if (!(scale > 0.0))
        throw DomainError("logistic_electorate: scale must be positive, got " +
                          std::to_string(scale));
    Electorate e;
    e.cdf = [location, scale](double x) {
        return logistic_cdf(x, location, scale);
    };
    e.pdf = [location, scale](double x) {
        return logistic_pdf(x, location, scale);
    };
    e.quantile = [location, scale](double p) {
        return logistic_quantile(p, location, scale);
    };
    return e;
}

Electorate polarize(const Electorate& base, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw DomainError("polarize: r = " + std::to_string(r) +
                          " outside [0, 1)");
    const double scale = 1.0 - r;
    const double shift = 0.5 * r;
    Electorate e;
    e.cdf = [base, scale, shift](double x) {
        return base.cdf(scale * x + shift);
    };
    e.pdf = [base, scale, shift](double x) {
        return scale * base.pdf(scale * x + shift);
    };
    e.quantile = [base, scale, shift](double p) {
        return (base.quantile(p) - shift) / scale;
    };
    return e;
}

OrderCheck admits_greater_polarization(const Electorate& candidate,
                                       const Electorate& base,
                                       std::span<const double> grid) {
    if (grid.empty())
        throw PreconditionError("admits_greater_polarization: empty grid");
    constexpr double tol = 1e-9;
    OrderCheck check;
    for (double x : grid) {
        const double hc = candidate.cdf(x);
        const double hb = base.cdf(x);
        bool ok = true;
        if (x <= 0.5 && hc < hb - tol) ok = false;
        if (x >= 0.5 && hc > hb + tol) ok = false;
        if (!ok) {
            check.holds = false;
            check.violations.push_back(x);
        }
    }
    return check;
}

DistortionFn identity_distortion() {
    DistortionFn d;
    d.forward = [](double s) { return s; };
    d.inverse = [](double s) { return s; };
    return d;
}

DistortionFn power_distortion(double exponent) {
    if (!(exponent > 0.0))
        throw DomainError("power_distortion: exponent must be positive, got " +
                          std::to_string(exponent));
    DistortionFn d;
    d.forward = [exponent](double s) {
        return std::copysign(std::pow(std::abs(s), exponent), s);
    };
    d.inverse = [exponent](double s) {
        return std::copysign(std::pow(std::abs(s), 1.0 / exponent), s);
    };
    return d;
}

DistortionFn scale_distortion(const DistortionFn& base, double r) {
    if (!(r > 0.0))
        throw DomainError("scale_distortion: r must be positive, got " +
                          std::to_string(r));
    DistortionFn d;
    d.forward = [base, r](double s) { return base.forward(s) / r; };
    d.inverse = [base, r](double s) { return base.inverse(r * s); };
    return d;
}

bool is_more_conservative(const DistortionFn& candidate,
                          const DistortionFn& base,
                          std::span<const double> grid) {
    bool has_neg = false, has_pos = false;
    for (double s : grid) {
        if (s < 0.0) has_neg = true;
        if (s > 0.0) has_pos = true;
        if (s == 0.0)
            throw PreconditionError("is_more_conservative: grid contains 0");
    }
    if (!has_neg || !has_pos)
        throw PreconditionError(
            "is_more_conservative: grid needs points on both sides of 0");
    constexpr double margin = 1e-12;  // strict order: equality must fail
    for (double s : grid) {
        const double c = candidate.forward(s);
        const double b = base.forward(s);
        if (s < 0.0 && !(c > b + margin)) return false;
        if (s > 0.0 && !(c < b - margin)) return false;
    }
    return true;
}

AuditReport audit_electorate(const Electorate& e, double probe_lo,
                             double probe_hi, int grid_points) {
    AuditReport report;
    auto fail = [&report](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };
    const double step = (probe_hi - probe_lo) / (grid_points - 1);
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i) {
        const double x = probe_lo + i * step;
        const double H = e.cdf(x);
        if (H < prev - 1e-12) {
            fail("cdf decreasing at x = " + std::to_string(x));
            break;
        }
        prev = H;
        if (!(e.pdf(x) > 0.0)) {
            fail("pdf not positive at x = " + std::to_string(x));
            break;
        }
        if (H > 1e-12 && H < 1.0 - 1e-12 &&
            std::abs(e.quantile(H) - x) > 1e-6) {
            fail("quantile(cdf(x)) != x at x = " + std::to_string(x));
            break;
        }
    }
    return report;
}

AuditReport audit_distortion(const DistortionFn& d, double probe_lo,
                             double probe_hi, int grid_points) {
    AuditReport report;
    auto fail = [&report](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };
    if (std::abs(d.forward(0.0)) > 1e-12) fail("forward(0) != 0");
    const double step = (probe_hi - probe_lo) / (grid_points - 1);
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i) {
        const double s = probe_lo + i * step;
        const double fs = d.forward(s);
        if (fs <= prev) {
            fail("forward not strictly increasing at s = " + std::to_string(s));
            break;
        }
        prev = fs;
        if (std::abs(d.inverse(fs) - s) > 1e-8) {
            fail("inverse(forward(s)) != s at s = " + std::to_string(s));
            break;
        }
    }
    return report;
}

}  // namespace trollfarm

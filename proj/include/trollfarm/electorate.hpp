#pragma once

#include <functional>
#include <span>

#include "trollfarm/signal_model.hpp"  // OrderCheck, AuditReport

namespace trollfarm {

// Voter-type distribution with full support on the real line.
struct Electorate {
    std::function<double(double)> cdf;       // H
    std::function<double(double)> pdf;       // h
    std::function<double(double)> quantile;  // generalized inverse of H
};

Electorate normal_electorate(double mean, double sd);
Electorate logistic_electorate(double location, double scale);

// Affine pivot at 1/2: H_r(x) = H((1 - r) x + r/2). r = 0 is the base
// distribution; higher r concentrates types away from moderates while
// keeping H_r(1/2) fixed.
Electorate polarize(const Electorate& base, double r);

// Polarization partial order: candidate admits greater polarization than
// base iff its cdf is weakly higher left of 1/2 and weakly lower right of
// 1/2 on the grid (tolerance 1e-9).
OrderCheck admits_greater_polarization(const Electorate& candidate,
                                       const Electorate& base,
                                       std::span<const double> grid);

// Strictly increasing perception map with beta(0) = 0: a voter reading
// signal s updates as if she had read beta(s).
struct DistortionFn {
    std::function<double(double)> forward;  // beta
    std::function<double(double)> inverse;  // beta^{-1}
};

DistortionFn identity_distortion();
// beta(s) = sign(s) |s|^exponent
DistortionFn power_distortion(double exponent);
// beta_r(s) = beta(s) / r; r > 1 dampens every signal.
DistortionFn scale_distortion(const DistortionFn& base, double r);

// Conservatism order (strict): candidate pulls every nonzero signal closer
// to 0 than base does. Strictness is enforced with a 1e-12 margin so equal
// functions compare false.
bool is_more_conservative(const DistortionFn& candidate,
                          const DistortionFn& base,
                          std::span<const double> grid);

AuditReport audit_electorate(const Electorate& e, double probe_lo,
                             double probe_hi, int grid_points = 200);
AuditReport audit_distortion(const DistortionFn& d, double probe_lo,
                             double probe_hi, int grid_points = 200);

}  // namespace trollfarm

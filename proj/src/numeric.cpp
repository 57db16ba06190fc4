#include "trollfarm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace trollfarm {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
}  // namespace

double normal_pdf(double z, double mean, double sd) {
    const double t = (z - mean) / sd;
    return kInvSqrt2Pi / sd * std::exp(-0.5 * t * t);
}

double normal_cdf(double z, double mean, double sd) {
    return 0.5 * std::erfc(-(z - mean) / sd * kInvSqrt2);
}

// Acklam's rational approximation for the standard-normal quantile,
// polished with two Newton steps on erfc. Relative error after polishing is
// at the level of double rounding.
double normal_quantile(double p, double mean, double sd) {
    if (p < 0.0 || p > 1.0 || std::isnan(p))
        throw DomainError("normal_quantile: p = " + std::to_string(p) +
                          " outside [0, 1]");
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();

    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};

    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
             a[5]) *
            q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r +
             1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
              c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    for (int k = 0; k < 2; ++k) {
        const double e = 0.5 * std::erfc(-x * kInvSqrt2) - p;
        const double u = e / (kInvSqrt2Pi * std::exp(-0.5 * x * x));
        x -= u;
    }
    return mean + sd * x;
}

double logistic_pdf(double x, double location, double scale) {
    const double t = (x - location) / scale;
    // exp(-|t|) form avoids overflow in either tail
    const double e = std::exp(-std::abs(t));
    const double denom = (1.0 + e) * (1.0 + e);
    return e / (scale * denom);
}

double logistic_cdf(double x, double location, double scale) {
    const double t = (x - location) / scale;
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

double logistic_quantile(double p, double location, double scale) {
    if (p < 0.0 || p > 1.0 || std::isnan(p))
        throw DomainError("logistic_quantile: p = " + std::to_string(p) +
                          " outside [0, 1]");
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return location + scale * std::log(p / (1.0 - p));
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7/15
// ---------------------------------------------------------------------------

namespace {

// Kronrod abscissae on [-1, 1] (positive half) and weights; the Gauss-7 rule
// reuses nodes 1, 3, 5, 7 (0-indexed odd positions plus the centre).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    double value;
    double error;
    long id;  // deterministic tie-break for the refinement heap
    bool operator<(const Segment& other) const {
        if (error != other.error) return error < other.error;
        return id > other.id;
    }
};

Segment evaluate_gk(const std::function<double(double)>& f, double lo,
                    double hi, long id) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double result_k = 0.0;
    for (int i = 0; i < 7; ++i) result_k += kWgk[i] * (fv[i] + fv[14 - i]);
    result_k += kWgk[7] * fv[7];
    double result_g = 0.0;
    for (int i = 0; i < 3; ++i)
        result_g += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    result_g += kWg[3] * fv[7];
    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.value = result_k * h;
    seg.error = std::abs((result_k - result_g) * h);
    seg.id = id;
    return seg;
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, double lo,
                         double hi, double abs_tol, int max_segments) {
    if (std::isnan(lo) || std::isnan(hi) || lo >= hi)
        throw DomainError("integrate: invalid interval");

    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    std::function<double(double)> g;
    double a, b;
    if (!lo_inf && !hi_inf) {
        g = f;
        a = lo;
        b = hi;
    } else if (lo_inf && hi_inf) {
        // s = t / (1 - t^2), t in (-1, 1)
        g = [&f](double t) {
            const double omt2 = 1.0 - t * t;
            const double s = t / omt2;
            const double jac = (1.0 + t * t) / (omt2 * omt2);
            return f(s) * jac;
        };
        a = -1.0;
        b = 1.0;
    } else if (hi_inf) {
        // s = lo + t / (1 - t), t in (0, 1)
        const double base = lo;
        g = [&f, base](double t) {
            const double omt = 1.0 - t;
            return f(base + t / omt) / (omt * omt);
        };
        a = 0.0;
        b = 1.0;
    } else {
        // s = hi - t / (1 - t), t in (0, 1)
        const double base = hi;
        g = [&f, base](double t) {
            const double omt = 1.0 - t;
            return f(base - t / omt) / (omt * omt);
        };
        a = 0.0;
        b = 1.0;
    }

    long next_id = 0;
    std::priority_queue<Segment> heap;
    heap.push(evaluate_gk(g, a, b, next_id++));
    double total_error = heap.top().error;

    while (total_error > abs_tol &&
           static_cast<int>(heap.size()) < max_segments) {
        Segment worst = heap.top();
        heap.pop();
        total_error -= worst.error;
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // interval at machine resolution; keep its estimate as-is
            worst.id = next_id++;
            heap.push(worst);
            total_error += worst.error;
            break;
        }
        Segment left = evaluate_gk(g, worst.lo, mid, next_id++);
        Segment right = evaluate_gk(g, mid, worst.hi, next_id++);
        heap.push(left);
        heap.push(right);
        total_error += left.error + right.error;
    }

    // Deterministic summation: drain the heap, order segments by position.
    std::vector<Segment> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(),
              [](const Segment& s1, const Segment& s2) { return s1.lo < s2.lo; });
    IntegralResult res;
    for (const Segment& s : segs) {
        res.value += s.value;
        res.error += s.error;
    }
    if (res.error > abs_tol)
        throw NumericalError("integrate: achieved tolerance " +
                             std::to_string(res.error) + " exceeds requested " +
                             std::to_string(abs_tol));
    return res;
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

std::pair<double, double> bracket_monotone(
    const std::function<double(double)>& f, double target, double lo,
    double hi, int max_doublings) {
    if (!(lo < hi)) throw DomainError("bracket_monotone: lo >= hi");
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    int doublings = 0;
    while (flo * fhi > 0.0) {
        if (doublings++ >= max_doublings)
            throw BracketError(
                "bracket_monotone: no sign change after " +
                std::to_string(max_doublings) + " doublings, interval [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]");
        const double mid = 0.5 * (lo + hi);
        const double half = (hi - lo);  // doubles the width each pass
        lo = mid - half;
        hi = mid + half;
        flo = f(lo) - target;
        fhi = f(hi) - target;
    }
    return {lo, hi};
}

double bisect_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi, double value_tol, int max_steps) {
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw BracketError("bisect_monotone: [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] does not bracket target");
    double mid = 0.5 * (lo + hi);
    for (int step = 0; step < max_steps; ++step) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // machine resolution
        const double fmid = f(mid) - target;
        if (std::abs(fmid) <= value_tol) return mid;
        if ((fmid > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return mid;
}

}  // namespace trollfarm

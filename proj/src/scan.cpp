#include "qmaj/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include <omp.h>

namespace qmaj::scan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Best {
    double value;
    std::int64_t idx;
};

// maximize: keep the larger value; ties resolved toward the lower index so
// Serial and Parallel agree bitwise.
bool improves(const Best& cand, const Best& cur, bool maximize) {
    if (maximize ? (cand.value > cur.value) : (cand.value < cur.value)) {
        return true;
    }
    return cand.value == cur.value && cand.idx < cur.idx;
}

template <typename ValueAt>
std::pair<Best, Best> grid_minmax(std::int64_t n, const ValueAt& value_at,
                                  Exec exec) {
    Best lo{std::numeric_limits<double>::infinity(), -1};
    Best hi{-std::numeric_limits<double>::infinity(), -1};
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            const Best b{value_at(i), i};
            if (improves(b, lo, false)) lo = b;
            if (improves(b, hi, true)) hi = b;
        }
        return {lo, hi};
    }

    const int max_threads = omp_get_max_threads();
    std::vector<Best> lo_part(max_threads, lo);
    std::vector<Best> hi_part(max_threads, hi);
#pragma omp parallel
    {
        const int t = omp_get_thread_num();
        Best l = lo_part[t];
        Best h = hi_part[t];
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const Best b{value_at(i), i};
            if (improves(b, l, false)) l = b;
            if (improves(b, h, true)) h = b;
        }
        lo_part[t] = l;
        hi_part[t] = h;
    }
    for (int t = 0; t < max_threads; ++t) {
        if (lo_part[t].idx >= 0 && improves(lo_part[t], lo, false)) lo = lo_part[t];
        if (hi_part[t].idx >= 0 && improves(hi_part[t], hi, true)) hi = hi_part[t];
    }
    return {lo, hi};
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

DiskPoint refine_box(const std::function<double(double, double)>& f,
                     DiskPoint start, double dtheta, double dr,
                     bool maximize) {
    constexpr int kSub = 9;
    constexpr int kIters = 48;
    DiskPoint cur = start;
    for (int iter = 0; iter < kIters; ++iter) {
        DiskPoint next = cur;
        for (int a = 0; a < kSub; ++a) {
            const double t = cur.theta + dtheta * (2.0 * a / (kSub - 1) - 1.0);
            for (int b = 0; b < kSub; ++b) {
                double r = cur.radius + dr * (2.0 * b / (kSub - 1) - 1.0);
                r = std::clamp(r, 0.0, 1.0);
                const double v = f(t, r);
                if (maximize ? (v > next.value) : (v < next.value)) {
                    next = {t, r, v};
                }
            }
        }
        cur = next;
        dtheta *= 0.5;
        dr *= 0.5;
    }
    cur.theta = wrap_angle(cur.theta);
    return cur;
}

DiskPoint disk_optimum(const std::function<double(double, double)>& f,
                       std::size_t n_theta, std::size_t n_radius, Exec exec,
                       bool maximize) {
    if (n_theta < 3 || n_radius < 2) {
        throw std::invalid_argument("disk scan: grid too small");
    }
    const auto nt = static_cast<std::int64_t>(n_theta);
    const auto nr = static_cast<std::int64_t>(n_radius);
    const double dtheta = kTwoPi / static_cast<double>(nt);
    const double dr = 1.0 / static_cast<double>(nr - 1);
    const auto value_at = [&](std::int64_t i) {
        const double theta = dtheta * static_cast<double>(i / nr);
        const double r = dr * static_cast<double>(i % nr);
        const double v = f(theta, r);
        return maximize ? v : -v;
    };
    const auto [lo, hi] = grid_minmax(nt * nr, value_at, exec);
    const Best best = maximize ? hi : lo;
    DiskPoint seed{dtheta * static_cast<double>(best.idx / nr),
                   dr * static_cast<double>(best.idx % nr),
                   maximize ? best.value : -best.value};
    return refine_box(f, seed, dtheta, dr, maximize);
}

} // namespace

Extremum golden_min(const std::function<double(double)>& f, double lo,
                    double hi, double arg_tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > arg_tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    return {mid, f(mid)};
}

Extrema periodic_extrema(const std::function<double(double)>& f,
                         std::size_t grid_points, Exec exec) {
    if (grid_points < 8) {
        throw std::invalid_argument("periodic_extrema: grid too small");
    }
    const auto n = static_cast<std::int64_t>(grid_points);
    const double h = kTwoPi / static_cast<double>(n);
    const auto [lo, hi] =
        grid_minmax(n, [&](std::int64_t i) { return f(h * static_cast<double>(i)); }, exec);

    const auto sharpen = [&](const Best& seed, bool maximize) {
        const double center = h * static_cast<double>(seed.idx);
        const auto g = [&](double t) { return maximize ? -f(t) : f(t); };
        Extremum e = golden_min(g, center - h, center + h, 1e-12);
        e.arg = wrap_angle(e.arg);
        if (maximize) e.value = -e.value;
        return e;
    };
    return {sharpen(lo, false), sharpen(hi, true)};
}

DiskPoint disk_maximum(const std::function<double(double, double)>& f,
                       std::size_t n_theta, std::size_t n_radius, Exec exec) {
    return disk_optimum(f, n_theta, n_radius, exec, true);
}

DiskPoint disk_minimum(const std::function<double(double, double)>& f,
                       std::size_t n_theta, std::size_t n_radius, Exec exec) {
    return disk_optimum(f, n_theta, n_radius, exec, false);
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double arg_tol) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("bisect_root: empty bracket");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("bisect_root: no sign change on bracket");
    }
    for (int it = 0; it < 200 && (hi - lo) > arg_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace qmaj::scan

#include "qfr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "qfr/errors.hpp"

namespace qfr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK dqk15 values).
// Gauss nodes are the odd-index abscissae plus the center.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Seg {
    double a = 0.0, b = 0.0;
    double val = 0.0;
    double err = 0.0;  // quadrature error estimate only
    double aux = 0.0;  // integrated auxiliary error density
};

// Max-heap on err, midpoint tie-break so the pop order is deterministic.
struct SegWorse {
    bool operator()(const Seg& s, const Seg& t) const {
        if (s.err != t.err) return s.err < t.err;
        return s.a > t.a;
    }
};

Seg eval_gk15(const detail::Integrand2& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    double av[15];
    {
        auto [v, x] = f(c);
        fv[14] = v;
        av[14] = x;
    }
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        auto [v1, x1] = f(c - dx);
        auto [v2, x2] = f(c + dx);
        fv[2 * j] = v1;
        fv[2 * j + 1] = v2;
        av[2 * j] = x1;
        av[2 * j + 1] = x2;
    }

    double resg = kWg[3] * fv[14];
    double resk = kWgk[7] * fv[14];
    double resabs = kWgk[7] * std::abs(fv[14]);
    double resaux = kWgk[7] * std::abs(av[14]);
    for (int j = 0; j < 7; ++j) {
        const double fsum = fv[2 * j] + fv[2 * j + 1];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
        resaux += kWgk[j] * (std::abs(av[2 * j]) + std::abs(av[2 * j + 1]));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fv[14] - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(fv[2 * j] - reskh) +
                             std::abs(fv[2 * j + 1] - reskh));
    }

    Seg s;
    s.a = a;
    s.b = b;
    s.val = resk * h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    s.aux = resaux * std::abs(h);

    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > kTiny / (50.0 * kEps)) {
        err = std::max(err, 50.0 * kEps * resabs);
    }
    s.err = err;
    return s;
}

}  // namespace

namespace detail {

CoreResult adaptive_core(const Integrand2& f, double a, double b,
                         const QuadOptions& opt) {
    CoreResult out;
    if (!(a < b)) {
        if (a == b) return out;
        throw std::invalid_argument("adaptive_core: requires a < b");
    }

    std::vector<double> cuts;
    cuts.push_back(a);
    for (double p : opt.presplit) {
        if (p > a && p < b) cuts.push_back(p);
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    // Drop cuts that would create degenerate slivers.
    const double span = b - a;
    std::vector<double> pts;
    pts.push_back(a);
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
        if (cuts[i] - pts.back() > 1e-14 * span && b - cuts[i] > 1e-14 * span)
            pts.push_back(cuts[i]);
    }
    pts.push_back(b);

    std::priority_queue<Seg, std::vector<Seg>, SegWorse> active;
    std::vector<Seg> frozen;
    long evals = 0;
    double tot_val = 0.0, tot_err = 0.0;

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Seg s = eval_gk15(f, pts[i], pts[i + 1]);
        evals += 15;
        tot_val += s.val;
        tot_err += s.err;
        active.push(s);
    }

    int n_segments = static_cast<int>(pts.size()) - 1;
    bool converged = true;
    while (true) {
        const double target =
            std::max(opt.tol_abs, opt.tol_rel * std::abs(tot_val));
        if (tot_err <= target) break;
        if (active.empty()) {
            converged = tot_err <= target;
            break;
        }
        if (n_segments >= opt.max_intervals) {
            converged = false;
            break;
        }
        Seg worst = active.top();
        active.pop();
        const double width = worst.b - worst.a;
        const double scale = std::abs(worst.a) + std::abs(worst.b) + kTiny;
        if (width <= 64.0 * kEps * scale || worst.err <= kTiny) {
            frozen.push_back(worst);  // cannot be improved further
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Seg left = eval_gk15(f, worst.a, mid);
        Seg right = eval_gk15(f, mid, worst.b);
        evals += 30;
        ++n_segments;
        tot_val += left.val + right.val - worst.val;
        tot_err += left.err + right.err - worst.err;
        active.push(left);
        active.push(right);
    }

    // Deterministic reduction: sum segments in position order.
    std::vector<Seg> all;
    all.reserve(frozen.size() + active.size());
    for (const Seg& s : frozen) all.push_back(s);
    while (!active.empty()) {
        all.push_back(active.top());
        active.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Seg& s, const Seg& t) { return s.a < t.a; });
    double value = 0.0, err = 0.0, aux = 0.0;
    for (const Seg& s : all) {
        value += s.val;
        err += s.err;
        aux += s.aux;
    }

    out.value = value;
    out.err = err + aux;
    out.evals = evals;
    out.converged =
        converged && err <= std::max(opt.tol_abs, opt.tol_rel * std::abs(value));
    return out;
}

}  // namespace detail

QuadResult integrate_1d(const std::function<double(double)>& f, double a,
                        double b, const QuadOptions& opt) {
    auto wrapped = [&f](double x) { return std::pair<double, double>(f(x), 0.0); };
    detail::CoreResult r = detail::adaptive_core(wrapped, a, b, opt);
    QuadResult q{r.value, r.err, r.evals};
    if (!r.converged) {
        throw ConvergenceError("integrate_1d: subdivision limit reached", q);
    }
    return q;
}

QuadResult integrate_1d(const std::function<double(double)>& f, double a,
                        double b, double tol_rel, double tol_abs) {
    QuadOptions opt;
    opt.tol_rel = tol_rel;
    opt.tol_abs = tol_abs;
    return integrate_1d(f, a, b, opt);
}

namespace {

// Decade ladder around the feature: one initial segment per scale octave
// keeps the peak resolved and the algebraic tails cheap.
std::vector<double> hint_cuts(double center, double width, double lo,
                              double hi) {
    std::vector<double> cuts;
    if (!(width > 0.0)) return cuts;
    cuts.push_back(center);
    for (double k = 1.0; k * width < (hi - lo); k *= 6.0) {
        cuts.push_back(center - k * width);
        cuts.push_back(center + k * width);
    }
    std::erase_if(cuts, [&](double p) { return !(p > lo && p < hi); });
    return cuts;
}

}  // namespace

QuadResult integrate_3d(
    const std::function<double(const std::array<double, 3>&)>& f,
    const std::array<double, 3>& lo, const std::array<double, 3>& hi,
    const std::optional<SingularityHint>& hint, double tol_rel) {
    for (int i = 0; i < 3; ++i) {
        if (!(lo[i] <= hi[i]) || !std::isfinite(lo[i]) || !std::isfinite(hi[i]))
            throw std::invalid_argument("integrate_3d: box must be finite");
    }

    QuadOptions inner_opt, mid_opt, outer_opt;
    inner_opt.tol_rel = 0.25 * tol_rel;
    inner_opt.max_intervals = 2000;
    mid_opt.tol_rel = 0.3 * tol_rel;
    mid_opt.max_intervals = 1500;
    outer_opt.tol_rel = 0.4 * tol_rel;
    outer_opt.max_intervals = 1000;
    if (hint) {
        inner_opt.presplit = hint_cuts(hint->center[0], hint->widths[0], lo[0], hi[0]);
        mid_opt.presplit = hint_cuts(hint->center[1], hint->widths[1], lo[1], hi[1]);
        outer_opt.presplit = hint_cuts(hint->center[2], hint->widths[2], lo[2], hi[2]);
    }

    long evals = 0;
    bool all_converged = true;

    auto middle = [&](double z) -> std::pair<double, double> {
        auto inner = [&](double y) -> std::pair<double, double> {
            auto line = [&](double x) -> std::pair<double, double> {
                return {f({x, y, z}), 0.0};
            };
            detail::CoreResult r =
                detail::adaptive_core(line, lo[0], hi[0], inner_opt);
            evals += r.evals;
            all_converged = all_converged && r.converged;
            return {r.value, r.err};
        };
        detail::CoreResult r = detail::adaptive_core(inner, lo[1], hi[1], mid_opt);
        all_converged = all_converged && r.converged;
        return {r.value, r.err};
    };

    detail::CoreResult r = detail::adaptive_core(middle, lo[2], hi[2], outer_opt);
    QuadResult q{r.value, r.err, evals};
    if (q.err > tol_rel * std::abs(q.value) && q.err > 1e-300) {
        throw ConvergenceError("integrate_3d: tolerance not reached", q);
    }
    return q;
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(a < b)) std::swap(a, b);
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb)) {
        throw BracketError("find_root: no sign change on [a, b]");
    }

    int side = 0;  // Illinois bookkeeping: which end was retained last
    for (int iter = 0; iter < 200; ++iter) {
        if (b - a <= tol) break;
        double s = b - fb * (b - a) / (fb - fa);
        if (!std::isfinite(s) || s <= a || s >= b) s = 0.5 * (a + b);
        double fs = f(s);
        if (fs == 0.0) return s;
        if (std::signbit(fs) != std::signbit(fb)) {
            a = s;
            fa = fs;
            if (side == +1) fb *= 0.5;
            side = +1;
        } else {
            b = s;
            fb = fs;
            if (side == -1) fa *= 0.5;
            side = -1;
        }
    }
    return 0.5 * (a + b);
}

namespace {

MaxResult golden_refine(const std::function<double(double)>& f, double lo,
                        double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
    }
    MaxResult r;
    if (f1 >= f2) {
        r.x = x1;
        r.value = f1;
    } else {
        r.x = x2;
        r.value = f2;
    }
    return r;
}

}  // namespace

MaxResult maximize_1d(const std::function<double(double)>& f,
                      std::span<const double> grid, double tol) {
    if (grid.size() < 3) {
        throw std::invalid_argument("maximize_1d: need at least 3 grid points");
    }
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = f(grid[i]);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = grid.front(), b = grid.back();
    const double lo = grid[best == 0 ? 0 : best - 1];
    const double hi = grid[best + 1 >= grid.size() ? grid.size() - 1 : best + 1];
    MaxResult r = golden_refine(f, lo, hi, tol);
    if (best_val > r.value) {
        r.x = grid[best];
        r.value = best_val;
    }
    const double edge = std::max(tol, 1e-12 * (std::abs(a) + std::abs(b)));
    r.on_boundary = (r.x - a <= edge) || (b - r.x <= edge);
    return r;
}

MaxResult maximize_1d(const std::function<double(double)>& f, double a,
                      double b, double tol, int scan_points) {
    if (!(a < b)) throw std::invalid_argument("maximize_1d: requires a < b");
    const int n = std::max(scan_points, 3);
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
    }
    return maximize_1d(f, grid, tol);
}

LineFit fit_log_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        throw std::invalid_argument("fit_log_slope: need at least 3 points");
    }
    const double n = static_cast<double>(points.size());
    double sx = 0, sy = 0;
    for (const auto& [s, F] : points) {
        sx += s;
        sy += F;
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [s, F] : points) {
        sxx += (s - mx) * (s - mx);
        sxy += (s - mx) * (F - my);
        syy += (F - my) * (F - my);
    }
    double scale = 0;
    for (const auto& [s, F] : points) scale = std::max(scale, s * s);
    if (sxx <= 1e-24 * std::max(scale, 1.0) * n) {
        throw std::invalid_argument("fit_log_slope: degenerate abscissae");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy <= 0.0) {
        fit.r2 = 1.0;
    } else {
        double ss_res = 0;
        for (const auto& [s, F] : points) {
            const double d = F - (fit.intercept + fit.slope * s);
            ss_res += d * d;
        }
        fit.r2 = 1.0 - ss_res / syy;
    }
    return fit;
}

}  // namespace qfr

#include "rfso/specfun.hpp"
#include "rfso/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rfso::specfun {

using cplx = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2Pi = 1.8378770664093454836;  // ln(2*pi)

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey set).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx lanczos_log_gamma(cplx z) {
    // valid for Re(z) >= 0.5
    cplx sum = kLanczos[0];
    for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    cplx t = z + (kLanczosG - 0.5);
    return 0.5 * kLn2Pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

// log(sin(pi z)) without overflow for large |Im z|; branch is irrelevant to
// exp(sum) consumers.
cplx log_sin_pi(cplx z) {
    double y = z.imag();
    if (std::abs(y) < 20.0) return std::log(std::sin(kPi * z));
    if (y > 0.0) {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        cplx w = std::exp(cplx(0.0, 2.0 * kPi) * z);  // |w| = e^{-2 pi y} small
        return cplx(-std::log(2.0), kPi / 2.0) + cplx(0.0, -kPi) * z + std::log(1.0 - w);
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 15(7) adaptive panels
// ---------------------------------------------------------------------------

constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kGkWeightK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGkWeightG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class T> double mag(const T& v) { return std::abs(v); }

template <class T, class F>
void gk15(F&& f, double a, double b, T& value, double& error) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fk = T();
    T fg = T();
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            T v = f(c);
            fk += kGkWeightK[7] * v;
            fg += kGkWeightG[3] * v;
        } else {
            T v1 = f(c - h * kGkNodes[i]);
            T v2 = f(c + h * kGkNodes[i]);
            fk += kGkWeightK[i] * (v1 + v2);
            if (i % 2 == 1) fg += kGkWeightG[i / 2] * (v1 + v2);
        }
    }
    value = h * fk;
    error = mag(h * (fk - fg));
}

template <class T, class F>
void adapt_panel(F&& f, double a, double b, double abstol, int depth,
                 T& value, double& error) {
    T v;
    double e;
    gk15<T>(f, a, b, v, e);
    if (e <= abstol || depth >= 24 || (b - a) < 1e-13 * (std::abs(a) + 1.0)) {
        value += v;
        error += e;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt_panel<T>(f, a, m, abstol * 0.5, depth + 1, value, error);
    adapt_panel<T>(f, m, b, abstol * 0.5, depth + 1, value, error);
}

// ---------------------------------------------------------------------------
// Mellin-Barnes kernels
// ---------------------------------------------------------------------------

struct MBKernel {
    const MeijerGSpec& sp;
    double logz;

    cplx log_f(cplx s) const {
        cplx acc = s * logz;
        for (int j = 0; j < sp.m; ++j) acc += log_gamma(sp.b[j] - s);
        for (int j = 0; j < sp.n; ++j) acc += log_gamma(1.0 - sp.a[j] + s);
        for (int j = sp.m; j < sp.q(); ++j) acc -= log_gamma(1.0 - sp.b[j] + s);
        for (int j = sp.n; j < sp.p(); ++j) acc -= log_gamma(sp.a[j] - s);
        return acc;
    }
    double log_mag(double c) const { return log_f(cplx(c, 0.0)).real(); }
};

bool near_integer(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) < tol;
}

// Ternary search for the minimizer of a smooth single-dip function.
template <class F>
double minimize_scalar(F&& f, double lo, double hi, int iters = 120) {
    double a = lo, b = hi;
    for (int i = 0; i < iters; ++i) {
        double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (f(m1) < f(m2)) b = m2; else a = m1;
    }
    return 0.5 * (a + b);
}

// Integrate Re f(c + i t) over t in [0, inf) by marching unit panels until
// the integrand magnitude drops below 1e-16 of its running peak.
double mb_line_integral(const MBKernel& k, double c, double scale_log,
                        double rel_target, double& err_out) {
    auto g = [&](double t) -> double {
        cplx lf = k.log_f(cplx(c, t)) - scale_log;
        if (lf.real() > 700.0) throw accuracy_error("meijer_g: integrand overflow", 1.0);
        if (lf.real() < -750.0) return 0.0;
        return std::exp(lf).real();
    };
    double total = 0.0, err = 0.0, peak = 0.0;
    double t0 = 0.0;
    int quiet = 0;
    const double w = 1.0;
    for (int panel = 0; panel < 800; ++panel) {
        double v = 0.0, e = 0.0;
        adapt_panel<double>(g, t0, t0 + w, 1e-16, 0, v, e);
        total += v;
        err += e;
        double m = std::max(std::abs(g(t0 + 0.13 * w)), std::abs(g(t0 + 0.77 * w)));
        peak = std::max(peak, m);
        t0 += w;
        if (m < 1e-16 * std::max(peak, 1e-300) && std::abs(v) < 1e-16 * (std::abs(total) + 1e-300)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        if (panel == 799)
            throw accuracy_error("meijer_g: contour tail did not decay", 1.0);
    }
    double result = std::exp(scale_log) * total / kPi;
    err_out = std::exp(scale_log) * err / kPi;
    double denom = std::max(std::abs(result), 1e-300);
    if (err_out > rel_target * denom && err_out > 1e-15 * std::exp(scale_log))
        throw accuracy_error("meijer_g: quadrature target missed", err_out / denom);
    return result;
}

double real_gamma_product_at(const MBKernel& k, double s) {
    // exp(log_f at a real point); imaginary parts of the log sum are
    // multiples of pi from negative-argument gammas, so take the real part
    // of the exponential.
    cplx lf = k.log_f(cplx(s, 0.0));
    if (lf.real() > 700.0) throw accuracy_error("meijer_g: residue overflow", 1.0);
    return std::exp(lf).real();
}

} // namespace

// ---------------------------------------------------------------------------

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // reflection: log G(z) = log pi - log sin(pi z) - log G(1 - z)
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

double log_gamma_signed(double x, int& sign) {
    if (x > 0.0) {
        sign = 1;
        return std::lgamma(x);
    }
    if (near_integer(x, 1e-12))
        throw degenerate_parameters("log_gamma_signed: pole at nonpositive integer");
    double s = std::sin(kPi * x);
    sign = (s > 0.0) ? 1 : -1;
    return std::log(kPi) - std::log(std::abs(s)) - std::lgamma(1.0 - x);
}

double gaussian_q(double x) {
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

std::vector<double> delta_vec(int j, double x) {
    if (j < 1) throw std::invalid_argument("delta_vec: j must be >= 1");
    std::vector<double> out(static_cast<size_t>(j));
    for (int i = 0; i < j; ++i) out[static_cast<size_t>(i)] = (x + i) / j;
    return out;
}

double bessel_k(double nu, double x) {
    if (x <= 0.0) throw std::domain_error("bessel_k: x must be > 0");
    nu = std::abs(nu);  // K_nu = K_{-nu}
    // peak of exp(-x cosh t + nu t) sits near t* = asinh(nu/x)
    if (nu > 0.0) {
        double ts = std::asinh(nu / x);
        double phimax = -x * std::cosh(ts) + nu * ts + x;
        if (phimax > 680.0)
            throw std::range_error("bessel_k: scaled integrand overflows (tiny x, large |nu|)");
    }
    auto logcosh = [](double u) {
        u = std::abs(u);
        return u + std::log1p(std::exp(-2.0 * u)) - std::log(2.0);
    };
    auto f = [&](double t) { return std::exp(-x * (std::cosh(t) - 1.0) + logcosh(nu * t)); };
    double total = 0.0, err = 0.0, peak = 0.0;
    double t0 = 0.0;
    for (int panel = 0; panel < 80; ++panel) {
        double v = 0.0, e = 0.0;
        adapt_panel<double>(f, t0, t0 + 1.0, 1e-15 * std::max(peak, 1.0), 0, v, e);
        total += v;
        err += e;
        double m = f(t0 + 0.5);
        peak = std::max(peak, std::max(m, f(t0)));
        t0 += 1.0;
        if (m < 1e-18 * peak && v < 1e-17 * total) break;
        if (panel == 79) throw accuracy_error("bessel_k: tail did not decay", 1.0);
    }
    if (err > 1e-11 * total)
        throw accuracy_error("bessel_k: quadrature target missed", err / total);
    return std::exp(-x) * total;
}

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) {
        // ascending series
        double term = 1.0 / a, sum = term;
        for (int k = 1; k < 800; ++k) {
            term *= x / (a + k);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    return 1.0 - gamma_q(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p(a, x);
    // Lentz continued fraction for Q
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 800; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

void MeijerGSpec::validate() const {
    if (m < 0 || n < 0 || m > q() || n > p())
        throw std::invalid_argument("MeijerGSpec: need 0 <= m <= q, 0 <= n <= p");
    if (m < 1)
        throw std::invalid_argument("MeijerGSpec: m >= 1 required");
    if (2 * (m + n) <= p() + q())
        throw std::invalid_argument("MeijerGSpec: 2(m+n) > p+q required for contour decay");
}

double meijer_g(const MeijerGSpec& spec, double z) {
    spec.validate();
    if (!(z > 0.0)) throw std::domain_error("meijer_g: z must be > 0");

    // pole families: right {b_j + k, j < m}, left {a_j - 1 - k, j < n}
    for (int u = 0; u < spec.n; ++u)
        for (int v = 0; v < spec.m; ++v) {
            double d = spec.a[u] - spec.b[v];
            if (d >= 0.5 && near_integer(d))
                throw unsupported_parameters("meijer_g: pole families collide (a_u - b_v positive integer)");
        }

    MBKernel kern{spec, std::log(z)};
    double hi = *std::min_element(spec.b.begin(), spec.b.begin() + spec.m);
    double lo = -std::numeric_limits<double>::infinity();
    if (spec.n > 0) lo = *std::max_element(spec.a.begin(), spec.a.begin() + spec.n) - 1.0;

    const double rel_target = 1e-9;
    if (lo < hi - 1e-10) {
        double c;
        if (spec.n == 0) {
            double span = std::max(40.0, 4.0 * std::pow(z, 1.0 / std::max(1, spec.q() - spec.p())));
            double right = hi - std::min(0.125, 0.25 * span);
            c = minimize_scalar([&](double x) { return kern.log_mag(x); }, hi - span, right);
        } else {
            double width = hi - lo;
            double margin = std::min(0.125, 0.2 * width);
            c = minimize_scalar([&](double x) { return kern.log_mag(x); }, lo + margin, hi - margin);
        }
        double scale_log = kern.log_mag(c);
        if (scale_log < -760.0) return 0.0;  // value underflows; exact 0 within doubles
        double err = 0.0;
        return mb_line_integral(kern, c, scale_log, rel_target, err);
    }

    // Empty strip with non-colliding families: integrate on a line left of all
    // b-poles and add back the residues of the left-family poles it crossed.
    for (int u = 0; u < spec.n; ++u)
        for (int u2 = u + 1; u2 < spec.n; ++u2)
            if (near_integer(spec.a[u] - spec.a[u2]))
                throw unsupported_parameters("meijer_g: coincident left-family poles in detour");
    double c = hi - 0.3;
    for (int u = 0; u < spec.n; ++u) {
        double frac = spec.a[u] - 1.0 - c;
        if (frac > 0.0 && near_integer(frac, 0.05)) c -= 0.1;
    }
    double scale_log = kern.log_mag(c);
    double err = 0.0;
    double g = mb_line_integral(kern, c, scale_log, rel_target, err);
    for (int u = 0; u < spec.n; ++u) {
        for (int k = 0;; ++k) {
            double p = spec.a[u] - 1.0 - k;
            if (p <= c) break;
            // residue of Gamma(1 - a_u + s) at s = p is (-1)^k / k!
            MeijerGSpec rest = spec;
            rest.a.erase(rest.a.begin() + u);
            rest.n -= 1;
            // rest has n-1 "numerator upper" gammas; m unchanged
            MBKernel rk{rest, std::log(z)};
            double coeff = ((k % 2) ? -1.0 : 1.0) / std::tgamma(k + 1.0);
            g += coeff * real_gamma_product_at(rk, p);
        }
    }
    return g;
}

double meijer_g_small_arg(const MeijerGSpec& spec, double z) {
    spec.validate();
    if (!(z > 0.0)) throw std::domain_error("meijer_g_small_arg: z must be > 0");
    double bmin = *std::min_element(spec.b.begin(), spec.b.begin() + spec.m);

    double total = 0.0;
    int kept = 0;
    for (int v = 0; v < spec.m; ++v) {
        double bv = spec.b[v];
        bool infinite = false;
        double logsum = bv * std::log(z);
        int sign = 1;
        for (int j = 0; j < spec.m && !infinite; ++j) {
            if (j == v) continue;
            double d = spec.b[j] - bv;
            if (d < 0.5 && near_integer(d)) { infinite = true; break; }
            int s;
            logsum += log_gamma_signed(d, s);
            sign *= s;
        }
        if (infinite) {
            if (std::abs(bv - bmin) < 1e-12)
                throw degenerate_parameters("meijer_g_small_arg: leading pole is not simple");
            continue;  // non-simple subleading pole; its log-corrected term is higher order
        }
        for (int j = 0; j < spec.n; ++j) {
            double arg = 1.0 - spec.a[j] + bv;
            if (arg <= 0.0 && near_integer(arg))
                throw unsupported_parameters("meijer_g_small_arg: upper-parameter pole at expansion point");
            int s;
            logsum += log_gamma_signed(arg, s);
            sign *= s;
        }
        bool zero = false;
        for (int j = spec.m; j < spec.q() && !zero; ++j) {
            double arg = 1.0 - spec.b[j] + bv;
            if (arg <= 0.0 && near_integer(arg)) { zero = true; break; }  // 1/Gamma(pole) = 0
            int s;
            logsum -= log_gamma_signed(arg, s);
            sign *= s;
        }
        for (int j = spec.n; j < spec.p() && !zero; ++j) {
            double arg = spec.a[j] - bv;
            if (arg <= 0.0 && near_integer(arg)) { zero = true; break; }
            int s;
            logsum -= log_gamma_signed(arg, s);
            sign *= s;
        }
        if (zero) continue;
        total += sign * std::exp(logsum);
        ++kept;
    }
    if (kept == 0)
        throw degenerate_parameters("meijer_g_small_arg: no simple-pole terms available");
    return total;
}

// ---------------------------------------------------------------------------
// bivariate Fox H
// ---------------------------------------------------------------------------

void FoxH2Spec::validate() const {
    auto chk = [](const std::vector<Pair>& v) {
        for (const auto& p : v)
            if (!(p.s > 0.0)) throw std::invalid_argument("FoxH2Spec: exponent scales must be > 0");
    };
    chk(x_num_lower); chk(x_num_upper); chk(x_den_lower); chk(x_den_upper);
    chk(y_num_lower); chk(y_num_upper); chk(y_den_lower); chk(y_den_upper);
    for (const auto& c : coupling)
        if (!(c.as > 0.0) || !(c.at > 0.0))
            throw std::invalid_argument("FoxH2Spec: coupling scales must be > 0");
    if (y_num_lower.empty() || x_num_lower.empty())
        throw std::invalid_argument("FoxH2Spec: need at least one lower numerator gamma per variable");
}

double fox_h_bivariate(const FoxH2Spec& spec, double x, double y) {
    spec.validate();
    if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("fox_h_bivariate: x, y must be > 0");
    const double lx = std::log(x), ly = std::log(y);

    auto strip = [](const std::vector<FoxH2Spec::Pair>& lower,
                    const std::vector<FoxH2Spec::Pair>& upper, double& lo, double& hi) {
        hi = std::numeric_limits<double>::infinity();
        lo = -std::numeric_limits<double>::infinity();
        for (const auto& p : lower) hi = std::min(hi, p.c / p.s);
        for (const auto& p : upper) lo = std::max(lo, (p.c - 1.0) / p.s);
    };
    double lo_t, hi_t, lo_s, hi_s;
    strip(spec.y_num_lower, spec.y_num_upper, lo_t, hi_t);
    strip(spec.x_num_lower, spec.x_num_upper, lo_s, hi_s);

    double ct = std::isfinite(lo_t) ? std::max(lo_t + 0.25 * (hi_t - lo_t), hi_t - 0.25)
                                    : hi_t - 0.25;
    double lo_s2 = lo_s;
    for (const auto& c : spec.coupling)
        lo_s2 = std::max(lo_s2, (c.a - 1.0 - c.at * ct) / c.as + 0.05);
    if (!(lo_s2 < hi_s - 1e-9))
        throw unsupported_parameters("fox_h_bivariate: no admissible inner contour");
    double cs = std::isfinite(lo_s2) ? 0.5 * (lo_s2 + hi_s) : hi_s - 0.5;

    auto log_kernel_x = [&](cplx s) {
        cplx acc = s * lx;
        for (const auto& p : spec.x_num_lower) acc += log_gamma(p.c - p.s * s);
        for (const auto& p : spec.x_num_upper) acc += log_gamma(1.0 - p.c + p.s * s);
        for (const auto& p : spec.x_den_lower) acc -= log_gamma(1.0 - p.c + p.s * s);
        for (const auto& p : spec.x_den_upper) acc -= log_gamma(p.c - p.s * s);
        return acc;
    };
    auto log_kernel_y = [&](cplx t) {
        cplx acc = t * ly;
        for (const auto& p : spec.y_num_lower) acc += log_gamma(p.c - p.s * t);
        for (const auto& p : spec.y_num_upper) acc += log_gamma(1.0 - p.c + p.s * t);
        for (const auto& p : spec.y_den_lower) acc -= log_gamma(1.0 - p.c + p.s * t);
        for (const auto& p : spec.y_den_upper) acc -= log_gamma(p.c - p.s * t);
        return acc;
    };
    auto log_coupling = [&](cplx s, cplx t) {
        cplx acc = 0.0;
        for (const auto& c : spec.coupling) acc += log_gamma(1.0 - c.a + c.as * s + c.at * t);
        return acc;
    };

    // inner scale reference at (cs, ct)
    double inner_scale = (log_kernel_x(cplx(cs, 0)) + log_coupling(cplx(cs, 0), cplx(ct, 0))).real();

    auto inner = [&](cplx t) -> cplx {
        auto f = [&](double u) -> cplx {
            cplx s(cs, u);
            cplx lf = log_kernel_x(s) + log_coupling(s, t) - inner_scale;
            if (lf.real() < -750.0) return cplx(0.0, 0.0);
            if (lf.real() > 700.0) throw accuracy_error("fox_h: inner overflow", 1.0);
            return std::exp(lf);
        };
        cplx total(0.0, 0.0);
        double err = 0.0, peak = 0.0;
        for (int side = 0; side < 2; ++side) {
            double u0 = 0.0;
            int quiet = 0;
            for (int panel = 0; panel < 400; ++panel) {
                cplx v(0.0, 0.0);
                double e = 0.0;
                double a = (side == 0) ? u0 : -(u0 + 1.0);
                double b = (side == 0) ? u0 + 1.0 : -u0;
                adapt_panel<cplx>(f, a, b, 1e-13, 0, v, e);
                total += v;
                err += e;
                double m = std::abs(f(0.5 * (a + b)));
                peak = std::max(peak, m);
                u0 += 1.0;
                if (m < 1e-14 * std::max(peak, 1e-300) && std::abs(v) < 1e-14 * (std::abs(total) + 1e-300)) {
                    if (++quiet >= 2) break;
                } else {
                    quiet = 0;
                }
                if (panel == 399) throw accuracy_error("fox_h: inner tail did not decay", 1.0);
            }
        }
        return total / (2.0 * kPi);  // still scaled by exp(inner_scale)
    };

    double outer_scale = log_kernel_y(cplx(ct, 0)).real();
    auto g = [&](double v) -> double {
        cplx t(ct, v);
        cplx ly_k = log_kernel_y(t) - outer_scale;
        if (ly_k.real() < -750.0) return 0.0;
        return (std::exp(ly_k) * inner(t)).real();
    };

    double total = 0.0, err = 0.0, peak = 0.0;
    double v0 = 0.0;
    int quiet = 0;
    for (int panel = 0; panel < 400; ++panel) {
        double vv = 0.0, e = 0.0;
        adapt_panel<double>(g, v0, v0 + 1.0, 1e-11, 0, vv, e);
        total += vv;
        err += e;
        double m = std::abs(g(v0 + 0.5));
        peak = std::max(peak, m);
        v0 += 1.0;
        if (m < 1e-12 * std::max(peak, 1e-300) && std::abs(vv) < 1e-12 * (std::abs(total) + 1e-300)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        if (panel == 399) throw accuracy_error("fox_h: outer tail did not decay", 1.0);
    }
    double result = std::exp(outer_scale + inner_scale) * total / kPi;
    double abs_err = std::exp(outer_scale + inner_scale) * err / kPi;
    if (abs_err > 1e-5 * std::max(std::abs(result), 1e-300) && abs_err > 1e-12 * std::exp(outer_scale + inner_scale))
        throw accuracy_error("fox_h: quadrature target missed", abs_err / std::max(std::abs(result), 1e-300));
    return result;
}

} // namespace rfso::specfun

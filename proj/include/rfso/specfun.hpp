#ifndef RFSO_SPECFUN_HPP
#define RFSO_SPECFUN_HPP

#include <complex>
#include <vector>

namespace rfso::specfun {

// Log-gamma for complex argument (Lanczos + reflection). Any branch; callers
// form products as exp(sum of log-gammas), which is branch-insensitive.
std::complex<double> log_gamma(std::complex<double> z);

// Real log|Gamma(x)| together with the sign of Gamma(x); x must not be a pole.
double log_gamma_signed(double x, int& sign);

// Modified Bessel function of the second kind, fractional order.
// Evaluated from the integral representation K_nu(x) = int_0^inf
// exp(-x cosh t) cosh(nu t) dt with adaptive panels. x in [1e-6, 700]
// carries >= 10 significant digits. K_nu = K_{-nu}.
double bessel_k(double nu, double x);

double gaussian_q(double x);                 // Q(x) = erfc(x/sqrt 2)/2

// Regularized incomplete gamma P(a,x) (lower) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// [x/j, (x+1)/j, ..., (x+j-1)/j]
std::vector<double> delta_vec(int j, double x);

// Meijer G. First m lower / first n upper parameters are the "numerator"
// groups of the Mellin-Barnes kernel.
struct MeijerGSpec {
    int m = 0;
    int n = 0;
    std::vector<double> a;  // p upper parameters
    std::vector<double> b;  // q lower parameters

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }
    void validate() const;  // throws std::invalid_argument
};

// Contour (Mellin-Barnes) evaluation along a vertical line placed inside the
// strip separating the two pole families; the line's real part is tuned to
// minimize the t = 0 integrand magnitude. Coincident poles inside one family
// are harmless here. Throws unsupported_parameters when the families collide
// at integer offsets, accuracy_error when the quadrature target is missed.
double meijer_g(const MeijerGSpec& spec, double z);

// Leading-order residue expansion sum_v C_v z^{b_v} over the first m lower
// parameters; the small-argument asymptote. Terms whose coefficient hits a
// numerator gamma pole (pole of higher order) are dropped; if the smallest
// b_v itself is non-simple this throws degenerate_parameters.
double meijer_g_small_arg(const MeijerGSpec& spec, double z);

// Two-variable Fox H evaluated by iterated Mellin-Barnes quadrature
// (inner s-line integrated per outer t-node). Compute-intensive; relative
// target 1e-5.
//
//   H(x,y) = (2 pi i)^-2 II K(s,t) x^s y^t ds dt
//   K = prod Gamma(1 - a + A s + B t)            [coupling]
//     * prod Gamma(d - D s) prod Gamma(1 - c + C s)         [x kernel num]
//     / prod Gamma(1 - d' + D' s) / prod Gamma(c' - C' s)   [x kernel den]
//     * (same structure in t)                                [y kernel]
struct FoxH2Spec {
    struct Coupling { double a, as, at; };        // Gamma(1 - a + as*s + at*t)
    struct Pair { double c, s; };                 // coefficient, scale (s > 0)
    std::vector<Coupling> coupling;
    std::vector<Pair> x_num_lower, x_num_upper, x_den_lower, x_den_upper;
    std::vector<Pair> y_num_lower, y_num_upper, y_den_lower, y_den_upper;
    void validate() const;
};

double fox_h_bivariate(const FoxH2Spec& spec, double x, double y);

} // namespace rfso::specfun

#endif

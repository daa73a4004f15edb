#pragma once

namespace subdiff {

enum class MlMethod { Series, Asymptotic, Integral, SpecialCase };

struct MlEval {
    double alpha = 0.0;
    double x = 0.0;       // evaluates E_alpha(-x)
    double value = 0.0;
    MlMethod method = MlMethod::Series;
};

/// E_alpha(-x) for alpha in (0,1], x >= 0, to absolute accuracy 1e-8.
///
/// Branches: power series (long double accumulation) for x <= 5 when its peak
/// term keeps the rounding below target; term-minimized asymptotic expansion
/// for larger x when the smallest omitted term certifies the target; otherwise
/// the spectral integral representation
///   E_alpha(-x) = (sin(pi alpha)/pi) int_0^inf x r^{alpha-1} e^{-r}
///                 / (r^{2 alpha} + 2 x r^alpha cos(pi alpha) + x^2) dr,
/// which covers the mid-range where both expansions lose accuracy.
/// alpha == 1 delegates to exp(-x).
MlEval mittag_leffler_eval(double alpha, double x);
double mittag_leffler_neg(double alpha, double x);

/// Exact amplitude of the eigenmode sin(k pi x) sin(l pi y) of the Dirichlet
/// Laplacian on the unit square: E_alpha(-pi^2 (k^2 + l^2) t^alpha).
double exact_single_mode(double alpha, int k, int l, double t);

struct ClosedFormConstants {
    double case_a_l2_norm;         // || x y (1-x)(1-y) ||_{L2} = 1/30
    double quarter_disk_area;      // pi/4
    double reference_triangle_area;  // 1/2
};
ClosedFormConstants closed_form_norms();

/// int_T x^i y^j over the reference triangle {x,y >= 0, x+y <= 1} = i! j! / (i+j+2)!.
double reference_triangle_moment(int i, int j);

namespace ml_detail {
/// Power series sum; *peak receives the largest term magnitude (cancellation gauge).
double series(double alpha, double x, double* peak = nullptr);
/// Term-minimized asymptotic sum; *err_estimate receives the first omitted term.
double asymptotic(double alpha, double x, double* err_estimate = nullptr);
/// Spectral integral representation, adaptive quadrature.
double integral(double alpha, double x);
}  // namespace ml_detail

}  // namespace subdiff

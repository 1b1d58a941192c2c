#pragma once

#include <cmath>

// In-house error function so the closed-form layer stays dependency-free.
// Rational approximations in three intervals (Cody-style), accurate to
// a few ulp in double precision.

namespace qpath {
namespace detail {

inline double erfc_core(double y) {
    // y in (0.46875, inf); returns erfc(y).
    static constexpr double c[9] = {
        5.64188496988670089e-1, 8.88314979438837594e0, 6.61191906371416295e1,
        2.98635138197400131e2,  8.81952221241769090e2, 1.71204761263407058e3,
        2.05107837782607147e3,  1.23033935479799725e3, 2.15311535474403846e-8};
    static constexpr double d[8] = {
        1.57449261107098347e1, 1.17693950891312499e2, 5.37181101862009858e2,
        1.62138957456669019e3, 3.29079923573345963e3, 4.36261909014324716e3,
        3.43936767414372164e3, 1.23033935480374942e3};
    static constexpr double p[6] = {
        3.05326634961232344e-1, 3.60344899949804439e-1, 1.25781726111229246e-1,
        1.60837851487422766e-2, 6.58749161529837803e-4, 1.63153871373020978e-2};
    static constexpr double q[5] = {
        2.56852019228982242e0, 1.87295284992346047e0, 5.27905102951428412e-1,
        6.05183413124413191e-2, 2.33520497626869185e-3};
    constexpr double inv_sqrt_pi = 5.6418958354775628695e-1;

    double result;
    if (y <= 4.0) {
        double num = c[8] * y;
        double den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + c[i]) * y;
            den = (den + d[i]) * y;
        }
        result = (num + c[7]) / (den + d[7]);
    } else {
        if (y >= 26.5) return 0.0;
        const double z = 1.0 / (y * y);
        double num = p[5] * z;
        double den = z;
        for (int i = 0; i < 4; ++i) {
            num = (num + p[i]) * z;
            den = (den + q[i]) * z;
        }
        num = z * (num + p[4]) / (den + q[4]);
        result = (inv_sqrt_pi - num) / y;
    }
    // exp(-y^2) split to preserve accuracy for large arguments
    const double ysq = std::floor(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del) * result;
}

}  // namespace detail

/// Error function Phi(y) = (2/sqrt(pi)) * integral_0^y exp(-t^2) dt.
inline double erf(double x) {
    static constexpr double a[5] = {
        3.16112374387056560e0, 1.13864154151050156e2, 3.77485237685302021e2,
        3.20937758913846947e3, 1.85777706184603153e-1};
    static constexpr double b[4] = {
        2.36012909523441209e1, 2.44024637934444173e2, 1.28261652607737228e3,
        2.84423683343917062e3};

    if (std::isnan(x)) return x;
    const double y = std::fabs(x);
    if (y <= 0.46875) {
        const double z = y > 1.11e-16 ? y * y : 0.0;
        double num = a[4] * z;
        double den = z;
        for (int i = 0; i < 3; ++i) {
            num = (num + a[i]) * z;
            den = (den + b[i]) * z;
        }
        return x * (num + a[3]) / (den + b[3]);
    }
    const double r = 1.0 - detail::erfc_core(y);
    return x < 0.0 ? -r : r;
}

/// Complementary error function.
inline double erfc(double x) {
    const double y = std::fabs(x);
    if (y <= 0.46875) return 1.0 - qpath::erf(x);
    const double r = detail::erfc_core(y);
    return x < 0.0 ? 2.0 - r : r;
}

}  // namespace qpath

#pragma once

// Test-only independent oracles. These deliberately avoid the library's
// evaluation paths (no Horner, no shared recurrence state) so that agreement
// is a real cross-check.

#include <cmath>
#include <vector>

namespace test_oracles {

/// k-th coefficient of F(a, b, c; y) computed from scratch as a product of
/// Pochhammer factors.
inline double series_coefficient(double a, double b, double c, int k) {
    double num = 1.0, den = 1.0;
    for (int i = 0; i < k; ++i) {
        num *= (a + i) * (b + i);
        den *= (c + i) * (i + 1);
    }
    return num / den;
}

/// Term-by-term sum of the terminating series (b = -m), each term formed
/// independently.
inline double terminating_2f1(double a, int m, double c, double y) {
    double sum = 0.0;
    for (int k = m; k >= 0; --k)
        sum += series_coefficient(a, -static_cast<double>(m), c, k) *
               std::pow(y, k);
    return sum;
}

/// Coefficient-wise derivative of a polynomial given by its coefficients.
inline std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k)
        d.push_back(static_cast<double>(k) * c[k]);
    return d;
}

inline double poly_eval(const std::vector<double>& c, double y) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + c[i];
    return acc;
}

} // namespace test_oracles

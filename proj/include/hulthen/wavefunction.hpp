#pragma once

#include <cmath>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hulthen/format.hpp"
#include "hulthen/hypergeom.hpp"
#include "hulthen/quadrature.hpp"
#include "hulthen/symbolic_norm.hpp"

namespace hulthen::wavefunction {

/// One member psi_n of the fixed-s family:
///   psi_n(y) = N_n y^s (1-y) F(2s+1+n, 1-n, 2s+1; y).
/// s is held fixed under ladder action; the physical eigenstate is the
/// selection s = s(n) from the spectrum module.
struct FamilyState {
    double s = 0.0;
    int n = 0;
    hypergeom::TerminatingSeries poly;
    double norm = 1.0;

    // coefficients of P(y) = (1-y) F(y) and its first two derivatives,
    // precomputed for analytic evaluation
    std::vector<double> p, dp, d2p;
};

/// Normalization constant by adaptive Gauss-Legendre quadrature of
/// integral_0^1 y^{2s} (1-y)^2 F^2 dy. For s < 0.25 the substitution
/// y = t^{1/(2s+1)} absorbs the y^{2s} endpoint factor exactly, which keeps
/// the small-s behavior benign; s = 0 is allowed (the integrand is then
/// plainly polynomial).
inline double normalize_quadrature(double s, int n, double tol = 1e-12) {
    if (!(s >= 0.0)) throw std::domain_error("normalize_quadrature: s must be >= 0");
    if (n < 1) throw std::domain_error("normalize_quadrature: n >= 1");
    auto series = hypergeom::family_series(s, n);
    auto integrand_plain = [&](double y) {
        double f = hypergeom::eval_2f1(series, y);
        double w = (1.0 - y) * f;
        return std::pow(y, 2.0 * s) * w * w;
    };
    oracle::QuadratureResult res;
    if (s < 0.25) {
        double inv_exp = 1.0 / (2.0 * s + 1.0);
        auto integrand_sub = [&](double t) {
            double y = std::pow(t, inv_exp);
            double f = hypergeom::eval_2f1(series, y);
            double w = (1.0 - y) * f;
            return inv_exp * w * w;
        };
        res = oracle::quadrature(integrand_sub, 0.0, 1.0, tol);
    } else {
        res = oracle::quadrature(integrand_plain, 0.0, 1.0, tol);
    }
    if (!(res.value > 0.0))
        throw numerics_error("normalize_quadrature: nonpositive integral",
                             res.error_estimate);
    return 1.0 / std::sqrt(res.value);
}

inline FamilyState make_state(double s, int n) {
    if (!(s > 0.0)) throw std::domain_error("make_state: s must be > 0");
    if (n < 1) throw std::domain_error("make_state: n must be >= 1");
    FamilyState st;
    st.s = s;
    st.n = n;
    st.poly = hypergeom::family_series(s, n);
    st.norm = normalize_quadrature(s, n);

    // P = (1-y) F
    const auto& c = st.poly.coeffs;
    st.p.assign(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        st.p[k] += c[k];
        st.p[k + 1] -= c[k];
    }
    st.dp.resize(st.p.size() > 1 ? st.p.size() - 1 : 0);
    for (std::size_t k = 1; k < st.p.size(); ++k)
        st.dp[k - 1] = static_cast<double>(k) * st.p[k];
    st.d2p.resize(st.dp.size() > 1 ? st.dp.size() - 1 : 0);
    for (std::size_t k = 1; k < st.dp.size(); ++k)
        st.d2p[k - 1] = static_cast<double>(k) * st.dp[k];
    return st;
}

namespace detail {
inline double horner(const std::vector<double>& c, double y) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + c[i];
    return acc;
}
} // namespace detail

/// psi(y) on [0, 1]; exactly 0 at both endpoints (y^s at 0 for s > 0, the
/// explicit (1-y) factor at 1).
inline double eval_psi(const FamilyState& st, double y) {
    if (!(y >= 0.0 && y <= 1.0))
        throw std::domain_error("eval_psi: y must lie in [0, 1]");
    if (y == 0.0) return 0.0;
    double f = hypergeom::eval_2f1(st.poly, y);
    return st.norm * std::pow(y, st.s) * (1.0 - y) * f;
}

struct PsiDerivs {
    double psi;
    double dpsi;
    double d2psi;
};

/// Analytic psi, psi', psi'' for y strictly inside (0, 1):
/// psi = N y^s P,  psi' = N y^{s-1} (sP + yP'),
/// psi'' = N y^{s-2} (s(s-1)P + 2syP' + y^2 P'').
inline PsiDerivs eval_psi_derivs(const FamilyState& st, double y) {
    if (!(y > 0.0 && y < 1.0))
        throw std::domain_error("eval_psi_derivs: y must lie strictly in (0, 1)");
    double P = detail::horner(st.p, y);
    double P1 = detail::horner(st.dp, y);
    double P2 = detail::horner(st.d2p, y);
    double s = st.s;
    double ys = std::pow(y, s);
    PsiDerivs d;
    d.psi = st.norm * ys * P;
    d.dpsi = st.norm * ys / y * (s * P + y * P1);
    d.d2psi = st.norm * ys / (y * y) *
              (s * (s - 1.0) * P + 2.0 * s * y * P1 + y * y * P2);
    return d;
}

/// psi as a function of the radius: y = exp(-r/a).
inline double eval_radial(const FamilyState& st, double r, double a) {
    if (!(a > 0.0)) throw std::domain_error("eval_radial: a must be > 0");
    if (!(r >= 0.0)) throw std::domain_error("eval_radial: r must be >= 0");
    return eval_psi(st, std::exp(-r / a));
}

// ---------------------------------------------------------------------------
// Grids and sampled functions
// ---------------------------------------------------------------------------

struct GridSpec {
    enum class Kind { kUniformY, kChebyshevY, kUniformX };
    Kind kind = Kind::kUniformY;
    int count = 0;
    double lo = 0.0; // y-limits for the y kinds, x-limits for kUniformX
    double hi = 1.0;

    static GridSpec uniform_y(int count, double y_lo = 0.0, double y_hi = 1.0) {
        return {Kind::kUniformY, count, y_lo, y_hi};
    }
    static GridSpec chebyshev_y(int count, double y_lo = 0.0, double y_hi = 1.0) {
        return {Kind::kChebyshevY, count, y_lo, y_hi};
    }
    static GridSpec uniform_x(int count, double x_lo, double x_hi) {
        return {Kind::kUniformX, count, x_lo, x_hi};
    }
};

inline std::vector<double> build_grid(const GridSpec& spec) {
    if (spec.count < 2) throw std::domain_error("build_grid: need >= 2 points");
    if (!(spec.lo < spec.hi))
        throw std::domain_error("build_grid: lower bound must be below upper");
    std::vector<double> y(spec.count);
    switch (spec.kind) {
        case GridSpec::Kind::kUniformY: {
            if (spec.lo < 0.0 || spec.hi > 1.0)
                throw std::domain_error("build_grid: y-range must lie in [0, 1]");
            double h = (spec.hi - spec.lo) / (spec.count - 1);
            for (int i = 0; i < spec.count; ++i) y[i] = spec.lo + h * i;
            y.back() = spec.hi;
            break;
        }
        case GridSpec::Kind::kChebyshevY: {
            if (spec.lo < 0.0 || spec.hi > 1.0)
                throw std::domain_error("build_grid: y-range must lie in [0, 1]");
            double mid = 0.5 * (spec.lo + spec.hi);
            double half = 0.5 * (spec.hi - spec.lo);
            for (int i = 0; i < spec.count; ++i) {
                double t = std::cos(std::numbers::pi *
                                    (spec.count - 1 - i) / (spec.count - 1));
                y[i] = mid + half * t;
            }
            y.front() = spec.lo;
            y.back() = spec.hi;
            break;
        }
        case GridSpec::Kind::kUniformX: {
            if (!(spec.lo >= 0.0))
                throw std::domain_error("build_grid: x-range must be >= 0");
            double h = (spec.hi - spec.lo) / (spec.count - 1);
            // descending x gives ascending y = exp(-x)
            for (int i = 0; i < spec.count; ++i)
                y[i] = std::exp(-(spec.hi - h * i));
            break;
        }
    }
    for (std::size_t i = 1; i < y.size(); ++i)
        if (!(y[i] > y[i - 1]))
            throw std::domain_error("build_grid: grid must be strictly increasing");
    return y;
}

struct StateMeta {
    double s = 0.0;
    int n = 0;
    double norm = 0.0;
};

/// Sampled function values on a strictly increasing grid in y.
struct GridFunction {
    std::vector<double> y;
    std::vector<double> values;
    std::optional<StateMeta> meta;

    GridFunction() = default;
    GridFunction(std::vector<double> grid, std::vector<double> vals,
                 std::optional<StateMeta> m = std::nullopt)
        : y(std::move(grid)), values(std::move(vals)), meta(m) {
        if (y.size() != values.size())
            throw std::invalid_argument("GridFunction: size mismatch");
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (!std::isfinite(values[i]))
                throw std::invalid_argument("GridFunction: non-finite value");
            if (i > 0 && !(y[i] > y[i - 1]))
                throw std::invalid_argument("GridFunction: grid not increasing");
        }
    }

    std::size_t size() const { return y.size(); }
};

inline GridFunction sample(const FamilyState& st, const GridSpec& spec) {
    std::vector<double> grid = build_grid(spec);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = eval_psi(st, grid[i]);
    return GridFunction(std::move(grid), std::move(vals),
                        StateMeta{st.s, st.n, st.norm});
}

/// CSV columns: y, x = -ln y, psi. The header comment records (s, n, N_n).
/// Output is locale-independent and full precision, so identical inputs
/// produce byte-identical files.
inline void write_csv(const GridFunction& gf, std::ostream& os) {
    if (gf.meta)
        os << "# s=" << format_double(gf.meta->s) << " n=" << gf.meta->n
           << " norm=" << format_double(gf.meta->norm) << "\n";
    os << "y,x,psi\n";
    for (std::size_t i = 0; i < gf.size(); ++i) {
        double x = gf.y[i] > 0.0 ? -std::log(gf.y[i])
                                 : std::numeric_limits<double>::infinity();
        os << format_double(gf.y[i]) << "," << format_double(x) << ","
           << format_double(gf.values[i]) << "\n";
    }
}

inline GridFunction read_csv(std::istream& is) {
    std::string line;
    std::vector<double> ys, vals;
    std::optional<StateMeta> meta;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            StateMeta m;
            std::size_t sp = line.find("s=");
            std::size_t np = line.find("n=");
            std::size_t op = line.find("norm=");
            if (sp != std::string::npos && np != std::string::npos &&
                op != std::string::npos) {
                m.s = parse_double(line.substr(sp + 2));
                m.n = static_cast<int>(parse_double(line.substr(np + 2)));
                m.norm = parse_double(line.substr(op + 5));
                meta = m;
            }
            continue;
        }
        if (line.rfind("y,", 0) == 0) continue; // column header
        std::stringstream ss(line);
        std::string field;
        std::vector<double> row;
        while (std::getline(ss, field, ',')) row.push_back(parse_double(field));
        if (row.size() != 3)
            throw std::invalid_argument("read_csv: expected 3 columns");
        ys.push_back(row[0]);
        vals.push_back(row[2]);
    }
    return GridFunction(std::move(ys), std::move(vals), meta);
}

} // namespace hulthen::wavefunction

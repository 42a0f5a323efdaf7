#include "numeric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace binom::numeric {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, other.prec());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

mpz_class Real::round() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

long Real::exponent2() const noexcept {
    if (!mpfr_regular_p(v_))
        return -(1L << 40);
    return mpfr_get_exp(v_) - 1;
}

namespace {
mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
} // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow2(long k, mpfr_prec_t prec) {
    Real r(1, prec);
    mpfr_mul_2si(r.v_, r.v_, k, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) {
    Real r(x.prec());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.prec());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.prec());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(joint(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

Complex log(const Complex& z) { return {log(abs(z)), atan2(z.im, z.re)}; }

Complex evaluate(const std::vector<Complex>& coeffs, const Complex& z) {
    Complex acc(z.prec());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

std::optional<IsolatedRoots> isolate_roots(const UPoly& p, mpfr_prec_t prec) {
    const int d = p.degree();
    IsolatedRoots out;
    if (d <= 0)
        return out;
    // Work with guard bits, report at the requested precision.
    const mpfr_prec_t wp = prec + 32;
    if (d == 1) {
        out.roots.emplace_back(-p[0] / p[1], prec);
        out.radii.emplace_back(Real::pow2(-static_cast<long>(prec), prec) *
                               max(abs(out.roots.back()), Real(1, prec)));
        return out;
    }
    std::vector<Complex> a, da;
    for (int i = 0; i <= d; ++i)
        a.emplace_back(p[i], wp);
    for (int i = 1; i <= d; ++i)
        da.emplace_back(p[i] * i, wp);
    // Absolute coefficient sizes bound the rounding error of evaluation.
    std::vector<Real> absa;
    for (int i = 0; i <= d; ++i)
        absa.push_back(abs(Real(p[i], wp)));

    Real cauchy(1, wp);
    for (int i = 0; i < d; ++i)
        cauchy = max(cauchy, Real(1, wp) + abs(Real(p[i] / p[d], wp)));
    std::vector<Complex> z;
    const double two_pi = 6.283185307179586;
    for (int k = 0; k < d; ++k) {
        double angle = two_pi * k / d + 0.4;
        // Slightly different moduli avoid symmetric stagnation.
        double shrink = 0.5 + 0.5 * (k + 1) / static_cast<double>(d + 1);
        Real c(wp), s(wp);
        mpfr_set_d(c.get(), std::cos(angle) * shrink, MPFR_RNDN);
        mpfr_set_d(s.get(), std::sin(angle) * shrink, MPFR_RNDN);
        z.emplace_back(c * cauchy, s * cauchy);
    }

    const long tol_exp = -static_cast<long>(wp) + 16;
    const int max_iter = 200 + 4 * static_cast<int>(wp);
    std::vector<bool> done(d, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int k = 0; k < d; ++k) {
            if (done[k])
                continue;
            Complex pv = evaluate(a, z[k]);
            if (pv.is_zero()) {
                done[k] = true;
                continue;
            }
            Complex ratio = pv / evaluate(da, z[k]);
            Complex sum(wp);
            for (int j = 0; j < d; ++j)
                if (j != k)
                    sum = sum + Complex(Real(1, wp), Real(wp)) / (z[k] - z[j]);
            Complex denom = Complex(Real(1, wp), Real(wp)) - ratio * sum;
            Complex corr = ratio / denom;
            if (!corr.re.finite() || !corr.im.finite())
                return std::nullopt;
            z[k] = z[k] - corr;
            Real scale = max(abs(z[k]), Real(1, wp));
            if (abs(corr).exponent2() < scale.exponent2() + tol_exp)
                done[k] = true;
            else
                all_done = false;
        }
        if (all_done)
            break;
    }

    const Real eps = Real::pow2(-static_cast<long>(wp) + 4, wp);
    for (int k = 0; k < d; ++k) {
        Complex pv = evaluate(a, z[k]);
        Real dv = abs(evaluate(da, z[k]));
        if (dv.is_zero())
            return std::nullopt;
        Real bound(wp), zabs = abs(z[k]), zpow(1, wp);
        for (int i = 0; i <= d; ++i) {
            bound = bound + absa[i] * zpow;
            zpow = zpow * zabs;
        }
        Real err = abs(pv) + bound * eps * Real(static_cast<long>(d + 1), wp);
        Real r = Real(static_cast<long>(d), wp) * err / dv;
        out.radii.push_back(r);
    }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k)
            if (abs(z[j] - z[k]) <= out.radii[j] + out.radii[k])
                return std::nullopt;
    for (int k = 0; k < d; ++k) {
        Complex r(prec);
        mpfr_set(r.re.get(), z[k].re.get(), MPFR_RNDN);
        mpfr_set(r.im.get(), z[k].im.get(), MPFR_RNDN);
        out.roots.push_back(std::move(r));
    }
    return out;
}

std::optional<std::vector<Complex>> solve(std::vector<std::vector<Complex>> A,
                                          std::vector<Complex> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = c;
        Real best_abs = abs(A[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Real v = abs(A[r][c]);
            if (best_abs < v) {
                best = r;
                best_abs = std::move(v);
            }
        }
        if (best_abs.is_zero())
            return std::nullopt;
        std::swap(A[c], A[best]);
        std::swap(b[c], b[best]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Complex f = A[r][c] / A[c][c];
            for (std::size_t j = c; j < n; ++j)
                A[r][j] = A[r][j] - f * A[c][j];
            b[r] = b[r] - f * b[c];
        }
    }
    std::vector<Complex> x(n, Complex(b.empty() ? 64 : b[0].prec()));
    for (std::size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s = s - A[i][j] * x[j];
        x[i] = s / A[i][i];
    }
    return x;
}

} // namespace binom::numeric

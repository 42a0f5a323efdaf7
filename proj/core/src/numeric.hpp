#pragma once

// Arbitrary-precision real and complex arithmetic on top of MPFR, used only
// by the eigenvalue discovery step of the Artinian module.

#include <optional>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "binom/upoly.hpp"

namespace binom::numeric {

class Real {
public:
    explicit Real(mpfr_prec_t prec);
    Real(long value, mpfr_prec_t prec);
    Real(const mpq_class& value, mpfr_prec_t prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    bool finite() const noexcept { return mpfr_number_p(v_) != 0; }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer.
    mpz_class round() const;
    /// floor(log2 |x|), or a very negative number for 0.
    long exponent2() const noexcept;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }

    static Real pi(mpfr_prec_t prec);
    /// 2^k.
    static Real pow2(long k, mpfr_prec_t prec);

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const mpq_class& r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

    mpfr_prec_t prec() const noexcept { return re.prec(); }
    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex operator-() const { return {-re, -im}; }
};

Real abs(const Complex& z);
/// Principal logarithm: log|z| + i arg z with arg in (-pi, pi].
Complex log(const Complex& z);

Complex evaluate(const std::vector<Complex>& coeffs, const Complex& z);

/// Roots of a square-free polynomial with rational coefficients, each paired
/// with a radius r such that the disk of radius r around it contains exactly
/// one root. Empty optional when the iteration did not converge to disjoint
/// disks at this precision.
struct IsolatedRoots {
    std::vector<Complex> roots;
    std::vector<Real> radii;
};
std::optional<IsolatedRoots> isolate_roots(const UPoly& squarefree, mpfr_prec_t prec);

/// Solves the square system A x = b by Gaussian elimination with partial
/// pivoting; empty optional when a pivot vanishes.
std::optional<std::vector<Complex>> solve(std::vector<std::vector<Complex>> A,
                                          std::vector<Complex> b);

} // namespace binom::numeric

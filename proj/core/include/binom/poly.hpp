#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "binom/errors.hpp"

namespace binom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Upper bound on the number of variables of any ring, auxiliary variables
/// used internally (homogenization, saturation) included.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a (Laurent) monomial. Fixed capacity, no allocation.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n);
    ExponentVector(std::initializer_list<int> entries);
    explicit ExponentVector(std::span<const int> entries);
    explicit ExponentVector(std::span<const long> entries);

    std::size_t size() const noexcept { return n_; }
    int operator[](std::size_t i) const noexcept { return e_[i]; }
    int& operator[](std::size_t i) noexcept { return e_[i]; }
    const int* begin() const noexcept { return e_.data(); }
    const int* end() const noexcept { return e_.data() + n_; }
    int* begin() noexcept { return e_.data(); }
    int* end() noexcept { return e_.data() + n_; }

    long degree() const noexcept;
    bool is_zero() const noexcept;
    bool is_nonnegative() const noexcept;
    /// Componentwise `*this <= other`.
    bool divides(const ExponentVector& other) const noexcept;

    ExponentVector operator+(const ExponentVector& other) const noexcept;
    ExponentVector operator-(const ExponentVector& other) const noexcept;
    ExponentVector operator-() const noexcept;
    ExponentVector& operator+=(const ExponentVector& other) noexcept;

    static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) noexcept;
    static ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) noexcept;
    static ExponentVector unit(std::size_t n, std::size_t i);

    std::vector<int> to_vector() const { return {begin(), end()}; }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept;
    /// Lexicographic, for use as a map key only (not a monomial order).
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) noexcept;

private:
    std::array<int, kMaxVars> e_{};
    std::uint8_t n_ = 0;
};

struct ExponentHash {
    std::size_t operator()(const ExponentVector& e) const noexcept;
};

/// Ring context: ordered variable names, and whether negative exponents are
/// admitted when parsing.
class Ring {
public:
    Ring(std::vector<std::string> names, bool laurent);

    static std::shared_ptr<const Ring> make(std::vector<std::string> names, bool laurent = false);
    /// Ring with generated names `prefix0, prefix1, ...`.
    static std::shared_ptr<const Ring> anonymous(std::size_t n, bool laurent = true,
                                                 const std::string& prefix = "x");

    std::size_t size() const noexcept { return names_.size(); }
    bool laurent() const noexcept { return laurent_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    bool laurent_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
    Rational coeff;
    ExponentVector exp;
};

/// Total order on exponent vectors used for storage: graded reverse
/// lexicographic, extended to Z^n (it only depends on a - b, so it agrees with
/// grevlex after shifting both arguments into N^n). Returns -1, 0 or 1.
int canonical_compare(const ExponentVector& a, const ExponentVector& b) noexcept;

/// Sparse Laurent polynomial over Q. Terms are stored in descending canonical
/// order without duplicate exponents or zero coefficients; the empty term list
/// is the zero polynomial. Values are immutable once built.
class LaurentPoly {
public:
    explicit LaurentPoly(RingPtr ring);

    static LaurentPoly constant(RingPtr ring, const Rational& c);
    static LaurentPoly monomial(RingPtr ring, const ExponentVector& e, const Rational& c = 1);
    static LaurentPoly variable(RingPtr ring, std::size_t i);
    /// Sorts, merges duplicate exponents and drops zero coefficients.
    static LaurentPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return ring_->size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// All exponents nonnegative.
    bool is_polynomial() const noexcept;
    /// Homogeneous in the standard grading.
    bool is_homogeneous() const noexcept;
    /// Leading term under the canonical order. Requires a nonzero polynomial.
    const Term& leading() const;

    /// Componentwise minimum of the exponents (zero vector for f = 0).
    ExponentVector min_exponent() const;
    /// The product with the monomial of least degree making every exponent
    /// nonnegative and removing common variable factors: f * x^(-min_exponent).
    LaurentPoly cleared() const;
    /// The product with the monomial of least degree making every exponent
    /// nonnegative; polynomials are returned unchanged.
    LaurentPoly nonnegative() const;
    LaurentPoly shifted(const ExponentVector& by) const;
    LaurentPoly scaled(const Rational& c) const;
    /// Divided by the leading coefficient.
    LaurentPoly monic() const;
    /// Same terms, reinterpreted over another ring with the same variable count.
    LaurentPoly with_ring(RingPtr ring) const;

    LaurentPoly pow(unsigned k) const;

    LaurentPoly operator+(const LaurentPoly& g) const;
    LaurentPoly operator-(const LaurentPoly& g) const;
    LaurentPoly operator*(const LaurentPoly& g) const;
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);

    /// Printed form: explicit `*` and `^`, terms in canonical order,
    /// e.g. `x^2 - 2*x*z + z^2`.
    std::string to_string() const;

private:
    LaurentPoly(RingPtr ring, std::vector<Term> sorted_terms);
    void check_ring(const LaurentPoly& g) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// x^u - lambda * x^v with u != v and lambda != 0. Monomials and 0 are not
/// binomials.
struct Binomial {
    ExponentVector u;
    ExponentVector v;
    Rational lambda;

    LaurentPoly to_poly(RingPtr ring) const;
    friend bool operator==(const Binomial& a, const Binomial& b) = default;
};

/// Parses an arithmetic expression over the ring's variables. Operators
/// `+ - * / ^` and parentheses; division only by nonzero constants;
/// negative exponents only in a Laurent ring and only on monomials.
LaurentPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Sum of the terms of f maximizing <omega, v>.
LaurentPoly initial_form(const LaurentPoly& f, std::span<const Rational> omega);
LaurentPoly initial_form(const LaurentPoly& f, std::span<const long> omega);

/// Binomial decomposition of a two-term polynomial, normalized so the
/// canonically leading term has coefficient 1.
std::optional<Binomial> is_binomial(const LaurentPoly& f);

std::string exponent_to_string(const ExponentVector& e, const Ring& ring);

} // namespace binom

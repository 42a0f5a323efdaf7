#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace binom {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros (the zero polynomial is empty).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpq_class> coeffs);
    static UPoly monomial(const mpq_class& c, std::size_t degree);
    /// t - root
    static UPoly linear(const mpq_class& root);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    const mpq_class& operator[](std::size_t i) const { return c_[i]; }
    const mpq_class& leading() const { return c_.back(); }

    UPoly monic() const;
    UPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Quotient and remainder.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);
/// Yun's square-free factorization: returns a_1, a_2, ... with
/// p = lc * prod a_k^k, each a_k monic, square-free and pairwise coprime.
std::vector<UPoly> squarefree_factorization(const UPoly& p);

} // namespace binom

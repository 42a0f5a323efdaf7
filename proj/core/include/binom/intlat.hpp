#pragma once

#include <optional>
#include <span>
#include <vector>

#include "binom/matrix.hpp"
#include "binom/upoly.hpp"

namespace binom {

/// Lattice generated by the rows of `basis`; rows are linearly independent.
struct LatticeBasis {
    IntMatrix basis;

    std::size_t rank() const noexcept { return basis.rows(); }
    std::size_t ambient() const noexcept { return basis.cols(); }
};

struct HermiteForm {
    IntMatrix H;  ///< Row-style HNF of A.
    IntMatrix U;  ///< Unimodular with H = U * A.
};

/// Row-style Hermite normal form: upper triangular (echelon), positive
/// pivots, entries above a pivot reduced into [0, pivot). Zero rows last.
HermiteForm hnf(const IntMatrix& A);

/// Lattice spanned by arbitrary (possibly dependent) generator rows, returned
/// as the nonzero rows of their HNF.
LatticeBasis lattice_from_generators(const IntMatrix& generators, std::size_t ambient);

/// Equality of row lattices.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

/// Basis (in HNF) of {v in Z^n : A v = 0}. The result is saturated.
LatticeBasis kernel_lattice(const RatMatrix& A);

/// Unimodular M with M v = (0, ..., 0, 1). Requires gcd(v) = 1.
IntMatrix unimodular_extension(std::span<const mpz_class> v);

/// Extends a basis of a saturated lattice L to a unimodular matrix whose
/// first rank(L) rows are the given basis.
IntMatrix complete_to_unimodular(const LatticeBasis& saturated);

/// delta-LLL reduction (exact integer arithmetic), 1/4 < delta <= 1.
LatticeBasis lll(const LatticeBasis& B, const mpq_class& delta = mpq_class(3, 4));

/// Coordinates c with c * basis = v, when v lies in the lattice.
std::optional<std::vector<mpz_class>> lattice_coordinates(const LatticeBasis& L,
                                                          std::span<const mpz_class> v);

/// Whether the lattice equals Z^n intersected with its rational span.
bool is_saturated(const LatticeBasis& L);

mpz_class determinant(const IntMatrix& A);
IntMatrix inverse_unimodular(const IntMatrix& A);

// Exact rational matrix algebra.
mpq_class determinant(const RatMatrix& A);
std::size_t rank(const RatMatrix& A);
mpq_class trace(const RatMatrix& A);
RatMatrix inverse(const RatMatrix& A);
/// A^k for any integer k (negative powers require invertibility).
RatMatrix power(const RatMatrix& A, long k);
/// det(t I - A), monic of degree n.
UPoly characteristic_polynomial(const RatMatrix& A);
/// Rows spanning the right null space {v : A v = 0} over Q.
RatMatrix nullspace(const RatMatrix& A);
bool is_scalar(const RatMatrix& A);
/// p(A).
RatMatrix evaluate(const UPoly& p, const RatMatrix& A);

std::vector<mpz_class> to_integers(std::span<const int> v);

} // namespace binom

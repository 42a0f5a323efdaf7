#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "binom/completeness.hpp"
#include "binom/groebner.hpp"
#include "binom/intlat.hpp"

namespace binom {

struct ArtinianOptions {
    std::uint64_t seed = 1;
    long precision_bits = 128;
    long max_precision_bits = 4096;
    /// Relations with entries above 2^box_bits are not searched for.
    int box_bits = 20;
    mpq_class discovery_delta{99, 100};
    int separation_attempts = 32;
};

struct QuotientBasis {
    std::vector<ExponentVector> standard_monomials;
    /// Reduced grevlex basis of the saturated representative.
    GroebnerBasisPtr gb;

    std::size_t size() const noexcept { return standard_monomials.size(); }
};

/// Commuting invertible matrices of the same size.
struct MulMatrices {
    std::vector<RatMatrix> mats;
    std::vector<mpq_class> dets;

    /// Checks squareness, equal sizes, invertibility and commutation.
    static MulMatrices make(std::vector<RatMatrix> mats);

    std::size_t count() const noexcept { return mats.size(); }
    std::size_t dim() const noexcept { return mats.empty() ? 0 : mats.front().rows(); }
};

struct ScalarRelationLattice {
    LatticeBasis basis;
    std::vector<mpq_class> lambdas;
    Completeness completeness = Completeness::CertifiedTrivial;
    /// Largest working precision used by numeric discovery (0 if none).
    long precision_bits = 0;
};

QuotientBasis quotient_basis(const IdealHandle& K);
MulMatrices multiplication_matrices(const IdealHandle& K, const QuotientBasis& B);

/// prod_i M_i^{e_i}, exactly.
RatMatrix power_product(const MulMatrices& M, std::span<const mpz_class> e);

/// prod_i lambdas_i^{coords_i}.
mpq_class character_value(std::span<const mpq_class> lambdas, std::span<const mpz_class> coords);

/// Replaces a full-rank basis by its Hermite normal form and transports the
/// character values along.
void to_hermite_with_character(IntMatrix& rows, std::vector<mpq_class>& lambdas);

/// {e : prod M_i^{e_i} is a scalar matrix}, with the scalar of each basis
/// vector. The basis is in Hermite normal form.
ScalarRelationLattice scalar_relation_lattice(const MulMatrices& M,
                                              const ArtinianOptions& options = {});

/// {e : prod M_i^{e_i} has a single eigenvalue}, with that eigenvalue.
ScalarRelationLattice radical_binomial_lattice(const MulMatrices& M,
                                               const ArtinianOptions& options = {});

} // namespace binom

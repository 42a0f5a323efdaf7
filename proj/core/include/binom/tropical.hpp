#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "binom/completeness.hpp"
#include "binom/groebner.hpp"
#include "binom/intlat.hpp"

namespace binom {

struct TropicalOptions {
    std::uint64_t seed = 1;
    /// Entry bound of the exhaustive ray search used when projections do
    /// not determine the rays.
    int fallback_bound = 10;
    /// Attempts at cutting an ideal down to a curve with random linear forms.
    int retry_budget = 64;
};

/// Primitive generators of the rays of a one-dimensional tropical variety,
/// sorted lexicographically.
struct RaySet {
    std::vector<std::vector<long>> rays;
    Completeness completeness = Completeness::CertifiedTrivial;
};

/// Linearly independent integer vectors spanning span(T(I)) over Q.
struct SpanBasis {
    std::vector<std::vector<long>> vectors;
    Completeness completeness = Completeness::CertifiedTrivial;
};

/// Whether omega lies in T(I). The ideal must already be saturated by the
/// product of the variables.
bool in_tropical_variety(const IdealHandle& ideal, std::span<const long> omega);

/// Rays of T(I) for a Laurent ideal whose tropical variety is a curve.
RaySet tropical_curve_rays(const IdealHandle& ideal, const TropicalOptions& options = {});

/// A nonzero primitive vector of T(I); requires dim T(I) > 0.
std::vector<long> find_primitive_tropical_vector(const IdealHandle& ideal,
                                                 const TropicalOptions& options = {});
std::vector<long> find_primitive_tropical_vector(const IdealHandle& ideal, std::uint64_t seed);

/// Basis of the linear span of T(I).
SpanBasis tropical_span(const IdealHandle& ideal, const TropicalOptions& options = {});

/// The ideal in new variables y_i = prod_j x_j^{M_ij} (M unimodular), as the
/// saturated polynomial representative of its Laurent extension.
IdealHandle monomial_change(const IdealHandle& ideal, const IntMatrix& M,
                            const std::string& prefix = "y");

} // namespace binom

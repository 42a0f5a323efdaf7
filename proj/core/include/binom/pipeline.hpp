#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binom/artinian.hpp"
#include "binom/tropical.hpp"

namespace binom {

struct PipelineOptions {
    std::uint64_t seed = 1;
    int fallback_bound = 10;
    int retry_budget = 64;
    long precision_bits = 128;
    long max_precision_bits = 4096;
    int box_bits = 20;
    /// Largest degree tried when searching for a witness binomial in I when
    /// its Laurent extension is the whole ring.
    int witness_degree_cap = 10;

    TropicalOptions tropical() const;
    ArtinianOptions artinian() const;
};

enum class PartStatus { UnitLaurent, Trivial, Lattice };
std::string to_string(PartStatus s);

/// Binomial part of the Laurent extension I*T: the binomials x^c - phi(c)
/// for c in a lattice L, with phi a character on L.
struct BinomialPartResult {
    PartStatus status = PartStatus::Trivial;
    /// Rows of a basis of L in Hermite normal form.
    std::vector<ExponentVector> lattice_basis;
    std::vector<mpq_class> lambdas;
    /// x^c - lambda over the Laurent ring, one per basis row.
    std::vector<LaurentPoly> generators;
    /// Whether each generator reduces to 0 modulo the saturated ideal.
    std::vector<bool> certified;
    Completeness completeness = Completeness::CertifiedTrivial;

    // Intermediate data, reported for diagnostics.
    std::vector<std::vector<long>> tropical_span;
    std::size_t quotient_dimension = 0;
    long precision_bits = 0;
};

BinomialPartResult binomial_part_laurent(const IdealHandle& ideal,
                                         const PipelineOptions& options = {});

/// phi(c) when c lies in the lattice of the result.
std::optional<mpq_class> character_at(const BinomialPartResult& result,
                                      std::span<const long> exponent);

/// Whether x^u - lambda x^v lies in the Laurent extension described by the result.
bool describes(const BinomialPartResult& result, const Binomial& b);

struct BinomialDecision {
    bool contains = false;
    /// A binomial of I itself (nonnegative exponents).
    std::optional<LaurentPoly> witness;
    bool witness_certified = false;
    PartStatus status = PartStatus::Trivial;
    Completeness completeness = Completeness::CertifiedTrivial;
    std::string diagnostic;
    BinomialPartResult part;
};

BinomialDecision contains_binomial(const IdealHandle& ideal, const PipelineOptions& options = {});

/// Generators of Bin(I) inside the polynomial ring, for I = (I : x1...xn).
std::vector<LaurentPoly> binomial_part_contract(const IdealHandle& ideal,
                                                const PipelineOptions& options = {});

/// Whether I contains a monomial.
bool contains_monomial(const IdealHandle& ideal);

/// All binomials x^u - lambda x^v of I with deg u, deg v <= D, u the larger
/// exponent under grevlex.
std::vector<Binomial> brute_force_binomials(const IdealHandle& ideal, int max_degree);

} // namespace binom

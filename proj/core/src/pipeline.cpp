#include "binom/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace binom {
namespace {

RingPtr laurent_ring(const RingPtr& ring) {
    return ring->laurent() ? ring : Ring::make(ring->names(), true);
}

LaurentPoly product_of_variables(const RingPtr& ring) {
    return LaurentPoly::monomial(ring, ExponentVector(std::vector<int>(ring->size(), 1)));
}

// Monomials of degree <= D in n variables.
std::vector<ExponentVector> monomials_up_to(std::size_t n, int D) {
    std::vector<ExponentVector> out{ExponentVector(n)};
    for (std::size_t begin = 0; begin < out.size(); ++begin) {
        ExponentVector e = out[begin];
        if (e.degree() >= D)
            continue;
        // Raise only variables at or after the last nonzero one: each
        // monomial is generated once.
        std::size_t last = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0)
                last = i;
        for (std::size_t i = last; i < n; ++i) {
            ExponentVector f = e + ExponentVector::unit(n, i);
            out.push_back(f);
        }
    }
    return out;
}

} // namespace

TropicalOptions PipelineOptions::tropical() const {
    TropicalOptions t;
    t.seed = seed;
    t.fallback_bound = fallback_bound;
    t.retry_budget = retry_budget;
    return t;
}

ArtinianOptions PipelineOptions::artinian() const {
    ArtinianOptions a;
    a.seed = seed;
    a.precision_bits = precision_bits;
    a.max_precision_bits = max_precision_bits;
    a.box_bits = box_bits;
    return a;
}

std::string to_string(PartStatus s) {
    switch (s) {
    case PartStatus::UnitLaurent:
        return "UNIT_LAURENT";
    case PartStatus::Trivial:
        return "TRIVIAL";
    case PartStatus::Lattice:
        return "LATTICE";
    }
    return "unknown";
}

BinomialPartResult binomial_part_laurent(const IdealHandle& ideal, const PipelineOptions& options) {
    const std::size_t n = ideal.nvars();
    BinomialPartResult out;
    IdealHandle J = saturate_by_variables(ideal);
    if (J.is_unit()) {
        out.status = PartStatus::UnitLaurent;
        return out;
    }
    if (J.is_zero() || J.gb(MonomialOrder::grevlex())->is_zero()) {
        // T(0) is everything, so no binomial direction survives.
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long> e(n, 0);
            e[i] = 1;
            out.tropical_span.push_back(e);
        }
        out.status = PartStatus::Trivial;
        out.completeness = Completeness::HeuristicComplete;
        return out;
    }

    SpanBasis span = tropical_span(J, options.tropical());
    out.tropical_span = span.vectors;
    out.completeness = span.completeness;
    RatMatrix S(span.vectors.size(), n);
    for (std::size_t r = 0; r < span.vectors.size(); ++r)
        for (std::size_t j = 0; j < n; ++j)
            S(r, j) = span.vectors[r][j];
    LatticeBasis L = kernel_lattice(S);
    const std::size_t m = L.rank();
    if (m == 0) {
        out.status = PartStatus::Trivial;
        out.completeness = weakest(out.completeness, Completeness::HeuristicComplete);
        return out;
    }

    // y_j = x^{B_j}; the first m rows of B are the HNF basis of L.
    IntMatrix B = complete_to_unimodular(L);
    IdealHandle changed = monomial_change(J, B);
    std::vector<std::size_t> keep(m);
    std::iota(keep.begin(), keep.end(), 0);
    IdealHandle K = restrict_to(eliminate(changed, keep), keep);
    QuotientBasis QB = quotient_basis(K);
    out.quotient_dimension = QB.size();
    MulMatrices M = multiplication_matrices(K, QB);
    ScalarRelationLattice E = scalar_relation_lattice(M, options.artinian());
    out.completeness = weakest(out.completeness, E.completeness);
    out.precision_bits = E.precision_bits;
    if (E.basis.rank() == 0) {
        out.status = PartStatus::Trivial;
        out.completeness = weakest(out.completeness, Completeness::HeuristicComplete);
        return out;
    }

    IntMatrix rows = E.basis.basis * L.basis;
    std::vector<mpq_class> lambdas = E.lambdas;
    to_hermite_with_character(rows, lambdas);

    const RingPtr T = laurent_ring(ideal.ring());
    auto gb = J.gb(MonomialOrder::grevlex());
    out.status = PartStatus::Lattice;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        ExponentVector c(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows(r, j).fits_sint_p())
                throw BudgetExhausted("lattice exponent too large");
            c[j] = static_cast<int>(rows(r, j).get_si());
        }
        LaurentPoly g = LaurentPoly::monomial(T, c) - LaurentPoly::constant(T, lambdas[r]);
        bool ok = gb->normal_form(g.cleared().with_ring(ideal.ring())).is_zero();
        if (!ok)
            throw Error("internal: binomial generator failed certification: " + g.to_string());
        out.lattice_basis.push_back(c);
        out.lambdas.push_back(lambdas[r]);
        out.generators.push_back(std::move(g));
        out.certified.push_back(ok);
    }
    return out;
}

std::optional<mpq_class> character_at(const BinomialPartResult& result,
                                      std::span<const long> exponent) {
    if (result.status == PartStatus::UnitLaurent)
        throw ContractViolation("the Laurent extension is the unit ideal");
    const std::size_t n = exponent.size();
    std::vector<mpz_class> target(exponent.begin(), exponent.end());
    if (result.lattice_basis.empty()) {
        bool zero = std::all_of(target.begin(), target.end(), [](const auto& x) { return x == 0; });
        return zero ? std::optional<mpq_class>(1) : std::nullopt;
    }
    IntMatrix basis(0, n);
    for (const auto& c : result.lattice_basis) {
        std::vector<mpz_class> row(c.begin(), c.end());
        basis.append_row(row);
    }
    auto coords = lattice_coordinates(LatticeBasis{basis}, target);
    if (!coords)
        return std::nullopt;
    return character_value(result.lambdas, *coords);
}

bool describes(const BinomialPartResult& result, const Binomial& b) {
    if (result.status == PartStatus::UnitLaurent)
        return true;
    std::vector<long> diff;
    for (std::size_t i = 0; i < b.u.size(); ++i)
        diff.push_back(static_cast<long>(b.u[i]) - b.v[i]);
    auto phi = character_at(result, diff);
    return phi && *phi == b.lambda;
}

BinomialDecision contains_binomial(const IdealHandle& ideal, const PipelineOptions& options) {
    BinomialDecision out;
    if (ideal.is_zero() || ideal.gb(MonomialOrder::grevlex())->is_zero()) {
        out.diagnostic = "zero ideal";
        return out;
    }
    out.part = binomial_part_laurent(ideal, options);
    out.status = out.part.status;
    out.completeness = out.part.completeness;
    const RingPtr& R = ideal.ring();
    if (out.part.status == PartStatus::Trivial)
        return out;

    if (out.part.status == PartStatus::Lattice) {
        // Each generator, cleared, times a power of x1...xn lies in I.
        std::vector<LaurentPoly> cleared;
        for (const auto& g : out.part.generators)
            cleared.push_back(g.cleared().with_ring(R));
        std::sort(cleared.begin(), cleared.end(), [](const auto& a, const auto& b) {
            return a.leading().exp.degree() < b.leading().exp.degree();
        });
        const LaurentPoly x = product_of_variables(R);
        for (const auto& g : cleared) {
            LaurentPoly w = g;
            for (int k = 0; k <= 64; ++k) {
                if (ideal.contains(w)) {
                    out.contains = true;
                    out.witness = w;
                    out.witness_certified = true;
                    return out;
                }
                w = w * x;
            }
        }
        throw Error("internal: no monomial multiple of a Laurent binomial lies in the ideal");
    }

    // I*T = T: a binomial of I exists; find one by degree escalation.
    for (int D = 1; D <= options.witness_degree_cap; ++D) {
        auto found = brute_force_binomials(ideal, D);
        if (!found.empty()) {
            LaurentPoly w = found.front().to_poly(R);
            out.contains = true;
            out.witness_certified = ideal.contains(w);
            out.witness = std::move(w);
            return out;
        }
    }
    out.completeness = Completeness::FallbackExhausted;
    out.diagnostic = "no witness binomial up to degree " + std::to_string(options.witness_degree_cap) +
                     " although the Laurent extension is the unit ideal";
    return out;
}

std::vector<LaurentPoly> binomial_part_contract(const IdealHandle& ideal,
                                                const PipelineOptions& options) {
    if (!ideal.same_ideal(saturate(ideal, product_of_variables(ideal.ring()))))
        throw ContractViolation("not saturated: (I : x1...xn) differs from I");
    BinomialPartResult part = binomial_part_laurent(ideal, options);
    switch (part.status) {
    case PartStatus::UnitLaurent:
        return {LaurentPoly::constant(ideal.ring(), 1)};
    case PartStatus::Trivial:
        return {};
    case PartStatus::Lattice:
        break;
    }
    std::vector<LaurentPoly> cleared;
    for (const auto& g : part.generators)
        cleared.push_back(g.cleared().with_ring(ideal.ring()));
    // Bin(I) = Bin(I*T) intersected with the polynomial ring.
    IdealHandle bin = saturate_by_variables(IdealHandle(ideal.ring(), cleared));
    return reduced_gb(bin, MonomialOrder::grevlex());
}

bool contains_monomial(const IdealHandle& ideal) {
    return saturate_by_variables(ideal).is_unit();
}

std::vector<Binomial> brute_force_binomials(const IdealHandle& ideal, int max_degree) {
    if (max_degree < 1)
        throw ContractViolation("degree bound must be at least 1");
    const RingPtr& R = ideal.ring();
    auto gb = ideal.gb(MonomialOrder::grevlex());
    std::vector<ExponentVector> mons = monomials_up_to(R->size(), max_degree);
    // Group monomials by the monic normal form; zero normal forms together.
    std::map<std::string, std::vector<std::pair<ExponentVector, mpq_class>>> groups;
    for (const auto& e : mons) {
        LaurentPoly nf = gb->normal_form(LaurentPoly::monomial(R, e));
        if (nf.is_zero()) {
            groups[""].push_back({e, 1});
            continue;
        }
        mpq_class lead = nf.leading().coeff;
        groups["=" + nf.monic().to_string()].push_back({e, lead});
    }
    std::vector<Binomial> out;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
            return canonical_compare(a.first, b.first) > 0;
        });
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                out.push_back({members[a].first, members[b].first,
                               members[a].second / members[b].second});
    }
    std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
        long da = std::max(a.u.degree(), a.v.degree()), db = std::max(b.u.degree(), b.v.degree());
        if (da != db)
            return da < db;
        if (int c = canonical_compare(a.u, b.u))
            return c < 0;
        return canonical_compare(a.v, b.v) < 0;
    });
    return out;
}

} // namespace binom

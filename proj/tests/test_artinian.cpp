#include <gtest/gtest.h>

#include "binom/artinian.hpp"
#include "test_support.hpp"

using namespace binom;
using namespace binom::testing;

namespace {

RingPtr ys(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i)
        names.push_back("y" + std::to_string(i));
    return Ring::make(names);
}

MulMatrices matrices_of(const IdealHandle& K) { return multiplication_matrices(K, quotient_basis(K)); }

std::vector<ExponentVector> exps(std::initializer_list<ExponentVector> e) { return e; }

TEST(QuotientBasis, Examples) {
    auto R = ys(1);
    QuotientBasis a = quotient_basis(ideal(R, {"y1^2 - 2"}));
    EXPECT_EQ(a.standard_monomials, exps({ExponentVector{0}, ExponentVector{1}}));
    EXPECT_EQ(quotient_basis(ideal(R, {"y1 - 1"})).size(), 1u);
    QuotientBasis c = quotient_basis(ideal(ys(2), {"y1 - 2", "y2 - 3"}));
    EXPECT_EQ(c.standard_monomials, exps({ExponentVector{0, 0}}));
}

TEST(QuotientBasis, RejectsNonArtinianAndUnit) {
    EXPECT_THROW(quotient_basis(ideal(ys(2), {"y1 - 2"})), ContractViolation);
    EXPECT_THROW(quotient_basis(ideal(ys(1), {"y1^2"})), ContractViolation);
}

TEST(MultiplicationMatrices, Examples) {
    auto R = ys(1);
    MulMatrices a = matrices_of(ideal(R, {"y1^2 - 2"}));
    EXPECT_EQ(a.mats[0], (RatMatrix{{0, 2}, {1, 0}}));
    EXPECT_EQ(power(a.mats[0], 2), RatMatrix::identity(2).scaled(2));
    MulMatrices b = matrices_of(ideal(R, {"y1^2 + y1 + 1"}));
    EXPECT_EQ(b.mats[0], (RatMatrix{{0, -1}, {1, -1}}));
    EXPECT_EQ(power(b.mats[0], 3), RatMatrix::identity(2));
    EXPECT_EQ(matrices_of(ideal(R, {"y1 - 1"})).mats[0], (RatMatrix{{1}}));
}

TEST(MulMatrices, ConstructionChecks) {
    EXPECT_THROW(MulMatrices::make({RatMatrix{{1, 1}, {0, 1}}, RatMatrix{{1, 0}, {1, 1}}}),
                 ContractViolation);
    EXPECT_THROW(MulMatrices::make({RatMatrix{{1, 0}, {0, 0}}}), ContractViolation);
    EXPECT_THROW(MulMatrices::make({RatMatrix{{1}}, RatMatrix::identity(2)}), DimensionMismatch);
    MulMatrices ok = MulMatrices::make({RatMatrix{{2, 0}, {0, 3}}, RatMatrix{{1, 0}, {0, 5}}});
    EXPECT_EQ(ok.dets, (std::vector<mpq_class>{6, 5}));
}

TEST(ScalarRelationLattice, Examples) {
    auto one = scalar_relation_lattice(MulMatrices::make({RatMatrix{{1}}}));
    EXPECT_EQ(one.basis.basis, (IntMatrix{{1}}));
    EXPECT_EQ(one.lambdas, (std::vector<mpq_class>{1}));
    EXPECT_EQ(one.completeness, Completeness::CertifiedTrivial);

    auto cube = scalar_relation_lattice(MulMatrices::make({RatMatrix{{0, -1}, {1, -1}}}));
    EXPECT_EQ(cube.basis.basis, (IntMatrix{{3}}));
    EXPECT_EQ(cube.lambdas, (std::vector<mpq_class>{1}));

    auto sqrt2 = scalar_relation_lattice(MulMatrices::make({RatMatrix{{0, 2}, {1, 0}}}));
    EXPECT_EQ(sqrt2.basis.basis, (IntMatrix{{2}}));
    EXPECT_EQ(sqrt2.lambdas, (std::vector<mpq_class>{2}));

    auto none = scalar_relation_lattice(matrices_of(ideal(ys(1), {"(y1 - 1)*(y1 - 2)"})));
    EXPECT_EQ(none.basis.rank(), 0u);
    EXPECT_EQ(none.completeness, Completeness::HeuristicComplete);
}

TEST(ScalarRelationLattice, NonSemisimpleIsNeverScalar) {
    // (y - 1)^2: M has the single eigenvalue 1 but no power is the identity.
    auto r = scalar_relation_lattice(matrices_of(ideal(ys(1), {"(y1 - 1)^2"})));
    EXPECT_EQ(r.basis.rank(), 0u);
}

TEST(ScalarRelationLattice, TwoVariables) {
    // Points (1, 2) and (-1, 2): y1^2 = 1 and y2 = 2 on both.
    auto r = scalar_relation_lattice(matrices_of(ideal(ys(2), {"y1^2 - 1", "y2 - 2"})));
    EXPECT_EQ(r.basis.basis, (IntMatrix{{2, 0}, {0, 1}}));
    EXPECT_EQ(r.lambdas, (std::vector<mpq_class>{1, 2}));
}

TEST(ScalarRelationLattice, ComplexEigenvaluesOfEqualModulus) {
    // Roots of y^2 - 2y + 2 are 1 +- i; (1+i)^4 = -4.
    auto r = scalar_relation_lattice(matrices_of(ideal(ys(1), {"y1^2 - 2*y1 + 2"})));
    EXPECT_EQ(r.basis.basis, (IntMatrix{{4}}));
    EXPECT_EQ(r.lambdas, (std::vector<mpq_class>{-4}));
}

TEST(ScalarRelationLattice, RootsOfUnityAndSquareRoot) {
    // y1 a primitive 12th root of unity, y2 = +-sqrt(3).
    auto r = scalar_relation_lattice(matrices_of(ideal(ys(2), {"y1^4 - y1^2 + 1", "y2^2 - 3"})));
    EXPECT_EQ(r.basis.basis, (IntMatrix{{6, 0}, {0, 2}}));
    EXPECT_EQ(r.lambdas, (std::vector<mpq_class>{-1, 3}));
    EXPECT_EQ(r.completeness, Completeness::HeuristicComplete);
}

TEST(RadicalBinomialLattice, Examples) {
    auto a = radical_binomial_lattice(MulMatrices::make({RatMatrix{{0, -1}, {1, 2}}}));
    EXPECT_EQ(a.basis.basis, (IntMatrix{{1}}));
    EXPECT_EQ(a.lambdas, (std::vector<mpq_class>{1}));
    auto b = radical_binomial_lattice(MulMatrices::make({RatMatrix{{0, 2}, {1, 0}}}));
    EXPECT_EQ(b.basis.basis, (IntMatrix{{2}}));
    EXPECT_EQ(b.lambdas, (std::vector<mpq_class>{2}));
    auto c = radical_binomial_lattice(MulMatrices::make({RatMatrix{{1}}}));
    EXPECT_EQ(c.basis.basis, (IntMatrix{{1}}));
    EXPECT_EQ(c.lambdas, (std::vector<mpq_class>{1}));
}

TEST(Character, HermiteTransport) {
    IntMatrix rows{{2, 1}, {0, 3}};
    std::vector<mpq_class> lambdas{mpq_class(1, 2), 3};
    IntMatrix original = rows;
    to_hermite_with_character(rows, lambdas);
    EXPECT_EQ(rows, hnf(original).H);
    // Each new row's value agrees with its coordinates in the old basis.
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        auto c = lattice_coordinates(LatticeBasis{original}, rows.row(i));
        ASSERT_TRUE(c);
        std::vector<mpq_class> old{mpq_class(1, 2), 3};
        EXPECT_EQ(character_value(old, *c), lambdas[i]);
    }
}

// Random Artinian ideals of length at most 6 in at most 3 variables: either a
// full-rank lattice ideal or a random zero-dimensional complete intersection.
std::optional<IdealHandle> random_artinian(std::uint64_t seed) {
    if (seed % 2 == 0) {
        for (std::uint64_t s = seed * 101;; ++s) {
            LatticeIdeal L = random_lattice_ideal(s);
            if (L.basis.rows() == L.basis.cols() && L.basis.cols() <= 3) {
                IdealHandle K = saturate_by_variables(L.ideal);
                if (quotient_basis(K).size() <= 6)
                    return K;
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::size_t m = 1 + seed % 3;
    RingPtr R = ys(m);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<LaurentPoly> gens;
        for (std::size_t k = 0; k < m; ++k)
            gens.push_back(random_poly(rng, R, 3, 2, 3, 2));
        IdealHandle K = saturate_by_variables(IdealHandle(R, gens));
        if (!K.is_unit() && krull_dimension(K) == 0 && quotient_basis(K).size() <= 6)
            return K;
    }
    return std::nullopt;
}

class ArtinianProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ArtinianProperties, AgreesWithBoxSearch) {
    auto K = random_artinian(GetParam());
    if (!K)
        GTEST_SKIP() << "no Artinian ideal drawn";
    MulMatrices M = matrices_of(*K);
    ScalarRelationLattice L = scalar_relation_lattice(M);
    const std::size_t m = M.count();
    const int B = m == 3 ? 5 : 8;
    std::vector<mpz_class> e(m);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == m) {
            RatMatrix P = power_product(M, e);
            auto coords = L.basis.rank() ? lattice_coordinates(L.basis, e) : std::nullopt;
            bool zero = std::all_of(e.begin(), e.end(), [](const auto& x) { return x == 0; });
            bool in_lattice = zero || coords.has_value();
            ASSERT_EQ(is_scalar(P), in_lattice);
            if (coords)
                EXPECT_EQ(P(0, 0), character_value(L.lambdas, *coords));
            return;
        }
        for (int v = -B; v <= B; ++v) {
            e[i] = v;
            walk(i + 1);
        }
    };
    walk(0);
}

TEST_P(ArtinianProperties, ExactSoundnessAndDeterminants) {
    auto K = random_artinian(GetParam());
    if (!K)
        GTEST_SKIP() << "no Artinian ideal drawn";
    MulMatrices M = matrices_of(*K);
    ScalarRelationLattice L = scalar_relation_lattice(M);
    const std::size_t ell = M.dim();
    for (std::size_t i = 0; i < L.basis.rank(); ++i) {
        auto c = L.basis.basis.row(i);
        RatMatrix P = power_product(M, c);
        EXPECT_EQ(P, RatMatrix::identity(ell).scaled(L.lambdas[i]));
        mpq_class lhs = 1, rhs = 1;
        for (std::size_t k = 0; k < ell; ++k)
            lhs *= L.lambdas[i];
        for (std::size_t j = 0; j < M.count(); ++j) {
            long ej = c[j].get_si();
            for (long s = 0; s < std::abs(ej); ++s)
                rhs = ej > 0 ? mpq_class(rhs * M.dets[j]) : mpq_class(rhs / M.dets[j]);
        }
        EXPECT_EQ(lhs, rhs);
    }
    // Multiplicativity on random combinations of basis vectors.
    std::mt19937_64 rng(GetParam());
    std::uniform_int_distribution<int> a(-2, 2);
    for (int t = 0; t < 5 && L.basis.rank(); ++t) {
        std::vector<mpz_class> coords(L.basis.rank());
        for (auto& x : coords)
            x = a(rng);
        std::vector<mpz_class> e(M.count(), 0);
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] += coords[i] * L.basis.basis(i, j);
        EXPECT_EQ(power_product(M, e), RatMatrix::identity(ell).scaled(character_value(L.lambdas, coords)));
    }
}

TEST_P(ArtinianProperties, RadicalLatticeContainsScalarLattice) {
    auto K = random_artinian(GetParam());
    if (!K)
        GTEST_SKIP() << "no Artinian ideal drawn";
    MulMatrices M = matrices_of(*K);
    ScalarRelationLattice S = scalar_relation_lattice(M);
    ScalarRelationLattice R = radical_binomial_lattice(M);
    for (std::size_t i = 0; i < S.basis.rank(); ++i) {
        auto c = lattice_coordinates(R.basis, S.basis.basis.row(i));
        ASSERT_TRUE(c);
        EXPECT_EQ(character_value(R.lambdas, *c), S.lambdas[i]);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ArtinianProperties, ::testing::Range<std::uint64_t>(1, 25));

} // namespace

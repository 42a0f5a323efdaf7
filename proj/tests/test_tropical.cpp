#include <gtest/gtest.h>

#include "binom/tropical.hpp"
#include "test_support.hpp"

using namespace binom;
using namespace binom::testing;

namespace {

using Rays = std::vector<std::vector<long>>;

IntMatrix to_matrix(const Rays& rows, std::size_t n) {
    IntMatrix M(0, n);
    for (const auto& r : rows) {
        std::vector<mpz_class> v(r.begin(), r.end());
        M.append_row(v);
    }
    return M;
}

TEST(InTropicalVariety, Examples) {
    auto R = ring_of(2);
    IdealHandle I = ideal(R, {"x - 2*y"});
    std::vector<long> a{3, 3}, b{1, -1}, zero{0, 0};
    EXPECT_TRUE(in_tropical_variety(I, a));
    EXPECT_FALSE(in_tropical_variety(I, b));
    EXPECT_FALSE(in_tropical_variety(saturate_by_variables(ideal(R, {"x-y", "x^2", "x*y", "y^2"})), zero));
}

TEST(CurveRays, Line) {
    auto R = ring_of(2);
    RaySet r = tropical_curve_rays(ideal(R, {"x - 2*y"}));
    EXPECT_EQ(r.rays, (Rays{{-1, -1}, {1, 1}}));
}

TEST(CurveRays, TropicalLineMaxConvention) {
    auto R = ring_of(2);
    IdealHandle I = ideal(R, {"x + y + 1"});
    RaySet r = tropical_curve_rays(I);
    EXPECT_EQ(r.rays, (Rays{{-1, 0}, {0, -1}, {1, 1}}));
    for (const auto& ray : r.rays)
        EXPECT_TRUE(in_tropical_variety(I, ray));
    std::vector<long> wrong{1, 0};
    EXPECT_FALSE(in_tropical_variety(I, wrong));
}

TEST(CurveRays, SpaceCurve) {
    auto R = ring_of(3);
    IdealHandle I = ideal(R, {"x + y + 1", "z - x - 2"});
    RaySet r = tropical_curve_rays(I);
    // x -> 0, y -> 0, z -> 0 and x -> infinity.
    EXPECT_EQ(r.rays, (Rays{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 1, 1}}));
    for (const auto& ray : r.rays)
        EXPECT_TRUE(in_tropical_variety(I, ray));
}

TEST(CurveRays, ArtinianInputRejected) {
    auto R = ring_of(2);
    EXPECT_THROW(tropical_curve_rays(ideal(R, {"x - 2", "y - 3"})), ContractViolation);
}

TEST(FindPrimitive, Examples) {
    auto R2 = ring_of(2);
    auto v = find_primitive_tropical_vector(ideal(R2, {"x - 2*y"}), 1);
    EXPECT_TRUE(v == (std::vector<long>{1, 1}) || v == (std::vector<long>{-1, -1}));
    auto w = find_primitive_tropical_vector(IdealHandle::zero(ring_of(1)), 1);
    EXPECT_TRUE(w == std::vector<long>{1} || w == std::vector<long>{-1});
}

TEST(FindPrimitive, DeepBinomialIdeal) {
    // T(I) is the line spanned by (1,1,1), orthogonal to the binomial
    // direction (3,-1,-2).
    IdealHandle I = saturate_by_variables(ideal(ring_of(3), {"(x - z)^2", "3*x - y - 2*z"}));
    auto v = find_primitive_tropical_vector(I, 1);
    EXPECT_TRUE(v == (std::vector<long>{1, 1, 1}) || v == (std::vector<long>{-1, -1, -1}));
    EXPECT_TRUE(in_tropical_variety(I, v));
    EXPECT_EQ(3 * v[0] - v[1] - 2 * v[2], 0);
}

TEST(FindPrimitive, SurfaceNeedsCut) {
    auto R = ring_of(3);
    IdealHandle I = ideal(R, {"x + y + z + 1"});
    auto v = find_primitive_tropical_vector(I, 3);
    EXPECT_TRUE(in_tropical_variety(I, v));
    long g = 0;
    for (long x : v)
        g = std::gcd(g, x);
    EXPECT_EQ(g, 1);
}

TEST(TropicalSpan, Examples) {
    auto R = ring_of(2);
    EXPECT_TRUE(tropical_span(ideal(R, {"x - 2", "y - 3"})).vectors.empty());
    EXPECT_EQ(tropical_span(ideal(R, {"x - 2*y"})).vectors, (Rays{{1, 1}}));
    SpanBasis s = tropical_span(ideal(R, {"x + y + 1"}));
    EXPECT_EQ(s.vectors.size(), 2u);
    EXPECT_EQ(rank_of(to_matrix(s.vectors, 2)), 2u);
}

TEST(TropicalSpan, EmptyVarietyHasEmptyBasis) {
    auto R = ring_of(2);
    EXPECT_TRUE(tropical_span(ideal(R, {"x-y", "x^2", "x*y", "y^2"})).vectors.empty());
}

TEST(MonomialChange, Inverse) {
    auto R = ring_of(2);
    IdealHandle I = ideal(R, {"x - 2*y"});
    IntMatrix M{{1, -1}, {0, 1}};
    IdealHandle J = monomial_change(I, M);
    // x = y0*y1, y = y1, so x - 2y = y1*(y0 - 2).
    EXPECT_TRUE(J.same_ideal(IdealHandle(J.ring(), {LaurentPoly::variable(J.ring(), 0) -
                                                    LaurentPoly::constant(J.ring(), 2)})));
    IdealHandle back = monomial_change(J, inverse_unimodular(M), "x");
    EXPECT_TRUE(back.same_ideal(IdealHandle(back.ring(), {I.generators()[0].with_ring(back.ring())})));
}

TEST(TropicalSpan, DeterministicForSeed) {
    IdealHandle I = ideal(ring_of(3), {"x*y + y*z + x + 1"});
    TropicalOptions o;
    o.seed = 11;
    EXPECT_EQ(tropical_span(I, o).vectors, tropical_span(I, o).vectors);
}

class TropicalProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(TropicalProperties, LatticeIdealSpanIsOrthogonalComplement) {
    LatticeIdeal L = random_lattice_ideal(GetParam());
    const std::size_t n = L.basis.cols();
    IdealHandle J = saturate_by_variables(L.ideal);
    SpanBasis s = tropical_span(J);
    IntMatrix S = to_matrix(s.vectors, n);
    EXPECT_EQ(s.vectors.size(), static_cast<std::size_t>(krull_dimension(J)));
    EXPECT_EQ(S.rows(), n - L.basis.rows());
    EXPECT_TRUE((L.basis * S.transpose()).is_zero());
    EXPECT_EQ(saturation_hnf(S, n), kernel_lattice(to_rational(L.basis)).basis);
}

TEST_P(TropicalProperties, Equivariance) {
    LatticeIdeal L = random_lattice_ideal(GetParam());
    const std::size_t n = L.basis.cols();
    std::mt19937_64 rng(GetParam() + 77);
    IntMatrix M = random_unimodular(rng, n, 6);
    IdealHandle J = saturate_by_variables(L.ideal);
    IntMatrix S = to_matrix(tropical_span(J).vectors, n);
    IntMatrix T = to_matrix(tropical_span(monomial_change(J, M)).vectors, n);
    IntMatrix MS = S.rows() ? IntMatrix(S * M.transpose()) : IntMatrix(0, n);
    EXPECT_EQ(saturation_hnf(T, n), saturation_hnf(MS, n));
}

TEST_P(TropicalProperties, RaysOfRandomCurvesPassMembership) {
    // Random plane curves and line-section curves in three variables.
    std::mt19937_64 rng(GetParam());
    std::size_t n = 2 + GetParam() % 2;
    RingPtr R = ring_of(n);
    std::vector<LaurentPoly> gens;
    for (std::size_t k = 0; k + 1 < n; ++k)
        gens.push_back(random_poly(rng, R, 4, 3, 4, 2));
    IdealHandle J = saturate_by_variables(IdealHandle(R, gens));
    if (krull_dimension(J) != 1)
        return;
    RaySet r = tropical_curve_rays(J);
    EXPECT_GE(r.rays.size(), 2u);
    std::vector<long> sum(n, 0);
    for (const auto& ray : r.rays) {
        EXPECT_TRUE(in_tropical_variety(J, ray));
        for (std::size_t i = 0; i < n; ++i)
            sum[i] += ray[i];
    }
    // Rays are primitive; a balanced curve cannot have all rays in an open
    // half space, so some ray has a negative pairing with their sum unless
    // the sum is zero.
    bool zero = std::all_of(sum.begin(), sum.end(), [](long x) { return x == 0; });
    bool opposing = false;
    for (const auto& ray : r.rays) {
        long dot = 0;
        for (std::size_t i = 0; i < n; ++i)
            dot += ray[i] * sum[i];
        opposing = opposing || dot <= 0;
    }
    EXPECT_TRUE(zero || opposing);
}

INSTANTIATE_TEST_SUITE_P(Seeds, TropicalProperties, ::testing::Range<std::uint64_t>(1, 31));

} // namespace

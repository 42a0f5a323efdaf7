#include <gtest/gtest.h>

#include "binom/groebner.hpp"
#include "test_support.hpp"

using namespace binom;
using namespace binom::testing;

namespace {

std::vector<LaurentPoly> polys(const RingPtr& R, const std::vector<std::string>& s) {
    std::vector<LaurentPoly> out;
    for (const auto& t : s)
        out.push_back(parse_poly(t, R));
    return out;
}

IdealHandle deep_ideal(int n) {
    return ideal(ring_of(3), {"(x - z)^2", std::to_string(n) + "*x - y - " + std::to_string(n - 1) + "*z"});
}

// Reduced-basis conditions, checked with the random-path reducer.
void expect_reduced_gb(const GroebnerBasis& G, std::mt19937_64& rng) {
    const auto& E = G.elements();
    const auto& L = G.leading_exponents();
    for (std::size_t i = 0; i < E.size(); ++i) {
        EXPECT_EQ(G.ordered_terms(i).front().coeff, 1);
        for (std::size_t j = 0; j < E.size(); ++j)
            if (i != j)
                EXPECT_FALSE(L[j].divides(L[i]));
        for (std::size_t t = 1; t < G.ordered_terms(i).size(); ++t)
            for (std::size_t j = 0; j < E.size(); ++j)
                EXPECT_FALSE(L[j].divides(G.ordered_terms(i)[t].exp));
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            ExponentVector l = ExponentVector::lcm(L[i], L[j]);
            LaurentPoly s = LaurentPoly::monomial(G.ring(), l - L[i]) * E[i] -
                            LaurentPoly::monomial(G.ring(), l - L[j]) * E[j];
            EXPECT_TRUE(random_path_remainder(s, E, G.order(), rng).is_zero());
        }
    }
}

TEST(MonomialOrder, Basics) {
    ExponentVector a{2, 0, 0}, b{1, 2, 0}, c{0, 0, 3};
    EXPECT_GT(MonomialOrder::lex().compare(a, b), 0);
    EXPECT_LT(MonomialOrder::grevlex().compare(a, b), 0);
    // grevlex: same degree, the smaller last exponent wins.
    EXPECT_GT(MonomialOrder::grevlex().compare(b, c), 0);
    EXPECT_GT(MonomialOrder::elimination(1).compare(ExponentVector{1, 0, 0}, c), 0);
    auto w = MonomialOrder::weighted({0, 0, 1});
    EXPECT_GT(w.compare(c, a), 0);
    EXPECT_EQ(w.compare(a, a), 0);
}

TEST(ReducedGb, Examples) {
    auto R1 = ring_of(1);
    auto R2 = ring_of(2);
    EXPECT_EQ(reduced_gb(ideal(R1, {"x^2+x+1"}), MonomialOrder::lex()), polys(R1, {"x^2+x+1"}));
    EXPECT_TRUE(reduced_gb(IdealHandle::zero(R2), MonomialOrder::lex()).empty());
    EXPECT_EQ(reduced_gb(ideal(R2, {"x-y", "x^2", "x*y", "y^2"}), MonomialOrder::grevlex()),
              polys(R2, {"x - y", "y^2"}));
    EXPECT_EQ(reduced_gb(ideal(R2, {"x+1", "x"}), MonomialOrder::lex()), polys(R2, {"1"}));
}

TEST(ReducedGb, MonomialGeneratorIsKept) {
    auto R = ring_of(2);
    IdealHandle I = ideal(R, {"x^2*y"});
    EXPECT_EQ(reduced_gb(I, MonomialOrder::grevlex()), polys(R, {"x^2*y"}));
}

TEST(ReducedGb, LaurentGeneratorsAreShifted) {
    auto R = Ring::make({"x", "y"}, true);
    IdealHandle I(R, {parse_poly("x*y^-1 - 2", R)});
    EXPECT_EQ(reduced_gb(I, MonomialOrder::lex()), polys(R, {"x - 2*y"}));
}

TEST(NormalForm, Examples) {
    auto R1 = ring_of(1);
    auto G = polys(R1, {"x^2+x+1"});
    EXPECT_TRUE(normal_form(parse_poly("x^3-1", R1), G, MonomialOrder::lex()).is_zero());
    EXPECT_EQ(normal_form(parse_poly("x", R1), G, MonomialOrder::lex()), parse_poly("x", R1));
    IdealHandle I = deep_ideal(3);
    EXPECT_TRUE(I.contains(parse_poly("x^3 - y*z^2", I.ring())));
    EXPECT_FALSE(I.contains(parse_poly("x^2 - y*z", I.ring())));
}

TEST(NormalForm, RejectsLaurentInput) {
    auto R = Ring::make({"x"}, true);
    auto gb = IdealHandle(R, {parse_poly("x - 1", R)}).gb(MonomialOrder::lex());
    EXPECT_THROW(gb->normal_form(parse_poly("x^-1", R)), ContractViolation);
}

TEST(Saturate, Examples) {
    auto R2 = ring_of(2);
    auto R1 = ring_of(1);
    IdealHandle a = saturate(ideal(R2, {"x-y", "x^2", "x*y", "y^2"}), parse_poly("x*y", R2));
    EXPECT_TRUE(a.is_unit());
    IdealHandle b = ideal(R1, {"x^2+x+1"});
    EXPECT_TRUE(saturate(b, parse_poly("x", R1)).same_ideal(b));
    EXPECT_TRUE(saturate(IdealHandle::unit(R2), parse_poly("x+y", R2)).is_unit());
    EXPECT_THROW(saturate(b, LaurentPoly(R1)), ContractViolation);
}

TEST(Saturate, RemovesEmbeddedComponent) {
    auto R = ring_of(2);
    IdealHandle I = ideal(R, {"x^2*y - x*y", "x*y^2"});
    IdealHandle J = saturate_by_variables(I);
    EXPECT_TRUE(J.is_unit());
    IdealHandle K = ideal(R, {"x*(y - 1)", "x^2*(y - 2)"});
    EXPECT_TRUE(saturate(K, parse_poly("x", R)).is_unit());
    IdealHandle P = ideal(R, {"x*(y - 1)"});
    EXPECT_TRUE(saturate(P, parse_poly("x", R)).same_ideal(ideal(R, {"y - 1"})));
}

TEST(Eliminate, Examples) {
    auto R = ring_of(2);
    std::vector<std::size_t> x{0}, y{1};
    EXPECT_TRUE(eliminate(ideal(R, {"x - 2*y"}), x).is_zero());
    EXPECT_TRUE(eliminate(ideal(R, {"x - 2", "y - 3"}), y).same_ideal(ideal(R, {"y - 3"})));
    IdealHandle c = ideal(R, {"(x-1)*(x-2)"});
    EXPECT_TRUE(eliminate(c, x).same_ideal(c));
}

TEST(KrullDimension, Examples) {
    EXPECT_EQ(krull_dimension(ideal(ring_of(1), {"x^2+x+1"})), 0);
    EXPECT_EQ(krull_dimension(deep_ideal(3)), 1);
    EXPECT_EQ(krull_dimension(IdealHandle::zero(ring_of(2))), 2);
    EXPECT_EQ(krull_dimension(IdealHandle::unit(ring_of(2))), -1);
    EXPECT_EQ(krull_dimension(ideal(ring_of(3), {"x*y - z"})), 2);
}

TEST(InitialIdeal, Examples) {
    auto R = ring_of(2);
    IdealHandle I = ideal(R, {"x - 2*y"});
    std::vector<long> w11{1, 1}, w10{1, 0}, w00{0, 0};
    EXPECT_TRUE(initial_ideal_proper_on_torus(I, w11));
    EXPECT_FALSE(initial_ideal_proper_on_torus(I, w10));
    EXPECT_TRUE(initial_ideal_proper_on_torus(IdealHandle::zero(R), w10));
}

TEST(InitialIdeal, NegativeWeights) {
    auto R = ring_of(2);
    IdealHandle I = ideal(R, {"x + y + 1"});
    std::vector<long> a{-1, 0}, b{0, -1}, c{1, 1}, d{-1, -1}, e{1, -1};
    EXPECT_TRUE(initial_ideal_proper_on_torus(I, a));
    EXPECT_TRUE(initial_ideal_proper_on_torus(I, b));
    EXPECT_TRUE(initial_ideal_proper_on_torus(I, c));
    EXPECT_FALSE(initial_ideal_proper_on_torus(I, d));
    EXPECT_FALSE(initial_ideal_proper_on_torus(I, e));
}

TEST(InitialIdeal, ZeroWeightDetectsUnitExtension) {
    auto R = ring_of(2);
    std::vector<long> zero{0, 0};
    EXPECT_FALSE(initial_ideal_proper_on_torus(ideal(R, {"x-y", "x^2", "x*y", "y^2"}), zero));
    EXPECT_TRUE(initial_ideal_proper_on_torus(ideal(R, {"x-y"}), zero));
}

TEST(IdealHandle, CacheIsSharedAcrossCopies) {
    IdealHandle I = deep_ideal(4);
    IdealHandle J = I;
    EXPECT_EQ(I.gb(MonomialOrder::lex()).get(), J.gb(MonomialOrder::lex()).get());
}

class GroebnerProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GroebnerProperties, ReducedAndConfluent) {
    IdealHandle I = random_ideal(GetParam());
    std::mt19937_64 rng(GetParam() + 1000);
    for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1)}) {
        auto G = I.gb(order);
        expect_reduced_gb(*G, rng);
        for (const auto& g : I.generators())
            EXPECT_TRUE(G->contains(g.nonnegative()));
        LaurentPoly f = random_poly(rng, I.ring(), 6, 5, 7);
        LaurentPoly nf = G->normal_form(f);
        for (int k = 0; k < 4; ++k)
            EXPECT_EQ(random_path_remainder(f, G->elements(), order, rng), nf);
    }
}

TEST_P(GroebnerProperties, CrossOrderMembership) {
    IdealHandle I = random_ideal(GetParam());
    std::mt19937_64 rng(GetParam() + 2000);
    LaurentPoly member(I.ring());
    for (const auto& g : I.generators())
        member = member + random_poly(rng, I.ring(), 3, 2, 4) * g.nonnegative();
    auto lex = I.gb(MonomialOrder::lex());
    auto grl = I.gb(MonomialOrder::grevlex());
    EXPECT_TRUE(lex->contains(member));
    EXPECT_TRUE(grl->contains(member));
    LaurentPoly other = member + random_poly(rng, I.ring(), 2, 3, 4);
    EXPECT_EQ(lex->contains(other), grl->contains(other));
}

TEST_P(GroebnerProperties, SaturationIdempotent) {
    IdealHandle I = random_ideal(GetParam());
    std::mt19937_64 rng(GetParam() + 3000);
    LaurentPoly f = random_poly(rng, I.ring(), 2, 2, 3);
    if (f.is_zero())
        return;
    IdealHandle S = saturate(I, f);
    EXPECT_TRUE(saturate(S, f).same_ideal(S));
    for (const auto& g : I.generators())
        EXPECT_TRUE(S.contains(g.nonnegative()));
}

TEST_P(GroebnerProperties, ZeroWeightMatchesLaurentProperness) {
    IdealHandle I = random_ideal(GetParam());
    std::vector<long> zero(I.nvars(), 0);
    EXPECT_EQ(initial_ideal_proper_on_torus(I, zero), !saturate_by_variables(I).is_unit());
}

INSTANTIATE_TEST_SUITE_P(Seeds, GroebnerProperties, ::testing::Range<std::uint64_t>(1, 61));

} // namespace

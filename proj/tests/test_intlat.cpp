#include <gtest/gtest.h>

#include "binom/intlat.hpp"
#include "test_support.hpp"

using namespace binom;
using namespace binom::testing;

namespace {

bool is_hnf(const IntMatrix& H) {
    std::size_t lead = 0;
    bool zero_seen = false;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t j = 0;
        while (j < H.cols() && H(i, j) == 0)
            ++j;
        if (j == H.cols()) {
            zero_seen = true;
            continue;
        }
        if (zero_seen || (i > 0 && j < lead) || H(i, j) <= 0)
            return false;
        for (std::size_t k = 0; k < i; ++k)
            if (H(k, j) < 0 || H(k, j) >= H(i, j))
                return false;
        lead = j + 1;
    }
    return true;
}

std::vector<mpz_class> vec(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(Hnf, Examples) {
    auto I2 = IntMatrix::identity(2);
    HermiteForm a = hnf(I2);
    EXPECT_EQ(a.H, I2);
    EXPECT_EQ(a.U, I2);
    IntMatrix A{{2, 0}, {1, 1}};
    HermiteForm b = hnf(A);
    EXPECT_EQ(b.H, (IntMatrix{{1, 1}, {0, 2}}));
    EXPECT_EQ(b.U * A, b.H);
    EXPECT_EQ(abs(determinant(b.U)), 1);
    EXPECT_EQ(hnf(IntMatrix{{0, 0}}).H, (IntMatrix{{0, 0}}));
}

TEST(Hnf, RankDeficientAndNegative) {
    IntMatrix A{{2, 4, 6}, {1, 2, 3}, {0, -3, 5}};
    HermiteForm h = hnf(A);
    EXPECT_TRUE(is_hnf(h.H));
    EXPECT_EQ(h.U * A, h.H);
    EXPECT_EQ(h.H, (IntMatrix{{1, 2, 3}, {0, 3, -5}, {0, 0, 0}}));
}

TEST(KernelLattice, Examples) {
    EXPECT_EQ(kernel_lattice(RatMatrix{{1, 1}}).basis, (IntMatrix{{1, -1}}));
    EXPECT_EQ(kernel_lattice(RatMatrix::identity(2)).rank(), 0u);
    EXPECT_EQ(kernel_lattice(RatMatrix{{0, 0}}).basis, IntMatrix::identity(2));
    // Rational entries are cleared first.
    RatMatrix A(1, 3);
    A(0, 0) = mpq_class(1, 2);
    A(0, 1) = mpq_class(1, 3);
    A(0, 2) = 0;
    LatticeBasis K = kernel_lattice(A);
    EXPECT_EQ(K.rank(), 2u);
    EXPECT_TRUE(is_saturated(K));
}

TEST(UnimodularExtension, Examples) {
    EXPECT_EQ(unimodular_extension(vec({0, 0, 1})), IntMatrix::identity(3));
    IntMatrix M = unimodular_extension(vec({1, 1}));
    EXPECT_EQ(abs(determinant(M)), 1);
    IntMatrix v{{1}, {1}};
    EXPECT_EQ(M * v, (IntMatrix{{0}, {1}}));
    EXPECT_THROW(unimodular_extension(vec({2, 2})), ContractViolation);
    EXPECT_THROW(unimodular_extension(vec({0, 0})), ContractViolation);
}

TEST(Lll, Examples) {
    EXPECT_EQ(lll(LatticeBasis{IntMatrix::identity(3)}).basis, IntMatrix::identity(3));
    LatticeBasis a = lll(LatticeBasis{IntMatrix{{1, 0}, {4, 1}}});
    EXPECT_LE(a.basis(0, 0) * a.basis(0, 0) + a.basis(0, 1) * a.basis(0, 1), 2);
    EXPECT_TRUE(same_lattice(a, LatticeBasis{IntMatrix{{1, 0}, {4, 1}}}));
    LatticeBasis b = lll(LatticeBasis{IntMatrix{{201, 0}, {200, 1}}});
    bool found = false;
    for (std::size_t i = 0; i < 2; ++i)
        found = found || (b.basis(i, 0) == 1 && b.basis(i, 1) == -1) ||
                (b.basis(i, 0) == -1 && b.basis(i, 1) == 1);
    EXPECT_TRUE(found);
}

TEST(Lll, RejectsBadDelta) {
    EXPECT_THROW(lll(LatticeBasis{IntMatrix::identity(2)}, mpq_class(1, 4)), ContractViolation);
    EXPECT_THROW(lll(LatticeBasis{IntMatrix::identity(2)}, mpq_class(3, 2)), ContractViolation);
}

TEST(LatticeCoordinates, InAndOut) {
    LatticeBasis L{IntMatrix{{2, 0}, {1, 3}}};
    auto c = lattice_coordinates(L, vec({3, 3}));
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)[0], 1);
    EXPECT_EQ((*c)[1], 1);
    EXPECT_FALSE(lattice_coordinates(L, vec({1, 0})));
    EXPECT_FALSE(lattice_coordinates(L, vec({1, 1})));
}

TEST(CompleteToUnimodular, KeepsBasisRows) {
    LatticeBasis L{IntMatrix{{1, 2, 3}}};
    IntMatrix M = complete_to_unimodular(L);
    EXPECT_EQ(abs(determinant(M)), 1);
    for (std::size_t j = 0; j < 3; ++j)
        EXPECT_EQ(M(0, j), L.basis(0, j));
    EXPECT_THROW(complete_to_unimodular(LatticeBasis{IntMatrix{{2, 4}}}), ContractViolation);
}

TEST(Determinant, Bareiss) {
    EXPECT_EQ(determinant(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 4);
    EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(InverseUnimodular, RoundTrip) {
    IntMatrix M{{2, 1}, {1, 1}};
    EXPECT_EQ(M * inverse_unimodular(M), IntMatrix::identity(2));
    EXPECT_THROW(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), ContractViolation);
}

class LatticeProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LatticeProperties, HnfUniqueUnderUnimodular) {
    std::mt19937_64 rng(GetParam());
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<int> e(-20, 20);
    std::size_t r = dim(rng), n = dim(rng);
    IntMatrix A(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A(i, j) = e(rng);
    HermiteForm h = hnf(A);
    EXPECT_TRUE(is_hnf(h.H));
    EXPECT_EQ(h.U * A, h.H);
    EXPECT_EQ(abs(determinant(h.U)), 1);
    EXPECT_EQ(hnf(random_unimodular(rng, r) * A).H, h.H);
}

TEST_P(LatticeProperties, KernelIsSaturated) {
    std::mt19937_64 rng(GetParam());
    std::uniform_int_distribution<int> e(-3, 3);
    std::size_t n = 4;
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    IntMatrix A(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A(i, j) = e(rng);
    LatticeBasis K = kernel_lattice(to_rational(A));
    EXPECT_EQ(K.rank(), n - rank_of(A));
    EXPECT_TRUE((A * K.basis.transpose()).is_zero());
    // Every kernel vector in a small box already lies in the lattice.
    const int B = 3;
    std::vector<mpz_class> v(n);
    for (int a = -B; a <= B; ++a)
        for (int b = -B; b <= B; ++b)
            for (int c = -B; c <= B; ++c)
                for (int d = -B; d <= B; ++d) {
                    v = {a, b, c, d};
                    bool in_kernel = true;
                    for (std::size_t i = 0; i < r && in_kernel; ++i) {
                        mpz_class s = 0;
                        for (std::size_t j = 0; j < n; ++j)
                            s += A(i, j) * v[j];
                        in_kernel = s == 0;
                    }
                    if (in_kernel)
                        EXPECT_TRUE(lattice_coordinates(K, v));
                }
}

TEST_P(LatticeProperties, UnimodularExtension) {
    std::mt19937_64 rng(GetParam());
    std::uniform_int_distribution<int> e(-30, 30);
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<mpz_class> v(n);
    mpz_class g = 0;
    do {
        g = 0;
        for (auto& x : v) {
            x = e(rng);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
    } while (g != 1);
    IntMatrix M = unimodular_extension(v);
    EXPECT_EQ(abs(determinant(M)), 1);
    IntMatrix col(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        col(i, 0) = v[i];
    IntMatrix img = M * col;
    for (std::size_t i = 0; i + 1 < n; ++i)
        EXPECT_EQ(img(i, 0), 0);
    EXPECT_EQ(img(n - 1, 0), 1);
}

TEST_P(LatticeProperties, LllReducedAndSameLattice) {
    std::mt19937_64 rng(GetParam());
    std::uniform_int_distribution<int> e(-500, 500);
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    IntMatrix B(0, n);
    while (B.rows() < k) {
        std::vector<mpz_class> row(n);
        for (auto& x : row)
            x = e(rng);
        IntMatrix t = B;
        t.append_row(row);
        if (rank_of(t) == t.rows())
            B = t;
    }
    for (mpq_class delta : {mpq_class(3, 4), mpq_class(99, 100), mpq_class(1)}) {
        LatticeBasis red = lll(LatticeBasis{B}, delta);
        EXPECT_TRUE(is_lll_reduced(red.basis, delta));
        EXPECT_TRUE(same_lattice(red, LatticeBasis{B}));
    }
}

TEST_P(LatticeProperties, CompleteToUnimodular) {
    LatticeIdeal L = random_lattice_ideal(GetParam());
    std::size_t n = L.basis.cols();
    LatticeBasis S{saturation_hnf(L.basis, n)};
    IntMatrix M = complete_to_unimodular(S);
    EXPECT_EQ(abs(determinant(M)), 1);
    EXPECT_EQ(M.row_slice(0, S.rank()), S.basis);
}

INSTANTIATE_TEST_SUITE_P(Seeds, LatticeProperties, ::testing::Range<std::uint64_t>(1, 51));

} // namespace

#include "binom/intlat.hpp"

#include <algorithm>

namespace binom {
namespace {

// g = x*a + y*b, g >= 0.
void extended_gcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& x,
                  mpz_class& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Rows (r, s) <- [[x, y], [-b/g, a/g]] (r, s); determinant 1.
void combine_rows(IntMatrix& M, std::size_t r, std::size_t s, const mpz_class& x,
                  const mpz_class& y, const mpz_class& p, const mpz_class& q) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
        mpz_class a = M(r, j), b = M(s, j);
        M(r, j) = x * a + y * b;
        M(s, j) = p * a + q * b;
    }
}

void row_axpy(IntMatrix& M, std::size_t dst, const mpz_class& f, std::size_t src) {
    if (f == 0)
        return;
    for (std::size_t j = 0; j < M.cols(); ++j)
        M(dst, j) -= f * M(src, j);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Nearest integer to a / b (b > 0), ties rounded up.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    return floor_div(2 * a + b, 2 * b);
}

} // namespace

HermiteForm hnf(const IntMatrix& A) {
    IntMatrix H = A;
    IntMatrix U = IntMatrix::identity(A.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
        for (std::size_t i = r + 1; i < H.rows(); ++i) {
            if (H(i, c) == 0)
                continue;
            mpz_class a = H(r, c), b = H(i, c), g, x, y;
            extended_gcd(a, b, g, x, y);
            mpz_class p = -b / g, q = a / g;
            combine_rows(H, r, i, x, y, p, q);
            combine_rows(U, r, i, x, y, p, q);
        }
        if (H(r, c) == 0)
            continue;
        if (H(r, c) < 0) {
            for (std::size_t j = 0; j < H.cols(); ++j)
                H(r, j) = -H(r, j);
            for (std::size_t j = 0; j < U.cols(); ++j)
                U(r, j) = -U(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class f = floor_div(H(i, c), H(r, c));
            row_axpy(H, i, f, r);
            row_axpy(U, i, f, r);
        }
        ++r;
    }
    return {std::move(H), std::move(U)};
}

LatticeBasis lattice_from_generators(const IntMatrix& generators, std::size_t ambient) {
    if (generators.rows() == 0)
        return {IntMatrix(0, ambient)};
    if (generators.cols() != ambient)
        throw DimensionMismatch("generator length does not match ambient dimension");
    IntMatrix H = hnf(generators).H;
    std::size_t nz = 0;
    while (nz < H.rows() && std::any_of(H.row(nz).begin(), H.row(nz).end(),
                                        [](const mpz_class& x) { return x != 0; }))
        ++nz;
    return {H.row_slice(0, nz)};
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient() != b.ambient())
        return false;
    return lattice_from_generators(a.basis, a.ambient()).basis ==
           lattice_from_generators(b.basis, b.ambient()).basis;
}

LatticeBasis kernel_lattice(const RatMatrix& A) {
    const std::size_t n = A.cols();
    IntMatrix T(n, A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        mpz_class den = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), A(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class scaled = A(i, j) * den;
            T(j, i) = scaled.get_num();
        }
    }
    HermiteForm f = hnf(T);
    IntMatrix kernel(0, n);
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = std::all_of(f.H.row(i).begin(), f.H.row(i).end(),
                                [](const mpz_class& x) { return x == 0; });
        if (zero)
            kernel.append_row(f.U.row(i));
    }
    return lattice_from_generators(kernel, n);
}

IntMatrix unimodular_extension(std::span<const mpz_class> v) {
    const std::size_t n = v.size();
    if (n == 0)
        throw ContractViolation("empty vector has no unimodular extension");
    mpz_class g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1)
        throw ContractViolation("vector is not primitive (gcd " + g.get_str() + ")");
    IntMatrix M = IntMatrix::identity(n);
    std::vector<mpz_class> w(v.begin(), v.end());
    const std::size_t last = n - 1;
    for (std::size_t i = 0; i < last; ++i) {
        if (w[i] == 0)
            continue;
        mpz_class d, x, y;
        extended_gcd(w[i], w[last], d, x, y);
        // Row i <- (w_last/d) row_i - (w_i/d) row_last; row_last <- x row_i + y row_last.
        mpz_class a = w[last] / d, b = -w[i] / d;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class ri = M(i, j), rl = M(last, j);
            M(i, j) = a * ri + b * rl;
            M(last, j) = x * ri + y * rl;
        }
        w[i] = 0;
        w[last] = d;
    }
    if (w[last] < 0)
        for (std::size_t j = 0; j < n; ++j)
            M(last, j) = -M(last, j);
    return M;
}

mpz_class determinant(const IntMatrix& A) {
    if (A.rows() != A.cols())
        throw DimensionMismatch("square matrix required");
    // Fraction-free Bareiss elimination.
    IntMatrix M = A;
    const std::size_t n = M.rows();
    if (n == 0)
        return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            M.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                M(i, j) = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& A) {
    RatMatrix inv = inverse(to_rational(A));
    IntMatrix out(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            if (inv(i, j).get_den() != 1)
                throw ContractViolation("matrix is not unimodular");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

IntMatrix complete_to_unimodular(const LatticeBasis& saturated) {
    const std::size_t m = saturated.rank(), n = saturated.ambient();
    if (m == 0)
        return IntMatrix::identity(n);
    HermiteForm f = hnf(saturated.basis.transpose());
    // B * U^T = H^T = [H_top^T | 0].
    mpz_class d = 1;
    for (std::size_t i = 0; i < m; ++i)
        d *= f.H(i, i);
    if (abs(d) != 1)
        throw ContractViolation("lattice is not saturated");
    IntMatrix Vinv = inverse_unimodular(f.U.transpose());
    IntMatrix full = saturated.basis;
    for (std::size_t i = m; i < n; ++i)
        full.append_row(Vinv.row(i));
    return full;
}

LatticeBasis lll(const LatticeBasis& B, const mpq_class& delta) {
    if (delta <= mpq_class(1, 4) || delta > 1)
        throw ContractViolation("LLL parameter must lie in (1/4, 1]");
    const std::size_t n = B.rank();
    if (n <= 1)
        return B;
    const mpz_class p = delta.get_num(), q = delta.get_den();
    IntMatrix b = B.basis;
    auto dot = [&](std::size_t i, std::size_t j) {
        mpz_class s = 0;
        for (std::size_t c = 0; c < b.cols(); ++c)
            s += b(i, c) * b(j, c);
        return s;
    };
    // Integral LLL with 1-based bookkeeping: d[0] = 1, d[k] = Gram determinant
    // of b_1..b_k, lam[k][j] = d[j] * mu_{k,j}.
    std::vector<mpz_class> d(n + 1);
    std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1));
    auto vec = [](std::size_t k) { return k - 1; };

    auto redi = [&](std::size_t k, std::size_t l) {
        if (2 * abs(lam[k][l]) <= d[l])
            return;
        mpz_class r = round_div(lam[k][l], d[l]);
        row_axpy(b, vec(k), r, vec(l));
        lam[k][l] -= r * d[l];
        for (std::size_t i = 1; i < l; ++i)
            lam[k][i] -= r * lam[l][i];
    };

    std::size_t kmax = 1;
    auto swapi = [&](std::size_t k) {
        b.swap_rows(vec(k), vec(k - 1));
        for (std::size_t j = 1; j + 1 < k; ++j)
            std::swap(lam[k][j], lam[k - 1][j]);
        mpz_class l = lam[k][k - 1];
        mpz_class nb = (d[k - 2] * d[k] + l * l) / d[k - 1];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            mpz_class t = lam[i][k];
            lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
            lam[i][k - 1] = (nb * t + l * lam[i][k]) / d[k];
        }
        d[k - 1] = nb;
    };

    d[0] = 1;
    d[1] = dot(0, 0);
    if (d[1] == 0)
        throw ContractViolation("LLL input rows are linearly dependent");
    std::size_t k = 2;
    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 1; j <= k; ++j) {
                mpz_class u = dot(vec(k), vec(j));
                for (std::size_t i = 1; i < j; ++i)
                    u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
                if (j < k)
                    lam[k][j] = u;
                else
                    d[k] = u;
            }
            if (d[k] == 0)
                throw ContractViolation("LLL input rows are linearly dependent");
        }
        redi(k, k - 1);
        if (q * d[k] * d[k - 2] < p * d[k - 1] * d[k - 1] - q * lam[k][k - 1] * lam[k][k - 1]) {
            swapi(k);
            k = std::max<std::size_t>(2, k - 1);
            continue;
        }
        for (std::size_t l = k - 1; l-- > 1;)
            redi(k, l);
        ++k;
    }
    return {std::move(b)};
}

std::optional<std::vector<mpz_class>> lattice_coordinates(const LatticeBasis& L,
                                                          std::span<const mpz_class> v) {
    if (v.size() != L.ambient())
        throw DimensionMismatch("vector length does not match lattice");
    const std::size_t m = L.rank();
    // Solve c * B = v over Q via the transposed system B^T c^T = v^T.
    RatMatrix aug(L.ambient(), m + 1);
    for (std::size_t i = 0; i < L.ambient(); ++i) {
        for (std::size_t j = 0; j < m; ++j)
            aug(i, j) = L.basis(j, i);
        aug(i, m) = v[i];
    }
    // Gaussian elimination.
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m && r < aug.rows(); ++c) {
        std::size_t p = r;
        while (p < aug.rows() && aug(p, c) == 0)
            ++p;
        if (p == aug.rows())
            continue;
        aug.swap_rows(p, r);
        mpq_class inv = 1 / aug(r, c);
        for (std::size_t j = c; j <= m; ++j)
            aug(r, j) *= inv;
        for (std::size_t i = 0; i < aug.rows(); ++i) {
            if (i == r || aug(i, c) == 0)
                continue;
            mpq_class f = aug(i, c);
            for (std::size_t j = c; j <= m; ++j)
                aug(i, j) -= f * aug(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < aug.rows(); ++i)
        if (aug(i, m) != 0)
            return std::nullopt;
    std::vector<mpz_class> c(m);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (aug(i, m).get_den() != 1)
            return std::nullopt;
        c[pivots[i]] = aug(i, m).get_num();
    }
    return c;
}

bool is_saturated(const LatticeBasis& L) {
    if (L.rank() == 0)
        return true;
    // Saturated iff the gcd of the maximal minors is 1, iff the column HNF of
    // B^T has unit pivots.
    HermiteForm f = hnf(L.basis.transpose());
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (f.H(i, i) != 1)
            return false;
    return true;
}

std::vector<mpz_class> to_integers(std::span<const int> v) {
    return {v.begin(), v.end()};
}

} // namespace binom

#include "binom/intlat.hpp"

namespace binom {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j);
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& A) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A(p, c) == 0)
            ++p;
        if (p == A.rows())
            continue;
        A.swap_rows(p, r);
        mpq_class inv = 1 / A(r, c);
        for (std::size_t j = c; j < A.cols(); ++j)
            A(r, j) *= inv;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A(i, c) == 0)
                continue;
            mpq_class f = A(i, c);
            for (std::size_t j = c; j < A.cols(); ++j)
                A(i, j) -= f * A(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void require_square(const RatMatrix& A) {
    if (A.rows() != A.cols())
        throw DimensionMismatch("square matrix required");
}

} // namespace

mpq_class determinant(const RatMatrix& A) {
    require_square(A);
    RatMatrix M = A;
    const std::size_t n = M.rows();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            M.swap_rows(p, c);
            det = -det;
        }
        det *= M(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M(i, c) == 0)
                continue;
            mpq_class f = M(i, c) / M(c, c);
            for (std::size_t j = c; j < n; ++j)
                M(i, j) -= f * M(c, j);
        }
    }
    return det;
}

std::size_t rank(const RatMatrix& A) {
    RatMatrix M = A;
    return rref(M).size();
}

mpq_class trace(const RatMatrix& A) {
    require_square(A);
    mpq_class t = 0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        t += A(i, i);
    return t;
}

RatMatrix inverse(const RatMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw ContractViolation("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

RatMatrix power(const RatMatrix& A, long k) {
    require_square(A);
    RatMatrix base = k < 0 ? inverse(A) : A;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    RatMatrix result = RatMatrix::identity(A.rows());
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

UPoly characteristic_polynomial(const RatMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    RatMatrix H = A;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && H(i, m - 1) == 0)
            ++i;
        if (i == n)
            continue;
        if (i != m) {
            H.swap_rows(i, m);
            for (std::size_t r = 0; r < n; ++r)
                std::swap(H(r, i), H(r, m));
        }
        for (std::size_t k = m + 1; k < n; ++k) {
            if (H(k, m - 1) == 0)
                continue;
            mpq_class u = H(k, m - 1) / H(m, m - 1);
            for (std::size_t j = 0; j < n; ++j)
                H(k, j) -= u * H(m, j);
            for (std::size_t r = 0; r < n; ++r)
                H(r, m) += u * H(r, k);
        }
    }
    std::vector<UPoly> p(n + 1);
    p[0] = UPoly({mpq_class(1)});
    const UPoly t = UPoly({mpq_class(0), mpq_class(1)});
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = (t - UPoly({H(m - 1, m - 1)})) * p[m - 1];
        mpq_class prod = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            prod *= H(i, i - 1);
            if (prod == 0)
                break;
            p[m] = p[m] - UPoly({H(i - 1, m - 1) * prod}) * p[i - 1];
        }
    }
    return p[n];
}

RatMatrix nullspace(const RatMatrix& A) {
    RatMatrix M = A;
    auto pivots = rref(M);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    RatMatrix basis(0, A.cols());
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<mpq_class> v(A.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -M(r, f);
        basis.append_row(v);
    }
    return basis;
}

bool is_scalar(const RatMatrix& A) {
    require_square(A);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (i != j && A(i, j) != 0)
                return false;
            if (i == j && A(i, j) != A(0, 0))
                return false;
        }
    return true;
}

RatMatrix evaluate(const UPoly& p, const RatMatrix& A) {
    require_square(A);
    RatMatrix acc(A.rows(), A.cols());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * A;
        for (std::size_t k = 0; k < A.rows(); ++k)
            acc(k, k) += p[i];
    }
    return acc;
}

} // namespace binom

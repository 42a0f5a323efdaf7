#include "binom/artinian.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "numeric.hpp"

namespace binom {
namespace {

using numeric::Complex;
using numeric::Real;

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw BudgetExhausted("exponent " + z.get_str() + " is too large");
    return z.get_si();
}

mpq_class rational_pow(const mpq_class& base, const mpz_class& exponent) {
    long k = to_long(exponent);
    if (k == 0)
        return 1;
    if (base == 0)
        throw ContractViolation("zero raised to a nonpositive power");
    unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), a);
    mpq_class r = k > 0 ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return r;
}

bool is_zero_matrix(const RatMatrix& A) {
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A(i, j) != 0)
                return false;
    return true;
}

bool is_nilpotent(const RatMatrix& X) {
    RatMatrix Y = X;
    for (std::size_t k = 1; k < X.rows(); k *= 2) {
        Y = Y * Y;
        if (is_zero_matrix(Y))
            return true;
    }
    return is_zero_matrix(Y);
}

// The single eigenvalue of P, if it has only one.
std::optional<mpq_class> single_eigenvalue(const RatMatrix& P) {
    const std::size_t l = P.rows();
    mpq_class lambda = trace(P) / mpq_class(static_cast<long>(l));
    RatMatrix X = P;
    for (std::size_t i = 0; i < l; ++i)
        X(i, i) -= lambda;
    if (!is_nilpotent(X))
        return std::nullopt;
    return lambda;
}

// Linear span of matrices (flattened), kept in echelon form.
class SpanTracker {
public:
    bool add(std::vector<mpq_class> v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0)
                continue;
            mpq_class f = v[pivot];
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] -= f * row[j];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
        if (it == v.end())
            return false;
        std::size_t pivot = static_cast<std::size_t>(it - v.begin());
        mpq_class inv = 1 / v[pivot];
        for (auto& x : v)
            x *= inv;
        for (auto& [p, row] : rows_) {
            if (row[pivot] == 0)
                continue;
            mpq_class f = row[pivot];
            for (std::size_t j = 0; j < v.size(); ++j)
                row[j] -= f * v[j];
        }
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<std::size_t, std::vector<mpq_class>>> rows_;
};

std::vector<mpq_class> flatten(const RatMatrix& A) {
    std::vector<mpq_class> v;
    v.reserve(A.rows() * A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            v.push_back(A(i, j));
    return v;
}

// Number of distinct joint eigenvalue tuples: the rank of the trace form
// on the algebra generated by the matrices.
std::size_t count_points(const MulMatrices& M) {
    const std::size_t l = M.dim();
    std::vector<RatMatrix> basis{RatMatrix::identity(l)};
    SpanTracker span;
    span.add(flatten(basis[0]));
    for (std::size_t next = 0; next < basis.size(); ++next)
        for (const auto& Mi : M.mats) {
            RatMatrix P = Mi * basis[next];
            if (span.add(flatten(P)))
                basis.push_back(std::move(P));
        }
    RatMatrix T(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = j; k < basis.size(); ++k) {
            T(j, k) = trace(basis[j] * basis[k]);
            T(k, j) = T(j, k);
        }
    return rank(T);
}

UPoly squarefree_part(const UPoly& p) { return divmod(p, gcd(p, p.derivative())).first.monic(); }

struct Separation {
    RatMatrix Z;
    /// factors[k] collects the eigenvalues of multiplicity k + 1.
    std::vector<UPoly> factors;
    std::size_t points = 0;
};

Separation separate(const MulMatrices& M, std::size_t points, const ArtinianOptions& options) {
    std::mt19937_64 rng(options.seed);
    for (int attempt = 0; attempt < options.separation_attempts; ++attempt) {
        RatMatrix Z(M.dim(), M.dim());
        if (M.count() == 1) {
            Z = M.mats[0];
        } else {
            long range = 4L << std::min(attempt, 20);
            std::uniform_int_distribution<long> pick(1, range);
            for (const auto& Mi : M.mats)
                Z = Z + Mi.scaled(mpq_class(pick(rng)));
        }
        UPoly chi = characteristic_polynomial(Z);
        if (static_cast<std::size_t>(squarefree_part(chi).degree()) == points)
            return {std::move(Z), squarefree_factorization(chi), points};
    }
    throw BudgetExhausted("no separating linear combination found");
}

using Tuples = std::vector<std::vector<Complex>>;  // [matrix][point]

// Joint eigenvalue tuples at the given precision, or nothing if the numeric
// data cannot be trusted at this precision.
std::optional<Tuples> eigen_tuples(const MulMatrices& M, const Separation& s,
                                   const std::vector<UPoly>& own_sqfree, mpfr_prec_t prec) {
    std::vector<Complex> z;
    std::vector<long> mu;
    for (std::size_t k = 0; k < s.factors.size(); ++k) {
        if (s.factors[k].degree() <= 0)
            continue;
        auto roots = numeric::isolate_roots(s.factors[k], prec);
        if (!roots)
            return std::nullopt;
        for (auto& r : roots->roots) {
            z.push_back(std::move(r));
            mu.push_back(static_cast<long>(k + 1));
        }
    }
    const std::size_t N = z.size();
    if (N != s.points)
        return std::nullopt;

    // Vandermonde system: sum_p mu_p alpha_i(p) z_p^k = tr(M_i Z^k).
    std::vector<std::vector<Complex>> V(N);
    for (std::size_t p = 0; p < N; ++p) {
        Complex power(Real(mu[p], prec), Real(prec));
        for (std::size_t k = 0; k < N; ++k) {
            V[k].push_back(power);
            power = power * z[p];
        }
    }
    std::vector<RatMatrix> zpow{RatMatrix::identity(M.dim())};
    for (std::size_t k = 1; k < N; ++k)
        zpow.push_back(zpow.back() * s.Z);

    Tuples alpha;
    for (std::size_t i = 0; i < M.count(); ++i) {
        std::vector<Complex> rhs;
        for (std::size_t k = 0; k < N; ++k)
            rhs.emplace_back(trace(M.mats[i] * zpow[k]), prec);
        auto x = numeric::solve(V, rhs);
        if (!x)
            return std::nullopt;
        auto roots = numeric::isolate_roots(own_sqfree[i], prec);
        if (!roots)
            return std::nullopt;
        std::vector<Complex> snapped;
        for (std::size_t p = 0; p < N; ++p) {
            std::size_t best = 0;
            std::optional<Real> d1, d2;
            for (std::size_t r = 0; r < roots->roots.size(); ++r) {
                Real d = numeric::abs(roots->roots[r] - (*x)[p]);
                if (!d1 || d < *d1) {
                    d2 = d1;
                    d1 = d;
                    best = r;
                } else if (!d2 || d < *d2) {
                    d2 = d;
                }
            }
            if (d2 && !(*d1 * Real(4, prec) < *d2))
                return std::nullopt;
            snapped.push_back(roots->roots[best]);
        }
        alpha.push_back(std::move(snapped));
    }
    return alpha;
}

// Short integer vectors e with prod_i alpha_i(p)^{e_i} independent of p.
std::vector<std::vector<mpz_class>> relation_candidates(const Tuples& alpha, std::size_t m,
                                                        std::size_t N, mpfr_prec_t prec,
                                                        const ArtinianOptions& options) {
    const std::size_t D = m + N - 1, cols = m + 2 * (N - 1);
    const Real C = Real::pow2(static_cast<long>(prec) - 16, prec);
    IntMatrix B(D, cols);
    for (std::size_t i = 0; i < m; ++i) {
        B(i, i) = 1;
        numeric::Complex base = numeric::log(alpha[i][0]);
        for (std::size_t p = 1; p < N; ++p) {
            numeric::Complex beta = numeric::log(alpha[i][p]) - base;
            B(i, m + 2 * (p - 1)) = (C * beta.re).round();
            B(i, m + 2 * (p - 1) + 1) = (C * beta.im).round();
        }
    }
    const mpz_class two_pi = (C * Real::pi(prec) * Real(2, prec)).round();
    for (std::size_t p = 1; p < N; ++p)
        B(m + p - 1, m + 2 * (p - 1) + 1) = two_pi;

    LatticeBasis reduced = lll(LatticeBasis{B}, options.discovery_delta);
    const mpz_class box = mpz_class(1) << options.box_bits;
    const mpz_class tolerance = (mpz_class(1) << (options.box_bits + 8)) * static_cast<long>(D);
    std::vector<std::vector<mpz_class>> out;
    for (std::size_t r = 0; r < D; ++r) {
        auto row = reduced.basis.row(r);
        bool small = true, nonzero = false;
        for (std::size_t j = 0; j < m; ++j) {
            if (abs(row[j]) > box)
                small = false;
            if (row[j] != 0)
                nonzero = true;
        }
        for (std::size_t j = m; j < cols; ++j)
            if (abs(row[j]) > tolerance)
                small = false;
        if (small && nonzero)
            out.emplace_back(row.begin(), row.begin() + static_cast<long>(m));
    }
    return out;
}

struct LatticeWithCharacter {
    IntMatrix rows;
    std::vector<mpq_class> lambdas;
};

// Hermite normal form of a full-row-rank basis, carrying the character.
LatticeWithCharacter to_hermite(LatticeWithCharacter in) {
    to_hermite_with_character(in.rows, in.lambdas);
    return in;
}

struct EigenLattice {
    LatticeWithCharacter lattice;  // short basis
    Completeness completeness;
    long precision_bits;
};

EigenLattice eigen_lattice(const MulMatrices& M, const ArtinianOptions& options) {
    const std::size_t m = M.count(), l = M.dim();
    if (m == 0)
        return {{IntMatrix(0, 0), {}}, Completeness::CertifiedTrivial, 0};
    const std::size_t N = count_points(M);
    if (N == 1) {
        LatticeWithCharacter all{IntMatrix::identity(m), {}};
        for (const auto& Mi : M.mats)
            all.lambdas.push_back(trace(Mi) / mpq_class(static_cast<long>(l)));
        return {std::move(all), Completeness::CertifiedTrivial, 0};
    }
    Separation s = separate(M, N, options);
    std::vector<UPoly> own_sqfree;
    for (const auto& Mi : M.mats)
        own_sqfree.push_back(squarefree_part(characteristic_polynomial(Mi)));

    std::optional<IntMatrix> previous;
    LatticeWithCharacter verified{IntMatrix(0, m), {}};
    long prec = std::max<long>(options.precision_bits, 64);
    for (; prec <= options.max_precision_bits; prec *= 2) {
        auto alpha = eigen_tuples(M, s, own_sqfree, prec);
        if (!alpha) {
            previous.reset();
            continue;
        }
        LatticeWithCharacter found{IntMatrix(0, m), {}};
        for (const auto& e : relation_candidates(*alpha, m, N, prec, options)) {
            auto lambda = single_eigenvalue(power_product(M, e));
            if (lambda) {
                found.rows.append_row(e);
                found.lambdas.push_back(*lambda);
            }
        }
        // Independent generators: keep an LLL-reduced basis of the span.
        LatticeBasis span = lattice_from_generators(found.rows, m);
        LatticeWithCharacter basis{IntMatrix(0, m), {}};
        if (span.rank() > 0) {
            LatticeBasis shortb = lll(span);
            for (std::size_t r = 0; r < shortb.rank(); ++r) {
                auto e = shortb.basis.row(r);
                auto lambda = single_eigenvalue(power_product(M, e));
                if (!lambda)
                    throw Error("internal: verified relations do not form a group");
                basis.rows.append_row(e);
                basis.lambdas.push_back(*lambda);
            }
        }
        verified = std::move(basis);
        if (previous && *previous == span.basis)
            return {std::move(verified), Completeness::HeuristicComplete, prec};
        previous = span.basis;
    }
    return {std::move(verified), Completeness::FallbackExhausted, prec / 2};
}

RatMatrix nilpotent_log(const RatMatrix& U) {
    const std::size_t l = U.rows();
    RatMatrix X = U - RatMatrix::identity(l);
    RatMatrix term = X, sum(l, l);
    for (std::size_t k = 1; k < l && !is_zero_matrix(term); ++k) {
        mpq_class c(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        sum = sum + term.scaled(c);
        term = term * X;
    }
    return sum;
}

ScalarRelationLattice finish(const MulMatrices& M, LatticeWithCharacter lattice,
                             Completeness completeness, long prec, bool scalar) {
    LatticeWithCharacter h = to_hermite(lattice);
    for (std::size_t r = 0; r < h.rows.rows(); ++r) {
        RatMatrix P = power_product(M, h.rows.row(r));
        bool ok;
        if (scalar) {
            ok = is_scalar(P) && P(0, 0) == h.lambdas[r];
        } else {
            auto lambda = single_eigenvalue(P);
            ok = lambda && *lambda == h.lambdas[r];
        }
        if (!ok)
            throw Error("internal: relation failed exact verification");
    }
    const std::size_t m = M.count();
    ScalarRelationLattice out;
    out.basis = LatticeBasis{h.rows.rows() ? h.rows : IntMatrix(0, m)};
    out.lambdas = std::move(h.lambdas);
    out.completeness = completeness;
    out.precision_bits = prec;
    return out;
}

} // namespace

MulMatrices MulMatrices::make(std::vector<RatMatrix> mats) {
    MulMatrices out;
    for (const auto& A : mats) {
        if (A.rows() != A.cols())
            throw DimensionMismatch("multiplication matrix is not square");
        if (A.rows() != mats.front().rows())
            throw DimensionMismatch("multiplication matrices differ in size");
        mpq_class d = determinant(A);
        if (d == 0)
            throw ContractViolation(
                "singular multiplication matrix: a variable is a zero divisor (ideal not saturated)");
        out.dets.push_back(d);
    }
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!(mats[i] * mats[j] == mats[j] * mats[i]))
                throw ContractViolation("multiplication matrices do not commute");
    out.mats = std::move(mats);
    return out;
}

QuotientBasis quotient_basis(const IdealHandle& K) {
    IdealHandle S = saturate_by_variables(K);
    if (S.is_unit())
        throw ContractViolation("unit ideal: the quotient is zero");
    if (krull_dimension(S) != 0)
        throw ContractViolation("ideal is not Artinian");
    const auto order = MonomialOrder::grevlex();
    QuotientBasis out;
    out.gb = S.gb(order);
    const auto& lead = out.gb->leading_exponents();
    const std::size_t n = K.nvars();
    std::unordered_set<ExponentVector, ExponentHash> seen;
    std::deque<ExponentVector> queue{ExponentVector(n)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        ExponentVector e = queue.front();
        queue.pop_front();
        if (std::any_of(lead.begin(), lead.end(), [&](const auto& l) { return l.divides(e); }))
            continue;
        out.standard_monomials.push_back(e);
        for (std::size_t i = 0; i < n; ++i) {
            ExponentVector f = e + ExponentVector::unit(n, i);
            if (seen.insert(f).second)
                queue.push_back(f);
        }
    }
    std::sort(out.standard_monomials.begin(), out.standard_monomials.end(),
              [&](const auto& a, const auto& b) { return order.compare(a, b) < 0; });
    return out;
}

MulMatrices multiplication_matrices(const IdealHandle& K, const QuotientBasis& B) {
    const std::size_t n = K.nvars(), l = B.size();
    std::unordered_map<ExponentVector, std::size_t, ExponentHash> index;
    for (std::size_t k = 0; k < l; ++k)
        index.emplace(B.standard_monomials[k], k);
    std::vector<RatMatrix> mats;
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix Mi(l, l);
        for (std::size_t k = 0; k < l; ++k) {
            ExponentVector e = B.standard_monomials[k] + ExponentVector::unit(n, i);
            LaurentPoly nf = B.gb->normal_form(LaurentPoly::monomial(K.ring(), e));
            for (const auto& t : nf.terms()) {
                auto it = index.find(t.exp);
                if (it == index.end())
                    throw ContractViolation("quotient basis does not match the ideal");
                Mi(it->second, k) = t.coeff;
            }
        }
        mats.push_back(std::move(Mi));
    }
    return MulMatrices::make(std::move(mats));
}

void to_hermite_with_character(IntMatrix& rows, std::vector<mpq_class>& lambdas) {
    if (rows.rows() == 0)
        return;
    if (lambdas.size() != rows.rows())
        throw DimensionMismatch("one character value per basis row required");
    HermiteForm f = hnf(rows);
    std::vector<mpq_class> moved;
    for (std::size_t i = 0; i < rows.rows(); ++i)
        moved.push_back(character_value(lambdas, f.U.row(i)));
    rows = f.H.row_slice(0, rows.rows());
    lambdas = std::move(moved);
}

RatMatrix power_product(const MulMatrices& M, std::span<const mpz_class> e) {
    if (e.size() != M.count())
        throw DimensionMismatch("exponent length does not match matrix count");
    RatMatrix P = RatMatrix::identity(M.dim());
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            P = P * power(M.mats[i], to_long(e[i]));
    return P;
}

mpq_class character_value(std::span<const mpq_class> lambdas, std::span<const mpz_class> coords) {
    if (lambdas.size() != coords.size())
        throw DimensionMismatch("coordinate length does not match character");
    mpq_class v = 1;
    for (std::size_t i = 0; i < coords.size(); ++i)
        v *= rational_pow(lambdas[i], coords[i]);
    return v;
}

ScalarRelationLattice radical_binomial_lattice(const MulMatrices& M,
                                               const ArtinianOptions& options) {
    EigenLattice eig = eigen_lattice(M, options);
    return finish(M, std::move(eig.lattice), eig.completeness, eig.precision_bits, false);
}

ScalarRelationLattice scalar_relation_lattice(const MulMatrices& M, const ArtinianOptions& options) {
    EigenLattice eig = eigen_lattice(M, options);
    const std::size_t m = M.count(), l = M.dim(), r = eig.lattice.rows.rows();
    LatticeWithCharacter scalar{IntMatrix(0, m), {}};
    if (r > 0) {
        // On the single-eigenvalue lattice, P_j / lambda_j is unipotent and
        // the scalar relations are the kernel of a -> sum a_j log(U_j).
        RatMatrix A(l * l, r);
        for (std::size_t j = 0; j < r; ++j) {
            RatMatrix U = power_product(M, eig.lattice.rows.row(j))
                              .scaled(1 / eig.lattice.lambdas[j]);
            RatMatrix Lg = nilpotent_log(U);
            for (std::size_t a = 0; a < l; ++a)
                for (std::size_t b = 0; b < l; ++b)
                    A(a * l + b, j) = Lg(a, b);
        }
        LatticeBasis ker = kernel_lattice(A);
        if (ker.rank() > 0) {
            ker = lll(ker);
            scalar.rows = ker.basis * eig.lattice.rows;
            for (std::size_t k = 0; k < ker.rank(); ++k)
                scalar.lambdas.push_back(character_value(eig.lattice.lambdas, ker.basis.row(k)));
        }
    }
    return finish(M, std::move(scalar), eig.completeness, eig.precision_bits, true);
}

} // namespace binom

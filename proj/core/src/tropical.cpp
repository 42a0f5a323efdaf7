#include "binom/tropical.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace binom {
namespace {

using Vec = std::vector<long>;
using Dir2 = std::array<long, 2>;

struct PairData {
    std::size_t i, j;
    std::vector<Dir2> dirs;
};

Dir2 primitive2(long a, long b) {
    long g = std::gcd(a, b);
    return {a / g, b / g};
}

// Outer edge normals of the Newton polygon of a point set (max convention).
std::vector<Dir2> newton_normals(std::vector<Dir2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2)
        return {};
    auto cross = [](const Dir2& o, const Dir2& a, const Dir2& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    // Andrew's monotone chain, counterclockwise, collinear points dropped.
    std::vector<Dir2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    std::vector<Dir2> out;
    if (hull.size() == 2) {
        long dx = hull[1][0] - hull[0][0], dy = hull[1][1] - hull[0][1];
        out.push_back(primitive2(dy, -dx));
        out.push_back(primitive2(-dy, dx));
        return out;
    }
    for (std::size_t e = 0; e < hull.size(); ++e) {
        const Dir2& p = hull[e];
        const Dir2& q = hull[(e + 1) % hull.size()];
        out.push_back(primitive2(q[1] - p[1], -(q[0] - p[0])));
    }
    return out;
}

std::optional<PairData> pair_data(const IdealHandle& J, std::size_t i, std::size_t j) {
    const std::size_t keep[2] = {i, j};
    IdealHandle P = saturate_by_variables(restrict_to(eliminate(J, keep), keep));
    PairData out{i, j, {}};
    int dim = krull_dimension(P);
    if (dim <= 0)
        return out;
    if (dim >= 2)
        return std::nullopt;
    // The rays of T(P) are edge normals of the Newton polygon of the one
    // dimensional part of P, whose generator divides every element.
    auto gb = P.gb(MonomialOrder::grevlex());
    const LaurentPoly* f = &gb->elements().front();
    for (const auto& g : gb->elements())
        if (g.size() < f->size())
            f = &g;
    std::vector<Dir2> pts;
    for (const auto& t : f->terms())
        pts.push_back({t.exp[0], t.exp[1]});
    for (const auto& d : newton_normals(pts)) {
        const long w[2] = {d[0], d[1]};
        if (in_tropical_variety(P, w))
            out.dirs.push_back(d);
    }
    return out;
}

bool consistent(const Vec& r, const std::vector<PairData>& pairs) {
    for (const auto& p : pairs) {
        long a = r[p.i], b = r[p.j];
        if (a == 0 && b == 0)
            continue;
        bool ok = std::any_of(p.dirs.begin(), p.dirs.end(), [&](const Dir2& d) {
            return d[1] * a - d[0] * b == 0 && d[0] * a + d[1] * b > 0;
        });
        if (!ok)
            return false;
    }
    return true;
}

Vec primitive_integer(std::span<const mpq_class> v) {
    mpz_class den = 1, g = 0;
    for (const auto& x : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& x : v) {
        mpq_class s = x * den;
        z.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    Vec out;
    for (auto& x : z) {
        x /= g;
        if (!x.fits_slong_p())
            throw BudgetExhausted("tropical vector entries too large");
        out.push_back(x.get_si());
    }
    return out;
}

class Assembler {
public:
    Assembler(std::size_t n, const std::vector<PairData>& pairs) : n_(n), pairs_(pairs) {}

    std::set<Vec> run() {
        dfs(0, RatMatrix(0, n_));
        return found_;
    }
    bool underdetermined() const { return underdetermined_; }

private:
    void dfs(std::size_t idx, const RatMatrix& eqs) {
        RatMatrix ns = eqs.rows() ? nullspace(eqs) : RatMatrix::identity(n_);
        if (ns.rows() == 0)
            return;
        if (ns.rows() == 1) {
            Vec g = primitive_integer(ns.row(0));
            for (long s : {1L, -1L}) {
                Vec r = g;
                for (auto& x : r)
                    x *= s;
                if (consistent(r, pairs_))
                    found_.insert(r);
            }
            return;
        }
        if (idx == pairs_.size()) {
            underdetermined_ = true;
            return;
        }
        const auto& p = pairs_[idx];
        // Projection zero.
        RatMatrix zero = eqs;
        std::vector<mpq_class> row(n_);
        row[p.i] = 1;
        zero.append_row(row);
        row[p.i] = 0;
        row[p.j] = 1;
        zero.append_row(row);
        dfs(idx + 1, zero);
        // Projection along one of the planar rays.
        for (const auto& d : p.dirs) {
            RatMatrix along = eqs;
            std::vector<mpq_class> r(n_);
            r[p.i] = d[1];
            r[p.j] = -d[0];
            along.append_row(r);
            dfs(idx + 1, along);
        }
    }

    std::size_t n_;
    const std::vector<PairData>& pairs_;
    std::set<Vec> found_;
    bool underdetermined_ = false;
};

void enumerate_box(std::size_t n, int bound, const std::function<void(const Vec&)>& visit) {
    Vec v(n, -bound);
    while (true) {
        visit(v);
        std::size_t k = 0;
        while (k < n && v[k] == bound)
            v[k++] = -bound;
        if (k == n)
            return;
        ++v[k];
    }
}

long vec_gcd(const Vec& v) {
    long g = 0;
    for (long x : v)
        g = std::gcd(g, x);
    return g;
}

RaySet curve_rays(const IdealHandle& J, const TropicalOptions& options) {
    const std::size_t n = J.nvars();
    int d = krull_dimension(J);
    if (d != 1)
        throw ContractViolation("tropical variety is not a curve (dimension " + std::to_string(d) +
                                ")");
    RaySet out;
    std::set<Vec> candidates;
    std::vector<PairData> pairs;
    bool underdetermined = false;
    if (n == 1) {
        candidates = {{1}, {-1}};
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto p = pair_data(J, i, j);
                if (p)
                    pairs.push_back(std::move(*p));
                else
                    underdetermined = true;
            }
        Assembler assembler(n, pairs);
        candidates = assembler.run();
        underdetermined = underdetermined || assembler.underdetermined();
    }
    for (const auto& r : candidates)
        if (in_tropical_variety(J, r))
            out.rays.push_back(r);
    if (underdetermined || out.rays.empty()) {
        std::set<Vec> found(out.rays.begin(), out.rays.end());
        enumerate_box(n, options.fallback_bound, [&](const Vec& v) {
            if (vec_gcd(v) != 1 || found.count(v) || !consistent(v, pairs))
                return;
            if (in_tropical_variety(J, v))
                found.insert(v);
        });
        out.rays.assign(found.begin(), found.end());
        out.completeness = Completeness::FallbackExhausted;
    }
    return out;
}

struct Primitive {
    Vec v;
    Completeness completeness;
};

Primitive primitive_vector(const IdealHandle& J, const TropicalOptions& options) {
    const std::size_t n = J.nvars();
    int d = krull_dimension(J);
    if (d <= 0)
        throw ContractViolation("tropical variety has no nonzero vector (dimension " +
                                std::to_string(std::max(d, 0)) + ")");
    auto from_curve = [&](const IdealHandle& C) -> std::optional<Primitive> {
        RaySet rays = curve_rays(C, options);
        if (rays.rays.empty())
            return std::nullopt;
        return Primitive{rays.rays.back(), rays.completeness};
    };
    if (d == 1) {
        if (auto p = from_curve(J))
            return *p;
        throw BudgetExhausted("no ray found within the fallback bound");
    }
    std::mt19937_64 rng(options.seed);
    const RingPtr& R = J.ring();
    for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
        long range = 2 + attempt;
        std::uniform_int_distribution<long> coeff(-range, range);
        std::vector<LaurentPoly> forms;
        if (attempt < options.retry_budget / 2) {
            // Cheap sparse cuts x_i = c first.
            std::vector<std::size_t> vars(n);
            std::iota(vars.begin(), vars.end(), 0);
            std::shuffle(vars.begin(), vars.end(), rng);
            for (int k = 0; k + 1 < d; ++k) {
                long c = 0;
                while (c == 0)
                    c = coeff(rng);
                forms.push_back(LaurentPoly::variable(R, vars[k]) -
                                LaurentPoly::constant(R, mpq_class(c)));
            }
        } else {
            for (int k = 0; k + 1 < d; ++k) {
                LaurentPoly u = LaurentPoly::constant(R, mpq_class(coeff(rng)));
                for (std::size_t i = 0; i < n; ++i)
                    u = u + LaurentPoly::variable(R, i).scaled(mpq_class(coeff(rng)));
                forms.push_back(u);
            }
        }
        IdealHandle cut = saturate_by_variables(J.plus(forms));
        if (krull_dimension(cut) != 1)
            continue;
        if (auto p = from_curve(cut)) {
            // A cut through a curve of the wrong kind can only lose rays, so
            // the found vector lies in T(J); check it anyway.
            if (in_tropical_variety(J, p->v))
                return *p;
        }
    }
    throw BudgetExhausted("retry budget exhausted while cutting down to a curve");
}

// Rank of integer rows, exactly.
std::size_t row_rank(const std::vector<Vec>& rows, std::size_t n) {
    RatMatrix A(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            A(i, j) = rows[i][j];
    return rank(A);
}

SpanBasis span_recursive(const IdealHandle& J, const TropicalOptions& options) {
    SpanBasis out;
    const std::size_t n = J.nvars();
    const int d = krull_dimension(J);
    if (d <= 0)
        return out;
    if (d == 1) {
        // A curve is the union of its rays: the span is theirs, with the
        // recursion's first vector kept in front. Skipping the coordinate
        // change avoids eliminating in high-degree coordinates.
        RaySet rays = curve_rays(J, options);
        if (rays.rays.empty())
            throw BudgetExhausted("no ray found within the fallback bound");
        out.completeness = rays.completeness;
        out.vectors.push_back(rays.rays.back());
        for (auto it = rays.rays.rbegin() + 1; it != rays.rays.rend(); ++it) {
            out.vectors.push_back(*it);
            if (row_rank(out.vectors, n) < out.vectors.size())
                out.vectors.pop_back();
        }
        return out;
    }
    Primitive p = primitive_vector(J, options);
    out.vectors.push_back(p.v);
    out.completeness = p.completeness;
    if (n == 1)
        return out;
    std::vector<mpz_class> v(p.v.begin(), p.v.end());
    IntMatrix M = unimodular_extension(v);
    IntMatrix Minv = inverse_unimodular(M);
    IdealHandle changed = monomial_change(J, M);
    std::vector<std::size_t> keep(n - 1);
    std::iota(keep.begin(), keep.end(), 0);
    IdealHandle lower = restrict_to(eliminate(changed, keep), keep);
    TropicalOptions next = options;
    next.seed = options.seed * 6364136223846793005ULL + 1442695040888963407ULL;
    SpanBasis sub = span_recursive(lower, next);
    out.completeness = weakest(out.completeness, sub.completeness);
    for (const auto& u : sub.vectors) {
        Vec w(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class s = 0;
            for (std::size_t k = 0; k + 1 < n; ++k)
                s += Minv(i, k) * u[k];
            if (!s.fits_slong_p())
                throw BudgetExhausted("tropical vector entries too large");
            w[i] = s.get_si();
        }
        out.vectors.push_back(std::move(w));
    }
    return out;
}

} // namespace

bool in_tropical_variety(const IdealHandle& ideal, std::span<const long> omega) {
    return initial_ideal_proper_on_torus(ideal, omega);
}

RaySet tropical_curve_rays(const IdealHandle& ideal, const TropicalOptions& options) {
    return curve_rays(saturate_by_variables(ideal), options);
}

std::vector<long> find_primitive_tropical_vector(const IdealHandle& ideal,
                                                 const TropicalOptions& options) {
    return primitive_vector(saturate_by_variables(ideal), options).v;
}

std::vector<long> find_primitive_tropical_vector(const IdealHandle& ideal, std::uint64_t seed) {
    TropicalOptions options;
    options.seed = seed;
    return find_primitive_tropical_vector(ideal, options);
}

SpanBasis tropical_span(const IdealHandle& ideal, const TropicalOptions& options) {
    return span_recursive(saturate_by_variables(ideal), options);
}

IdealHandle monomial_change(const IdealHandle& ideal, const IntMatrix& M,
                            const std::string& prefix) {
    const std::size_t n = ideal.nvars();
    if (M.rows() != n || M.cols() != n)
        throw DimensionMismatch("coordinate change does not match ring");
    // x^a = y^b with b = M^{-T} a.
    IntMatrix Minv = inverse_unimodular(M);
    RingPtr target = Ring::anonymous(n, false, prefix);
    std::vector<LaurentPoly> gens;
    for (const auto& f : ideal.generators()) {
        std::vector<Term> terms;
        for (const auto& t : f.terms()) {
            ExponentVector b(n);
            for (std::size_t k = 0; k < n; ++k) {
                mpz_class s = 0;
                for (std::size_t j = 0; j < n; ++j)
                    s += Minv(j, k) * t.exp[j];
                if (!s.fits_sint_p())
                    throw BudgetExhausted("exponent overflow in coordinate change");
                b[k] = static_cast<int>(s.get_si());
            }
            terms.push_back({t.coeff, b});
        }
        gens.push_back(LaurentPoly::from_terms(target, std::move(terms)).cleared());
    }
    return saturate_by_variables(IdealHandle(target, std::move(gens)));
}

} // namespace binom

#include "binom/groebner.hpp"

#include <algorithm>

namespace binom {
namespace {

using Terms = std::vector<Term>;

struct Engine {
    const MonomialOrder& ord;

    void sort_terms(Terms& t) const {
        std::sort(t.begin(), t.end(),
                  [&](const Term& a, const Term& b) { return ord.compare(a.exp, b.exp) > 0; });
    }

    static void make_monic(Terms& t) {
        if (t.empty() || t.front().coeff == 1)
            return;
        Rational inv = 1 / t.front().coeff;
        for (auto& x : t)
            x.coeff *= inv;
    }

    // a[from..] - c * x^shift * b, assuming the leading terms cancel when
    // `skip_leads` is set.
    Terms sub_mul(const Terms& a, std::size_t from, const Rational& c, const ExponentVector& shift,
                  const Terms& b, bool skip_leads) const {
        Terms out;
        out.reserve(a.size() - from + b.size());
        std::size_t i = from + (skip_leads ? 1 : 0), j = skip_leads ? 1 : 0;
        while (i < a.size() || j < b.size()) {
            ExponentVector be;
            if (j < b.size())
                be = b[j].exp + shift;
            int cmp = i == a.size() ? -1 : j == b.size() ? 1 : ord.compare(a[i].exp, be);
            if (cmp > 0) {
                out.push_back(a[i++]);
            } else if (cmp < 0) {
                out.push_back({-c * b[j].coeff, be});
                ++j;
            } else {
                Rational s = a[i].coeff - c * b[j].coeff;
                if (s != 0)
                    out.push_back({std::move(s), a[i].exp});
                ++i;
                ++j;
            }
        }
        return out;
    }

    // Full reduction of h by the polynomials `basis[idx]` for idx in `active`.
    Terms reduce(Terms h, const std::vector<Terms>& basis,
                 const std::vector<std::size_t>& active) const {
        Terms rem;
        std::size_t pos = 0;
        while (pos < h.size()) {
            const Term& lt = h[pos];
            const Terms* divisor = nullptr;
            for (std::size_t idx : active) {
                if (basis[idx].front().exp.divides(lt.exp)) {
                    divisor = &basis[idx];
                    break;
                }
            }
            if (!divisor) {
                rem.push_back(lt);
                ++pos;
                continue;
            }
            Rational c = lt.coeff / divisor->front().coeff;
            ExponentVector shift = lt.exp - divisor->front().exp;
            h = sub_mul(h, pos, c, shift, *divisor, true);
            pos = 0;
        }
        return rem;
    }

    Terms spoly(const Terms& f, const Terms& g) const {
        ExponentVector l = ExponentVector::lcm(f.front().exp, g.front().exp);
        ExponentVector sf = l - f.front().exp;
        ExponentVector sg = l - g.front().exp;
        Terms a;
        a.reserve(f.size());
        for (const auto& t : f)
            a.push_back({t.coeff / f.front().coeff, t.exp + sf});
        return sub_mul(a, 0, 1 / g.front().coeff, sg, g, true);
    }
};

struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
};

bool coprime(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0)
            return false;
    return true;
}

// Gebauer-Moeller installation of a new polynomial `h` (index into polys).
void update(std::vector<std::size_t>& active, std::vector<Pair>& pairs,
            const std::vector<Terms>& polys, std::size_t h) {
    const ExponentVector& lh = polys[h].front().exp;

    std::vector<Pair> c;
    for (std::size_t g : active)
        c.push_back({h, g, ExponentVector::lcm(lh, polys[g].front().exp)});

    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Pair& p = c[k];
        bool keep = coprime(lh, polys[p.j].front().exp);
        if (!keep) {
            keep = true;
            for (std::size_t r = k + 1; r < c.size() && keep; ++r)
                if (c[r].lcm.divides(p.lcm))
                    keep = false;
            for (std::size_t r = 0; r < d.size() && keep; ++r)
                if (d[r].lcm.divides(p.lcm))
                    keep = false;
        }
        if (keep)
            d.push_back(p);
    }

    std::vector<Pair> next;
    for (auto& p : pairs) {
        bool drop = lh.divides(p.lcm) &&
                    ExponentVector::lcm(polys[p.i].front().exp, lh) != p.lcm &&
                    ExponentVector::lcm(polys[p.j].front().exp, lh) != p.lcm;
        if (!drop)
            next.push_back(std::move(p));
    }
    for (auto& p : d)
        if (!coprime(lh, polys[p.j].front().exp))
            next.push_back(std::move(p));
    pairs = std::move(next);

    std::erase_if(active, [&](std::size_t g) { return lh.divides(polys[g].front().exp); });
    active.push_back(h);
}

} // namespace

GroebnerBasis compute_groebner_basis(const RingPtr& ring, std::span<const LaurentPoly> gens,
                                     const MonomialOrder& order) {
    const std::size_t n = ring->size();
    Engine eng{order};
    std::vector<Terms> polys;
    bool homogeneous = true;
    for (const auto& g : gens) {
        if (g.nvars() != n)
            throw DimensionMismatch("generator does not belong to the ring");
        if (g.is_zero())
            continue;
        LaurentPoly p = g.nonnegative();
        homogeneous = homogeneous && p.is_homogeneous();
        Terms t = p.terms();
        eng.sort_terms(t);
        Engine::make_monic(t);
        polys.push_back(std::move(t));
    }
    if (order.has_negative_weight() && !homogeneous)
        throw ContractViolation("weight order with negative entries needs homogeneous input");

    auto unit_basis = [&] {
        return GroebnerBasis(ring, order, {Terms{{Rational(1), ExponentVector(n)}}});
    };

    std::vector<std::size_t> active;
    std::vector<Pair> pairs;
    const std::size_t inputs = polys.size();
    for (std::size_t k = 0; k < inputs; ++k) {
        Terms r = eng.reduce(polys[k], polys, active);
        if (r.empty())
            continue;
        if (r.front().exp.is_zero())
            return unit_basis();
        Engine::make_monic(r);
        polys.push_back(std::move(r));
        update(active, pairs, polys, polys.size() - 1);
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            return order.compare(a.lcm, b.lcm) < 0;
        });
        Pair p = *best;
        *best = std::move(pairs.back());
        pairs.pop_back();
        Terms s = eng.spoly(polys[p.i], polys[p.j]);
        Terms h = eng.reduce(std::move(s), polys, active);
        if (h.empty())
            continue;
        if (h.front().exp.is_zero())
            return unit_basis();
        Engine::make_monic(h);
        polys.push_back(std::move(h));
        update(active, pairs, polys, polys.size() - 1);
    }

    // Minimal basis is `active`; inter-reduce tails.
    std::vector<Terms> reduced;
    for (std::size_t k = 0; k < active.size(); ++k) {
        std::vector<std::size_t> others;
        for (std::size_t r = 0; r < active.size(); ++r)
            if (r != k)
                others.push_back(active[r]);
        const Terms& g = polys[active[k]];
        Terms tail(g.begin() + 1, g.end());
        Terms out{g.front()};
        Terms red = eng.reduce(std::move(tail), polys, others);
        out.insert(out.end(), red.begin(), red.end());
        reduced.push_back(std::move(out));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
        return order.compare(a.front().exp, b.front().exp) < 0;
    });
    return GroebnerBasis(ring, order, std::move(reduced));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order,
                             std::vector<std::vector<Term>> ordered)
    : ring_(std::move(ring)), order_(std::move(order)), ordered_(std::move(ordered)) {
    for (const auto& t : ordered_) {
        elements_.push_back(LaurentPoly::from_terms(ring_, t));
        leading_.push_back(t.front().exp);
    }
}

bool GroebnerBasis::is_unit() const noexcept {
    return elements_.size() == 1 && leading_.front().is_zero();
}

LaurentPoly GroebnerBasis::normal_form(const LaurentPoly& f) const {
    if (f.nvars() != ring_->size())
        throw DimensionMismatch("polynomial does not belong to the ring of the basis");
    if (!f.is_polynomial())
        throw ContractViolation("normal form of a Laurent polynomial with negative exponents");
    Engine eng{order_};
    Terms t = f.terms();
    eng.sort_terms(t);
    std::vector<std::size_t> all(ordered_.size());
    for (std::size_t k = 0; k < all.size(); ++k)
        all[k] = k;
    Terms r = eng.reduce(std::move(t), ordered_, all);
    return LaurentPoly::from_terms(ring_, std::move(r));
}

LaurentPoly normal_form(const LaurentPoly& f, std::span<const LaurentPoly> basis,
                        const MonomialOrder& order) {
    Engine eng{order};
    std::vector<Terms> ordered;
    for (const auto& g : basis) {
        if (g.is_zero())
            continue;
        Terms t = g.terms();
        eng.sort_terms(t);
        ordered.push_back(std::move(t));
    }
    GroebnerBasis gb(f.ring(), order, std::move(ordered));
    return gb.normal_form(f);
}

} // namespace binom

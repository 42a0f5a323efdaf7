#include "binom/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace binom {

IdealHandle::IdealHandle(RingPtr ring, std::vector<LaurentPoly> generators)
    : state_(std::make_shared<State>()) {
    for (const auto& g : generators)
        if (g.nvars() != ring->size())
            throw DimensionMismatch("generator does not belong to the ring");
    std::erase_if(generators, [](const LaurentPoly& g) { return g.is_zero(); });
    state_->ring = std::move(ring);
    state_->generators = std::move(generators);
}

IdealHandle IdealHandle::zero(RingPtr ring) { return IdealHandle(std::move(ring), {}); }

IdealHandle IdealHandle::unit(RingPtr ring) {
    auto one = LaurentPoly::constant(ring, 1);
    return IdealHandle(std::move(ring), {one});
}

GroebnerBasisPtr IdealHandle::gb(const MonomialOrder& order) const {
    {
        std::lock_guard lock(state_->mutex);
        auto it = state_->cache.find(order);
        if (it != state_->cache.end())
            return it->second;
    }
    auto basis = std::make_shared<const GroebnerBasis>(
        compute_groebner_basis(state_->ring, state_->generators, order));
    std::lock_guard lock(state_->mutex);
    return state_->cache.emplace(order, std::move(basis)).first->second;
}

void IdealHandle::seed_cache(GroebnerBasis basis) const {
    std::lock_guard lock(state_->mutex);
    MonomialOrder order = basis.order();
    state_->cache.emplace(std::move(order), std::make_shared<const GroebnerBasis>(std::move(basis)));
}

bool IdealHandle::is_unit() const { return gb(MonomialOrder::grevlex())->is_unit(); }

bool IdealHandle::is_zero() const { return generators().empty(); }

bool IdealHandle::contains(const LaurentPoly& f) const {
    return gb(MonomialOrder::grevlex())->contains(f);
}

bool IdealHandle::same_ideal(const IdealHandle& other) const {
    if (other.nvars() != nvars())
        return false;
    auto mine = gb(MonomialOrder::grevlex());
    auto theirs = other.gb(MonomialOrder::grevlex());
    // Reduced bases are unique.
    return mine->elements() == theirs->elements();
}

IdealHandle IdealHandle::plus(std::span<const LaurentPoly> extra) const {
    std::vector<LaurentPoly> gens = generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealHandle(ring(), std::move(gens));
}

std::vector<LaurentPoly> reduced_gb(const IdealHandle& ideal, const MonomialOrder& order) {
    return ideal.gb(order)->elements();
}

namespace {

// Maps exponents of `f` into a ring of `target_n` variables; entry i of f goes
// to position map[i].
LaurentPoly remap(const LaurentPoly& f, const RingPtr& target, std::span<const std::size_t> map) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        ExponentVector e(target->size());
        for (std::size_t i = 0; i < map.size(); ++i)
            e[map[i]] = t.exp[i];
        terms.push_back({t.coeff, e});
    }
    return LaurentPoly::from_terms(target, std::move(terms));
}

std::vector<std::size_t> iota(std::size_t n, std::size_t offset = 0) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), offset);
    return v;
}

bool mentions_variable(const IdealHandle& ideal, std::size_t var) {
    for (const auto& g : ideal.generators())
        for (const auto& t : g.terms())
            if (t.exp[var] != 0)
                return true;
    return false;
}

// Runs an elimination order on `gens` (over `big`, whose first `k` variables
// are eliminated) and returns the basis elements free of those variables,
// mapped back through `back` into `target`.
IdealHandle eliminate_block(const RingPtr& big, std::size_t k, std::span<const LaurentPoly> gens,
                            const RingPtr& target, std::span<const std::size_t> back,
                            bool seed_grevlex) {
    GroebnerBasis full = compute_groebner_basis(big, gens, MonomialOrder::elimination(k));
    std::vector<LaurentPoly> kept;
    std::vector<std::vector<Term>> ordered;
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
        bool free = true;
        for (std::size_t v = 0; v < k && free; ++v)
            if (full.leading_exponents()[idx][v] != 0)
                free = false;
        if (!free)
            continue;
        LaurentPoly p = full.elements()[idx];
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            ExponentVector e(target->size());
            for (std::size_t i = 0; i < back.size(); ++i)
                if (back[i] != static_cast<std::size_t>(-1))
                    e[back[i]] = t.exp[i];
            terms.push_back({t.coeff, e});
        }
        kept.push_back(LaurentPoly::from_terms(target, terms));
        std::vector<Term> ord_terms;
        for (const auto& t : full.ordered_terms(idx)) {
            ExponentVector e(target->size());
            for (std::size_t i = 0; i < back.size(); ++i)
                if (back[i] != static_cast<std::size_t>(-1))
                    e[back[i]] = t.exp[i];
            ord_terms.push_back({t.coeff, e});
        }
        ordered.push_back(std::move(ord_terms));
    }
    IdealHandle result(target, kept);
    if (seed_grevlex)
        result.seed_cache(GroebnerBasis(target, MonomialOrder::grevlex(), std::move(ordered)));
    return result;
}

} // namespace

IdealHandle saturate(const IdealHandle& ideal, const LaurentPoly& f) {
    if (f.is_zero())
        throw ContractViolation("saturation by the zero polynomial");
    if (ideal.is_zero() || f.nonnegative().is_constant())
        return ideal;
    const std::size_t n = ideal.nvars();
    if (n + 1 > kMaxVars)
        throw DimensionMismatch("no room for the auxiliary saturation variable");
    RingPtr big = Ring::anonymous(n + 1, false, "_s");
    auto shift = iota(n, 1);
    std::vector<LaurentPoly> gens;
    for (const auto& g : ideal.gb(MonomialOrder::grevlex())->elements())
        gens.push_back(remap(g, big, shift));
    auto t = LaurentPoly::variable(big, 0);
    gens.push_back(t * remap(f.nonnegative(), big, shift) - LaurentPoly::constant(big, 1));
    std::vector<std::size_t> back(n + 1);
    back[0] = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < n; ++i)
        back[i + 1] = i;
    // The t-free part of a reduced block-order basis is the reduced grevlex
    // basis of the elimination ideal.
    return eliminate_block(big, 1, gens, ideal.ring(), back, true);
}

IdealHandle saturate_by_variables(const IdealHandle& ideal) {
    auto all = iota(ideal.nvars());
    return saturate_by_variables(ideal, all);
}

IdealHandle saturate_by_variables(const IdealHandle& ideal, std::span<const std::size_t> vars) {
    IdealHandle current = ideal;
    for (std::size_t v : vars) {
        if (!mentions_variable(current, v))
            continue;
        current = saturate(current, LaurentPoly::variable(ideal.ring(), v));
        if (current.is_unit())
            return current;
    }
    return current;
}

IdealHandle eliminate(const IdealHandle& ideal, std::span<const std::size_t> keep) {
    const std::size_t n = ideal.nvars();
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n)
            throw DimensionMismatch("variable index out of range");
        kept[k] = true;
    }
    std::vector<std::size_t> drop, keep_sorted;
    for (std::size_t i = 0; i < n; ++i)
        (kept[i] ? keep_sorted : drop).push_back(i);
    if (drop.empty())
        return ideal;
    // New position of each original variable: dropped ones first.
    std::vector<std::size_t> to_new(n), back(n);
    std::size_t pos = 0;
    for (std::size_t i : drop) {
        to_new[i] = pos;
        back[pos++] = static_cast<std::size_t>(-1);
    }
    for (std::size_t i : keep_sorted) {
        to_new[i] = pos;
        back[pos++] = i;
    }
    RingPtr big = Ring::anonymous(n, false, "_e");
    std::vector<LaurentPoly> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(remap(g.nonnegative(), big, to_new));
    return eliminate_block(big, drop.size(), gens, ideal.ring(), back, true);
}

IdealHandle restrict_to(const IdealHandle& ideal, std::span<const std::size_t> keep) {
    std::vector<std::string> names;
    for (std::size_t k : keep)
        names.push_back(ideal.ring()->name(k));
    RingPtr small = Ring::make(std::move(names), ideal.ring()->laurent());
    std::vector<std::size_t> pos_of(ideal.nvars(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i)
        pos_of[keep[i]] = i;
    std::vector<LaurentPoly> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            ExponentVector e(keep.size());
            for (std::size_t i = 0; i < ideal.nvars(); ++i) {
                if (t.exp[i] == 0)
                    continue;
                if (pos_of[i] == static_cast<std::size_t>(-1))
                    throw ContractViolation("generator involves a variable outside the kept set");
                e[pos_of[i]] = t.exp[i];
            }
            terms.push_back({t.coeff, e});
        }
        gens.push_back(LaurentPoly::from_terms(small, std::move(terms)));
    }
    return IdealHandle(small, std::move(gens));
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
    if (a.nvars() != b.nvars())
        throw DimensionMismatch("intersection of ideals in different rings");
    const std::size_t n = a.nvars();
    if (n + 1 > kMaxVars)
        throw DimensionMismatch("no room for the auxiliary intersection variable");
    RingPtr big = Ring::anonymous(n + 1, false, "_i");
    auto shift = iota(n, 1);
    auto t = LaurentPoly::variable(big, 0);
    auto one_minus_t = LaurentPoly::constant(big, 1) - t;
    std::vector<LaurentPoly> gens;
    for (const auto& g : a.generators())
        gens.push_back(t * remap(g.nonnegative(), big, shift));
    for (const auto& g : b.generators())
        gens.push_back(one_minus_t * remap(g.nonnegative(), big, shift));
    std::vector<std::size_t> back(n + 1);
    back[0] = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < n; ++i)
        back[i + 1] = i;
    return eliminate_block(big, 1, gens, a.ring(), back, true);
}

int krull_dimension(const IdealHandle& ideal) {
    auto basis = ideal.gb(MonomialOrder::grevlex());
    if (basis->is_unit())
        return -1;
    const std::size_t n = ideal.nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& e : basis->leading_exponents()) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0)
                s |= 1u << i;
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        int size = std::popcount(set);
        if (size <= best)
            continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](std::uint32_t s) { return (s & ~set) == 0; });
        if (independent)
            best = size;
    }
    return best;
}

LaurentPoly homogenize(const LaurentPoly& f, const RingPtr& extended) {
    const std::size_t n = f.nvars();
    if (extended->size() != n + 1)
        throw DimensionMismatch("homogenizing ring must have exactly one more variable");
    if (f.is_zero())
        return LaurentPoly(extended);
    long top = 0;
    for (const auto& t : f.terms())
        top = std::max(top, t.exp.degree());
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        ExponentVector e(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            e[i] = t.exp[i];
        e[n] = static_cast<int>(top - t.exp.degree());
        terms.push_back({t.coeff, e});
    }
    return LaurentPoly::from_terms(extended, std::move(terms));
}

bool initial_ideal_proper_on_torus(const IdealHandle& ideal, std::span<const long> omega) {
    const std::size_t n = ideal.nvars();
    if (omega.size() != n)
        throw DimensionMismatch("weight vector length does not match ring");
    auto base = ideal.gb(MonomialOrder::grevlex());
    if (base->is_unit())
        return false;
    if (base->is_zero())
        return true;
    if (n + 1 > kMaxVars)
        throw DimensionMismatch("no room for the homogenizing variable");
    // Homogenizing a degree-compatible basis generates the homogenization of I.
    RingPtr big = Ring::anonymous(n + 1, false, "_h");
    std::vector<LaurentPoly> hom;
    for (const auto& g : base->elements())
        hom.push_back(homogenize(g, big));
    // Shifting omega by a multiple of (1..1) does not change the order on
    // homogeneous polynomials and makes it a term order.
    long lowest = std::min(0L, *std::min_element(omega.begin(), omega.end()));
    std::vector<long> weights(omega.begin(), omega.end());
    weights.push_back(0);
    for (auto& w : weights)
        w -= lowest;
    std::vector<long> plain(omega.begin(), omega.end());
    plain.push_back(0);
    GroebnerBasis gb = compute_groebner_basis(big, hom, MonomialOrder::weighted(weights));

    std::vector<LaurentPoly> initials;
    for (const auto& g : gb.elements()) {
        LaurentPoly in = initial_form(g, std::span<const long>(plain));
        std::vector<Term> terms;
        for (const auto& t : in.terms()) {
            ExponentVector e(n);
            for (std::size_t i = 0; i < n; ++i)
                e[i] = t.exp[i];
            terms.push_back({t.coeff, e});
        }
        LaurentPoly dehom = LaurentPoly::from_terms(ideal.ring(), std::move(terms));
        if (dehom.size() == 1)
            return false;  // a monomial is a unit on the torus
        initials.push_back(std::move(dehom));
    }
    IdealHandle in_ideal(ideal.ring(), std::move(initials));
    return !saturate_by_variables(in_ideal).is_unit();
}

} // namespace binom

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "binom/poly.hpp"

namespace binom {

/// Monomial order on N^n. Weighted orders compare <omega, a> first (larger
/// weight is larger) and break ties with grevlex; they are term orders only
/// when omega >= 0, and are accepted with negative entries on homogeneous
/// input only.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Elimination, Weighted };

    static MonomialOrder lex();
    static MonomialOrder grevlex();
    /// Block order eliminating the first `k` variables: grevlex on the block
    /// [0, k), ties broken by grevlex on the remaining variables.
    static MonomialOrder elimination(std::size_t k);
    static MonomialOrder weighted(std::vector<long> omega);

    Kind kind() const noexcept { return kind_; }
    std::size_t block() const noexcept { return block_; }
    const std::vector<long>& weights() const noexcept { return weights_; }
    bool has_negative_weight() const noexcept;

    /// -1, 0 or 1.
    int compare(const ExponentVector& a, const ExponentVector& b) const noexcept;
    std::string name() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
    friend bool operator<(const MonomialOrder& a, const MonomialOrder& b);

private:
    MonomialOrder(Kind kind, std::size_t block, std::vector<long> weights)
        : kind_(kind), block_(block), weights_(std::move(weights)) {}

    Kind kind_;
    std::size_t block_;
    std::vector<long> weights_;
};

/// Reduced Groebner basis with respect to one order. Elements are monic and
/// sorted by ascending leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<std::vector<Term>> ordered);

    const RingPtr& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return order_; }
    /// Elements in canonical storage form.
    const std::vector<LaurentPoly>& elements() const noexcept { return elements_; }
    /// Leading exponents with respect to `order()`, parallel to `elements()`.
    const std::vector<ExponentVector>& leading_exponents() const noexcept { return leading_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool is_unit() const noexcept;
    bool is_zero() const noexcept { return elements_.empty(); }

    /// Unique remainder of a polynomial (nonnegative exponents) modulo the basis.
    LaurentPoly normal_form(const LaurentPoly& f) const;
    bool contains(const LaurentPoly& f) const { return normal_form(f).is_zero(); }

    /// Terms of element i sorted descending under `order()`.
    const std::vector<Term>& ordered_terms(std::size_t i) const { return ordered_[i]; }

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<std::vector<Term>> ordered_;
    std::vector<LaurentPoly> elements_;
    std::vector<ExponentVector> leading_;
};

using GroebnerBasisPtr = std::shared_ptr<const GroebnerBasis>;

/// Reduced Groebner basis of the ideal generated by `gens` in the polynomial
/// ring. Laurent generators are first multiplied by monomials to clear
/// negative exponents.
GroebnerBasis compute_groebner_basis(const RingPtr& ring, std::span<const LaurentPoly> gens,
                                     const MonomialOrder& order);

/// Ideal of Q[x1..xn] given by generators, with a per-order cache of reduced
/// Groebner bases. Copies share the cache; the cache is internally
/// synchronized and never changes results.
class IdealHandle {
public:
    IdealHandle(RingPtr ring, std::vector<LaurentPoly> generators);

    static IdealHandle zero(RingPtr ring);
    static IdealHandle unit(RingPtr ring);

    const RingPtr& ring() const noexcept { return state_->ring; }
    std::size_t nvars() const noexcept { return state_->ring->size(); }
    const std::vector<LaurentPoly>& generators() const noexcept { return state_->generators; }

    GroebnerBasisPtr gb(const MonomialOrder& order) const;
    /// Installs a basis known to be the reduced basis for its order.
    void seed_cache(GroebnerBasis basis) const;

    bool is_unit() const;
    bool is_zero() const;
    bool contains(const LaurentPoly& f) const;
    /// Equality of ideals by mutual containment.
    bool same_ideal(const IdealHandle& other) const;
    /// I + <extra>.
    IdealHandle plus(std::span<const LaurentPoly> extra) const;

private:
    struct State {
        RingPtr ring;
        std::vector<LaurentPoly> generators;
        std::mutex mutex;
        std::map<MonomialOrder, GroebnerBasisPtr> cache;
    };
    std::shared_ptr<State> state_;
};

std::vector<LaurentPoly> reduced_gb(const IdealHandle& ideal, const MonomialOrder& order);

/// Remainder of f modulo G, where G is a reduced Groebner basis for `order`.
LaurentPoly normal_form(const LaurentPoly& f, std::span<const LaurentPoly> basis,
                        const MonomialOrder& order);

/// (I : f^inf), via an auxiliary variable t, the generator t*f - 1 and
/// elimination of t.
IdealHandle saturate(const IdealHandle& ideal, const LaurentPoly& f);

/// (I : (x_{i1} ... x_{ik})^inf), one variable at a time. With no explicit
/// list, all variables: the polynomial representative of the Laurent
/// extension.
IdealHandle saturate_by_variables(const IdealHandle& ideal);
IdealHandle saturate_by_variables(const IdealHandle& ideal, std::span<const std::size_t> vars);

/// I intersected with Q[x_keep], expressed over the same ring.
IdealHandle eliminate(const IdealHandle& ideal, std::span<const std::size_t> keep);

/// Re-expresses an ideal whose generators only involve `keep` over the
/// smaller ring of those variables (in the given order).
IdealHandle restrict_to(const IdealHandle& ideal, std::span<const std::size_t> keep);

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);

/// Krull dimension of Q[x]/I, -1 for the unit ideal.
int krull_dimension(const IdealHandle& ideal);

/// Whether in_omega(I), extended to the Laurent ring, is proper. The caller
/// supplies I saturated by the product of all variables.
bool initial_ideal_proper_on_torus(const IdealHandle& ideal, std::span<const long> omega);

/// Homogenizes with one extra variable appended as the last variable.
LaurentPoly homogenize(const LaurentPoly& f, const RingPtr& extended);

} // namespace binom

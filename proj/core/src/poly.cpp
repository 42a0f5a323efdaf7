#include "binom/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace binom {

ExponentVector::ExponentVector(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
    if (n > kMaxVars)
        throw DimensionMismatch("too many variables: " + std::to_string(n));
}

ExponentVector::ExponentVector(std::initializer_list<int> entries)
    : ExponentVector(std::span<const int>(entries.begin(), entries.size())) {}

ExponentVector::ExponentVector(std::span<const int> entries) : ExponentVector(entries.size()) {
    std::copy(entries.begin(), entries.end(), e_.begin());
}

ExponentVector::ExponentVector(std::span<const long> entries) : ExponentVector(entries.size()) {
    for (std::size_t i = 0; i < entries.size(); ++i)
        e_[i] = static_cast<int>(entries[i]);
}

long ExponentVector::degree() const noexcept {
    long d = 0;
    for (std::size_t i = 0; i < n_; ++i)
        d += e_[i];
    return d;
}

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(begin(), end(), [](int x) { return x == 0; });
}

bool ExponentVector::is_nonnegative() const noexcept {
    return std::all_of(begin(), end(), [](int x) { return x >= 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const noexcept {
    ExponentVector r = *this;
    r += other;
    return r;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        e_[i] += other.e_[i];
    return *this;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const noexcept {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < n_; ++i)
        r.e_[i] -= other.e_[i];
    return r;
}

ExponentVector ExponentVector::operator-() const noexcept {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < n_; ++i)
        r.e_[i] = -r.e_[i];
    return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& a, const ExponentVector& b) noexcept {
    ExponentVector r = a;
    for (std::size_t i = 0; i < a.n_; ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

ExponentVector ExponentVector::gcd(const ExponentVector& a, const ExponentVector& b) noexcept {
    ExponentVector r = a;
    for (std::size_t i = 0; i < a.n_; ++i)
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
    ExponentVector r(n);
    r[i] = 1;
    return r;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
}

bool operator<(const ExponentVector& a, const ExponentVector& b) noexcept {
    if (a.n_ != b.n_)
        return a.n_ < b.n_;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t ExponentHash::operator()(const ExponentVector& e) const noexcept {
    std::size_t h = e.size();
    for (int x : e)
        h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(x));
    return h;
}

Ring::Ring(std::vector<std::string> names, bool laurent)
    : names_(std::move(names)), laurent_(laurent) {
    if (names_.size() > kMaxVars)
        throw DimensionMismatch("at most " + std::to_string(kMaxVars) + " variables supported");
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names, bool laurent) {
    return std::make_shared<const Ring>(std::move(names), laurent);
}

std::shared_ptr<const Ring> Ring::anonymous(std::size_t n, bool laurent, const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i + 1));
    return make(std::move(names), laurent);
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

int canonical_compare(const ExponentVector& a, const ExponentVector& b) noexcept {
    long da = a.degree(), db = b.degree();
    if (da != db)
        return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

namespace {

bool term_greater(const Term& a, const Term& b) {
    return canonical_compare(a.exp, b.exp) > 0;
}

// Merge of two canonically sorted term lists, second scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = i == a.size() ? -1 : j == b.size() ? 1 : canonical_compare(a[i].exp, b[j].exp);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            Term t = b[j++];
            if (sign < 0)
                t.coeff = -t.coeff;
            out.push_back(std::move(t));
        } else {
            Rational s = a[i].coeff;
            if (sign > 0)
                s += b[j].coeff;
            else
                s -= b[j].coeff;
            if (s != 0)
                out.push_back({std::move(s), a[i].exp});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

LaurentPoly::LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}

LaurentPoly::LaurentPoly(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

LaurentPoly LaurentPoly::constant(RingPtr ring, const Rational& c) {
    ExponentVector zero(ring->size());
    return monomial(std::move(ring), zero, c);
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, const ExponentVector& e, const Rational& c) {
    if (e.size() != ring->size())
        throw DimensionMismatch("exponent length does not match ring");
    if (c == 0)
        return LaurentPoly(std::move(ring));
    return LaurentPoly(std::move(ring), std::vector<Term>{{c, e}});
}

LaurentPoly LaurentPoly::variable(RingPtr ring, std::size_t i) {
    auto e = ExponentVector::unit(ring->size(), i);
    return monomial(std::move(ring), e);
}

LaurentPoly LaurentPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.exp.size() != ring->size())
            throw DimensionMismatch("exponent length does not match ring");
    std::sort(terms.begin(), terms.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (out.back().coeff == 0)
            out.pop_back();
    }
    return LaurentPoly(std::move(ring), std::move(out));
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

bool LaurentPoly::is_polynomial() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.exp.is_nonnegative(); });
}

bool LaurentPoly::is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
        return t.exp.degree() == terms_.front().exp.degree();
    });
}

const Term& LaurentPoly::leading() const {
    if (terms_.empty())
        throw ContractViolation("leading term of the zero polynomial");
    return terms_.front();
}

ExponentVector LaurentPoly::min_exponent() const {
    if (terms_.empty())
        return ExponentVector(nvars());
    ExponentVector m = terms_.front().exp;
    for (const auto& t : terms_)
        m = ExponentVector::gcd(m, t.exp);
    return m;
}

LaurentPoly LaurentPoly::cleared() const {
    return shifted(-min_exponent());
}

LaurentPoly LaurentPoly::nonnegative() const {
    ExponentVector low = min_exponent();
    for (auto& x : low)
        x = std::max(0, -x);
    return shifted(low);
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& by) const {
    if (by.size() != nvars())
        throw DimensionMismatch("shift length does not match ring");
    std::vector<Term> out = terms_;
    for (auto& t : out)
        t.exp += by;
    // Multiplication by a monomial preserves the grevlex order.
    return LaurentPoly(ring_, std::move(out));
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0)
        return LaurentPoly(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out)
        t.coeff *= c;
    return LaurentPoly(ring_, std::move(out));
}

LaurentPoly LaurentPoly::monic() const {
    if (terms_.empty())
        return *this;
    return scaled(1 / terms_.front().coeff);
}

LaurentPoly LaurentPoly::with_ring(RingPtr ring) const {
    if (ring->size() != nvars())
        throw DimensionMismatch("ring change must preserve the variable count");
    return LaurentPoly(std::move(ring), terms_);
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(ring_, 1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

void LaurentPoly::check_ring(const LaurentPoly& g) const {
    if (g.nvars() != nvars())
        throw DimensionMismatch("polynomials over rings of different dimension");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
    check_ring(g);
    return LaurentPoly(ring_, merge_terms(terms_, g.terms_, 1));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const {
    check_ring(g);
    return LaurentPoly(ring_, merge_terms(terms_, g.terms_, -1));
}

LaurentPoly LaurentPoly::operator-() const {
    return scaled(-1);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
    check_ring(g);
    if (is_zero() || g.is_zero())
        return LaurentPoly(ring_);
    const LaurentPoly& small = size() <= g.size() ? *this : g;
    const LaurentPoly& large = size() <= g.size() ? g : *this;
    std::vector<Term> acc;
    for (const auto& t : small.terms_) {
        std::vector<Term> row = large.terms_;
        for (auto& r : row) {
            r.coeff *= t.coeff;
            r.exp += t.exp;
        }
        acc = merge_terms(acc, row, 1);
    }
    return LaurentPoly(ring_, std::move(acc));
}

bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.nvars() != g.nvars() || f.terms_.size() != g.terms_.size())
        return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
        if (f.terms_[i].exp != g.terms_[i].exp || f.terms_[i].coeff != g.terms_[i].coeff)
            return false;
    return true;
}

std::string exponent_to_string(const ExponentVector& e, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.name(i);
        if (e[i] != 1)
            out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string mono = exponent_to_string(t.exp, *ring_);
        if (mono.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << mono;
        } else {
            os << c.get_str() << '*' << mono;
        }
    }
    return os.str();
}

LaurentPoly Binomial::to_poly(RingPtr ring) const {
    return LaurentPoly::monomial(ring, u) - LaurentPoly::monomial(ring, v, lambda);
}

namespace {

template <typename T>
LaurentPoly initial_form_impl(const LaurentPoly& f, std::span<const T> omega) {
    if (omega.size() != f.nvars())
        throw DimensionMismatch("weight vector length does not match ring");
    if (f.is_zero())
        return f;
    std::vector<Rational> weights;
    weights.reserve(f.size());
    for (const auto& t : f.terms()) {
        Rational w = 0;
        for (std::size_t i = 0; i < omega.size(); ++i)
            w += Rational(omega[i]) * t.exp[i];
        weights.push_back(w);
    }
    const Rational best = *std::max_element(weights.begin(), weights.end());
    std::vector<Term> kept;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (weights[k] == best)
            kept.push_back(f.terms()[k]);
    return LaurentPoly::from_terms(f.ring(), std::move(kept));
}

} // namespace

LaurentPoly initial_form(const LaurentPoly& f, std::span<const Rational> omega) {
    return initial_form_impl(f, omega);
}

LaurentPoly initial_form(const LaurentPoly& f, std::span<const long> omega) {
    return initial_form_impl(f, omega);
}

std::optional<Binomial> is_binomial(const LaurentPoly& f) {
    if (f.size() != 2)
        return std::nullopt;
    const auto& a = f.terms()[0];
    const auto& b = f.terms()[1];
    return Binomial{a.exp, b.exp, -b.coeff / a.coeff};
}

} // namespace binom

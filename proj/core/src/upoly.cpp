#include "binom/upoly.hpp"

#include "binom/errors.hpp"

namespace binom {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const mpq_class& c, std::size_t degree) {
    std::vector<mpq_class> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::linear(const mpq_class& root) { return UPoly({-root, mpq_class(1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

UPoly UPoly::monic() const {
    if (c_.empty())
        return *this;
    UPoly r = *this;
    mpq_class inv = 1 / c_.back();
    for (auto& x : r.c_)
        x *= inv;
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<mpq_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
}

mpq_class UPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        r[i] += b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        r[i] -= b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        mpq_class c = c_[i];
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        if (c < 0)
            c = -c;
        if (i == 0 || c != 1)
            s += c.get_str() + (i ? "*" : "");
        if (i > 0)
            s += var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero())
        throw ContractViolation("polynomial division by zero");
    std::vector<mpq_class> rem = a.coeffs();
    if (a.degree() < b.degree())
        return {UPoly{}, a};
    std::vector<mpq_class> quo(a.degree() - b.degree() + 1);
    const mpq_class& lb = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        mpq_class q = rem[k + b.degree()] / lb;
        quo[k] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[k + j] -= q * b[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<UPoly> squarefree_factorization(const UPoly& p) {
    if (p.degree() <= 0)
        return {};
    UPoly f = p.monic();
    UPoly fp = f.derivative();
    UPoly a0 = gcd(f, fp);
    UPoly b = divmod(f, a0).first;
    UPoly c = divmod(fp, a0).first;
    UPoly d = c - b.derivative();
    std::vector<UPoly> out;
    while (b.degree() > 0) {
        UPoly a = gcd(b, d);
        out.push_back(a);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
    }
    return out;
}

} // namespace binom

#include "binom/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace binom {
namespace {

int grevlex_range(const ExponentVector& a, const ExponentVector& b, std::size_t lo,
                  std::size_t hi) noexcept {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::lex() { return {Kind::Lex, 0, {}}; }
MonomialOrder MonomialOrder::grevlex() { return {Kind::Grevlex, 0, {}}; }
MonomialOrder MonomialOrder::elimination(std::size_t k) { return {Kind::Elimination, k, {}}; }
MonomialOrder MonomialOrder::weighted(std::vector<long> omega) {
    return {Kind::Weighted, 0, std::move(omega)};
}

bool MonomialOrder::has_negative_weight() const noexcept {
    return std::any_of(weights_.begin(), weights_.end(), [](long w) { return w < 0; });
}

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const noexcept {
    switch (kind_) {
    case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] > b[i] ? 1 : -1;
        return 0;
    case Kind::Grevlex:
        return grevlex_range(a, b, 0, a.size());
    case Kind::Elimination: {
        std::size_t k = std::min(block_, a.size());
        if (int c = grevlex_range(a, b, 0, k))
            return c;
        return grevlex_range(a, b, k, a.size());
    }
    case Kind::Weighted: {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.size() && i < weights_.size(); ++i) {
            wa += weights_[i] * a[i];
            wb += weights_[i] * b[i];
        }
        if (wa != wb)
            return wa > wb ? 1 : -1;
        return grevlex_range(a, b, 0, a.size());
    }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
    case Kind::Lex:
        return "lex";
    case Kind::Grevlex:
        return "grevlex";
    case Kind::Elimination:
        return "elim(" + std::to_string(block_) + ")";
    case Kind::Weighted: {
        std::string s = "weight(";
        for (std::size_t i = 0; i < weights_.size(); ++i)
            s += (i ? "," : "") + std::to_string(weights_[i]);
        return s + ")";
    }
    }
    return "?";
}

bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    return std::tie(a.kind_, a.block_, a.weights_) < std::tie(b.kind_, b.block_, b.weights_);
}

} // namespace binom

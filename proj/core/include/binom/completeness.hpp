#pragma once

#include <algorithm>
#include <string>

namespace binom {

/// How far a computed answer can be trusted to be complete. Soundness is
/// always exact; the flag only concerns results that might be missing.
enum class Completeness {
    CertifiedTrivial,   ///< determined by exact arithmetic alone
    HeuristicComplete,  ///< numeric or randomized discovery, cross-checked
    FallbackExhausted,  ///< a search budget ran out; result may be partial
};

inline std::string to_string(Completeness c) {
    switch (c) {
    case Completeness::CertifiedTrivial:
        return "certified-trivial";
    case Completeness::HeuristicComplete:
        return "heuristic-complete";
    case Completeness::FallbackExhausted:
        return "fallback-exhausted";
    }
    return "unknown";
}

/// The weaker of two flags.
inline Completeness weakest(Completeness a, Completeness b) { return std::max(a, b); }

} // namespace binom

#include <cstdlib>
#include <string>

#include "biamalg/error.hpp"
#include "biamalg/limits.hpp"

namespace biamalg {

namespace {

Limits read_limits() {
    Limits l;
    if (const char* env = std::getenv("BIAMALG_MAX_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) l.max_order = static_cast<std::size_t>(v);
    }
    return l;
}

}  // namespace

const Limits& default_limits() {
    static const Limits limits = read_limits();
    return limits;
}

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::size_cap: return "size cap exceeded";
        case Errc::wrong_ring: return "element or ideal from the wrong ring";
        case Errc::not_monic: return "polynomial is not monic";
        case Errc::bad_degree: return "polynomial degree must be at least 1";
        case Errc::not_an_ideal: return "not an ideal";
        case Errc::hom_arity: return "wrong number of generator images";
        case Errc::hom_order: return "additive order not respected";
        case Errc::hom_unit: return "unit not preserved";
        case Errc::hom_multiplicative: return "multiplicativity failure";
        case Errc::preimage_mismatch: return "preimages differ";
        case Errc::improper_ideal: return "ideal must be proper";
        case Errc::not_prime: return "ideal is not prime";
        case Errc::mismatched_maps: return "mismatched sources or targets";
        case Errc::budget_exceeded: return "search budget exceeded";
        case Errc::overflow: return "integer overflow";
        case Errc::invalid_argument: return "invalid argument";
    }
    return "unknown error";
}

}  // namespace biamalg

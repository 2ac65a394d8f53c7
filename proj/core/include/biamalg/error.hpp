#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biamalg {

enum class Errc {
    size_cap,
    wrong_ring,
    not_monic,
    bad_degree,
    not_an_ideal,
    hom_arity,
    hom_order,
    hom_unit,
    hom_multiplicative,
    preimage_mismatch,
    improper_ideal,
    not_prime,
    mismatched_maps,
    budget_exceeded,
    overflow,
    invalid_argument,
};

std::string_view to_string(Errc code);

/// Library error. `witness` carries a rendered counterexample when one exists.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::string witness = {})
        : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

    Errc code() const noexcept { return code_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    Errc code_;
    std::string witness_;
};

}  // namespace biamalg

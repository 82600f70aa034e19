#pragma once

#include <stdexcept>
#include <string>

namespace permderiv {

enum class Errc {
    invalid_permutation,
    not_realizable,
    invalid_tree,
    inconsistent,
    duplicate_values,
    out_of_range,
    not_coprime,
    not_strictly_ordered,
    state_not_k_convex,
    odd_order,
    invalid_argument,
};

const char* to_string(Errc code) noexcept;

/// Thrown for every precondition or input-validation failure in the library.
class Error : public std::invalid_argument {
public:
    Error(Errc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace permderiv

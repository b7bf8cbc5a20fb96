#pragma once

#include "ldp/core.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ldp {

/// slope * k + offset, with integer coefficients.
struct AffineForm {
    Int slope = 0;
    Int offset = 0;

    Int at(Int k) const { return slope * k + offset; }

    /// "6k+5", "3k", "4", "-k+2".
    std::string to_string() const;
    /// Inverse of to_string; also accepts whitespace-free forms like "12k+8".
    static std::optional<AffineForm> parse(std::string_view text);

    auto operator<=>(const AffineForm&) const = default;
};

}  // namespace ldp

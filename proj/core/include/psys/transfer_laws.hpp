#pragma once

#include "psys/properties.hpp"

#include <string>
#include <vector>

namespace psys
{

enum class Construction
{
    subsystem, ///< (f, g) with f contained in g
    dual,      ///< f
    inverse,   ///< f
    product,   ///< (f, f')
    serial,    ///< (h, f), meaning h after f
    intersect, ///< (f, g)
    unite,     ///< (f, g)
};

[[nodiscard]] const char* to_string( Construction c );

/// Whether a check is a rule exactly as the theory states it, or a weaker
/// form that survives the counterexamples to the stated rule.
enum class LawForm
{
    as_stated,
    corrected,
};

struct LawCheck
{
    std::string law;
    LawForm form = LawForm::as_stated;
    bool passed = true;
    /// Counterexample data when the check fails.
    std::string detail;
};

struct TransferResult
{
    std::vector<LawCheck> checks;

    [[nodiscard]] bool passed( LawForm form ) const;
};

/// Checks, on this instance, how the boundary properties and state functions
/// of the constructed pseudo-system follow from those of the operands.
/// `second` is required for the binary constructions. Throws InvalidArgument
/// when the instance does not fit the construction.
[[nodiscard]] TransferResult check_transfer_laws( Construction c, const PseudoSystem& first,
                                                  const PseudoSystem* second = nullptr );

} // namespace psys

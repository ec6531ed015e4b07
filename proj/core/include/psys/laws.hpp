#pragma once

#include "psys/transfer_laws.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psys
{

enum class LawGroup
{
    algebra,        ///< operator identities and inclusions
    classification, ///< boundary report consistency
    transfer,       ///< property and state-function transfer through constructions
};

[[nodiscard]] const char* to_string( LawGroup group );
[[nodiscard]] const char* to_string( LawForm form );

struct LawOutcome
{
    std::string name;
    LawGroup group = LawGroup::algebra;
    LawForm form = LawForm::as_stated;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::optional<std::uint64_t> first_failure;
    std::string counterexample;
};

struct LawReport
{
    std::uint64_t seed = 0;
    std::size_t requested = 0;
    std::size_t completed = 0;
    bool timed_out = false;
    std::vector<LawOutcome> laws;

    /// Number of laws with at least one failure.
    [[nodiscard]] std::size_t failing( std::optional<LawGroup> group, LawForm form ) const;
};

/// Runs every law on `iterations` random instances drawn from
/// Generator(seed, i). Stops early, with timed_out set, once `max_seconds`
/// of wall time have been used.
[[nodiscard]] LawReport run_law_suite( std::uint64_t seed, std::size_t iterations,
                                       std::optional<double> max_seconds = std::nullopt );

[[nodiscard]] std::string law_report_json( const LawReport& r );
[[nodiscard]] std::string law_report_text( const LawReport& r );

} // namespace psys

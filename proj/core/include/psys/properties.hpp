#pragma once

#include "psys/pseudo_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace psys
{

/// How uniformly the states of a pseudo-system settle at one end of time.
enum class StateLevel
{
    none,       ///< some state has no limit value
    has_states, ///< every state has a limit value
    race_free,  ///< per input, all states share one limit value
    constant,   ///< one limit value for every state of every input
};

/// Where the witness instant can be chosen.
enum class TimeLevel
{
    unbounded, ///< per state
    bounded,   ///< per input
    fix,       ///< one instant for the whole pseudo-system
};

[[nodiscard]] const char* to_string( StateLevel level );
[[nodiscard]] const char* to_string( TimeLevel level );

struct InputBoundary
{
    Signal input;
    /// Distinct limit values of the states of this input that have one.
    std::vector<BVec> values;
    /// Initial side: earliest departure from the initial value over the
    /// non-constant states with an initial value; any t0 up to it works.
    /// Final side: latest last-change time; any tf from it on works. Empty
    /// when no state constrains the choice.
    std::optional<Time> extremal_instant;
};

struct BoundaryReport
{
    Side side = Side::initial;
    StateLevel state_level = StateLevel::none;
    std::optional<BVec> constant_value;
    TimeLevel time_level = TimeLevel::unbounded;
    std::vector<InputBoundary> per_input;
    std::optional<Time> global_instant;
    /// 'a'..'i': row by state level, column by time level. Empty when the
    /// pseudo-system has no limit values.
    std::optional<char> cell;
    /// f is null: every property holds trivially.
    bool vacuous = false;
};

[[nodiscard]] BoundaryReport boundary_report( const PseudoSystem& f, Side side );

struct StateFunctionReport
{
    Side side = Side::initial;
    /// One entry per input of the universe, in universe order.
    std::vector<std::pair<Signal, std::vector<BVec>>> phi;
    std::vector<BVec> theta;
};

/// Limit values of the states, per input and overall. Throws InvalidArgument
/// naming the first state without a limit on `side`.
[[nodiscard]] StateFunctionReport state_function( const PseudoSystem& f, Side side );

/// Limit-value set of f(u) for an arbitrary input (empty off the universe).
[[nodiscard]] std::vector<BVec> phi_at( const PseudoSystem& f, const Signal& u, Side side );

[[nodiscard]] std::string boundary_report_json( const BoundaryReport& r );
[[nodiscard]] std::string state_function_json( const StateFunctionReport& r );

} // namespace psys

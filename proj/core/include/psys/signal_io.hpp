#pragma once

#include "psys/signal.hpp"
#include "psys/step_function.hpp"

#include <string>
#include <string_view>

namespace psys
{

/// Canonical text block:
///
///     signal <name> dim <n>
///     left const <bits> | left periodic <dur>:<bits> ...
///     events <time>:<bits> ...
///     right const | right periodic <dur>:<bits> ...
[[nodiscard]] std::string format_signal( std::string_view name, const Signal& x );

/// Parses a text holding exactly one signal block. Throws ParseError.
[[nodiscard]] std::pair<std::string, Signal> parse_signal( std::string_view text );

/// Text block with `segments <time>:<point>/<interval> ...` in place of events.
[[nodiscard]] std::string format_step_function( std::string_view name, const StepFunction& f );

/// JSON object with dim, tails and events; times as "p/q" strings.
[[nodiscard]] std::string signal_json( const Signal& x );
[[nodiscard]] std::string step_function_json( const StepFunction& f );

} // namespace psys

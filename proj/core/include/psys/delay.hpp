#pragma once

#include "psys/pseudo_system.hpp"
#include "psys/step_function.hpp"

#include <vector>

namespace psys
{

/// Width of the look-back window of the bounded delay.
class DelayParams
{
public:
    /// Throws InvalidArgument unless d > 0.
    explicit DelayParams( Time d );

    [[nodiscard]] const Time& d() const { return _d; }

private:
    Time _d;
};

/// Window inf of u <= x <= window sup of u, everywhere. Both signals must be
/// one-dimensional with constant tails.
[[nodiscard]] bool delay_membership( const Signal& u, const Signal& x, const DelayParams& p );

/// The shifts of u by each tau in (0, d], deduplicated and sorted.
[[nodiscard]] std::vector<Signal> pure_delay_states( const Signal& u, const DelayParams& p,
                                                     const std::vector<Time>& taus );

/// Finite window onto the delay relation: inputs as given, states the pure
/// delays of every input plus the extra candidates, and each input mapped to
/// every state that passes the membership test.
[[nodiscard]] PseudoSystem delay_snapshot( const std::vector<Signal>& inputs, const DelayParams& p,
                                           const std::vector<Time>& taus, const std::vector<Signal>& extras );

} // namespace psys

#pragma once

#include "psys/signal.hpp"

#include <vector>

namespace psys
{

/// Breakpoint of a step function: `point_value` at `time` itself and
/// `interval_value` on the open interval up to the next breakpoint.
struct StepSegment
{
    Time time;
    BVec point_value;
    BVec interval_value;

    friend bool operator==( const StepSegment&, const StepSegment& ) = default;
};

/// Piecewise constant function that need not be right-continuous.
class StepFunction
{
public:
    /// Builds and canonicalizes. Periodic tails are accepted only as they
    /// arise from embedding a canonical signal.
    static StepFunction make( std::size_t dim, Tail left, std::vector<StepSegment> segments, Tail right );
    static StepFunction embed( const Signal& x );

    [[nodiscard]] std::size_t dim() const { return _dim; }
    [[nodiscard]] const Tail& left_tail() const { return _left; }
    [[nodiscard]] const std::vector<StepSegment>& segments() const { return _segments; }
    [[nodiscard]] const Tail& right_tail() const { return _right; }

    [[nodiscard]] BVec value_at( const Time& t ) const;
    /// Value on a right neighbourhood of t.
    [[nodiscard]] BVec right_limit( const Time& t ) const;
    /// Breakpoints and tail pattern boundaries in the open interval (lo, hi).
    void change_points( const Time& lo, const Time& hi, std::vector<Time>& out ) const;

    friend bool operator==( const StepFunction&, const StepFunction& ) = default;

private:
    StepFunction() = default;

    std::size_t _dim = 0;
    Tail _left;
    std::vector<StepSegment> _segments;
    Tail _right;
};

enum class Extremum
{
    inf,
    sup
};

[[nodiscard]] const char* to_string( Extremum mode );

/// Coordinatewise inf or sup of u over the window [t - d, t). Requires d > 0
/// and constant tails on u.
[[nodiscard]] StepFunction window_extrema( const Signal& u, const Time& d, Extremum mode );

/// a(t) <= b(t) coordinatewise for every real t.
[[nodiscard]] bool pointwise_leq( const StepFunction& a, const StepFunction& b );

} // namespace psys

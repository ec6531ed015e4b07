#pragma once

#include "psys/bvec.hpp"
#include "psys/time.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace psys
{

enum class Side
{
    initial,
    final
};

[[nodiscard]] const char* to_string( Side side );

/// One piece of a periodic pattern: `value` held for `duration`.
struct Segment
{
    Time duration;
    BVec value;

    friend bool operator==( const Segment&, const Segment& ) = default;
    friend std::strong_ordering operator<=>( const Segment&, const Segment& ) = default;
};

struct Event
{
    Time time;
    BVec value;

    friend bool operator==( const Event&, const Event& ) = default;
    friend std::strong_ordering operator<=>( const Event&, const Event& ) = default;
};

/// Unbounded part of a signal.
///
/// On the left, a constant tail carries the initial value and a periodic
/// pattern is laid out so that one full period ends exactly at the anchor.
/// On the right, a constant tail holds the value of the last event (it stores
/// nothing) and a periodic pattern starts at the last event time.
class Tail
{
public:
    static Tail constant( BVec value );
    static Tail hold();
    static Tail periodic( std::vector<Segment> pattern );

    [[nodiscard]] bool is_const() const { return _pattern.empty(); }
    [[nodiscard]] bool is_periodic() const { return !_pattern.empty(); }

    /// Value of a constant tail; empty for `hold()`.
    [[nodiscard]] const std::optional<BVec>& value() const { return _value; }
    [[nodiscard]] const std::vector<Segment>& pattern() const { return _pattern; }
    [[nodiscard]] Time period() const;

    /// Pattern value at offset r in [0, period).
    [[nodiscard]] const BVec& pattern_at( const Time& r ) const;
    /// Pattern value just before offset r in [0, period); r = 0 wraps around.
    [[nodiscard]] const BVec& pattern_before( const Time& r ) const;

    friend bool operator==( const Tail&, const Tail& ) = default;
    friend std::strong_ordering operator<=>( const Tail& a, const Tail& b );

private:
    std::optional<BVec> _value;
    std::vector<Segment> _pattern;
};

/// Right-continuous, finitely represented Boolean vector function of time.
///
/// Values are kept in canonical form: two signals are equal as functions iff
/// they compare equal structurally. The canonical anchor is the first point
/// where the function departs from its left tail (0 for constants); the last
/// event is the first point from which the right tail describes the function.
class Signal
{
public:
    /// Builds and canonicalizes. Throws DimensionError or InvalidArgument when
    /// events are empty, times do not increase, widths disagree, patterns are
    /// empty or have non-positive durations, or a periodic right tail does not
    /// start with the last event's value.
    static Signal make( std::size_t dim, Tail left, std::vector<Event> events, Tail right );
    static Signal constant( BVec value );

    [[nodiscard]] std::size_t dim() const { return _dim; }
    [[nodiscard]] const Tail& left_tail() const { return _left; }
    [[nodiscard]] const std::vector<Event>& events() const { return _events; }
    [[nodiscard]] const Tail& right_tail() const { return _right; }
    [[nodiscard]] const Time& anchor() const { return _events.front().time; }
    [[nodiscard]] const Time& last_time() const { return _events.back().time; }

    [[nodiscard]] BVec value_at( const Time& t ) const;
    /// Value on a left neighbourhood of t.
    [[nodiscard]] BVec left_limit( const Time& t ) const;

    /// Initial (t -> -inf) or final (t -> +inf) value, when it exists.
    [[nodiscard]] std::optional<BVec> limit_value( Side side ) const;

    /// Has an initial value.
    [[nodiscard]] bool in_S() const { return _left.is_const(); }
    /// Has a final value.
    [[nodiscard]] bool in_S_star() const { return _right.is_const(); }
    [[nodiscard]] bool is_constant() const;

    /// Appends every representation boundary in the open interval (lo, hi).
    void change_points( const Time& lo, const Time& hi, std::vector<Time>& out ) const;

    friend bool operator==( const Signal&, const Signal& ) = default;
    friend std::strong_ordering operator<=>( const Signal& a, const Signal& b );

private:
    friend struct SignalAccess;
    Signal() = default;

    std::size_t _dim = 0;
    Tail _left;
    std::vector<Event> _events;
    Tail _right;
};

struct MembershipClass
{
    bool in_S;
    bool in_S_star;

    friend bool operator==( const MembershipClass&, const MembershipClass& ) = default;
};

[[nodiscard]] MembershipClass membership_class( const Signal& x );

/// Coordinatewise Boolean complement.
[[nodiscard]] Signal complement( const Signal& x );

/// t -> x(t - tau).
[[nodiscard]] Signal shift( const Signal& x, const Time& tau );

/// (x, y)(t) = x(t) followed by y(t).
[[nodiscard]] Signal concat( const Signal& x, const Signal& y );

/// Coordinates [first, first + count), zero based.
[[nodiscard]] Signal project( const Signal& x, std::size_t first, std::size_t count );

} // namespace psys

#pragma once

// Internal: evaluation of raw (not necessarily canonical) representations and
// the canonicalizer shared by every signal constructor.

#include "psys/signal.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace psys::detail
{

/// A right-continuous function described by its behaviour left of `left_edge`
/// (constant, or periodic with `left_period`) and right of `right_edge`
/// (constant, or periodic with `right_period`), plus evaluation callbacks.
struct Source
{
    std::size_t dim = 0;
    Time left_edge;
    Time right_edge;
    std::optional<Time> left_period;
    std::optional<Time> right_period;
    std::function<BVec( const Time& )> value;
    std::function<BVec( const Time& )> left_limit;
    /// Appends candidate change points in the open interval (lo, hi).
    std::function<void( const Time&, const Time&, std::vector<Time>& )> cuts;
};

/// Evaluation of the (left tail, events, right tail) triple, canonical or not.
struct Repr
{
    std::size_t dim = 0;
    const Tail* left = nullptr;
    const std::vector<Event>* events = nullptr;
    const Tail* right = nullptr;

    [[nodiscard]] BVec value_at( const Time& t ) const;
    [[nodiscard]] BVec left_limit( const Time& t ) const;
    void cuts( const Time& lo, const Time& hi, std::vector<Time>& out ) const;
};

/// Pattern boundaries `origin + offset + k * period` lying in (lo, hi) and in
/// [region_lo, region_hi).
void periodic_cuts( const Tail& tail, const Time& origin, const Time& lo, const Time& hi,
                    const std::optional<Time>& region_lo, const std::optional<Time>& region_hi,
                    std::vector<Time>& out );

[[nodiscard]] Source source_of( const Signal& x );

[[nodiscard]] Signal canonicalize( const Source& src );

/// Smallest period of the cyclic function described by a merged pattern.
[[nodiscard]] Time minimal_period( const std::vector<Segment>& pattern );

void sort_unique( std::vector<Time>& v );

} // namespace psys::detail

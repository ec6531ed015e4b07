#pragma once

// Internal: JSON renderings shared by the exporters.

#include "psys/signal.hpp"
#include "psys/step_function.hpp"

#include <json.hpp>

namespace psys::detail
{

inline nlohmann::ordered_json to_json( const Tail& tail, bool left )
{
    nlohmann::ordered_json j;
    if ( tail.is_const() )
    {
        j[ "kind" ] = "const";
        if ( left )
            j[ "value" ] = tail.value()->str();
        return j;
    }
    j[ "kind" ] = "periodic";
    j[ "pattern" ] = nlohmann::ordered_json::array();
    for ( const auto& s : tail.pattern() )
        j[ "pattern" ].push_back( { s.duration.str(), s.value.str() } );
    return j;
}

inline nlohmann::ordered_json to_json( const Signal& x )
{
    nlohmann::ordered_json j;
    j[ "dim" ] = x.dim();
    j[ "left" ] = to_json( x.left_tail(), true );
    j[ "events" ] = nlohmann::ordered_json::array();
    for ( const auto& e : x.events() )
        j[ "events" ].push_back( { e.time.str(), e.value.str() } );
    j[ "right" ] = to_json( x.right_tail(), false );
    return j;
}

inline nlohmann::ordered_json to_json( const StepFunction& f )
{
    nlohmann::ordered_json j;
    j[ "dim" ] = f.dim();
    j[ "left" ] = to_json( f.left_tail(), true );
    j[ "segments" ] = nlohmann::ordered_json::array();
    for ( const auto& s : f.segments() )
        j[ "segments" ].push_back( { s.time.str(), s.point_value.str(), s.interval_value.str() } );
    j[ "right" ] = to_json( f.right_tail(), false );
    return j;
}

} // namespace psys::detail

#pragma once

// Random delay widths and candidate states for delay membership checks.

#include <psys/generator.hpp>
#include <psys/signal.hpp>

#include <algorithm>

namespace delay_instances
{

using namespace psys;

inline Time draw_d( Generator& gen )
{
    return Time( 1 + static_cast<long>( gen.below( 6 ) ), 2 );
}

/// A candidate state: a shift of u (possibly too far), u itself, u with one
/// event moved or flipped, or an unrelated signal.
inline Signal candidate( Generator& gen, const Signal& u, const Time& d )
{
    switch ( gen.below( 5 ) )
    {
    case 0:
        return shift( u, d * Time( static_cast<long>( gen.below( 9 ) ), 4 ) );
    case 1:
        return u;
    case 2: {
        std::vector<Event> ev = u.events();
        auto& e = ev[ gen.below( ev.size() ) ];
        e.time = e.time + Time( static_cast<long>( gen.below( 5 ) ) - 2, 4 );
        std::sort( ev.begin(), ev.end(), []( const Event& a, const Event& b ) { return a.time < b.time; } );
        for ( std::size_t k = 1; k < ev.size(); ++k )
            if ( ev[ k ].time == ev[ k - 1 ].time )
                return u;
        return Signal::make( 1, u.left_tail(), ev, Tail::hold() );
    }
    case 3: {
        std::vector<Event> ev = u.events();
        ev.push_back( { ev.back().time + Time( 1, 4 ), ev.back().value.complement() } );
        ev.push_back( { ev.back().time + Time( 1, 8 ), ev.back().value.complement() } );
        return Signal::make( 1, u.left_tail(), ev, Tail::hold() );
    }
    default:
        return gen.s_signal( 1, 6 );
    }
}

} // namespace delay_instances

#include "psys/generator.hpp"

#include <algorithm>

namespace psys
{

std::uint64_t instance_seed( std::uint64_t seed, std::uint64_t index )
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * ( index + 1 );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebULL;
    return z ^ ( z >> 31 );
}

Generator::Generator( std::uint64_t seed, std::uint64_t index ) : Generator( seed, index, Config{} ) {}

Generator::Generator( std::uint64_t seed, std::uint64_t index, Config config )
        : _config{ config }, _engine{ instance_seed( seed, index ) }
{
}

std::size_t Generator::below( std::size_t n )
{
    return static_cast<std::size_t>( _engine() % n );
}

bool Generator::chance( double p )
{
    return static_cast<double>( _engine() >> 11 ) * 0x1.0p-53 < p;
}

Time Generator::step()
{
    return Time( static_cast<long>( 1 + below( 4 ) ), 2 );
}

BVec Generator::bits( std::size_t dim )
{
    BVec v( dim );
    for ( std::size_t j = 0; j < dim; ++j )
        v.set( j, below( 2 ) == 1 );
    return v;
}

std::vector<Segment> Generator::pattern( std::size_t dim, const BVec* first )
{
    const std::size_t pieces = 2 + below( 2 );
    std::vector<Segment> p;
    for ( std::size_t k = 0; k < pieces; ++k )
        p.push_back( Segment{ step(), k == 0 && first ? *first : bits( dim ) } );
    return p;
}

Signal Generator::signal( std::size_t dim )
{
    const std::size_t count = 1 + below( _config.max_events );
    std::vector<Event> events;
    Time t( static_cast<long>( below( 9 ) ) - 4 );
    for ( std::size_t k = 0; k < count; ++k )
    {
        events.push_back( Event{ t, bits( dim ) } );
        t += step();
    }
    Tail left = chance( _config.const_tail_probability ) ? Tail::constant( bits( dim ) )
                                                         : Tail::periodic( pattern( dim, nullptr ) );
    Tail right = chance( _config.const_tail_probability ) ? Tail::hold()
                                                          : Tail::periodic( pattern( dim, &events.back().value ) );
    return Signal::make( dim, std::move( left ), std::move( events ), std::move( right ) );
}

Signal Generator::s_signal( std::size_t dim, std::size_t max_events )
{
    const std::size_t count = 1 + below( max_events );
    std::vector<Event> events;
    Time t( static_cast<long>( below( 9 ) ) - 4 );
    for ( std::size_t k = 0; k < count; ++k )
    {
        events.push_back( Event{ t, bits( dim ) } );
        t += step();
    }
    return Signal::make( dim, Tail::constant( bits( dim ) ), std::move( events ), Tail::hold() );
}

std::vector<Signal> Generator::universe( std::size_t dim )
{
    const std::size_t size = 1 + below( _config.max_universe );
    SignalSet out;
    for ( std::size_t k = 0; k < size; ++k )
        out.insert( signal( dim ) );
    return { out.begin(), out.end() };
}

std::vector<Signal> Generator::universe_from( const std::vector<Signal>& pool, std::size_t dim )
{
    const std::size_t size = 1 + below( _config.max_universe );
    SignalSet out;
    for ( std::size_t k = 0; k < size; ++k )
    {
        if ( !pool.empty() && pool.front().dim() == dim && below( 3 ) != 0 )
            out.insert( pool[ below( pool.size() ) ] );
        else
            out.insert( signal( dim ) );
    }
    return { out.begin(), out.end() };
}

PseudoSystem Generator::system( std::size_t m, std::size_t n )
{
    auto inputs = universe( m );
    auto states = universe( n );
    return system_over( m, n, std::move( inputs ), std::move( states ) );
}

PseudoSystem Generator::system_over( std::size_t m, std::size_t n, std::vector<Signal> inputs,
                                     std::vector<Signal> states )
{
    const std::size_t density = below( 5 ); // quarters
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t i = 0; i < inputs.size(); ++i )
    {
        std::vector<std::size_t> row;
        for ( std::size_t j = 0; j < states.size(); ++j )
            if ( below( 4 ) < density )
                row.push_back( j );
        table.emplace_back( i, std::move( row ) );
    }
    return PseudoSystem::build( m, n, std::move( inputs ), std::move( states ), table );
}

PseudoSystem Generator::subsystem_of( const PseudoSystem& g )
{
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t i = 0; i < g.inputs().size(); ++i )
    {
        std::vector<std::size_t> row;
        for ( auto j : g.image( i ) )
            if ( below( 2 ) == 0 )
                row.push_back( j );
        table.emplace_back( i, std::move( row ) );
    }
    return PseudoSystem::build( g.m(), g.n(), g.inputs(), g.states(), table );
}

} // namespace psys

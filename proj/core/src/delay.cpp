#include "psys/delay.hpp"

#include "psys/error.hpp"

#include <algorithm>

namespace psys
{

DelayParams::DelayParams( Time d ) : _d{ std::move( d ) }
{
    if ( !_d.is_positive() )
        throw InvalidArgument( "delay window must be positive, got " + _d.str() );
}

namespace
{

void require_delay_signal( const Signal& x, const char* what )
{
    if ( x.dim() != 1 )
        throw DimensionError( std::string( what ) + " must be one-dimensional, got dimension "
                              + std::to_string( x.dim() ) );
    if ( !x.in_S() || !x.in_S_star() )
        throw Unsupported( std::string( what ) + " must have constant tails" );
}

} // namespace

bool delay_membership( const Signal& u, const Signal& x, const DelayParams& p )
{
    require_delay_signal( u, "delay input" );
    require_delay_signal( x, "delay state" );
    const StepFunction embedded = StepFunction::embed( x );
    return pointwise_leq( window_extrema( u, p.d(), Extremum::inf ), embedded )
           && pointwise_leq( embedded, window_extrema( u, p.d(), Extremum::sup ) );
}

std::vector<Signal> pure_delay_states( const Signal& u, const DelayParams& p, const std::vector<Time>& taus )
{
    require_delay_signal( u, "delay input" );
    SignalSet out;
    for ( const auto& tau : taus )
    {
        if ( !tau.is_positive() || tau > p.d() )
            throw InvalidArgument( "delay " + tau.str() + " outside (0, " + p.d().str() + "]" );
        out.insert( shift( u, tau ) );
    }
    return { out.begin(), out.end() };
}

PseudoSystem delay_snapshot( const std::vector<Signal>& inputs, const DelayParams& p, const std::vector<Time>& taus,
                             const std::vector<Signal>& extras )
{
    const SignalSet in( inputs.begin(), inputs.end() );
    SignalSet states;
    for ( const auto& u : in )
    {
        auto delays = pure_delay_states( u, p, taus );
        states.insert( delays.begin(), delays.end() );
    }
    for ( const auto& x : extras )
    {
        require_delay_signal( x, "candidate state" );
        states.insert( x );
    }
    std::map<Signal, SignalSet> relation;
    for ( const auto& u : in )
        for ( const auto& x : states )
            if ( delay_membership( u, x, p ) )
                relation[ u ].insert( x );
    return PseudoSystem::from_relation( 1, 1, in, states, relation );
}

} // namespace psys

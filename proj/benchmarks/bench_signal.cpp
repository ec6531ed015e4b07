#include <psys/delay.hpp>
#include <psys/generator.hpp>
#include <psys/signal.hpp>
#include <psys/step_function.hpp>

#include <benchmark/benchmark.h>

using namespace psys;

namespace
{

std::vector<Signal> inputs( std::size_t count, std::size_t events )
{
    std::vector<Signal> out;
    for ( std::size_t i = 0; i < count; ++i )
    {
        Generator gen( 9, i );
        out.push_back( gen.s_signal( 1, events ) );
    }
    return out;
}

void WindowExtrema( benchmark::State& state )
{
    const auto us = inputs( 64, static_cast<std::size_t>( state.range( 0 ) ) );
    const Time d( 3, 2 );
    std::size_t k = 0;
    for ( auto _ : state )
    {
        const auto& u = us[ k++ % us.size() ];
        benchmark::DoNotOptimize( window_extrema( u, d, Extremum::inf ) );
        benchmark::DoNotOptimize( window_extrema( u, d, Extremum::sup ) );
    }
}
BENCHMARK( WindowExtrema )->Arg( 4 )->Arg( 16 )->Arg( 64 );

void DelayMembership( benchmark::State& state )
{
    const auto us = inputs( 64, static_cast<std::size_t>( state.range( 0 ) ) );
    const DelayParams p( Time( 3, 2 ) );
    std::vector<Signal> xs;
    for ( const auto& u : us )
        xs.push_back( shift( u, Time( 3, 4 ) ) );
    std::size_t k = 0;
    for ( auto _ : state )
    {
        const std::size_t i = k++ % us.size();
        benchmark::DoNotOptimize( delay_membership( us[ i ], xs[ i ], p ) );
    }
}
BENCHMARK( DelayMembership )->Arg( 4 )->Arg( 16 )->Arg( 64 );

void Canonicalize( benchmark::State& state )
{
    std::vector<Signal> xs;
    for ( std::size_t i = 0; i < 64; ++i )
    {
        Generator gen( 10, i );
        xs.push_back( gen.signal( 2 ) );
    }
    std::size_t k = 0;
    for ( auto _ : state )
    {
        const auto& x = xs[ k++ % xs.size() ];
        benchmark::DoNotOptimize( Signal::make( x.dim(), x.left_tail(), x.events(), x.right_tail() ) );
    }
}
BENCHMARK( Canonicalize );

void Concat( benchmark::State& state )
{
    std::vector<Signal> xs;
    for ( std::size_t i = 0; i < 64; ++i )
    {
        Generator gen( 11, i );
        xs.push_back( gen.signal( 1 ) );
    }
    std::size_t k = 0;
    for ( auto _ : state )
    {
        const auto& a = xs[ k % xs.size() ];
        const auto& b = xs[ ( k * 7 + 3 ) % xs.size() ];
        ++k;
        benchmark::DoNotOptimize( concat( a, b ) );
    }
}
BENCHMARK( Concat );

} // namespace

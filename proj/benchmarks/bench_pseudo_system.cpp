#include <psys/generator.hpp>
#include <psys/laws.hpp>
#include <psys/properties.hpp>
#include <psys/pseudo_system.hpp>

#include <benchmark/benchmark.h>

using namespace psys;

namespace
{

std::vector<PseudoSystem> systems( std::uint64_t seed, std::size_t count )
{
    std::vector<PseudoSystem> out;
    for ( std::size_t i = 0; i < count; ++i )
    {
        Generator gen( seed, i );
        out.push_back( gen.system( 1, 1 ) );
    }
    return out;
}

void Product( benchmark::State& state )
{
    const auto fs = systems( 12, 64 );
    std::size_t k = 0;
    for ( auto _ : state )
    {
        const auto& f = fs[ k % fs.size() ];
        const auto& g = fs[ ( k * 5 + 1 ) % fs.size() ];
        ++k;
        benchmark::DoNotOptimize( product( f, g ) );
    }
}
BENCHMARK( Product );

void Serial( benchmark::State& state )
{
    const auto fs = systems( 13, 64 );
    std::size_t k = 0;
    for ( auto _ : state )
    {
        const auto& f = fs[ k++ % fs.size() ];
        benchmark::DoNotOptimize( serial( inverse( f ), f ) );
    }
}
BENCHMARK( Serial );

void BoundaryReport( benchmark::State& state )
{
    const auto fs = systems( 14, 64 );
    std::size_t k = 0;
    for ( auto _ : state )
        benchmark::DoNotOptimize( boundary_report( fs[ k++ % fs.size() ], Side::initial ) );
}
BENCHMARK( BoundaryReport );

void LawSuiteIteration( benchmark::State& state )
{
    std::uint64_t seed = 0;
    for ( auto _ : state )
        benchmark::DoNotOptimize( run_law_suite( ++seed, 1 ) );
}
BENCHMARK( LawSuiteIteration )->Unit( benchmark::kMillisecond );

} // namespace

BENCHMARK_MAIN();

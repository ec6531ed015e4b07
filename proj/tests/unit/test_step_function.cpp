#include "helpers.hpp"
#include "oracles.hpp"

#include <psys/error.hpp>
#include <psys/generator.hpp>
#include <psys/step_function.hpp>

#include <gtest/gtest.h>

using namespace psys;
using testing_helpers::constant;
using testing_helpers::sig;

namespace
{

BVec b( const char* bits )
{
    return BVec::parse( bits );
}

Time draw_d( Generator& gen )
{
    return Time( 1 + static_cast<long>( gen.below( 6 ) ), 2 );
}

} // namespace

TEST( StepFunction, EmbeddingKeepsPointAndIntervalValuesEqual )
{
    const Signal x = sig( "1", "const 0", "0:1 2:0", "const" );
    const StepFunction f = StepFunction::embed( x );
    ASSERT_EQ( f.segments().size(), 2u );
    for ( const auto& s : f.segments() )
        EXPECT_EQ( s.point_value, s.interval_value );
    EXPECT_EQ( f.value_at( Time( 1 ) ), b( "1" ) );
    EXPECT_EQ( f.right_limit( Time( 2 ) ), b( "0" ) );
}

TEST( StepFunction, EmbeddingIsInjective )
{
    for ( std::uint64_t i = 0; i < 200; ++i )
    {
        Generator gen( 21, i );
        const Signal x = gen.signal( 1 );
        const Signal y = gen.signal( 1 );
        EXPECT_EQ( x == y, StepFunction::embed( x ) == StepFunction::embed( y ) );
    }
}

TEST( StepFunction, MakeMergesDegenerateSegments )
{
    const StepFunction f = StepFunction::make( 1, Tail::constant( b( "0" ) ),
                                               { { Time( 0 ), b( "0" ), b( "0" ) },
                                                 { Time( 1 ), b( "1" ), b( "0" ) },
                                                 { Time( 2 ), b( "0" ), b( "0" ) } },
                                               Tail::hold() );
    ASSERT_EQ( f.segments().size(), 1u );
    EXPECT_EQ( f.segments()[ 0 ], ( StepSegment{ Time( 1 ), b( "1" ), b( "0" ) } ) );
}

TEST( WindowExtrema, ConstantInputGivesConstantOutput )
{
    for ( const char* bits : { "0", "1", "01" } )
        for ( Extremum mode : { Extremum::inf, Extremum::sup } )
            EXPECT_EQ( window_extrema( constant( bits ), Time( 1 ), mode ), StepFunction::embed( constant( bits ) ) );
}

TEST( WindowExtrema, RisingEdgeFrozenValues )
{
    // u = 0 before 2, 1 from 2 on; d = 1
    const Signal u = sig( "1", "const 0", "2:1", "const" );
    const StepFunction sup = window_extrema( u, Time( 1 ), Extremum::sup );
    const StepFunction inf = window_extrema( u, Time( 1 ), Extremum::inf );
    // the sup is 0 up to and including 2 and 1 right after
    ASSERT_EQ( sup.segments().size(), 1u );
    EXPECT_EQ( sup.segments()[ 0 ], ( StepSegment{ Time( 2 ), b( "0" ), b( "1" ) } ) );
    // the inf is 0 before 3 and 1 from 3 on
    ASSERT_EQ( inf.segments().size(), 1u );
    EXPECT_EQ( inf.segments()[ 0 ], ( StepSegment{ Time( 3 ), b( "1" ), b( "1" ) } ) );

    for ( Extremum mode : { Extremum::inf, Extremum::sup } )
    {
        const StepFunction w = window_extrema( u, Time( 1 ), mode );
        const auto ref = oracle::window( u, Time( 1 ) );
        for ( std::size_t i = 0; i < ref.tests.size(); ++i )
            ASSERT_EQ( w.value_at( ref.tests[ i ] ), mode == Extremum::inf ? ref.inf[ i ] : ref.sup[ i ] );
    }
}

TEST( WindowExtrema, ShortPulseShowsOnlyAtPoints )
{
    // a pulse of width 1/2 seen through a window of width 2
    const Signal u = sig( "1", "const 0", "0:1 1/2:0", "const" );
    const StepFunction sup = window_extrema( u, Time( 2 ), Extremum::sup );
    EXPECT_EQ( sup.value_at( Time( 0 ) ), b( "0" ) );
    EXPECT_EQ( sup.value_at( Time( 1, 100 ) ), b( "1" ) );
    EXPECT_EQ( sup.value_at( Time( 2 ) ), b( "1" ) );
    EXPECT_EQ( sup.value_at( Time( 5, 2 ) ), b( "0" ) );
    const StepFunction inf = window_extrema( u, Time( 2 ), Extremum::inf );
    EXPECT_EQ( inf, StepFunction::embed( constant( "0" ) ) );
}

TEST( WindowExtrema, MatchesDenseGridOracle )
{
    for ( std::uint64_t i = 0; i < 200; ++i )
    {
        Generator gen( 22, i );
        const Signal u = gen.s_signal( 1 + gen.below( 2 ), 6 );
        const Time d = draw_d( gen );
        const auto ref = oracle::window( u, d );
        const StepFunction inf = window_extrema( u, d, Extremum::inf );
        const StepFunction sup = window_extrema( u, d, Extremum::sup );
        for ( std::size_t k = 0; k < ref.tests.size(); ++k )
        {
            ASSERT_EQ( inf.value_at( ref.tests[ k ] ), ref.inf[ k ] ) << format_signal( "u", u ) << d.str();
            ASSERT_EQ( sup.value_at( ref.tests[ k ] ), ref.sup[ k ] ) << format_signal( "u", u ) << d.str();
        }
    }
}

TEST( WindowExtrema, BreakpointsComeFromEventsAndShiftedEvents )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 23, i );
        const Signal u = gen.s_signal( 1 + gen.below( 2 ), 6 );
        const Time d = draw_d( gen );
        std::vector<Time> allowed;
        for ( const auto& e : u.events() )
        {
            allowed.push_back( e.time );
            allowed.push_back( e.time + d );
        }
        for ( Extremum mode : { Extremum::inf, Extremum::sup } )
        {
            const StepFunction w = window_extrema( u, d, mode );
            for ( std::size_t k = 0; k < w.segments().size(); ++k )
            {
                const auto& s = w.segments()[ k ];
                const BVec before = k == 0 ? *w.left_tail().value() : w.segments()[ k - 1 ].interval_value;
                if ( s.point_value == before && s.interval_value == before )
                    continue;
                EXPECT_NE( std::find( allowed.begin(), allowed.end(), s.time ), allowed.end() );
            }
        }
    }
}

TEST( WindowExtrema, InfNeverExceedsSup )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 24, i );
        const Signal u = gen.s_signal( 2, 6 );
        const Time d = draw_d( gen );
        EXPECT_TRUE( pointwise_leq( window_extrema( u, d, Extremum::inf ), window_extrema( u, d, Extremum::sup ) ) );
    }
}

TEST( WindowExtrema, Errors )
{
    const Signal u = sig( "1", "const 0", "0:1", "const" );
    EXPECT_THROW( (void)window_extrema( u, Time( 0 ), Extremum::inf ), InvalidArgument );
    EXPECT_THROW( (void)window_extrema( u, Time( -1 ), Extremum::sup ), InvalidArgument );
    EXPECT_THROW( (void)window_extrema( sig( "1", "periodic 1:0 1:1", "0:1", "const" ), Time( 1 ), Extremum::inf ),
                  Unsupported );
    EXPECT_THROW( (void)window_extrema( sig( "1", "const 0", "0:1", "periodic 1:1 1:0" ), Time( 1 ), Extremum::inf ),
                  Unsupported );
}

TEST( PointwiseLeq, Basics )
{
    const auto zero = StepFunction::embed( constant( "0" ) );
    const auto one = StepFunction::embed( constant( "1" ) );
    EXPECT_TRUE( pointwise_leq( zero, one ) );
    EXPECT_FALSE( pointwise_leq( one, zero ) );
    EXPECT_THROW( (void)pointwise_leq( zero, StepFunction::embed( constant( "01" ) ) ), DimensionError );
}

TEST( PointwiseLeq, ReflexiveAndAgreesWithSampling )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 25, i );
        const Signal x = gen.signal( 1 );
        const Signal y = gen.signal( 1 );
        const auto fx = StepFunction::embed( x );
        const auto fy = StepFunction::embed( y );
        EXPECT_TRUE( pointwise_leq( fx, fx ) );
        bool sampled = true;
        for ( Time t = std::min( x.anchor(), y.anchor() ) - Time( 40 );
              t <= std::max( x.last_time(), y.last_time() ) + Time( 40 ); t = t + Time( 1, 4 ) )
            sampled = sampled && oracle::value( x, t ).leq( oracle::value( y, t ) );
        EXPECT_EQ( pointwise_leq( fx, fy ), sampled ) << format_signal( "x", x ) << format_signal( "y", y );
    }
}

TEST( PointwiseLeq, ShiftedSignalSitsBetweenWindowBounds )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 26, i );
        const Signal u = gen.s_signal( 1, 4 );
        const Time d = draw_d( gen );
        for ( long k = 1; k <= 4; ++k )
        {
            const auto x = StepFunction::embed( shift( u, d * Time( k, 4 ) ) );
            EXPECT_TRUE( pointwise_leq( window_extrema( u, d, Extremum::inf ), x ) );
            EXPECT_TRUE( pointwise_leq( x, window_extrema( u, d, Extremum::sup ) ) );
        }
    }
}

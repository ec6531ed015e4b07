#include "delay_instances.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <psys/delay.hpp>
#include <psys/error.hpp>
#include <psys/generator.hpp>
#include <psys/properties.hpp>

#include <gtest/gtest.h>

using namespace psys;
using testing_helpers::constant;
using testing_helpers::sig;

using delay_instances::candidate;
using delay_instances::draw_d;

TEST( DelayParams, RequiresPositiveWidth )
{
    EXPECT_THROW( DelayParams( Time( 0 ) ), InvalidArgument );
    EXPECT_THROW( DelayParams( Time( -1, 2 ) ), InvalidArgument );
    EXPECT_EQ( DelayParams( Time( 3, 2 ) ).d(), Time( 3, 2 ) );
}

TEST( DelayMembership, ConstantInput )
{
    const DelayParams p( Time( 1 ) );
    EXPECT_TRUE( delay_membership( constant( "1" ), constant( "1" ), p ) );
    EXPECT_FALSE( delay_membership( constant( "1" ), constant( "0" ), p ) );
}

TEST( DelayMembership, Errors )
{
    const DelayParams p( Time( 1 ) );
    EXPECT_THROW( (void)delay_membership( constant( "01" ), constant( "01" ), p ), DimensionError );
    EXPECT_THROW( (void)delay_membership( constant( "1" ), constant( "01" ), p ), DimensionError );
    EXPECT_THROW( (void)delay_membership( sig( "1", "periodic 1:0 1:1", "0:1", "const" ), constant( "1" ), p ),
                  Unsupported );
    EXPECT_THROW( (void)delay_membership( constant( "1" ), sig( "1", "const 0", "0:1", "periodic 1:1 1:0" ), p ),
                  Unsupported );
}

TEST( DelayMembership, PureDelaysWithinTheWindowAreMembers )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 71, i );
        const Signal u = gen.s_signal( 1, 6 );
        const DelayParams p( draw_d( gen ) );
        for ( long k = 1; k <= 4; ++k )
            EXPECT_TRUE( delay_membership( u, shift( u, p.d() * Time( k, 4 ) ), p ) );
        // no delay at all is not a solution once u switches
        EXPECT_EQ( delay_membership( u, u, p ), u.is_constant() );
    }
}

TEST( DelayMembership, SwitchForcesTheOldValue )
{
    // at the rising edge the window still holds only 0
    const Signal u = sig( "1", "const 0", "2:1", "const" );
    const DelayParams p( Time( 1 ) );
    EXPECT_FALSE( delay_membership( u, u, p ) );
    EXPECT_TRUE( delay_membership( u, shift( u, Time( 1, 100 ) ), p ) );
    EXPECT_FALSE( delay_membership( u, shift( u, Time( 101, 100 ) ), p ) );
}

TEST( DelayMembership, AgreesWithDenseGridOracle )
{
    std::size_t members = 0;
    for ( std::uint64_t i = 0; i < 500; ++i )
    {
        Generator gen( 72, i );
        const Signal u = gen.s_signal( 1, 6 );
        const Time d = draw_d( gen );
        const Signal x = candidate( gen, u, d );
        const bool got = delay_membership( u, x, DelayParams( d ) );
        ASSERT_EQ( got, oracle::delay_member( u, x, d ) )
                << format_signal( "u", u ) << format_signal( "x", x ) << "d " << d.str();
        members += got ? 1 : 0;
    }
    EXPECT_GT( members, 50u );
    EXPECT_LT( members, 450u );
}

TEST( DelayMembership, MembersInheritTheLimitsOfTheInput )
{
    for ( std::uint64_t i = 0; i < 500; ++i )
    {
        Generator gen( 73, i );
        const Signal u = gen.s_signal( 1, 6 );
        const Time d = draw_d( gen );
        const Signal x = candidate( gen, u, d );
        if ( !delay_membership( u, x, DelayParams( d ) ) )
            continue;
        EXPECT_EQ( x.limit_value( Side::initial ), u.limit_value( Side::initial ) );
        EXPECT_EQ( x.limit_value( Side::final ), u.limit_value( Side::final ) );
    }
}

TEST( PureDelayStates, Examples )
{
    const DelayParams p( Time( 2 ) );
    const std::vector<Time> taus{ Time( 1, 2 ), Time( 1 ), Time( 2 ) };
    EXPECT_EQ( pure_delay_states( constant( "1" ), p, taus ), std::vector<Signal>{ constant( "1" ) } );
    const Signal u = sig( "1", "const 0", "0:1", "const" );
    const auto xs = pure_delay_states( u, p, { Time( 1 ), Time( 2 ) } );
    ASSERT_EQ( xs.size(), 2u );
    EXPECT_NE( xs[ 0 ], xs[ 1 ] );
    for ( const auto& x : xs )
        EXPECT_TRUE( delay_membership( u, x, p ) );
    EXPECT_TRUE( pure_delay_states( u, p, {} ).empty() );
    EXPECT_THROW( (void)pure_delay_states( u, p, { Time( 0 ) } ), InvalidArgument );
    EXPECT_THROW( (void)pure_delay_states( u, p, { Time( 5, 2 ) } ), InvalidArgument );
}

TEST( DelaySnapshot, ConstantInput )
{
    const DelayParams p( Time( 1 ) );
    const PseudoSystem f = delay_snapshot( { constant( "0" ) }, p, { Time( 1 ) }, { constant( "1" ) } );
    EXPECT_EQ( f.apply( constant( "0" ) ), std::vector<Signal>{ constant( "0" ) } );
    EXPECT_EQ( f.states().size(), 2u );
}

TEST( DelaySnapshot, IsARaceFreeSystem )
{
    for ( std::uint64_t i = 0; i < 100; ++i )
    {
        Generator gen( 74, i );
        const Time d = draw_d( gen );
        std::vector<Signal> inputs;
        std::vector<Signal> extras;
        for ( std::size_t k = 0; k <= gen.below( 3 ); ++k )
            inputs.push_back( gen.s_signal( 1, 6 ) );
        for ( std::size_t k = 0; k < 4; ++k )
            extras.push_back( candidate( gen, inputs[ gen.below( inputs.size() ) ], d ) );
        std::sort( inputs.begin(), inputs.end() );
        inputs.erase( std::unique( inputs.begin(), inputs.end() ), inputs.end() );
        const PseudoSystem f = delay_snapshot( inputs, DelayParams( d ), { d / Time( 2 ), d }, extras );
        EXPECT_TRUE( is_system( f ) );
        const BoundaryReport r = boundary_report( f, Side::initial );
        EXPECT_GE( r.state_level, StateLevel::race_free );
        const StateFunctionReport sf = state_function( f, Side::initial );
        for ( const auto& [ u, values ] : sf.phi )
            EXPECT_EQ( values, std::vector<BVec>{ *u.limit_value( Side::initial ) } );
    }
}

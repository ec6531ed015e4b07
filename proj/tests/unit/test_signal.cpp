#include "helpers.hpp"
#include "oracles.hpp"

#include <psys/error.hpp>
#include <psys/generator.hpp>

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

/// Instants where two signals could differ: every breakpoint, the points
/// between them, and a stretch of both tails long enough to cover a common
/// period several times.
std::vector<Time> probe_points( const Signal& x, const Signal& y )
{
    std::vector<Time> pts = oracle::breakpoints( x );
    for ( const auto& t : oracle::breakpoints( y ) )
        pts.push_back( t );
    oracle::sort_unique( pts );
    const Time lo = pts.front() - Time( 40 );
    const Time hi = pts.back() + Time( 40 );
    for ( Time t = lo; t <= hi; t = t + Time( 1, 4 ) )
        pts.push_back( t );
    for ( Time t = lo + Time( 1, 8 ); t <= hi; t = t + Time( 1, 4 ) )
        pts.push_back( t );
    oracle::sort_unique( pts );
    return pts;
}

} // namespace

TEST( SignalMake, ConstantSignalHasOneAnchorEvent )
{
    const Signal x = sig( "1", "const 0", "0:0", "const" );
    ASSERT_EQ( x.events().size(), 1u );
    EXPECT_EQ( x.anchor(), Time( 0 ) );
    EXPECT_TRUE( x.is_constant() );
    EXPECT_EQ( x, constant( "0" ) );
}

TEST( SignalMake, RepeatedValuesMerge )
{
    const Signal x = sig( "1", "const 0", "0:1 2:1 5:0", "const" );
    ASSERT_EQ( x.events().size(), 2u );
    EXPECT_EQ( x.events()[ 0 ], ( Event{ Time( 0 ), b( "1" ) } ) );
    EXPECT_EQ( x.events()[ 1 ], ( Event{ Time( 5 ), b( "0" ) } ) );
}

TEST( SignalMake, EventEqualToInitialValueMergesIntoTail )
{
    const Signal x = sig( "1", "const 0", "-1:0 3:1", "const" );
    EXPECT_EQ( x.anchor(), Time( 3 ) );
    EXPECT_EQ( x.events().size(), 1u );
}

TEST( SignalMake, AlternatingLeftTailHasNoInitialValue )
{
    const Signal x = sig( "1", "periodic 1:0 1:1", "0:1", "const" );
    EXPECT_FALSE( x.in_S() );
    EXPECT_TRUE( x.in_S_star() );
    EXPECT_FALSE( x.limit_value( Side::initial ).has_value() );
    EXPECT_EQ( x.limit_value( Side::final ), b( "1" ) );
}

TEST( SignalMake, PeriodicPatternReducesToMinimalPeriod )
{
    const Signal x = sig( "1", "periodic 1:0 1:1 1:0 1:1", "0:0", "const" );
    EXPECT_EQ( x.left_tail().period(), Time( 2 ) );
}

TEST( SignalMake, SingleValuedPatternBecomesConstant )
{
    const Signal x = sig( "1", "periodic 1:1 2:1", "0:0", "const" );
    EXPECT_TRUE( x.in_S() );
    EXPECT_EQ( x.limit_value( Side::initial ), b( "1" ) );
}

TEST( SignalMake, Errors )
{
    EXPECT_THROW( (void)Signal::make( 1, Tail::constant( b( "0" ) ), {}, Tail::hold() ), InvalidArgument );
    EXPECT_THROW( (void)Signal::make( 1, Tail::constant( b( "0" ) ),
                                      { { Time( 1 ), b( "1" ) }, { Time( 1 ), b( "0" ) } }, Tail::hold() ),
                  InvalidArgument );
    EXPECT_THROW( (void)Signal::make( 1, Tail::constant( b( "0" ) ), { { Time( 1 ), b( "10" ) } }, Tail::hold() ),
                  DimensionError );
    EXPECT_THROW( (void)Tail::periodic( {} ), InvalidArgument );
    EXPECT_THROW( (void)Tail::periodic( { { Time( 0 ), b( "1" ) }, { Time( 1 ), b( "0" ) } } ), InvalidArgument );
    EXPECT_THROW( (void)Signal::make( 1, Tail::constant( b( "0" ) ), { { Time( 1 ), b( "1" ) } },
                                      Tail::periodic( { { Time( 1 ), b( "0" ) }, { Time( 1 ), b( "1" ) } } ) ),
                  InvalidArgument );
}

TEST( SignalValue, RightContinuousAtBreakpoints )
{
    const Signal x = sig( "1", "const 0", "3:1", "const" );
    EXPECT_EQ( x.value_at( Time( 3 ) ), b( "1" ) );
    EXPECT_EQ( x.left_limit( Time( 3 ) ), b( "0" ) );
    EXPECT_EQ( x.value_at( Time( 29, 10 ) ), b( "0" ) );
}

TEST( SignalValue, InsideLeftPattern )
{
    // pattern 0 on [-2,-1), 1 on [-1,0), repeated leftwards
    const Signal x = sig( "1", "periodic 1:0 1:1", "0:1", "const" );
    EXPECT_EQ( x.value_at( Time( -3, 2 ) ), b( "0" ) );
    EXPECT_EQ( x.value_at( Time( -1, 2 ) ), b( "1" ) );
    EXPECT_EQ( x.value_at( Time( -21 ) ), b( "1" ) );
    EXPECT_EQ( x.value_at( Time( -22 ) ), b( "0" ) );
    for ( Time t( -20 ); t < Time( 3 ); t = t + Time( 1, 4 ) )
        EXPECT_EQ( x.value_at( t ), oracle::value( x, t ) ) << t.str();
}

TEST( SignalValue, MatchesUnrolledPatternsOnRandomSignals )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 11, i );
        const Signal x = gen.signal( 1 + gen.below( 2 ) );
        for ( Time t = x.anchor() - Time( 30 ); t <= x.last_time() + Time( 30 ); t = t + Time( 1, 4 ) )
            ASSERT_EQ( x.value_at( t ), oracle::value( x, t ) ) << format_signal( "x", x ) << t.str();
    }
}

TEST( SignalLimits, ByTail )
{
    EXPECT_EQ( sig( "1", "const 0", "7:1", "const" ).limit_value( Side::final ), b( "1" ) );
    EXPECT_EQ( sig( "1", "const 0", "7:1", "const" ).limit_value( Side::initial ), b( "0" ) );
    EXPECT_FALSE( sig( "1", "const 0", "7:1", "periodic 1:1 1:0" ).limit_value( Side::final ).has_value() );
}

TEST( SignalMembership, ByTail )
{
    EXPECT_EQ( membership_class( sig( "1", "const 0", "0:1", "const" ) ), ( MembershipClass{ true, true } ) );
    EXPECT_EQ( membership_class( sig( "1", "periodic 1:0 1:1", "0:0", "const" ) ),
               ( MembershipClass{ false, true } ) );
    EXPECT_EQ( membership_class( sig( "1", "const 0", "0:1", "periodic 1:1 1:0" ) ),
               ( MembershipClass{ true, false } ) );
}

TEST( SignalCanonical, RebuildingACanonicalSignalIsIdentity )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 12, i );
        const Signal x = gen.signal( 1 + gen.below( 2 ) );
        const Tail right = x.right_tail().is_const() ? Tail::hold() : x.right_tail();
        EXPECT_EQ( Signal::make( x.dim(), x.left_tail(), x.events(), right ), x );
    }
}

TEST( SignalCanonical, StructuralEqualityIsFunctionalEquality )
{
    std::size_t distinct = 0;
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 13, i );
        const Signal x = gen.signal( 1 );
        const Signal y = gen.chance( 0.3 ) ? x : gen.signal( 1 );
        const auto pts = probe_points( x, y );
        bool differ = false;
        for ( const auto& t : pts )
            differ = differ || oracle::value( x, t ) != oracle::value( y, t );
        EXPECT_EQ( differ, x != y ) << format_signal( "x", x ) << format_signal( "y", y );
        distinct += differ ? 1 : 0;
    }
    EXPECT_GT( distinct, 100u );
}

TEST( SignalCanonical, EqualSignalsAgreeOnRandomInstants )
{
    Generator gen( 14, 0 );
    for ( int i = 0; i < 50; ++i )
    {
        const Signal x = gen.signal( 2 );
        const Signal y = Signal::make( x.dim(), x.left_tail(), x.events(),
                                       x.right_tail().is_const() ? Tail::hold() : x.right_tail() );
        for ( int k = 0; k < 200; ++k )
        {
            const Time t( static_cast<long>( gen.below( 4001 ) ) - 2000, 1 + static_cast<long>( gen.below( 97 ) ) );
            ASSERT_EQ( x.value_at( t ), y.value_at( t ) );
        }
    }
}

TEST( SignalComplement, Examples )
{
    EXPECT_EQ( complement( constant( "01" ) ), constant( "10" ) );
    const Signal x = complement( sig( "1", "const 0", "0:1 4:0", "const" ) );
    EXPECT_EQ( x, sig( "1", "const 1", "0:0 4:1", "const" ) );
}

TEST( SignalComplement, DirectNegationMatchesCanonicalRebuild )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 15, i );
        const Signal x = gen.signal( 1 + gen.below( 2 ) );
        auto negate = []( const Tail& t ) {
            if ( t.is_const() )
                return t.value() ? Tail::constant( t.value()->complement() ) : Tail::hold();
            std::vector<Segment> p = t.pattern();
            for ( auto& s : p )
                s.value = s.value.complement();
            return Tail::periodic( p );
        };
        std::vector<Event> ev = x.events();
        for ( auto& e : ev )
            e.value = e.value.complement();
        const Signal rebuilt = Signal::make( x.dim(), negate( x.left_tail() ), ev,
                                             x.right_tail().is_const() ? Tail::hold() : negate( x.right_tail() ) );
        EXPECT_EQ( complement( x ), rebuilt );
        EXPECT_EQ( complement( complement( x ) ), x );
    }
}

TEST( SignalShift, Examples )
{
    const Signal x = sig( "1", "const 0", "0:1", "const" );
    EXPECT_EQ( shift( x, Time( 0 ) ), x );
    EXPECT_EQ( shift( constant( "1" ), Time( 5 ) ), constant( "1" ) );
    EXPECT_EQ( shift( x, Time( 3, 2 ) ), sig( "1", "const 0", "3/2:1", "const" ) );
}

TEST( SignalShift, TranslatesAndInverts )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 16, i );
        const Signal x = gen.signal( 1 );
        const Time tau( static_cast<long>( gen.below( 41 ) ) - 20, 1 + static_cast<long>( gen.below( 4 ) ) );
        const Signal y = shift( x, tau );
        EXPECT_EQ( shift( y, Time( 0 ) - tau ), x );
        for ( Time t = x.anchor() - Time( 6 ); t <= x.last_time() + Time( 6 ); t = t + Time( 1, 2 ) )
            ASSERT_EQ( y.value_at( t + tau ), oracle::value( x, t ) );
    }
}

TEST( SignalConcat, Examples )
{
    EXPECT_EQ( concat( constant( "0" ), constant( "1" ) ), constant( "01" ) );
    const Signal x = sig( "1", "const 0", "0:1", "const" );
    const Signal y = sig( "1", "const 0", "2:1", "const" );
    const Signal xy = concat( x, y );
    EXPECT_EQ( xy, sig( "2", "const 00", "0:10 2:11", "const" ) );
    // pointwise check of the pair
    const char* expect[] = { "00", "10", "10", "11", "11" };
    for ( int t = -1; t <= 3; ++t )
        EXPECT_EQ( xy.value_at( Time( t ) ).str(), expect[ t + 1 ] );
}

TEST( SignalProject, Examples )
{
    const Signal xy = sig( "2", "const 00", "0:10 2:11", "const" );
    EXPECT_EQ( project( xy, 0, 1 ), sig( "1", "const 0", "0:1", "const" ) );
    EXPECT_EQ( project( xy, 0, 2 ), xy );
    EXPECT_THROW( (void)project( xy, 1, 2 ), DimensionError );
    EXPECT_THROW( (void)project( xy, 0, 0 ), DimensionError );
}

TEST( SignalConcat, ProjectionsRecoverTheParts )
{
    for ( std::uint64_t i = 0; i < 300; ++i )
    {
        Generator gen( 17, i );
        const Signal x = gen.signal( 1 + gen.below( 2 ) );
        const Signal y = gen.signal( 1 + gen.below( 2 ) );
        const Signal xy = concat( x, y );
        EXPECT_EQ( project( xy, 0, x.dim() ), x );
        EXPECT_EQ( project( xy, x.dim(), y.dim() ), y );
        for ( const auto& t : probe_points( x, y ) )
            ASSERT_EQ( oracle::value( xy, t ), oracle::value( x, t ).concat( oracle::value( y, t ) ) );
    }
}

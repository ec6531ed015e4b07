#include <psys/generator.hpp>
#include <psys/laws.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <set>

using namespace psys;

namespace
{

const LawReport& small_run()
{
    static const LawReport r = run_law_suite( 5, 40 );
    return r;
}

std::set<std::string> failing_names( const LawReport& r )
{
    std::set<std::string> out;
    for ( const auto& law : r.laws )
        if ( law.passed != law.checked )
            out.insert( law.name );
    return out;
}

} // namespace

TEST( Generator, InstancesAreReproducible )
{
    Generator a( 9, 3 );
    Generator b( 9, 3 );
    for ( int i = 0; i < 20; ++i )
        EXPECT_EQ( a.signal( 2 ), b.signal( 2 ) );
    EXPECT_NE( instance_seed( 9, 3 ), instance_seed( 9, 4 ) );
    EXPECT_NE( instance_seed( 9, 3 ), instance_seed( 10, 3 ) );
}

TEST( Generator, RespectsItsLimits )
{
    for ( std::uint64_t i = 0; i < 200; ++i )
    {
        Generator gen( 3, i );
        const Signal x = gen.signal( 2 );
        EXPECT_LE( x.events().size(), 4u );
        EXPECT_EQ( x.dim(), 2u );
        const PseudoSystem f = gen.system( 1, 2 );
        EXPECT_GE( f.inputs().size(), 1u );
        EXPECT_LE( f.inputs().size(), 6u );
        EXPECT_LE( f.states().size(), 6u );
        const Signal s = gen.s_signal( 1, 6 );
        EXPECT_TRUE( s.in_S() && s.in_S_star() );
        EXPECT_LE( s.events().size(), 6u );
    }
}

TEST( Generator, ProducesBothTailKinds )
{
    std::size_t periodic = 0;
    for ( std::uint64_t i = 0; i < 200; ++i )
    {
        Generator gen( 4, i );
        const Signal x = gen.signal( 1 );
        periodic += x.left_tail().is_periodic() || x.right_tail().is_periodic() ? 1 : 0;
    }
    EXPECT_GT( periodic, 40u );
    EXPECT_LT( periodic, 160u );
}

TEST( LawSuite, EveryAlgebraAndClassificationLawRunsEveryIteration )
{
    const LawReport& r = small_run();
    EXPECT_EQ( r.completed, 40u );
    EXPECT_FALSE( r.timed_out );
    for ( const auto& law : r.laws )
        if ( law.group != LawGroup::transfer )
            EXPECT_EQ( law.checked, 40u ) << law.name;
}

TEST( LawSuite, CorrectedFormsHold )
{
    EXPECT_EQ( small_run().failing( std::nullopt, LawForm::corrected ), 0u );
}

TEST( LawSuite, OnlyTheKnownStatedLawsFail )
{
    const std::set<std::string> known{
            "product inclusion iff factor inclusions",
            "product distributes over union",
            "parallel distributes over union",
            "product state level iff factors (initial, has_states)",
            "product state level iff factors (initial, race_free)",
            "product state level iff factors (initial, constant)",
            "product state level iff factors (final, has_states)",
            "product state level iff factors (final, race_free)",
            "product state level iff factors (final, constant)",
            "intersection state function is pointwise (initial)",
            "intersection state function is pointwise (final)",
            "intersection state set is the union of pointwise values (initial)",
            "intersection state set is the union of pointwise values (final)",
    };
    for ( const auto& name : failing_names( small_run() ) )
        EXPECT_TRUE( known.count( name ) ) << name;
}

TEST( LawSuite, FailuresCarryACounterexample )
{
    for ( const auto& law : small_run().laws )
        if ( law.first_failure )
        {
            EXPECT_LT( *law.first_failure, 40u );
            EXPECT_NE( law.counterexample.find( "system" ), std::string::npos ) << law.name;
        }
}

TEST( LawSuite, ReportsAreDeterministic )
{
    const LawReport a = run_law_suite( 8, 10 );
    const LawReport b = run_law_suite( 8, 10 );
    EXPECT_EQ( law_report_json( a ), law_report_json( b ) );
    EXPECT_EQ( law_report_text( a ), law_report_text( b ) );
}

TEST( LawSuite, TimeLimitStopsEarly )
{
    const LawReport r = run_law_suite( 1, 100000, 0.0 );
    EXPECT_TRUE( r.timed_out );
    EXPECT_LT( r.completed, 100000u );
}

TEST( LawSuite, JsonShape )
{
    const auto j = nlohmann::json::parse( law_report_json( small_run() ) );
    EXPECT_EQ( j[ "seed" ], 5 );
    EXPECT_EQ( j[ "completed" ], 40 );
    ASSERT_FALSE( j[ "laws" ].empty() );
    for ( const auto& law : j[ "laws" ] )
    {
        EXPECT_TRUE( law.contains( "name" ) );
        EXPECT_TRUE( law[ "form" ] == "as_stated" || law[ "form" ] == "corrected" );
    }
}

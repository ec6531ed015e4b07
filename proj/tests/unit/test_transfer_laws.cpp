#include "witnesses.hpp"

#include <psys/error.hpp>
#include <psys/generator.hpp>
#include <psys/transfer_laws.hpp>

#include <gtest/gtest.h>

using namespace psys;

namespace
{

bool check_named( const TransferResult& r, const std::string& prefix, bool expect )
{
    bool seen = false;
    for ( const auto& c : r.checks )
        if ( c.law.rfind( prefix, 0 ) == 0 )
        {
            seen = true;
            if ( c.passed != expect )
                return false;
        }
    return seen;
}

bool any_failed( const TransferResult& r, const std::string& prefix )
{
    for ( const auto& c : r.checks )
        if ( c.law.rfind( prefix, 0 ) == 0 && !c.passed )
            return true;
    return false;
}

} // namespace

TEST( TransferLaws, ConstantStatesPassToSubsystems )
{
    const Document doc = witnesses::document( R"(
system g m 1 n 1
input lo rise
state hi
map lo -> [hi]
map rise -> [hi]

system f m 1 n 1
input lo rise
state hi
map rise -> [hi]
)" );
    const auto r = check_transfer_laws( Construction::subsystem, doc.systems.at( "f" ), &doc.systems.at( "g" ) );
    EXPECT_TRUE( r.passed( LawForm::as_stated ) );
    EXPECT_TRUE( check_named( r, "subsystem inherits state level", true ) );
}

TEST( TransferLaws, SubsystemNeedsInclusion )
{
    const Document doc = witnesses::union_of_constants();
    EXPECT_THROW( (void)check_transfer_laws( Construction::subsystem, doc.systems.at( "f" ), &doc.systems.at( "g" ) ),
                  InvalidArgument );
    EXPECT_THROW( (void)check_transfer_laws( Construction::product, doc.systems.at( "f" ) ), InvalidArgument );
}

TEST( TransferLaws, ProductOfRaceFreePseudoSystemsPairsTheStateSets )
{
    const Document doc = witnesses::document( R"(
system f m 1 n 1
input lo hi
state rise fall
map lo -> [rise]
map hi -> [fall]

system g m 1 n 1
input rise
state late
map rise -> [late]
)" );
    const auto r = check_transfer_laws( Construction::product, doc.systems.at( "f" ), &doc.systems.at( "g" ) );
    EXPECT_TRUE( r.passed( LawForm::as_stated ) );
    EXPECT_TRUE( check_named( r, "product state set is the pairing", true ) );
}

TEST( TransferLaws, UnionOfDifferentConstantsIsNotConstant )
{
    const Document doc = witnesses::union_of_constants();
    const auto& f = doc.systems.at( "f" );
    const auto& g = doc.systems.at( "g" );
    const auto u = unite( f, g );
    EXPECT_EQ( boundary_report( f, Side::initial ).state_level, StateLevel::constant );
    EXPECT_EQ( boundary_report( g, Side::initial ).state_level, StateLevel::constant );
    EXPECT_EQ( boundary_report( u, Side::initial ).state_level, StateLevel::has_states );
    const auto r = check_transfer_laws( Construction::unite, f, &g );
    EXPECT_TRUE( r.passed( LawForm::as_stated ) );
}

TEST( TransferLaws, IntersectionStateFunctionIsOnlyContained )
{
    const Document doc = witnesses::intersection_loses_values();
    const auto r = check_transfer_laws( Construction::intersect, doc.systems.at( "f" ), &doc.systems.at( "g" ) );
    EXPECT_TRUE( any_failed( r, "intersection state function is pointwise" ) );
    EXPECT_TRUE( r.passed( LawForm::corrected ) );
}

TEST( TransferLaws, ProductLevelTransferFailsWithANullFactor )
{
    const Document doc = witnesses::product_level_with_null_factor();
    const auto r = check_transfer_laws( Construction::product, doc.systems.at( "f" ), &doc.systems.at( "f2" ) );
    EXPECT_TRUE( any_failed( r, "product state level iff factors (initial" ) );
    EXPECT_TRUE( r.passed( LawForm::corrected ) );
}

TEST( TransferLaws, SerialStateFunctionIsTheUnionOverF )
{
    for ( std::uint64_t i = 0; i < 200; ++i )
    {
        Generator gen( 61, i );
        const PseudoSystem f = gen.system( 1, 1 );
        const PseudoSystem h = gen.system_over( 1, 1, gen.universe_from( f.states(), 1 ), gen.universe( 1 ) );
        const auto r = check_transfer_laws( Construction::serial, h, &f );
        EXPECT_TRUE( r.passed( LawForm::as_stated ) );
        EXPECT_TRUE( r.passed( LawForm::corrected ) );
    }
}

TEST( TransferLaws, UnaryConstructionsHoldOnRandomInstances )
{
    for ( std::uint64_t i = 0; i < 200; ++i )
    {
        Generator gen( 62, i );
        const PseudoSystem f = gen.system( 1 + gen.below( 2 ), 1 + gen.below( 2 ) );
        EXPECT_TRUE( check_transfer_laws( Construction::dual, f ).passed( LawForm::as_stated ) );
        EXPECT_TRUE( check_transfer_laws( Construction::inverse, f ).passed( LawForm::as_stated ) );
        const PseudoSystem g = gen.subsystem_of( f );
        EXPECT_TRUE( check_transfer_laws( Construction::subsystem, g, &f ).passed( LawForm::as_stated ) );
    }
}

TEST( TransferLaws, UnionWitnessInstantIsTheOuterOne )
{
    for ( std::uint64_t i = 0; i < 200; ++i )
    {
        Generator gen( 63, i );
        const PseudoSystem f = gen.system( 1, 1 );
        const PseudoSystem g = gen.system_over( 1, 1, gen.universe_from( f.inputs(), 1 ),
                                                gen.universe_from( f.states(), 1 ) );
        const auto r = check_transfer_laws( Construction::unite, f, &g );
        EXPECT_TRUE( r.passed( LawForm::as_stated ) );
    }
}

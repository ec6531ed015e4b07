#include "psys/properties.hpp"

#include "json_util.hpp"
#include "psys/error.hpp"

#include <algorithm>
#include <set>

namespace psys
{

const char* to_string( StateLevel level )
{
    switch ( level )
    {
    case StateLevel::none:
        return "none";
    case StateLevel::has_states:
        return "has_states";
    case StateLevel::race_free:
        return "race_free";
    case StateLevel::constant:
        return "constant";
    }
    return "?";
}

const char* to_string( TimeLevel level )
{
    switch ( level )
    {
    case TimeLevel::unbounded:
        return "unbounded";
    case TimeLevel::bounded:
        return "bounded";
    case TimeLevel::fix:
        return "fix";
    }
    return "?";
}

namespace
{

std::optional<Time> departure( const Signal& x, Side side )
{
    if ( !x.limit_value( side ) || x.is_constant() )
        return std::nullopt;
    return side == Side::initial ? x.anchor() : x.last_time();
}

void keep_extreme( std::optional<Time>& acc, const std::optional<Time>& t, Side side )
{
    if ( !t )
        return;
    if ( !acc || ( side == Side::initial ? *t < *acc : *t > *acc ) )
        acc = *t;
}

} // namespace

BoundaryReport boundary_report( const PseudoSystem& f, Side side )
{
    BoundaryReport r;
    r.side = side;
    r.vacuous = f.is_null();

    bool all_limits = true;
    bool per_input_unique = true;
    std::set<BVec> everything;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
    {
        InputBoundary b{ f.inputs()[ i ], {}, std::nullopt };
        std::set<BVec> values;
        for ( auto j : f.image( i ) )
        {
            const Signal& x = f.states()[ j ];
            if ( auto v = x.limit_value( side ) )
                values.insert( *v );
            else
                all_limits = false;
            keep_extreme( b.extremal_instant, departure( x, side ), side );
        }
        if ( values.size() > 1 )
            per_input_unique = false;
        everything.insert( values.begin(), values.end() );
        b.values.assign( values.begin(), values.end() );
        keep_extreme( r.global_instant, b.extremal_instant, side );
        r.per_input.push_back( std::move( b ) );
    }

    if ( !all_limits )
        r.state_level = StateLevel::none;
    else if ( everything.size() <= 1 )
        r.state_level = StateLevel::constant;
    else if ( per_input_unique )
        r.state_level = StateLevel::race_free;
    else
        r.state_level = StateLevel::has_states;
    if ( r.state_level == StateLevel::constant && !everything.empty() )
        r.constant_value = *everything.begin();

    // finitely many states always admit one common instant
    r.time_level = TimeLevel::fix;

    if ( r.state_level != StateLevel::none )
    {
        const int row = static_cast<int>( r.state_level ) - 1;
        const int col = static_cast<int>( r.time_level );
        r.cell = static_cast<char>( 'a' + 3 * row + col );
    }
    return r;
}

std::vector<BVec> phi_at( const PseudoSystem& f, const Signal& u, Side side )
{
    std::set<BVec> values;
    for ( const auto& x : f.apply( u ) )
    {
        auto v = x.limit_value( side );
        if ( !v )
            throw InvalidArgument( std::string( "a state has no " ) + to_string( side ) + " value" );
        values.insert( *v );
    }
    return { values.begin(), values.end() };
}

StateFunctionReport state_function( const PseudoSystem& f, Side side )
{
    StateFunctionReport r;
    r.side = side;
    std::set<BVec> theta;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
    {
        std::set<BVec> values;
        for ( auto j : f.image( i ) )
        {
            auto v = f.states()[ j ].limit_value( side );
            if ( !v )
                throw InvalidArgument( "state #" + std::to_string( j ) + " of input #" + std::to_string( i )
                                       + " has no " + to_string( side ) + " value" );
            values.insert( *v );
        }
        theta.insert( values.begin(), values.end() );
        r.phi.emplace_back( f.inputs()[ i ], std::vector<BVec>( values.begin(), values.end() ) );
    }
    r.theta.assign( theta.begin(), theta.end() );
    return r;
}

namespace
{

nlohmann::ordered_json bits( const std::vector<BVec>& values )
{
    auto j = nlohmann::ordered_json::array();
    for ( const auto& v : values )
        j.push_back( v.str() );
    return j;
}

nlohmann::ordered_json instant( const std::optional<Time>& t )
{
    return t ? nlohmann::ordered_json( t->str() ) : nlohmann::ordered_json();
}

} // namespace

std::string boundary_report_json( const BoundaryReport& r )
{
    nlohmann::ordered_json j;
    j[ "side" ] = to_string( r.side );
    j[ "state_level" ] = to_string( r.state_level );
    j[ "constant_value" ] = r.constant_value ? nlohmann::ordered_json( r.constant_value->str() )
                                             : nlohmann::ordered_json();
    j[ "time_level" ] = to_string( r.time_level );
    j[ "cell" ] = r.cell ? nlohmann::ordered_json( std::string( 1, *r.cell ) ) : nlohmann::ordered_json();
    j[ "vacuous" ] = r.vacuous;
    j[ "per_input" ] = nlohmann::ordered_json::array();
    for ( std::size_t i = 0; i < r.per_input.size(); ++i )
        j[ "per_input" ].push_back( { { "input", i },
                                      { "values", bits( r.per_input[ i ].values ) },
                                      { "extremal_instant", instant( r.per_input[ i ].extremal_instant ) } } );
    j[ "global_instant" ] = instant( r.global_instant );
    return j.dump( 2 );
}

std::string state_function_json( const StateFunctionReport& r )
{
    nlohmann::ordered_json j;
    j[ "side" ] = to_string( r.side );
    j[ "phi" ] = nlohmann::ordered_json::array();
    for ( std::size_t i = 0; i < r.phi.size(); ++i )
        j[ "phi" ].push_back( { { "input", i }, { "values", bits( r.phi[ i ].second ) } } );
    j[ "theta" ] = bits( r.theta );
    return j.dump( 2 );
}

} // namespace psys

#include "psys/pseudo_system.hpp"

#include "psys/error.hpp"

#include <algorithm>
#include <iterator>

namespace psys
{

namespace
{

void require_dim( const Signal& x, std::size_t dim, const char* what )
{
    if ( x.dim() != dim )
        throw DimensionError( std::string( what ) + " signal has dimension " + std::to_string( x.dim() )
                              + ", expected " + std::to_string( dim ) );
}

void require_same_shape( const PseudoSystem& f, const PseudoSystem& g, const char* op )
{
    if ( f.m() != g.m() || f.n() != g.n() )
        throw DimensionError( std::string( op ) + ": shapes (" + std::to_string( f.m() ) + ", "
                              + std::to_string( f.n() ) + ") and (" + std::to_string( g.m() ) + ", "
                              + std::to_string( g.n() ) + ") differ" );
}

std::optional<std::size_t> find( const std::vector<Signal>& sorted, const Signal& x )
{
    auto it = std::lower_bound( sorted.begin(), sorted.end(), x );
    if ( it == sorted.end() || *it != x )
        return std::nullopt;
    return static_cast<std::size_t>( it - sorted.begin() );
}

SignalSet merge( const std::vector<Signal>& a, const std::vector<Signal>& b )
{
    SignalSet out( a.begin(), a.end() );
    out.insert( b.begin(), b.end() );
    return out;
}

SignalSet image_set( const PseudoSystem& f, const Signal& u )
{
    auto v = f.apply( u );
    return SignalSet( v.begin(), v.end() );
}

} // namespace

PseudoSystem PseudoSystem::build( std::size_t m, std::size_t n, std::vector<Signal> inputs,
                                  std::vector<Signal> states,
                                  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& table )
{
    if ( m == 0 || n == 0 )
        throw InvalidArgument( "pseudo-system dimensions must be positive" );
    for ( const auto& u : inputs )
        require_dim( u, m, "input" );
    for ( const auto& x : states )
        require_dim( x, n, "state" );

    PseudoSystem f;
    f._m = m;
    f._n = n;
    f._inputs = inputs;
    f._states = states;
    std::sort( f._inputs.begin(), f._inputs.end() );
    std::sort( f._states.begin(), f._states.end() );
    if ( std::adjacent_find( f._inputs.begin(), f._inputs.end() ) != f._inputs.end() )
        throw InvalidArgument( "input universe contains a duplicate signal" );
    if ( std::adjacent_find( f._states.begin(), f._states.end() ) != f._states.end() )
        throw InvalidArgument( "state universe contains a duplicate signal" );

    f._table.assign( f._inputs.size(), {} );
    for ( const auto& [ i, image ] : table )
    {
        if ( i >= inputs.size() )
            throw InvalidArgument( "table input index " + std::to_string( i ) + " out of range" );
        auto& row = f._table[ *find( f._inputs, inputs[ i ] ) ];
        for ( auto j : image )
        {
            if ( j >= states.size() )
                throw InvalidArgument( "table state index " + std::to_string( j ) + " out of range" );
            row.push_back( *find( f._states, states[ j ] ) );
        }
    }
    for ( auto& row : f._table )
    {
        std::sort( row.begin(), row.end() );
        row.erase( std::unique( row.begin(), row.end() ), row.end() );
    }
    return f;
}

PseudoSystem PseudoSystem::from_relation( std::size_t m, std::size_t n, const SignalSet& inputs,
                                          const SignalSet& states, const std::map<Signal, SignalSet>& relation )
{
    std::vector<Signal> in( inputs.begin(), inputs.end() );
    std::vector<Signal> st( states.begin(), states.end() );
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( const auto& [ u, image ] : relation )
    {
        auto i = find( in, u );
        if ( !i )
            throw InvalidArgument( "relation key outside the input universe" );
        std::vector<std::size_t> row;
        for ( const auto& x : image )
        {
            auto j = find( st, x );
            if ( !j )
                throw InvalidArgument( "relation value outside the state universe" );
            row.push_back( *j );
        }
        table.emplace_back( *i, std::move( row ) );
    }
    return build( m, n, std::move( in ), std::move( st ), table );
}

PseudoSystem PseudoSystem::null( std::size_t m, std::size_t n, std::vector<Signal> inputs,
                                 std::vector<Signal> states )
{
    return build( m, n, std::move( inputs ), std::move( states ), {} );
}

PseudoSystem PseudoSystem::total( std::size_t m, std::size_t n, std::vector<Signal> inputs,
                                  std::vector<Signal> states )
{
    std::vector<std::size_t> all( states.size() );
    for ( std::size_t j = 0; j < all.size(); ++j )
        all[ j ] = j;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t i = 0; i < inputs.size(); ++i )
        table.emplace_back( i, all );
    return build( m, n, std::move( inputs ), std::move( states ), table );
}

std::optional<std::size_t> PseudoSystem::input_index( const Signal& u ) const
{
    return find( _inputs, u );
}

std::optional<std::size_t> PseudoSystem::state_index( const Signal& x ) const
{
    return find( _states, x );
}

std::vector<Signal> PseudoSystem::apply( const Signal& u ) const
{
    require_dim( u, _m, "applied input" );
    std::vector<Signal> out;
    if ( auto i = input_index( u ) )
        for ( auto j : _table[ *i ] )
            out.push_back( _states[ j ] );
    return out;
}

bool PseudoSystem::is_null() const
{
    return pair_count() == 0;
}

std::size_t PseudoSystem::pair_count() const
{
    std::size_t count = 0;
    for ( const auto& row : _table )
        count += row.size();
    return count;
}

std::vector<Signal> support( const PseudoSystem& f )
{
    std::vector<Signal> out;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
        if ( !f.image( i ).empty() )
            out.push_back( f.inputs()[ i ] );
    return out;
}

bool is_subsystem( const PseudoSystem& f, const PseudoSystem& g )
{
    require_same_shape( f, g, "subsystem test" );
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
    {
        if ( f.image( i ).empty() )
            continue;
        auto gi = g.input_index( f.inputs()[ i ] );
        if ( !gi )
            return false;
        for ( auto j : f.image( i ) )
        {
            auto gj = g.state_index( f.states()[ j ] );
            if ( !gj || !std::binary_search( g.image( *gi ).begin(), g.image( *gi ).end(), *gj ) )
                return false;
        }
    }
    return true;
}

PseudoSystem dual( const PseudoSystem& f )
{
    std::vector<Signal> inputs;
    std::vector<Signal> states;
    for ( const auto& u : f.inputs() )
        inputs.push_back( complement( u ) );
    for ( const auto& x : f.states() )
        states.push_back( complement( x ) );
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
        table.emplace_back( i, f.image( i ) );
    return PseudoSystem::build( f.m(), f.n(), std::move( inputs ), std::move( states ), table );
}

PseudoSystem inverse( const PseudoSystem& f )
{
    std::vector<std::vector<std::size_t>> rows( f.states().size() );
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
        for ( auto j : f.image( i ) )
            rows[ j ].push_back( i );
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t j = 0; j < rows.size(); ++j )
        table.emplace_back( j, std::move( rows[ j ] ) );
    return PseudoSystem::build( f.n(), f.m(), f.states(), f.inputs(), table );
}

PseudoSystem product( const PseudoSystem& f, const PseudoSystem& g )
{
    const std::size_t gi = g.inputs().size();
    const std::size_t gs = g.states().size();
    std::vector<Signal> inputs;
    std::vector<Signal> states;
    for ( const auto& u : f.inputs() )
        for ( const auto& v : g.inputs() )
            inputs.push_back( concat( u, v ) );
    for ( const auto& x : f.states() )
        for ( const auto& y : g.states() )
            states.push_back( concat( x, y ) );
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t a = 0; a < f.inputs().size(); ++a )
        for ( std::size_t b = 0; b < gi; ++b )
        {
            std::vector<std::size_t> row;
            for ( auto x : f.image( a ) )
                for ( auto y : g.image( b ) )
                    row.push_back( x * gs + y );
            if ( !row.empty() )
                table.emplace_back( a * gi + b, std::move( row ) );
        }
    return PseudoSystem::build( f.m() + g.m(), f.n() + g.n(), std::move( inputs ), std::move( states ), table );
}

PseudoSystem parallel( const PseudoSystem& f, const PseudoSystem& g )
{
    if ( f.m() != g.m() )
        throw DimensionError( "parallel connection needs equal input dimensions, got " + std::to_string( f.m() )
                              + " and " + std::to_string( g.m() ) );
    const SignalSet in = merge( f.inputs(), g.inputs() );
    const std::size_t gs = g.states().size();
    std::vector<Signal> states;
    for ( const auto& x : f.states() )
        for ( const auto& y : g.states() )
            states.push_back( concat( x, y ) );
    std::vector<Signal> inputs( in.begin(), in.end() );
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t i = 0; i < inputs.size(); ++i )
    {
        auto a = f.input_index( inputs[ i ] );
        auto b = g.input_index( inputs[ i ] );
        if ( !a || !b )
            continue;
        std::vector<std::size_t> row;
        for ( auto x : f.image( *a ) )
            for ( auto y : g.image( *b ) )
                row.push_back( x * gs + y );
        table.emplace_back( i, std::move( row ) );
    }
    return PseudoSystem::build( f.m(), f.n() + g.n(), std::move( inputs ), std::move( states ), table );
}

PseudoSystem serial( const PseudoSystem& h, const PseudoSystem& f )
{
    if ( h.m() != f.n() )
        throw DimensionError( "serial connection needs h input dimension " + std::to_string( h.m() )
                              + " to equal f state dimension " + std::to_string( f.n() ) );
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
    {
        std::vector<std::size_t> row;
        for ( auto j : f.image( i ) )
            if ( auto k = h.input_index( f.states()[ j ] ) )
                row.insert( row.end(), h.image( *k ).begin(), h.image( *k ).end() );
        table.emplace_back( i, std::move( row ) );
    }
    return PseudoSystem::build( f.m(), h.n(), f.inputs(), h.states(), table );
}

PseudoSystem complement( const PseudoSystem& f )
{
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
    {
        std::vector<std::size_t> row;
        const auto& image = f.image( i );
        for ( std::size_t j = 0; j < f.states().size(); ++j )
            if ( !std::binary_search( image.begin(), image.end(), j ) )
                row.push_back( j );
        table.emplace_back( i, std::move( row ) );
    }
    return PseudoSystem::build( f.m(), f.n(), f.inputs(), f.states(), table );
}

namespace
{

template <class Combine>
PseudoSystem pointwise( const PseudoSystem& f, const PseudoSystem& g, Combine combine )
{
    const SignalSet inputs = merge( f.inputs(), g.inputs() );
    const SignalSet states = merge( f.states(), g.states() );
    std::map<Signal, SignalSet> relation;
    for ( const auto& u : inputs )
    {
        SignalSet image = combine( image_set( f, u ), image_set( g, u ) );
        if ( !image.empty() )
            relation.emplace( u, std::move( image ) );
    }
    return PseudoSystem::from_relation( f.m(), f.n(), inputs, states, relation );
}

} // namespace

PseudoSystem intersect( const PseudoSystem& f, const PseudoSystem& g )
{
    require_same_shape( f, g, "intersection" );
    return pointwise( f, g, []( const SignalSet& a, const SignalSet& b ) {
        SignalSet out;
        std::set_intersection( a.begin(), a.end(), b.begin(), b.end(), std::inserter( out, out.end() ) );
        return out;
    } );
}

PseudoSystem unite( const PseudoSystem& f, const PseudoSystem& g )
{
    require_same_shape( f, g, "union" );
    return pointwise( f, g, []( SignalSet a, const SignalSet& b ) {
        a.insert( b.begin(), b.end() );
        return a;
    } );
}

bool is_system( const PseudoSystem& f )
{
    bool any = false;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
    {
        if ( f.image( i ).empty() )
            continue;
        any = true;
        if ( !f.inputs()[ i ].in_S() )
            return false;
        for ( auto j : f.image( i ) )
            if ( !f.states()[ j ].in_S() )
                return false;
    }
    return any;
}

PseudoSystem induced_system( const PseudoSystem& f )
{
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    bool any = false;
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
    {
        if ( !f.inputs()[ i ].in_S() )
            continue;
        std::vector<std::size_t> row;
        for ( auto j : f.image( i ) )
            if ( f.states()[ j ].in_S() )
                row.push_back( j );
        any = any || !row.empty();
        table.emplace_back( i, std::move( row ) );
    }
    if ( !any )
        throw NoInducedSystem( "no input with an initial value has a state with an initial value" );
    return PseudoSystem::build( f.m(), f.n(), f.inputs(), f.states(), table );
}

} // namespace psys

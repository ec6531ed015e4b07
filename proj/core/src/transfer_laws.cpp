#include "psys/transfer_laws.hpp"

#include "psys/error.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

namespace psys
{

const char* to_string( Construction c )
{
    switch ( c )
    {
    case Construction::subsystem:
        return "subsystem";
    case Construction::dual:
        return "dual";
    case Construction::inverse:
        return "inverse";
    case Construction::product:
        return "product";
    case Construction::serial:
        return "serial";
    case Construction::intersect:
        return "intersect";
    case Construction::unite:
        return "union";
    }
    return "?";
}

bool TransferResult::passed( LawForm form ) const
{
    return std::all_of( checks.begin(), checks.end(),
                        [&]( const LawCheck& c ) { return c.form != form || c.passed; } );
}

namespace
{

using Values = std::set<BVec>;

constexpr StateLevel levels[] = { StateLevel::has_states, StateLevel::race_free, StateLevel::constant };
constexpr TimeLevel times[] = { TimeLevel::unbounded, TimeLevel::bounded, TimeLevel::fix };
constexpr Side sides[] = { Side::initial, Side::final };

bool at_least( StateLevel a, StateLevel b )
{
    return static_cast<int>( a ) >= static_cast<int>( b );
}

bool at_least( TimeLevel a, TimeLevel b )
{
    return static_cast<int>( a ) >= static_cast<int>( b );
}

std::string show( const Values& v )
{
    std::string s = "{";
    for ( const auto& b : v )
        s += ( s.size() > 1 ? "," : "" ) + b.str();
    return s + "}";
}

Values phi( const PseudoSystem& f, const Signal& u, Side side )
{
    auto v = phi_at( f, u, side );
    return Values( v.begin(), v.end() );
}

Values theta( const PseudoSystem& f, Side side )
{
    auto r = state_function( f, side );
    return Values( r.theta.begin(), r.theta.end() );
}

Values complement_all( const Values& v )
{
    Values out;
    for ( const auto& b : v )
        out.insert( b.complement() );
    return out;
}

Values pairs( const Values& a, const Values& b )
{
    Values out;
    for ( const auto& x : a )
        for ( const auto& y : b )
            out.insert( x.concat( y ) );
    return out;
}

Values meet( const Values& a, const Values& b )
{
    Values out;
    std::set_intersection( a.begin(), a.end(), b.begin(), b.end(), std::inserter( out, out.end() ) );
    return out;
}

Values join( Values a, const Values& b )
{
    a.insert( b.begin(), b.end() );
    return a;
}

bool subset( const Values& a, const Values& b )
{
    return std::includes( b.begin(), b.end(), a.begin(), a.end() );
}

class Checker
{
public:
    void check( std::string law, bool ok, const std::string& detail = {}, LawForm form = LawForm::as_stated )
    {
        _result.checks.push_back( LawCheck{ std::move( law ), form, ok, ok ? std::string() : detail } );
    }

    /// One check per input; stops at the first failing input.
    template <class Fn>
    void per_input( const std::string& law, const std::vector<Signal>& inputs, Fn fn, LawForm form = LawForm::as_stated )
    {
        for ( std::size_t i = 0; i < inputs.size(); ++i )
        {
            std::string detail;
            if ( !fn( inputs[ i ], detail ) )
            {
                check( law, false, "input #" + std::to_string( i ) + ": " + detail, form );
                return;
            }
        }
        check( law, true, {}, form );
    }

    TransferResult take() { return std::move( _result ); }

private:
    TransferResult _result;
};

std::string label( const char* what, Side side, const char* level = nullptr )
{
    std::string s = std::string( what ) + " (" + to_string( side );
    if ( level )
        s += std::string( ", " ) + level;
    return s + ")";
}

std::string levels_detail( const BoundaryReport& a, const BoundaryReport& b, const BoundaryReport& c )
{
    std::ostringstream out;
    out << "levels " << to_string( a.state_level ) << ", " << to_string( b.state_level ) << " -> "
        << to_string( c.state_level );
    return out.str();
}

bool has_states( const BoundaryReport& r )
{
    return at_least( r.state_level, StateLevel::has_states );
}

void subsystem_laws( Checker& ck, const PseudoSystem& f, const PseudoSystem& g )
{
    if ( !is_subsystem( f, g ) )
        throw InvalidArgument( "subsystem laws need f contained in g" );
    for ( Side side : sides )
    {
        auto rf = boundary_report( f, side );
        auto rg = boundary_report( g, side );
        ck.check( label( "subsystem inherits state level", side ), at_least( rf.state_level, rg.state_level ),
                  levels_detail( rg, rg, rf ) );
        ck.check( label( "subsystem inherits time level", side ), at_least( rf.time_level, rg.time_level ) );
        if ( !has_states( rg ) )
            continue;
        ck.per_input( label( "subsystem state function is contained", side ), f.inputs(),
                      [&]( const Signal& u, std::string& d ) {
                          auto a = phi( f, u, side );
                          auto b = phi( g, u, side );
                          d = show( a ) + " vs " + show( b );
                          return subset( a, b );
                      } );
        ck.check( label( "subsystem state set is contained", side ), subset( theta( f, side ), theta( g, side ) ),
                  show( theta( f, side ) ) + " vs " + show( theta( g, side ) ) );
    }
}

void dual_laws( Checker& ck, const PseudoSystem& f )
{
    const PseudoSystem d = dual( f );
    for ( Side side : sides )
    {
        auto rf = boundary_report( f, side );
        auto rd = boundary_report( d, side );
        ck.check( label( "dual preserves state level", side ), rf.state_level == rd.state_level,
                  levels_detail( rf, rf, rd ) );
        ck.check( label( "dual preserves time level", side ), rf.time_level == rd.time_level );
        if ( !has_states( rf ) )
            continue;
        ck.per_input( label( "dual state function complements", side ), d.inputs(),
                      [&]( const Signal& u, std::string& det ) {
                          auto a = phi( d, u, side );
                          auto b = complement_all( phi( f, complement( u ), side ) );
                          det = show( a ) + " vs " + show( b );
                          return a == b;
                      } );
        auto td = theta( d, side );
        auto tf = complement_all( theta( f, side ) );
        ck.check( label( "dual state set complements", side ), td == tf, show( td ) + " vs " + show( tf ) );
    }
}

void inverse_laws( Checker& ck, const PseudoSystem& f )
{
    const PseudoSystem inv = inverse( f );
    for ( Side side : sides )
    {
        auto ri = boundary_report( inv, side );
        if ( !has_states( ri ) )
            continue;
        const auto admissible = support( f );
        bool limits = std::all_of( admissible.begin(), admissible.end(),
                                   [&]( const Signal& u ) { return u.limit_value( side ).has_value(); } );
        ck.check( label( "inverse with limits forces limits on admissible inputs", side ), limits );
        ck.per_input( label( "inverse state function collects input limits", side ), inv.inputs(),
                      [&]( const Signal& x, std::string& det ) {
                          Values expect;
                          for ( std::size_t i = 0; i < f.inputs().size(); ++i )
                          {
                              auto j = f.state_index( x );
                              const auto& img = f.image( i );
                              if ( j && std::binary_search( img.begin(), img.end(), *j ) )
                                  expect.insert( *f.inputs()[ i ].limit_value( side ) );
                          }
                          auto got = phi( inv, x, side );
                          det = show( got ) + " vs " + show( expect );
                          return got == expect;
                      } );
        Values expect;
        for ( const auto& u : admissible )
            expect.insert( *u.limit_value( side ) );
        auto got = theta( inv, side );
        ck.check( label( "inverse state set collects admissible input limits", side ), got == expect,
                  show( got ) + " vs " + show( expect ) );
    }
}

void product_laws( Checker& ck, const PseudoSystem& f, const PseudoSystem& g )
{
    const PseudoSystem p = product( f, g );
    const bool neither_null = !f.is_null() && !g.is_null();
    for ( Side side : sides )
    {
        auto rf = boundary_report( f, side );
        auto rg = boundary_report( g, side );
        auto rp = boundary_report( p, side );
        for ( StateLevel level : levels )
        {
            const bool factors = at_least( rf.state_level, level ) && at_least( rg.state_level, level );
            const bool whole = at_least( rp.state_level, level );
            ck.check( label( "product state level iff factors", side, to_string( level ) ), factors == whole,
                      levels_detail( rf, rg, rp ) );
            ck.check( label( "product state level iff factors, non-null factors", side, to_string( level ) ),
                      !neither_null || factors == whole, levels_detail( rf, rg, rp ), LawForm::corrected );
        }
        for ( TimeLevel t : times )
            ck.check( label( "product time level iff factors", side, to_string( t ) ),
                      ( at_least( rf.time_level, t ) && at_least( rg.time_level, t ) ) == at_least( rp.time_level, t ) );
        if ( !has_states( rf ) || !has_states( rg ) )
            continue;
        bool ok = true;
        std::string det;
        for ( const auto& u : f.inputs() )
            for ( const auto& v : g.inputs() )
            {
                auto got = phi( p, concat( u, v ), side );
                auto expect = pairs( phi( f, u, side ), phi( g, v, side ) );
                if ( ok && got != expect )
                {
                    ok = false;
                    det = show( got ) + " vs " + show( expect );
                }
            }
        ck.check( label( "product state function is the pairing", side ), ok, det );
        auto tp = theta( p, side );
        auto tfg = pairs( theta( f, side ), theta( g, side ) );
        ck.check( label( "product state set is the pairing", side ), tp == tfg, show( tp ) + " vs " + show( tfg ) );
    }
}

void serial_laws( Checker& ck, const PseudoSystem& h, const PseudoSystem& f )
{
    const PseudoSystem s = serial( h, f );
    for ( Side side : sides )
    {
        auto rh = boundary_report( h, side );
        auto rs = boundary_report( s, side );
        for ( StateLevel level : { StateLevel::has_states, StateLevel::constant } )
            ck.check( label( "serial inherits state level from h", side, to_string( level ) ),
                      !at_least( rh.state_level, level ) || at_least( rs.state_level, level ),
                      levels_detail( rh, rh, rs ) );
        for ( TimeLevel t : { TimeLevel::unbounded, TimeLevel::fix } )
            ck.check( label( "serial inherits time level from h", side, to_string( t ) ),
                      !at_least( rh.time_level, t ) || at_least( rs.time_level, t ) );
        if ( !has_states( rh ) )
            continue;
        Values all;
        ck.per_input( label( "serial state function is the union over f", side ), f.inputs(),
                      [&]( const Signal& u, std::string& det ) {
                          Values expect;
                          for ( const auto& x : f.apply( u ) )
                          {
                              auto v = phi( h, x, side );
                              expect.insert( v.begin(), v.end() );
                          }
                          all.insert( expect.begin(), expect.end() );
                          auto got = phi( s, u, side );
                          det = show( got ) + " vs " + show( expect );
                          return got == expect;
                      } );
        auto ts = theta( s, side );
        ck.check( label( "serial state set is the double union", side ), ts == all, show( ts ) + " vs " + show( all ) );
    }
}

void lattice_laws( Checker& ck, const PseudoSystem& f, const PseudoSystem& g, bool is_meet )
{
    const PseudoSystem r = is_meet ? intersect( f, g ) : unite( f, g );
    const char* name = is_meet ? "intersection" : "union";
    SignalSet inputs( f.inputs().begin(), f.inputs().end() );
    inputs.insert( g.inputs().begin(), g.inputs().end() );
    const std::vector<Signal> all_inputs( inputs.begin(), inputs.end() );

    for ( Side side : sides )
    {
        auto rf = boundary_report( f, side );
        auto rg = boundary_report( g, side );
        auto rr = boundary_report( r, side );
        if ( is_meet )
        {
            for ( StateLevel level : levels )
                ck.check( label( "intersection inherits state level from either operand", side, to_string( level ) ),
                          !( at_least( rf.state_level, level ) || at_least( rg.state_level, level ) )
                                  || at_least( rr.state_level, level ),
                          levels_detail( rf, rg, rr ) );
            for ( TimeLevel t : times )
                ck.check( label( "intersection inherits time level from either operand", side, to_string( t ) ),
                          !( at_least( rf.time_level, t ) || at_least( rg.time_level, t ) )
                                  || at_least( rr.time_level, t ) );
        }
        else
        {
            ck.check( label( "union keeps limit values", side ),
                      !( has_states( rf ) && has_states( rg ) ) || has_states( rr ), levels_detail( rf, rg, rr ) );
            const bool common_constant = rf.state_level == StateLevel::constant
                                         && rg.state_level == StateLevel::constant
                                         && ( !rf.constant_value || !rg.constant_value
                                              || *rf.constant_value == *rg.constant_value );
            ck.check( label( "union keeps a common constant", side ),
                      !common_constant || rr.state_level == StateLevel::constant, levels_detail( rf, rg, rr ) );
            for ( TimeLevel t : times )
                ck.check( label( "union keeps time level", side, to_string( t ) ),
                          !( at_least( rf.time_level, t ) && at_least( rg.time_level, t ) )
                                  || at_least( rr.time_level, t ) );
            ck.per_input( label( "union witness instant is the outer of the two", side ), r.inputs(),
                          [&]( const Signal& u, std::string& det ) {
                              auto pick = [&]( const BoundaryReport& rep, const PseudoSystem& sys ) {
                                  auto i = sys.input_index( u );
                                  return i ? rep.per_input[ *i ].extremal_instant : std::nullopt;
                              };
                              auto a = pick( rf, f );
                              auto b = pick( rg, g );
                              auto c = pick( rr, r );
                              std::optional<Time> expect = a ? a : b;
                              if ( a && b )
                                  expect = side == Side::initial ? std::min( *a, *b ) : std::max( *a, *b );
                              det = ( c ? c->str() : "none" ) + " vs " + ( expect ? expect->str() : "none" );
                              return c == expect;
                          } );
        }
        if ( !has_states( rf ) || !has_states( rg ) )
            continue;

        auto combine = [&]( const Values& a, const Values& b ) { return is_meet ? meet( a, b ) : join( a, b ); };
        Values expect_theta;
        ck.per_input( label( ( std::string( name ) + " state function is pointwise" ).c_str(), side ), all_inputs,
                      [&]( const Signal& u, std::string& det ) {
                          auto got = phi( r, u, side );
                          auto expect = combine( phi( f, u, side ), phi( g, u, side ) );
                          expect_theta.insert( expect.begin(), expect.end() );
                          det = show( got ) + " vs " + show( expect );
                          return got == expect;
                      } );
        auto tr = theta( r, side );
        ck.check( label( ( std::string( name ) + " state set is the union of pointwise values" ).c_str(), side ),
                  tr == expect_theta, show( tr ) + " vs " + show( expect_theta ) );
        if ( is_meet )
        {
            Values loose;
            ck.per_input( label( "intersection state function is contained in the pointwise meet", side ),
                          all_inputs,
                          [&]( const Signal& u, std::string& det ) {
                              auto got = phi( r, u, side );
                              auto bound = meet( phi( f, u, side ), phi( g, u, side ) );
                              loose.insert( bound.begin(), bound.end() );
                              det = show( got ) + " vs " + show( bound );
                              return subset( got, bound );
                          },
                          LawForm::corrected );
            ck.check( label( "intersection state set is contained in the union of pointwise meets", side ),
                      subset( tr, loose ), show( tr ) + " vs " + show( loose ), LawForm::corrected );
        }
    }
}

} // namespace

TransferResult check_transfer_laws( Construction c, const PseudoSystem& first, const PseudoSystem* second )
{
    const bool binary = c == Construction::subsystem || c == Construction::product || c == Construction::serial
                        || c == Construction::intersect || c == Construction::unite;
    if ( binary && !second )
        throw InvalidArgument( std::string( to_string( c ) ) + " laws need two pseudo-systems" );
    Checker ck;
    switch ( c )
    {
    case Construction::subsystem:
        subsystem_laws( ck, first, *second );
        break;
    case Construction::dual:
        dual_laws( ck, first );
        break;
    case Construction::inverse:
        inverse_laws( ck, first );
        break;
    case Construction::product:
        product_laws( ck, first, *second );
        break;
    case Construction::serial:
        serial_laws( ck, first, *second );
        break;
    case Construction::intersect:
        lattice_laws( ck, first, *second, true );
        break;
    case Construction::unite:
        lattice_laws( ck, first, *second, false );
        break;
    }
    return ck.take();
}

} // namespace psys

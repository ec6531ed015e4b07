#include "psys/system_io.hpp"

#include "json_util.hpp"
#include "psys/signal_io.hpp"
#include "text.hpp"

#include <sstream>

namespace psys
{

namespace
{

using detail::fail;
using detail::Line;
using detail::Token;

struct PendingSystem
{
    Token name;
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Token> inputs;
    std::vector<Token> states;
    std::vector<std::pair<Token, std::vector<Token>>> maps;
};

PendingSystem parse_system_block( const std::vector<Line>& lines, std::size_t& pos )
{
    const Line& header = lines[ pos++ ];
    PendingSystem sys;
    sys.name = detail::expect_token( header, 1, "system name" );
    if ( !detail::is_name( sys.name.text ) )
        fail( sys.name, "bad system name '" + sys.name.text + "'" );
    detail::expect_keyword( header, 2, "m" );
    sys.m = detail::parse_count( detail::expect_token( header, 3, "input dimension" ) );
    detail::expect_keyword( header, 4, "n" );
    sys.n = detail::parse_count( detail::expect_token( header, 5, "state dimension" ) );
    if ( header.tokens.size() > 6 )
        fail( header.tokens[ 6 ], "unexpected token '" + header.tokens[ 6 ].text + "'" );

    while ( pos < lines.size() )
    {
        const Line& line = lines[ pos ];
        const std::string& kw = line.tokens[ 0 ].text;
        if ( kw == "signal" || kw == "system" )
            break;
        ++pos;
        if ( kw == "input" || kw == "state" )
        {
            auto& dest = kw == "input" ? sys.inputs : sys.states;
            for ( std::size_t i = 1; i < line.tokens.size(); ++i )
            {
                if ( !detail::is_name( line.tokens[ i ].text ) )
                    fail( line.tokens[ i ], "bad signal name '" + line.tokens[ i ].text + "'" );
                dest.push_back( line.tokens[ i ] );
            }
        }
        else if ( kw == "map" )
        {
            const Token& u = detail::expect_token( line, 1, "input name" );
            detail::expect_keyword( line, 2, "->" );
            detail::expect_keyword( line, 3, "[" );
            std::vector<Token> image;
            std::size_t i = 4;
            for ( ; i < line.tokens.size() && line.tokens[ i ].text != "]"; ++i )
                image.push_back( line.tokens[ i ] );
            if ( i >= line.tokens.size() )
                detail::fail_after( line, "expected ']'" );
            if ( i + 1 < line.tokens.size() )
                fail( line.tokens[ i + 1 ], "unexpected token '" + line.tokens[ i + 1 ].text + "'" );
            sys.maps.emplace_back( u, std::move( image ) );
        }
        else
            fail( line.tokens[ 0 ], "expected 'input', 'state' or 'map', found '" + kw + "'" );
    }
    return sys;
}

std::size_t index_in( const std::vector<Token>& universe, const Token& name, const char* what )
{
    for ( std::size_t i = 0; i < universe.size(); ++i )
        if ( universe[ i ].text == name.text )
            return i;
    fail( name, "'" + name.text + "' is not in the " + what + " universe" );
}

PseudoSystem resolve( const PendingSystem& sys, const std::map<std::string, Signal>& signals )
{
    auto lookup = [&]( const Token& t ) -> const Signal& {
        auto it = signals.find( t.text );
        if ( it == signals.end() )
            fail( t, "unknown signal '" + t.text + "'" );
        return it->second;
    };
    auto collect = [&]( const std::vector<Token>& names, std::size_t dim ) {
        std::vector<Signal> out;
        for ( std::size_t i = 0; i < names.size(); ++i )
        {
            const Signal& x = lookup( names[ i ] );
            if ( x.dim() != dim )
                throw ParseError( "signal '" + names[ i ].text + "' has dimension " + std::to_string( x.dim() )
                                          + ", expected " + std::to_string( dim ),
                                  names[ i ].line, names[ i ].column );
            for ( std::size_t k = 0; k < i; ++k )
                if ( lookup( names[ k ] ) == x )
                    fail( names[ i ], "'" + names[ i ].text + "' duplicates '" + names[ k ].text + "' in the universe" );
            out.push_back( x );
        }
        return out;
    };
    auto inputs = collect( sys.inputs, sys.m );
    auto states = collect( sys.states, sys.n );
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> table;
    for ( const auto& [ u, image ] : sys.maps )
    {
        std::vector<std::size_t> row;
        for ( const auto& x : image )
            row.push_back( index_in( sys.states, x, "state" ) );
        table.emplace_back( index_in( sys.inputs, u, "input" ), std::move( row ) );
    }
    return PseudoSystem::build( sys.m, sys.n, std::move( inputs ), std::move( states ), table );
}

} // namespace

Document parse_document( std::string_view text )
{
    const auto lines = detail::tokenize( text );
    Document doc;
    std::vector<PendingSystem> pending;
    std::map<std::string, Token> seen;
    auto claim = [&]( const Token& name ) {
        auto [ it, fresh ] = seen.emplace( name.text, name );
        if ( !fresh )
            fail( name, "name '" + name.text + "' already defined at line " + std::to_string( it->second.line ) );
    };

    std::size_t pos = 0;
    while ( pos < lines.size() )
    {
        const Line& line = lines[ pos ];
        const std::string& kw = line.tokens[ 0 ].text;
        if ( kw == "signal" )
        {
            const Token name = detail::expect_token( line, 1, "signal name" );
            auto [ n, x ] = detail::parse_signal_block( lines, pos );
            claim( name );
            doc.signals.emplace( std::move( n ), std::move( x ) );
        }
        else if ( kw == "system" )
        {
            pending.push_back( parse_system_block( lines, pos ) );
            claim( pending.back().name );
        }
        else
            fail( line.tokens[ 0 ], "expected 'signal' or 'system', found '" + kw + "'" );
    }
    for ( const auto& sys : pending )
        doc.systems.emplace( sys.name.text, resolve( sys, doc.signals ) );
    return doc;
}

std::string format_document( const Document& doc )
{
    std::ostringstream out;
    bool first = true;
    for ( const auto& [ name, x ] : doc.signals )
    {
        if ( !first )
            out << '\n';
        first = false;
        out << format_signal( name, x );
    }
    std::map<Signal, std::string> names;
    for ( const auto& [ name, x ] : doc.signals )
        names.emplace( x, name );
    auto name_of = [&]( const Signal& x ) -> const std::string& {
        auto it = names.find( x );
        if ( it == names.end() )
            throw InvalidArgument( "system refers to a signal that has no name in the document" );
        return it->second;
    };
    for ( const auto& [ name, f ] : doc.systems )
    {
        if ( !first )
            out << '\n';
        first = false;
        out << "system " << name << " m " << f.m() << " n " << f.n() << '\n';
        out << "input";
        for ( const auto& u : f.inputs() )
            out << ' ' << name_of( u );
        out << "\nstate";
        for ( const auto& x : f.states() )
            out << ' ' << name_of( x );
        out << '\n';
        for ( std::size_t i = 0; i < f.inputs().size(); ++i )
        {
            if ( f.image( i ).empty() )
                continue;
            out << "map " << name_of( f.inputs()[ i ] ) << " -> [";
            for ( std::size_t k = 0; k < f.image( i ).size(); ++k )
                out << ( k ? " " : "" ) << name_of( f.states()[ f.image( i )[ k ] ] );
            out << "]\n";
        }
    }
    return out.str();
}

Document document_of( const std::string& name, const PseudoSystem& f )
{
    SignalSet all( f.inputs().begin(), f.inputs().end() );
    all.insert( f.states().begin(), f.states().end() );
    Document doc;
    std::size_t k = 0;
    for ( const auto& x : all )
        doc.signals.emplace( "s" + std::to_string( k++ ), x );
    doc.systems.emplace( name, f );
    return doc;
}

std::string system_json( const std::string& name, const PseudoSystem& f )
{
    nlohmann::ordered_json j;
    j[ "name" ] = name;
    j[ "m" ] = f.m();
    j[ "n" ] = f.n();
    j[ "inputs" ] = nlohmann::ordered_json::array();
    for ( const auto& u : f.inputs() )
        j[ "inputs" ].push_back( detail::to_json( u ) );
    j[ "states" ] = nlohmann::ordered_json::array();
    for ( const auto& x : f.states() )
        j[ "states" ].push_back( detail::to_json( x ) );
    j[ "map" ] = nlohmann::ordered_json::array();
    for ( std::size_t i = 0; i < f.inputs().size(); ++i )
        if ( !f.image( i ).empty() )
            j[ "map" ].push_back( { { "input", i }, { "states", f.image( i ) } } );
    return j.dump( 2 );
}

} // namespace psys

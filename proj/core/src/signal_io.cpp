#include "psys/signal_io.hpp"

#include "json_util.hpp"
#include "text.hpp"

#include <cctype>
#include <sstream>

namespace psys
{

namespace detail
{

std::vector<Line> tokenize( std::string_view text )
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while ( start <= text.size() )
    {
        std::size_t end = text.find( '\n', start );
        if ( end == std::string_view::npos )
            end = text.size();
        std::string_view raw = text.substr( start, end - start );
        ++number;
        if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
            raw = raw.substr( 0, hash );
        Line line;
        line.number = number;
        line.end_column = raw.size() + 1;
        std::size_t i = 0;
        while ( i < raw.size() )
        {
            const char c = raw[ i ];
            if ( std::isspace( static_cast<unsigned char>( c ) ) )
            {
                ++i;
                continue;
            }
            if ( c == '[' || c == ']' )
            {
                line.tokens.push_back( Token{ std::string( 1, c ), number, i + 1 } );
                ++i;
                continue;
            }
            std::size_t j = i;
            while ( j < raw.size() && !std::isspace( static_cast<unsigned char>( raw[ j ] ) ) && raw[ j ] != '['
                    && raw[ j ] != ']' )
                ++j;
            line.tokens.push_back( Token{ std::string( raw.substr( i, j - i ) ), number, i + 1 } );
            i = j;
        }
        if ( !line.tokens.empty() )
            lines.push_back( std::move( line ) );
        if ( end == text.size() )
            break;
        start = end + 1;
    }
    return lines;
}

void fail( const Token& at, const std::string& message )
{
    throw ParseError( message, at.line, at.column );
}

void fail_after( const Line& line, const std::string& message )
{
    throw ParseError( message, line.number, line.end_column );
}

const Token& expect_token( const Line& line, std::size_t index, const char* what )
{
    if ( index >= line.tokens.size() )
        fail_after( line, std::string( "expected " ) + what );
    return line.tokens[ index ];
}

void expect_keyword( const Line& line, std::size_t index, const char* keyword )
{
    const Token& t = expect_token( line, index, ( std::string( "'" ) + keyword + "'" ).c_str() );
    if ( t.text != keyword )
        fail( t, std::string( "expected '" ) + keyword + "', found '" + t.text + "'" );
}

std::size_t parse_count( const Token& token )
{
    if ( token.text.empty() || token.text.size() > 6 )
        fail( token, "expected a positive integer, found '" + token.text + "'" );
    for ( char c : token.text )
        if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
            fail( token, "expected a positive integer, found '" + token.text + "'" );
    const std::size_t v = std::stoul( token.text );
    if ( v == 0 )
        fail( token, "dimension must be positive" );
    return v;
}

Time parse_time( const Token& token )
{
    try
    {
        return Time::parse( token.text );
    }
    catch ( const Error& e )
    {
        fail( token, "bad rational '" + token.text + "'" );
    }
}

BVec parse_bits( const Token& token, std::size_t dim )
{
    BVec v;
    try
    {
        v = BVec::parse( token.text );
    }
    catch ( const Error& )
    {
        fail( token, "bad bit string '" + token.text + "'" );
    }
    if ( v.dim() != dim )
        fail( token, "bit string '" + token.text + "' has length " + std::to_string( v.dim() ) + ", expected "
                             + std::to_string( dim ) );
    return v;
}

bool is_name( std::string_view text )
{
    if ( text.empty() )
        return false;
    for ( char c : text )
        if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' && c != '-' && c != '.' )
            return false;
    return true;
}

namespace
{

std::pair<Token, Token> split_pair( const Token& token, char sep )
{
    auto at = token.text.find( sep );
    if ( at == std::string::npos )
        fail( token, std::string( "expected '<a>" ) + sep + "<b>', found '" + token.text + "'" );
    return { Token{ token.text.substr( 0, at ), token.line, token.column },
             Token{ token.text.substr( at + 1 ), token.line, token.column + at + 1 } };
}

std::vector<Segment> parse_pattern( const Line& line, std::size_t from, std::size_t dim )
{
    if ( from >= line.tokens.size() )
        fail_after( line, "periodic pattern needs at least one <dur>:<bits> item" );
    std::vector<Segment> pattern;
    for ( std::size_t i = from; i < line.tokens.size(); ++i )
    {
        auto [ d, b ] = split_pair( line.tokens[ i ], ':' );
        Time dur = parse_time( d );
        if ( !dur.is_positive() )
            fail( d, "pattern durations must be positive" );
        pattern.push_back( Segment{ dur, parse_bits( b, dim ) } );
    }
    return pattern;
}

Tail parse_tail( const Line& line, std::size_t dim, bool left )
{
    const Token& kind = expect_token( line, 1, "'const' or 'periodic'" );
    if ( kind.text == "const" )
    {
        if ( left )
        {
            BVec v = parse_bits( expect_token( line, 2, "left tail value" ), dim );
            if ( line.tokens.size() > 3 )
                fail( line.tokens[ 3 ], "unexpected token '" + line.tokens[ 3 ].text + "'" );
            return Tail::constant( std::move( v ) );
        }
        if ( line.tokens.size() > 2 )
            fail( line.tokens[ 2 ], "a constant right tail takes no value" );
        return Tail::hold();
    }
    if ( kind.text == "periodic" )
        return Tail::periodic( parse_pattern( line, 2, dim ) );
    fail( kind, "expected 'const' or 'periodic', found '" + kind.text + "'" );
}

const Line& next_line( const std::vector<Line>& lines, std::size_t& pos, const Line& previous, const char* keyword )
{
    if ( pos >= lines.size() )
        fail_after( previous, std::string( "missing '" ) + keyword + "' line" );
    const Line& line = lines[ pos++ ];
    expect_keyword( line, 0, keyword );
    return line;
}

} // namespace

std::pair<std::string, Signal> parse_signal_block( const std::vector<Line>& lines, std::size_t& pos )
{
    const Line& header = lines[ pos++ ];
    expect_keyword( header, 0, "signal" );
    const Token& name = expect_token( header, 1, "signal name" );
    if ( !is_name( name.text ) )
        fail( name, "bad signal name '" + name.text + "'" );
    expect_keyword( header, 2, "dim" );
    const std::size_t dim = parse_count( expect_token( header, 3, "dimension" ) );
    if ( header.tokens.size() > 4 )
        fail( header.tokens[ 4 ], "unexpected token '" + header.tokens[ 4 ].text + "'" );

    const Line& left_line = next_line( lines, pos, header, "left" );
    Tail left = parse_tail( left_line, dim, true );

    const Line& events_line = next_line( lines, pos, left_line, "events" );
    if ( events_line.tokens.size() < 2 )
        fail_after( events_line, "expected at least one <time>:<bits> event" );
    std::vector<Event> events;
    for ( std::size_t i = 1; i < events_line.tokens.size(); ++i )
    {
        const Token& tok = events_line.tokens[ i ];
        auto [ t, b ] = split_pair( tok, ':' );
        Event e{ parse_time( t ), parse_bits( b, dim ) };
        if ( !events.empty() && !( events.back().time < e.time ) )
            fail( tok, "event times must be strictly increasing" );
        events.push_back( std::move( e ) );
    }

    const Line& right_line = next_line( lines, pos, events_line, "right" );
    Tail right = parse_tail( right_line, dim, false );
    try
    {
        return { name.text, Signal::make( dim, std::move( left ), std::move( events ), std::move( right ) ) };
    }
    catch ( const ParseError& )
    {
        throw;
    }
    catch ( const Error& e )
    {
        fail( right_line.tokens[ 0 ], std::string( "invalid signal '" ) + name.text + "': " + e.what() );
    }
}

} // namespace detail

namespace
{

void emit_tail( std::ostream& out, const char* label, const Tail& tail, bool left )
{
    out << label;
    if ( tail.is_const() )
    {
        out << " const";
        if ( left )
            out << ' ' << tail.value()->str();
    }
    else
    {
        out << " periodic";
        for ( const auto& s : tail.pattern() )
            out << ' ' << s.duration.str() << ':' << s.value.str();
    }
    out << '\n';
}

} // namespace

std::string format_signal( std::string_view name, const Signal& x )
{
    std::ostringstream out;
    out << "signal " << name << " dim " << x.dim() << '\n';
    emit_tail( out, "left", x.left_tail(), true );
    out << "events";
    for ( const auto& e : x.events() )
        out << ' ' << e.time.str() << ':' << e.value.str();
    out << '\n';
    emit_tail( out, "right", x.right_tail(), false );
    return out.str();
}

std::pair<std::string, Signal> parse_signal( std::string_view text )
{
    auto lines = detail::tokenize( text );
    if ( lines.empty() )
        throw ParseError( "expected a signal block", 1, 1 );
    std::size_t pos = 0;
    auto result = detail::parse_signal_block( lines, pos );
    if ( pos < lines.size() )
        detail::fail( lines[ pos ].tokens[ 0 ], "unexpected text after the signal block" );
    return result;
}

std::string format_step_function( std::string_view name, const StepFunction& f )
{
    std::ostringstream out;
    out << "step " << name << " dim " << f.dim() << '\n';
    emit_tail( out, "left", f.left_tail(), true );
    out << "segments";
    for ( const auto& s : f.segments() )
        out << ' ' << s.time.str() << ':' << s.point_value.str() << '/' << s.interval_value.str();
    out << '\n';
    emit_tail( out, "right", f.right_tail(), false );
    return out.str();
}

std::string signal_json( const Signal& x )
{
    return detail::to_json( x ).dump( 2 );
}

std::string step_function_json( const StepFunction& f )
{
    return detail::to_json( f ).dump( 2 );
}

} // namespace psys

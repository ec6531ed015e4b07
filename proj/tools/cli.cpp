#include "cli.hpp"

#include <psys/delay.hpp>
#include <psys/error.hpp>
#include <psys/laws.hpp>
#include <psys/properties.hpp>
#include <psys/signal_io.hpp>
#include <psys/system_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace psys::cli
{

namespace
{

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// A ParseError with the file name in front of its position.
struct FileParseError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw IoError( "cannot read " + path );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file( const std::string& path, const std::string& text )
{
    std::ofstream out( path, std::ios::binary | std::ios::trunc );
    if ( !out || !( out << text ) )
        throw IoError( "cannot write " + path );
}

Document load_document( const std::string& path )
{
    const std::string text = read_file( path );
    try
    {
        return parse_document( text );
    }
    catch ( const ParseError& e )
    {
        throw FileParseError( path + ":" + e.what() );
    }
}

struct Operand
{
    Document doc;
    std::string name;
    const PseudoSystem* system = nullptr;
};

/// `path` or `path@system`; a bare path must hold exactly one system.
Operand load_operand( const std::string& ref )
{
    std::string path = ref;
    std::string name;
    const auto at = ref.rfind( '@' );
    const auto slash = ref.rfind( '/' );
    if ( at != std::string::npos && ( slash == std::string::npos || at > slash ) )
    {
        path = ref.substr( 0, at );
        name = ref.substr( at + 1 );
    }
    Operand op{ load_document( path ), name, nullptr };
    if ( name.empty() )
    {
        if ( op.doc.systems.size() != 1 )
            throw UsageError( path + " holds " + std::to_string( op.doc.systems.size() )
                              + " systems; pick one with " + path + "@<name>" );
        op.name = op.doc.systems.begin()->first;
    }
    const auto it = op.doc.systems.find( op.name );
    if ( it == op.doc.systems.end() )
        throw UsageError( "no system '" + op.name + "' in " + path );
    op.system = &it->second;
    return op;
}

/// Names for output signals. Signals the operands name keep their names;
/// complements of named signals are named not.<name> (and back), pairs of
/// named signals <a>.<b>; anything else gets a fresh s<k>.
class Namer
{
public:
    void learn( const Document& doc )
    {
        for ( const auto& [ name, x ] : doc.signals )
            if ( _names.emplace( x, name ).second )
                _taken.insert( name );
    }

    /// `split` is the width of the left part when x may be a pair.
    const std::string& name( const Signal& x, std::optional<std::size_t> split = std::nullopt )
    {
        auto it = _names.find( x );
        if ( it != _names.end() )
            return it->second;
        std::string derived;
        if ( auto c = _names.find( complement( x ) ); c != _names.end() )
            derived = c->second.rfind( "not.", 0 ) == 0 ? c->second.substr( 4 ) : "not." + c->second;
        else if ( split && *split > 0 && *split < x.dim() )
        {
            auto a = _names.find( project( x, 0, *split ) );
            auto b = _names.find( project( x, *split, x.dim() - *split ) );
            if ( a != _names.end() && b != _names.end() )
                derived = a->second + "." + b->second;
        }
        if ( derived.empty() || _taken.count( derived ) )
        {
            do
                derived = "s" + std::to_string( _next++ );
            while ( _taken.count( derived ) );
        }
        _taken.insert( derived );
        return _names.emplace( x, derived ).first->second;
    }

    Document document( const std::string& system_name, const PseudoSystem& f,
                       std::optional<std::size_t> input_split = std::nullopt,
                       std::optional<std::size_t> state_split = std::nullopt )
    {
        Document doc;
        for ( const auto& x : f.inputs() )
            doc.signals.emplace( name( x, input_split ), x );
        for ( const auto& x : f.states() )
            doc.signals.emplace( name( x, state_split ), x );
        doc.systems.emplace( system_name, f );
        return doc;
    }

private:
    std::map<Signal, std::string> _names;
    std::set<std::string> _taken;
    std::size_t _next = 0;
};

Json parsed( const std::string& text )
{
    return Json::parse( text );
}

void emit( const std::string& text, const std::string& path, std::ostream& out )
{
    if ( path.empty() )
        out << text;
    else
        write_file( path, text );
}

std::vector<Side> sides_of( const std::string& side )
{
    if ( side == "initial" )
        return { Side::initial };
    if ( side == "final" )
        return { Side::final };
    return { Side::initial, Side::final };
}

std::string values_text( const std::vector<BVec>& values )
{
    std::string s;
    for ( const auto& v : values )
        s += " " + v.str();
    return s;
}

std::string instant_text( const std::optional<Time>& t )
{
    return t ? t->str() : "none";
}

std::vector<Time> parse_taus( const std::string& text )
{
    std::vector<Time> taus;
    std::stringstream ss( text );
    std::string item;
    while ( std::getline( ss, item, ',' ) )
        if ( !item.empty() )
            taus.push_back( Time::parse( item ) );
    return taus;
}

// ---------------------------------------------------------------------------
// Verbs

struct Options
{
    std::vector<std::string> files;
    std::string side = "both";
    bool json = false;
    std::string output;
    std::string op;
    std::string name;
    std::string d;
    std::string taus;
    std::vector<std::string> candidates;
    std::uint64_t seed = 1;
    std::size_t iters = 100;
    bool to_stdout = false;
};

int classify( const Options& o, std::ostream& out )
{
    const Operand f = load_operand( o.files.at( 0 ) );
    std::ostringstream text;
    Json j;
    j[ "system" ] = f.name;
    for ( Side side : sides_of( o.side ) )
    {
        const BoundaryReport r = boundary_report( *f.system, side );
        j[ to_string( side ) ] = parsed( boundary_report_json( r ) );
        text << "system " << f.name << " side " << to_string( side ) << "\n"
             << "state_level " << to_string( r.state_level ) << "\n"
             << "constant_value " << ( r.constant_value ? r.constant_value->str() : "none" ) << "\n"
             << "time_level " << to_string( r.time_level ) << "\n"
             << "cell " << ( r.cell ? std::string( 1, *r.cell ) : "none" ) << "\n"
             << "vacuous " << ( r.vacuous ? "true" : "false" ) << "\n"
             << "global_instant " << instant_text( r.global_instant ) << "\n";
        for ( std::size_t i = 0; i < r.per_input.size(); ++i )
            text << "input " << i << " values" << values_text( r.per_input[ i ].values ) << " instant "
                 << instant_text( r.per_input[ i ].extremal_instant ) << "\n";
    }
    emit( o.json ? j.dump( 2 ) + "\n" : text.str(), o.output, out );
    return ok;
}

int state_fn( const Options& o, std::ostream& out )
{
    const Operand f = load_operand( o.files.at( 0 ) );
    std::ostringstream text;
    Json j;
    j[ "system" ] = f.name;
    for ( Side side : sides_of( o.side ) )
    {
        const StateFunctionReport r = state_function( *f.system, side );
        j[ to_string( side ) ] = parsed( state_function_json( r ) );
        text << "system " << f.name << " side " << to_string( side ) << "\n";
        for ( std::size_t i = 0; i < r.phi.size(); ++i )
            text << "phi " << i << values_text( r.phi[ i ].second ) << "\n";
        text << "theta" << values_text( r.theta ) << "\n";
    }
    emit( o.json ? j.dump( 2 ) + "\n" : text.str(), o.output, out );
    return ok;
}

int op( const Options& o, std::ostream& out )
{
    static const std::set<std::string> unary{ "dual", "inverse", "complement", "induced" };
    static const std::set<std::string> binary{ "product", "parallel", "serial", "intersect", "union" };
    const bool is_unary = unary.count( o.op ) > 0;
    if ( !is_unary && !binary.count( o.op ) )
        throw UsageError( "unknown operator '" + o.op + "'" );
    const std::size_t arity = is_unary ? 1 : 2;
    if ( o.files.size() != arity )
        throw UsageError( o.op + " takes " + std::to_string( arity ) + " operand(s)" );

    std::vector<Operand> operands;
    for ( const auto& ref : o.files )
        operands.push_back( load_operand( ref ) );
    const PseudoSystem& f = *operands[ 0 ].system;

    std::optional<PseudoSystem> result;
    if ( o.op == "dual" )
        result = dual( f );
    else if ( o.op == "inverse" )
        result = inverse( f );
    else if ( o.op == "complement" )
        result = complement( f );
    else if ( o.op == "induced" )
        result = induced_system( f );
    else
    {
        const PseudoSystem& g = *operands[ 1 ].system;
        if ( o.op == "product" )
            result = product( f, g );
        else if ( o.op == "parallel" )
            result = parallel( f, g );
        else if ( o.op == "serial" )
            result = serial( f, g );
        else if ( o.op == "intersect" )
            result = intersect( f, g );
        else
            result = unite( f, g );
    }

    std::string name = o.name;
    if ( name.empty() )
        name = is_unary ? operands[ 0 ].name : operands[ 0 ].name + "_" + o.op + "_" + operands[ 1 ].name;
    if ( o.json )
    {
        emit( system_json( name, *result ) + "\n", o.output, out );
        return ok;
    }
    Namer namer;
    for ( const auto& operand : operands )
        namer.learn( operand.doc );
    std::optional<std::size_t> input_split;
    std::optional<std::size_t> state_split;
    if ( o.op == "product" )
        input_split = f.m();
    if ( o.op == "product" || o.op == "parallel" )
        state_split = f.n();
    emit( format_document( namer.document( name, *result, input_split, state_split ) ), o.output, out );
    return ok;
}

std::vector<std::pair<std::string, Signal>> signals_of( const std::vector<std::string>& paths, Namer& namer )
{
    std::vector<std::pair<std::string, Signal>> all;
    for ( const auto& path : paths )
    {
        const Document doc = load_document( path );
        namer.learn( doc );
        for ( const auto& entry : doc.signals )
            all.push_back( entry );
    }
    return all;
}

int delay( const Options& o, std::ostream& out )
{
    const DelayParams p( Time::parse( o.d ) );
    const std::vector<Time> taus = parse_taus( o.taus );
    Namer namer;
    const auto inputs = signals_of( o.files, namer );
    const auto candidates = signals_of( o.candidates, namer );

    Json j;
    j[ "d" ] = p.d().str();
    j[ "taus" ] = Json::array();
    for ( const auto& t : taus )
        j[ "taus" ].push_back( t.str() );
    j[ "inputs" ] = Json::array();
    Document doc;
    std::ostringstream members;
    for ( const auto& [ uname, u ] : inputs )
    {
        Json ji;
        ji[ "name" ] = uname;
        ji[ "window_inf" ] = parsed( step_function_json( window_extrema( u, p.d(), Extremum::inf ) ) );
        ji[ "window_sup" ] = parsed( step_function_json( window_extrema( u, p.d(), Extremum::sup ) ) );
        ji[ "pure_delays" ] = Json::array();
        for ( const auto& x : pure_delay_states( u, p, taus ) )
        {
            const std::string& xname = namer.name( x );
            doc.signals.emplace( xname, x );
            ji[ "pure_delays" ].push_back( { { "name", xname }, { "signal", parsed( signal_json( x ) ) } } );
        }
        ji[ "candidates" ] = Json::array();
        for ( const auto& [ cname, c ] : candidates )
        {
            const bool member = delay_membership( u, c, p );
            ji[ "candidates" ].push_back( { { "name", cname }, { "member", member } } );
            members << "# member " << uname << " " << cname << " " << ( member ? "true" : "false" ) << "\n";
        }
        j[ "inputs" ].push_back( std::move( ji ) );
    }
    emit( o.json ? j.dump( 2 ) + "\n" : format_document( doc ) + members.str(), o.output, out );
    return ok;
}

int snapshot( const Options& o, std::ostream& out )
{
    const DelayParams p( Time::parse( o.d ) );
    const std::vector<Time> taus = parse_taus( o.taus );
    Namer namer;
    std::vector<Signal> inputs;
    std::vector<Signal> extras;
    for ( const auto& [ name, x ] : signals_of( o.files, namer ) )
        inputs.push_back( x );
    for ( const auto& [ name, x ] : signals_of( o.candidates, namer ) )
        extras.push_back( x );
    const PseudoSystem f = delay_snapshot( inputs, p, taus, extras );
    const std::string name = o.name.empty() ? "delay" : o.name;
    emit( o.json ? system_json( name, f ) + "\n" : format_document( namer.document( name, f ) ), o.output, out );
    return ok;
}

int laws( const Options& o, std::ostream& out )
{
    std::optional<double> cap;
    if ( const char* env = std::getenv( laws_time_env ) )
    {
        try
        {
            cap = std::stod( env );
        }
        catch ( const std::exception& )
        {
            throw UsageError( std::string( laws_time_env ) + " is not a number" );
        }
    }
    const LawReport r = run_law_suite( o.seed, o.iters, cap );
    emit( o.json ? law_report_json( r ) + "\n" : law_report_text( r ), o.output, out );
    const bool clean = r.failing( std::nullopt, LawForm::as_stated ) == 0
                       && r.failing( std::nullopt, LawForm::corrected ) == 0;
    return clean ? ok : law_failure;
}

int fmt( const Options& o, std::ostream& out )
{
    for ( const auto& path : o.files )
    {
        const std::string text = format_document( load_document( path ) );
        if ( o.to_stdout )
            out << text;
        else
            write_file( path, text );
    }
    return ok;
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Pseudo-systems of Boolean signals: classification, operators, delay and law checks", "psys" };
    app.require_subcommand( 1 );
    Options o;

    auto* cl = app.add_subcommand( "classify", "Initial and final boundary reports" );
    cl->add_option( "system", o.files, "FILE or FILE@NAME" )->required()->expected( 1 );
    cl->add_option( "--side", o.side )->check( CLI::IsMember( { "initial", "final", "both" } ) );
    cl->add_flag( "--json", o.json );
    cl->add_option( "-o,--output", o.output );

    auto* sf = app.add_subcommand( "state-fn", "State functions phi and state sets theta" );
    sf->add_option( "system", o.files, "FILE or FILE@NAME" )->required()->expected( 1 );
    sf->add_option( "--side", o.side )->check( CLI::IsMember( { "initial", "final", "both" } ) );
    sf->add_flag( "--json", o.json );
    sf->add_option( "-o,--output", o.output );

    auto* opc = app.add_subcommand( "op", "Apply an operator and print the canonical result" );
    opc->add_option( "operator", o.op,
                     "dual, inverse, complement, induced, product, parallel, serial, intersect or union" )
            ->required();
    opc->add_option( "systems", o.files, "FILE or FILE@NAME, one or two" )->required();
    opc->add_option( "--name", o.name, "name of the result system" );
    opc->add_flag( "--json", o.json );
    opc->add_option( "-o,--output", o.output );

    auto* dl = app.add_subcommand( "delay", "Pure delays, window bounds and membership of candidates" );
    dl->add_option( "inputs", o.files, "signal files" )->required();
    dl->add_option( "--d", o.d, "window width, a positive rational" )->required();
    dl->add_option( "--taus", o.taus, "comma separated delays in (0, d]" )->required();
    dl->add_option( "--candidates", o.candidates, "signal files to test" );
    dl->add_flag( "--json", o.json );
    dl->add_option( "-o,--output", o.output );

    auto* sn = app.add_subcommand( "snapshot", "Finite pseudo-system window onto the delay relation" );
    sn->add_option( "inputs", o.files, "signal files" )->required();
    sn->add_option( "--d", o.d )->required();
    sn->add_option( "--taus", o.taus )->required();
    sn->add_option( "--candidates", o.candidates );
    sn->add_option( "--name", o.name );
    sn->add_flag( "--json", o.json );
    sn->add_option( "-o,--output", o.output );

    auto* lw = app.add_subcommand( "laws", "Randomized law suite" );
    lw->add_option( "--seed", o.seed );
    lw->add_option( "--iters", o.iters );
    lw->add_flag( "--json", o.json );
    lw->add_option( "-o,--output", o.output );

    auto* fm = app.add_subcommand( "fmt", "Rewrite files in canonical form" );
    fm->add_option( "files", o.files )->required();
    fm->add_flag( "--stdout", o.to_stdout, "print instead of rewriting" );

    try
    {
        std::vector<std::string> reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::CallForHelp& e )
    {
        out << app.help();
        return ok;
    }
    catch ( const CLI::CallForAllHelp& e )
    {
        out << app.help( "", CLI::AppFormatMode::All );
        return ok;
    }
    catch ( const CLI::ParseError& e )
    {
        err << "psys: " << e.what() << "\n";
        return usage_error;
    }

    try
    {
        if ( cl->parsed() )
            return classify( o, out );
        if ( sf->parsed() )
            return state_fn( o, out );
        if ( opc->parsed() )
            return op( o, out );
        if ( dl->parsed() )
            return delay( o, out );
        if ( sn->parsed() )
            return snapshot( o, out );
        if ( lw->parsed() )
            return laws( o, out );
        return fmt( o, out );
    }
    catch ( const FileParseError& e )
    {
        err << "psys: parse error at " << e.what() << "\n";
        return parse_error;
    }
    catch ( const ParseError& e )
    {
        err << "psys: parse error at " << e.what() << "\n";
        return parse_error;
    }
    catch ( const DimensionError& e )
    {
        err << "psys: dimension mismatch: " << e.what() << "\n";
        return dimension_error;
    }
    catch ( const NoInducedSystem& e )
    {
        err << "psys: no induced system: " << e.what() << "\n";
        return no_induced_system;
    }
    catch ( const UsageError& e )
    {
        err << "psys: " << e.what() << "\n";
        return usage_error;
    }
    catch ( const IoError& e )
    {
        err << "psys: " << e.what() << "\n";
        return io_error;
    }
    catch ( const Error& e )
    {
        err << "psys: " << e.what() << "\n";
        return domain_error;
    }
}

} // namespace psys::cli

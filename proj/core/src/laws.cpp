#include "psys/laws.hpp"

#include "psys/error.hpp"
#include "psys/generator.hpp"
#include "psys/system_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace psys
{

const char* to_string( LawGroup group )
{
    switch ( group )
    {
    case LawGroup::algebra:
        return "algebra";
    case LawGroup::classification:
        return "classification";
    case LawGroup::transfer:
        return "transfer";
    }
    return "?";
}

const char* to_string( LawForm form )
{
    return form == LawForm::as_stated ? "as_stated" : "corrected";
}

std::size_t LawReport::failing( std::optional<LawGroup> group, LawForm form ) const
{
    std::size_t n = 0;
    for ( const auto& law : laws )
        if ( law.form == form && ( !group || law.group == *group ) && law.passed != law.checked )
            ++n;
    return n;
}

namespace
{

bool same_relation( const PseudoSystem& f, const PseudoSystem& g )
{
    return f.m() == g.m() && f.n() == g.n() && is_subsystem( f, g ) && is_subsystem( g, f );
}

std::string dump( const std::string& name, const PseudoSystem& f )
{
    return format_document( document_of( name, f ) );
}

std::optional<PseudoSystem> induced_or_none( const PseudoSystem& f )
{
    try
    {
        return induced_system( f );
    }
    catch ( const NoInducedSystem& )
    {
        return std::nullopt;
    }
}

bool supports_meet( const PseudoSystem& f, const PseudoSystem& g )
{
    for ( const auto& u : support( f ) )
        if ( !g.apply( u ).empty() )
            return true;
    return false;
}

/// Everything one iteration works on.
struct Instance
{
    PseudoSystem f, g, fsub, fs, gs, f2, g2, h, h1, hsub, fp, gp, hp, h2;
};

Instance make_instance( Generator& gen )
{
    const std::size_t m = 1 + gen.below( 2 );
    const std::size_t n = 1 + gen.below( 2 );
    const std::size_t m2 = 1 + gen.below( 2 );
    const std::size_t n2 = 1 + gen.below( 2 );
    const std::size_t p = 1 + gen.below( 2 );
    const std::size_t p2 = 1 + gen.below( 2 );

    PseudoSystem f = gen.system( m, n );
    PseudoSystem g = gen.system_over( m, n, gen.universe_from( f.inputs(), m ), gen.universe_from( f.states(), n ) );
    PseudoSystem fsub = gen.subsystem_of( g );
    PseudoSystem gs = gen.system_over( m, n, f.inputs(), f.states() );
    PseudoSystem fs = gen.chance( 0.5 ) ? gen.subsystem_of( gs ) : gen.system_over( m, n, f.inputs(), f.states() );
    PseudoSystem f2 = gen.system( m2, n2 );
    PseudoSystem g2
            = gen.system_over( m2, n2, gen.universe_from( f2.inputs(), m2 ), gen.universe_from( f2.states(), n2 ) );
    PseudoSystem h = gen.system_over( n, p, gen.universe_from( f.states(), n ), gen.universe( p ) );
    PseudoSystem h1 = gen.system_over( n, p, gen.universe_from( h.inputs(), n ), gen.universe_from( h.states(), p ) );
    PseudoSystem hsub = gen.subsystem_of( h1 );
    PseudoSystem fp = gen.system_over( m, n2, gen.universe_from( f.inputs(), m ), gen.universe( n2 ) );
    PseudoSystem gp
            = gen.system_over( m, n2, gen.universe_from( fp.inputs(), m ), gen.universe_from( fp.states(), n2 ) );
    PseudoSystem hp = gen.system_over( n2, p2, gen.universe_from( fp.states(), n2 ), gen.universe( p2 ) );
    PseudoSystem h2 = gen.system_over( n2, p2, gen.universe_from( f2.states(), n2 ), gen.universe( p2 ) );
    return Instance{ std::move( f ),  std::move( g ),  std::move( fsub ), std::move( fs ), std::move( gs ),
                     std::move( f2 ), std::move( g2 ), std::move( h ),    std::move( h1 ), std::move( hsub ),
                     std::move( fp ), std::move( gp ), std::move( hp ),   std::move( h2 ) };
}

class Suite
{
public:
    explicit Suite( LawReport& report ) : _report{ report } {}

    void begin( std::uint64_t iteration ) { _iteration = iteration; }

    /// `body` returns whether the law holds and may describe a failure.
    void law( const std::string& name, LawGroup group, LawForm form, const std::function<bool( std::string& )>& body )
    {
        std::string detail;
        bool ok = false;
        try
        {
            ok = body( detail );
        }
        catch ( const std::exception& e )
        {
            detail = std::string( "exception: " ) + e.what();
        }
        record( name, group, form, ok, detail );
    }

    void algebra( const std::string& name, const std::function<bool( std::string& )>& body,
                  LawForm form = LawForm::as_stated )
    {
        law( name, LawGroup::algebra, form, body );
    }

    void record( const std::string& name, LawGroup group, LawForm form, bool ok, const std::string& detail )
    {
        auto [ it, fresh ] = _index.emplace( name, _report.laws.size() );
        if ( fresh )
            _report.laws.push_back( LawOutcome{ name, group, form, 0, 0, std::nullopt, {} } );
        LawOutcome& out = _report.laws[ it->second ];
        ++out.checked;
        if ( ok )
            ++out.passed;
        else if ( !out.first_failure )
        {
            out.first_failure = _iteration;
            out.counterexample = detail;
        }
    }

private:
    LawReport& _report;
    std::map<std::string, std::size_t> _index;
    std::uint64_t _iteration = 0;
};

using D = std::string&;

void algebra_laws( Suite& s, const Instance& x )
{
    const auto& [ f, g, fsub, fs, gs, f2, g2, h, h1, hsub, fp, gp, hp, h2 ] = x;

    s.algebra( "dual is an involution", [&]( D d ) {
        d = dump( "f", f );
        return dual( dual( f ) ) == f;
    } );
    s.algebra( "inverse is an involution", [&]( D d ) {
        d = dump( "f", f );
        return inverse( inverse( f ) ) == f;
    } );
    s.algebra( "complement is an involution", [&]( D d ) {
        d = dump( "f", f );
        return complement( complement( f ) ) == f;
    } );
    s.algebra( "dual preserves and reflects inclusion", [&]( D d ) {
        d = dump( "f", fsub ) + dump( "g", g );
        return is_subsystem( fsub, g ) == is_subsystem( dual( fsub ), dual( g ) )
               && is_subsystem( f, g ) == is_subsystem( dual( f ), dual( g ) );
    } );
    s.algebra( "inverse preserves inclusion", [&]( D d ) {
        d = dump( "f", fsub ) + dump( "g", g );
        return is_subsystem( inverse( fsub ), inverse( g ) )
               && is_subsystem( inverse( dual( fsub ) ), inverse( dual( g ) ) );
    } );
    s.algebra( "complement reverses inclusion over shared universes", [&]( D d ) {
        d = dump( "f", fs ) + dump( "g", gs );
        return is_subsystem( fs, gs ) == is_subsystem( complement( gs ), complement( fs ) );
    } );
    s.algebra( "dual and inverse commute", [&]( D d ) {
        d = dump( "f", f );
        return dual( inverse( f ) ) == inverse( dual( f ) );
    } );

    // product
    const PseudoSystem ff2 = product( f, f2 );
    s.algebra( "dual distributes over product", [&]( D d ) {
        d = dump( "f", f ) + dump( "f2", f2 );
        return dual( ff2 ) == product( dual( f ), dual( f2 ) );
    } );
    s.algebra( "inverse distributes over product", [&]( D d ) {
        d = dump( "f", f ) + dump( "f2", f2 );
        return inverse( ff2 ) == product( inverse( f ), inverse( f2 ) );
    } );
    {
        const PseudoSystem sub2 = product( fsub, g2 );
        const PseudoSystem big = product( g, g2 );
        const bool lhs = is_subsystem( fsub, g ) && is_subsystem( g2, g2 );
        const bool lhs_random = is_subsystem( f, g ) && is_subsystem( f2, g2 );
        const bool rhs_random = is_subsystem( ff2, product( g, g2 ) );
        s.algebra( "product inclusion iff factor inclusions", [&]( D d ) {
            d = dump( "f", f ) + dump( "f2", f2 ) + dump( "g", g ) + dump( "g2", g2 );
            return lhs == is_subsystem( sub2, big ) && lhs_random == rhs_random;
        } );
        s.algebra(
                "product inclusion iff factor inclusions, non-null factors",
                [&]( D d ) {
                    d = dump( "f", f ) + dump( "f2", f2 ) + dump( "g", g ) + dump( "g2", g2 );
                    const bool ok1 = fsub.is_null() || g2.is_null() || lhs == is_subsystem( sub2, big );
                    const bool ok2 = f.is_null() || f2.is_null() || lhs_random == rhs_random;
                    return ok1 && ok2;
                },
                LawForm::corrected );
    }

    // parallel
    s.algebra( "parallel factors through the diagonal", [&]( D d ) {
        d = dump( "f", f ) + dump( "fp", fp );
        const PseudoSystem par = parallel( f, fp );
        const PseudoSystem prod = product( f, fp );
        for ( const auto& u : par.inputs() )
            if ( par.apply( u ) != prod.apply( concat( u, u ) ) )
                return false;
        return true;
    } );

    // serial
    const PseudoSystem hf = serial( h, f );
    s.algebra( "dual distributes over serial connection", [&]( D d ) {
        d = dump( "h", h ) + dump( "f", f );
        return dual( hf ) == serial( dual( h ), dual( f ) );
    } );
    s.algebra( "inverse reverses serial connection", [&]( D d ) {
        d = dump( "h", h ) + dump( "f", f );
        return inverse( hf ) == serial( inverse( f ), inverse( h ) );
    } );
    s.algebra( "serial connection is monotone in both arguments", [&]( D d ) {
        d = dump( "h", h ) + dump( "f", fsub ) + dump( "g", g );
        const PseudoSystem hg = serial( h, g );
        const PseudoSystem hs = serial( hsub, f );
        const PseudoSystem h1f = serial( h1, f );
        return is_subsystem( serial( h, fsub ), hg ) && is_subsystem( hs, h1f );
    } );
    s.algebra( "inverse after f relates inputs with a common state", [&]( D d ) {
        d = dump( "f", f );
        const PseudoSystem left = serial( inverse( f ), f );
        for ( const auto& u : f.inputs() )
        {
            SignalSet expect;
            const auto fu = f.apply( u );
            for ( const auto& v : f.inputs() )
            {
                const auto fv = f.apply( v );
                if ( std::find_first_of( fu.begin(), fu.end(), fv.begin(), fv.end() ) != fu.end() )
                    expect.insert( v );
            }
            const auto got = left.apply( u );
            if ( SignalSet( got.begin(), got.end() ) != expect )
                return false;
        }
        const PseudoSystem right = serial( f, inverse( f ) );
        const PseudoSystem inv = inverse( f );
        for ( const auto& xs : f.states() )
        {
            SignalSet expect;
            const auto ix = inv.apply( xs );
            for ( const auto& z : f.states() )
            {
                const auto iz = inv.apply( z );
                if ( std::find_first_of( ix.begin(), ix.end(), iz.begin(), iz.end() ) != ix.end() )
                    expect.insert( z );
            }
            const auto got = right.apply( xs );
            if ( SignalSet( got.begin(), got.end() ) != expect )
                return false;
        }
        return true;
    } );
    s.algebra( "serial connection of products is the product of serial connections", [&]( D d ) {
        d = dump( "h", h ) + dump( "h2", h2 ) + dump( "f", f ) + dump( "f2", f2 );
        return same_relation( serial( product( h, h2 ), ff2 ), product( hf, serial( h2, f2 ) ) );
    } );
    s.algebra( "product after parallel is the parallel of serial connections", [&]( D d ) {
        d = dump( "h", h ) + dump( "hp", hp ) + dump( "f", f ) + dump( "fp", fp );
        return same_relation( serial( product( h, hp ), parallel( f, fp ) ), parallel( hf, serial( hp, fp ) ) );
    } );

    // complement
    s.algebra( "dual and complement commute", [&]( D d ) {
        d = dump( "f", f );
        return dual( complement( f ) ) == complement( dual( f ) );
    } );
    s.algebra( "inverse and complement commute", [&]( D d ) {
        d = dump( "f", f );
        return inverse( complement( f ) ) == complement( inverse( f ) );
    } );
    s.algebra( "product of complements is inside the complement of the product", [&]( D d ) {
        d = dump( "f", f ) + dump( "f2", f2 );
        return is_subsystem( product( complement( f ), complement( f2 ) ), complement( ff2 ) );
    } );
    s.algebra( "parallel of complements is inside the complement of the parallel", [&]( D d ) {
        d = dump( "f", f ) + dump( "fp", fp );
        return is_subsystem( parallel( complement( f ), complement( fp ) ), complement( parallel( f, fp ) ) );
    } );

    // lattice
    const PseudoSystem fg_meet = intersect( f, g );
    const PseudoSystem fg_join = unite( f, g );
    s.algebra( "intersection and union are idempotent", [&]( D d ) {
        d = dump( "f", f );
        return intersect( f, f ) == f && unite( f, f ) == f;
    } );
    s.algebra( "null is the zero of intersection and the unit of union", [&]( D d ) {
        d = dump( "f", f );
        const PseudoSystem z = PseudoSystem::null( f.m(), f.n(), f.inputs(), f.states() );
        return intersect( f, z ).is_null() && unite( f, z ) == f && complement( z )
               == PseudoSystem::total( f.m(), f.n(), f.inputs(), f.states() );
    } );
    s.algebra( "dual distributes over intersection and union", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g );
        return dual( fg_meet ) == intersect( dual( f ), dual( g ) ) && dual( fg_join ) == unite( dual( f ), dual( g ) );
    } );
    s.algebra( "inverse distributes over intersection and union", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g );
        return inverse( fg_meet ) == intersect( inverse( f ), inverse( g ) )
               && inverse( fg_join ) == unite( inverse( f ), inverse( g ) );
    } );
    s.algebra( "product distributes over intersection", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g ) + dump( "f2", f2 ) + dump( "g2", g2 );
        return same_relation( product( fg_meet, intersect( f2, g2 ) ), intersect( ff2, product( g, g2 ) ) );
    } );
    const PseudoSystem prod_of_joins = product( fg_join, unite( f2, g2 ) );
    const PseudoSystem join_of_prods = unite( ff2, product( g, g2 ) );
    s.algebra( "product distributes over union", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g ) + dump( "f2", f2 ) + dump( "g2", g2 );
        return same_relation( prod_of_joins, join_of_prods );
    } );
    s.algebra(
            "union of products is inside the product of unions",
            [&]( D d ) {
                d = dump( "f", f ) + dump( "g", g ) + dump( "f2", f2 ) + dump( "g2", g2 );
                return is_subsystem( join_of_prods, prod_of_joins );
            },
            LawForm::corrected );
    s.algebra( "parallel distributes over intersection", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g ) + dump( "fp", fp ) + dump( "gp", gp );
        return same_relation( parallel( fg_meet, intersect( fp, gp ) ), intersect( parallel( f, fp ), parallel( g, gp ) ) );
    } );
    const PseudoSystem par_of_joins = parallel( fg_join, unite( fp, gp ) );
    const PseudoSystem join_of_pars = unite( parallel( f, fp ), parallel( g, gp ) );
    s.algebra( "parallel distributes over union", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g ) + dump( "fp", fp ) + dump( "gp", gp );
        return same_relation( par_of_joins, join_of_pars );
    } );
    s.algebra(
            "union of parallels is inside the parallel of unions",
            [&]( D d ) {
                d = dump( "f", f ) + dump( "g", g ) + dump( "fp", fp ) + dump( "gp", gp );
                return is_subsystem( join_of_pars, par_of_joins );
            },
            LawForm::corrected );
    s.algebra( "serial connection after an intersection is inside the intersection", [&]( D d ) {
        d = dump( "h", h ) + dump( "f", f ) + dump( "g", g );
        return is_subsystem( serial( h, fg_meet ), intersect( hf, serial( h, g ) ) );
    } );
    s.algebra( "serial connection after a union is inside the union", [&]( D d ) {
        d = dump( "h", h ) + dump( "f", f ) + dump( "g", g );
        return is_subsystem( serial( h, fg_join ), unite( hf, serial( h, g ) ) );
    } );
    s.algebra( "serial connection of an intersection is inside the intersection", [&]( D d ) {
        d = dump( "h", h ) + dump( "h1", h1 ) + dump( "f", f );
        return is_subsystem( serial( intersect( h, h1 ), f ), intersect( hf, serial( h1, f ) ) );
    } );
    s.algebra( "serial connection of a union is inside the union", [&]( D d ) {
        d = dump( "h", h ) + dump( "h1", h1 ) + dump( "f", f );
        return is_subsystem( serial( unite( h, h1 ), f ), unite( hf, serial( h1, f ) ) );
    } );

    // systems
    const auto sf = induced_or_none( f );
    const auto sg = induced_or_none( g );
    const auto sf2 = induced_or_none( f2 );
    const auto sfp = induced_or_none( fp );
    const auto sh = induced_or_none( h );
    s.algebra( "induced system is the largest system inside", [&]( D d ) {
        d = dump( "f", f );
        if ( !sf )
        {
            // nothing survives the restriction, so no input with an initial
            // value may have a state with an initial value
            for ( std::size_t i = 0; i < f.inputs().size(); ++i )
                for ( auto j : f.image( i ) )
                    if ( f.inputs()[ i ].in_S() && f.states()[ j ].in_S() )
                        return false;
            return !is_system( f );
        }
        return is_system( *sf ) && is_subsystem( *sf, f ) && ( is_system( f ) == ( *sf == f ) );
    } );
    s.algebra( "dual and inverse of a system are systems", [&]( D d ) {
        d = dump( "f", f );
        return !sf || ( is_system( dual( *sf ) ) && is_system( inverse( *sf ) ) );
    } );
    s.algebra( "product of systems is a system", [&]( D d ) {
        d = dump( "f", f ) + dump( "f2", f2 );
        return !sf || !sf2 || is_system( product( *sf, *sf2 ) );
    } );
    s.algebra( "parallel of systems is a system iff the supports meet", [&]( D d ) {
        d = dump( "f", f ) + dump( "fp", fp );
        return !sf || !sfp || is_system( parallel( *sf, *sfp ) ) == supports_meet( *sf, *sfp );
    } );
    s.algebra( "serial connection of systems is a system iff some state is admissible for h", [&]( D d ) {
        d = dump( "h", h ) + dump( "f", f );
        if ( !sf || !sh )
            return true;
        bool meets = false;
        for ( const auto& u : support( *sf ) )
            for ( const auto& xs : sf->apply( u ) )
                meets = meets || !sh->apply( xs ).empty();
        return is_system( serial( *sh, *sf ) ) == meets;
    } );
    s.algebra( "intersection of systems is a system iff some images meet", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g );
        if ( !sf || !sg )
            return true;
        bool meets = false;
        for ( const auto& u : support( *sf ) )
        {
            const auto a = sf->apply( u );
            const auto b = sg->apply( u );
            meets = meets || std::find_first_of( a.begin(), a.end(), b.begin(), b.end() ) != a.end();
        }
        return is_system( intersect( *sf, *sg ) ) == meets;
    } );
    s.algebra( "union of systems is a system", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g );
        return !sf || !sg || is_system( unite( *sf, *sg ) );
    } );
    s.algebra( "inclusion of systems is support inclusion plus image inclusion", [&]( D d ) {
        d = dump( "f", f ) + dump( "g", g );
        if ( !sf || !sg )
            return true;
        const auto sup = support( *sg );
        bool pointwise = true;
        for ( const auto& u : support( *sf ) )
        {
            const auto a = sf->apply( u );
            const auto b = sg->apply( u );
            pointwise = pointwise && std::binary_search( sup.begin(), sup.end(), u )
                        && std::includes( b.begin(), b.end(), a.begin(), a.end() );
        }
        return is_subsystem( *sf, *sg ) == pointwise;
    } );
}

std::string side_name( const char* what, Side side )
{
    return std::string( what ) + " (" + to_string( side ) + ")";
}

void classification_laws( Suite& s, const Instance& x )
{
    const auto& f = x.f;
    const auto cls = [&]( const std::string& name, const std::function<bool( std::string& )>& body ) {
        s.law( name, LawGroup::classification, LawForm::as_stated, body );
    };
    for ( Side side : { Side::initial, Side::final } )
    {
        const BoundaryReport r = boundary_report( f, side );
        std::optional<StateFunctionReport> sfr;
        try
        {
            sfr = state_function( f, side );
        }
        catch ( const InvalidArgument& )
        {
        }

        cls( side_name( "state level is the strongest property that holds", side ), [&]( D d ) {
            d = dump( "f", f ) + "level " + to_string( r.state_level );
            StateLevel expect = StateLevel::none;
            if ( sfr )
            {
                bool race_free = true;
                for ( const auto& [ u, values ] : sfr->phi )
                    race_free = race_free && values.size() <= 1;
                expect = sfr->theta.size() <= 1 ? StateLevel::constant
                         : race_free            ? StateLevel::race_free
                                                : StateLevel::has_states;
            }
            return r.state_level == expect;
        } );
        cls( side_name( "cell matches state row and time column", side ), [&]( D d ) {
            d = dump( "f", f );
            if ( r.state_level == StateLevel::none )
                return !r.cell.has_value();
            if ( !r.cell )
                return false;
            const int index = *r.cell - 'a';
            return index / 3 == static_cast<int>( r.state_level ) - 1 && index % 3 == static_cast<int>( r.time_level );
        } );
        cls( side_name( "witness instants hold for every state", side ), [&]( D d ) {
            d = dump( "f", f );
            for ( std::size_t i = 0; i < f.inputs().size(); ++i )
            {
                const auto& instant = r.per_input[ i ].extremal_instant;
                for ( auto j : f.image( i ) )
                {
                    const Signal& st = f.states()[ j ];
                    const auto limit = st.limit_value( side );
                    if ( !limit )
                        continue;
                    std::vector<Time> changes;
                    st.change_points( st.anchor() - Time( 16 ), st.last_time() + Time( 16 ), changes );
                    for ( const auto& c : changes )
                    {
                        if ( st.value_at( c ) == st.left_limit( c ) )
                            continue;
                        if ( !instant )
                            return false;
                        if ( side == Side::initial ? c < *instant : c > *instant )
                            return false;
                        if ( r.global_instant && ( side == Side::initial ? c < *r.global_instant : c > *r.global_instant ) )
                            return false;
                    }
                    if ( instant )
                    {
                        const Time probe = side == Side::initial ? *instant - Time( 1 ) : *instant + Time( 1 );
                        if ( st.value_at( probe ) != *limit )
                            return false;
                    }
                }
            }
            return true;
        } );
        cls( side_name( "race-free means at most one value per input", side ), [&]( D d ) {
            d = dump( "f", f );
            if ( r.state_level != StateLevel::race_free && r.state_level != StateLevel::constant )
                return true;
            for ( const auto& b : r.per_input )
                if ( b.values.size() > 1 )
                    return false;
            return true;
        } );
        cls( side_name( "constant means the state set is empty or the constant", side ), [&]( D d ) {
            d = dump( "f", f );
            if ( r.state_level != StateLevel::constant )
                return true;
            if ( !sfr )
                return false;
            if ( sfr->theta.empty() )
                return !r.constant_value.has_value();
            return sfr->theta.size() == 1 && r.constant_value == sfr->theta.front();
        } );
        cls( side_name( "null pseudo-systems are vacuously constant", side ), [&]( D d ) {
            d = dump( "f", f );
            if ( !f.is_null() )
                return !r.vacuous;
            return r.vacuous && r.state_level == StateLevel::constant && !r.constant_value;
        } );
        cls( side_name( "inverse has no limit states when an admissible input lacks a limit", side ), [&]( D d ) {
            d = dump( "f", f );
            bool missing = false;
            for ( const auto& u : support( f ) )
                missing = missing || !u.limit_value( side );
            return !missing || boundary_report( inverse( f ), side ).state_level == StateLevel::none;
        } );
    }
}

void transfer_laws( Suite& s, const Instance& x )
{
    const auto run = [&]( Construction c, const PseudoSystem& a, const PseudoSystem* b, const std::string& dumped ) {
        TransferResult t;
        try
        {
            t = check_transfer_laws( c, a, b );
        }
        catch ( const std::exception& e )
        {
            s.record( std::string( to_string( c ) ) + " laws run", LawGroup::transfer, LawForm::as_stated, false,
                      dumped + "exception: " + e.what() );
            return;
        }
        for ( const auto& ch : t.checks )
            s.record( ch.law, LawGroup::transfer, ch.form, ch.passed, dumped + ch.detail );
    };
    run( Construction::subsystem, x.fsub, &x.g, dump( "f", x.fsub ) + dump( "g", x.g ) );
    run( Construction::dual, x.f, nullptr, dump( "f", x.f ) );
    run( Construction::inverse, x.f, nullptr, dump( "f", x.f ) );
    run( Construction::product, x.f, &x.f2, dump( "f", x.f ) + dump( "f2", x.f2 ) );
    run( Construction::serial, x.h, &x.f, dump( "h", x.h ) + dump( "f", x.f ) );
    run( Construction::intersect, x.f, &x.g, dump( "f", x.f ) + dump( "g", x.g ) );
    run( Construction::unite, x.f, &x.g, dump( "f", x.f ) + dump( "g", x.g ) );
}

} // namespace

LawReport run_law_suite( std::uint64_t seed, std::size_t iterations, std::optional<double> max_seconds )
{
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    LawReport report;
    report.seed = seed;
    report.requested = iterations;
    Suite suite{ report };
    for ( std::size_t i = 0; i < iterations; ++i )
    {
        if ( max_seconds && std::chrono::duration<double>( Clock::now() - start ).count() > *max_seconds )
        {
            report.timed_out = true;
            break;
        }
        Generator gen( seed, i );
        const Instance inst = make_instance( gen );
        suite.begin( i );
        algebra_laws( suite, inst );
        classification_laws( suite, inst );
        transfer_laws( suite, inst );
        ++report.completed;
    }
    return report;
}

std::string law_report_json( const LawReport& r )
{
    nlohmann::ordered_json j;
    j[ "seed" ] = r.seed;
    j[ "requested" ] = r.requested;
    j[ "completed" ] = r.completed;
    j[ "timed_out" ] = r.timed_out;
    j[ "universes" ] = "relativized: every operator acts within the declared finite universes";
    j[ "failing_as_stated" ] = r.failing( std::nullopt, LawForm::as_stated );
    j[ "failing_corrected" ] = r.failing( std::nullopt, LawForm::corrected );
    j[ "laws" ] = nlohmann::ordered_json::array();
    for ( const auto& law : r.laws )
    {
        nlohmann::ordered_json l;
        l[ "name" ] = law.name;
        l[ "group" ] = to_string( law.group );
        l[ "form" ] = to_string( law.form );
        l[ "checked" ] = law.checked;
        l[ "passed" ] = law.passed;
        l[ "first_failure" ]
                = law.first_failure ? nlohmann::ordered_json( *law.first_failure ) : nlohmann::ordered_json();
        l[ "counterexample" ] = law.first_failure ? nlohmann::ordered_json( law.counterexample )
                                                  : nlohmann::ordered_json();
        j[ "laws" ].push_back( std::move( l ) );
    }
    return j.dump( 2 );
}

std::string law_report_text( const LawReport& r )
{
    std::ostringstream out;
    out << "seed " << r.seed << ", " << r.completed << "/" << r.requested << " iterations";
    if ( r.timed_out )
        out << " (time limit reached)";
    out << "\nuniverses relativized: every operator acts within the declared finite universes\n";
    for ( const auto& law : r.laws )
    {
        out << ( law.passed == law.checked ? "PASS " : "FAIL " ) << to_string( law.group ) << " "
            << to_string( law.form ) << " " << law.name << " " << law.passed << "/" << law.checked;
        if ( law.first_failure )
            out << " first failure at iteration " << *law.first_failure;
        out << "\n";
    }
    out << "failing: " << r.failing( std::nullopt, LawForm::as_stated ) << " as stated, "
        << r.failing( std::nullopt, LawForm::corrected ) << " corrected\n";
    return out.str();
}

} // namespace psys

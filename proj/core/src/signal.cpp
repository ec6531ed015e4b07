#include "psys/signal.hpp"

#include "piecewise.hpp"
#include "psys/error.hpp"

#include <algorithm>
#include <memory>

namespace psys
{

const char* to_string( Side side )
{
    return side == Side::initial ? "initial" : "final";
}

// ---------------------------------------------------------------------------
// Tail

Tail Tail::constant( BVec value )
{
    Tail t;
    t._value = std::move( value );
    return t;
}

Tail Tail::hold()
{
    return Tail{};
}

Tail Tail::periodic( std::vector<Segment> pattern )
{
    if ( pattern.empty() )
        throw InvalidArgument( "periodic tail needs a nonempty pattern" );
    for ( const auto& s : pattern )
        if ( !s.duration.is_positive() )
            throw InvalidArgument( "periodic tail durations must be positive, got " + s.duration.str() );
    Tail t;
    t._pattern = std::move( pattern );
    return t;
}

Time Tail::period() const
{
    Time p;
    for ( const auto& s : _pattern )
        p += s.duration;
    return p;
}

const BVec& Tail::pattern_at( const Time& r ) const
{
    Time acc;
    for ( const auto& s : _pattern )
    {
        acc += s.duration;
        if ( r < acc )
            return s.value;
    }
    return _pattern.back().value;
}

const BVec& Tail::pattern_before( const Time& r ) const
{
    if ( r == Time( 0 ) )
        return _pattern.back().value;
    Time acc;
    for ( const auto& s : _pattern )
    {
        acc += s.duration;
        if ( r <= acc )
            return s.value;
    }
    return _pattern.back().value;
}

std::strong_ordering operator<=>( const Tail& a, const Tail& b )
{
    if ( auto c = a.is_periodic() <=> b.is_periodic(); c != 0 )
        return c;
    if ( auto c = a._value.has_value() <=> b._value.has_value(); c != 0 )
        return c;
    if ( a._value )
        if ( auto c = *a._value <=> *b._value; c != 0 )
            return c;
    return std::lexicographical_compare_three_way( a._pattern.begin(), a._pattern.end(), b._pattern.begin(),
                                                   b._pattern.end() );
}

// ---------------------------------------------------------------------------
// Evaluation of raw representations

namespace detail
{

void sort_unique( std::vector<Time>& v )
{
    std::sort( v.begin(), v.end() );
    v.erase( std::unique( v.begin(), v.end() ), v.end() );
}

BVec Repr::value_at( const Time& t ) const
{
    const Time& anchor = events->front().time;
    if ( t < anchor )
    {
        if ( left->is_const() )
            return *left->value();
        return left->pattern_at( ( t - anchor ).mod( left->period() ) );
    }
    const Time& last = events->back().time;
    if ( right->is_periodic() && t >= last )
        return right->pattern_at( ( t - last ).mod( right->period() ) );
    auto it = std::upper_bound( events->begin(), events->end(), t,
                                []( const Time& v, const Event& e ) { return v < e.time; } );
    return std::prev( it )->value;
}

BVec Repr::left_limit( const Time& t ) const
{
    const Time& anchor = events->front().time;
    if ( t <= anchor )
    {
        if ( left->is_const() )
            return *left->value();
        return left->pattern_before( ( t - anchor ).mod( left->period() ) );
    }
    const Time& last = events->back().time;
    if ( right->is_periodic() && t > last )
        return right->pattern_before( ( t - last ).mod( right->period() ) );
    auto it = std::lower_bound( events->begin(), events->end(), t,
                                []( const Event& e, const Time& v ) { return e.time < v; } );
    return std::prev( it )->value;
}

void periodic_cuts( const Tail& tail, const Time& origin, const Time& lo, const Time& hi,
                    const std::optional<Time>& region_lo, const std::optional<Time>& region_hi,
                    std::vector<Time>& out )
{
    const Time period = tail.period();
    Time from = lo;
    if ( region_lo && *region_lo - period > from )
        from = *region_lo - period;
    Time to = hi;
    if ( region_hi && *region_hi < to )
        to = *region_hi;
    if ( from >= to )
        return;

    mpq_class k0( ( ( from - origin ) / period ).floor() );
    Time start = origin + Time( mpq_class( k0 * period.value() ) );
    for ( ; start < to; start += period )
    {
        Time t = start;
        for ( const auto& seg : tail.pattern() )
        {
            if ( t > lo && t < hi && ( !region_lo || t >= *region_lo ) && ( !region_hi || t < *region_hi ) )
                out.push_back( t );
            t += seg.duration;
        }
    }
}

void Repr::cuts( const Time& lo, const Time& hi, std::vector<Time>& out ) const
{
    const Time& anchor = events->front().time;
    const Time& last = events->back().time;
    if ( left->is_periodic() )
        periodic_cuts( *left, anchor, lo, hi, std::nullopt, anchor, out );
    for ( const auto& e : *events )
        if ( e.time > lo && e.time < hi )
            out.push_back( e.time );
    if ( right->is_periodic() )
        periodic_cuts( *right, last, lo, hi, last, std::nullopt, out );
}

Source source_of( const Signal& x )
{
    auto keep = std::make_shared<const Signal>( x );
    Source s;
    s.dim = x.dim();
    s.left_edge = x.anchor();
    s.right_edge = x.last_time();
    if ( x.left_tail().is_periodic() )
        s.left_period = x.left_tail().period();
    if ( x.right_tail().is_periodic() )
        s.right_period = x.right_tail().period();
    s.value = [keep]( const Time& t ) { return keep->value_at( t ); };
    s.left_limit = [keep]( const Time& t ) { return keep->left_limit( t ); };
    s.cuts = [keep]( const Time& lo, const Time& hi, std::vector<Time>& out ) { keep->change_points( lo, hi, out ); };
    return s;
}

// ---------------------------------------------------------------------------
// Canonicalization

namespace
{

/// Maximal constant runs of `src` covering [lo, hi) (or [lo, hi] when
/// include_hi), each reported by its start time.
std::vector<Event> pieces( const Source& src, const Time& lo, const Time& hi, bool include_hi )
{
    std::vector<Time> pts{ lo };
    if ( lo < hi )
        src.cuts( lo, hi, pts );
    if ( include_hi && hi > lo )
        pts.push_back( hi );
    sort_unique( pts );
    std::vector<Event> out;
    for ( const auto& p : pts )
    {
        BVec v = src.value( p );
        if ( out.empty() || out.back().value != v )
            out.push_back( Event{ p, std::move( v ) } );
    }
    return out;
}

std::vector<Segment> to_segments( const std::vector<Event>& runs, const Time& end )
{
    std::vector<Segment> segs;
    segs.reserve( runs.size() );
    for ( std::size_t i = 0; i < runs.size(); ++i )
    {
        const Time& next = i + 1 < runs.size() ? runs[ i + 1 ].time : end;
        segs.push_back( Segment{ next - runs[ i ].time, runs[ i ].value } );
    }
    return segs;
}

bool is_break( const Source& src, const Time& t )
{
    return src.value( t ) != src.left_limit( t );
}

/// First break of `src` at or after `from`, searching one period ahead.
Time first_break_from( const Source& src, const Time& from, const Time& period )
{
    if ( is_break( src, from ) )
        return from;
    auto runs = pieces( src, from, from + period, true );
    if ( runs.size() < 2 )
        throw Error( "internal: no break within one period" );
    return runs[ 1 ].time;
}

struct TailShape
{
    bool constant = true;
    BVec value;
    Time period;
};

TailShape normalize_tail( const Source& src, bool left )
{
    TailShape shape;
    const auto& period = left ? src.left_period : src.right_period;
    if ( !period )
    {
        shape.value = left ? src.left_limit( src.left_edge ) : src.value( src.right_edge );
        return shape;
    }
    auto runs = left ? pieces( src, src.left_edge - *period, src.left_edge, false )
                     : pieces( src, src.right_edge, src.right_edge + *period, false );
    if ( runs.size() == 1 )
    {
        shape.value = runs.front().value;
        return shape;
    }
    shape.constant = false;
    const Time end = left ? src.left_edge : src.right_edge + *period;
    shape.period = minimal_period( to_segments( runs, end ) );
    return shape;
}

} // namespace

Time minimal_period( const std::vector<Segment>& pattern )
{
    Time total;
    std::vector<Time> offsets;
    for ( const auto& s : pattern )
    {
        offsets.push_back( total );
        total += s.duration;
    }
    Tail tail = Tail::periodic( pattern );

    std::vector<Time> breaks;
    for ( std::size_t k = 1; k < offsets.size(); ++k )
        breaks.push_back( offsets[ k ] );
    if ( pattern.back().value != pattern.front().value )
        breaks.insert( breaks.begin(), Time( 0 ) );
    if ( breaks.empty() )
        return total;

    std::vector<Time> candidates{ total };
    for ( std::size_t k = 1; k < breaks.size(); ++k )
        candidates.push_back( ( breaks[ k ] - breaks[ 0 ] ).mod( total ) );
    sort_unique( candidates );

    for ( const auto& delta : candidates )
    {
        if ( !delta.is_positive() || !( total / delta ).is_integer() )
            continue;
        bool ok = true;
        for ( const auto& c : offsets )
        {
            for ( const Time& r : { c, ( c - delta ).mod( total ) } )
                if ( tail.pattern_at( r ) != tail.pattern_at( ( r + delta ).mod( total ) ) )
                {
                    ok = false;
                    break;
                }
            if ( !ok )
                break;
        }
        if ( ok )
            return delta;
    }
    return total;
}

} // namespace detail

struct SignalAccess
{
    static Signal build( std::size_t dim, Tail left, std::vector<Event> events, Tail right )
    {
        Signal s;
        s._dim = dim;
        s._left = std::move( left );
        s._events = std::move( events );
        s._right = std::move( right );
        return s;
    }
};

namespace detail
{

Signal canonicalize( const Source& src )
{
    const TailShape left = normalize_tail( src, true );
    const TailShape right = normalize_tail( src, false );

    auto constant = [&]( const BVec& v ) {
        return SignalAccess::build( src.dim, Tail::constant( v ), { Event{ Time( 0 ), v } }, Tail::hold() );
    };

    Time A;
    bool fully_periodic = false;
    if ( left.constant )
    {
        const Time hi = right.constant ? src.right_edge : src.right_edge + right.period;
        auto runs = pieces( src, src.left_edge, hi, true );
        auto it = std::find_if( runs.begin(), runs.end(), [&]( const Event& e ) { return e.value != left.value; } );
        if ( it == runs.end() )
        {
            if ( !right.constant )
                throw Error( "internal: periodic right tail without a break" );
            return constant( left.value );
        }
        A = it->time;
    }
    else
    {
        // first point where x(t) != x(t - P), searched up to where both sides
        // are governed by the right tail
        const Time& P = left.period;
        const Time bound = src.right_edge + P + ( right.constant ? Time( 0 ) : right.period );
        std::vector<Time> pts{ src.left_edge };
        src.cuts( src.left_edge, bound, pts );
        std::vector<Time> shifted;
        src.cuts( src.left_edge - P, bound - P, shifted );
        for ( const auto& c : shifted )
            pts.push_back( c + P );
        sort_unique( pts );
        std::optional<Time> departure;
        for ( const auto& p : pts )
        {
            if ( p >= bound )
                break;
            if ( src.value( p ) != src.value( p - P ) )
            {
                departure = p;
                break;
            }
        }
        if ( !departure )
        {
            fully_periodic = true;
            A = first_break_from( src, Time( 0 ), P );
        }
        else
        {
            auto runs = pieces( src, *departure - P, *departure, true );
            std::optional<Time> last_break;
            for ( const auto& r : runs )
                if ( is_break( src, r.time ) )
                    last_break = r.time;
            if ( !last_break )
                throw Error( "internal: no break before periodic departure" );
            A = *last_break;
        }
    }

    Time T;
    if ( fully_periodic )
        T = A;
    else if ( right.constant )
    {
        auto runs = pieces( src, A, std::max( A, src.right_edge ), true );
        T = runs.back().time;
    }
    else
    {
        const Time& Q = right.period;
        Time settle = A;
        if ( A < src.right_edge )
        {
            std::vector<Time> pts{ A };
            src.cuts( A, src.right_edge, pts );
            std::vector<Time> shifted;
            src.cuts( A + Q, src.right_edge + Q, shifted );
            for ( const auto& c : shifted )
                pts.push_back( c - Q );
            sort_unique( pts );
            for ( std::size_t i = 0; i < pts.size(); ++i )
            {
                if ( pts[ i ] < A || pts[ i ] >= src.right_edge )
                    continue;
                const Time& next = i + 1 < pts.size() && pts[ i + 1 ] < src.right_edge ? pts[ i + 1 ] : src.right_edge;
                if ( src.value( pts[ i ] ) != src.value( pts[ i ] + Q ) )
                    settle = next;
            }
        }
        T = first_break_from( src, settle, Q );
    }

    auto events = pieces( src, A, T, true );
    Tail left_tail = left.constant ? Tail::constant( left.value )
                                   : Tail::periodic( to_segments( pieces( src, A - left.period, A, false ), A ) );
    Tail right_tail = right.constant
                              ? Tail::hold()
                              : Tail::periodic( to_segments( pieces( src, T, T + right.period, false ), T + right.period ) );
    return SignalAccess::build( src.dim, std::move( left_tail ), std::move( events ), std::move( right_tail ) );
}

} // namespace detail

// ---------------------------------------------------------------------------
// Signal

namespace
{

struct RawSignal
{
    std::size_t dim;
    Tail left;
    std::vector<Event> events;
    Tail right;
};

void check_dim( const BVec& v, std::size_t dim, const char* what )
{
    if ( v.dim() != dim )
        throw DimensionError( std::string( what ) + " has width " + std::to_string( v.dim() ) + ", expected "
                              + std::to_string( dim ) );
}

detail::Source source_of_raw( std::shared_ptr<const RawSignal> raw )
{
    detail::Source s;
    s.dim = raw->dim;
    s.left_edge = raw->events.front().time;
    s.right_edge = raw->events.back().time;
    if ( raw->left.is_periodic() )
        s.left_period = raw->left.period();
    if ( raw->right.is_periodic() )
        s.right_period = raw->right.period();
    auto repr = [raw] { return detail::Repr{ raw->dim, &raw->left, &raw->events, &raw->right }; };
    s.value = [raw, repr]( const Time& t ) { return repr().value_at( t ); };
    s.left_limit = [raw, repr]( const Time& t ) { return repr().left_limit( t ); };
    s.cuts = [raw, repr]( const Time& lo, const Time& hi, std::vector<Time>& out ) { repr().cuts( lo, hi, out ); };
    return s;
}

bool is_fully_periodic( const Signal& x )
{
    return x.left_tail().is_periodic() && x.right_tail().is_periodic() && x.events().size() == 1
           && x.left_tail().pattern() == x.right_tail().pattern();
}

} // namespace

Signal Signal::make( std::size_t dim, Tail left, std::vector<Event> events, Tail right )
{
    if ( dim == 0 )
        throw InvalidArgument( "signal dimension must be positive" );
    if ( events.empty() )
        throw InvalidArgument( "a signal needs at least one event" );
    for ( std::size_t i = 0; i < events.size(); ++i )
    {
        check_dim( events[ i ].value, dim, "event value" );
        if ( i > 0 && !( events[ i - 1 ].time < events[ i ].time ) )
            throw InvalidArgument( "event times must be strictly increasing (" + events[ i - 1 ].time.str() + " then "
                                   + events[ i ].time.str() + ")" );
    }
    if ( left.is_const() )
    {
        if ( !left.value() )
            throw InvalidArgument( "a constant left tail needs its value" );
        check_dim( *left.value(), dim, "left tail value" );
    }
    for ( const auto& s : left.pattern() )
        check_dim( s.value, dim, "left pattern value" );
    for ( const auto& s : right.pattern() )
        check_dim( s.value, dim, "right pattern value" );
    if ( right.is_const() && right.value() )
    {
        check_dim( *right.value(), dim, "right tail value" );
        if ( *right.value() != events.back().value )
            throw InvalidArgument( "constant right tail value differs from the last event value" );
    }
    if ( right.is_periodic() && right.pattern().front().value != events.back().value )
        throw InvalidArgument( "periodic right tail must start with the last event value" );

    auto raw = std::make_shared<const RawSignal>(
            RawSignal{ dim, std::move( left ), std::move( events ), std::move( right ) } );
    return detail::canonicalize( source_of_raw( raw ) );
}

Signal Signal::constant( BVec value )
{
    const std::size_t dim = value.dim();
    if ( dim == 0 )
        throw InvalidArgument( "signal dimension must be positive" );
    return SignalAccess::build( dim, Tail::constant( value ), { Event{ Time( 0 ), value } }, Tail::hold() );
}

BVec Signal::value_at( const Time& t ) const
{
    return detail::Repr{ _dim, &_left, &_events, &_right }.value_at( t );
}

BVec Signal::left_limit( const Time& t ) const
{
    return detail::Repr{ _dim, &_left, &_events, &_right }.left_limit( t );
}

void Signal::change_points( const Time& lo, const Time& hi, std::vector<Time>& out ) const
{
    detail::Repr{ _dim, &_left, &_events, &_right }.cuts( lo, hi, out );
}

std::optional<BVec> Signal::limit_value( Side side ) const
{
    if ( side == Side::initial )
        return _left.is_const() ? _left.value() : std::nullopt;
    if ( _right.is_const() )
        return _events.back().value;
    return std::nullopt;
}

bool Signal::is_constant() const
{
    return _left.is_const() && _right.is_const() && _events.size() == 1 && *_left.value() == _events.front().value;
}

std::strong_ordering operator<=>( const Signal& a, const Signal& b )
{
    if ( auto c = a._dim <=> b._dim; c != 0 )
        return c;
    if ( auto c = a._left <=> b._left; c != 0 )
        return c;
    if ( auto c = std::lexicographical_compare_three_way( a._events.begin(), a._events.end(), b._events.begin(),
                                                          b._events.end() );
         c != 0 )
        return c;
    return a._right <=> b._right;
}

MembershipClass membership_class( const Signal& x )
{
    return { x.in_S(), x.in_S_star() };
}

// Negation maps breaks to breaks and periods to periods, so the canonical
// form is preserved value by value.
Signal complement( const Signal& x )
{
    auto flip_pattern = []( const Tail& t ) {
        std::vector<Segment> p;
        for ( const auto& s : t.pattern() )
            p.push_back( Segment{ s.duration, s.value.complement() } );
        return p;
    };
    Tail left = x.left_tail().is_const() ? Tail::constant( x.left_tail().value()->complement() )
                                         : Tail::periodic( flip_pattern( x.left_tail() ) );
    Tail right = x.right_tail().is_const() ? Tail::hold() : Tail::periodic( flip_pattern( x.right_tail() ) );
    std::vector<Event> events;
    events.reserve( x.events().size() );
    for ( const auto& e : x.events() )
        events.push_back( Event{ e.time, e.value.complement() } );
    return SignalAccess::build( x.dim(), std::move( left ), std::move( events ), std::move( right ) );
}

Signal shift( const Signal& x, const Time& tau )
{
    if ( x.is_constant() || tau == Time( 0 ) )
        return x;
    if ( is_fully_periodic( x ) )
    {
        auto inner = detail::source_of( x );
        detail::Source s = inner;
        s.left_edge = inner.left_edge + tau;
        s.right_edge = inner.right_edge + tau;
        s.value = [inner, tau]( const Time& t ) { return inner.value( t - tau ); };
        s.left_limit = [inner, tau]( const Time& t ) { return inner.left_limit( t - tau ); };
        s.cuts = [inner, tau]( const Time& lo, const Time& hi, std::vector<Time>& out ) {
            std::vector<Time> tmp;
            inner.cuts( lo - tau, hi - tau, tmp );
            for ( auto& t : tmp )
                out.push_back( t + tau );
        };
        return detail::canonicalize( s );
    }
    // translation commutes with the canonical choice of anchor and last event
    std::vector<Event> events;
    events.reserve( x.events().size() );
    for ( const auto& e : x.events() )
        events.push_back( Event{ e.time + tau, e.value } );
    return SignalAccess::build( x.dim(), x.left_tail(), std::move( events ), x.right_tail() );
}

namespace
{

std::optional<Time> joint_period( const std::optional<Time>& a, const std::optional<Time>& b )
{
    if ( !a )
        return b;
    if ( !b )
        return a;
    return common_period( *a, *b );
}

} // namespace

Signal concat( const Signal& x, const Signal& y )
{
    auto sx = detail::source_of( x );
    auto sy = detail::source_of( y );
    detail::Source s;
    s.dim = x.dim() + y.dim();
    s.left_edge = std::min( sx.left_edge, sy.left_edge );
    s.right_edge = std::max( sx.right_edge, sy.right_edge );
    s.left_period = joint_period( sx.left_period, sy.left_period );
    s.right_period = joint_period( sx.right_period, sy.right_period );
    s.value = [sx, sy]( const Time& t ) { return sx.value( t ).concat( sy.value( t ) ); };
    s.left_limit = [sx, sy]( const Time& t ) { return sx.left_limit( t ).concat( sy.left_limit( t ) ); };
    s.cuts = [sx, sy]( const Time& lo, const Time& hi, std::vector<Time>& out ) {
        sx.cuts( lo, hi, out );
        sy.cuts( lo, hi, out );
    };
    return detail::canonicalize( s );
}

Signal project( const Signal& x, std::size_t first, std::size_t count )
{
    if ( count == 0 || first + count > x.dim() )
        throw DimensionError( "projection [" + std::to_string( first ) + ", " + std::to_string( first + count )
                              + ") out of range for dimension " + std::to_string( x.dim() ) );
    if ( first == 0 && count == x.dim() )
        return x;
    auto sx = detail::source_of( x );
    detail::Source s = sx;
    s.dim = count;
    s.value = [sx, first, count]( const Time& t ) { return sx.value( t ).slice( first, count ); };
    s.left_limit = [sx, first, count]( const Time& t ) { return sx.left_limit( t ).slice( first, count ); };
    return detail::canonicalize( s );
}

} // namespace psys

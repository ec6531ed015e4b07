#include "psys/step_function.hpp"

#include "piecewise.hpp"
#include "psys/error.hpp"

#include <algorithm>

namespace psys
{

const char* to_string( Extremum mode )
{
    return mode == Extremum::inf ? "inf" : "sup";
}

StepFunction StepFunction::make( std::size_t dim, Tail left, std::vector<StepSegment> segments, Tail right )
{
    if ( dim == 0 )
        throw InvalidArgument( "step function dimension must be positive" );
    if ( segments.empty() )
        throw InvalidArgument( "a step function needs at least one breakpoint" );
    for ( std::size_t i = 0; i < segments.size(); ++i )
    {
        if ( segments[ i ].point_value.dim() != dim || segments[ i ].interval_value.dim() != dim )
            throw DimensionError( "step function value width differs from " + std::to_string( dim ) );
        if ( i > 0 && !( segments[ i - 1 ].time < segments[ i ].time ) )
            throw InvalidArgument( "step function times must be strictly increasing" );
    }
    if ( left.is_const() && !left.value() )
        throw InvalidArgument( "a constant left tail needs its value" );
    if ( right.is_const() )
        right = Tail::hold();

    StepFunction f;
    f._dim = dim;
    if ( left.is_const() && right.is_const() )
    {
        std::vector<StepSegment> kept;
        BVec previous = *left.value();
        for ( auto& s : segments )
        {
            if ( s.point_value == previous && s.interval_value == previous )
                continue;
            previous = s.interval_value;
            kept.push_back( std::move( s ) );
        }
        if ( kept.empty() )
            kept.push_back( StepSegment{ Time( 0 ), previous, previous } );
        segments = std::move( kept );
    }
    f._left = std::move( left );
    f._segments = std::move( segments );
    f._right = std::move( right );
    return f;
}

StepFunction StepFunction::embed( const Signal& x )
{
    StepFunction f;
    f._dim = x.dim();
    f._left = x.left_tail();
    f._right = x.right_tail();
    for ( const auto& e : x.events() )
        f._segments.push_back( StepSegment{ e.time, e.value, e.value } );
    return f;
}

BVec StepFunction::value_at( const Time& t ) const
{
    const Time& first = _segments.front().time;
    if ( t < first )
        return _left.is_const() ? *_left.value() : _left.pattern_at( ( t - first ).mod( _left.period() ) );
    const Time& last = _segments.back().time;
    if ( _right.is_periodic() && t > last )
        return _right.pattern_at( ( t - last ).mod( _right.period() ) );
    auto it = std::upper_bound( _segments.begin(), _segments.end(), t,
                                []( const Time& v, const StepSegment& s ) { return v < s.time; } );
    --it;
    return it->time == t ? it->point_value : it->interval_value;
}

BVec StepFunction::right_limit( const Time& t ) const
{
    const Time& first = _segments.front().time;
    if ( t < first )
        return _left.is_const() ? *_left.value() : _left.pattern_at( ( t - first ).mod( _left.period() ) );
    const Time& last = _segments.back().time;
    if ( _right.is_periodic() && t >= last )
        return _right.pattern_at( ( t - last ).mod( _right.period() ) );
    auto it = std::upper_bound( _segments.begin(), _segments.end(), t,
                                []( const Time& v, const StepSegment& s ) { return v < s.time; } );
    return std::prev( it )->interval_value;
}

void StepFunction::change_points( const Time& lo, const Time& hi, std::vector<Time>& out ) const
{
    const Time& first = _segments.front().time;
    const Time& last = _segments.back().time;
    if ( _left.is_periodic() )
        detail::periodic_cuts( _left, first, lo, hi, std::nullopt, first, out );
    for ( const auto& s : _segments )
        if ( s.time > lo && s.time < hi )
            out.push_back( s.time );
    if ( _right.is_periodic() )
        detail::periodic_cuts( _right, last, lo, hi, last, std::nullopt, out );
}

StepFunction window_extrema( const Signal& u, const Time& d, Extremum mode )
{
    if ( !d.is_positive() )
        throw InvalidArgument( "window width must be positive, got " + d.str() );
    if ( !u.in_S() || !u.in_S_star() )
        throw Unsupported( "window extrema need constant tails on both sides" );

    // Piece i holds value v_i on [s_i, e_i); piece 0 is the left tail. It
    // meets the window [t - d, t) exactly for t in (s_i, e_i + d).
    const auto& events = u.events();
    const std::size_t dim = u.dim();
    const std::size_t k = events.size();
    std::vector<const BVec*> values{ &*u.left_tail().value() };
    for ( const auto& e : events )
        values.push_back( &e.value );

    std::vector<Time> critical;
    for ( const auto& e : events )
    {
        critical.push_back( e.time );
        critical.push_back( e.time + d );
    }
    detail::sort_unique( critical );

    std::vector<int> ones( dim, 0 );
    std::vector<int> zeros( dim, 0 );
    auto adjust = [&]( std::size_t piece, int delta ) {
        const BVec& v = *values[ piece ];
        for ( std::size_t j = 0; j < dim; ++j )
            ( v[ j ] ? ones : zeros )[ j ] += delta;
    };
    auto current = [&] {
        BVec out = *values[ 0 ];
        for ( std::size_t j = 0; j < dim; ++j )
            out.set( j, mode == Extremum::inf ? zeros[ j ] == 0 : ones[ j ] > 0 );
        return out;
    };

    adjust( 0, +1 );
    std::size_t next_start = 1; // piece i starts at events[i - 1]
    std::size_t next_end = 0;   // piece i ends at events[i] + d (none for the last)
    std::vector<StepSegment> segments;
    for ( const auto& c : critical )
    {
        while ( next_end < k && events[ next_end ].time + d == c )
            adjust( next_end++, -1 );
        BVec point = current();
        while ( next_start <= k && events[ next_start - 1 ].time == c )
            adjust( next_start++, +1 );
        segments.push_back( StepSegment{ c, std::move( point ), current() } );
    }
    return StepFunction::make( dim, u.left_tail(), std::move( segments ), Tail::hold() );
}

namespace
{

std::optional<Time> tail_period( const Tail& a, const Tail& b )
{
    if ( a.is_const() && b.is_const() )
        return std::nullopt;
    if ( a.is_const() )
        return b.period();
    if ( b.is_const() )
        return a.period();
    return common_period( a.period(), b.period() );
}

} // namespace

bool pointwise_leq( const StepFunction& a, const StepFunction& b )
{
    if ( a.dim() != b.dim() )
        throw DimensionError( "cannot compare step functions of widths " + std::to_string( a.dim() ) + " and "
                              + std::to_string( b.dim() ) );
    const auto left_period = tail_period( a.left_tail(), b.left_tail() );
    const auto right_period = tail_period( a.right_tail(), b.right_tail() );
    const Time lo = std::min( a.segments().front().time, b.segments().front().time ) - left_period.value_or( 0 );
    const Time hi = std::max( a.segments().back().time, b.segments().back().time ) + right_period.value_or( 0 );

    std::vector<Time> pts{ lo, hi };
    a.change_points( lo, hi, pts );
    b.change_points( lo, hi, pts );
    detail::sort_unique( pts );

    auto leq_at = [&]( const Time& t ) { return a.value_at( t ).leq( b.value_at( t ) ); };
    if ( !leq_at( lo - Time( 1 ) ) || !leq_at( hi + Time( 1 ) ) )
        return false;
    for ( std::size_t i = 0; i < pts.size(); ++i )
    {
        if ( !leq_at( pts[ i ] ) )
            return false;
        if ( i + 1 < pts.size() && !leq_at( ( pts[ i ] + pts[ i + 1 ] ) / Time( 2 ) ) )
            return false;
    }
    return true;
}

} // namespace psys

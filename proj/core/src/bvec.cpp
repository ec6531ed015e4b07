#include "psys/bvec.hpp"

#include "psys/error.hpp"

namespace psys
{

BVec BVec::parse( std::string_view bits )
{
    if ( bits.empty() )
        throw InvalidArgument( "empty bit vector" );
    std::vector<bool> v;
    v.reserve( bits.size() );
    for ( char c : bits )
    {
        if ( c != '0' && c != '1' )
            throw InvalidArgument( "bit vector '" + std::string( bits ) + "' contains a character other than 0/1" );
        v.push_back( c == '1' );
    }
    return BVec( std::move( v ) );
}

BVec BVec::complement() const
{
    BVec r( *this );
    r._bits.flip();
    return r;
}

BVec BVec::concat( const BVec& tail ) const
{
    BVec r( *this );
    r._bits.insert( r._bits.end(), tail._bits.begin(), tail._bits.end() );
    return r;
}

BVec BVec::slice( std::size_t first, std::size_t count ) const
{
    if ( first + count > _bits.size() )
        throw DimensionError( "slice out of range" );
    return BVec( std::vector<bool>( _bits.begin() + static_cast<long>( first ),
                                    _bits.begin() + static_cast<long>( first + count ) ) );
}

bool BVec::leq( const BVec& o ) const
{
    if ( dim() != o.dim() )
        throw DimensionError( "comparing vectors of dimension " + std::to_string( dim() ) + " and "
                              + std::to_string( o.dim() ) );
    for ( std::size_t i = 0; i < _bits.size(); ++i )
        if ( _bits[ i ] && !o._bits[ i ] )
            return false;
    return true;
}

std::string BVec::str() const
{
    std::string s;
    s.reserve( _bits.size() );
    for ( bool b : _bits )
        s.push_back( b ? '1' : '0' );
    return s;
}

std::strong_ordering operator<=>( const BVec& a, const BVec& b )
{
    if ( auto c = a.dim() <=> b.dim(); c != 0 )
        return c;
    for ( std::size_t i = 0; i < a.dim(); ++i )
        if ( a._bits[ i ] != b._bits[ i ] )
            return a._bits[ i ] ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

} // namespace psys

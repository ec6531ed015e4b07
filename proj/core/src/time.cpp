#include "psys/time.hpp"

#include "psys/error.hpp"

#include <cctype>

namespace psys
{

Time::Time( long num, long den )
{
    if ( den == 0 )
        throw InvalidArgument( "zero denominator" );
    _value = mpq_class( num, den );
    _value.canonicalize();
}

Time::Time( mpq_class value ) : _value{ std::move( value ) }
{
    _value.canonicalize();
}

namespace
{

bool is_integer_literal( std::string_view s, bool allow_sign )
{
    if ( s.empty() )
        return false;
    std::size_t i = 0;
    if ( allow_sign && ( s[ 0 ] == '-' || s[ 0 ] == '+' ) )
        ++i;
    if ( i == s.size() )
        return false;
    for ( ; i < s.size(); ++i )
        if ( !std::isdigit( static_cast<unsigned char>( s[ i ] ) ) )
            return false;
    return true;
}

} // namespace

Time Time::parse( std::string_view text )
{
    const auto slash = text.find( '/' );
    const auto num = text.substr( 0, slash );
    if ( !is_integer_literal( num, true ) )
        throw InvalidArgument( "malformed rational '" + std::string( text ) + "'" );
    std::string num_s( num[ 0 ] == '+' ? num.substr( 1 ) : num );
    if ( slash == std::string_view::npos )
        return Time( mpq_class( mpz_class( num_s ) ) );

    const auto den = text.substr( slash + 1 );
    if ( !is_integer_literal( den, false ) )
        throw InvalidArgument( "malformed rational '" + std::string( text ) + "'" );
    mpz_class d( std::string{ den } );
    if ( d == 0 )
        throw InvalidArgument( "zero denominator in '" + std::string( text ) + "'" );
    return Time( mpq_class( mpz_class( num_s ), d ) );
}

std::string Time::str() const
{
    if ( is_integer() )
        return _value.get_num().get_str();
    return _value.get_num().get_str() + "/" + _value.get_den().get_str();
}

bool Time::is_integer() const
{
    return _value.get_den() == 1;
}

mpz_class Time::floor() const
{
    mpz_class q;
    mpz_fdiv_q( q.get_mpz_t(), _value.get_num_mpz_t(), _value.get_den_mpz_t() );
    return q;
}

Time Time::mod( const Time& period ) const
{
    const Time ratio = *this / period;
    mpq_class k( ratio.floor() );
    Time r( _value - k * period._value );
    return r;
}

Time& Time::operator+=( const Time& o )
{
    _value += o._value;
    return *this;
}

Time& Time::operator-=( const Time& o )
{
    _value -= o._value;
    return *this;
}

Time operator-( const Time& a )
{
    return Time( mpq_class( -a._value ) );
}

Time operator*( const Time& a, const Time& b )
{
    return Time( mpq_class( a._value * b._value ) );
}

Time operator/( const Time& a, const Time& b )
{
    if ( sgn( b._value ) == 0 )
        throw InvalidArgument( "division by zero time" );
    return Time( mpq_class( a._value / b._value ) );
}

Time common_period( const Time& a, const Time& b, long max_ratio )
{
    if ( !a.is_positive() || !b.is_positive() )
        throw InvalidArgument( "periods must be positive" );
    // lcm(p1/q1, p2/q2) = lcm(p1, p2) / gcd(q1, q2) for fractions in lowest terms
    mpz_class num, den;
    mpz_lcm( num.get_mpz_t(), a.value().get_num_mpz_t(), b.value().get_num_mpz_t() );
    mpz_gcd( den.get_mpz_t(), a.value().get_den_mpz_t(), b.value().get_den_mpz_t() );
    Time result( mpq_class( num, den ) );
    const Time& larger = a < b ? b : a;
    if ( result > larger * Time( max_ratio ) )
        throw Unsupported( "periods " + a.str() + " and " + b.str() + " have no common period within "
                           + std::to_string( max_ratio ) + " repetitions" );
    return result;
}

} // namespace psys

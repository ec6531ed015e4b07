#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psys
{

/// Exact rational time coordinate. All arithmetic is exact.
class Time
{
public:
    Time() = default;
    Time( long value ) : _value{ value } {}
    Time( long num, long den );
    explicit Time( mpq_class value );

    /// Parses `p`, `-p` or `p/q` (q > 0). Throws InvalidArgument otherwise.
    static Time parse( std::string_view text );

    [[nodiscard]] const mpq_class& value() const { return _value; }

    /// Canonical text: `p` for integers, `p/q` in lowest terms otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] bool is_positive() const { return sgn( _value ) > 0; }
    [[nodiscard]] bool is_integer() const;

    /// Largest integer not above this value.
    [[nodiscard]] mpz_class floor() const;

    /// `*this - k * period` with k chosen so the result lies in [0, period).
    [[nodiscard]] Time mod( const Time& period ) const;

    Time& operator+=( const Time& o );
    Time& operator-=( const Time& o );

    friend Time operator+( Time a, const Time& b ) { return a += b; }
    friend Time operator-( Time a, const Time& b ) { return a -= b; }
    friend Time operator-( const Time& a );
    friend Time operator*( const Time& a, const Time& b );
    friend Time operator/( const Time& a, const Time& b );

    friend bool operator==( const Time& a, const Time& b ) { return cmp( a._value, b._value ) == 0; }
    friend std::strong_ordering operator<=>( const Time& a, const Time& b )
    {
        const int c = cmp( a._value, b._value );
        return c < 0 ? std::strong_ordering::less
                     : ( c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal );
    }

private:
    mpq_class _value{ 0 };
};

/// Smallest positive common multiple of two positive rationals, or an
/// Unsupported error when it exceeds `max_ratio` times the larger input.
Time common_period( const Time& a, const Time& b, long max_ratio = 4096 );

} // namespace psys

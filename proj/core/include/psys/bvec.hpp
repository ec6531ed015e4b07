#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace psys
{

/// Fixed-width Boolean vector, one element of B^n.
class BVec
{
public:
    BVec() = default;
    explicit BVec( std::size_t dim, bool fill = false ) : _bits( dim, fill ) {}
    explicit BVec( std::vector<bool> bits ) : _bits{ std::move( bits ) } {}

    /// Parses a string over {0,1}; the length is the dimension.
    static BVec parse( std::string_view bits );

    [[nodiscard]] std::size_t dim() const { return _bits.size(); }
    [[nodiscard]] bool operator[]( std::size_t i ) const { return _bits[ i ]; }
    void set( std::size_t i, bool v ) { _bits[ i ] = v; }

    [[nodiscard]] BVec complement() const;
    [[nodiscard]] BVec concat( const BVec& tail ) const;
    [[nodiscard]] BVec slice( std::size_t first, std::size_t count ) const;

    /// Coordinatewise order 0 <= 1.
    [[nodiscard]] bool leq( const BVec& o ) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==( const BVec&, const BVec& ) = default;
    friend std::strong_ordering operator<=>( const BVec& a, const BVec& b );

private:
    std::vector<bool> _bits;
};

} // namespace psys

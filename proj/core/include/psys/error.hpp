#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psys
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Two operands (or an operand and a declared dimension) disagree on width.
class DimensionError : public Error
{
public:
    using Error::Error;
};

/// A constructor or operation was called outside its precondition.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// The request is well formed but outside what the representation supports,
/// e.g. periodic tails where only eventually constant functions are allowed.
class Unsupported : public Error
{
public:
    using Error::Error;
};

/// `induced_system` was asked for a pseudo-system with no signal input that
/// has a signal state.
class NoInducedSystem : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError( const std::string& message, std::size_t line, std::size_t column )
            : Error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ),
              _line{ line }, _column{ column }
    {
    }

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }

private:
    std::size_t _line;
    std::size_t _column;
};

} // namespace psys

#pragma once

// Internal: line tokenizer and block parsers shared by the text formats.

#include "psys/error.hpp"
#include "psys/signal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace psys::detail
{

struct Token
{
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct Line
{
    std::vector<Token> tokens;
    std::size_t number = 0;
    std::size_t end_column = 0;
};

/// Splits on whitespace, drops `#` comments and blank lines. Brackets are
/// tokens of their own.
std::vector<Line> tokenize( std::string_view text );

[[noreturn]] void fail( const Token& at, const std::string& message );
[[noreturn]] void fail_after( const Line& line, const std::string& message );

const Token& expect_token( const Line& line, std::size_t index, const char* what );
void expect_keyword( const Line& line, std::size_t index, const char* keyword );
std::size_t parse_count( const Token& token );
Time parse_time( const Token& token );
BVec parse_bits( const Token& token, std::size_t dim );
bool is_name( std::string_view text );

/// Parses one `signal` block starting at lines[pos]; advances pos past it.
std::pair<std::string, Signal> parse_signal_block( const std::vector<Line>& lines, std::size_t& pos );

} // namespace psys::detail

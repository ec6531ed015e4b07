#pragma once

#include "psys/pseudo_system.hpp"

#include <map>
#include <string>
#include <string_view>

namespace psys
{

/// A text file: named signal blocks and named system blocks. A system block
///
///     system <name> m <m> n <n>
///     input <signal-name> ...
///     state <signal-name> ...
///     map <input-name> -> [<state-name> ...]
///
/// refers to signals by name, wherever they appear in the file.
struct Document
{
    std::map<std::string, Signal> signals;
    std::map<std::string, PseudoSystem> systems;
};

/// Throws ParseError with the line and column of the offending token.
[[nodiscard]] Document parse_document( std::string_view text );

/// Canonical text: signals by name, then systems by name, universes in
/// canonical order and one map line per admissible input. Every universe
/// signal of every system must be named in the document.
[[nodiscard]] std::string format_document( const Document& doc );

/// A document holding f alone, its signals named s0, s1, ... in canonical
/// order.
[[nodiscard]] Document document_of( const std::string& name, const PseudoSystem& f );

[[nodiscard]] std::string system_json( const std::string& name, const PseudoSystem& f );

} // namespace psys

#pragma once

#include <psys/signal_io.hpp>
#include <psys/system_io.hpp>

#include <string>

namespace testing_helpers
{

/// One signal from its text block, e.g. sig("1", "const 0", "0:1 2:0", "const").
inline psys::Signal sig( const std::string& dim, const std::string& left, const std::string& events,
                         const std::string& right )
{
    return psys::parse_signal( "signal x dim " + dim + "\nleft " + left + "\nevents " + events + "\nright " + right
                               + "\n" )
            .second;
}

inline psys::Signal constant( const std::string& bits )
{
    return psys::Signal::constant( psys::BVec::parse( bits ) );
}

inline psys::PseudoSystem system_of( const std::string& text, const std::string& name = "f" )
{
    return psys::parse_document( text ).systems.at( name );
}

} // namespace testing_helpers

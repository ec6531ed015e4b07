#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psys::cli
{

/// Process exit statuses.
enum Exit : int
{
    ok = 0,
    law_failure = 1,
    parse_error = 2,
    dimension_error = 3,
    no_induced_system = 4,
    usage_error = 5,
    io_error = 6,
    domain_error = 7,
};

/// Caps the wall time of `laws`, in seconds.
inline constexpr const char* laws_time_env = "PSYS_LAWS_MAX_SECONDS";

/// Runs one command line (without the program name).
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace psys::cli

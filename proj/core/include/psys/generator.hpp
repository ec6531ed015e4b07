#pragma once

#include "psys/pseudo_system.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace psys
{

/// Seeded source of random signals and pseudo-systems. Instance `index` of
/// seed `seed` is reproducible on its own: the engine is seeded with a
/// splitmix64 mix of both numbers.
///
/// Signals: 1 to `max_events` events, starting at an integer in [-4, 4] and
/// spaced by 1/2, 1, 3/2 or 2; bits uniform. Each tail is constant with
/// probability `const_tail_probability`, otherwise a periodic pattern of 2 or
/// 3 pieces with the same durations (patterns that repeat one value collapse
/// to constants). Pseudo-systems: universes of 1 to `max_universe` distinct
/// signals and a table whose density is drawn from {0, 1/4, 1/2, 3/4, 1}, so
/// null and total systems occur.
class Generator
{
public:
    struct Config
    {
        std::size_t max_events = 4;
        std::size_t max_universe = 6;
        double const_tail_probability = 0.7;
    };

    Generator( std::uint64_t seed, std::uint64_t index );
    Generator( std::uint64_t seed, std::uint64_t index, Config config );

    [[nodiscard]] std::size_t below( std::size_t n );
    [[nodiscard]] bool chance( double p );
    [[nodiscard]] Time step();
    [[nodiscard]] BVec bits( std::size_t dim );

    [[nodiscard]] Signal signal( std::size_t dim );
    /// Constant tails on both sides.
    [[nodiscard]] Signal s_signal( std::size_t dim, std::size_t max_events );
    [[nodiscard]] std::vector<Signal> universe( std::size_t dim );
    /// A universe mixing members of `pool` with fresh signals.
    [[nodiscard]] std::vector<Signal> universe_from( const std::vector<Signal>& pool, std::size_t dim );

    [[nodiscard]] PseudoSystem system( std::size_t m, std::size_t n );
    [[nodiscard]] PseudoSystem system_over( std::size_t m, std::size_t n, std::vector<Signal> inputs,
                                            std::vector<Signal> states );
    /// Random sub-table of g over the same universes.
    [[nodiscard]] PseudoSystem subsystem_of( const PseudoSystem& g );

    [[nodiscard]] const Config& config() const { return _config; }

private:
    std::vector<Segment> pattern( std::size_t dim, const BVec* first );

    Config _config;
    std::mt19937_64 _engine;
};

/// splitmix64 finalizer applied to seed and index.
[[nodiscard]] std::uint64_t instance_seed( std::uint64_t seed, std::uint64_t index );

} // namespace psys

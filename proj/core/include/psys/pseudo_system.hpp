#pragma once

#include "psys/signal.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace psys
{

using SignalSet = std::set<Signal>;

/// Set-valued map from m-dimensional inputs to n-dimensional states, over
/// finite declared universes. Inputs outside the input universe, and inputs
/// without an entry, are mapped to the empty set.
class PseudoSystem
{
public:
    /// `table` pairs index into `inputs` and `states` as given. Universes are
    /// sorted and empty images dropped. Throws DimensionError on width
    /// mismatches and InvalidArgument on duplicates or bad indices.
    static PseudoSystem build( std::size_t m, std::size_t n, std::vector<Signal> inputs, std::vector<Signal> states,
                               const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& table );

    /// Same, from a relation given by value. Keys and members must belong to
    /// the universes.
    static PseudoSystem from_relation( std::size_t m, std::size_t n, const SignalSet& inputs, const SignalSet& states,
                                       const std::map<Signal, SignalSet>& relation );

    static PseudoSystem null( std::size_t m, std::size_t n, std::vector<Signal> inputs, std::vector<Signal> states );
    static PseudoSystem total( std::size_t m, std::size_t n, std::vector<Signal> inputs, std::vector<Signal> states );

    [[nodiscard]] std::size_t m() const { return _m; }
    [[nodiscard]] std::size_t n() const { return _n; }
    [[nodiscard]] const std::vector<Signal>& inputs() const { return _inputs; }
    [[nodiscard]] const std::vector<Signal>& states() const { return _states; }
    /// Sorted state indices of input i.
    [[nodiscard]] const std::vector<std::size_t>& image( std::size_t i ) const { return _table[ i ]; }

    [[nodiscard]] std::optional<std::size_t> input_index( const Signal& u ) const;
    [[nodiscard]] std::optional<std::size_t> state_index( const Signal& x ) const;

    /// f(u), sorted. Throws DimensionError when u is not m-dimensional.
    [[nodiscard]] std::vector<Signal> apply( const Signal& u ) const;
    [[nodiscard]] bool is_null() const;
    [[nodiscard]] std::size_t pair_count() const;

    friend bool operator==( const PseudoSystem&, const PseudoSystem& ) = default;

private:
    PseudoSystem() = default;

    std::size_t _m = 0;
    std::size_t _n = 0;
    std::vector<Signal> _inputs;
    std::vector<Signal> _states;
    std::vector<std::vector<std::size_t>> _table;
};

/// Admissible inputs, sorted.
[[nodiscard]] std::vector<Signal> support( const PseudoSystem& f );

/// f(u) is a subset of g(u) for every u.
[[nodiscard]] bool is_subsystem( const PseudoSystem& f, const PseudoSystem& g );

/// u -> complements of f(complement u), over complemented universes.
[[nodiscard]] PseudoSystem dual( const PseudoSystem& f );

/// x -> {u : x in f(u)}; universes swap.
[[nodiscard]] PseudoSystem inverse( const PseudoSystem& f );

/// (u, u') -> f(u) x f'(u'), pairs rendered by concatenation.
[[nodiscard]] PseudoSystem product( const PseudoSystem& f, const PseudoSystem& g );

/// u -> f(u) x f'(u). Requires equal input widths.
[[nodiscard]] PseudoSystem parallel( const PseudoSystem& f, const PseudoSystem& g );

/// u -> union of h(x) over x in f(u). Requires h.m() == f.n().
[[nodiscard]] PseudoSystem serial( const PseudoSystem& h, const PseudoSystem& f );

/// u -> state universe minus f(u).
[[nodiscard]] PseudoSystem complement( const PseudoSystem& f );

[[nodiscard]] PseudoSystem intersect( const PseudoSystem& f, const PseudoSystem& g );
[[nodiscard]] PseudoSystem unite( const PseudoSystem& f, const PseudoSystem& g );

/// Nonempty support, and every admissible input and every state has an
/// initial value.
[[nodiscard]] bool is_system( const PseudoSystem& f );

/// Largest system contained in f: inputs and states restricted to signals
/// with an initial value. Throws NoInducedSystem when that leaves nothing.
[[nodiscard]] PseudoSystem induced_system( const PseudoSystem& f );

} // namespace psys

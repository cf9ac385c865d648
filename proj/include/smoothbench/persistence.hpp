#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace smoothbench {

/// One merge event of the sublevel-set sweep: the local maximum at
/// `max_index` destroyed the component born at the local minimum at
/// `min_index`.
struct IndexPair {
    std::size_t min_index;
    std::size_t max_index;
};

/// Result of pairing the extrema of a sequence. `pairs` holds the finite
/// (minimum, maximum) merge pairs; the component of the global minimum never
/// dies and is reported separately together with the global maximum.
struct ExtremaPairing {
    std::vector<IndexPair> pairs;
    std::size_t global_min_index = 0;
    std::size_t global_max_index = 0;
};

/// Sublevel-set persistence pairing of a 1-D sequence.
///
/// Vertices are processed in ascending (value, index) order. A vertex with
/// no finished neighbor starts a component, with one finished neighbor it
/// extends that component, and with two it merges them: the merging vertex
/// pairs with the minimum of the younger component (the one whose minimum
/// has the larger (value, index) key).
ExtremaPairing pair_extrema(std::span<const double> values);

/// A (birth, death) multiset describing the peaks of a series: finite pairs
/// from the merge sweep plus the essential pair (global minimum paired with
/// the global maximum). Finite pairs are sorted by (birth, death).
struct PersistenceDiagram {
    struct Pair {
        double birth;
        double death;

        double persistence() const noexcept { return death - birth; }
        bool operator==(const Pair&) const = default;
    };

    std::vector<Pair> pairs; // finite (off-diagonal) pairs
    Pair essential{0.0, 0.0};
};

PersistenceDiagram persistence_diagram(std::span<const double> values);

} // namespace smoothbench

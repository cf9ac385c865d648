#include "smoothbench/persistence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace smoothbench {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Component {
    std::size_t min_index;
    std::size_t root; // union-find parent within the component table
};

// (value, index) lexicographic order; used both for the sweep order and to
// decide which of two merged components is younger.
bool value_index_less(std::span<const double> v, std::size_t a, std::size_t b) {
    if (v[a] != v[b]) return v[a] < v[b];
    return a < b;
}

} // namespace

ExtremaPairing pair_extrema(std::span<const double> values) {
    const std::size_t n = values.size();
    ExtremaPairing out;
    if (n == 0) return out;
    if (n == 1) return {{}, 0, 0};

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return value_index_less(values, a, b); });

    // comp[i] = component id owning vertex i, or kNone if not yet swept.
    std::vector<std::size_t> comp(n, kNone);
    std::vector<std::size_t> comp_min;      // component id -> index of its minimum
    std::vector<std::size_t> comp_parent;   // path-compressed merge forest

    auto find = [&](std::size_t c) {
        while (comp_parent[c] != c) {
            comp_parent[c] = comp_parent[comp_parent[c]];
            c = comp_parent[c];
        }
        return c;
    };

    for (std::size_t i : order) {
        const std::size_t left = (i > 0 && comp[i - 1] != kNone) ? find(comp[i - 1]) : kNone;
        const std::size_t right = (i + 1 < n && comp[i + 1] != kNone) ? find(comp[i + 1]) : kNone;

        if (left == kNone && right == kNone) {
            const std::size_t id = comp_min.size();
            comp_min.push_back(i);
            comp_parent.push_back(id);
            comp[i] = id;
        } else if (left == kNone || right == kNone) {
            comp[i] = (left != kNone) ? left : right;
        } else {
            // Local maximum joining two components: the younger one dies here.
            const bool left_elder = value_index_less(values, comp_min[left], comp_min[right]);
            const std::size_t survivor = left_elder ? left : right;
            const std::size_t dying = left_elder ? right : left;
            out.pairs.push_back({comp_min[dying], i});
            comp_parent[dying] = survivor;
            comp[i] = survivor;
        }
    }

    out.global_min_index = order.front();
    // Global maximum: largest value, first index on ties.
    std::size_t gmax = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (values[i] > values[gmax]) gmax = i;
    }
    out.global_max_index = gmax;
    return out;
}

PersistenceDiagram persistence_diagram(std::span<const double> values) {
    const ExtremaPairing pairing = pair_extrema(values);
    PersistenceDiagram diagram;
    diagram.pairs.reserve(pairing.pairs.size());
    for (const IndexPair& p : pairing.pairs) {
        diagram.pairs.push_back({values[p.min_index], values[p.max_index]});
    }
    std::sort(diagram.pairs.begin(), diagram.pairs.end(), [](const auto& a, const auto& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    diagram.essential = {values[pairing.global_min_index], values[pairing.global_max_index]};
    return diagram;
}

} // namespace smoothbench

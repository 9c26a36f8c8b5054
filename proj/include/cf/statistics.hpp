#pragma once

#include "cf/path.hpp"

#include <string>
#include <vector>

namespace cf {

// A conjugation-compatible rule selecting "special vertices" of a path.
// Stable CLI names: up-start, down-start, flat-start, all-starts, peak,
// valley, double-rise, double-fall, circular-peak, up-start-mod:m:res,
// down-start-mod:m:res, up-or-flat-start, down-or-flat-start,
// up-or-down-start.
struct Selector {
    enum class Kind {
        up_start,
        down_start,
        flat_start,
        all_starts,
        peak,
        valley,
        double_rise,
        double_fall,
        circular_peak,
        up_start_mod,
        down_start_mod,
        up_or_flat_start,
        down_or_flat_start,
        up_or_down_start,
    };

    Kind kind = Kind::up_start;
    long long modulus = 0;  // for *_start_mod
    long long residue = 0;

    static Selector parse(const std::string& name);
    std::string name() const;

    // Peak/valley/double selectors look at adjacent step pairs.
    bool is_pair_kind() const;
};

// Sorted indices of the selected vertices. Pair selectors select the vertex
// between the two steps; *-start selectors the initial vertex of matching
// steps. The last vertex is never selected unless the selector is circular.
std::vector<int> select_vertices(const Path& p, const Selector& sel);

// Same, but pair selectors also match the wraparound adjacency (last step,
// first step) at vertex 0. This is the cyclic-word reading the cycle method
// uses; it coincides with select_vertices for all non-pair selectors.
std::vector<int> select_vertices_cyclic(const Path& p, const Selector& sel);

long long count_on_or_below(const Path& p, const Selector& sel);
long long count_on_or_above(const Path& p, const Selector& sel);
long long count_below(const Path& p, const Selector& sel);
long long count_above(const Path& p, const Selector& sel);

// Number of maximal blocks of consecutive down steps.
long long descending_runs(const Path& p);

// Smallest vertex index attaining the maximum height (L(f) of Sparre
// Andersen; ranges over all vertices 0..m).
int leftmost_highest_index(const Path& p);

// Number of vertices with y > 0, endpoint included (P(f); the companion
// cycle-method counts deliberately exclude the endpoint instead).
long long positive_vertex_count(const Path& p);

long long peak_count(const Path& p);
long long valley_count(const Path& p);
long long double_rise_count(const Path& p);
long long double_fall_count(const Path& p);
long long circular_peak_count(const Path& p);

}  // namespace cf

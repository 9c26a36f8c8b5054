#pragma once

#include "cf/path.hpp"
#include "cf/statistics.hpp"

#include <span>
#include <vector>

namespace cf {

// n*S_i = n*(a_1+...+a_i) - i for i = 0..n-1, for a sequence with sum 1.
// Scaling by n keeps everything integral; the n values are pairwise distinct.
std::vector<long long> scaled_partial_sums(std::span<const long long> a);

// Number of i in 0..n-1 with a_1+...+a_i <= 0 (i = 0 always counts).
int nonpositive_prefix_count(std::span<const long long> a);

// The unique rotation index i such that sigma^i(a) has exactly k nonpositive
// prefix sums. By the monotone key lemma this is the index of the k-th
// smallest scaled partial sum.
int unique_conjugate_with(std::span<const long long> a, int k);

struct OrbitEntry {
    int rotation;      // t_j: conjugate sigma^{t_j}(p) starts at a special vertex
    long long x_value; // special vertices of that conjugate on or below the axis
};

// For a path ending at height 1, the X values over the conjugates that start
// with a special vertex; their multiset is {1..k} with k special vertices.
// Pair selectors are evaluated on the cyclic word.
std::vector<OrbitEntry> special_vertex_orbit(const Path& p, const Selector& sel);

}  // namespace cf

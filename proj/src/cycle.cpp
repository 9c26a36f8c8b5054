#include "cf/cycle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cf {

namespace {
void require_sum_one(std::span<const long long> a) {
    long long s = std::accumulate(a.begin(), a.end(), 0LL);
    if (s != 1)
        throw std::invalid_argument("cycle method needs a sequence with sum 1, got sum " +
                                    std::to_string(s));
}
}  // namespace

std::vector<long long> scaled_partial_sums(std::span<const long long> a) {
    require_sum_one(a);
    const long long n = static_cast<long long>(a.size());
    std::vector<long long> out;
    out.reserve(a.size());
    long long prefix = 0;
    for (long long i = 0; i < n; ++i) {
        out.push_back(n * prefix - i);
        prefix += a[static_cast<std::size_t>(i)];
    }
    return out;
}

int nonpositive_prefix_count(std::span<const long long> a) {
    require_sum_one(a);
    int count = 0;
    long long prefix = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (prefix <= 0) ++count;
        prefix += a[i];
    }
    return count;
}

int unique_conjugate_with(std::span<const long long> a, int k) {
    const int n = static_cast<int>(a.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("unique_conjugate_with: k must be in 1.." + std::to_string(n));
    auto s = scaled_partial_sums(a);
    std::vector<int> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return s[static_cast<std::size_t>(i)] < s[static_cast<std::size_t>(j)]; });
    return idx[static_cast<std::size_t>(k - 1)];
}

std::vector<OrbitEntry> special_vertex_orbit(const Path& p, const Selector& sel) {
    if (p.end_height() != 1)
        throw std::invalid_argument(
            "special_vertex_orbit: path must end at height 1 (got " +
            std::to_string(p.end_height()) +
            "); group steps into blocks first (bijections::block_group) for r+1-step families");
    auto special = select_vertices_cyclic(p, sel);
    std::vector<OrbitEntry> out;
    out.reserve(special.size());
    for (int t : special) {
        Path q = conjugate(p, t);
        long long x = 0;
        for (int i : select_vertices_cyclic(q, sel))
            if (q.height(i) <= 0) ++x;
        out.push_back(OrbitEntry{t, x});
    }
    return out;
}

}  // namespace cf

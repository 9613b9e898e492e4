#include "hyperarr/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hyperarr/errors.hpp"
#include "hyperarr/kernels.hpp"

namespace hyperarr {

namespace {

void check_indices(const Arrangement& a, const std::vector<std::size_t>& subset) {
    for (auto j : subset)
        if (j >= a.size()) throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(j));
}

std::uint64_t to_mask(const std::vector<std::size_t>& subset) {
    std::uint64_t m = 0;
    for (auto j : subset) m |= std::uint64_t{1} << j;
    return m;
}

std::vector<std::size_t> from_mask(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; mask; ++j, mask >>= 1)
        if (mask & 1u) out.push_back(j);
    return out;
}

}  // namespace

SubsetRanks subset_ranks(const Arrangement& a, std::size_t max_n, Exec exec) {
    const std::size_t n = a.size();
    if (n > std::min(max_n, kMaxSubsetTableN))
        throw Error(ErrorKind::ResourceLimit, "subset rank table needs n <= " +
                                                  std::to_string(std::min(max_n, kMaxSubsetTableN)) +
                                                  ", got " + std::to_string(n));
    return SubsetRanks(n, exec == Exec::Parallel ? kernels::subset_ranks_parallel(a)
                                                 : kernels::subset_ranks_serial(a));
}

bool CircuitGraph::has_edge(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<std::size_t>> CircuitGraph::components() const {
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges) {
        const auto ru = find(u), rv = find(v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> slot(vertices, vertices);
    for (std::size_t v = 0; v < vertices; ++v) {
        const auto r = find(v);
        if (slot[r] == vertices) {
            slot[r] = comps.size();
            comps.emplace_back();
        }
        comps[slot[r]].push_back(v);
    }
    return comps;
}

bool is_dependent(const Arrangement& a, const std::vector<std::size_t>& subset) {
    check_indices(a, subset);
    return rank(a, subset) < subset.size();
}

bool is_circuit(const Arrangement& a, const std::vector<std::size_t>& subset) {
    check_indices(a, subset);
    if (subset.empty() || !is_dependent(a, subset)) return false;
    for (std::size_t skip = 0; skip < subset.size(); ++skip) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < subset.size(); ++i)
            if (i != skip) rest.push_back(subset[i]);
        if (is_dependent(a, rest)) return false;
    }
    return true;
}

std::vector<Circuit> circuits(const Arrangement& a, const MatroidLimits& limits) {
    const std::size_t n = a.size();
    if (n > limits.max_circuit_n)
        throw Error(ErrorKind::ResourceLimit, "circuit search needs n <= " + std::to_string(limits.max_circuit_n));
    const auto ranks = subset_ranks(a, limits.max_circuit_n);

    std::vector<std::uint64_t> masks(std::size_t{1} << n);
    std::iota(masks.begin(), masks.end(), std::uint64_t{0});
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
        return std::popcount(x) < std::popcount(y);
    });

    std::vector<std::uint64_t> found;
    for (auto mask : masks) {
        if (mask == 0) continue;
        if (std::any_of(found.begin(), found.end(), [&](std::uint64_t c) { return (mask & c) == c; })) continue;
        // A dependent set containing no smaller circuit is minimally dependent.
        if (ranks(mask) < static_cast<std::size_t>(std::popcount(mask))) found.push_back(mask);
    }

    std::vector<Circuit> out;
    for (auto c : found) out.push_back(Circuit{from_mask(c)});
    std::sort(out.begin(), out.end(), [](const Circuit& x, const Circuit& y) {
        if (x.indices.size() != y.indices.size()) return x.indices.size() < y.indices.size();
        return x.indices < y.indices;
    });
    return out;
}

CircuitGraph circuit_graph(std::size_t n, const std::vector<Circuit>& cs) {
    CircuitGraph g;
    g.vertices = n;
    for (const auto& c : cs)
        for (std::size_t p = 0; p < c.indices.size(); ++p)
            for (std::size_t q = p + 1; q < c.indices.size(); ++q) g.edges.emplace_back(c.indices[p], c.indices[q]);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

CircuitGraph circuit_graph(const Arrangement& a, const MatroidLimits& limits) {
    return circuit_graph(a.size(), circuits(a, limits));
}

Decomposition decompose(const Arrangement& a, const MatroidLimits& limits) {
    Decomposition d;
    d.blocks = circuit_graph(a, limits).components();
    std::size_t total = 0;
    std::uint64_t seen = 0;
    for (const auto& b : d.blocks) {
        d.block_ranks.push_back(rank(a, b));
        total += d.block_ranks.back();
        // Any union of blocks must be rank-additive as well.
        seen |= to_mask(b);
        std::size_t partial = 0;
        for (auto r : d.block_ranks) partial += r;
        if (rank(a, from_mask(seen)) != partial)
            throw Error(ErrorKind::InternalInconsistency, "blocks of the circuit graph are not rank-additive");
    }
    if (total != rank(a))
        throw Error(ErrorKind::InternalInconsistency, "block ranks do not sum to the rank of the arrangement");
    return d;
}

bool is_decomposable_bruteforce(const Arrangement& a, const MatroidLimits& limits) {
    const std::size_t n = a.size();
    if (n > limits.max_bruteforce_n)
        throw Error(ErrorKind::ResourceLimit,
                    "bipartition search needs n <= " + std::to_string(limits.max_bruteforce_n));
    if (n < 2) return false;
    const auto ranks = subset_ranks(a, limits.max_bruteforce_n);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const std::size_t r = ranks.full();
    // Fix hyperplane n-1 on the complement side so each bipartition is seen once.
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s)
        if (ranks(s) + ranks(all ^ s) == r) return true;
    return false;
}

}  // namespace hyperarr

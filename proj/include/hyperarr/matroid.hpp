#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/execution.hpp"

namespace hyperarr {

/// Ranks of all 2^n subsets, indexed by bitmask (bit j <-> hyperplane j).
class SubsetRanks {
public:
    SubsetRanks(std::size_t n, std::vector<std::uint8_t> ranks) : n_(n), ranks_(std::move(ranks)) {}

    std::size_t size() const noexcept { return n_; }
    std::size_t operator()(std::uint64_t mask) const { return ranks_.at(mask); }
    std::size_t full() const { return ranks_.back(); }
    const std::vector<std::uint8_t>& table() const noexcept { return ranks_; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> ranks_;
};

inline constexpr std::size_t kMaxSubsetTableN = 24;

/// Throws Error(ResourceLimit) when n > max_n (at most kMaxSubsetTableN).
SubsetRanks subset_ranks(const Arrangement& a, std::size_t max_n = 20, Exec exec = Exec::Parallel);

/// A minimally dependent set of hyperplanes, indices sorted ascending.
struct Circuit {
    std::vector<std::size_t> indices;
    friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

/// Vertices 0..n-1; {a, b} is an edge iff some circuit contains both.
struct CircuitGraph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // a < b, sorted

    bool has_edge(std::size_t a, std::size_t b) const;
    /// Connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const;
};

struct Decomposition {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_ranks;

    std::size_t size() const noexcept { return blocks.size(); }
    bool decomposable() const noexcept { return blocks.size() > 1; }
};

struct MatroidLimits {
    std::size_t max_circuit_n = 16;
    std::size_t max_bruteforce_n = 20;
};

/// rank(subset) < |subset|. Throws Error(IndexOutOfRange).
bool is_dependent(const Arrangement& a, const std::vector<std::size_t>& subset);

/// Dependent with every proper subset independent.
bool is_circuit(const Arrangement& a, const std::vector<std::size_t>& subset);

/// All circuits by size-ordered subset enumeration, skipping supersets of circuits
/// already found; sorted by (size, indices).
std::vector<Circuit> circuits(const Arrangement& a, const MatroidLimits& limits = {});

CircuitGraph circuit_graph(std::size_t n, const std::vector<Circuit>& circuits);
CircuitGraph circuit_graph(const Arrangement& a, const MatroidLimits& limits = {});

/// Connected components of the circuit graph, in order of smallest member.
/// Throws Error(InternalInconsistency) if block ranks do not add up to rank(A).
Decomposition decompose(const Arrangement& a, const MatroidLimits& limits = {});

/// True iff some bipartition A = A1 u A2 has r(A) = r(A1) + r(A2).
bool is_decomposable_bruteforce(const Arrangement& a, const MatroidLimits& limits = {});

}  // namespace hyperarr

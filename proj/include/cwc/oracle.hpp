#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "cwc/core.hpp"

namespace cwc {

struct OracleResult {
    int n = 0;
    int q = 0;
    int exact_size = 0;              // best size found
    ConstantWeightCode witness;      // a code attaining exact_size
    bool proved_optimal = false;     // search space exhausted at exact_size + 1
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

/// Exact maximum size of an (n,4,3)_q code by branch-and-bound maximum-clique
/// search over the compatibility graph (vertices: all weight-3 words; edges:
/// pairs at distance >= 4). Deterministic: vertices are ordered by
/// (support rank, value tuple) and the search is single-threaded. On timeout
/// the best code found so far is returned with proved_optimal = false.
///
/// symmetry_reduction fixes the first chosen codeword to (1,1,1,0,...,0),
/// which is sound because coordinate permutations and per-coordinate symbol
/// relabelings act transitively on weight-3 words.
OracleResult exact_max_size(int n, int q, std::chrono::duration<double> time_limit,
                            bool symmetry_reduction = true);

/// True/false when the search proves |c| is (not) the maximum; nullopt when
/// the search timed out and the answer is indeterminate.
std::optional<bool> certify_optimal(const ConstantWeightCode& c,
                                    std::chrono::duration<double> time_limit);

}  // namespace cwc

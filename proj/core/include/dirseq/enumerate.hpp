#pragma once

#include <cstddef>
#include <vector>

#include "dirseq/signature.hpp"

namespace dirseq {

struct EnumerationResult {
    std::vector<HalfPeriod> classes;  // representatives under the full group
    std::size_t raw_count = 0;        // sequences found before deduplication
    std::size_t shift_only_classes = 0;  // dedup restricted to shift + relabel
    std::size_t nodes = 0;            // search tree nodes visited
};

// Exhaustive depth-first search over all even-near-critical centrally
// symmetric allowable sequences in noncentral general position with
// signature d, from pi_0 = (1..n, -n..-1).  Moves are nonempty symmetric
// sets of disjoint switches; the only blocks longer than a transposition are
// the centered crossing blocks, forced to appear in the order of d starting
// with the first move.  Branches prune on pairs switching twice and on move
// budgets that cannot be met.  Throws BudgetExceeded past node_limit.
EnumerationResult enumerate_dc(const CentralSignature& d,
                               std::size_t node_limit = 10'000'000);

}  // namespace dirseq

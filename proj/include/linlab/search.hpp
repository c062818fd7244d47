#pragma once

#include <cstdint>
#include <vector>

#include "linlab/rational.hpp"
#include "linlab/tree.hpp"

namespace linlab {

// Exhaustive minimum of quadratic acceptance over every perfect-completeness
// test tree of uniform depth: verdicts are never enumerated, since perfect
// completeness pins accept on every leaf reachable by a linear function and
// the adversary rejects everywhere else, leaving min over label assignments
// of the sum of 2^{-q(v)} over those leaves.
struct SearchResult {
    std::size_t n = 0;
    std::size_t depth = 0;
    std::uint64_t trees_examined = 0;  // label assignments covered
    Rational min_quad_accept;
    TestTree witness;
    double bound = 0;  // 2^{-psi(depth)}
    bool holds = false;

    SearchResult() : witness(TestTree::single_leaf(0, true)) {}
};

struct SearchOptions {
    // Restrict the root label to {0, e1}; invertible linear maps of the cube
    // permute both function families uniformly, so one nonzero root
    // represents them all.
    bool symmetry = false;
    unsigned threads = 1;
    std::size_t max_n = 3;
    std::size_t max_depth = 4;
};

SearchResult search_optimal(std::size_t n, std::size_t depth, const SearchOptions& opt = {});

struct FrontierRow {
    std::size_t depth;
    Rational min_quad_accept;
    double bound;
};

std::vector<FrontierRow> frontier(std::size_t n, std::size_t max_depth,
                                  const SearchOptions& opt = {});

}  // namespace linlab

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linlab/boolfun.hpp"
#include "linlab/f2.hpp"
#include "linlab/rational.hpp"
#include "linlab/tree.hpp"

namespace linlab {

enum class DependenceMode { linear, quadratic };

// Per-leaf classification. l and q are the linear rank of the path labels
// and the rank of their moment vectors. A leaf is in L iff at every
// linearly dependent inner vertex the path takes the edge matching the
// forced value; membership in Q is the same condition for moment vectors.
// Reachable leaves get exact reach probabilities 2^{-l} / 2^{-q}.
struct LeafRecord {
    std::vector<F2Vector> path_labels;
    std::vector<int> path_edges;
    std::size_t depth = 0;      // d(v)
    int verdict = 0;            // c(v): 1 accept, 0 reject
    std::size_t lin_rank = 0;   // l(v)
    std::size_t quad_rank = 0;  // q(v)
    bool in_l = false;
    bool in_q = false;
    Rational p_lin;   // 2^{-l(v)} when in_l, else 0
    Rational p_quad;  // 2^{-q(v)} when in_q, else 0
};

struct TreeAnalysis {
    std::vector<LeafRecord> leaves;  // depth-first, edge 0 before edge 1
    Rational sum_l;                  // sum of p_lin over L; 1 for every tree
    Rational sum_q;                  // sum of p_quad over Q; 1 for every tree
    Rational lin_accept;             // sum of c(v) p_lin
    Rational quad_accept;            // sum of c(v) p_quad
    Rational avg_depth_lin;          // sum of d(v) p_lin
};

// One depth-first walk carrying both dependence trackers.
TreeAnalysis analyze_tree(const TestTree& tree);

// Rank of the moment vectors of xs: the quadratic dimension of the set.
std::size_t quadratic_rank(const std::vector<F2Vector>& xs);

// Value of f(next_label) that every family member consistent with the prior
// transcript must produce, or nullopt when the label is independent of the
// prior ones.
std::optional<int> forced_value(const std::vector<std::pair<F2Vector, int>>& prior,
                                const F2Vector& next_label, DependenceMode mode);

}  // namespace linlab

// Brute-force reference implementations used only by tests. Everything here
// recomputes results from first principles (permutation determinants, direct
// transforms, whole-family enumeration) so that library paths are checked
// against independent arithmetic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "linlab/f2.hpp"
#include "linlab/tree.hpp"

namespace oracles {

// Parity of <a, x> on bit masks.
inline int eval_linear_bits(std::uint64_t a, std::uint64_t x) {
    return __builtin_popcountll(a & x) & 1;
}

// Degree-2 evaluation by explicit nested loops; pair bits are ordered
// (0,1),(0,2),...,(0,n-1),(1,2),...
inline int eval_quad_bits(std::size_t n, std::uint64_t b, std::uint64_t pairs,
                          std::uint64_t x) {
    int acc = __builtin_popcountll(b & x) & 1;
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++p)
            if (((pairs >> p) & 1) && ((x >> i) & 1) && ((x >> j) & 1)) acc ^= 1;
    return acc;
}

// Splits a combined coefficient word into (b, pairs).
inline std::uint64_t quad_b_part(std::size_t n, std::uint64_t coeffs) {
    return coeffs & ((std::uint64_t(1) << n) - 1);
}
inline std::uint64_t quad_pair_part(std::size_t n, std::uint64_t coeffs) {
    return coeffs >> n;
}

inline std::size_t quad_coeff_bits(std::size_t n) { return n + n * (n - 1) / 2; }

// W[a] = sum_x (-1)^{f(x) + <a,x>} by direct double summation.
inline std::vector<std::int64_t> walsh_direct(const std::vector<int>& table) {
    std::size_t size = table.size();
    std::vector<std::int64_t> w(size, 0);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t x = 0; x < size; ++x)
            w[a] += ((table[x] + (__builtin_popcountll(a & x) & 1)) % 2) ? -1 : 1;
    return w;
}

// Determinant over F2 of a k x k submatrix by permutation expansion.
inline int det_f2(const std::vector<std::vector<int>>& m) {
    std::size_t k = m.size();
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    int det = 0;
    do {
        int prod = 1;
        for (std::size_t i = 0; i < k; ++i) prod &= m[i][perm[i]];
        det ^= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Largest k admitting an invertible k x k submatrix; rows given as bit
// masks of length ncols. Exponential; meant for tiny matrices.
inline std::size_t brute_rank(const std::vector<std::uint64_t>& rows, std::size_t ncols) {
    std::size_t nrows = rows.size();
    for (std::size_t k = std::min(nrows, ncols); k >= 1; --k) {
        for (std::uint64_t rsel = 0; rsel < (std::uint64_t(1) << nrows); ++rsel) {
            if (std::size_t(__builtin_popcountll(rsel)) != k) continue;
            for (std::uint64_t csel = 0; csel < (std::uint64_t(1) << ncols); ++csel) {
                if (std::size_t(__builtin_popcountll(csel)) != k) continue;
                std::vector<std::vector<int>> sub;
                for (std::size_t r = 0; r < nrows; ++r) {
                    if (!((rsel >> r) & 1)) continue;
                    std::vector<int> row;
                    for (std::size_t c = 0; c < ncols; ++c)
                        if ((csel >> c) & 1) row.push_back((rows[r] >> c) & 1);
                    sub.push_back(std::move(row));
                }
                if (det_f2(sub)) return k;
            }
        }
    }
    return 0;
}

// Walks a tree with an integer-mask oracle; returns the leaf in depth-first
// numbering plus the verdict.
struct ManualRun {
    std::size_t leaf_index;
    bool accept;
    std::size_t depth;
};

template <class Fn>
ManualRun run_manual(const linlab::TestTree& tree, Fn&& f) {
    struct Indexer {
        std::size_t next = 0;
        std::map<const linlab::TreeNode*, std::size_t> index;
        void walk(const linlab::TreeNode& node) {
            if (node.is_leaf()) {
                index[&node] = next++;
                return;
            }
            walk(*node.child[0]);
            walk(*node.child[1]);
        }
    } indexer;
    indexer.walk(tree.root());

    const linlab::TreeNode* node = &tree.root();
    std::size_t depth = 0;
    while (!node->is_leaf()) {
        int r = f(node->label.to_index()) ? 1 : 0;
        node = node->child[r].get();
        ++depth;
    }
    return {indexer.index[node], node->accept, depth};
}

// Reach counts per depth-first leaf over the full linear family.
inline std::vector<std::uint64_t> linear_reach_counts(const linlab::TestTree& tree) {
    std::size_t n = tree.n();
    std::vector<std::uint64_t> counts(tree.leaf_count(), 0);
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a)
        ++counts[run_manual(tree, [a](std::uint64_t x) { return eval_linear_bits(a, x); })
                     .leaf_index];
    return counts;
}

// Same over the full quadratic family.
inline std::vector<std::uint64_t> quadratic_reach_counts(const linlab::TestTree& tree) {
    std::size_t n = tree.n();
    std::size_t bits = quad_coeff_bits(n);
    std::vector<std::uint64_t> counts(tree.leaf_count(), 0);
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << bits); ++c) {
        std::uint64_t b = quad_b_part(n, c), pairs = quad_pair_part(n, c);
        ++counts[run_manual(tree, [n, b, pairs](std::uint64_t x) {
                     return eval_quad_bits(n, b, pairs, x);
                 }).leaf_index];
    }
    return counts;
}

// Acceptance counts over a family: how many members end at an accept leaf.
inline std::uint64_t linear_accept_count(const linlab::TestTree& tree) {
    std::size_t n = tree.n();
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a)
        if (run_manual(tree, [a](std::uint64_t x) { return eval_linear_bits(a, x); }).accept)
            ++count;
    return count;
}

inline std::uint64_t quadratic_accept_count(const linlab::TestTree& tree) {
    std::size_t n = tree.n();
    std::size_t bits = quad_coeff_bits(n);
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << bits); ++c) {
        std::uint64_t b = quad_b_part(n, c), pairs = quad_pair_part(n, c);
        if (run_manual(tree, [n, b, pairs](std::uint64_t x) {
                return eval_quad_bits(n, b, pairs, x);
            }).accept)
            ++count;
    }
    return count;
}

// Full binary tree of uniform depth. Label of the node at level l reached
// by response path p (first response = bit 0 of p) sits at index 2^l - 1 + p;
// leaf verdicts are indexed by the full response path.
inline std::unique_ptr<linlab::TreeNode> heap_node(std::size_t n, std::size_t depth,
                                                   const std::vector<std::uint64_t>& labels,
                                                   const std::vector<bool>& verdicts,
                                                   std::size_t level, std::uint64_t path) {
    if (level == depth) return linlab::make_leaf(verdicts[path]);
    std::uint64_t label = labels[(std::uint64_t(1) << level) - 1 + path];
    auto c0 = heap_node(n, depth, labels, verdicts, level + 1, path);
    auto c1 = heap_node(n, depth, labels, verdicts, level + 1, path | (std::uint64_t(1) << level));
    return linlab::make_inner(linlab::F2Vector::from_index(n, label), std::move(c0),
                              std::move(c1));
}

inline linlab::TestTree tree_from_heap(std::size_t n, std::size_t depth,
                                       const std::vector<std::uint64_t>& labels,
                                       const std::vector<bool>& verdicts) {
    return linlab::TestTree(n, heap_node(n, depth, labels, verdicts, 0, 0));
}

// Leaf (= response path) an integer-mask oracle reaches under a heap label
// assignment.
template <class Fn>
std::uint64_t heap_leaf_of(std::size_t depth, const std::vector<std::uint64_t>& labels,
                           Fn&& f) {
    std::uint64_t path = 0;
    for (std::size_t level = 0; level < depth; ++level) {
        std::uint64_t label = labels[(std::uint64_t(1) << level) - 1 + path];
        if (f(label)) path |= std::uint64_t(1) << level;
    }
    return path;
}

// Minimum quadratic acceptance over all verdict assignments that keep
// perfect completeness (every linear function must reach an accept leaf),
// for one fixed label assignment. Exhaustive over verdicts and families.
inline linlab::Rational brute_min_quad_acceptance(std::size_t n, std::size_t depth,
                                                  const std::vector<std::uint64_t>& labels) {
    std::size_t leaves = std::size_t(1) << depth;
    std::uint64_t lin_mask = 0;  // leaves reached by at least one linear fn
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a)
        lin_mask |= std::uint64_t(1) << heap_leaf_of(depth, labels, [a](std::uint64_t x) {
            return eval_linear_bits(a, x);
        });

    std::size_t bits = quad_coeff_bits(n);
    std::vector<std::uint64_t> quad_per_leaf(leaves, 0);
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << bits); ++c) {
        std::uint64_t b = quad_b_part(n, c), pairs = quad_pair_part(n, c);
        ++quad_per_leaf[heap_leaf_of(depth, labels, [n, b, pairs](std::uint64_t x) {
            return eval_quad_bits(n, b, pairs, x);
        })];
    }

    // Perfect completeness pins accept on exactly the linear-reachable
    // leaves; anything else only raises acceptance.
    std::uint64_t best = ~std::uint64_t(0);
    for (std::uint64_t verdicts = 0; verdicts < (std::uint64_t(1) << leaves); ++verdicts) {
        if ((verdicts & lin_mask) != lin_mask) continue;
        std::uint64_t accepted = 0;
        for (std::size_t leaf = 0; leaf < leaves; ++leaf)
            if ((verdicts >> leaf) & 1) accepted += quad_per_leaf[leaf];
        best = std::min(best, accepted);
    }
    return linlab::Rational(static_cast<std::int64_t>(best),
                            std::int64_t(1) << bits);
}

}  // namespace oracles

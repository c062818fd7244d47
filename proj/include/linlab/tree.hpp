#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "linlab/boolfun.hpp"
#include "linlab/f2.hpp"
#include "linlab/rational.hpp"

namespace linlab {

// Inner nodes carry a query label and exactly two children; leaves carry a
// verdict. Trees are immutable once wrapped in a TestTree.
struct TreeNode {
    F2Vector label;  // inner nodes only
    bool accept = false;
    std::unique_ptr<TreeNode> child[2];

    bool is_leaf() const { return child[0] == nullptr; }
};

std::unique_ptr<TreeNode> make_leaf(bool accept);
std::unique_ptr<TreeNode> make_inner(F2Vector label, std::unique_ptr<TreeNode> child0,
                                     std::unique_ptr<TreeNode> child1);
std::unique_ptr<TreeNode> clone_node(const TreeNode& node);

class TestTree {
public:
    // Validates that every inner node has both children and every label has
    // dimension n.
    TestTree(std::size_t n, std::unique_ptr<TreeNode> root);

    static TestTree single_leaf(std::size_t n, bool accept);

    std::size_t n() const { return n_; }
    const TreeNode& root() const { return *root_; }

    std::size_t depth() const;       // max leaf depth
    std::size_t leaf_count() const;

    TestTree clone() const { return TestTree(n_, clone_node(*root_)); }

private:
    std::size_t n_;
    std::unique_ptr<TreeNode> root_;
};

struct RunOutcome {
    bool accept;
    std::size_t depth;
    std::vector<std::pair<F2Vector, int>> transcript;  // (label, response) per query
};

// Queries f at the current label, follows the edge named by the response,
// stops at a leaf.
template <class Fn>
RunOutcome run_tree(const TestTree& tree, Fn&& f) {
    RunOutcome out{false, 0, {}};
    const TreeNode* node = &tree.root();
    while (!node->is_leaf()) {
        int response = f(node->label) ? 1 : 0;
        out.transcript.emplace_back(node->label, response);
        node = node->child[response].get();
    }
    out.accept = node->accept;
    out.depth = out.transcript.size();
    return out;
}

// Non-adaptive tests compile to chain trees: one fixed query schedule, the
// same label on both children at every level, and a leaf predicate on the
// full response word.
TestTree chain_tree(std::size_t n, const std::vector<F2Vector>& queries,
                    const std::function<bool(const std::vector<int>&)>& accept);

// Queries x, y, x+y; accepts iff r3 = r1 + r2.
TestTree blr_instance(const F2Vector& x, const F2Vector& y);

// Queries x_1..x_k then x_i + x_j (i < j, lexicographic); accepts iff every
// pair check r_i + r_j + r_ij = 0 holds. Depth is k + C(k,2).
TestTree complete_graph_instance(const std::vector<F2Vector>& xs);

TestTree sample_blr_instance(std::size_t n, Rng& rng);
TestTree sample_kgraph_instance(std::size_t k, std::size_t n, Rng& rng);

// Random shape, labels, and verdicts; leaves become more likely with depth
// and the tree never exceeds max_depth.
TestTree sample_random_tree(std::size_t n, std::size_t max_depth, Rng& rng);

// An adaptive test: a distribution over test trees. Either an explicit
// weighted list (weights positive, exactly summing to 1) or a seeded
// instance generator.
class RandomizedTest {
public:
    struct Weighted {
        Rational weight;
        TestTree tree;
    };

    static RandomizedTest mixture(std::vector<Weighted> instances);
    static RandomizedTest single(TestTree tree);
    static RandomizedTest generator(std::size_t n, std::function<TestTree(Rng&)> gen);

    static RandomizedTest blr(std::size_t n);
    static RandomizedTest kgraph(std::size_t k, std::size_t n);

    bool is_explicit() const { return gen_ == nullptr; }
    std::size_t n() const { return n_; }

    const std::vector<Weighted>& instances() const;
    TestTree draw(Rng& rng) const;

private:
    RandomizedTest() = default;

    std::size_t n_ = 0;
    std::vector<Weighted> instances_;
    std::function<TestTree(Rng&)> gen_;
};

enum class Family { linear, quadratic };

// Weighted exact acceptance over a whole function family, from the leaf
// rank analysis. Explicit-weight tests only; generator-form tests must use
// the Monte Carlo estimator.
Rational acceptance_exact(const RandomizedTest& test, Family family);

struct MonteCarloEstimate {
    std::uint64_t trials;
    std::uint64_t accepts;
    double estimate;
    double std_error;  // binomial
};

MonteCarloEstimate acceptance_monte_carlo(const RandomizedTest& test, Family family,
                                          std::uint64_t trials, std::uint64_t seed);

// Acceptance on one fixed function.
MonteCarloEstimate acceptance_monte_carlo(const RandomizedTest& test,
                                          const std::function<int(const F2Vector&)>& fn,
                                          std::uint64_t trials, std::uint64_t seed);

}  // namespace linlab

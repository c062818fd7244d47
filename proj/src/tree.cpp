#include "linlab/tree.hpp"

#include <cmath>
#include <stdexcept>

#include "linlab/analysis.hpp"

namespace linlab {

std::unique_ptr<TreeNode> make_leaf(bool accept) {
    auto node = std::make_unique<TreeNode>();
    node->accept = accept;
    return node;
}

std::unique_ptr<TreeNode> make_inner(F2Vector label, std::unique_ptr<TreeNode> child0,
                                     std::unique_ptr<TreeNode> child1) {
    auto node = std::make_unique<TreeNode>();
    node->label = std::move(label);
    node->child[0] = std::move(child0);
    node->child[1] = std::move(child1);
    return node;
}

std::unique_ptr<TreeNode> clone_node(const TreeNode& node) {
    if (node.is_leaf()) return make_leaf(node.accept);
    return make_inner(node.label, clone_node(*node.child[0]), clone_node(*node.child[1]));
}

namespace {

void validate_node(const TreeNode& node, std::size_t n) {
    bool has0 = node.child[0] != nullptr;
    bool has1 = node.child[1] != nullptr;
    if (has0 != has1) throw std::invalid_argument("TestTree: inner node with one child");
    if (!has0) return;
    if (node.label.size() != n)
        throw std::invalid_argument("TestTree: label dimension mismatch");
    validate_node(*node.child[0], n);
    validate_node(*node.child[1], n);
}

std::size_t node_depth(const TreeNode& node) {
    if (node.is_leaf()) return 0;
    return 1 + std::max(node_depth(*node.child[0]), node_depth(*node.child[1]));
}

std::size_t node_leaves(const TreeNode& node) {
    if (node.is_leaf()) return 1;
    return node_leaves(*node.child[0]) + node_leaves(*node.child[1]);
}

}  // namespace

TestTree::TestTree(std::size_t n, std::unique_ptr<TreeNode> root)
    : n_(n), root_(std::move(root)) {
    if (!root_) throw std::invalid_argument("TestTree: null root");
    validate_node(*root_, n_);
}

TestTree TestTree::single_leaf(std::size_t n, bool accept) {
    return TestTree(n, make_leaf(accept));
}

std::size_t TestTree::depth() const { return node_depth(*root_); }

std::size_t TestTree::leaf_count() const { return node_leaves(*root_); }

namespace {

std::unique_ptr<TreeNode> chain_node(const std::vector<F2Vector>& queries,
                                     const std::function<bool(const std::vector<int>&)>& accept,
                                     std::vector<int>& responses) {
    if (responses.size() == queries.size()) return make_leaf(accept(responses));
    const F2Vector& label = queries[responses.size()];
    responses.push_back(0);
    auto child0 = chain_node(queries, accept, responses);
    responses.back() = 1;
    auto child1 = chain_node(queries, accept, responses);
    responses.pop_back();
    return make_inner(label, std::move(child0), std::move(child1));
}

}  // namespace

TestTree chain_tree(std::size_t n, const std::vector<F2Vector>& queries,
                    const std::function<bool(const std::vector<int>&)>& accept) {
    // The compiled tree has 2^depth leaves; keep it at desk scale.
    if (queries.size() > 20)
        throw std::invalid_argument("chain_tree: query schedule too deep (max 20)");
    for (const F2Vector& q : queries)
        if (q.size() != n) throw std::invalid_argument("chain_tree: label dimension mismatch");
    std::vector<int> responses;
    return TestTree(n, chain_node(queries, accept, responses));
}

TestTree blr_instance(const F2Vector& x, const F2Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("blr_instance: dimension mismatch");
    std::vector<F2Vector> queries{x, y, x ^ y};
    return chain_tree(x.size(), queries, [](const std::vector<int>& r) {
        return r[2] == (r[0] ^ r[1]);
    });
}

TestTree complete_graph_instance(const std::vector<F2Vector>& xs) {
    std::size_t k = xs.size();
    if (k < 2) throw std::invalid_argument("complete_graph_instance: need k >= 2");
    std::size_t n = xs.front().size();
    std::vector<F2Vector> queries = xs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) queries.push_back(xs[i] ^ xs[j]);
    return chain_tree(n, queries, [k](const std::vector<int>& r) {
        std::size_t next = k;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if ((r[i] ^ r[j] ^ r[next++]) != 0) return false;
        return true;
    });
}

TestTree sample_blr_instance(std::size_t n, Rng& rng) {
    F2Vector x = random_vector(rng, n);
    F2Vector y = random_vector(rng, n);
    return blr_instance(x, y);
}

TestTree sample_kgraph_instance(std::size_t k, std::size_t n, Rng& rng) {
    std::vector<F2Vector> xs;
    xs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) xs.push_back(random_vector(rng, n));
    return complete_graph_instance(xs);
}

namespace {

std::unique_ptr<TreeNode> random_node(std::size_t n, std::size_t depth, std::size_t max_depth,
                                      Rng& rng) {
    bool leaf = depth >= max_depth || (depth > 0 && draw_bits(rng, 2) == 0);
    if (leaf) return make_leaf(draw_bits(rng, 1) != 0);
    F2Vector label = random_vector(rng, n);
    auto c0 = random_node(n, depth + 1, max_depth, rng);
    auto c1 = random_node(n, depth + 1, max_depth, rng);
    return make_inner(std::move(label), std::move(c0), std::move(c1));
}

}  // namespace

TestTree sample_random_tree(std::size_t n, std::size_t max_depth, Rng& rng) {
    return TestTree(n, random_node(n, 0, max_depth, rng));
}

RandomizedTest RandomizedTest::mixture(std::vector<Weighted> instances) {
    if (instances.empty()) throw std::invalid_argument("RandomizedTest: empty mixture");
    RandomizedTest t;
    t.n_ = instances.front().tree.n();
    Rational total(0);
    for (const Weighted& w : instances) {
        if (w.tree.n() != t.n_)
            throw std::invalid_argument("RandomizedTest: mixed tree dimensions");
        if (!(w.weight > Rational(0)))
            throw std::invalid_argument("RandomizedTest: weights must be positive");
        total += w.weight;
    }
    if (total != Rational(1))
        throw std::invalid_argument("RandomizedTest: weights must sum to exactly 1");
    t.instances_ = std::move(instances);
    return t;
}

RandomizedTest RandomizedTest::single(TestTree tree) {
    std::vector<Weighted> one;
    one.push_back({Rational(1), std::move(tree)});
    return mixture(std::move(one));
}

RandomizedTest RandomizedTest::generator(std::size_t n, std::function<TestTree(Rng&)> gen) {
    if (!gen) throw std::invalid_argument("RandomizedTest: null generator");
    RandomizedTest t;
    t.n_ = n;
    t.gen_ = std::move(gen);
    return t;
}

RandomizedTest RandomizedTest::blr(std::size_t n) {
    return generator(n, [n](Rng& rng) { return sample_blr_instance(n, rng); });
}

RandomizedTest RandomizedTest::kgraph(std::size_t k, std::size_t n) {
    return generator(n, [k, n](Rng& rng) { return sample_kgraph_instance(k, n, rng); });
}

const std::vector<RandomizedTest::Weighted>& RandomizedTest::instances() const {
    if (!is_explicit())
        throw std::invalid_argument("RandomizedTest: generator form has no explicit instances");
    return instances_;
}

TestTree RandomizedTest::draw(Rng& rng) const {
    if (gen_) return gen_(rng);
    // 53-bit dyadic uniform against the exact cumulative weights.
    Rational u(static_cast<std::int64_t>(draw_bits(rng, 53)), std::int64_t(1) << 53);
    Rational cum(0);
    for (const Weighted& w : instances_) {
        cum += w.weight;
        if (u < cum) return w.tree.clone();
    }
    return instances_.back().tree.clone();
}

Rational acceptance_exact(const RandomizedTest& test, Family family) {
    if (!test.is_explicit())
        throw std::invalid_argument("acceptance_exact: generator-form test (use Monte Carlo)");
    Rational total(0);
    for (const RandomizedTest::Weighted& w : test.instances()) {
        TreeAnalysis a = analyze_tree(w.tree);
        total += w.weight * (family == Family::linear ? a.lin_accept : a.quad_accept);
    }
    return total;
}

namespace {

template <class DrawFn>
MonteCarloEstimate monte_carlo_impl(const RandomizedTest& test, std::uint64_t trials,
                                    std::uint64_t seed, DrawFn&& make_oracle) {
    if (trials == 0) throw std::invalid_argument("acceptance_monte_carlo: trials must be >= 1");
    Rng rng(seed);
    std::uint64_t accepts = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TestTree tree = test.draw(rng);
        auto oracle = make_oracle(rng);
        if (run_tree(tree, oracle).accept) ++accepts;
    }
    double p = double(accepts) / double(trials);
    double se = std::sqrt(p * (1.0 - p) / double(trials));
    return MonteCarloEstimate{trials, accepts, p, se};
}

}  // namespace

MonteCarloEstimate acceptance_monte_carlo(const RandomizedTest& test, Family family,
                                          std::uint64_t trials, std::uint64_t seed) {
    std::size_t n = test.n();
    if (family == Family::linear) {
        return monte_carlo_impl(test, trials, seed, [n](Rng& rng) {
            return [f = sample_linear(n, rng)](const F2Vector& x) { return f(x); };
        });
    }
    return monte_carlo_impl(test, trials, seed, [n](Rng& rng) {
        return [f = sample_quadratic(n, rng)](const F2Vector& x) { return f(x); };
    });
}

MonteCarloEstimate acceptance_monte_carlo(const RandomizedTest& test,
                                          const std::function<int(const F2Vector&)>& fn,
                                          std::uint64_t trials, std::uint64_t seed) {
    if (!fn) throw std::invalid_argument("acceptance_monte_carlo: null oracle");
    return monte_carlo_impl(test, trials, seed,
                            [&fn](Rng&) { return [&fn](const F2Vector& x) { return fn(x); }; });
}

}  // namespace linlab

#include "linlab/analysis.hpp"

#include <stdexcept>

namespace linlab {

namespace {

// Per-family traversal state. `responses` holds the edge taken at each
// independent vertex, in basis insertion order; dependent vertices add no
// entry because their value is determined by the combination.
struct FamilyState {
    IncrementalBasis basis;
    std::vector<int> responses;
    bool consistent = true;

    explicit FamilyState(std::size_t dim) : basis(dim) {}
};

int combine(const F2Vector& combo, const std::vector<int>& responses) {
    int acc = 0;
    for (std::size_t i = 0; i < combo.size(); ++i)
        if (combo.get(i)) acc ^= responses[i];
    return acc;
}

struct Walker {
    std::size_t n;
    TreeAnalysis out;
    std::vector<F2Vector> labels;
    std::vector<int> edges;

    void leaf(const TreeNode& node, const FamilyState& lin, const FamilyState& quad) {
        LeafRecord rec;
        rec.path_labels = labels;
        rec.path_edges = edges;
        rec.depth = labels.size();
        rec.verdict = node.accept ? 1 : 0;
        rec.lin_rank = lin.basis.rank();
        rec.quad_rank = quad.basis.rank();
        rec.in_l = lin.consistent;
        rec.in_q = quad.consistent;
        rec.p_lin = rec.in_l ? Rational::pow2(-static_cast<int>(rec.lin_rank)) : Rational(0);
        rec.p_quad = rec.in_q ? Rational::pow2(-static_cast<int>(rec.quad_rank)) : Rational(0);

        out.sum_l += rec.p_lin;
        out.sum_q += rec.p_quad;
        if (rec.verdict) {
            out.lin_accept += rec.p_lin;
            out.quad_accept += rec.p_quad;
        }
        out.avg_depth_lin += Rational(static_cast<std::int64_t>(rec.depth)) * rec.p_lin;
        out.leaves.push_back(std::move(rec));
    }

    void walk(const TreeNode& node, FamilyState lin, FamilyState quad) {
        if (node.is_leaf()) {
            leaf(node, lin, quad);
            return;
        }

        // Insert the label once; only the edge differs between children.
        auto lin_ins = lin.basis.insert(node.label);
        auto quad_ins = quad.basis.insert(moment_vector(node.label));
        std::optional<int> lin_forced, quad_forced;
        if (!lin_ins.independent) lin_forced = combine(lin_ins.combination, lin.responses);
        if (!quad_ins.independent) quad_forced = combine(quad_ins.combination, quad.responses);

        labels.push_back(node.label);
        for (int edge = 0; edge < 2; ++edge) {
            FamilyState lin_child = lin;
            FamilyState quad_child = quad;
            if (lin_forced) {
                if (*lin_forced != edge) lin_child.consistent = false;
            } else {
                lin_child.responses.push_back(edge);
            }
            if (quad_forced) {
                if (*quad_forced != edge) quad_child.consistent = false;
            } else {
                quad_child.responses.push_back(edge);
            }
            edges.push_back(edge);
            walk(*node.child[edge], std::move(lin_child), std::move(quad_child));
            edges.pop_back();
        }
        labels.pop_back();
    }
};

}  // namespace

TreeAnalysis analyze_tree(const TestTree& tree) {
    Walker walker;
    walker.n = tree.n();
    FamilyState lin(tree.n());
    FamilyState quad(moment_dim(tree.n()));
    walker.walk(tree.root(), std::move(lin), std::move(quad));
    return std::move(walker.out);
}

std::size_t quadratic_rank(const std::vector<F2Vector>& xs) {
    std::vector<F2Vector> moments;
    moments.reserve(xs.size());
    for (const F2Vector& x : xs) moments.push_back(moment_vector(x));
    return rank(moments);
}

std::optional<int> forced_value(const std::vector<std::pair<F2Vector, int>>& prior,
                                const F2Vector& next_label, DependenceMode mode) {
    auto lift = [mode](const F2Vector& v) {
        return mode == DependenceMode::linear ? v : moment_vector(v);
    };
    std::vector<F2Vector> basis;
    basis.reserve(prior.size());
    for (const auto& [label, response] : prior) {
        if (label.size() != next_label.size())
            throw std::invalid_argument("forced_value: dimension mismatch");
        basis.push_back(lift(label));
    }
    std::optional<F2Vector> coeffs = express_in_span(basis, lift(next_label));
    if (!coeffs) return std::nullopt;
    int acc = 0;
    for (std::size_t i = 0; i < prior.size(); ++i)
        if (coeffs->get(i)) acc ^= prior[i].second;
    return acc;
}

}  // namespace linlab

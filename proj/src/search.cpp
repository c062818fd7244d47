#include "linlab/search.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "linlab/analysis.hpp"
#include "linlab/bounds.hpp"

namespace linlab {

namespace {

// Path state shared by the two dependence trackers. Labels in disjoint
// subtrees are independent choices, so each subtree is minimized on its own
// given the path state; the minimum over joint assignments is the sum of
// the children's minima.
struct PathState {
    IncrementalBasis lin;
    IncrementalBasis quad;
    std::vector<int> lin_responses;  // edge per independent label, insertion order

    PathState(std::size_t n) : lin(n), quad(moment_dim(n)) {}
};

struct Best {
    Rational value;
    std::unique_ptr<TreeNode> subtree;
};

std::unique_ptr<TreeNode> reject_filler(std::size_t n, std::size_t levels) {
    if (levels == 0) return make_leaf(false);
    return make_inner(F2Vector(n), reject_filler(n, levels - 1), reject_filler(n, levels - 1));
}

// Minimal sum of 2^{-q(v)} over linear-reachable leaves of a full subtree
// with `levels` inner levels below the given path state, together with a
// witness subtree (accept exactly on those leaves).
Best solve(std::size_t n, std::size_t levels, const PathState& state) {
    if (levels == 0) {
        return {Rational::pow2(-static_cast<int>(state.quad.rank())), make_leaf(true)};
    }

    Best best;
    bool have_best = false;
    std::uint64_t label_count = std::uint64_t(1) << n;
    for (std::uint64_t bits = 0; bits < label_count; ++bits) {
        F2Vector label = F2Vector::from_index(n, bits);
        PathState next = state;
        auto lin_ins = next.lin.insert(label);
        next.quad.insert(moment_vector(label));

        Rational value;
        std::unique_ptr<TreeNode> subtree;
        if (!lin_ins.independent) {
            // Forced edge: the other side is unreachable by linear
            // functions, so the adversary rejects it wholesale.
            int forced = 0;
            for (std::size_t i = 0; i < lin_ins.combination.size(); ++i)
                if (lin_ins.combination.get(i)) forced ^= state.lin_responses[i];
            Best cont = solve(n, levels - 1, next);
            value = cont.value;
            auto filler = reject_filler(n, levels - 1);
            subtree = forced == 0
                          ? make_inner(label, std::move(cont.subtree), std::move(filler))
                          : make_inner(label, std::move(filler), std::move(cont.subtree));
        } else {
            next.lin_responses.push_back(0);
            Best c0 = solve(n, levels - 1, next);
            next.lin_responses.back() = 1;
            Best c1 = solve(n, levels - 1, next);
            value = c0.value + c1.value;
            subtree = make_inner(label, std::move(c0.subtree), std::move(c1.subtree));
        }

        if (!have_best || value < best.value) {
            best = {std::move(value), std::move(subtree)};
            have_best = true;
        }
    }
    return best;
}

Best solve_root(std::size_t n, std::size_t depth, const std::vector<std::uint64_t>& root_labels,
                unsigned threads) {
    auto solve_one = [n, depth](std::uint64_t bits) {
        PathState state(n);
        F2Vector label = F2Vector::from_index(n, bits);
        auto lin_ins = state.lin.insert(label);
        state.quad.insert(moment_vector(label));
        if (!lin_ins.independent) {
            // Only the zero label is dependent at the root; its forced
            // response is 0.
            Best cont = solve(n, depth - 1, state);
            return Best{cont.value, make_inner(label, std::move(cont.subtree),
                                               reject_filler(n, depth - 1))};
        }
        state.lin_responses.push_back(0);
        Best c0 = solve(n, depth - 1, state);
        state.lin_responses.back() = 1;
        Best c1 = solve(n, depth - 1, state);
        return Best{c0.value + c1.value,
                    make_inner(label, std::move(c0.subtree), std::move(c1.subtree))};
    };

    std::vector<Best> results(root_labels.size());
    if (threads <= 1 || root_labels.size() <= 1) {
        for (std::size_t i = 0; i < root_labels.size(); ++i)
            results[i] = solve_one(root_labels[i]);
    } else {
        std::vector<std::future<Best>> futures;
        futures.reserve(root_labels.size());
        for (std::uint64_t bits : root_labels)
            futures.push_back(std::async(std::launch::async, solve_one, bits));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }

    // Deterministic merge: first minimum in label order wins.
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].value < results[best].value) best = i;
    return std::move(results[best]);
}

}  // namespace

SearchResult search_optimal(std::size_t n, std::size_t depth, const SearchOptions& opt) {
    if (n == 0 || depth == 0) throw std::invalid_argument("search_optimal: need n, depth >= 1");
    if (n > opt.max_n || depth > opt.max_depth)
        throw std::invalid_argument("search_optimal: parameters above configured ceilings");

    std::vector<std::uint64_t> roots;
    if (opt.symmetry) {
        roots = {0, 1};  // zero label and one canonical nonzero representative
    } else {
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits)
            roots.push_back(bits);
    }

    Best best = solve_root(n, depth, roots, opt.threads);

    SearchResult result;
    result.n = n;
    result.depth = depth;
    std::uint64_t inner_nodes = (std::uint64_t(1) << depth) - 1;
    result.trees_examined = 1;
    for (std::uint64_t i = 0; i < inner_nodes; ++i) result.trees_examined *= std::uint64_t(1) << n;
    result.min_quad_accept = best.value;
    result.witness = TestTree(n, std::move(best.subtree));
    result.bound = std::exp2(-psi(static_cast<double>(depth)));
    result.holds = result.min_quad_accept.to_double() >= result.bound - 1e-12;
    return result;
}

std::vector<FrontierRow> frontier(std::size_t n, std::size_t max_depth,
                                  const SearchOptions& opt) {
    std::vector<FrontierRow> rows;
    for (std::size_t d = 1; d <= max_depth; ++d) {
        SearchResult r = search_optimal(n, d, opt);
        rows.push_back({d, r.min_quad_accept, r.bound});
    }
    return rows;
}

}  // namespace linlab

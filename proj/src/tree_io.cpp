#include "linlab/tree_io.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>

namespace linlab {

namespace {

nlohmann::json node_to_json(const TreeNode& node) {
    if (node.is_leaf()) return {{"v", node.accept ? "accept" : "reject"}};
    return {{"q", node.label.to_bitstring()},
            {"0", node_to_json(*node.child[0])},
            {"1", node_to_json(*node.child[1])}};
}

[[noreturn]] void malformed(const std::string& why) {
    throw std::runtime_error("malformed tree file: " + why);
}

std::unique_ptr<TreeNode> node_from_json(const nlohmann::json& doc,
                                         std::optional<std::size_t>& n) {
    if (!doc.is_object()) malformed("node is not an object");
    if (doc.contains("v")) {
        if (doc.size() != 1) malformed("leaf with extra keys");
        std::string v = doc.at("v").get<std::string>();
        if (v != "accept" && v != "reject") malformed("leaf verdict must be accept or reject");
        return make_leaf(v == "accept");
    }
    if (!doc.contains("q") || !doc.contains("0") || !doc.contains("1"))
        malformed("inner node needs q, 0 and 1");
    if (!doc.at("q").is_string()) malformed("label must be a bitstring");
    F2Vector label;
    try {
        label = F2Vector::from_bitstring(doc.at("q").get<std::string>());
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
    if (!n)
        n = label.size();
    else if (*n != label.size())
        malformed("labels of mixed dimension");
    auto c0 = node_from_json(doc.at("0"), n);
    auto c1 = node_from_json(doc.at("1"), n);
    return make_inner(std::move(label), std::move(c0), std::move(c1));
}

}  // namespace

nlohmann::json tree_to_json(const TestTree& tree) { return node_to_json(tree.root()); }

nlohmann::json test_to_json(const RandomizedTest& test) {
    nlohmann::json trees = nlohmann::json::array();
    for (const RandomizedTest::Weighted& w : test.instances())
        trees.push_back({{"w", w.weight.fraction_str()}, {"t", tree_to_json(w.tree)}});
    return {{"n", test.n()}, {"trees", std::move(trees)}};
}

TestTree tree_from_json(const nlohmann::json& doc) {
    std::optional<std::size_t> n;
    auto root = node_from_json(doc, n);
    return TestTree(n.value_or(0), std::move(root));
}

TestTree tree_from_json(const nlohmann::json& doc, std::size_t expect_n) {
    std::optional<std::size_t> n = expect_n;
    auto root = node_from_json(doc, n);
    return TestTree(expect_n, std::move(root));
}

RandomizedTest test_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("trees"))
        malformed("randomized test needs n and trees");
    std::size_t n = doc.at("n").get<std::size_t>();
    if (!doc.at("trees").is_array() || doc.at("trees").empty())
        malformed("trees must be a non-empty array");
    std::vector<RandomizedTest::Weighted> instances;
    for (const nlohmann::json& entry : doc.at("trees")) {
        if (!entry.contains("w") || !entry.contains("t")) malformed("tree entry needs w and t");
        Rational weight;
        try {
            weight = Rational::parse(entry.at("w").get<std::string>());
        } catch (const std::invalid_argument& e) {
            malformed(e.what());
        }
        instances.push_back({weight, tree_from_json(entry.at("t"), n)});
    }
    return RandomizedTest::mixture(std::move(instances));
}

TreeDocument load_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tree file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }
    if (doc.is_object() && doc.contains("trees")) return test_from_json(doc);
    return tree_from_json(doc);
}

void save_tree_file(const std::string& path, const TestTree& tree) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tree file: " + path);
    out << tree_to_json(tree).dump(2) << "\n";
}

}  // namespace linlab

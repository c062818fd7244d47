#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "linlab/tree.hpp"

namespace linlab {

// Tree file format. Inner node: {"q": "<bitstring x_1..x_n>", "0": <node>,
// "1": <node>}; leaf: {"v": "accept"} or {"v": "reject"}; randomized test:
// {"n": <int>, "trees": [{"w": "<num>/<den>", "t": <node>}, ...]}. The
// leftmost bitstring character is x_1.

nlohmann::json tree_to_json(const TestTree& tree);
nlohmann::json test_to_json(const RandomizedTest& test);  // explicit form only

// Dimension is inferred from the labels; a bare-leaf tree gets dimension 0
// unless expect_n says otherwise. Malformed documents throw runtime_error.
TestTree tree_from_json(const nlohmann::json& doc);
TestTree tree_from_json(const nlohmann::json& doc, std::size_t expect_n);
RandomizedTest test_from_json(const nlohmann::json& doc);

using TreeDocument = std::variant<TestTree, RandomizedTest>;

// Accepts either a bare tree node or a randomized-test object.
TreeDocument load_tree_file(const std::string& path);

void save_tree_file(const std::string& path, const TestTree& tree);

}  // namespace linlab

#pragma once

// The forest on level data whose edges are the one-step simplification maps:
// bounded children, tree expansion and export.

#include "stokes/level_datum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stokes {

/// Every level datum C != `datum` with ramification(C) <= ram_bound and
/// step(C, mode) = datum, ordered by canonical_less. Throws InvalidInput for
/// ram_bound < 1.
std::vector<LevelDatum> children(const LevelDatum& datum, std::int64_t ram_bound, Mode mode);

struct TreeNode {
  LevelDatum datum;
  Integer ram;
  Integer balance;
  std::vector<TreeNode> children;
  // The listed children are a bounded cut of an infinite set.
  bool truncated = true;
};

TreeNode expand_tree(const LevelDatum& root, int depth, std::int64_t ram_bound, Mode mode);

/// Number of nodes, including the root.
std::size_t tree_size(const TreeNode& node);

enum class TreeFormat { Dot, Json };

/// DOT edges point from child to parent; node labels read "<datum>\nB=<balance>".
std::string export_tree(const TreeNode& tree, TreeFormat format);

}  // namespace stokes

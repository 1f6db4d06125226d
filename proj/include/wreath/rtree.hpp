#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wreath/bignat.hpp"

namespace wreath {

/// The truncated vector (r_1, ..., r_k) defining both the wreath chain and
/// the tree shape. Entries are stored 1-based in the accessors: r(1) is the
/// symmetric group at the bottom of the chain, r(k) the top.
class RVector
{
public:
  /// Throws std::invalid_argument when empty or when any entry is zero.
  explicit RVector(std::vector<std::uint32_t> entries);

  /// Parses "2,3,4"; throws std::invalid_argument on malformed input.
  static RVector parse(const std::string& csv);

  std::size_t height() const { return entries_.size(); }
  std::uint32_t r(std::size_t i) const { return entries_.at(i - 1); }
  std::uint32_t top() const { return entries_.back(); }
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  /// r|_j for 1 <= j <= k.
  RVector prefix(std::size_t j) const;

  std::string to_csv() const;

  friend bool operator==(const RVector&, const RVector&) = default;

private:
  std::vector<std::uint32_t> entries_;
};

/// Child-index path from the root; the empty path is the root.
using NodePath = std::vector<std::uint32_t>;

/// The complete tree T(r|k): a root with r_k children, each the root of a
/// copy of T(r|_{k-1}); T(r|_1) is a single node. Node v sits in layer
/// |path(v)|, and layer j nodes have r_{k-j} children.
///
/// The tree is shape only. Node sets are implicit in the r-vector and only
/// walked on request, so a tree is cheap to build for any shape.
class RTree
{
public:
  explicit RTree(RVector shape) : shape_(std::move(shape)) {}

  const RVector& shape() const { return shape_; }
  std::size_t height() const { return shape_.height(); }

  bool contains(std::span<const std::uint32_t> path) const;
  bool is_leaf(std::span<const std::uint32_t> path) const;
  std::uint32_t child_count(std::span<const std::uint32_t> path) const;

  BigNat node_count() const;
  BigNat leaf_count() const;

  /// Every node path in preorder (root, then each child subtree in index
  /// order). Throws CapExceeded if the tree has more than `cap` nodes.
  std::vector<NodePath> preorder(std::uint64_t cap = 1'000'000) const;

  /// Preorder index of a node, matching preorder().
  std::uint64_t preorder_index(std::span<const std::uint32_t> path) const;

  /// The subtree rooted at `path`, as a tree of its own.
  RTree subtree(std::span<const std::uint32_t> path) const;

  friend bool operator==(const RTree&, const RTree&) = default;

private:
  RVector shape_;
};

/// Throws std::invalid_argument on an empty r (via RVector).
RTree build_tree(const RVector& r);

/// Number of nodes at distance j from the root: prod_{i=k-j+1}^{k} r_i.
/// Throws std::out_of_range unless 0 <= j <= k-1.
BigNat layer_size(const RVector& r, std::size_t j);

/// Number of leaves below v. Throws std::invalid_argument for a path that is
/// not a node of T(r|k).
BigNat leaf_degree(const RVector& r, std::span<const std::uint32_t> v);

/// The r_k subtrees hanging off the root, each equal to T(r|_{k-1}). Throws
/// std::invalid_argument when k = 1.
std::vector<RTree> maximal_subtrees(const RTree& t);

}  // namespace wreath

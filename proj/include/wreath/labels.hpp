#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wreath/bignat.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/rtree.hpp"

namespace wreath {

/// An irreducible of the Young subgroup S_alpha = S_alpha_1 x ... x S_alpha_h,
/// given as one partition per factor. Zero parts of alpha are dropped
/// (S_0 is trivial), so every alpha_i is positive.
class YoungIrrep
{
public:
  YoungIrrep() = default;

  /// Derives alpha from the shape sizes. Throws std::invalid_argument if a
  /// shape is empty.
  explicit YoungIrrep(std::vector<Partition> shapes);

  const std::vector<std::uint32_t>& alpha() const { return alpha_; }
  const std::vector<Partition>& shapes() const { return shapes_; }
  std::uint64_t total() const;

  /// Product of the hook-length dimensions of the shapes.
  BigNat dimension() const;

  friend bool operator==(const YoungIrrep&, const YoungIrrep&) = default;
  friend std::strong_ordering operator<=>(const YoungIrrep& a,
                                          const YoungIrrep& b);

private:
  std::vector<std::uint32_t> alpha_;
  std::vector<Partition> shapes_;
};

/// Leaves carry a partition of r_1; internal nodes carry a YoungIrrep.
using NodeValue = std::variant<Partition, YoungIrrep>;

std::strong_ordering compare(const NodeValue& a, const NodeValue& b);

/// Recursive label storage mirroring the tree: one value per node and one
/// child entry per tree child, in child-index order.
struct LabelNode
{
  NodeValue value;
  std::vector<LabelNode> children;

  friend bool operator==(const LabelNode& a, const LabelNode& b);
};

/// Encoding order on labels of the same shape: node value first, then the
/// child sequence lexicographically. Canonical labels list children in
/// weakly decreasing order under it.
std::strong_ordering compare(const LabelNode& a, const LabelNode& b);

/// A labeling of T(r|k). Construction does not check validity; see
/// is_valid().
class TreeLabel
{
public:
  TreeLabel(RVector shape, LabelNode root)
  : shape_(std::move(shape)), root_(std::move(root))
  {}

  const RVector& shape() const { return shape_; }
  const LabelNode& root() const { return root_; }

  /// Throws std::invalid_argument if `path` does not address a stored node.
  const NodeValue& value_at(std::span<const std::uint32_t> path) const;

  /// Path -> value view of the whole label.
  std::map<NodePath, NodeValue> assignment() const;

  friend bool operator==(const TreeLabel&, const TreeLabel&) = default;

private:
  RVector shape_;
  LabelNode root_;
};

/// A valid label in canonical form: the representative of its Aut(T)-orbit.
/// Only canonicalize() and the enumerator produce these.
class CanonicalLabel
{
public:
  const TreeLabel& label() const { return label_; }
  const RVector& shape() const { return label_.shape(); }
  const LabelNode& root() const { return label_.root(); }

  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;

private:
  friend CanonicalLabel canonicalize(const TreeLabel&);
  friend class CanonicalEnumerator;
  explicit CanonicalLabel(TreeLabel label) : label_(std::move(label)) {}

  TreeLabel label_;
};

enum class CompanionVariant { paper, corrected };

/// Node-wise integers whose product is the degree of the irreducible.
struct CompanionLabel
{
  CompanionVariant variant;
  std::map<NodePath, BigNat> values;

  BigNat product() const;
};

/// Recursive validity. Throws ShapeMismatch when the label's node structure
/// (child counts, leaf vs internal values) does not match T(shape).
///
/// At an internal node the child sublabels are grouped into Aut-equivalence
/// classes; classes are ordered by the canonical encoding of a member,
/// largest first, and the node's alpha must list the class sizes in that
/// order.
bool is_valid(const TreeLabel& label);

/// Canonicalizes the child sublabels recursively, then sorts each child
/// block into weakly decreasing encoding order. Throws InvalidLabel (or
/// ShapeMismatch) for labels that are not valid.
CanonicalLabel canonicalize(const TreeLabel& label);

/// Throws ShapeMismatch if the two labels live on different trees.
bool labels_equivalent(const TreeLabel& a, const TreeLabel& b);

/// Streams one canonical label per irreducible of W(r|k), deterministically.
///
/// Level k is built from the canonical level-(k-1) labels rho_1 > ... > rho_h
/// (materialized up front): for each weak composition alpha of r_k into h
/// parts (decreasing lexicographic) and each irreducible sigma of S_alpha
/// (nonzero parts only, shape tuples in decreasing lexicographic order) the
/// label has alpha_i children carrying rho_i and sigma at the root.
class CanonicalEnumerator
{
public:
  /// Throws CountExceedsLimit if a lower level would materialize more than
  /// `materialize_cap` labels.
  explicit CanonicalEnumerator(RVector r,
                               std::uint64_t materialize_cap = 1'000'000);

  /// Calls `sink` for each label in order; returning false stops early.
  void for_each(const std::function<bool(const CanonicalLabel&)>& sink) const;

  std::vector<CanonicalLabel> collect() const;

private:
  RVector r_;
  std::vector<LabelNode> lower_;
};

inline std::vector<CanonicalLabel> enumerate_canonical(const RVector& r)
{ return CanonicalEnumerator(r).collect(); }

/// Throws InvalidLabel (or ShapeMismatch) for invalid labels.
CompanionLabel companion(const TreeLabel& label, CompanionVariant variant);

inline CompanionLabel companion(const CanonicalLabel& label,
                                CompanionVariant variant)
{ return companion(label.label(), variant); }

/// Node values in preorder, matching RTree::preorder().
std::vector<NodeValue> flatten(const TreeLabel& label);

/// Inverse of flatten(). Throws ShapeMismatch if the value count is wrong.
TreeLabel unflatten(const RVector& shape, std::span<const NodeValue> values);

/// Compact text: a leaf is "(2,1)", an internal node "<(1)x(1)>{c1,c2}".
std::string to_text(const LabelNode& node);
std::string to_text(const NodeValue& value);

}  // namespace wreath

#pragma once

// Brute-force ground truth for small instances. Nothing here relies on the
// counting formulas or on label canonicalization; it works with explicit
// permutations, explicit tree automorphisms and exhaustive label lists.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wreath/bignat.hpp"
#include "wreath/labels.hpp"
#include "wreath/rtree.hpp"

namespace wreath::oracle {

struct Caps
{
  std::uint32_t degree = 20;
  std::uint64_t order = 100'000;
  std::uint64_t automorphisms = 10'000;
  std::uint64_t labels = 100'000;
};

/// A bijection of {0, ..., d-1}, stored as its image array.
class Perm
{
public:
  static Perm identity(std::uint32_t degree);

  /// Throws std::invalid_argument unless `images` is a permutation.
  explicit Perm(std::vector<std::uint16_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint16_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  Perm() = default;
  std::vector<std::uint16_t> images_;
};

struct PermHash
{
  std::size_t operator()(const Perm& p) const;
};

class PermGroup
{
public:
  PermGroup(std::uint32_t degree, std::vector<Perm> generators);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// Closure of the generators by breadth-first multiplication, sorted by
  /// image array. Throws CapExceeded once more than `cap` elements appear.
  const std::vector<Perm>& materialize(std::uint64_t cap);

  bool materialized() const { return elements_.has_value(); }
  const std::vector<Perm>& elements() const;

private:
  std::uint32_t degree_;
  std::vector<Perm> generators_;
  std::optional<std::vector<Perm>> elements_;
};

/// W(r|k) acting imprimitively on prod r_i points: the generators of
/// W(r|_{k-1}) act on the first block, and S_{r_k} (a transposition and an
/// r_k-cycle) permutes the r_k blocks. Throws CapExceeded above
/// `degree_cap`.
PermGroup wreath_generators(const RVector& r, std::uint32_t degree_cap = 20);

/// Throws CapExceeded if the group has more than `cap` elements.
BigNat element_count(PermGroup& g, std::uint64_t cap = 100'000);

/// Orbits of the conjugation action, by union-find over the materialized
/// element list. Throws CapExceeded via materialization.
BigNat conjugacy_class_count(PermGroup& g, std::uint64_t cap = 100'000);

/// An automorphism of T(r|k) as a map on preorder node indices; a label
/// phi moves to phi^g with phi^g(v) = phi(g(v)).
using NodeMap = std::vector<std::uint32_t>;

/// Every automorphism of T(r|k): a permutation of the root's children
/// combined with an automorphism of each child subtree. Throws CapExceeded
/// if there would be more than `cap`.
std::vector<NodeMap> tree_automorphisms(const RVector& r,
                                        std::uint64_t cap = 10'000);

std::vector<NodeValue> apply_automorphism(const NodeMap& g, std::span<const NodeValue> flat);

/// Every valid r|k-label in flattened (preorder) form. Child classes are
/// found by explicit automorphism orbits one level down and ordered by the
/// lexicographically largest flattened member of each orbit.
std::vector<std::vector<NodeValue>> all_valid_labels(const RVector& r,
                                                     const Caps& caps = {});

/// Number of Aut(T)-orbits of valid labels, by exhaustive search.
BigNat orbit_count_bruteforce(const RVector& r, const Caps& caps = {});

}  // namespace wreath::oracle

#include "wreath/labels.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "wreath/errors.hpp"

namespace wreath {

YoungIrrep::YoungIrrep(std::vector<Partition> shapes) : shapes_(std::move(shapes))
{
  alpha_.reserve(shapes_.size());
  for (const auto& s : shapes_) {
    if (s.empty())
      throw std::invalid_argument("Young subgroup factors must be nontrivial");
    alpha_.push_back(static_cast<std::uint32_t>(s.size()));
  }
}

std::uint64_t YoungIrrep::total() const
{
  std::uint64_t t = 0;
  for (auto a : alpha_)
    t += a;
  return t;
}

BigNat YoungIrrep::dimension() const
{
  BigNat d = 1;
  for (const auto& s : shapes_)
    d *= hook_length_dim(s);
  return d;
}

std::strong_ordering operator<=>(const YoungIrrep& a, const YoungIrrep& b)
{
  if (auto c = a.alpha_ <=> b.alpha_; c != 0)
    return c;
  return std::lexicographical_compare_three_way(
    a.shapes_.begin(), a.shapes_.end(), b.shapes_.begin(), b.shapes_.end());
}

std::strong_ordering compare(const NodeValue& a, const NodeValue& b)
{
  if (a.index() != b.index())
    return a.index() <=> b.index();
  if (const auto* pa = std::get_if<Partition>(&a))
    return *pa <=> std::get<Partition>(b);
  return std::get<YoungIrrep>(a) <=> std::get<YoungIrrep>(b);
}

bool operator==(const LabelNode& a, const LabelNode& b)
{
  return a.value == b.value && a.children == b.children;
}

std::strong_ordering compare(const LabelNode& a, const LabelNode& b)
{
  if (auto c = compare(a.value, b.value); c != 0)
    return c;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a.children[i], b.children[i]); c != 0)
      return c;
  return a.children.size() <=> b.children.size();
}

namespace {

bool descending(const LabelNode& a, const LabelNode& b) { return compare(a, b) > 0; }

// `level` is the height of the subtree rooted at `node`.
void check_structure(const LabelNode& node, const RVector& r, std::size_t level)
{
  if (level == 1) {
    if (!std::holds_alternative<Partition>(node.value) || !node.children.empty())
      throw ShapeMismatch("leaf must carry a partition and have no children");
    return;
  }
  if (!std::holds_alternative<YoungIrrep>(node.value))
    throw ShapeMismatch("internal node must carry a Young subgroup irreducible");
  if (node.children.size() != r.r(level))
    throw ShapeMismatch("internal node at height " + std::to_string(level) +
                        " has " + std::to_string(node.children.size()) +
                        " children, expected " + std::to_string(r.r(level)));
  for (const auto& child : node.children)
    check_structure(child, r, level - 1);
}

// Canonical form of a structurally sound node, or nullopt if invalid.
std::optional<LabelNode> canonical_if_valid(const LabelNode& node,
                                            const RVector& r, std::size_t level)
{
  if (level == 1) {
    if (std::get<Partition>(node.value).size() != r.r(1))
      return std::nullopt;
    return node;
  }

  LabelNode out{node.value, {}};
  out.children.reserve(node.children.size());
  for (const auto& child : node.children) {
    auto c = canonical_if_valid(child, r, level - 1);
    if (!c)
      return std::nullopt;
    out.children.push_back(std::move(*c));
  }
  std::stable_sort(out.children.begin(), out.children.end(), descending);

  // equal canonical forms are adjacent after sorting; their run lengths are
  // the class sizes in decreasing encoding order
  std::vector<std::uint32_t> class_sizes;
  for (std::size_t i = 0; i < out.children.size();) {
    std::size_t j = i + 1;
    while (j < out.children.size() && out.children[j] == out.children[i])
      ++j;
    class_sizes.push_back(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  if (std::get<YoungIrrep>(node.value).alpha() != class_sizes)
    return std::nullopt;
  return out;
}

}  // namespace

const NodeValue& TreeLabel::value_at(std::span<const std::uint32_t> path) const
{
  const LabelNode* node = &root_;
  for (auto c : path) {
    if (c >= node->children.size())
      throw std::invalid_argument("path does not address a labeled node");
    node = &node->children[c];
  }
  return node->value;
}

namespace {

void collect_assignment(const LabelNode& node, NodePath& path,
                        std::map<NodePath, NodeValue>& out)
{
  out.emplace(path, node.value);
  for (std::uint32_t c = 0; c < node.children.size(); ++c) {
    path.push_back(c);
    collect_assignment(node.children[c], path, out);
    path.pop_back();
  }
}

}  // namespace

std::map<NodePath, NodeValue> TreeLabel::assignment() const
{
  std::map<NodePath, NodeValue> out;
  NodePath path;
  collect_assignment(root_, path, out);
  return out;
}

bool is_valid(const TreeLabel& label)
{
  check_structure(label.root(), label.shape(), label.shape().height());
  return canonical_if_valid(label.root(), label.shape(), label.shape().height())
    .has_value();
}

CanonicalLabel canonicalize(const TreeLabel& label)
{
  check_structure(label.root(), label.shape(), label.shape().height());
  auto c = canonical_if_valid(label.root(), label.shape(), label.shape().height());
  if (!c)
    throw InvalidLabel("cannot canonicalize an invalid label");
  return CanonicalLabel(TreeLabel(label.shape(), std::move(*c)));
}

bool labels_equivalent(const TreeLabel& a, const TreeLabel& b)
{
  if (!(a.shape() == b.shape()))
    throw ShapeMismatch("labels live on different trees");
  return canonicalize(a) == canonicalize(b);
}

namespace {

// Calls `emit` for every tuple of partitions (lambda_1 |- parts[0], ...),
// first factor varying slowest.
template <typename Emit>
bool for_each_shape_tuple(const std::vector<std::uint32_t>& parts, Emit&& emit)
{
  std::vector<std::vector<Partition>> choices;
  choices.reserve(parts.size());
  for (auto a : parts)
    choices.push_back(partitions(a));
  std::vector<std::size_t> idx(parts.size(), 0);
  for (;;) {
    std::vector<Partition> shapes;
    shapes.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
      shapes.push_back(choices[i][idx[i]]);
    if (!emit(YoungIrrep(std::move(shapes))))
      return false;
    std::size_t pos = parts.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < choices[pos].size())
        break;
      idx[pos] = 0;
      if (pos == 0)
        return true;
    }
    if (parts.empty())
      return true;
  }
}

// Calls `emit` with each canonical node of height `level`, in enumeration
// order; returning false from `emit` stops the walk.
template <typename Emit>
bool for_each_level(const RVector& r, std::size_t level,
                    const std::vector<LabelNode>& lower, Emit&& emit)
{
  if (level == 1) {
    for (auto& p : partitions(r.r(1)))
      if (!emit(LabelNode{std::move(p), {}}))
        return false;
    return true;
  }
  const std::uint32_t n = r.r(level);
  for (const auto& alpha : weak_compositions(n, lower.size())) {
    std::vector<std::uint32_t> nonzero;
    std::vector<std::size_t> which;
    for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
      if (alpha.parts[i] != 0) {
        nonzero.push_back(alpha.parts[i]);
        which.push_back(i);
      }
    }
    std::vector<LabelNode> children;
    children.reserve(n);
    for (std::size_t i = 0; i < which.size(); ++i)
      for (std::uint32_t m = 0; m < nonzero[i]; ++m)
        children.push_back(lower[which[i]]);

    const bool go_on = for_each_shape_tuple(nonzero, [&](YoungIrrep sigma) {
      return emit(LabelNode{std::move(sigma), children});
    });
    if (!go_on)
      return false;
  }
  return true;
}

std::vector<LabelNode> materialize(const RVector& r, std::size_t level,
                                   std::uint64_t cap)
{
  std::vector<LabelNode> lower;
  if (level > 1)
    lower = materialize(r, level - 1, cap);
  std::vector<LabelNode> out;
  for_each_level(r, level, lower, [&](LabelNode node) {
    if (out.size() >= cap)
      throw CountExceedsLimit(BigNat(out.size() + 1), BigNat(cap));
    out.push_back(std::move(node));
    return true;
  });
  std::stable_sort(out.begin(), out.end(), descending);
  return out;
}

}  // namespace

CanonicalEnumerator::CanonicalEnumerator(RVector r, std::uint64_t materialize_cap)
: r_(std::move(r))
{
  if (r_.height() > 1)
    lower_ = materialize(r_, r_.height() - 1, materialize_cap);
}

void CanonicalEnumerator::for_each(
  const std::function<bool(const CanonicalLabel&)>& sink) const
{
  for_each_level(r_, r_.height(), lower_, [&](LabelNode node) {
    return sink(CanonicalLabel(TreeLabel(r_, std::move(node))));
  });
}

std::vector<CanonicalLabel> CanonicalEnumerator::collect() const
{
  std::vector<CanonicalLabel> out;
  for_each([&](const CanonicalLabel& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

BigNat CompanionLabel::product() const
{
  BigNat p = 1;
  for (const auto& [path, v] : values)
    p *= v;
  return p;
}

namespace {

void fill_companion(const LabelNode& node, const RVector& r, std::size_t level,
                    CompanionVariant variant, NodePath& path,
                    std::map<NodePath, BigNat>& out)
{
  if (level == 1) {
    out.emplace(path, hook_length_dim(std::get<Partition>(node.value)));
    return;
  }
  const auto& sigma = std::get<YoungIrrep>(node.value);
  BigNat value = multinomial(r.r(level), sigma.alpha());
  if (variant == CompanionVariant::corrected)
    value *= sigma.dimension();
  out.emplace(path, std::move(value));
  for (std::uint32_t c = 0; c < node.children.size(); ++c) {
    path.push_back(c);
    fill_companion(node.children[c], r, level - 1, variant, path, out);
    path.pop_back();
  }
}

}  // namespace

CompanionLabel companion(const TreeLabel& label, CompanionVariant variant)
{
  if (!is_valid(label))
    throw InvalidLabel("companion label requested for an invalid label");
  CompanionLabel out{variant, {}};
  NodePath path;
  fill_companion(label.root(), label.shape(), label.shape().height(), variant,
                 path, out.values);
  return out;
}

namespace {

void flatten_into(const LabelNode& node, std::vector<NodeValue>& out)
{
  out.push_back(node.value);
  for (const auto& c : node.children)
    flatten_into(c, out);
}

LabelNode unflatten_from(const RVector& r, std::size_t level,
                         std::span<const NodeValue> values, std::size_t& pos)
{
  if (pos >= values.size())
    throw ShapeMismatch("too few node values for the tree");
  LabelNode node{values[pos++], {}};
  if (level > 1)
    for (std::uint32_t c = 0; c < r.r(level); ++c)
      node.children.push_back(unflatten_from(r, level - 1, values, pos));
  return node;
}

}  // namespace

std::vector<NodeValue> flatten(const TreeLabel& label)
{
  std::vector<NodeValue> out;
  flatten_into(label.root(), out);
  return out;
}

TreeLabel unflatten(const RVector& shape, std::span<const NodeValue> values)
{
  std::size_t pos = 0;
  LabelNode root = unflatten_from(shape, shape.height(), values, pos);
  if (pos != values.size())
    throw ShapeMismatch("too many node values for the tree");
  return TreeLabel(shape, std::move(root));
}

std::string to_text(const NodeValue& value)
{
  std::ostringstream os;
  if (const auto* p = std::get_if<Partition>(&value)) {
    os << *p;
  } else {
    const auto& shapes = std::get<YoungIrrep>(value).shapes();
    os << '<';
    for (std::size_t i = 0; i < shapes.size(); ++i)
      os << (i ? "x" : "") << shapes[i];
    os << '>';
  }
  return os.str();
}

std::string to_text(const LabelNode& node)
{
  std::string out = to_text(node.value);
  if (node.children.empty())
    return out;
  out += '{';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i)
      out += ',';
    out += to_text(node.children[i]);
  }
  out += '}';
  return out;
}

}  // namespace wreath

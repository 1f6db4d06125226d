#include "wreath/label_json.hpp"

#include <stdexcept>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

Partition partition_from_json(const ordered_json& j)
{
  if (!j.is_array())
    throw std::invalid_argument("partition must be a JSON array");
  std::vector<std::uint32_t> parts;
  for (const auto& p : j) {
    if (!p.is_number_unsigned())
      throw std::invalid_argument("partition parts must be unsigned integers");
    parts.push_back(p.get<std::uint32_t>());
  }
  return Partition(std::move(parts));
}

LabelNode node_from_json(const RVector& r, std::size_t level, const ordered_json& j)
{
  if (!j.is_object())
    throw std::invalid_argument("label node must be a JSON object");
  if (level == 1) {
    if (!j.contains("shape") || j.contains("children"))
      throw ShapeMismatch("expected a leaf node {\"shape\": [...]}");
    return LabelNode{partition_from_json(j.at("shape")), {}};
  }
  if (!j.contains("sigma") || !j.contains("children"))
    throw ShapeMismatch("expected an internal node with sigma and children");
  const auto& sigma = j.at("sigma");
  std::vector<Partition> shapes;
  for (const auto& s : sigma.at("shapes"))
    shapes.push_back(partition_from_json(s));
  YoungIrrep irrep(std::move(shapes));
  std::vector<std::uint32_t> alpha;
  for (const auto& a : sigma.at("alpha"))
    alpha.push_back(a.get<std::uint32_t>());
  if (alpha != irrep.alpha())
    throw std::invalid_argument("sigma alpha does not match its shape sizes");

  const auto& children = j.at("children");
  if (!children.is_array() || children.size() != r.r(level))
    throw ShapeMismatch("wrong number of children for the tree");
  LabelNode node{std::move(irrep), {}};
  for (const auto& c : children)
    node.children.push_back(node_from_json(r, level - 1, c));
  return node;
}

}  // namespace

ordered_json label_to_json(const LabelNode& node)
{
  ordered_json out = ordered_json::object();
  if (const auto* p = std::get_if<Partition>(&node.value)) {
    out["shape"] = p->parts();
    return out;
  }
  const auto& sigma = std::get<YoungIrrep>(node.value);
  ordered_json shapes = ordered_json::array();
  for (const auto& s : sigma.shapes())
    shapes.push_back(s.parts());
  out["sigma"] = {{"alpha", sigma.alpha()}, {"shapes", std::move(shapes)}};
  ordered_json children = ordered_json::array();
  for (const auto& c : node.children)
    children.push_back(label_to_json(c));
  out["children"] = std::move(children);
  return out;
}

TreeLabel label_from_json(const RVector& shape, const ordered_json& j)
{
  return TreeLabel(shape, node_from_json(shape, shape.height(), j));
}

}  // namespace wreath

#include "wreath/rtree.hpp"

#include <charconv>
#include <stdexcept>

#include "wreath/errors.hpp"

namespace wreath {

RVector::RVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries))
{
  if (entries_.empty())
    throw std::invalid_argument("r-vector must have at least one entry");
  for (auto e : entries_)
    if (e == 0)
      throw std::invalid_argument("r-vector entries must be positive");
}

RVector RVector::parse(const std::string& csv)
{
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string::npos)
      end = csv.size();
    const char* first = csv.data() + start;
    const char* last = csv.data() + end;
    while (first < last && *first == ' ')
      ++first;
    while (last > first && last[-1] == ' ')
      --last;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last)
      throw std::invalid_argument("malformed r-vector entry in '" + csv + "'");
    out.push_back(value);
    start = end + 1;
  }
  return RVector(std::move(out));
}

RVector RVector::prefix(std::size_t j) const
{
  if (j == 0 || j > entries_.size())
    throw std::out_of_range("r-vector prefix length out of range");
  return RVector({entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(j)});
}

std::string RVector::to_csv() const
{
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

bool RTree::contains(std::span<const std::uint32_t> path) const
{
  const std::size_t k = height();
  if (path.size() >= k)
    return false;
  for (std::size_t j = 0; j < path.size(); ++j)
    if (path[j] >= shape_.r(k - j))
      return false;
  return true;
}

bool RTree::is_leaf(std::span<const std::uint32_t> path) const
{
  return path.size() + 1 == height();
}

std::uint32_t RTree::child_count(std::span<const std::uint32_t> path) const
{
  if (!contains(path))
    throw std::invalid_argument("path is not a node of the tree");
  return is_leaf(path) ? 0 : shape_.r(height() - path.size());
}

BigNat RTree::node_count() const
{
  BigNat total = 0;
  for (std::size_t j = 0; j < height(); ++j)
    total += layer_size(shape_, j);
  return total;
}

BigNat RTree::leaf_count() const { return layer_size(shape_, height() - 1); }

namespace {

void walk(const RTree& t, NodePath& path, std::vector<NodePath>& out)
{
  out.push_back(path);
  const std::uint32_t n = t.child_count(path);
  for (std::uint32_t c = 0; c < n; ++c) {
    path.push_back(c);
    walk(t, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<NodePath> RTree::preorder(std::uint64_t cap) const
{
  if (node_count() > cap)
    throw CapExceeded("tree has " + node_count().str() + " nodes, cap is " +
                      std::to_string(cap));
  std::vector<NodePath> out;
  NodePath path;
  walk(*this, path, out);
  return out;
}

std::uint64_t RTree::preorder_index(std::span<const std::uint32_t> path) const
{
  if (!contains(path))
    throw std::invalid_argument("path is not a node of the tree");
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < path.size(); ++j) {
    const RTree child = subtree(path.first(j + 1));
    index += 1 + static_cast<std::uint64_t>(path[j]) *
                     child.node_count().convert_to<std::uint64_t>();
  }
  return index;
}

RTree RTree::subtree(std::span<const std::uint32_t> path) const
{
  if (!contains(path))
    throw std::invalid_argument("path is not a node of the tree");
  return RTree(shape_.prefix(height() - path.size()));
}

RTree build_tree(const RVector& r) { return RTree(r); }

BigNat layer_size(const RVector& r, std::size_t j)
{
  const std::size_t k = r.height();
  if (j >= k)
    throw std::out_of_range("layer index out of range");
  BigNat out = 1;
  for (std::size_t i = k - j + 1; i <= k; ++i)
    out *= r.r(i);
  return out;
}

BigNat leaf_degree(const RVector& r, std::span<const std::uint32_t> v)
{
  const RTree t(r);
  if (!t.contains(v))
    throw std::invalid_argument("path is not a node of the tree");
  return t.subtree(v).leaf_count();
}

std::vector<RTree> maximal_subtrees(const RTree& t)
{
  if (t.height() < 2)
    throw std::invalid_argument("a single-node tree has no maximal subtrees");
  std::vector<RTree> out;
  for (std::uint32_t c = 0; c < t.shape().top(); ++c) {
    const std::uint32_t path[] = {c};
    out.push_back(t.subtree(path));
  }
  return out;
}

}  // namespace wreath

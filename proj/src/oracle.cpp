#include "wreath/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wreath/combinatorics.hpp"
#include "wreath/errors.hpp"

namespace wreath::oracle {

Perm Perm::identity(std::uint32_t degree)
{
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), std::uint16_t{0});
  return p;
}

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image array is not a permutation");
    seen[x] = true;
  }
}

Perm operator*(const Perm& a, const Perm& b)
{
  Perm out;
  out.images_.resize(b.images_.size());
  for (std::size_t x = 0; x < b.images_.size(); ++x)
    out.images_[x] = a.images_[b.images_[x]];
  return out;
}

Perm Perm::inverse() const
{
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<std::uint16_t>(x);
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators)
: degree_(degree), generators_(std::move(generators))
{
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

const std::vector<Perm>& PermGroup::materialize(std::uint64_t cap)
{
  if (elements_)
    return *elements_;
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  const Perm id = Perm::identity(degree_);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators_) {
      Perm y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("group has more than " + std::to_string(cap) +
                            " elements");
        frontier.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  elements_ = std::move(out);
  return *elements_;
}

const std::vector<Perm>& PermGroup::elements() const
{
  if (!elements_)
    throw std::logic_error("group elements not materialized");
  return *elements_;
}

namespace {

// Transposition (0 1) and the n-cycle, deduplicated; none for n = 1.
std::vector<std::vector<std::uint16_t>> symmetric_generators(std::uint32_t n)
{
  std::vector<std::vector<std::uint16_t>> out;
  if (n < 2)
    return out;
  std::vector<std::uint16_t> swap(n);
  std::iota(swap.begin(), swap.end(), std::uint16_t{0});
  std::swap(swap[0], swap[1]);
  out.push_back(swap);
  if (n > 2) {
    std::vector<std::uint16_t> cycle(n);
    for (std::uint32_t i = 0; i < n; ++i)
      cycle[i] = static_cast<std::uint16_t>((i + 1) % n);
    out.push_back(cycle);
  }
  return out;
}

}  // namespace

PermGroup wreath_generators(const RVector& r, std::uint32_t degree_cap)
{
  std::uint64_t degree = 1;
  for (auto n : r.entries()) {
    degree *= n;
    if (degree > degree_cap)
      throw CapExceeded("permutation degree exceeds cap " +
                        std::to_string(degree_cap));
  }

  std::vector<std::vector<std::uint16_t>> gens = symmetric_generators(r.r(1));
  std::uint32_t block = r.r(1);
  for (std::size_t level = 2; level <= r.height(); ++level) {
    const std::uint32_t n = r.r(level);
    const std::uint32_t wide = block * n;
    std::vector<std::vector<std::uint16_t>> next;
    for (const auto& g : gens) {
      std::vector<std::uint16_t> ext(wide);
      std::iota(ext.begin(), ext.end(), std::uint16_t{0});
      std::copy(g.begin(), g.end(), ext.begin());
      next.push_back(std::move(ext));
    }
    for (const auto& pi : symmetric_generators(n)) {
      std::vector<std::uint16_t> ext(wide);
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t x = 0; x < block; ++x)
          ext[b * block + x] = static_cast<std::uint16_t>(pi[b] * block + x);
      next.push_back(std::move(ext));
    }
    gens = std::move(next);
    block = wide;
  }

  std::vector<Perm> perms;
  for (auto& g : gens)
    perms.emplace_back(std::move(g));
  return PermGroup(static_cast<std::uint32_t>(degree), std::move(perms));
}

BigNat element_count(PermGroup& g, std::uint64_t cap)
{
  return BigNat(g.materialize(cap).size());
}

namespace {

struct DisjointSets
{
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n)
  { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

BigNat conjugacy_class_count(PermGroup& g, std::uint64_t cap)
{
  const auto& elems = g.materialize(cap);
  std::unordered_map<Perm, std::size_t, PermHash> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);

  // Orbits under conjugation by the generators are the conjugation orbits
  // of the whole group.
  DisjointSets sets(elems.size());
  for (const auto& s : g.generators()) {
    const Perm s_inv = s.inverse();
    for (std::size_t i = 0; i < elems.size(); ++i)
      sets.unite(i, index.at(s * elems[i] * s_inv));
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (sets.find(i) == i)
      ++classes;
  return BigNat(classes);
}

namespace {

BigNat automorphism_count(const RVector& r, std::size_t level)
{
  BigNat count = 1;
  for (std::size_t l = 2; l <= level; ++l)
    count = pow(count, r.r(l)) * factorial(r.r(l));
  return count;
}

std::vector<NodeMap> automorphisms_at(const RVector& r, std::size_t level)
{
  if (level == 1)
    return {NodeMap{0}};
  const auto sub = automorphisms_at(r, level - 1);
  const std::uint32_t s = static_cast<std::uint32_t>(sub.front().size());
  const std::uint32_t n = r.r(level);

  std::vector<NodeMap> out;
  std::vector<std::uint32_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0u);
  do {
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
      NodeMap map(1 + static_cast<std::size_t>(n) * s);
      map[0] = 0;
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t x = 0; x < s; ++x)
          map[1 + c * s + x] = 1 + pi[c] * s + sub[pick[c]][x];
      out.push_back(std::move(map));

      std::size_t pos = n;
      while (pos > 0 && ++pick[pos - 1] == sub.size())
        pick[--pos] = 0;
      if (pos == 0)
        break;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

bool flat_less(const std::vector<NodeValue>& a, const std::vector<NodeValue>& b)
{
  return std::lexicographical_compare(
    a.begin(), a.end(), b.begin(), b.end(),
    [](const NodeValue& x, const NodeValue& y) { return compare(x, y) < 0; });
}

struct FlatLess
{
  bool operator()(const std::vector<NodeValue>& a,
                  const std::vector<NodeValue>& b) const
  { return flat_less(a, b); }
};

// All tuples of partitions (lambda_i |- parts[i]).
std::vector<std::vector<Partition>> shape_tuples(const std::vector<std::uint32_t>& parts)
{
  std::vector<std::vector<Partition>> out{{}};
  for (auto a : parts) {
    std::vector<std::vector<Partition>> grown;
    for (const auto& prefix : out)
      for (const auto& p : partitions(a)) {
        auto t = prefix;
        t.push_back(p);
        grown.push_back(std::move(t));
      }
    out = std::move(grown);
  }
  return out;
}

// Orbit id per label, and the lexicographically largest member per orbit.
struct Orbits
{
  std::vector<std::size_t> id;
  std::vector<std::vector<NodeValue>> largest;
};

Orbits orbits_of(const std::vector<std::vector<NodeValue>>& labels,
                 const std::vector<NodeMap>& autos)
{
  std::map<std::vector<NodeValue>, std::size_t, FlatLess> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    index.emplace(labels[i], i);

  Orbits out;
  out.id.assign(labels.size(), SIZE_MAX);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (out.id[i] != SIZE_MAX)
      continue;
    const std::size_t orbit = out.largest.size();
    out.largest.push_back(labels[i]);
    for (const auto& g : autos) {
      auto image = apply_automorphism(g, labels[i]);
      auto it = index.find(image);
      if (it == index.end())
        throw std::logic_error("automorphism image is not a valid label");
      out.id[it->second] = orbit;
      if (flat_less(out.largest[orbit], image))
        out.largest[orbit] = std::move(image);
    }
  }
  return out;
}

}  // namespace

std::vector<NodeMap> tree_automorphisms(const RVector& r, std::uint64_t cap)
{
  const BigNat count = automorphism_count(r, r.height());
  if (count > cap)
    throw CapExceeded("tree has " + count.str() + " automorphisms, cap is " +
                      std::to_string(cap));
  return automorphisms_at(r, r.height());
}

std::vector<NodeValue> apply_automorphism(const NodeMap& g, std::span<const NodeValue> flat)
{
  if (g.size() != flat.size())
    throw std::invalid_argument("automorphism and label sizes differ");
  std::vector<NodeValue> out;
  out.reserve(flat.size());
  for (auto v : g)
    out.push_back(flat[v]);
  return out;
}

std::vector<std::vector<NodeValue>> all_valid_labels(const RVector& r,
                                                     const Caps& caps)
{
  std::vector<std::vector<NodeValue>> labels;
  for (auto& p : partitions(r.r(1)))
    labels.push_back({NodeValue(std::move(p))});

  for (std::size_t level = 2; level <= r.height(); ++level) {
    const auto autos = tree_automorphisms(r.prefix(level - 1), caps.automorphisms);
    const Orbits orbits = orbits_of(labels, autos);

    // rank 0 is the orbit with the largest member
    std::vector<std::size_t> by_size(orbits.largest.size());
    std::iota(by_size.begin(), by_size.end(), std::size_t{0});
    std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
      return flat_less(orbits.largest[b], orbits.largest[a]);
    });
    std::vector<std::size_t> rank(by_size.size());
    for (std::size_t i = 0; i < by_size.size(); ++i)
      rank[by_size[i]] = i;

    const std::uint32_t n = r.r(level);
    std::vector<std::vector<NodeValue>> next;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
      std::map<std::size_t, std::uint32_t> class_sizes;  // rank -> size
      for (auto c : pick)
        ++class_sizes[rank[orbits.id[c]]];
      std::vector<std::uint32_t> alpha;
      for (const auto& [rk, size] : class_sizes)
        alpha.push_back(size);

      for (auto& shapes : shape_tuples(alpha)) {
        std::vector<NodeValue> flat{NodeValue(YoungIrrep(std::move(shapes)))};
        for (auto c : pick)
          flat.insert(flat.end(), labels[c].begin(), labels[c].end());
        next.push_back(std::move(flat));
        if (next.size() > caps.labels)
          throw CapExceeded("more than " + std::to_string(caps.labels) +
                            " valid labels");
      }

      std::size_t pos = n;
      while (pos > 0 && ++pick[pos - 1] == labels.size())
        pick[--pos] = 0;
      if (pos == 0)
        break;
    }
    labels = std::move(next);
  }
  return labels;
}

BigNat orbit_count_bruteforce(const RVector& r, const Caps& caps)
{
  const auto autos = tree_automorphisms(r, caps.automorphisms);
  const auto labels = all_valid_labels(r, caps);
  return BigNat(orbits_of(labels, autos).largest.size());
}

}  // namespace wreath::oracle

#include "mtcrank/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mtcrank/errors.hpp"

namespace mtcrank
{

std::size_t FiniteGroup::Hash::operator()(ElementIndex i) const
{
  return hash_images(group->elements_[i].images());
}

std::size_t FiniteGroup::Hash::operator()(std::span<Point const> images) const
{
  return hash_images(images);
}

bool FiniteGroup::Equal::operator()(ElementIndex a, std::span<Point const> b) const
{
  auto images = group->elements_[a].images();
  return std::equal(images.begin(), images.end(), b.begin(), b.end());
}

FiniteGroup::FiniteGroup(std::size_t degree)
  : degree_(degree),
    index_(16, Hash{this}, Equal{this})
{}

FiniteGroup::FiniteGroup(FiniteGroup const &other)
  : degree_(other.degree_),
    elements_(other.elements_),
    generators_(other.generators_),
    index_(16, Hash{this}, Equal{this})
{
  rebind();
}

FiniteGroup &FiniteGroup::operator=(FiniteGroup const &other)
{
  if (this != &other) {
    degree_ = other.degree_;
    elements_ = other.elements_;
    generators_ = other.generators_;
    rebind();
  }
  return *this;
}

FiniteGroup::FiniteGroup(FiniteGroup &&other) noexcept
  : degree_(other.degree_),
    elements_(std::move(other.elements_)),
    generators_(std::move(other.generators_)),
    index_(std::move(other.index_))
{
  rebind();
}

FiniteGroup &FiniteGroup::operator=(FiniteGroup &&other) noexcept
{
  degree_ = other.degree_;
  elements_ = std::move(other.elements_);
  generators_ = std::move(other.generators_);
  index_ = std::move(other.index_);
  rebind();
  return *this;
}

void FiniteGroup::rebind()
{
  // the hash functors point at their owning group; re-seat them after a move
  std::unordered_set<ElementIndex, Hash, Equal> fresh(
    std::max<std::size_t>(16, elements_.size()), Hash{this}, Equal{this});
  for (std::size_t i = 0; i < elements_.size(); ++i)
    fresh.insert(i);
  index_ = std::move(fresh);
}

std::optional<ElementIndex> FiniteGroup::index_of(std::span<Point const> images) const
{
  if (images.size() != degree_)
    return std::nullopt;

  auto it = index_.find(images);
  if (it == index_.end())
    return std::nullopt;
  return *it;
}

std::optional<ElementIndex> FiniteGroup::index_of(Permutation const &p) const
{
  return index_of(p.images());
}

std::optional<ElementIndex> FiniteGroup::generator(std::string_view name) const
{
  for (auto const &[gen_name, index] : generators_) {
    if (gen_name == name)
      return index;
  }
  return std::nullopt;
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const
{
  return *index_of(compose(element(a), element(b)));
}

ElementIndex FiniteGroup::invert(ElementIndex a) const
{
  return *index_of(inverse(element(a)));
}

FiniteGroup generate_group(std::size_t degree,
                           std::vector<NamedPermutation> const &generators,
                           std::size_t cap)
{
  if (degree == 0)
    throw InvalidDegree("group degree must be at least 1");

  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[i].name == generators[j].name)
        throw InputError("duplicate generator name '" + generators[i].name + "'");
    }
  }

  for (auto const &gen : generators) {
    if (gen.perm.degree() != degree)
      throw DegreeMismatch("generator '" + gen.name + "' has degree " +
                           std::to_string(gen.perm.degree()) + ", expected " +
                           std::to_string(degree));
  }

  FiniteGroup group(degree);
  group.elements_.push_back(identity(degree));
  group.index_.insert(0);

  for (std::size_t next = 0; next < group.elements_.size(); ++next) {
    for (auto const &gen : generators) {
      Permutation product = compose(gen.perm, group.elements_[next]);
      if (group.index_.find(product.images()) != group.index_.end())
        continue;

      if (group.elements_.size() >= cap)
        throw GroupTooLarge("group closure exceeds the cap of " +
                            std::to_string(cap) + " elements");

      group.elements_.push_back(std::move(product));
      group.index_.insert(group.elements_.size() - 1);
    }
  }

  for (auto const &gen : generators)
    group.generators_.emplace_back(gen.name, *group.index_of(gen.perm));

  return group;
}

ConjugacyClassPartition conjugacy_classes(FiniteGroup const &group)
{
  // Conjugating by the generators alone reaches the whole class, since every
  // element of a finite group is a positive word in the generators.
  std::vector<std::pair<Permutation, Permutation>> conjugators;
  for (auto const &gen : group.generators()) {
    Permutation const &g = group.element(gen.second);
    conjugators.emplace_back(g, inverse(g));
  }

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(group.size(), unassigned);

  ConjugacyClassPartition result;
  for (ElementIndex start = 0; start < group.size(); ++start) {
    if (class_of[start] != unassigned)
      continue;

    std::size_t id = result.classes.size();
    std::vector<ElementIndex> members{start};
    class_of[start] = id;

    for (std::size_t next = 0; next < members.size(); ++next) {
      Permutation const &h = group.element(members[next]);
      for (auto const &[k, k_inv] : conjugators) {
        ElementIndex conj = *group.index_of(compose(k, compose(h, k_inv)));
        if (class_of[conj] == unassigned) {
          class_of[conj] = id;
          members.push_back(conj);
        }
      }
    }

    std::sort(members.begin(), members.end());
    result.representatives.push_back(start);
    result.classes.push_back(std::move(members));
  }
  return result;
}

std::vector<std::vector<Point>> orbits(FiniteGroup const &group)
{
  std::size_t const degree = group.degree();
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<Point>> result;

  for (Point start = 0; start < degree; ++start) {
    if (seen[start])
      continue;

    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t next = 0; next < orbit.size(); ++next) {
      for (auto const &gen : group.generators()) {
        Point y = group.element(gen.second)[orbit[next]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

} // namespace mtcrank

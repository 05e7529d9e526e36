#ifndef MTCRANK_GROUP_HPP
#define MTCRANK_GROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mtcrank/perm.hpp"

namespace mtcrank
{

inline constexpr std::size_t default_group_cap = 1'000'000;

/// Index of an element inside a FiniteGroup. The identity is always 0.
using ElementIndex = std::size_t;

struct NamedPermutation
{
  std::string name;
  Permutation perm;
};

/// A permutation group materialized as its full element list.
///
/// Elements are stored in discovery order of a breadth-first closure starting
/// at the identity, so element 0 is always the identity. Each named generator
/// is recorded with the index of the element it equals.
class FiniteGroup
{
public:
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }

  Permutation const &element(ElementIndex i) const { return elements_.at(i); }
  std::span<Permutation const> elements() const { return elements_; }

  std::optional<ElementIndex> index_of(Permutation const &p) const;
  std::optional<ElementIndex> index_of(std::span<Point const> images) const;

  std::span<std::pair<std::string, ElementIndex> const> generators() const
  {
    return generators_;
  }
  std::optional<ElementIndex> generator(std::string_view name) const;

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex invert(ElementIndex a) const;

private:
  friend FiniteGroup generate_group(std::size_t, std::vector<NamedPermutation> const &,
                                    std::size_t);

  struct Hash
  {
    using is_transparent = void;
    FiniteGroup const *group;
    std::size_t operator()(ElementIndex i) const;
    std::size_t operator()(std::span<Point const> images) const;
  };
  struct Equal
  {
    using is_transparent = void;
    FiniteGroup const *group;
    bool operator()(ElementIndex a, ElementIndex b) const { return a == b; }
    bool operator()(ElementIndex a, std::span<Point const> b) const;
    bool operator()(std::span<Point const> a, ElementIndex b) const
    {
      return (*this)(b, a);
    }
  };

  explicit FiniteGroup(std::size_t degree);

public:
  FiniteGroup(FiniteGroup const &other);
  FiniteGroup(FiniteGroup &&other) noexcept;
  FiniteGroup &operator=(FiniteGroup const &other);
  FiniteGroup &operator=(FiniteGroup &&other) noexcept;

private:
  void rebind();

  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<std::pair<std::string, ElementIndex>> generators_;
  std::unordered_set<ElementIndex, Hash, Equal> index_;
};

/// Closure of `generators` under composition. Throws GroupTooLarge once the
/// closure exceeds `cap` elements and DegreeMismatch if a generator has the
/// wrong degree.
FiniteGroup generate_group(std::size_t degree,
                           std::vector<NamedPermutation> const &generators,
                           std::size_t cap = default_group_cap);

struct ConjugacyClassPartition
{
  /// Element indices of each class, ascending. Classes are ordered by their
  /// smallest element index.
  std::vector<std::vector<ElementIndex>> classes;
  /// Smallest element index of each class.
  std::vector<ElementIndex> representatives;
};

ConjugacyClassPartition conjugacy_classes(FiniteGroup const &group);

/// Orbits of the natural action on {0, ..., degree-1}, each sorted, ordered by
/// minimal point.
std::vector<std::vector<Point>> orbits(FiniteGroup const &group);

} // namespace mtcrank

#endif

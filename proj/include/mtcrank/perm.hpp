#ifndef MTCRANK_PERM_HPP
#define MTCRANK_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtcrank
{

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Position i holds the image of point i.
class Permutation
{
public:
  /// Throws InvalidDegree for an empty image list and InvalidPermutation if
  /// `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles; unmentioned points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

/// Canonical cycle form: every point appears in exactly one cycle, fixed
/// points as 1-cycles, each cycle starting at its minimal point, cycles sorted
/// by minimal point.
struct CycleDecomposition
{
  std::vector<std::vector<Point>> cycles;

  std::size_t num_cycles() const { return cycles.size(); }
};

Permutation identity(std::size_t degree);

/// Composition with the right argument applied first:
/// compose(p, q)[i] == p[q[i]].
Permutation compose(Permutation const &p, Permutation const &q);

Permutation inverse(Permutation const &p);

CycleDecomposition cycle_decomposition(Permutation const &p);

std::vector<Point> fixed_points(Permutation const &p);

std::size_t order(Permutation const &p);

std::size_t hash_images(std::span<Point const> images) noexcept;

// Cycle notation. Points are 1-indexed in text: "(1 2 3)(4 5)". The empty
// string is the identity, points not mentioned are fixed, and a point that
// occurs twice is a ParseError.

Permutation parse_cycle_notation(std::string_view text, std::size_t degree);

/// Same grammar with an arbitrary token resolver, e.g. label names.
/// The resolver throws on unknown tokens.
Permutation parse_cycle_notation(std::string_view text, std::size_t degree,
                                 std::function<Point(std::string_view)> const &resolve);

/// Omits 1-cycles; the identity renders as the empty string.
std::string to_cycle_notation(Permutation const &p);

std::string to_cycle_notation(Permutation const &p,
                              std::span<std::string const> names);

} // namespace mtcrank

template<>
struct std::hash<mtcrank::Permutation>
{
  std::size_t operator()(mtcrank::Permutation const &p) const noexcept
  {
    return mtcrank::hash_images(p.images());
  }
};

#endif

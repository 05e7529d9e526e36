#include "mtcrank/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "mtcrank/errors.hpp"

namespace mtcrank
{

Permutation::Permutation(std::vector<Point> images)
  : images_(std::move(images))
{
  if (images_.empty())
    throw InvalidDegree("permutation degree must be at least 1");

  std::vector<bool> seen(images_.size(), false);
  for (Point image : images_) {
    if (image >= images_.size() || seen[image])
      throw InvalidPermutation("image list is not a bijection");
    seen[image] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  if (degree == 0)
    throw InvalidDegree("permutation degree must be at least 1");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});

  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw InvalidPermutation("point " + std::to_string(x + 1) +
                                 " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw InvalidPermutation("point " + std::to_string(x + 1) +
                                 " occurs more than once");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation identity(std::size_t degree)
{
  if (degree == 0)
    throw InvalidDegree("permutation degree must be at least 1");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));

  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[i] = p[q[i]];
  return Permutation(std::move(images));
}

Permutation inverse(Permutation const &p)
{
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[p[i]] = i;
  return Permutation(std::move(images));
}

CycleDecomposition cycle_decomposition(Permutation const &p)
{
  CycleDecomposition result;
  std::vector<bool> done(p.degree(), false);

  // scanning in increasing order makes each cycle start at its minimum
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start])
      continue;

    std::vector<Point> cycle;
    for (Point x = start; !done[x]; x = p[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

std::vector<Point> fixed_points(Permutation const &p)
{
  std::vector<Point> result;
  for (Point i = 0; i < p.degree(); ++i) {
    if (p[i] == i)
      result.push_back(i);
  }
  return result;
}

std::size_t order(Permutation const &p)
{
  std::size_t result = 1;
  for (auto const &cycle : cycle_decomposition(p).cycles)
    result = std::lcm(result, cycle.size());
  return result;
}

std::size_t hash_images(std::span<Point const> images) noexcept
{
  // FNV-1a over the image words
  std::size_t h = 14695981039346656037ull;
  for (Point x : images) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

namespace
{

bool is_space(char c)
{
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string position_suffix(std::size_t pos)
{
  return " at position " + std::to_string(pos + 1);
}

} // namespace

Permutation parse_cycle_notation(std::string_view text, std::size_t degree,
                                 std::function<Point(std::string_view)> const &resolve)
{
  if (degree == 0)
    throw InvalidDegree("permutation degree must be at least 1");

  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && is_space(text[pos]))
      ++pos;
  };

  for (skip_space(); pos < text.size(); skip_space()) {
    if (text[pos] != '(')
      throw ParseError("expected '('" + position_suffix(pos));
    ++pos;

    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size())
        throw ParseError("unterminated cycle" + position_suffix(pos));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == '(')
        throw ParseError("nested '('" + position_suffix(pos));

      std::size_t begin = pos;
      while (pos < text.size() && !is_space(text[pos]) && text[pos] != '(' &&
             text[pos] != ')')
        ++pos;

      Point x = resolve(text.substr(begin, pos - begin));
      if (x >= degree)
        throw ParseError("point out of range" + position_suffix(begin));
      if (used[x])
        throw ParseError("repeated point" + position_suffix(begin));
      used[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }

  return Permutation::from_cycles(degree, cycles);
}

Permutation parse_cycle_notation(std::string_view text, std::size_t degree)
{
  auto resolve = [degree](std::string_view token) -> Point {
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("expected a positive integer, got '" + std::string(token) + "'");

    std::size_t value = std::stoul(std::string(token));
    if (value == 0 || value > degree)
      throw ParseError("point " + std::string(token) + " outside 1.." +
                       std::to_string(degree));
    return static_cast<Point>(value - 1);
  };
  return parse_cycle_notation(text, degree, resolve);
}

std::string to_cycle_notation(Permutation const &p, std::span<std::string const> names)
{
  std::ostringstream out;
  for (auto const &cycle : cycle_decomposition(p).cycles) {
    if (cycle.size() == 1)
      continue;

    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        out << ' ';
      out << names[cycle[i]];
    }
    out << ')';
  }
  return out.str();
}

std::string to_cycle_notation(Permutation const &p)
{
  std::vector<std::string> names(p.degree());
  for (std::size_t i = 0; i < names.size(); ++i)
    names[i] = std::to_string(i + 1);
  return to_cycle_notation(p, names);
}

} // namespace mtcrank

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mtcrank/errors.hpp"
#include "mtcrank/group.hpp"
#include "mtcrank/perm.hpp"
#include "support/power.hpp"

using namespace mtcrank;
using mtcrank::testing::random_permutation;
using mtcrank::testing::random_sparse_permutation;

namespace
{

Permutation cyc(std::size_t degree, std::string_view text)
{
  return parse_cycle_notation(text, degree);
}

std::vector<Point> images_of(Permutation const &p)
{
  return {p.images().begin(), p.images().end()};
}

std::set<std::vector<Point>> element_set(FiniteGroup const &g)
{
  std::set<std::vector<Point>> result;
  for (auto const &e : g.elements())
    result.insert(images_of(e));
  return result;
}

// O(|G|^2) conjugation over every group element
std::vector<std::set<ElementIndex>> brute_force_classes(FiniteGroup const &g)
{
  std::vector<std::set<ElementIndex>> classes;
  std::vector<bool> done(g.size(), false);
  for (ElementIndex h = 0; h < g.size(); ++h) {
    if (done[h])
      continue;
    std::set<ElementIndex> cls;
    for (auto const &k : g.elements()) {
      ElementIndex c = *g.index_of(compose(k, compose(g.element(h), inverse(k))));
      cls.insert(c);
      done[c] = true;
    }
    classes.push_back(cls);
  }
  return classes;
}

std::vector<std::size_t> sorted_sizes(ConjugacyClassPartition const &p)
{
  std::vector<std::size_t> sizes;
  for (auto const &c : p.classes)
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

FiniteGroup symmetric(std::size_t n)
{
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return generate_group(n, {{"t", Permutation::from_cycles(n, {{0, 1}})},
                            {"c", Permutation::from_cycles(n, {all})}});
}

} // namespace

TEST_CASE("identity")
{
  CHECK(images_of(identity(3)) == std::vector<Point>{0, 1, 2});
  CHECK(images_of(identity(1)) == std::vector<Point>{0});
  CHECK_THROWS_AS(identity(0), InvalidDegree);

  std::mt19937_64 rng(7);
  auto p = random_permutation(4, rng);
  CHECK(compose(identity(4), p) == p);
  CHECK(compose(p, identity(4)) == p);
}

TEST_CASE("permutation constructor rejects non-bijections")
{
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 3}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{}), InvalidDegree);
}

TEST_CASE("compose applies the right argument first")
{
  Permutation swap01({1, 0});
  CHECK(compose(swap01, swap01) == identity(2));

  Permutation p({1, 2, 0}); // 0 -> 1 -> 2 -> 0
  Permutation q({1, 0, 2}); // 0 <-> 1
  CHECK(images_of(compose(p, q)) == std::vector<Point>{2, 1, 0});
  CHECK(images_of(compose(q, p)) == std::vector<Point>{0, 2, 1});

  CHECK(compose(p, compose(p, p)) == identity(3));
  CHECK(compose(p, p) != identity(3));
  CHECK(order(p) == 3);

  CHECK_THROWS_AS(compose(identity(2), identity(3)), DegreeMismatch);
}

TEST_CASE("inverse")
{
  CHECK(inverse(identity(5)) == identity(5));
  CHECK(images_of(inverse(Permutation({1, 2, 0}))) == std::vector<Point>{2, 0, 1});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_permutation(8, rng);
    CHECK(compose(inverse(p), p) == identity(8));
    CHECK(compose(p, inverse(p)) == identity(8));
  }
}

TEST_CASE("cycle decomposition")
{
  auto id = cycle_decomposition(identity(4));
  CHECK(id.cycles == std::vector<std::vector<Point>>{{0}, {1}, {2}, {3}});

  auto two = cycle_decomposition(cyc(4, "(1 2)(3 4)"));
  CHECK(two.cycles == std::vector<std::vector<Point>>{{0, 1}, {2, 3}});

  auto three = cycle_decomposition(cyc(4, "(1 2 3)"));
  CHECK(three.cycles == std::vector<std::vector<Point>>{{0, 1, 2}, {3}});
  CHECK(three.num_cycles() == 2);

  // canonical form: minimal point first
  auto shifted = cycle_decomposition(cyc(5, "(5 3 4)"));
  CHECK(shifted.cycles == std::vector<std::vector<Point>>{{0}, {1}, {2, 3, 4}});
}

TEST_CASE("cycle decomposition round-trips and partitions the points")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t degree = 1 + rng() % 12;
    auto p = random_permutation(degree, rng);
    auto d = cycle_decomposition(p);

    std::vector<Point> seen;
    for (auto const &c : d.cycles) {
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
      seen.insert(seen.end(), c.begin(), c.end());
    }
    std::sort(seen.begin(), seen.end());
    std::vector<Point> all(degree);
    std::iota(all.begin(), all.end(), Point{0});
    CHECK(seen == all);
    CHECK(std::is_sorted(d.cycles.begin(), d.cycles.end(),
                         [](auto const &a, auto const &b) { return a.front() < b.front(); }));

    CHECK(Permutation::from_cycles(degree, d.cycles) == p);
  }
}

TEST_CASE("fixed points")
{
  CHECK(fixed_points(identity(7)).size() == 7);
  CHECK(fixed_points(cyc(4, "(1 2)")) == std::vector<Point>{2, 3});
  CHECK(fixed_points(cyc(6, "(1 2 3)(4 5)")) == std::vector<Point>{5});
}

TEST_CASE("cycle notation")
{
  CHECK(cyc(5, "") == identity(5));
  CHECK(cyc(5, "   ") == identity(5));
  CHECK(cyc(5, "( 1 2 3 )  (4 5)") == cyc(5, "(1 2 3)(4 5)"));
  CHECK(images_of(cyc(5, "(1 2 3)(4 5)")) == std::vector<Point>{1, 2, 0, 4, 3});

  CHECK_THROWS_AS(cyc(5, "(1 2 1)"), ParseError);
  CHECK_THROWS_AS(cyc(5, "(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(cyc(5, "(1 6)"), ParseError);
  CHECK_THROWS_AS(cyc(5, "(0 1)"), ParseError);
  CHECK_THROWS_AS(cyc(5, "(1 2"), ParseError);
  CHECK_THROWS_AS(cyc(5, "1 2)"), ParseError);
  CHECK_THROWS_AS(cyc(5, "(1 (2))"), ParseError);
  CHECK_THROWS_AS(cyc(5, "(a b)"), ParseError);

  CHECK(to_cycle_notation(identity(3)).empty());
  CHECK(to_cycle_notation(cyc(5, "(5 3 4)(1 2)")) == "(1 2)(3 4 5)");

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_permutation(9, rng);
    CHECK(cyc(9, to_cycle_notation(p)) == p);
  }
}

TEST_CASE("generate_group")
{
  SUBCASE("S_3 from a transposition and a 3-cycle")
  {
    auto g = generate_group(3, {{"t", cyc(3, "(1 2)")}, {"c", cyc(3, "(1 2 3)")}});
    CHECK(g.size() == 6);

    std::set<std::vector<Point>> all;
    std::vector<Point> p{0, 1, 2};
    do
      all.insert(p);
    while (std::next_permutation(p.begin(), p.end()));
    CHECK(element_set(g) == all);

    CHECK(g.element(0) == identity(3));
    CHECK(g.element(*g.generator("t")) == cyc(3, "(1 2)"));
    CHECK_FALSE(g.generator("missing"));
  }

  SUBCASE("no generators")
  {
    auto g = generate_group(4, {});
    CHECK(g.size() == 1);
    CHECK(g.element(0) == identity(4));
  }

  SUBCASE("cyclic group of a 5-cycle")
  {
    auto c = cyc(5, "(1 2 3 4 5)");
    auto g = generate_group(5, {{"c", c}});
    CHECK(g.size() == 5);

    std::set<std::vector<Point>> powers;
    Permutation power = identity(5);
    for (int k = 0; k < 5; ++k) {
      powers.insert(images_of(power));
      power = compose(c, power);
    }
    CHECK(element_set(g) == powers);
  }

  SUBCASE("errors")
  {
    CHECK_THROWS_AS(generate_group(3, {{"t", cyc(4, "(1 2)")}}), DegreeMismatch);
    CHECK_THROWS_AS(
      generate_group(6, {{"t", cyc(6, "(1 2)")}, {"c", cyc(6, "(1 2 3 4 5 6)")}}, 100),
      GroupTooLarge);
    CHECK_THROWS_AS(generate_group(3, {{"t", cyc(3, "(1 2)")}, {"t", cyc(3, "(2 3)")}}),
                    InputError);
  }

  SUBCASE("index lookup, multiplication and copies")
  {
    auto g = symmetric(4);
    CHECK(g.size() == 24);
    for (ElementIndex a = 0; a < g.size(); ++a) {
      CHECK(*g.index_of(g.element(a)) == a);
      CHECK(g.multiply(a, g.invert(a)) == 0);
    }
    CHECK_FALSE(g.index_of(identity(5)));

    FiniteGroup copy = g;
    FiniteGroup moved = std::move(g);
    for (ElementIndex a = 0; a < copy.size(); ++a) {
      CHECK(*copy.index_of(copy.element(a)) == a);
      CHECK(*moved.index_of(moved.element(a)) == a);
    }
  }
}

TEST_CASE("generate_group does not depend on generator order")
{
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t degree = 2 + rng() % 6;
    std::vector<NamedPermutation> gens;
    std::size_t count = rng() % 4;
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back({"g" + std::to_string(i), random_permutation(degree, rng)});

    auto forward = generate_group(degree, gens);
    std::reverse(gens.begin(), gens.end());
    auto backward = generate_group(degree, gens);
    CHECK(element_set(forward) == element_set(backward));
  }
}

TEST_CASE("conjugacy classes")
{
  auto s3 = generate_group(3, {{"t", cyc(3, "(1 2)")}, {"c", cyc(3, "(1 2 3)")}});
  CHECK(sorted_sizes(conjugacy_classes(s3)) == std::vector<std::size_t>{1, 2, 3});

  auto z5 = generate_group(5, {{"c", cyc(5, "(1 2 3 4 5)")}});
  CHECK(sorted_sizes(conjugacy_classes(z5)) == std::vector<std::size_t>(5, 1));

  auto s4 = symmetric(4);
  auto classes = conjugacy_classes(s4);
  CHECK(sorted_sizes(classes) == std::vector<std::size_t>{1, 3, 6, 6, 8});

  std::vector<std::set<ElementIndex>> ours;
  for (auto const &c : classes.classes)
    ours.emplace_back(c.begin(), c.end());
  CHECK(ours == brute_force_classes(s4));

  // ordered by smallest element, representative is that element
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    CHECK(classes.representatives[c] == classes.classes[c].front());
    if (c > 0)
      CHECK(classes.classes[c - 1].front() < classes.classes[c].front());
  }
}

TEST_CASE("class equation on random groups")
{
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t degree = 1 + rng() % 7;
    std::vector<NamedPermutation> gens;
    for (std::size_t i = 0, count = rng() % 3; i < count; ++i)
      gens.push_back({"g" + std::to_string(i), random_permutation(degree, rng)});

    auto g = generate_group(degree, gens);
    auto classes = conjugacy_classes(g);
    std::size_t total = 0;
    for (auto const &c : classes.classes) {
      total += c.size();
      CHECK(g.size() % c.size() == 0);
    }
    CHECK(total == g.size());

    std::vector<std::set<ElementIndex>> ours;
    for (auto const &c : classes.classes)
      ours.emplace_back(c.begin(), c.end());
    CHECK(ours == brute_force_classes(g));
  }
}

TEST_CASE("orbits")
{
  CHECK(orbits(generate_group(3, {})) == std::vector<std::vector<Point>>{{0}, {1}, {2}});
  CHECK(orbits(generate_group(4, {{"t", cyc(4, "(1 2)")}})) ==
        std::vector<std::vector<Point>>{{0, 1}, {2}, {3}});
  CHECK(orbits(generate_group(3, {{"t", cyc(3, "(1 2)")}, {"c", cyc(3, "(1 2 3)")}})).size() ==
        1);
  CHECK(orbits(generate_group(6, {{"a", cyc(6, "(1 5)")}, {"b", cyc(6, "(5 3)(2 6)")}})) ==
        std::vector<std::vector<Point>>{{0, 2, 4}, {1, 5}, {3}});
}

TEST_CASE("Burnside identity on random groups")
{
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t degree = 1 + rng() % 10;
    std::vector<NamedPermutation> gens;
    for (std::size_t i = 0, count = rng() % 4; i < count; ++i)
      gens.push_back({"g" + std::to_string(i), random_sparse_permutation(degree, 4, rng)});

    FiniteGroup g = [&] {
      try {
        return generate_group(degree, gens, 10'000);
      } catch (GroupTooLarge const &) {
        return generate_group(degree, {});
      }
    }();

    std::size_t fixed = 0;
    for (auto const &e : g.elements())
      fixed += fixed_points(e).size();
    CHECK(fixed == g.size() * orbits(g).size());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mtcrank/errors.hpp"
#include "mtcrank/rank.hpp"
#include "mtcrank/wreath.hpp"
#include "support/power.hpp"

using namespace mtcrank;
using mtcrank::testing::load_data;

namespace
{

GlobalSymmetry toric_swap()
{
  auto toric = load_data("toric_code.json");
  auto swap = parse_label_cycles(toric, "(e m)");
  return build_symmetry(std::move(toric), {{"swap_em", swap}});
}

// Orbit count by union-find over every (g, label) move, not just generators.
std::size_t union_find_orbits(GlobalSymmetry const &s)
{
  std::vector<std::size_t> parent(s.mtc.rank());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto const &g : s.group.elements())
    for (Point x = 0; x < g.degree(); ++x)
      parent[find(x)] = find(g[x]);

  std::size_t roots = 0;
  for (std::size_t x = 0; x < parent.size(); ++x)
    roots += find(x) == x;
  return roots;
}

} // namespace

TEST_CASE("graded_rank")
{
  auto s = toric_swap();
  CHECK(graded_rank(s, 0) == 4);
  CHECK(graded_rank(s, 1) == 2);
  CHECK_THROWS_AS(graded_rank(s, 2), UnknownElement);

  auto ising = build_symmetry(load_data("ising.json"), {});
  CHECK(graded_rank(ising, 0) == 3);
}

TEST_CASE("rank_report")
{
  SUBCASE("toric code with the e <-> m swap")
  {
    auto report = rank_report(toric_swap());
    CHECK(report.per_element == std::vector<BigInt>{4, 2});
    CHECK(report.total_rank == 6);
    CHECK(report.orbit_count == 3);
    CHECK(report.burnside_total == 6);
    CHECK(report.per_class.size() == 2);
  }

  SUBCASE("trivial group on Fibonacci")
  {
    auto report = rank_report(build_symmetry(load_data("fibonacci.json"), {}));
    CHECK(report.total_rank == 2);
    CHECK(report.orbit_count == 2);
  }

  SUBCASE("Ising x Ising with the factor swap")
  {
    auto s = testing::wreath_symmetry(load_data("ising.json"),
                                      materialize(parse_group_spec("z2", 2)));
    CHECK(s.mtc.rank() == 9);
    auto report = rank_report(s);
    CHECK(report.per_element == std::vector<BigInt>{9, 3});
    CHECK(report.total_rank == 12);
    CHECK(report.total_rank == evaluate(rank_polynomial_symmetric(2), 3));

    auto fixed = fixed_points(s.group.element(1));
    std::vector<std::string> names;
    for (Point x : fixed)
      names.push_back(s.mtc.labels[x]);
    CHECK(names == std::vector<std::string>{"1.1", "sigma.sigma", "psi.psi"});
  }
}

TEST_CASE("rank report invariants on random symmetries")
{
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 60; ++trial) {
    auto s = testing::random_tensor_symmetry(rng);
    auto report = rank_report(s);

    CHECK(report.per_element[0] == s.mtc.rank());
    BigInt sum = 0;
    for (auto const &r : report.per_element)
      sum += r;
    CHECK(sum == report.total_rank);
    CHECK(report.total_rank == report.burnside_total);
    CHECK(report.orbit_count == union_find_orbits(s));

    std::size_t class_total = 0;
    for (auto const &c : report.per_class)
      class_total += c.class_size;
    CHECK(class_total == s.group.size());

    // conjugation invariance over all pairs (h, k)
    for (ElementIndex h = 0; h < s.group.size(); ++h) {
      for (ElementIndex k = 0; k < s.group.size(); ++k) {
        ElementIndex conj = s.group.multiply(k, s.group.multiply(h, s.group.invert(k)));
        CHECK(graded_rank(s, conj) == graded_rank(s, h));
      }
    }
  }
}

TEST_CASE("modular invariant matrices")
{
  auto s = toric_swap();

  auto id = modular_invariant(s, 0);
  CHECK(id.is_permutation_matrix());
  for (LabelIndex x = 0; x < 4; ++x)
    for (LabelIndex y = 0; y < 4; ++y)
      CHECK(id.at(x, y) == (x == y ? 1u : 0u));
  CHECK(trace(id) == 4);

  auto z = modular_invariant(s, 1);
  CHECK(z.is_permutation_matrix());
  CHECK(z.at(1, 2) == 1);
  CHECK(z.at(2, 1) == 1);
  CHECK(z.at(1, 1) == 0);
  CHECK(z.at(0, 0) == 1);
  CHECK(z.at(3, 3) == 1);
  CHECK(trace(z) == 2);

  CHECK_THROWS_AS(modular_invariant(s, 5), UnknownElement);

  // derangement
  ModularInvariantMatrix shift{3, {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 0}, 1}}};
  CHECK(shift.is_permutation_matrix());
  CHECK(trace(shift) == 0);
  ModularInvariantMatrix not_perm{2, {{{0, 0}, 2}, {{1, 1}, 1}}};
  CHECK_FALSE(not_perm.is_permutation_matrix());
}

TEST_CASE("trace of Z equals the graded rank")
{
  std::mt19937_64 rng(61);
  int pairs = 0;
  while (pairs < 100) {
    auto s = testing::random_tensor_symmetry(rng);
    BigInt total = 0;
    for (ElementIndex g = 0; g < s.group.size(); ++g) {
      auto z = modular_invariant(s, g);
      CHECK(z.is_permutation_matrix());
      CHECK(trace(z) == graded_rank(s, g));
      CHECK(z.transposed() == modular_invariant(s, s.group.invert(g)));
      total += trace(z);
      ++pairs;
    }
    CHECK(total == rank_report(s).total_rank);
  }
}

TEST_CASE("Lagrangian summands")
{
  auto fib = build_symmetry(load_data("fibonacci.json"), {});
  auto fib_summands = lagrangian_summands(fib, 0);
  CHECK(fib_summands.summands == std::vector<Summand>{{0, 0, 1}, {1, 1, 1}});
  CHECK(fib_summands.total_multiplicity() == 2);

  auto s = toric_swap();
  auto swapped = lagrangian_summands(s, 1);
  CHECK(swapped.summands == std::vector<Summand>{{0, 0, 1}, {1, 2, 1}, {2, 1, 1}, {3, 3, 1}});
  CHECK_THROWS_AS(lagrangian_summands(s, 9), UnknownElement);

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = testing::random_tensor_symmetry(rng);
    for (ElementIndex g = 0; g < r.group.size(); ++g) {
      auto z = modular_invariant(r, g);
      auto from_z = full_center(r.mtc, z);
      auto direct = lagrangian_summands(r, g);

      auto key = [](Summand const &a, Summand const &b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
      };
      std::sort(from_z.summands.begin(), from_z.summands.end(), key);
      std::sort(direct.summands.begin(), direct.summands.end(), key);
      CHECK(from_z.summands == direct.summands);
      CHECK(direct.total_multiplicity() == r.mtc.rank());
    }
  }
}

TEST_CASE("per-class ranks of Fibonacci cubed under S_3")
{
  auto s = testing::wreath_symmetry(load_data("fibonacci.json"),
                                    materialize(parse_group_spec("s3", 3)));
  auto report = rank_report(s);
  CHECK(report.per_class.size() == 3);
  std::map<std::size_t, BigInt> by_size;
  for (auto const &c : report.per_class)
    by_size[c.class_size] = c.rank;
  // identity fixes all 8 tuples, transpositions 4, 3-cycles 2
  CHECK(by_size[1] == 8);
  CHECK(by_size[3] == 4);
  CHECK(by_size[2] == 2);
  CHECK(report.total_rank == 8 + 3 * 4 + 2 * 2);
}

#ifndef MTCRANK_WREATH_HPP
#define MTCRANK_WREATH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtcrank/bigint.hpp"
#include "mtcrank/group.hpp"

namespace mtcrank
{

inline constexpr std::size_t max_partition_n = 60;
inline constexpr std::uint64_t brute_force_tuple_cap = 10'000'000;

/// Cycle type of a permutation of n points. a[j-1] counts the j-cycles,
/// 1-cycles included; class_size is the number of permutations of that type,
/// n! / prod_j (j^{a_j} a_j!).
struct CycleType
{
  std::size_t n = 0;
  std::vector<std::uint32_t> a;
  std::size_t num_cycles = 0;
  BigInt class_size;

  /// "1^2 2^1" style, parts in increasing length.
  std::string to_string() const;
};

/// Visits every cycle type of S_n in descending lexicographic order of a,
/// from the identity (n, 0, ..., 0) down to the n-cycle (0, ..., 0, 1).
/// Throws OutOfRange unless 1 <= n <= 60.
void for_each_cycle_type(std::size_t n, std::function<void(CycleType const &)> const &visit);

std::vector<CycleType> partitions(std::size_t n);

CycleType cycle_type_of(Permutation const &p);

/// Polynomial in rk(C) with big-integer coefficients; coefficients[k] belongs
/// to x^k.
struct RankPolynomial
{
  std::vector<BigInt> coefficients;

  /// Descending powers, e.g. "x^4 + 6x^3 + 11x^2 + 6x".
  std::string to_string() const;

  friend bool operator==(RankPolynomial const &, RankPolynomial const &) = default;
};

/// rk(C wr S_n) as a polynomial in rk(C): the coefficient of x^k sums the
/// class sizes of all cycle types with k cycles.
RankPolynomial rank_polynomial_symmetric(std::size_t n);

/// Throws OutOfRange for negative x.
BigInt evaluate(RankPolynomial const &poly, BigInt const &x);

bool is_prime(std::uint64_t n);

/// rk^n + (n - 1) rk, the rank of C wr Z_n for prime n. Throws NotPrime.
BigInt rank_wreath_cyclic_prime(BigInt const &rk, std::uint64_t n);

struct WreathClass
{
  CycleType cycle_type;
  BigInt class_size;
  BigInt contribution; // class_size * rk^{num_cycles}
  std::optional<ElementIndex> representative;
};

struct WreathRank
{
  BigInt total;
  BigInt group_order;
  std::vector<WreathClass> classes;
};

/// Rank of C wr G for G <= S_n, summed over the conjugacy classes of G.
/// Only the number of cycles of each class representative matters.
WreathRank rank_wreath_subgroup(BigInt const &rk, FiniteGroup const &group);

/// Rank of C wr S_n from the cycle types of S_n, without materializing the
/// group. Classes follow the order of for_each_cycle_type.
WreathRank rank_wreath_symmetric(BigInt const &rk, std::size_t n);

/// Independent check: enumerates all rk^n label tuples and counts those fixed
/// by each group element. Throws TooLarge when rk^n exceeds 10^7.
BigInt brute_force_wreath_rank(std::uint64_t rk, FiniteGroup const &group);

/// Group presets: "s<n>" symmetric, "a<n>" alternating, "z<n>" cyclic
/// (generated by the n-cycle), or explicit cycle-notation generators
/// separated by commas, e.g. "(1 2),(1 2 3 4)".
struct GroupSpec
{
  enum class Kind
  {
    symmetric,
    alternating,
    cyclic,
    explicit_generators
  };

  Kind kind;
  std::size_t degree;
  std::vector<NamedPermutation> generators;
};

/// `degree` is required for explicit generators and must agree with a preset
/// when both are given. Throws ParseError.
GroupSpec parse_group_spec(std::string_view text, std::optional<std::size_t> degree);

FiniteGroup materialize(GroupSpec const &spec, std::size_t cap = default_group_cap);

} // namespace mtcrank

#endif

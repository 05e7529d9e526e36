#ifndef MTCRANK_RANK_HPP
#define MTCRANK_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mtcrank/bigint.hpp"
#include "mtcrank/symmetry.hpp"

namespace mtcrank
{

struct ClassRank
{
  ElementIndex representative;
  std::size_t class_size;
  BigInt rank;
};

/// Ranks of the graded components of a G-crossed braided extension.
///
/// The rank of the component over g is the number of labels fixed by g. The
/// total is computed twice, as the sum of those counts and as |G| times the
/// number of orbits, and the two must agree.
struct RankReport
{
  std::vector<BigInt> per_element;      // indexed by ElementIndex
  std::vector<std::size_t> class_of;    // ElementIndex -> index into per_class
  std::vector<ClassRank> per_class;
  BigInt total_rank;
  std::size_t orbit_count = 0;
  BigInt burnside_total;
};

/// Throws UnknownElement for an index outside the group.
BigInt graded_rank(GlobalSymmetry const &s, ElementIndex g);

/// Throws InconsistencyError when the two totals disagree.
RankReport rank_report(GlobalSymmetry const &s);

/// Square non-negative integer matrix over the labels, stored sparsely.
struct ModularInvariantMatrix
{
  std::size_t size = 0;
  std::map<std::pair<LabelIndex, LabelIndex>, std::uint64_t> entries;

  std::uint64_t at(LabelIndex x, LabelIndex y) const;
  bool is_permutation_matrix() const;
  ModularInvariantMatrix transposed() const;

  friend bool operator==(ModularInvariantMatrix const &, ModularInvariantMatrix const &) = default;
};

/// Z_{X,Y} = 1 exactly when g sends X to Y.
ModularInvariantMatrix modular_invariant(GlobalSymmetry const &s, ElementIndex g);

BigInt trace(ModularInvariantMatrix const &z);

struct Summand
{
  LabelIndex left;
  LabelIndex right;
  std::uint64_t multiplicity;

  friend bool operator==(Summand const &, Summand const &) = default;
};

/// Object-level decomposition sum_{X,Y} Z_{X,Y} X [x] dual(Y).
struct FullCenterDecomposition
{
  std::vector<Summand> summands;

  std::uint64_t total_multiplicity() const;
};

/// One summand X [x] g(dual X) per label X.
FullCenterDecomposition lagrangian_summands(GlobalSymmetry const &s, ElementIndex g);

/// Same decomposition read off a modular invariant matrix.
FullCenterDecomposition full_center(ModularData const &m, ModularInvariantMatrix const &z);

} // namespace mtcrank

#endif

#ifndef MTCRANK_SYMMETRY_HPP
#define MTCRANK_SYMMETRY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mtcrank/errors.hpp"
#include "mtcrank/group.hpp"
#include "mtcrank/mtc.hpp"

namespace mtcrank
{

/// A finite group of permutations of the labels of `mtc`, each of which fixes
/// the unit and preserves duals, fusion coefficients and twists.
///
/// These are necessary conditions for a permutation to come from a braided
/// autoequivalence; sufficiency cannot be decided from fusion data alone.
struct GlobalSymmetry
{
  ModularData mtc;
  FiniteGroup group;
};

class NotAnAutomorphism : public DomainError
{
public:
  NotAnAutomorphism(std::string generator, ValidationReport report);

  std::string const &generator() const { return generator_; }
  ValidationReport const &report() const { return report_; }

private:
  std::string generator_;
  ValidationReport report_;
};

/// Rules: "unit", "dual", "fusion", "twist". Throws DegreeMismatch.
ValidationReport validate_automorphism(ModularData const &m, Permutation const &p);

GlobalSymmetry build_symmetry(ModularData m, std::vector<NamedPermutation> const &generators,
                              std::size_t cap = default_group_cap);

/// Parsed symmetry file, before the group is built.
struct SymmetrySpec
{
  ModularData mtc;
  std::vector<NamedPermutation> generators;
};

/// Reads the symmetry JSON format. `mtc` overrides the document's own "mtc"
/// entry; a relative "mtc" path resolves against `base_dir`.
SymmetrySpec parse_symmetry(std::string_view text, std::string const &base_dir,
                            ModularData const *mtc = nullptr);
SymmetrySpec load_symmetry(std::string const &path, ModularData const *mtc = nullptr);

/// A permutation of the labels written in cycle notation over label names,
/// e.g. "(e m)".
Permutation parse_label_cycles(ModularData const &m, std::string_view text);

} // namespace mtcrank

#endif

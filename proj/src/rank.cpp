#include "mtcrank/rank.hpp"

#include <string>

namespace mtcrank
{

namespace
{

void check_element(GlobalSymmetry const &s, ElementIndex g)
{
  if (g >= s.group.size())
    throw UnknownElement("element index " + std::to_string(g) + " outside a group of order " +
                         std::to_string(s.group.size()));
}

} // namespace

BigInt graded_rank(GlobalSymmetry const &s, ElementIndex g)
{
  check_element(s, g);
  return BigInt(fixed_points(s.group.element(g)).size());
}

RankReport rank_report(GlobalSymmetry const &s)
{
  RankReport report;
  std::size_t const order = s.group.size();

  report.per_element.reserve(order);
  for (ElementIndex g = 0; g < order; ++g) {
    report.per_element.push_back(graded_rank(s, g));
    report.total_rank += report.per_element.back();
  }

  auto classes = conjugacy_classes(s.group);
  report.class_of.resize(order);
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    ElementIndex rep = classes.representatives[c];
    for (ElementIndex g : classes.classes[c]) {
      report.class_of[g] = c;
      if (report.per_element[g] != report.per_element[rep])
        throw InconsistencyError("conjugate elements have different graded ranks");
    }
    report.per_class.push_back({rep, classes.classes[c].size(), report.per_element[rep]});
  }

  report.orbit_count = orbits(s.group).size();
  report.burnside_total = BigInt(order) * report.orbit_count;

  if (report.total_rank != report.burnside_total)
    throw InconsistencyError("sum of fixed points " + to_string(report.total_rank) +
                             " differs from |G| * orbits = " +
                             to_string(report.burnside_total));
  return report;
}

std::uint64_t ModularInvariantMatrix::at(LabelIndex x, LabelIndex y) const
{
  auto it = entries.find({x, y});
  return it == entries.end() ? 0 : it->second;
}

bool ModularInvariantMatrix::is_permutation_matrix() const
{
  std::vector<int> rows(size, 0), cols(size, 0);
  for (auto const &[key, value] : entries) {
    if (value != 1)
      return false;
    ++rows[key.first];
    ++cols[key.second];
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (rows[i] != 1 || cols[i] != 1)
      return false;
  }
  return true;
}

ModularInvariantMatrix ModularInvariantMatrix::transposed() const
{
  ModularInvariantMatrix result{size, {}};
  for (auto const &[key, value] : entries)
    result.entries.emplace(std::pair{key.second, key.first}, value);
  return result;
}

ModularInvariantMatrix modular_invariant(GlobalSymmetry const &s, ElementIndex g)
{
  check_element(s, g);
  Permutation const &p = s.group.element(g);

  ModularInvariantMatrix z{p.degree(), {}};
  for (LabelIndex x = 0; x < p.degree(); ++x)
    z.entries.emplace(std::pair{x, static_cast<LabelIndex>(p[x])}, 1);
  return z;
}

BigInt trace(ModularInvariantMatrix const &z)
{
  BigInt result = 0;
  for (LabelIndex x = 0; x < z.size; ++x)
    result += z.at(x, x);
  return result;
}

std::uint64_t FullCenterDecomposition::total_multiplicity() const
{
  std::uint64_t total = 0;
  for (auto const &s : summands)
    total += s.multiplicity;
  return total;
}

FullCenterDecomposition lagrangian_summands(GlobalSymmetry const &s, ElementIndex g)
{
  check_element(s, g);
  Permutation const &p = s.group.element(g);

  FullCenterDecomposition result;
  for (LabelIndex x = 0; x < s.mtc.rank(); ++x)
    result.summands.push_back({x, p[s.mtc.dual[x]], 1});
  return result;
}

FullCenterDecomposition full_center(ModularData const &m, ModularInvariantMatrix const &z)
{
  FullCenterDecomposition result;
  for (auto const &[key, value] : z.entries) {
    if (value != 0)
      result.summands.push_back({key.first, m.dual[key.second], value});
  }
  return result;
}

} // namespace mtcrank

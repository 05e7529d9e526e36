#include "mtcrank/symmetry.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mtcrank
{

using Json = nlohmann::ordered_json;

NotAnAutomorphism::NotAnAutomorphism(std::string generator, ValidationReport report)
  : DomainError("generator '" + generator + "' is not a fusion-ring automorphism (" +
                std::to_string(report.violations.size()) + " violations)"),
    generator_(std::move(generator)),
    report_(std::move(report))
{}

ValidationReport validate_automorphism(ModularData const &m, Permutation const &p)
{
  if (p.degree() != m.rank())
    throw DegreeMismatch("permutation of degree " + std::to_string(p.degree()) +
                         " cannot act on " + std::to_string(m.rank()) + " labels");

  ValidationReport report;
  auto const &L = m.labels;

  if (p[m.unit] != m.unit)
    report.violations.push_back(
      {"unit", {m.unit}, "unit " + L[m.unit] + " is sent to " + L[p[m.unit]]});

  for (LabelIndex x = 0; x < m.rank(); ++x) {
    if (p[m.dual[x]] != m.dual[p[x]])
      report.violations.push_back(
        {"dual", {x}, "g(dual(" + L[x] + ")) = " + L[p[m.dual[x]]] + " but dual(g(" + L[x] +
                        ")) = " + L[m.dual[p[x]]]});
  }

  // p is a bijection on triples, so checking that every nonzero coefficient
  // maps to an equal coefficient covers the zero ones too
  for (auto const &[key, n] : m.fusion) {
    auto const &[x, y, z] = key;
    std::uint64_t image = m.N(p[x], p[y], p[z]);
    if (image != n)
      report.violations.push_back(
        {"fusion", {x, y, z},
         "N(" + L[x] + ", " + L[y] + ")^" + L[z] + " = " + std::to_string(n) + " but N(" +
           L[p[x]] + ", " + L[p[y]] + ")^" + L[p[z]] + " = " + std::to_string(image)});
  }

  for (LabelIndex x = 0; x < m.rank(); ++x) {
    if (m.twists[p[x]] != m.twists[x])
      report.violations.push_back(
        {"twist", {x}, "twist of " + L[x] + " differs from twist of its image " + L[p[x]]});
  }

  return report;
}

GlobalSymmetry build_symmetry(ModularData m, std::vector<NamedPermutation> const &generators,
                              std::size_t cap)
{
  for (auto const &gen : generators) {
    auto report = validate_automorphism(m, gen.perm);
    if (!report.ok())
      throw NotAnAutomorphism(gen.name, std::move(report));
  }

  FiniteGroup group = generate_group(m.rank(), generators, cap);

  for (auto const &element : group.elements()) {
    if (!validate_automorphism(m, element).ok())
      throw InconsistencyError("group element " + to_cycle_notation(element, m.labels) +
                               " fails validation although every generator passes");
  }

  return GlobalSymmetry{std::move(m), std::move(group)};
}

Permutation parse_label_cycles(ModularData const &m, std::string_view text)
{
  return parse_cycle_notation(text, m.rank(), [&m](std::string_view token) {
    return static_cast<Point>(m.label_index(token));
  });
}

namespace
{

Permutation parse_generator(ModularData const &m, std::string const &name, Json const &value)
{
  if (value.is_string())
    return parse_label_cycles(m, value.get_ref<std::string const &>());

  if (!value.is_array())
    throw ParseError("generator '" + name +
                     "' must be a cycle string or an array of label images");
  if (value.size() != m.rank())
    throw ParseError("generator '" + name + "' lists " + std::to_string(value.size()) +
                     " images for " + std::to_string(m.rank()) + " labels");

  std::vector<Point> images;
  for (auto const &entry : value) {
    if (!entry.is_string())
      throw ParseError("generator '" + name + "' images must be label strings");
    images.push_back(static_cast<Point>(m.label_index(entry.get_ref<std::string const &>())));
  }
  try {
    return Permutation(std::move(images));
  } catch (InvalidPermutation const &) {
    throw ParseError("generator '" + name + "' is not a bijection of the labels");
  }
}

} // namespace

SymmetrySpec parse_symmetry(std::string_view text, std::string const &base_dir,
                            ModularData const *mtc)
{
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (Json::parse_error const &e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object())
    throw ParseError("top-level value must be an object");

  SymmetrySpec spec;
  if (mtc) {
    spec.mtc = *mtc;
  } else {
    auto it = doc.find("mtc");
    if (it == doc.end())
      throw ParseError("missing field 'mtc'");
    if (it->is_string()) {
      std::filesystem::path path(it->get_ref<std::string const &>());
      if (path.is_relative())
        path = std::filesystem::path(base_dir) / path;
      spec.mtc = load_mtc(path.string());
    } else if (it->is_object()) {
      spec.mtc = parse_mtc(it->dump());
    } else {
      throw ParseError("'mtc' must be a path or an inline document");
    }
  }

  auto it = doc.find("generators");
  if (it == doc.end())
    throw ParseError("missing field 'generators'");
  if (!it->is_object())
    throw ParseError("'generators' must be an object");

  for (auto const &[name, value] : it->items())
    spec.generators.push_back({name, parse_generator(spec.mtc, name, value)});

  return spec;
}

SymmetrySpec load_symmetry(std::string const &path, ModularData const *mtc)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_symmetry(buffer.str(), std::filesystem::path(path).parent_path().string(), mtc);
}

} // namespace mtcrank

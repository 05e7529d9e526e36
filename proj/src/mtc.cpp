#include "mtcrank/mtc.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mtcrank/errors.hpp"

namespace mtcrank
{

using Json = nlohmann::ordered_json;

Twist::Twist(std::int64_t numerator, std::int64_t denominator)
{
  if (denominator <= 0)
    throw InvalidRational("twist denominator must be positive, got " +
                          std::to_string(denominator));

  std::int64_t r = numerator % denominator;
  if (r < 0)
    r += denominator;
  std::int64_t g = std::gcd(r, denominator);
  num_ = r / g;
  den_ = denominator / g;
}

Twist operator+(Twist const &a, Twist const &b)
{
  std::int64_t den = std::lcm(a.denominator(), b.denominator());
  return Twist(a.numerator() * (den / a.denominator()) +
                 b.numerator() * (den / b.denominator()),
               den);
}

std::uint64_t ModularData::N(LabelIndex x, LabelIndex y, LabelIndex z) const
{
  auto it = fusion.find({x, y, z});
  return it == fusion.end() ? 0 : it->second;
}

std::optional<LabelIndex> ModularData::find_label(std::string_view label) const
{
  for (LabelIndex i = 0; i < labels.size(); ++i) {
    if (labels[i] == label)
      return i;
  }
  return std::nullopt;
}

LabelIndex ModularData::label_index(std::string_view label) const
{
  if (auto i = find_label(label))
    return *i;
  throw UnknownLabel("unknown label '" + std::string(label) + "'");
}

std::size_t ValidationReport::count(std::string_view rule) const
{
  return static_cast<std::size_t>(std::count_if(
    violations.begin(), violations.end(),
    [rule](Violation const &v) { return v.rule == rule; }));
}

namespace
{

Json const &require(Json const &object, char const *key)
{
  auto it = object.find(key);
  if (it == object.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string const &as_string(Json const &value, std::string const &what)
{
  if (!value.is_string())
    throw ParseError(what + " must be a string");
  return value.get_ref<std::string const &>();
}

std::int64_t as_int(Json const &value, std::string const &what)
{
  if (!value.is_number_integer())
    throw ParseError(what + " must be an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(what + " is too large");
  return value.get<std::int64_t>();
}

bool valid_label(std::string const &label)
{
  if (label.empty())
    return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r';
  });
}

ModularData from_json(Json const &doc)
{
  if (!doc.is_object())
    throw ParseError("top-level value must be an object");

  ModularData m;
  m.name = as_string(require(doc, "name"), "'name'");

  Json const &labels = require(doc, "labels");
  if (!labels.is_array() || labels.empty())
    throw ParseError("'labels' must be a non-empty array");
  for (auto const &entry : labels) {
    std::string const &label = as_string(entry, "label");
    if (!valid_label(label))
      throw ParseError("label '" + label +
                       "' must be non-empty without whitespace, parentheses or commas");
    if (m.find_label(label))
      throw DuplicateLabel("duplicate label '" + label + "'");
    m.labels.push_back(label);
  }

  m.unit = m.label_index(as_string(require(doc, "unit"), "'unit'"));

  Json const &fusion = require(doc, "fusion");
  if (!fusion.is_array())
    throw ParseError("'fusion' must be an array");
  for (std::size_t i = 0; i < fusion.size(); ++i) {
    Json const &entry = fusion[i];
    std::string where = "fusion entry " + std::to_string(i + 1);
    if (!entry.is_array() || entry.size() != 4)
      throw ParseError(where + " must be [x, y, z, n]");

    FusionKey key{m.label_index(as_string(entry[0], where)),
                  m.label_index(as_string(entry[1], where)),
                  m.label_index(as_string(entry[2], where))};
    std::int64_t n = as_int(entry[3], where + " multiplicity");
    if (n <= 0)
      throw ParseError(where + " multiplicity must be positive");
    if (!m.fusion.emplace(key, static_cast<std::uint64_t>(n)).second)
      throw ParseError(where + " repeats an earlier (x, y, z) triple");
  }

  Json const &twists = require(doc, "twists");
  if (!twists.is_object())
    throw ParseError("'twists' must be an object");
  std::vector<std::optional<Twist>> parsed(m.rank());
  for (auto const &[label, value] : twists.items()) {
    LabelIndex x = m.label_index(label);
    std::string where = "twist of '" + label + "'";
    if (!value.is_array() || value.size() != 2)
      throw ParseError(where + " must be [numerator, denominator]");
    parsed[x] = Twist(as_int(value[0], where), as_int(value[1], where));
  }
  for (LabelIndex x = 0; x < m.rank(); ++x) {
    if (!parsed[x])
      throw ParseError("missing twist for label '" + m.labels[x] + "'");
    m.twists.push_back(*parsed[x]);
  }

  if (auto it = doc.find("duals"); it != doc.end()) {
    if (!it->is_object())
      throw ParseError("'duals' must be an object");
    std::vector<std::optional<LabelIndex>> duals(m.rank());
    for (auto const &[label, value] : it->items())
      duals[m.label_index(label)] = m.label_index(as_string(value, "dual of '" + label + "'"));
    for (LabelIndex x = 0; x < m.rank(); ++x) {
      if (!duals[x])
        throw ParseError("missing dual for label '" + m.labels[x] + "'");
      m.dual.push_back(*duals[x]);
    }
  } else {
    m.dual = derive_duals(m);
  }

  return m;
}

std::string quote(std::string const &s)
{
  return Json(s).dump();
}

} // namespace

ModularData parse_mtc(std::istream &input)
{
  Json doc;
  try {
    doc = Json::parse(input);
  } catch (Json::parse_error const &e) {
    throw ParseError(e.what());
  }
  return from_json(doc);
}

ModularData parse_mtc(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return parse_mtc(in);
}

ModularData load_mtc(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return parse_mtc(in);
}

std::string serialize_mtc(ModularData const &m)
{
  std::ostringstream out;
  out << "{\n  \"name\": " << quote(m.name) << ",\n  \"labels\": [";
  for (std::size_t i = 0; i < m.labels.size(); ++i)
    out << (i ? ", " : "") << quote(m.labels[i]);
  out << "],\n  \"unit\": " << quote(m.labels[m.unit]) << ",\n  \"fusion\": [";

  bool first = true;
  for (auto const &[key, n] : m.fusion) {
    auto const &[x, y, z] = key;
    out << (first ? "\n" : ",\n") << "    [" << quote(m.labels[x]) << ", "
        << quote(m.labels[y]) << ", " << quote(m.labels[z]) << ", " << n << "]";
    first = false;
  }
  out << (m.fusion.empty() ? "" : "\n  ") << "],\n  \"twists\": {";

  for (LabelIndex x = 0; x < m.rank(); ++x)
    out << (x ? ",\n" : "\n") << "    " << quote(m.labels[x]) << ": ["
        << m.twists[x].numerator() << ", " << m.twists[x].denominator() << "]";
  out << "\n  },\n  \"duals\": {";

  for (LabelIndex x = 0; x < m.rank(); ++x)
    out << (x ? ",\n" : "\n") << "    " << quote(m.labels[x]) << ": "
        << quote(m.labels[m.dual[x]]);
  out << "\n  }\n}\n";
  return out.str();
}

std::vector<LabelIndex> derive_duals(ModularData const &m)
{
  std::vector<LabelIndex> result(m.rank());
  for (LabelIndex x = 0; x < m.rank(); ++x) {
    std::optional<LabelIndex> found;
    for (LabelIndex y = 0; y < m.rank(); ++y) {
      std::uint64_t n = m.N(x, y, m.unit);
      if (n == 0)
        continue;
      if (n > 1 || found)
        throw DualityViolation("label '" + m.labels[x] +
                               "' does not have a unique dual");
      found = y;
    }
    if (!found)
      throw DualityViolation("label '" + m.labels[x] + "' has no dual");
    result[x] = *found;
  }
  return result;
}

namespace
{

void check_unit_laws(ModularData const &m, ValidationReport &report)
{
  for (LabelIndex x = 0; x < m.rank(); ++x) {
    for (LabelIndex y = 0; y < m.rank(); ++y) {
      std::uint64_t expected = x == y ? 1 : 0;
      std::uint64_t left = m.N(m.unit, x, y);
      std::uint64_t right = m.N(x, m.unit, y);
      if (left != expected)
        report.violations.push_back(
          {"unit_law", {m.unit, x, y},
           "N(" + m.labels[m.unit] + ", " + m.labels[x] + ")^" + m.labels[y] + " = " +
             std::to_string(left) + ", expected " + std::to_string(expected)});
      if (right != expected)
        report.violations.push_back(
          {"unit_law", {x, m.unit, y},
           "N(" + m.labels[x] + ", " + m.labels[m.unit] + ")^" + m.labels[y] + " = " +
             std::to_string(right) + ", expected " + std::to_string(expected)});
    }
  }
}

void check_associativity(ModularData const &m, ValidationReport &report)
{
  std::size_t const r = m.rank();

  // products[x * r + y] lists the nonzero (z, N_xy^z)
  std::vector<std::vector<std::pair<LabelIndex, std::uint64_t>>> products(r * r);
  for (auto const &[key, n] : m.fusion) {
    auto const &[x, y, z] = key;
    products[x * r + y].emplace_back(z, n);
  }

  std::vector<std::uint64_t> left(r), right(r);
  for (LabelIndex x = 0; x < r; ++x) {
    for (LabelIndex y = 0; y < r; ++y) {
      for (LabelIndex z = 0; z < r; ++z) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);

        // (x y) z
        for (auto const &[w, n_xyw] : products[x * r + y]) {
          for (auto const &[u, n_wzu] : products[w * r + z])
            left[u] += n_xyw * n_wzu;
        }
        // x (y z)
        for (auto const &[w, n_yzw] : products[y * r + z]) {
          for (auto const &[u, n_xwu] : products[x * r + w])
            right[u] += n_yzw * n_xwu;
        }

        for (LabelIndex u = 0; u < r; ++u) {
          if (left[u] == right[u])
            continue;
          report.violations.push_back(
            {"associativity", {x, y, z, u},
             "(" + m.labels[x] + " " + m.labels[y] + ") " + m.labels[z] + " contains " +
               m.labels[u] + " " + std::to_string(left[u]) + " times, " + m.labels[x] +
               " (" + m.labels[y] + " " + m.labels[z] + ") contains it " +
               std::to_string(right[u]) + " times"});
        }
      }
    }
  }
}

void check_duality(ModularData const &m, ValidationReport &report)
{
  std::size_t const r = m.rank();
  if (m.dual.size() != r) {
    report.violations.push_back({"duality", {}, "dual map does not cover every label"});
    return;
  }

  for (LabelIndex x = 0; x < r; ++x) {
    if (m.dual[x] >= r || m.dual[m.dual[x]] != x)
      report.violations.push_back(
        {"dual_involution", {x}, "dual(dual(" + m.labels[x] + ")) != " + m.labels[x]});

    for (LabelIndex y = 0; y < r; ++y) {
      std::uint64_t expected = y == m.dual[x] ? 1 : 0;
      std::uint64_t n = m.N(x, y, m.unit);
      if (n != expected)
        report.violations.push_back(
          {"duality", {x, y},
           "N(" + m.labels[x] + ", " + m.labels[y] + ")^" + m.labels[m.unit] + " = " +
             std::to_string(n) + ", expected " + std::to_string(expected)});
    }
  }

  if (m.dual[m.unit] != m.unit)
    report.violations.push_back({"unit_dual", {m.unit}, "the unit is not self-dual"});
}

} // namespace

ValidationReport validate_mtc(ModularData const &m)
{
  ValidationReport report;

  if (m.twists.size() != m.rank() || m.unit >= m.rank()) {
    report.violations.push_back({"shape", {}, "unit or twists do not match the labels"});
    return report;
  }
  for (auto const &[key, n] : m.fusion) {
    auto const &[x, y, z] = key;
    if (x >= m.rank() || y >= m.rank() || z >= m.rank()) {
      report.violations.push_back({"shape", {x, y, z}, "fusion index out of range"});
      return report;
    }
  }

  check_unit_laws(m, report);
  check_associativity(m, report);
  check_duality(m, report);

  if (m.twists[m.unit] != Twist())
    report.violations.push_back({"unit_twist", {m.unit}, "the unit has a nontrivial twist"});

  return report;
}

} // namespace mtcrank

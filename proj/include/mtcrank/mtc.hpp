#ifndef MTCRANK_MTC_HPP
#define MTCRANK_MTC_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace mtcrank
{

using LabelIndex = std::size_t;

/// Exact twist exponent r with theta = exp(2 pi i r), kept reduced and in
/// [0, 1).
class Twist
{
public:
  Twist() = default;
  /// Throws InvalidRational when `denominator` is not positive.
  Twist(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend bool operator==(Twist const &, Twist const &) = default;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Twist operator+(Twist const &a, Twist const &b);

using FusionKey = std::tuple<LabelIndex, LabelIndex, LabelIndex>;

/// Fusion ring, duals and twists of a modular tensor category.
///
/// Fusion coefficients N_{xy}^z are stored sparsely; a missing key is zero.
/// Non-degeneracy of the braiding is assumed, not checked: the data carries no
/// S-matrix.
struct ModularData
{
  std::string name;
  std::vector<std::string> labels;
  LabelIndex unit = 0;
  std::map<FusionKey, std::uint64_t> fusion;
  std::vector<LabelIndex> dual;
  std::vector<Twist> twists;

  std::size_t rank() const { return labels.size(); }
  std::uint64_t N(LabelIndex x, LabelIndex y, LabelIndex z) const;
  std::optional<LabelIndex> find_label(std::string_view label) const;
  /// Throws UnknownLabel.
  LabelIndex label_index(std::string_view label) const;
};

struct Violation
{
  std::string rule;
  std::vector<std::size_t> indices;
  std::string message;
};

struct ValidationReport
{
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(std::string_view rule) const;
};

/// Reads the JSON data-file format. Derives duals when the file has none.
ModularData parse_mtc(std::istream &input);
ModularData parse_mtc(std::string_view text);
ModularData load_mtc(std::string const &path);

/// Canonical JSON: keys in fixed order, fusion sorted by (x, y, z) index.
std::string serialize_mtc(ModularData const &m);

/// Checks unit laws, associativity, duality and the unit twist. Collects every
/// violation rather than stopping at the first.
ValidationReport validate_mtc(ModularData const &m);

/// dual(x) is the unique y with N_{xy}^1 = 1. Throws DualityViolation when
/// there is no such y, more than one, or a coefficient above 1.
std::vector<LabelIndex> derive_duals(ModularData const &m);

} // namespace mtcrank

#endif

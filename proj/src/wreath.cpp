#include "mtcrank/wreath.hpp"

#include <charconv>
#include <sstream>

#include "mtcrank/errors.hpp"

namespace mtcrank
{

namespace
{

void check_partition_range(std::size_t n)
{
  if (n < 1 || n > max_partition_n)
    throw OutOfRange("n must be between 1 and " + std::to_string(max_partition_n) +
                     ", got " + std::to_string(n));
}

BigInt factorial(std::size_t n)
{
  BigInt result = 1;
  for (std::size_t k = 2; k <= n; ++k)
    result *= k;
  return result;
}

struct CycleTypeWalker
{
  std::size_t n;
  BigInt n_factorial;
  std::vector<BigInt> factorials;
  std::function<void(CycleType const &)> const &visit;
  CycleType current;

  // chooses a_j for j, j+1, ... given `remaining` points; `denominator`
  // accumulates prod_{i<j} i^{a_i} a_i!
  void walk(std::size_t j, std::size_t remaining, BigInt const &denominator)
  {
    if (remaining == 0) {
      BigInt remainder;
      divide_qr(n_factorial, denominator, current.class_size, remainder);
      if (remainder != 0)
        throw InconsistencyError("class size division is not exact");
      visit(current);
      return;
    }

    for (std::size_t count = remaining / j + 1; count-- > 0;) {
      std::size_t rest = remaining - count * j;
      // a nonzero rest below j + 1 cannot be filled by longer cycles
      if (rest != 0 && rest < j + 1)
        continue;

      current.a[j - 1] = static_cast<std::uint32_t>(count);
      current.num_cycles += count;

      BigInt next = denominator;
      if (count > 0)
        next *= pow(BigInt(j), static_cast<unsigned>(count)) * factorials[count];
      walk(j + 1, rest, next);

      current.num_cycles -= count;
      current.a[j - 1] = 0;
    }
  }
};

} // namespace

std::string CycleType::to_string() const
{
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 1; j <= a.size(); ++j) {
    if (a[j - 1] == 0)
      continue;
    out << (first ? "" : " ") << j << '^' << a[j - 1];
    first = false;
  }
  return out.str();
}

void for_each_cycle_type(std::size_t n, std::function<void(CycleType const &)> const &visit)
{
  check_partition_range(n);

  CycleTypeWalker walker{n, factorial(n), {}, visit, {}};
  for (std::size_t k = 0; k <= n; ++k)
    walker.factorials.push_back(factorial(k));
  walker.current.n = n;
  walker.current.a.assign(n, 0);
  walker.walk(1, n, BigInt(1));
}

std::vector<CycleType> partitions(std::size_t n)
{
  std::vector<CycleType> result;
  for_each_cycle_type(n, [&result](CycleType const &t) { result.push_back(t); });
  return result;
}

CycleType cycle_type_of(Permutation const &p)
{
  CycleType result;
  result.n = p.degree();
  result.a.assign(p.degree(), 0);

  BigInt denominator = 1;
  for (auto const &cycle : cycle_decomposition(p).cycles) {
    ++result.a[cycle.size() - 1];
    ++result.num_cycles;
  }
  for (std::size_t j = 1; j <= result.n; ++j) {
    std::uint32_t count = result.a[j - 1];
    if (count > 0)
      denominator *= pow(BigInt(j), count) * factorial(count);
  }
  result.class_size = factorial(result.n) / denominator;
  return result;
}

std::string RankPolynomial::to_string() const
{
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    BigInt const &c = coefficients[k];
    if (c == 0)
      continue;

    if (!first)
      out << (c < 0 ? " - " : " + ");
    else if (c < 0)
      out << '-';
    first = false;

    BigInt magnitude = abs(c);
    if (magnitude != 1 || k == 0)
      out << magnitude;
    if (k >= 1)
      out << 'x';
    if (k >= 2)
      out << '^' << k;
  }
  return first ? "0" : out.str();
}

RankPolynomial rank_polynomial_symmetric(std::size_t n)
{
  RankPolynomial poly;
  poly.coefficients.assign(n + 1, BigInt(0));
  for_each_cycle_type(n, [&poly](CycleType const &t) {
    poly.coefficients[t.num_cycles] += t.class_size;
  });
  return poly;
}

BigInt evaluate(RankPolynomial const &poly, BigInt const &x)
{
  if (x < 0)
    throw OutOfRange("polynomials are evaluated at non-negative ranks only");

  BigInt result = 0;
  for (std::size_t k = poly.coefficients.size(); k-- > 0;)
    result = result * x + poly.coefficients[k];
  return result;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

BigInt rank_wreath_cyclic_prime(BigInt const &rk, std::uint64_t n)
{
  if (!is_prime(n))
    throw NotPrime("the cyclic closed form needs a prime n, got " + std::to_string(n));
  return pow(rk, static_cast<unsigned>(n)) + BigInt(n - 1) * rk;
}

WreathRank rank_wreath_subgroup(BigInt const &rk, FiniteGroup const &group)
{
  std::vector<BigInt> powers{1};
  for (std::size_t k = 1; k <= group.degree(); ++k)
    powers.push_back(powers.back() * rk);

  WreathRank result;
  result.group_order = group.size();

  auto classes = conjugacy_classes(group);
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    ElementIndex rep = classes.representatives[c];
    WreathClass entry;
    entry.cycle_type = cycle_type_of(group.element(rep));
    entry.class_size = classes.classes[c].size();
    entry.contribution = entry.class_size * powers[entry.cycle_type.num_cycles];
    entry.representative = rep;
    result.total += entry.contribution;
    result.classes.push_back(std::move(entry));
  }
  return result;
}

WreathRank rank_wreath_symmetric(BigInt const &rk, std::size_t n)
{
  check_partition_range(n);

  std::vector<BigInt> powers{1};
  for (std::size_t k = 1; k <= n; ++k)
    powers.push_back(powers.back() * rk);

  WreathRank result;
  result.group_order = factorial(n);
  for_each_cycle_type(n, [&](CycleType const &t) {
    WreathClass entry{t, t.class_size, t.class_size * powers[t.num_cycles], std::nullopt};
    result.total += entry.contribution;
    result.classes.push_back(std::move(entry));
  });
  return result;
}

BigInt brute_force_wreath_rank(std::uint64_t rk, FiniteGroup const &group)
{
  std::size_t const n = group.degree();

  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (rk != 0 && tuples > brute_force_tuple_cap / rk)
      throw TooLarge("rk^n exceeds the brute-force cap of " +
                     std::to_string(brute_force_tuple_cap) + " tuples");
    tuples *= rk;
  }
  if (rk == 0)
    return 0;

  BigInt total = 0;
  std::vector<std::uint64_t> digits(n);
  for (auto const &g : group.elements()) {
    std::uint64_t fixed = 0;
    std::fill(digits.begin(), digits.end(), 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
      bool is_fixed = true;
      for (Point i = 0; i < n && is_fixed; ++i)
        is_fixed = digits[g[i]] == digits[i];
      fixed += is_fixed;

      // mixed-radix increment
      for (std::size_t i = 0; i < n; ++i) {
        if (++digits[i] < rk)
          break;
        digits[i] = 0;
      }
    }
    total += fixed;
  }
  return total;
}

namespace
{

std::optional<std::size_t> parse_size(std::string_view text)
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    return std::nullopt;
  return value;
}

Permutation cycle_of_points(std::size_t degree, std::vector<Point> points)
{
  return Permutation::from_cycles(degree, {std::move(points)});
}

} // namespace

GroupSpec parse_group_spec(std::string_view text, std::optional<std::size_t> degree)
{
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);

  if (!text.empty() && (text[0] == 's' || text[0] == 'a' || text[0] == 'z')) {
    auto n = parse_size(text.substr(1));
    if (!n || *n == 0)
      throw ParseError("bad group preset '" + std::string(text) + "'");
    if (degree && *degree != *n)
      throw ParseError("group preset '" + std::string(text) + "' has degree " +
                       std::to_string(*n) + " but n = " + std::to_string(*degree));

    GroupSpec spec{GroupSpec::Kind::symmetric, *n, {}};
    std::vector<Point> all(*n);
    for (Point i = 0; i < *n; ++i)
      all[i] = i;

    switch (text[0]) {
    case 's':
      if (*n >= 2) {
        spec.generators.push_back({"transposition", cycle_of_points(*n, {0, 1})});
        spec.generators.push_back({"cycle", cycle_of_points(*n, all)});
      }
      break;
    case 'a':
      spec.kind = GroupSpec::Kind::alternating;
      for (Point k = 2; k < *n; ++k)
        spec.generators.push_back(
          {"(1 2 " + std::to_string(k + 1) + ")", cycle_of_points(*n, {0, 1, k})});
      break;
    default:
      spec.kind = GroupSpec::Kind::cyclic;
      if (*n >= 2)
        spec.generators.push_back({"cycle", cycle_of_points(*n, all)});
      break;
    }
    return spec;
  }

  if (!degree)
    throw ParseError("explicit generators need the degree n");
  if (*degree == 0)
    throw ParseError("degree must be at least 1");

  GroupSpec spec{GroupSpec::Kind::explicit_generators, *degree, {}};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece =
      text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!text.empty())
      spec.generators.push_back({std::string(piece), parse_cycle_notation(piece, *degree)});
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }

  // name each generator by its canonical cycle string
  for (auto &gen : spec.generators)
    gen.name = "g" + std::to_string(&gen - spec.generators.data() + 1) + " = " +
               to_cycle_notation(gen.perm);
  return spec;
}

FiniteGroup materialize(GroupSpec const &spec, std::size_t cap)
{
  return generate_group(spec.degree, spec.generators, cap);
}

} // namespace mtcrank

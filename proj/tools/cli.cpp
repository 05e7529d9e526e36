#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtcrank/errors.hpp"
#include "mtcrank/rank.hpp"
#include "mtcrank/wreath.hpp"

namespace mtcrank::cli
{

namespace
{

using Json = nlohmann::ordered_json;

constexpr std::size_t max_element_rows = 50;

struct Options
{
  std::string mtc_path;
  std::string sym_path;
  std::string rk;
  std::optional<std::size_t> n;
  std::string group;
  bool closed_form = false;
  bool by_class = false;
  bool json = false;
  std::size_t cap = default_group_cap;
};

class UsageError : public InputError
{
public:
  using InputError::InputError;
};

// A simple left-aligned text table.
class Table
{
public:
  explicit Table(std::vector<std::string> header)
    : rows_{std::move(header)}
  {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream &out) const
  {
    std::vector<std::size_t> widths(rows_.front().size(), 0);
    for (auto const &row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c)
        widths[c] = std::max(widths[c], display_width(row[c]));

    for (auto const &row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size())
          line += std::string(widths[c] - display_width(row[c]) + 2, ' ');
      }
      out << "  " << line << '\n';
    }
  }

private:
  // counts UTF-8 code points, not bytes
  static std::size_t display_width(std::string const &s)
  {
    return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  }

  std::vector<std::vector<std::string>> rows_;
};

std::string element_name(GlobalSymmetry const &s, ElementIndex g)
{
  return to_cycle_notation(s.group.element(g), s.mtc.labels);
}

std::string display_name(std::string const &cycles)
{
  return cycles.empty() ? "id" : cycles;
}

void print_report(ValidationReport const &report, std::ostream &out)
{
  for (auto const &v : report.violations)
    out << "  [" << v.rule << "] " << v.message << '\n';
}

Json report_json(ValidationReport const &report)
{
  Json violations = Json::array();
  for (auto const &v : report.violations)
    violations.push_back({{"rule", v.rule}, {"indices", v.indices}, {"message", v.message}});
  return {{"ok", report.ok()}, {"violations", violations}};
}

struct Inputs
{
  ModularData mtc;
  std::vector<NamedPermutation> generators;
};

Inputs load_inputs(Options const &opt)
{
  if (opt.mtc_path.empty() && opt.sym_path.empty())
    throw UsageError("--mtc or --sym is required");

  Inputs inputs;
  std::optional<ModularData> mtc;
  if (!opt.mtc_path.empty())
    mtc = load_mtc(opt.mtc_path);

  if (opt.sym_path.empty()) {
    inputs.mtc = std::move(*mtc);
    return inputs;
  }

  auto spec = load_symmetry(opt.sym_path, mtc ? &*mtc : nullptr);
  inputs.mtc = std::move(spec.mtc);
  inputs.generators = std::move(spec.generators);
  return inputs;
}

// Refuses invalid modular data before any rank computation.
bool require_valid(ModularData const &m, std::ostream &err)
{
  auto report = validate_mtc(m);
  if (report.ok())
    return true;
  err << m.name << ": invalid modular data (" << report.violations.size() << " violations)\n";
  print_report(report, err);
  return false;
}

int cmd_validate(Options const &opt, std::ostream &out)
{
  Inputs inputs = load_inputs(opt);
  ModularData const &m = inputs.mtc;

  ValidationReport mtc_report = validate_mtc(m);
  bool ok = mtc_report.ok();

  Json doc;
  doc["mtc"] = {{"name", m.name}, {"labels", m.rank()}};
  doc["mtc"].update(report_json(mtc_report));

  if (!opt.json) {
    out << m.name << " (" << m.rank() << " labels): "
        << (mtc_report.ok() ? "ok" : std::to_string(mtc_report.violations.size()) + " violations")
        << '\n';
    print_report(mtc_report, out);
  }

  if (!opt.sym_path.empty()) {
    Json generators = Json::object();
    bool generators_ok = true;
    for (auto const &gen : inputs.generators) {
      auto report = validate_automorphism(m, gen.perm);
      generators_ok = generators_ok && report.ok();
      generators[gen.name] = report_json(report);
      if (!opt.json) {
        out << "generator " << gen.name << " = " << display_name(to_cycle_notation(gen.perm, m.labels))
            << ": " << (report.ok() ? "ok" : std::to_string(report.violations.size()) + " violations")
            << '\n';
        print_report(report, out);
      }
    }
    doc["generators"] = generators;
    ok = ok && generators_ok;

    if (generators_ok) {
      auto symmetry = build_symmetry(m, inputs.generators, opt.cap);
      doc["group_order"] = symmetry.group.size();
      if (!opt.json)
        out << "group order: " << symmetry.group.size() << '\n';
    }
  }

  doc["ok"] = ok;
  if (opt.json)
    out << doc.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_rank(Options const &opt, std::ostream &out, std::ostream &err)
{
  Inputs inputs = load_inputs(opt);
  if (!require_valid(inputs.mtc, err))
    return 1;

  auto s = build_symmetry(std::move(inputs.mtc), inputs.generators, opt.cap);
  auto report = rank_report(s);

  if (opt.json) {
    Json doc;
    Json per_element = Json::array();
    for (ElementIndex g = 0; g < s.group.size(); ++g)
      per_element.push_back(
        {{"element", element_name(s, g)},
         {"class_size", report.per_class[report.class_of[g]].class_size},
         {"rank", to_string(report.per_element[g])}});
    doc["per_element"] = per_element;
    if (opt.by_class) {
      Json per_class = Json::array();
      for (auto const &c : report.per_class)
        per_class.push_back({{"representative", element_name(s, c.representative)},
                             {"class_size", c.class_size},
                             {"rank", to_string(c.rank)}});
      doc["per_class"] = per_class;
    }
    doc["total_rank"] = to_string(report.total_rank);
    doc["orbit_count"] = report.orbit_count;
    doc["group_order"] = s.group.size();
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << s.mtc.name << ": rk(C) = " << s.mtc.rank() << ", |G| = " << s.group.size() << '\n';
  bool collapse = opt.by_class || s.group.size() > max_element_rows;
  if (collapse) {
    Table table({"class representative", "class size", "rank"});
    for (auto const &c : report.per_class)
      table.add({display_name(element_name(s, c.representative)), std::to_string(c.class_size),
                 to_string(c.rank)});
    table.print(out);
  } else {
    Table table({"element", "class size", "rank"});
    for (ElementIndex g = 0; g < s.group.size(); ++g)
      table.add({display_name(element_name(s, g)),
                 std::to_string(report.per_class[report.class_of[g]].class_size),
                 to_string(report.per_element[g])});
    table.print(out);
  }
  out << "total rank: " << report.total_rank << '\n'
      << "orbits: " << report.orbit_count << '\n';
  return 0;
}

int cmd_burnside(Options const &opt, std::ostream &out, std::ostream &err)
{
  Inputs inputs = load_inputs(opt);
  if (!require_valid(inputs.mtc, err))
    return 1;

  auto s = build_symmetry(std::move(inputs.mtc), inputs.generators, opt.cap);
  auto report = rank_report(s);
  auto orbit_list = orbits(s.group);

  if (opt.json) {
    Json orbit_json = Json::array();
    for (auto const &orbit : orbit_list) {
      Json labels = Json::array();
      for (Point x : orbit)
        labels.push_back(s.mtc.labels[x]);
      orbit_json.push_back(labels);
    }
    Json doc{{"orbits", orbit_json},
             {"orbit_count", report.orbit_count},
             {"group_order", s.group.size()},
             {"fixed_point_total", to_string(report.total_rank)},
             {"burnside_total", to_string(report.burnside_total)}};
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "orbits:";
  for (auto const &orbit : orbit_list) {
    out << " {";
    for (std::size_t i = 0; i < orbit.size(); ++i)
      out << (i ? ", " : "") << s.mtc.labels[orbit[i]];
    out << '}';
  }
  out << '\n'
      << "orbit count: " << report.orbit_count << '\n'
      << "sum of fixed points: " << report.total_rank << '\n'
      << "|G| * orbits: " << s.group.size() << " * " << report.orbit_count << " = "
      << report.burnside_total << '\n';
  return 0;
}

BigInt parse_rank(std::string const &text)
{
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("--rk must be a non-negative integer, got '" + text + "'");
  return BigInt(text);
}

int cmd_wreath(Options const &opt, std::ostream &out, std::ostream &err)
{
  if (opt.rk.empty() == opt.mtc_path.empty())
    throw UsageError("exactly one of --rk and --mtc is required");

  BigInt rk;
  if (!opt.mtc_path.empty()) {
    auto m = load_mtc(opt.mtc_path);
    if (!require_valid(m, err))
      return 1;
    rk = m.rank();
  } else {
    rk = parse_rank(opt.rk);
  }

  std::string group_text = opt.group;
  if (group_text.empty()) {
    if (!opt.n)
      throw UsageError("--n or --group is required");
    group_text = "s" + std::to_string(*opt.n);
  }
  GroupSpec spec = parse_group_spec(group_text, opt.n);

  Json doc{{"rk", to_string(rk)}, {"n", spec.degree}, {"group", group_text}};

  if (opt.closed_form) {
    if (spec.kind != GroupSpec::Kind::cyclic)
      throw UsageError("--closed-form needs a cyclic group z<n>");
    BigInt total = rank_wreath_cyclic_prime(rk, spec.degree);
    if (opt.json) {
      doc["closed_form"] = true;
      doc["total_rank"] = to_string(total);
      out << doc.dump(2) << '\n';
    } else {
      out << "rk(C) = " << rk << ", G = " << group_text << '\n'
          << "total rank (rk^n + (n-1) rk): " << total << '\n';
    }
    return 0;
  }

  WreathRank result = spec.kind == GroupSpec::Kind::symmetric
                        ? rank_wreath_symmetric(rk, spec.degree)
                        : rank_wreath_subgroup(rk, materialize(spec, opt.cap));

  if (opt.json) {
    doc["group_order"] = to_string(result.group_order);
    Json classes = Json::array();
    for (auto const &c : result.classes)
      classes.push_back({{"cycle_type", c.cycle_type.a},
                         {"num_cycles", c.cycle_type.num_cycles},
                         {"class_size", to_string(c.class_size)},
                         {"contribution", to_string(c.contribution)}});
    doc["classes"] = classes;
    doc["total_rank"] = to_string(result.total);
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "rk(C) = " << rk << ", G = " << group_text << " (order " << result.group_order << ")\n";
  Table table({"cycle type", "cycles", "class size", "contribution"});
  for (auto const &c : result.classes)
    table.add({c.cycle_type.to_string(), std::to_string(c.cycle_type.num_cycles),
               to_string(c.class_size), to_string(c.contribution)});
  table.print(out);
  out << "total rank: " << result.total << '\n';
  return 0;
}

int cmd_poly(Options const &opt, std::ostream &out)
{
  if (!opt.n)
    throw UsageError("--n is required");

  auto poly = rank_polynomial_symmetric(*opt.n);
  if (opt.json) {
    Json coefficients = Json::array();
    for (auto const &c : poly.coefficients)
      coefficients.push_back(to_string(c));
    Json doc{{"n", *opt.n}, {"polynomial", poly.to_string()}, {"coefficients", coefficients}};
    out << doc.dump(2) << '\n';
  } else {
    out << poly.to_string() << '\n';
  }
  return 0;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Ranks of G-crossed braided extensions of modular tensor categories", "mtcrank"};
  app.require_subcommand(1);

  Options opt;
  auto add_cap = [&opt](CLI::App *cmd) {
    cmd->add_option("--cap", opt.cap, "Largest group that may be materialized")
      ->check(CLI::PositiveNumber);
  };
  auto add_inputs = [&opt](CLI::App *cmd) {
    cmd->add_option("--mtc", opt.mtc_path, "Modular data file (JSON)");
    cmd->add_option("--sym", opt.sym_path, "Symmetry file (JSON)");
  };

  auto *validate = app.add_subcommand("validate", "Check modular data and symmetry generators");
  add_inputs(validate);
  add_cap(validate);

  auto *rank = app.add_subcommand("rank", "Graded and total ranks of the extension");
  add_inputs(rank);
  add_cap(rank);
  rank->add_flag("--by-class", opt.by_class, "One row per conjugacy class");

  auto *wreath = app.add_subcommand("wreath", "Rank of the permutation extension C wr G");
  wreath->add_option("--rk", opt.rk, "Rank of C");
  wreath->add_option("--mtc", opt.mtc_path, "Read the rank of C from a modular data file");
  wreath->add_option("--n", opt.n, "Number of tensor factors");
  wreath->add_option("--group", opt.group, "s<n>, a<n>, z<n> or generators like \"(1 2),(1 2 3)\"");
  wreath->add_flag("--closed-form", opt.closed_form, "Use rk^n + (n-1) rk for z<p>, p prime");
  add_cap(wreath);

  auto *poly = app.add_subcommand("poly", "Rank polynomial of C wr S_n");
  poly->add_option("--n", opt.n, "Degree n")->required();

  auto *burnside = app.add_subcommand("burnside", "Orbits of G on the labels and both rank totals");
  add_inputs(burnside);
  add_cap(burnside);

  for (auto *cmd : {validate, rank, wreath, poly, burnside})
    cmd->add_flag("--json", opt.json, "Machine-readable output");

  std::vector<char const *> argv{"mtcrank"};
  for (auto const &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate)
      return cmd_validate(opt, out);
    if (*rank)
      return cmd_rank(opt, out, err);
    if (*wreath)
      return cmd_wreath(opt, out, err);
    if (*poly)
      return cmd_poly(opt, out);
    return cmd_burnside(opt, out, err);
  } catch (NotAnAutomorphism const &e) {
    err << "error: " << e.what() << '\n';
    print_report(e.report(), err);
    return 1;
  } catch (InputError const &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (DomainError const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace mtcrank::cli

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "glik/canonical.hpp"
#include "glik/errors.hpp"
#include "glik/families.hpp"
#include "glik/likelihood.hpp"
#include "glik/monkey.hpp"
#include "glik/verify.hpp"

namespace glik::cli {

namespace {

using nlohmann::json;

enum class Format { plain, json, csv };

struct GraphInput {
  std::string graph6;
  std::string file;
  std::string family;
  int order = 0;
  int size = 0;
};

struct Options {
  Format format = Format::plain;
  Limits limits;
  unsigned threads = 1;
  int decimal = -1;
};

// Raised for command lines that parse but are inconsistent.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_family(const GraphInput& in) { return !in.family.empty(); }

FamilySpec family_spec(const GraphInput& in) {
  if (in.order < 1) throw UsageError("--family needs --order");
  FamilySpec spec{parse_family(in.family), in.order, in.size};
  validate(spec);
  return spec;
}

Graph load_graph(const GraphInput& in) {
  const int sources = (in.graph6.empty() ? 0 : 1) + (in.file.empty() ? 0 : 1) +
                      (has_family(in) ? 1 : 0);
  if (sources != 1) {
    throw UsageError("give exactly one graph source: graph6 argument, --file, or --family");
  }
  if (!in.graph6.empty()) return parse_graph6(in.graph6);
  if (has_family(in)) return make_family(family_spec(in));
  const std::string text = read_file(in.file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_edge_list_json(text);
  return parse_graph6(text.substr(0, text.find('\n')));
}

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graph6", in.graph6, "graph in graph6 format");
  cmd->add_option("-f,--file", in.file, "file holding a JSON edge list or a graph6 line");
  cmd->add_option("--family", in.family,
                  "family: complete, star, path, cycle, empty, matching, one-edge");
  cmd->add_option("--order", in.order, "family order t");
  cmd->add_option("--size", in.size, "matching size s");
}

void warn_raised_limits(const Limits& l, std::ostream& err) {
  const Limits d;
  const auto warn = [&](const char* name, int value, int def) {
    if (value > def) {
      err << "warning: --" << name << "-limit raised to " << value << " (default " << def
          << "); cost grows exponentially with the order\n";
    }
  };
  warn("canonical", l.canonical, d.canonical);
  warn("census", l.census, d.census);
  warn("oracle", l.oracle, d.oracle);
  warn("paths", l.paths, d.paths);
  warn("dp", l.dp, d.dp);
}

int cmd_compute(const Graph& g, const Options& o, std::ostream& out) {
  const Rational l = likelihood_exact(g, o.limits, o.threads);
  const BigInt aut = automorphism_count(g, o.limits);
  const BigInt paths = factorial(g.order()) / aut;
  const LikelihoodBounds b = likelihood_bounds(g, o.limits);
  switch (o.format) {
  case Format::json: {
    json doc{{"graph6", to_graph6(g)},
             {"likelihood", rational_json(l)},
             {"aut", aut.get_str()},
             {"paths", paths.get_str()},
             {"bounds", {{"lower", rational_json(b.lower)}, {"upper", rational_json(b.upper)}}}};
    if (o.decimal >= 0) doc["decimal"] = to_decimal(l, o.decimal);
    out << doc.dump() << "\n";
    break;
  }
  case Format::csv:
    out << "graph6,num,den,aut,paths\n"
        << to_graph6(g) << "," << l.get_num() << "," << l.get_den() << "," << aut << ","
        << paths << "\n";
    break;
  case Format::plain:
    out << "graph6: " << to_graph6(g) << "\n"
        << "order: " << g.order() << "\n"
        << "likelihood: " << to_string(l) << "\n";
    if (o.decimal >= 0) out << "decimal: " << to_decimal(l, o.decimal) << "\n";
    out << "aut: " << aut << "\n"
        << "paths: " << paths << "\n"
        << "lower: " << to_string(b.lower) << "\n"
        << "upper: " << to_string(b.upper) << "\n";
    break;
  }
  return kExitOk;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_paths(const Graph& g, bool tree, const Options& o, std::ostream& out) {
  if (tree) {
    const auto nodes = path_tree(g, o.limits);
    if (o.format == Format::json) {
      json arr = json::array();
      for (const auto& n : nodes) {
        arr.push_back({{"level", n.level},
                       {"parent", n.parent},
                       {"prefix", n.prefix},
                       {"back_degree", n.back_degree},
                       {"step_probability", rational_json(n.step_probability)},
                       {"leaves", n.leaves}});
      }
      out << json{{"graph6", to_graph6(g)}, {"nodes", arr}}.dump() << "\n";
    } else {
      if (o.format == Format::csv) out << "node,level,parent,prefix,back_degree,step,leaves\n";
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        if (o.format == Format::csv) {
          out << i << "," << n.level << "," << n.parent << "," << n.prefix << ","
              << n.back_degree << "," << to_string(n.step_probability) << "," << n.leaves
              << "\n";
        } else {
          out << std::string(2 * (n.level - 1), ' ') << "[" << i << "] " << n.prefix
              << " d=" << n.back_degree << " p=" << to_string(n.step_probability)
              << " leaves=" << n.leaves << "\n";
        }
      }
    }
    return kExitOk;
  }

  const auto paths = enumerate_path_constructions(g, o.limits);
  const Rational total = likelihood_from_paths(paths);
  switch (o.format) {
  case Format::json: {
    json arr = json::array();
    for (const auto& p : paths) {
      arr.push_back({{"ordering", p.ordering},
                     {"back_degrees", p.back_degrees},
                     {"weight", rational_json(p.weight)}});
    }
    out << json{{"graph6", to_graph6(g)},
                {"count", paths.size()},
                {"paths", arr},
                {"likelihood", rational_json(total)}}
               .dump()
        << "\n";
    break;
  }
  case Format::csv:
    out << "index,ordering,back_degrees,num,den\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
      out << i << "," << join(paths[i].ordering, ' ') << "," << join(paths[i].back_degrees, ' ')
          << "," << paths[i].weight.get_num() << "," << paths[i].weight.get_den() << "\n";
    }
    break;
  case Format::plain:
    out << "graph6: " << to_graph6(g) << "\n"
        << "count: " << paths.size() << "\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
      out << i << ": ordering " << join(paths[i].ordering, ' ') << " | back-degrees "
          << join(paths[i].back_degrees, ' ') << " | weight " << to_string(paths[i].weight)
          << "\n";
    }
    out << "likelihood: " << to_string(total) << "\n";
    break;
  }
  return kExitOk;
}

int cmd_bounds(const Graph& g, const Options& o, std::ostream& out) {
  const LikelihoodBounds b = likelihood_bounds(g, o.limits);
  switch (o.format) {
  case Format::json:
    out << json{{"graph6", to_graph6(g)},
                {"lower", rational_json(b.lower)},
                {"upper", rational_json(b.upper)}}
               .dump()
        << "\n";
    break;
  case Format::csv:
    out << "graph6,lower,upper\n" << to_graph6(g) << "," << to_string(b.lower) << ","
        << to_string(b.upper) << "\n";
    break;
  case Format::plain:
    out << "graph6: " << to_graph6(g) << "\n"
        << "lower: " << to_string(b.lower) << "\n"
        << "upper: " << to_string(b.upper) << "\n";
    break;
  }
  return kExitOk;
}

int cmd_family(const GraphInput& in, const Options& o, std::ostream& out) {
  if (!in.graph6.empty() || !in.file.empty() || !has_family(in)) {
    throw UsageError("family takes --family KIND --order T [--size S]");
  }
  const FamilySpec spec = family_spec(in);
  const Rational closed = spec.kind == Family::cycle
                              ? cycle_from_path_relation(spec.order, o.limits)
                              : family_closed_form(spec);
  const Rational dp = likelihood_exact(make_family(spec), o.limits, o.threads);
  const bool equal = closed == dp;
  switch (o.format) {
  case Format::json:
    out << json{{"family", family_name(spec.kind)},
                {"order", spec.order},
                {"size", spec.size},
                {"closed_form", rational_json(closed)},
                {"dp", rational_json(dp)},
                {"equal", equal}}
               .dump()
        << "\n";
    break;
  case Format::csv:
    out << "family,order,size,closed_form,dp,equal\n"
        << family_name(spec.kind) << "," << spec.order << "," << spec.size << ","
        << to_string(closed) << "," << to_string(dp) << "," << (equal ? "true" : "false")
        << "\n";
    break;
  case Format::plain:
    out << "family: " << family_name(spec.kind) << "\n"
        << "order: " << spec.order << "\n";
    if (spec.kind == Family::matching) out << "size: " << spec.size << "\n";
    out << "closed form: " << to_string(closed) << "\n"
        << "dp: " << to_string(dp) << "\n"
        << "equal: " << (equal ? "true" : "false") << "\n";
    break;
  }
  return equal ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const Graph& g, std::uint64_t samples, std::uint64_t seed, bool compare,
                 const Options& o, std::ostream& out) {
  if (samples < 1) throw UsageError("--samples must be at least 1");
  const Estimate est = estimate_likelihood(g, samples, seed, o.threads, o.limits);
  std::optional<Rational> exact;
  if (g.order() <= o.limits.dp) exact = likelihood_exact(g, o.limits, o.threads);
  if (compare && !exact) {
    throw LimitExceeded("dp", o.limits.dp, g.order());
  }

  double z = 0.0;
  bool within = true;
  if (compare) {
    const double diff = est.p_hat - exact->get_d();
    if (est.std_error > 0) {
      z = diff / est.std_error;
    } else if (diff != 0) {
      z = diff > 0 ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
    }
    within = std::abs(z) <= 4.0;
  }

  switch (o.format) {
  case Format::json: {
    json doc{{"target", to_graph6(g)},
             {"samples", samples},
             {"seed", seed},
             {"hits", est.hits},
             {"p_hat", format_double(est.p_hat)},
             {"stderr", format_double(est.std_error)}};
    if (exact) doc["exact"] = rational_json(*exact);
    if (compare) {
      doc["z"] = format_double(z);
      doc["within_4_sigma"] = within;
    }
    out << doc.dump() << "\n";
    break;
  }
  case Format::csv:
    out << "target,samples,seed,hits,p_hat,stderr,exact" << (compare ? ",z" : "") << "\n"
        << to_graph6(g) << "," << samples << "," << seed << "," << est.hits << ","
        << format_double(est.p_hat) << "," << format_double(est.std_error) << ","
        << (exact ? to_string(*exact) : "") << (compare ? "," + format_double(z) : "") << "\n";
    break;
  case Format::plain:
    out << "target: " << to_graph6(g) << "\n"
        << "samples: " << samples << "\n"
        << "seed: " << seed << "\n"
        << "hits: " << est.hits << "\n"
        << "p_hat: " << format_double(est.p_hat) << "\n"
        << "stderr: " << format_double(est.std_error) << "\n";
    if (exact) out << "exact: " << to_string(*exact) << "\n";
    if (compare) {
      out << "z: " << format_double(z) << "\n"
          << "within 4 sigma: " << (within ? "yes" : "no") << "\n";
    }
    break;
  }
  return within ? kExitOk : kExitCheckFailed;
}

int cmd_census(int t, const Options& o, std::ostream& out) {
  const auto rows = likelihood_census(t, o.limits);
  Rational sum = 0;
  for (const auto& r : rows) sum += r.likelihood;
  const bool normalized = sum == 1;
  const auto [lo, hi] = std::minmax_element(
      rows.begin(), rows.end(),
      [](const CensusEntry& a, const CensusEntry& b) { return a.likelihood < b.likelihood; });

  switch (o.format) {
  case Format::json: {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"graph6", r.key.graph6()},
                     {"likelihood", rational_json(r.likelihood)},
                     {"aut", r.automorphisms.get_str()}});
    }
    out << json{{"order", t},
                {"classes", rows.size()},
                {"rows", arr},
                {"sum", rational_json(sum)},
                {"normalized", normalized},
                {"min", {{"graph6", lo->key.graph6()}, {"likelihood", rational_json(lo->likelihood)}}},
                {"max", {{"graph6", hi->key.graph6()}, {"likelihood", rational_json(hi->likelihood)}}}}
               .dump()
        << "\n";
    break;
  }
  case Format::csv:
    out << "graph6,num,den,aut\n";
    for (const auto& r : rows) {
      out << r.key.graph6() << "," << r.likelihood.get_num() << "," << r.likelihood.get_den()
          << "," << r.automorphisms << "\n";
    }
    break;
  case Format::plain:
    for (const auto& r : rows) {
      out << r.key.graph6() << " " << to_string(r.likelihood) << " aut=" << r.automorphisms;
      if (o.decimal >= 0) out << " ~" << to_decimal(r.likelihood, o.decimal);
      out << "\n";
    }
    out << "classes: " << rows.size() << "\n"
        << "sum: " << to_string(sum) << (normalized ? " (normalized)" : " (NOT normalized)")
        << "\n"
        << "min: " << lo->key.graph6() << " " << to_string(lo->likelihood) << "\n"
        << "max: " << hi->key.graph6() << " " << to_string(hi->likelihood) << "\n";
    break;
  }
  return normalized ? kExitOk : kExitCheckFailed;
}

int cmd_verify(std::vector<std::string> suites, const VerifyOptions& vo, const Options& o,
               std::ostream& out) {
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites = verify_suite_names();
  }
  for (const auto& s : suites) {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw UsageError("unknown verify suite '" + s + "'");
    }
  }
  bool all = true;
  json arr = json::array();
  if (o.format == Format::csv) out << "suite,status,checks\n";
  for (const auto& s : suites) {
    const CheckResult r = run_verify_suite(s, vo);
    all = all && r.passed;
    if (o.format == Format::json) {
      arr.push_back({{"suite", r.suite},
                     {"passed", r.passed},
                     {"checks", r.checks},
                     {"failures", r.failures}});
    } else if (o.format == Format::csv) {
      out << r.suite << "," << (r.passed ? "PASS" : "FAIL") << "," << r.checks << "\n";
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.checks
          << " exact equalities or bands)\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
  }
  if (o.format == Format::json) {
    out << json{{"passed", all}, {"suites", arr}}.dump() << "\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact likelihood of graphs under the random vertex-addition process"};
  app.name("glik");
  app.require_subcommand(1);

  Options o;
  std::string format = "plain";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--canonical-limit", o.limits.canonical, "max order for canonical labeling");
  app.add_option("--census-limit", o.limits.census, "max order for census enumeration");
  app.add_option("--oracle-limit", o.limits.oracle, "max order for ordering enumeration");
  app.add_option("--paths-limit", o.limits.paths, "max order for path enumeration");
  app.add_option("--dp-limit", o.limits.dp, "max order for the subset DP");
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
  app.add_option("--decimal", o.decimal, "also print decimals with this many digits");

  GraphInput in;
  CLI::App* compute = app.add_subcommand("compute", "exact likelihood, |Aut|, bounds");
  add_graph_input(compute, in);

  bool tree = false;
  CLI::App* paths = app.add_subcommand("paths", "list path constructions");
  add_graph_input(paths, in);
  paths->add_flag("--tree", tree, "print the prefix tree instead of the list");

  CLI::App* bounds = app.add_subcommand("bounds", "automorphism bounds");
  add_graph_input(bounds, in);

  CLI::App* family = app.add_subcommand("family", "closed form against the DP");
  add_graph_input(family, in);

  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  bool compare = false;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
  add_graph_input(simulate, in);
  simulate->add_option("--samples", samples, "number of growths");
  simulate->add_option("--seed", seed, "master seed");
  simulate->add_flag("--compare", compare, "report (p_hat - L)/stderr; fail outside 4 sigma");

  int census_order = 0;
  CLI::App* census = app.add_subcommand("census", "likelihood of every class of one order");
  census->add_option("order,--order", census_order, "graph order t")->required();

  std::vector<std::string> suites;
  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("suites", suites, "suites to run (default all)");
  verify->add_option("--max-order", vo.max_order, "sweep ceiling for exhaustive suites");
  verify->add_option("--family-max-order", vo.family_max_order, "ceiling for closed forms");
  verify->add_option("--samples", vo.samples, "Monte Carlo samples per order");
  verify->add_option("--seed", vo.seed, "Monte Carlo seed");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "glik: " << e.what() << "\n";
    return kExitUsage;
  }

  o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;
  vo.limits = o.limits;
  vo.threads = o.threads;
  warn_raised_limits(o.limits, err);

  try {
    if (compute->parsed()) return cmd_compute(load_graph(in), o, out);
    if (paths->parsed()) return cmd_paths(load_graph(in), tree, o, out);
    if (bounds->parsed()) return cmd_bounds(load_graph(in), o, out);
    if (family->parsed()) return cmd_family(in, o, out);
    if (simulate->parsed()) return cmd_simulate(load_graph(in), samples, seed, compare, o, out);
    if (census->parsed()) return cmd_census(census_order, o, out);
    if (verify->parsed()) return cmd_verify(suites, vo, o, out);
  } catch (const UsageError& e) {
    err << "glik: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    const std::string& name = e.limit_name();
    err << "glik: " << e.what();
    if (name == "canonical" || name == "census" || name == "oracle" || name == "paths" ||
        name == "dp") {
      err << "; raise it with --" << name << "-limit if you accept the exponential cost";
    } else {
      err << " (fixed by the data layout)";
    }
    err << "\n";
    return kExitLimit;
  } catch (const MalformedInput& e) {
    err << "glik: malformed input: " << e.what() << "\n";
    return kExitDataError;
  } catch (const NoClosedForm& e) {
    err << "glik: " << e.what() << "\n";
    return kExitDataError;
  } catch (const InvalidParameter& e) {
    err << "glik: invalid parameter: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

} // namespace glik::cli

#include "fuzzcal_cli/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzcal/fuzzcal.hpp"
#include "fuzzcal_cli/presets.hpp"

namespace fuzzcal::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string example;
  std::string input;
  std::string tau;
  std::size_t rcuts = 11;
  std::vector<double> s;
  std::string format = "csv";
  std::string out;
};

// What the command operates on: a problem (solved on demand) or a function.
struct Source {
  std::optional<LinearFCFIVP> problem;
  std::optional<FunctionForm> function;
  Grid solve_grid;
  Grid derive_grid;
  Grid switch_grid;
  std::vector<double> s_values;
};

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end || !std::isfinite(v)) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  return v;
}

Grid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ':')) parts.push_back(piece);
  if (parts.size() != 3) throw UsageError("--tau expects start:stop:count, got '" + text + "'");
  const double start = parse_double(parts[0], "tau start");
  const double stop = parse_double(parts[1], "tau stop");
  std::size_t count = 0;
  const char* end = parts[2].data() + parts[2].size();
  auto [p, ec] = std::from_chars(parts[2].data(), end, count);
  if (ec != std::errc{} || p != end) throw UsageError("invalid tau count '" + parts[2] + "'");
  return {start, stop, count};
}

Source defaults_for_problem(const LinearFCFIVP& p) {
  const double a = p.ctx.basepoint();
  return {p, std::nullopt, {a, a + 1, 11}, {a + 0.1, a + 1, 10}, {a, a + 1, 1024}, {1, 2, 10}};
}

Source defaults_for_function(const FunctionForm& f) {
  const double lo = f.domain().lo;
  const double hi = std::isinf(f.domain().hi) ? lo + 1 : f.domain().hi;
  const double first = lo + 0.1 * (hi - lo);
  return {std::nullopt, f, {lo, hi, 11}, {first, hi, 10}, {lo, hi, 1024}, {1, 2, 10}};
}

Source load_source(const RunConfig& cfg) {
  if (!cfg.example.empty()) {
    const Preset* p = find_preset(cfg.example);
    if (!p) {
      std::string names;
      for (const Preset& q : presets()) names += (names.empty() ? "" : ", ") + q.name;
      throw UsageError("unknown example '" + cfg.example + "' (known: " + names + ")");
    }
    return {p->problem, p->function, p->solve_grid, p->derive_grid, p->switch_grid, p->s_values};
  }
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot read input file '" + cfg.input + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("input is not valid JSON: " + std::string(e.what()));
  }
  if (doc.is_object() && doc.contains("template")) return defaults_for_problem(problem_from_json(doc));
  if (doc.is_object() && doc.contains("terms")) return defaults_for_function(form_from_json(doc));
  throw UsageError("input must be a problem (with 'template') or a function (with 'terms')");
}

FunctionForm function_of(const Source& src) {
  if (src.function) return *src.function;
  return solve(*src.problem).form;
}

Grid grid_for(const RunConfig& cfg, const Grid& fallback) {
  return cfg.tau.empty() ? fallback : parse_grid(cfg.tau);
}

void validate_grid(const Grid& g, const FunctionForm& f, bool strictly_after_basepoint) {
  if (g.count < 2) throw UsageError("tau grid needs at least 2 points");
  if (!(g.start < g.stop)) throw UsageError("tau grid needs start < stop");
  const double a = f.context().basepoint();
  if (strictly_after_basepoint ? !(g.start > a) : !(g.start >= a)) {
    throw UsageError("tau grid must start " +
                     std::string(strictly_after_basepoint ? "after" : "at or after") +
                     " the basepoint " + format_number(a));
  }
  if (g.start < f.domain().lo || g.stop > f.domain().hi) {
    throw UsageError("tau grid leaves the function domain");
  }
}

// Destination for the primary output: the --out file or the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& os() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

json triple_json(const TFN& p) { return json::array({p.left(), p.peak(), p.right()}); }

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  if (!src.problem) throw UsageError("solve needs an initial value problem, not a bare function");
  const ClosedFormSolution sol = solve(*src.problem);
  const Grid g = grid_for(cfg, src.solve_grid);
  validate_grid(g, sol.form, false);
  if (cfg.rcuts < 2) throw UsageError("--rcuts needs at least 2 levels");

  const FuzzyFunction f = sol.expression();
  const std::vector<double> taus = g.nodes();
  std::vector<TraceRow> trace;
  for (double tau : taus) trace.push_back({tau, f(tau), std::nullopt});

  if (cfg.format == "json") {
    json doc{{"problem", src.problem->describe()},
             {"expression", sol.form.to_string()},
             {"case", to_string(sol.diff_case)},
             {"transform", sol.transform.to_string()}};
    json steps = json::array();
    for (const auto& s : sol.derivation) steps.push_back({{"step", s.name}, {"detail", s.detail}});
    doc["derivation"] = steps;
    json rows = json::array();
    for (const auto& r : trace) rows.push_back({{"tau", r.tau}, {"w", triple_json(r.value)}});
    doc["trace"] = rows;
    json fan = json::array();
    for (const auto& r : trace) {
      for (std::size_t k = 0; k < cfg.rcuts; ++k) {
        const double level = k + 1 == cfg.rcuts ? 1.0 : static_cast<double>(k) / (cfg.rcuts - 1);
        const RCutInterval c = r_cut(r.value, level);
        fan.push_back({{"tau", r.tau}, {"r", level}, {"lo", c.lo}, {"hi", c.hi}});
      }
    }
    doc["fan"] = fan;
    Sink sink(cfg.out, out);
    sink.os() << doc.dump(2) << '\n';
    return kOk;
  }

  out << "# problem: " << src.problem->describe() << '\n';
  out << "# expression: w(tau) = " << sol.form.to_string() << '\n';
  out << "# case: " << to_string(sol.diff_case) << '\n';
  for (const auto& s : sol.derivation) out << "# " << s.name << ": " << s.detail << '\n';
  if (cfg.out.empty()) {
    write_trace(out, trace);
    out << '\n';
    write_fan(out, f, taus, cfg.rcuts);
  } else {
    Sink t(cfg.out + "_trace.csv", out);
    write_trace(t.os(), trace);
    Sink fan(cfg.out + "_fan.csv", out);
    write_fan(fan.os(), f, taus, cfg.rcuts);
    out << "# wrote " << cfg.out << "_trace.csv and " << cfg.out << "_fan.csv\n";
  }
  return kOk;
}

int cmd_derive(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  const FunctionForm form = function_of(src);
  const Grid g = grid_for(cfg, src.derive_grid);
  validate_grid(g, form, true);
  const FuzzyFunction f = form.to_function();

  std::vector<TraceRow> rows;
  for (double tau : g.nodes()) {
    const GHDiffResult d = conformable_derivative(f, form.context(), tau);
    rows.push_back({tau, d.value, d.diff_case});
  }
  Sink sink(cfg.out, out);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"tau", r.tau}, {"value", triple_json(r.value)},
                     {"case", r.diff_case == DiffCase::CaseI ? "I" : "II"}});
    }
    sink.os() << json{{"alpha", form.context().alpha()}, {"rows", arr}}.dump(2) << '\n';
  } else {
    write_trace(sink.os(), rows);
  }
  return kOk;
}

int cmd_switchpoints(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  const FunctionForm form = function_of(src);
  const Grid g = grid_for(cfg, src.switch_grid);
  if (!(g.start < g.stop)) throw UsageError("switching-point interval needs start < stop");
  if (g.count < 2) throw UsageError("switching-point grid needs at least 2 points");
  if (g.start < form.domain().lo || g.stop > form.domain().hi) {
    throw UsageError("switching-point interval leaves the function domain");
  }
  const auto points = find_switching_points(form.to_function(), g.start, g.stop, g.count);

  Sink sink(cfg.out, out);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& p : points) arr.push_back({{"location", p.location}, {"kind", to_string(p.kind)}});
    sink.os() << json{{"interval", {g.start, g.stop}}, {"points", arr}}.dump(2) << '\n';
    return kOk;
  }
  if (points.empty()) sink.os() << "none found\n";
  for (const auto& p : points) sink.os() << format_number(p.location) << ' ' << to_string(p.kind) << '\n';
  return kOk;
}

int cmd_laplace(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  std::optional<SymbolicTransform> symbolic;
  std::optional<FunctionForm> form;
  if (src.problem) {
    ClosedFormSolution sol = solve(*src.problem);
    symbolic = sol.transform;
    form = sol.form;
  } else {
    form = *src.function;
    try {
      symbolic = laplace_symbolic(*form);
    } catch (const NoSymbolicForm&) {
    }
  }
  const std::vector<double> s_values = cfg.s.empty() ? src.s_values : cfg.s;
  if (s_values.empty()) throw UsageError("laplace needs at least one s value (--s)");

  const FuzzyFunction f = form->to_function();
  std::vector<TransformValue> rows;
  for (double s : s_values) {
    if (symbolic && !(s > std::max(0.0, symbolic->abscissa()))) {
      throw DivergentTransform("transform diverges at s = " + format_number(s) +
                                   " (abscissa of convergence " +
                                   format_number(std::max(0.0, symbolic->abscissa())) + ")",
                               s, symbolic->abscissa());
    }
    rows.push_back(laplace_numeric(f, form->context(), s));
  }

  Sink sink(cfg.out, out);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"s", r.s}, {"W", triple_json(r.value)}});
    json doc{{"rows", arr}, {"symbolic", symbolic ? json(symbolic->to_string()) : json(nullptr)}};
    sink.os() << doc.dump(2) << '\n';
    return kOk;
  }
  write_transform_table(sink.os(), rows);
  if (symbolic) sink.os() << "# symbolic: W(s) = " << symbolic->to_string() << '\n';
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  auto* ex = sub->add_option("--example", cfg.example, "built-in preset")
                 ->check(CLI::IsMember([] {
                   std::vector<std::string> names;
                   for (const Preset& p : presets()) names.push_back(p.name);
                   return names;
                 }()));
  auto* in = sub->add_option("--input", cfg.input, "problem or function JSON file");
  ex->excludes(in);
  in->excludes(ex);
  sub->add_option("--tau", cfg.tau, "tau grid start:stop:count");
  sub->add_option("--rcuts", cfg.rcuts, "number of r levels in fan output");
  sub->add_option("--s", cfg.s, "comma-separated transform variables")->delimiter(',');
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "output path");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy conformable fractional calculus on triangular fuzzy numbers", "fuzzcal"};
  app.require_subcommand(1);
  RunConfig cfg;
  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&);
  };
  const Entry entries[] = {
      {"solve", "solve an initial value problem and tabulate the solution", cmd_solve},
      {"derive", "conformable derivative trace with case tags", cmd_derive},
      {"switchpoints", "switching points of the differentiability case", cmd_switchpoints},
      {"laplace", "numeric conformable Laplace transform", cmd_laplace},
  };
  for (const Entry& e : entries) add_common(app.add_subcommand(e.name, e.help), cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Entry* chosen = nullptr;
  for (const Entry& e : entries) {
    if (app.got_subcommand(e.name)) chosen = &e;
  }
  if (cfg.example.empty() == cfg.input.empty()) {
    err << "error: give exactly one of --example or --input\n";
    return kUsage;
  }

  try {
    return chosen->fn(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const NotGHDifferentiable& e) {
    err << "error: not gH-differentiable at tau = " << format_number(e.tau()) << ": "
        << e.what() << '\n';
    return kMath;
  } catch (const DivergentTransform& e) {
    err << "error: divergent transform at s = " << format_number(e.s()) << ": " << e.what()
        << '\n';
    return kMath;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMath;
  }
}

}  // namespace fuzzcal::cli

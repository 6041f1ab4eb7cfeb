#include "fuzzcal/io.hpp"

#include <charconv>
#include <cmath>

#include "fuzzcal/errors.hpp"

namespace fuzzcal {

using nlohmann::json;

void to_json(json& j, const TriangularFuzzyNumber& p) {
  j = json::array({p.left(), p.peak(), p.right()});
}

void from_json(const json& j, TriangularFuzzyNumber& p) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    throw InvalidInput("triangular fuzzy number must be a JSON array [a, b, c]");
  }
  try {
    p = TFN(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
  } catch (const NotTriangular& e) {
    throw InvalidInput(e.what());
  }
}

namespace {

double number_field(const json& j, const char* key, std::optional<double> fallback = {}) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  if (!j.at(key).is_number()) throw InvalidInput(std::string("field '") + key + "' must be a number");
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw InvalidInput(std::string("field '") + key + "' must be finite");
  return v;
}

TFN tfn_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key).get<TFN>();
}

ConformableContext context_fields(const json& j) {
  try {
    return ConformableContext(number_field(j, "alpha"), number_field(j, "tau0", 0.0));
  } catch (const DomainError& e) {
    throw InvalidInput(e.what());
  }
}

Basis basis_from(const std::string& s) {
  if (s == "constant") return Basis::Constant;
  if (s == "exp_conformable") return Basis::ConformableExp;
  if (s == "sin") return Basis::Sine;
  if (s == "cos") return Basis::Cosine;
  throw InvalidInput("unknown basis '" + s + "'");
}

}  // namespace

LinearFCFIVP problem_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("problem must be a JSON object");
  if (!j.contains("template") || !j.at("template").is_string()) {
    throw InvalidInput("missing string field 'template'");
  }
  const std::string kind = j.at("template").get<std::string>();
  const double kappa = number_field(j, "kappa");
  if (!(kappa > 0.0)) throw InvalidInput("kappa must be > 0");
  const ConformableContext ctx = context_fields(j);
  const TFN w0 = tfn_field(j, "w0");
  const bool has_ambient = j.contains("ambient") && !j.at("ambient").is_null();
  if (kind == "growth" || kind == "decay") {
    if (has_ambient) throw InvalidInput("'ambient' is only valid for the cooling template");
    return kind == "growth" ? growth_problem(w0, kappa, ctx) : decay_problem(w0, kappa, ctx);
  }
  if (kind == "cooling") {
    if (!has_ambient) throw InvalidInput("cooling template needs 'ambient'");
    return cooling_problem(w0, tfn_field(j, "ambient"), kappa, ctx);
  }
  throw InvalidInput("unknown template '" + kind + "'");
}

std::string template_name(const LinearFCFIVP& p) {
  if (p.ambient) return "cooling";
  return p.sign > 0 ? "growth" : "decay";
}

json problem_to_json(const LinearFCFIVP& p) {
  json j{{"template", template_name(p)},
         {"kappa", p.kappa},
         {"alpha", p.ctx.alpha()},
         {"tau0", p.ctx.basepoint()},
         {"w0", p.w0}};
  if (p.ambient) j["ambient"] = *p.ambient;
  return j;
}

FunctionForm form_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("function must be a JSON object");
  const ConformableContext ctx = context_fields(j);
  Domain domain{ctx.basepoint()};
  if (j.contains("domain")) {
    const json& d = j.at("domain");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number() ||
        !(d[1].is_number() || d[1].is_null())) {
      throw InvalidInput("'domain' must be [lo, hi] with hi a number or null");
    }
    domain.lo = d[0].get<double>();
    if (d[1].is_number()) domain.hi = d[1].get<double>();
  }
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw InvalidInput("missing array field 'terms'");
  }
  std::vector<Term> terms;
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("basis") || !t.at("basis").is_string()) {
      throw InvalidInput("each term needs a string 'basis'");
    }
    Term term;
    term.basis = basis_from(t.at("basis").get<std::string>());
    term.coefficient = tfn_field(t, "coefficient");
    term.rate = number_field(t, "rate", term.basis == Basis::Constant ? 0.0 : 1.0);
    term.phase = number_field(t, "phase", 0.0);
    terms.push_back(term);
  }
  try {
    return FunctionForm(ctx, std::move(terms), domain);
  } catch (const DomainError& e) {
    throw InvalidInput(e.what());
  }
}

json form_to_json(const FunctionForm& f) {
  json terms = json::array();
  for (const Term& t : f.terms()) {
    terms.push_back({{"basis", to_string(t.basis)},
                     {"coefficient", t.coefficient},
                     {"rate", t.rate},
                     {"phase", t.phase}});
  }
  json hi = std::isinf(f.domain().hi) ? json(nullptr) : json(f.domain().hi);
  return {{"alpha", f.context().alpha()},
          {"tau0", f.context().basepoint()},
          {"domain", json::array({f.domain().lo, hi})},
          {"terms", terms}};
}

std::string format_number(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void write_rcut_table(std::ostream& os, const TriangularFuzzyNumber& p, std::size_t levels) {
  if (levels < 2) throw DomainError("r-cut table needs at least two levels");
  os << "r,lo,hi\n";
  for (std::size_t k = 0; k < levels; ++k) {
    const double r = k + 1 == levels ? 1.0 : static_cast<double>(k) / (levels - 1);
    const RCutInterval cut = r_cut(p, r);
    os << format_number(r) << ',' << format_number(cut.lo) << ',' << format_number(cut.hi)
       << '\n';
  }
}

void write_trace(std::ostream& os, std::span<const TraceRow> rows) {
  const bool tagged = !rows.empty() && rows.front().diff_case.has_value();
  os << (tagged ? "tau,w1,w2,w3,case\n" : "tau,w1,w2,w3\n");
  for (const TraceRow& row : rows) {
    os << format_number(row.tau) << ',' << format_number(row.value.left()) << ','
       << format_number(row.value.peak()) << ',' << format_number(row.value.right());
    if (tagged) {
      os << ',' << (row.diff_case.value_or(DiffCase::CaseI) == DiffCase::CaseI ? "I" : "II");
    }
    os << '\n';
  }
}

void write_fan(std::ostream& os, const FuzzyFunction& f, std::span<const double> taus,
               std::size_t levels) {
  if (levels < 2) throw DomainError("fan export needs at least two r levels");
  os << "tau,r,lo,hi\n";
  for (double tau : taus) {
    const TFN w = f(tau);
    for (std::size_t k = 0; k < levels; ++k) {
      const double r = k + 1 == levels ? 1.0 : static_cast<double>(k) / (levels - 1);
      const RCutInterval cut = r_cut(w, r);
      os << format_number(tau) << ',' << format_number(r) << ',' << format_number(cut.lo)
         << ',' << format_number(cut.hi) << '\n';
    }
  }
}

void write_transform_table(std::ostream& os, std::span<const TransformValue> rows) {
  os << "s,W1,W2,W3\n";
  for (const TransformValue& row : rows) {
    os << format_number(row.s) << ',' << format_number(row.value.left()) << ','
       << format_number(row.value.peak()) << ',' << format_number(row.value.right()) << '\n';
  }
}

}  // namespace fuzzcal

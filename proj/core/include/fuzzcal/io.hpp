#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "fuzzcal/conformable.hpp"
#include "fuzzcal/function_form.hpp"
#include "fuzzcal/fuzzy_function.hpp"
#include "fuzzcal/fuzzy_number.hpp"
#include "fuzzcal/ivp.hpp"
#include "fuzzcal/laplace.hpp"

namespace fuzzcal {

// Triangular numbers serialize as the JSON array [a, b, c].
void to_json(nlohmann::json& j, const TriangularFuzzyNumber& p);
void from_json(const nlohmann::json& j, TriangularFuzzyNumber& p);

/// {"template": "growth"|"decay"|"cooling", "kappa", "alpha", "tau0",
///  "w0": [a,b,c], "ambient": [a,b,c]}; ambient is required for cooling and
/// rejected otherwise. kappa must be > 0, alpha in (0,1], tau0 >= 0 (default 0).
/// Throws InvalidInput on any violation.
LinearFCFIVP problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const LinearFCFIVP& p);
std::string template_name(const LinearFCFIVP& p);

/// {"alpha", "tau0", "domain": [lo, hi|null], "terms": [{"basis":
///  "constant"|"exp_conformable"|"sin"|"cos", "coefficient": [a,b,c],
///  "rate", "phase"}]}. Throws InvalidInput.
FunctionForm form_from_json(const nlohmann::json& j);
nlohmann::json form_to_json(const FunctionForm& f);

/// 17 significant digits, '.' separator, shortest %g-style layout.
std::string format_number(double v);

/// Rows `r,lo,hi` at levels k/(levels-1), k = 0..levels-1.
void write_rcut_table(std::ostream& os, const TriangularFuzzyNumber& p,
                      std::size_t levels);

struct TraceRow {
  double tau;
  TriangularFuzzyNumber value;
  std::optional<DiffCase> diff_case;
};

/// Rows `tau,w1,w2,w3`, plus `,case` (I or II) when the first row has a tag.
void write_trace(std::ostream& os, std::span<const TraceRow> rows);

/// Rows `tau,r,lo,hi` ordered by tau then r.
void write_fan(std::ostream& os, const FuzzyFunction& f, std::span<const double> taus,
               std::size_t levels);

/// Rows `s,W1,W2,W3`.
void write_transform_table(std::ostream& os, std::span<const TransformValue> rows);

}  // namespace fuzzcal

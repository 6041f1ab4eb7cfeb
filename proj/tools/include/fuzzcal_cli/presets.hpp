#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzcal/function_form.hpp"
#include "fuzzcal/ivp.hpp"

namespace fuzzcal::cli {

struct Grid {
  double start;
  double stop;
  std::size_t count;

  /// start + (stop - start) k / (count - 1), with the last node exactly stop.
  std::vector<double> nodes() const;
};

/// Built-in worked examples. A preset is either an initial value problem
/// (solved before anything else) or a bare function.
struct Preset {
  std::string name;
  std::string summary;
  std::optional<LinearFCFIVP> problem;
  std::optional<FunctionForm> function;
  Grid solve_grid;
  Grid derive_grid;
  Grid switch_grid;
  std::vector<double> s_values;
};

const std::vector<Preset>& presets();
/// nullptr when unknown.
const Preset* find_preset(const std::string& name);

}  // namespace fuzzcal::cli

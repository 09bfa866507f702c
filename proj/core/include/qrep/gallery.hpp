#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrep/io.hpp"

namespace qrep {

// Outcome of a worked example. `report` collects one part per asserted
// conclusion; `facts` holds computed quantities; `bundle` is a document with
// the scenario's inputs, loadable by the CLI.
struct ScenarioResult {
  std::string name;
  int parameter = 0;
  std::string description;
  Report report;
  json facts = json::object();
  Document bundle;
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::vector<int> parameters;
  int default_parameter;
};

const std::vector<ScenarioInfo>& gallery_scenarios();
// Throws InvalidArgument for an unknown name or unsupported parameter.
ScenarioResult run_scenario(const std::string& name, std::optional<int> parameter = std::nullopt);

ScenarioResult scenario_mq(int m);
ScenarioResult scenario_matrix_algebra(int m);
ScenarioResult scenario_yangian_eval(int m);
ScenarioResult scenario_so_quadratic(int m);
ScenarioResult scenario_finite_group();

// Relations Σ A^{ij}_{ab} (1−B)^{cd}_{kl} x_{g(a,c)} x_{g(b,d)} for all (ij),
// (kl), written directly in the free algebra on `ngen` generators; g(i,j)
// indexes the generator standing at entry (i,j) of the matrix.
std::vector<SVec> manin_relation_list(const Idempotent& a, const Idempotent& b, int ngen,
                                      const std::function<int(int, int)>& g);

// Relations of the q-deformed matrix bialgebra on generators a^i_j (index
// (i−1)m + j − 1), one per listed identity, unreduced.
std::vector<SVec> mq_relation_list(int m, const Scalar& q);

}  // namespace qrep

#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "r13lab/korn_verifier.hpp"
#include "r13lab/model_params.hpp"
#include "r13lab/onsager_coefficients.hpp"
#include "r13lab/slab_solver.hpp"

namespace r13 {

nlohmann::json to_json(const ConstraintReport& r);
nlohmann::json to_json(const BoundaryCoeffs& c);
nlohmann::json to_json(const BoundaryAudit& a);
nlohmann::json to_json(const DuplicateAudit& a);
nlohmann::json to_json(const KornReport& r);
nlohmann::json to_json(const SolveMonitors& m);
nlohmann::json to_json(const CoercivityReport& r);
nlohmann::json to_json(const InfSupReport& r);
nlohmann::json to_json(const ConvergenceReport& r);

/// Column names of the 13 state components.
const char* component_name(int c);

/// x, the state (rho recovered from p), and the physical stress and heat flux.
void write_profile_csv(std::ostream& os, const SteadySolution& sol, int samples);
/// Same layout for a transient dof vector with rho in slot 0.
void write_profile_csv(std::ostream& os, const SlabAssembly& as, const Eigen::VectorXd& U, int samples);

void write_monitor_header(std::ostream& os);
void write_monitor_row(std::ostream& os, int step, double t, const SolveMonitors& m);

void write_korn_tail_csv(std::ostream& os, const KornReport& r);
void write_convergence_csv(std::ostream& os, const ConvergenceReport& r);

} // namespace r13

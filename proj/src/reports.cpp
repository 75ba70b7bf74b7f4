#include "r13lab/reports.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace r13 {

using nlohmann::json;

namespace {

// JSON has no infinity; non-finite values become strings.
json num(double v)
{
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

std::string g17(double v) { return fmt::format("{:.17g}", v); }

} // namespace

json to_json(const ConstraintReport& r)
{
    return {{"z1", num(r.z1)}, {"w1", num(r.w1)}, {"status1", to_string(r.status1)},
            {"z2", num(r.z2)}, {"w2", num(r.w2)}, {"status2", to_string(r.status2)},
            {"strict", r.strict()}};
}

json to_json(const BoundaryCoeffs& c)
{
    json j;
    for (int i = 1; i <= 8; ++i) j[fmt::format("S{}", i)] = num(c.S[i]);
    for (int i = 1; i <= 4; ++i) j[fmt::format("R{}", i)] = num(c.R[i]);
    j["T1"] = num(c.T1);
    j["T2"] = num(c.T2);
    j["T1_tilde"] = num(c.T1_tilde);
    j["T2_tilde"] = num(c.T2_tilde);
    j["L1_theta"] = num(c.L1_theta);
    j["chi_tilde"] = num(c.chi_tilde);
    json C;
    for (int i = 1; i <= 7; ++i) C[fmt::format("C{}", i)] = num(c.constants.C[i]);
    j["constants"] = C;
    j["constants_consistent"] = c.constants.consistent();
    j["skipped_ratios"] = c.constants.skipped;
    const auto& m = c.matching;
    j["matching"] = {{"alpha1", m.alpha1}, {"beta1", m.beta1}, {"alpha2", m.alpha2}, {"beta2", m.beta2},
                     {"alpha3", m.alpha3}, {"beta3", m.beta3}, {"lsq_residual", m.lsq_residual},
                     {"condition", num(m.condition)}, {"consistent", m.consistent()}};
    return j;
}

namespace {

json items(const std::vector<AuditItem>& v)
{
    json a = json::array();
    for (const auto& i : v) a.push_back({{"name", i.name}, {"margin", num(i.margin)}, {"pass", i.pass}});
    return a;
}

} // namespace

json to_json(const BoundaryAudit& a)
{
    return {{"items", items(a.items)},
            {"block1_eigs", {a.block1_eigs[0], a.block1_eigs[1]}},
            {"block2_eigs", {a.block2_eigs[0], a.block2_eigs[1]}},
            {"pass", a.pass()}};
}

json to_json(const DuplicateAudit& a) { return {{"items", items(a.items)}, {"pass", a.pass()}}; }

json to_json(const KornReport& r)
{
    return {{"subdivisions", r.subdivisions},
            {"degree", r.degree},
            {"n_dofs", r.n_dofs},
            {"lambda_min_classical", num(r.lambda_min_classical)},
            {"lambda_min_boundary", num(r.lambda_min_boundary)},
            {"stf_kernel_dim", r.stf_kernel_dim},
            {"kernel_threshold", r.kernel_threshold},
            {"stf_spectrum_head", r.stf_spectrum_head},
            {"classical_spectrum_head", r.classical_spectrum_head},
            {"boundary_spectrum_head", r.boundary_spectrum_head}};
}

json to_json(const SolveMonitors& m)
{
    return {{"energy", num(m.energy)},     {"W1", num(m.W1)},
            {"I_bdry", num(m.I_bdry)},     {"entropy", num(m.entropy)},
            {"mass", num(m.mass)},         {"residual", num(m.residual)},
            {"bilinear", num(m.bilinear)}, {"load", num(m.load)},
            {"identity_defect", num(m.identity_defect)}};
}

json to_json(const CoercivityReport& r)
{
    return {{"min_eig", num(r.min_eig)}, {"max_eig", num(r.max_eig)}, {"bubble_value", num(r.bubble_value)},
            {"bubble_norm", num(r.bubble_norm)}, {"size", r.size}};
}

json to_json(const InfSupReport& r)
{
    return {{"beta", num(r.beta)}, {"null_eig", num(r.null_eig)}, {"n_eigs", r.eigs.size()}};
}

json to_json(const ConvergenceReport& r)
{
    json lv = json::array();
    for (const auto& l : r.levels) {
        json comp;
        for (int c = 0; c < kFields; ++c) comp[component_name(c)] = l.component_error[c];
        lv.push_back({{"n_elements", l.n_elements}, {"error", l.error}, {"ratio", num(l.ratio)},
                      {"rate", num(l.rate)}, {"components", comp}});
    }
    return {{"reference_elements", r.reference_elements}, {"degree", r.degree}, {"levels", lv}};
}

const char* component_name(int c)
{
    static constexpr const char* names[] = {"rho", "theta", "u1", "u2", "u3", "s1", "s2",
                                            "s3", "sigma11", "sigma22", "sigma12", "sigma13", "sigma23"};
    return names[c];
}

namespace {

void profile_header(std::ostream& os)
{
    os << "x";
    for (int c = 0; c < kFields; ++c) os << ',' << component_name(c);
    os << ",phys_sigma11,phys_sigma22,phys_sigma12,phys_sigma13,phys_sigma23,phys_s1,phys_s2,phys_s3\n";
}

void profile_rows(std::ostream& os, const SlabAssembly& as, const Eigen::VectorXd& U, bool slot0_pressure,
                  int samples)
{
    profile_header(os);
    const int n = std::max(samples, 2);
    for (int i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / (n - 1);
        StateVector v, d;
        evaluate_state(as, U, x, slot0_pressure, v, d);
        const PhysicalFluxes pf = physical_fluxes(v, d, as.model, as.Kn);
        os << g17(x);
        for (double a : v.to_array()) os << ',' << g17(a);
        for (double a : pf.sigma.c) os << ',' << g17(a);
        for (int j = 0; j < 3; ++j) os << ',' << g17(pf.s(j));
        os << '\n';
    }
}

} // namespace

void write_profile_csv(std::ostream& os, const SteadySolution& sol, int samples)
{
    profile_rows(os, sol.assembly, sol.U, true, samples);
}

void write_profile_csv(std::ostream& os, const SlabAssembly& as, const Eigen::VectorXd& U, int samples)
{
    profile_rows(os, as, U, false, samples);
}

void write_monitor_header(std::ostream& os) { os << "step,t,energy,W1,I_bdry,entropy,mass,residual\n"; }

void write_monitor_row(std::ostream& os, int step, double t, const SolveMonitors& m)
{
    os << step << ',' << g17(t) << ',' << g17(m.energy) << ',' << g17(m.W1) << ',' << g17(m.I_bdry) << ','
       << g17(m.entropy) << ',' << g17(m.mass) << ',' << g17(m.residual) << '\n';
}

void write_korn_tail_csv(std::ostream& os, const KornReport& r)
{
    os << "subdivisions,spectrum,index,eigenvalue\n";
    auto emit = [&](const char* name, const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            os << r.subdivisions << ',' << name << ',' << i << ',' << g17(v[i]) << '\n';
    };
    emit("stf", r.stf_spectrum_head);
    emit("classical", r.classical_spectrum_head);
    emit("boundary", r.boundary_spectrum_head);
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& r)
{
    os << "n_elements,error,ratio,rate";
    for (int c = 0; c < kFields; ++c) os << ",err_" << component_name(c);
    os << '\n';
    for (const auto& l : r.levels) {
        os << l.n_elements << ',' << g17(l.error) << ',' << g17(l.ratio) << ',' << g17(l.rate);
        for (double e : l.component_error) os << ',' << g17(e);
        os << '\n';
    }
}

} // namespace r13

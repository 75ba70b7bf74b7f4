#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>
#include <openssl/evp.h>

#include "r13lab/errors.hpp"
#include "r13lab/korn_verifier.hpp"
#include "r13lab/model_params.hpp"
#include "r13lab/onsager_coefficients.hpp"
#include "r13lab/reference_table.hpp"
#include "r13lab/reports.hpp"
#include "r13lab/slab_solver.hpp"

namespace r13::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ConfigError(fmt::format("cannot read '{}'", p.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
    return hex;
}

struct Options {
    std::string model_path;
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    int threads = 1;
};

// Problem document. Every field is optional and falls back to the defaults below.
struct RunConfig {
    json doc = json::object();
    fs::path base;  ///< directory for resolving relative paths

    template <class T>
    T get(const std::string& key, T fallback) const
    {
        if (!doc.contains(key)) return fallback;
        try {
            return doc.at(key).get<T>();
        } catch (const json::exception& e) {
            throw ConfigError(fmt::format("config field '{}': {}", key, e.what()));
        }
    }
};

RunConfig load_config(const std::string& path)
{
    RunConfig c;
    if (path.empty()) return c;
    const std::string text = read_file(path);
    try {
        c.doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("config '{}' is not valid JSON: {}", path, e.what()));
    }
    if (!c.doc.is_object()) throw ConfigError("config document must be a JSON object");
    c.base = fs::path(path).parent_path();
    return c;
}

class Run {
public:
    Run(std::string command, Options opt, std::ostream& out)
        : command_(std::move(command)), opt_(std::move(opt)), out_(out)
    {
        cfg_ = load_config(opt_.config_path);
        if (!opt_.config_path.empty()) inputs_[opt_.config_path] = sha256_hex(read_file(opt_.config_path));
        dir_ = output_dir();
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec || !fs::is_directory(dir_))
            throw ConfigError(fmt::format("output directory '{}' is not writable", dir_.string()));
    }

    const RunConfig& cfg() const { return cfg_; }
    const Options& opt() const { return opt_; }
    std::ostream& out() { return out_; }

    MolecularModel model()
    {
        std::string path = opt_.model_path;
        if (path.empty() && cfg_.doc.contains("model")) path = (cfg_.base / cfg_.get<std::string>("model", "")).string();
        if (path.empty()) throw ConfigError("no model given (use --model or a 'model' entry in the config)");
        if (!fs::exists(path)) throw ConfigError(fmt::format("model file '{}' does not exist", path));
        inputs_[path] = sha256_hex(read_file(path));
        return load_model_file(path);
    }

    void write(const std::string& name, const std::string& content)
    {
        const fs::path p = dir_ / name;
        std::ofstream f(p, std::ios::binary);
        if (!f) throw ConfigError(fmt::format("cannot write '{}'", p.string()));
        f << content;
        outputs_[name] = sha256_hex(content);
    }

    void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

    void finish()
    {
        json m;
        m["command"] = command_;
        m["version"] = R13LAB_VERSION;
        m["seed"] = opt_.seed;
        m["threads"] = opt_.threads;
        json in = json::object();
        for (const auto& [k, v] : inputs_) in[fs::path(k).filename().string()] = {{"path", k}, {"sha256", v}};
        m["inputs"] = in;
        m["outputs"] = outputs_;
        m["eigen"] = fmt::format("{}.{}.{}", EIGEN_WORLD_VERSION, EIGEN_MAJOR_VERSION, EIGEN_MINOR_VERSION);
        m["nlohmann_json"] = fmt::format("{}.{}.{}", NLOHMANN_JSON_VERSION_MAJOR, NLOHMANN_JSON_VERSION_MINOR,
                                         NLOHMANN_JSON_VERSION_PATCH);
        m["cli11"] = CLI11_VERSION;
        const fs::path p = dir_ / "manifest.json";
        std::ofstream f(p, std::ios::binary);
        f << m.dump(2) << "\n";
        fmt::print(out_, "wrote {} file(s) and manifest.json to {}\n", outputs_.size(), dir_.string());
    }

private:
    fs::path output_dir() const
    {
        if (!opt_.out_dir.empty()) return opt_.out_dir;
        if (const char* env = std::getenv("R13_OUT_DIR"); env && *env) return env;
        return fs::path("r13lab-out") / command_;
    }

    std::string command_;
    Options opt_;
    std::ostream& out_;
    RunConfig cfg_;
    fs::path dir_;
    std::map<std::string, std::string> inputs_;
    std::map<std::string, std::string> outputs_;
};

SlabMesh mesh_from(const RunConfig& c)
{
    SlabMesh m;
    if (c.doc.contains("mesh")) {
        const json& j = c.doc.at("mesh");
        m.n_elements = j.value("elements", m.n_elements);
        m.degree = j.value("degree", m.degree);
    }
    m.validate();
    return m;
}

WallData wall_from(const RunConfig& c)
{
    WallData w;
    if (!c.doc.contains("wall")) return w;
    const json& j = c.doc.at("wall");
    auto pair = [&](const char* key) {
        std::array<double, 2> v{0.0, 0.0};
        if (j.contains(key)) {
            const auto a = j.at(key).get<std::vector<double>>();
            if (a.size() != 2) throw ConfigError(fmt::format("wall.{} needs two entries (x = 0, x = 1)", key));
            v = {a[0], a[1]};
        }
        return v;
    };
    w.theta = pair("theta");
    const auto t1 = pair("u_t1"), t2 = pair("u_t2");
    w.u[0] = {t1[0], t2[0]};
    w.u[1] = {t1[1], t2[1]};
    return w;
}

double kn_from(const RunConfig& c)
{
    const double Kn = c.get<double>("Kn", 0.1);
    if (!(Kn > 0.0)) throw ConfigError("Kn must be positive");
    return Kn;
}

void print_header(Run& run, const MolecularModel& m)
{
    fmt::print(run.out(), "model {} (eta = {}{})\n", m.name, m.eta_label(), m.maxwell ? ", Maxwell" : "");
}

// ---------------------------------------------------------------- commands

void cmd_validate_params(Run& run)
{
    const MolecularModel m = run.model();
    print_header(run, m);
    const ConstraintReport r = thermo_discriminants(m);
    json rep;
    rep["model"] = m.name;
    rep["eta"] = m.eta_label();
    rep["k"] = m.k;
    rep["constraints"] = to_json(r);
    fmt::print(run.out(), "  z1 = {:.4e}  w1 = {:.4f}  ({})\n", r.z1, r.w1, to_string(r.status1));
    fmt::print(run.out(), "  z2 = {:.4e}  w2 = {:.4f}  ({})\n", r.z2, r.w2, to_string(r.status2));

    for (const ReferenceRow& row : kReferenceTable) {
        if (row.eta != m.eta_label() || m.maxwell) continue;
        auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
        json cmp = {{"z1", {{"computed", r.z1}, {"table", row.z1}, {"rel_diff", rel(r.z1, row.z1)}}},
                    {"w1", {{"computed", r.w1}, {"table", row.w1}, {"rel_diff", rel(r.w1, row.w1)}}},
                    {"z2", {{"computed", r.z2}, {"table", row.z2}, {"rel_diff", rel(r.z2, row.z2)}}},
                    {"w2", {{"computed", r.w2}, {"table", row.w2}, {"rel_diff", rel(r.w2, row.w2)}}}};
        rep["table_comparison"] = cmp;
        for (const char* key : {"z1", "w1", "z2", "w2"})
            fmt::print(run.out(), "  {} table {:.4e}  relative difference {:.2e}\n", key,
                       cmp[key]["table"].get<double>(), cmp[key]["rel_diff"].get<double>());
    }
    run.write_json("validate_params.json", rep);
}

void cmd_derive_bcs(Run& run)
{
    const MolecularModel m = run.model();
    print_header(run, m);
    const double tol = run.cfg().get<double>("ratio_tolerance", 1e-8);
    const BoundaryCoeffs c = boundary_coefficients(m, tol);
    const BoundaryAudit psd = validate_boundary_psd(c);
    const DuplicateAudit dup = audit_duplicates(c);
    json rep = {{"model", m.name}, {"coefficients", to_json(c)}, {"psd_audit", to_json(psd)},
                {"duplicate_audit", to_json(dup)}};
    run.write_json("boundary_coefficients.json", rep);
    for (int i = 1; i <= 8; ++i) fmt::print(run.out(), "  S{} = {: .10e}\n", i, c.S[i]);
    for (int i = 1; i <= 4; ++i) fmt::print(run.out(), "  R{} = {: .10e}\n", i, c.R[i]);
    fmt::print(run.out(), "  T1 = {: .10e}\n  T2 = {: .10e}\n", c.T1, c.T2);
    fmt::print(run.out(), "  positivity audit: {}\n  path agreement audit: {}\n", psd.pass() ? "pass" : "FAIL",
               dup.pass() ? "pass" : "FAIL");
    if (!c.constants.consistent()) throw DataError("proportionality constants are inconsistent");
    if (!c.matching.consistent()) throw DataError("matching system has no consistent solution");
    if (!psd.pass()) throw DataError("boundary quadratic form is not positive semidefinite");
    if (!dup.pass()) throw DataError("boundary coefficients disagree between derivation paths");
}

void cmd_korn(Run& run)
{
    const RunConfig& cfg = run.cfg();
    const json k = cfg.doc.value("korn", json::object());
    const auto meshes = k.value("meshes", std::vector<int>{2, 4});
    const int degree = k.value("degree", 2);
    const int samples = k.value("ck_samples", 100);

    json reps = json::array();
    std::string tails;
    for (std::size_t i = 0; i < meshes.size(); ++i) {
        const CubeMesh mesh(meshes[i], degree);
        const KornReport r = korn_constants(mesh, assemble_cube_forms(mesh), true, true);
        reps.push_back(to_json(r));
        std::ostringstream os;
        write_korn_tail_csv(os, r);
        tails += i == 0 ? os.str() : os.str().substr(os.str().find('\n') + 1);
        fmt::print(run.out(), "  {}^3 Q{}: kernel dim {}, lambda classical {:.6e}, lambda boundary {:.6e}\n", meshes[i],
                   degree, r.stf_kernel_dim, r.lambda_min_classical, r.lambda_min_boundary);
    }
    const CKStudy ck = ck_random_study(samples, run.opt().seed);
    fmt::print(run.out(), "  CK fields: max |stf grad| {:.3e}, min boundary norm^2 {:.3e}\n", ck.max_stf_residual,
               ck.min_boundary_norm2);
    run.write_json("korn.json", {{"meshes", reps},
                                 {"ck", {{"samples", ck.samples},
                                         {"max_stf_residual", ck.max_stf_residual},
                                         {"min_boundary_norm2", ck.min_boundary_norm2}}}});
    run.write("korn_tail.csv", tails);
}

SteadyProblem steady_problem(Run& run)
{
    SteadyProblem p;
    p.model = run.model();
    p.Kn = kn_from(run.cfg());
    p.mesh = mesh_from(run.cfg());
    p.wall = wall_from(run.cfg());
    p.formulation = parse_formulation(run.cfg().get<std::string>("formulation", "auto"));
    p.threads = run.opt().threads;
    return p;
}

void cmd_solve_steady(Run& run)
{
    const SteadyProblem p = steady_problem(run);
    print_header(run, p.model);
    const SteadySolution sol = solve_steady(p);
    const double tol = run.cfg().get<double>("residual_tolerance", 1e-8);
    if (!(sol.monitors.residual <= tol))
        throw SolverError(fmt::format("linear residual {:.3e} exceeds {:.1e}", sol.monitors.residual, tol));

    std::ostringstream csv;
    write_profile_csv(csv, sol, run.cfg().get<int>("profile_samples", 101));
    run.write("profile.csv", csv.str());
    run.write_json("solve_report.json", {{"model", p.model.name},
                                         {"formulation", to_string(sol.formulation)},
                                         {"Kn", p.Kn},
                                         {"elements", p.mesh.n_elements},
                                         {"degree", p.mesh.degree},
                                         {"n_dofs", sol.assembly.space.n_dofs()},
                                         {"multiplier", sol.multiplier},
                                         {"monitors", to_json(sol.monitors)}});
    const auto& m = sol.monitors;
    fmt::print(run.out(), "  {} formulation, {} dofs, residual {:.2e}\n", to_string(sol.formulation),
               sol.assembly.space.n_dofs(), m.residual);
    fmt::print(run.out(), "  E = {:.6e}  W1 = {:.6e}  I_bdry = {:.6e}  identity defect {:.2e}\n", m.energy, m.W1,
               m.I_bdry, m.identity_defect);
}

void cmd_solve_transient(Run& run)
{
    const MolecularModel model = run.model();
    print_header(run, model);
    const RunConfig& cfg = run.cfg();
    const double dt = cfg.get<double>("dt", 0.01);
    const int steps = cfg.get<int>("n_steps", 200);
    if (steps < 0) throw ConfigError("n_steps must be nonnegative");
    const TimeScheme scheme = parse_scheme(cfg.get<std::string>("scheme", "implicit-euler"));

    TransientStepper st(make_assembly(model, kn_from(cfg), mesh_from(cfg), SlabLayout::nonmaxwell, run.opt().threads),
                        dt, scheme);
    std::mt19937_64 rng(run.opt().seed);
    Eigen::VectorXd U = random_dofs(st.assembly().space, rng);

    std::ostringstream mon;
    write_monitor_header(mon);
    SolveMonitors m0 = st.monitors(U);
    write_monitor_row(mon, 0, 0.0, m0);
    double prevE = m0.energy;
    bool monotone = true;
    for (int n = 1; n <= steps; ++n) {
        double res = 0.0;
        U = st.step(U, &res);
        SolveMonitors m = st.monitors(U);
        m.residual = res;
        write_monitor_row(mon, n, n * dt, m);
        if (m.energy > prevE + 1e-12 * m0.energy) monotone = false;
        prevE = m.energy;
    }
    run.write("monitors.csv", mon.str());
    std::ostringstream prof;
    write_profile_csv(prof, st.assembly(), U, cfg.get<int>("profile_samples", 101));
    run.write("profile_final.csv", prof.str());
    run.write_json("transient_report.json", {{"model", model.name},
                                             {"scheme", to_string(scheme)},
                                             {"dt", dt},
                                             {"n_steps", steps},
                                             {"initial", to_json(m0)},
                                             {"final", to_json(st.monitors(U))},
                                             {"energy_monotone", monotone}});
    fmt::print(run.out(), "  {} steps of {} (dt = {}): E {:.6e} -> {:.6e}, monotone: {}\n", steps, to_string(scheme),
               dt, m0.energy, prevE, monotone ? "yes" : "no");
}

void cmd_converge(Run& run)
{
    SteadyProblem p = steady_problem(run);
    print_header(run, p.model);
    const auto ladder = run.cfg().get<std::vector<int>>("ladder", {8, 16, 32, 64});
    const int reference = run.cfg().get<int>("reference", 256);
    const ConvergenceReport rep = convergence_study(p, ladder, reference);
    std::ostringstream csv;
    write_convergence_csv(csv, rep);
    run.write("convergence.csv", csv.str());
    run.write_json("convergence.json", to_json(rep));
    for (const auto& l : rep.levels)
        fmt::print(run.out(), "  n = {:4d}  error {:.4e}  ratio {:.3f}  rate {:.3f}\n", l.n_elements, l.error, l.ratio,
                   l.rate);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"r13lab: R13 boundary-coefficient audits, Korn certificates and 1-D slab solves"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--model", opt.model_path, "molecular model file (JSON)");
    app.add_option("--config", opt.config_path, "problem document (JSON)");
    app.add_option("--out", opt.out_dir, "output directory (overrides R13_OUT_DIR)");
    app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
    app.add_option("--threads", opt.threads, "assembly threads")->check(CLI::Range(1, 256))->capture_default_str();

    const std::map<std::string, void (*)(Run&)> commands = {
        {"validate-params", cmd_validate_params}, {"derive-bcs", cmd_derive_bcs},
        {"korn", cmd_korn},                       {"solve-steady", cmd_solve_steady},
        {"solve-transient", cmd_solve_transient}, {"converge", cmd_converge},
    };
    const std::map<std::string, std::string> help = {
        {"validate-params", "thermodynamic constraint report"},
        {"derive-bcs", "boundary coefficients and their audits"},
        {"korn", "conformal-Killing kernel and Korn constants on cube meshes"},
        {"solve-steady", "steady slab solve"},
        {"solve-transient", "implicit time stepping with homogeneous walls"},
        {"converge", "self-convergence study against a fine reference"},
    };
    for (const auto& [name, fn] : commands) app.add_subcommand(name, help.at(name))->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? 0 : 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        Run run(name, opt, out);
        commands.at(name)(run);
        run.finish();
        return 0;
    } catch (const Error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return 1;
    }
}

} // namespace r13::cli

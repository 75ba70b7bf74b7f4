#include "r13lab/slab_solver.hpp"

#include <chrono>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SparseLU>

#include "r13lab/errors.hpp"
#include "r13lab/quadrature.hpp"

namespace r13 {

using SpMat = Eigen::SparseMatrix<double>;

Formulation parse_formulation(const std::string& s)
{
    if (s == "nonmaxwell") return Formulation::nonmaxwell;
    if (s == "maxwell") return Formulation::maxwell;
    if (s == "auto" || s == "automatic") return Formulation::automatic;
    throw ConfigError("unknown formulation '" + s + "' (expected nonmaxwell, maxwell or auto)");
}

const char* to_string(Formulation f)
{
    switch (f) {
    case Formulation::nonmaxwell: return "nonmaxwell";
    case Formulation::maxwell: return "maxwell";
    case Formulation::automatic: return "auto";
    }
    return "?";
}

TimeScheme parse_scheme(const std::string& s)
{
    if (s == "implicit-euler") return TimeScheme::implicit_euler;
    if (s == "crank-nicolson") return TimeScheme::crank_nicolson;
    throw ConfigError("unknown time scheme '" + s + "' (expected implicit-euler or crank-nicolson)");
}

const char* to_string(TimeScheme s)
{
    return s == TimeScheme::implicit_euler ? "implicit-euler" : "crank-nicolson";
}

SlabAssembly make_assembly(const MolecularModel& model, double Kn, const SlabMesh& mesh, SlabLayout layout,
                           int threads)
{
    if (!(Kn > 0.0)) throw ConfigError("Kn must be positive");
    SlabAssembly as{SlabSpace(mesh, layout), model, boundary_coefficients(model), Kn, {}};
    as.forms = assemble_forms(as.space, as.ctx(), threads);
    return as;
}

namespace {

const SpMat& F(const SlabAssembly& as, Form f) { return as.forms[f]; }

bool is_maxwell(const SlabAssembly& as) { return as.space.layout() == SlabLayout::maxwell; }

} // namespace

SpMat steady_bilinear(const SlabAssembly& as)
{
    if (is_maxwell(as)) {
        SpMat K = F(as, Form::a) + SpMat(F(as, Form::c).transpose()) - F(as, Form::c) + F(as, Form::d);
        return K;
    }
    SpMat K = F(as, Form::a) + F(as, Form::j) + SpMat(F(as, Form::j).transpose()) + F(as, Form::f)
            - F(as, Form::c) - SpMat(F(as, Form::b).transpose()) + F(as, Form::e) + F(as, Form::d)
            + F(as, Form::z) + SpMat(F(as, Form::z).transpose()) + F(as, Form::h)
            + SpMat(F(as, Form::c).transpose()) + F(as, Form::b) - SpMat(F(as, Form::e).transpose());
    return K;
}

SpMat steady_operator(const SlabAssembly& as)
{
    SpMat K = steady_bilinear(as);
    const SpMat gT = F(as, Form::g).transpose();
    if (is_maxwell(as)) {
        K += -F(as, Form::b) - F(as, Form::e) + gT - SpMat(F(as, Form::b).transpose())
           - SpMat(F(as, Form::e).transpose()) + F(as, Form::g);
    } else {
        K -= gT;
        K -= F(as, Form::g);
    }
    return K;
}

SpMat transient_operator(const SlabAssembly& as)
{
    if (is_maxwell(as)) throw ConfigError("the transient operator uses the non-Maxwell layout");
    SpMat K = steady_bilinear(as) + F(as, Form::g) + F(as, Form::g_theta) - SpMat(F(as, Form::g).transpose())
            - SpMat(F(as, Form::g_theta).transpose());
    return K;
}

Eigen::VectorXd steady_rhs(const SlabAssembly& as, const WallData& wall)
{
    const LoadVectors L = assemble_loads(as.space, as.ctx(), wall);
    if (is_maxwell(as)) return L.L1 + L.L3;
    return L.L1 + L.L2 + L.L3 + L.L4;
}

void evaluate_state(const SlabAssembly& as, const Eigen::VectorXd& U, double x, bool slot0_pressure,
                    StateVector& value, StateVector& deriv)
{
    const auto [e, t] = as.space.locate(x);
    as.space.evaluate(U, e, t, value, deriv);
    if (slot0_pressure) {
        value.rho -= value.theta;
        deriv.rho -= deriv.theta;
    }
}

namespace {

// Diagonal of the dissipative bulk part, excluding the skew couplings that cancel.
double bulk_quadratic(const PointFeatures& X, const FormContext& ctx)
{
    return form_volume(Form::a, X, X, ctx) + form_volume(Form::d, X, X, ctx) + form_volume(Form::f, X, X, ctx)
         + form_volume(Form::h, X, X, ctx) + 2.0 * form_volume(Form::j, X, X, ctx)
         + 2.0 * form_volume(Form::z, X, X, ctx);
}

double wall_quadratic(const StateVector& X, const Frame& fr, const FormContext& ctx)
{
    return form_boundary(Form::a, X, X, fr, ctx) + form_boundary(Form::d, X, X, fr, ctx)
         + form_boundary(Form::f, X, X, fr, ctx) + form_boundary(Form::h, X, X, fr, ctx)
         + 2.0 * form_boundary(Form::j, X, X, fr, ctx) + 2.0 * form_boundary(Form::z, X, X, fr, ctx);
}

} // namespace

SolveMonitors compute_monitors(const SlabAssembly& as, const Eigen::VectorXd& U, const WallData& wall,
                               bool slot0_pressure)
{
    const FormContext ctx = as.ctx();
    const int k = as.space.mesh().degree;
    const double h = as.space.mesh().h();
    const Rule1D g = gauss_legendre(k + 2, 0.0, 1.0);

    SolveMonitors m;
    for (int e = 0; e < as.space.mesh().n_elements; ++e)
        for (std::size_t q = 0; q < g.size(); ++q) {
            StateVector v, d;
            as.space.evaluate(U, e, g.x[q], v, d);
            const double w = g.w[q] * h;
            // The forms see slot 0 as stored; the entropy sees rho.
            const PointFeatures X = point_features(v, d);
            m.W1 -= w * bulk_quadratic(X, ctx);
            if (slot0_pressure) v.rho -= v.theta;
            const double mm = mass_inner(v, v);
            m.energy += 0.5 * w * mm;
            m.entropy += w * entropy_density(v);
            m.mass += w * v.rho;
        }

    const bool mx = is_maxwell(as);
    for (int wl = 0; wl < 2; ++wl) {
        const StateVector tr = as.space.wall_trace(U, wl);
        const WallLoads L = wall_loads(tr, wl, ctx, wall);
        const double load = mx ? L.L1 + L.L3 : L.L1 + L.L2 + L.L3 + L.L4;
        m.I_bdry += wall_quadratic(tr, wall_frame(wl), ctx) - load;
    }
    return m;
}

StateVector SteadySolution::at(double x) const
{
    StateVector v, d;
    evaluate_state(assembly, U, x, true, v, d);
    return v;
}

SteadySolution solve_steady(const SteadyProblem& p)
{
    MolecularModel model = p.model;
    validate_model(model);
    Formulation form = p.formulation;
    if (form == Formulation::automatic) form = p.model.maxwell ? Formulation::maxwell : Formulation::nonmaxwell;
    const SlabLayout layout = form == Formulation::maxwell ? SlabLayout::maxwell : SlabLayout::nonmaxwell;

    SteadySolution sol{make_assembly(model, p.Kn, p.mesh, layout, p.threads), form, p.wall, {}, 0.0, {}};
    const SlabAssembly& as = sol.assembly;
    const int N = as.space.n_dofs();

    // Zero-mean pressure through one multiplier row and column.
    const SpMat K = steady_operator(as);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(K.nonZeros() + 2 * N);
    for (int c = 0; c < K.outerSize(); ++c)
        for (SpMat::InnerIterator it(K, c); it; ++it) trip.emplace_back(it.row(), it.col(), it.value());
    for (int i = 0; i < N; ++i) {
        const double v = as.forms.slot0_mean(i);
        if (v == 0.0) continue;
        trip.emplace_back(i, N, v);
        trip.emplace_back(N, i, v);
    }
    SpMat Kx(N + 1, N + 1);
    Kx.setFromTriplets(trip.begin(), trip.end());
    Kx.makeCompressed();

    Eigen::VectorXd b = Eigen::VectorXd::Zero(N + 1);
    const Eigen::VectorXd F1 = steady_rhs(as, p.wall);
    b.head(N) = F1;

    Eigen::SparseLU<SpMat> lu;
    lu.compute(Kx);
    if (lu.info() != Eigen::Success) throw SolverError("steady factorization failed: " + lu.lastErrorMessage());
    const Eigen::VectorXd x = lu.solve(b);
    if (lu.info() != Eigen::Success || !x.allFinite()) throw SolverError("steady solve failed");

    sol.U = x.head(N);
    sol.multiplier = x(N);
    sol.monitors = compute_monitors(as, sol.U, p.wall, true);
    sol.monitors.residual = (Kx * x - b).norm() / std::max(b.norm(), 1.0);
    const SpMat A = steady_bilinear(as);
    sol.monitors.bilinear = sol.U.dot(A * sol.U);
    sol.monitors.load = F1.dot(sol.U);
    sol.monitors.identity_defect = std::abs(sol.monitors.bilinear - sol.monitors.load
                                            - (sol.monitors.I_bdry - sol.monitors.W1));
    return sol;
}

TransientStepper::TransientStepper(SlabAssembly assembly, double dt, TimeScheme scheme)
    : as_(std::move(assembly)), dt_(dt), th_(scheme == TimeScheme::implicit_euler ? 1.0 : 0.5)
{
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    K_ = transient_operator(as_);
    const SpMat Mdt = as_.forms.mass / dt_;
    lhs_ = Mdt + th_ * K_;
    rhs_ = Mdt - (1.0 - th_) * K_;
    lhs_.makeCompressed();
    lu_.compute(lhs_);
    if (lu_.info() != Eigen::Success) throw SolverError("transient factorization failed: " + lu_.lastErrorMessage());
}

Eigen::VectorXd TransientStepper::step(const Eigen::VectorXd& U0, double* residual) const
{
    const Eigen::VectorXd b = rhs_ * U0;
    Eigen::VectorXd U1 = lu_.solve(b);
    if (!U1.allFinite()) throw SolverError("transient step produced non-finite values");
    if (residual) *residual = (lhs_ * U1 - b).norm() / std::max(b.norm(), 1.0);
    return U1;
}

SolveMonitors TransientStepper::monitors(const Eigen::VectorXd& U) const
{
    return compute_monitors(as_, U, WallData{}, false);
}

Eigen::VectorXd random_dofs(const SlabSpace& space, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::VectorXd U(space.n_dofs());
    for (int i = 0; i < U.size(); ++i) U(i) = d(rng);
    return U;
}

namespace {

// Componentwise H1 Gram matrix (value plus derivative) over the chosen fields.
Eigen::MatrixXd h1_gram(const SlabSpace& space, int field_lo, int field_hi)
{
    const int N = space.n_dofs();
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(N, N);
    const int k = space.mesh().degree;
    const double h = space.mesh().h();
    const Rule1D g = gauss_legendre(k + 2, 0.0, 1.0);
    for (int f = field_lo; f <= field_hi; ++f)
        for (int e = 0; e < space.mesh().n_elements; ++e)
            for (std::size_t q = 0; q < g.size(); ++q) {
                const LocalBasis b = space.basis(f, e, g.x[q]);
                for (std::size_t i = 0; i < b.dofs.size(); ++i)
                    for (std::size_t j = 0; j < b.dofs.size(); ++j)
                        if (b.dofs[i] >= 0 && b.dofs[j] >= 0)
                            G(b.dofs[i], b.dofs[j]) +=
                                g.w[q] * h * (b.value[i] * b.value[j] + b.deriv[i] * b.deriv[j]);
            }
    return G;
}

} // namespace

CoercivityReport coercivity_probe(const SlabAssembly& as)
{
    if (is_maxwell(as)) throw ConfigError("coercivity probe uses the non-Maxwell layout");
    const int N = as.space.n_dofs();
    const int off = as.space.field_size(0);
    const int n = N - off;

    const Eigen::MatrixXd A = Eigen::MatrixXd(steady_bilinear(as));
    const Eigen::MatrixXd As = 0.5 * (A + A.transpose()).bottomRightCorner(n, n);
    const Eigen::MatrixXd G = h1_gram(as.space, 1, kFields - 1).bottomRightCorner(n, n);

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(As, G, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw SolverError("coercivity eigensolve failed");

    CoercivityReport r;
    r.size = n;
    r.min_eig = es.eigenvalues().minCoeff();
    r.max_eig = es.eigenvalues().maxCoeff();

    Eigen::VectorXd U = Eigen::VectorXd::Zero(N);
    as.space.interpolate_field(U, 1, [](double x) { return x * (1.0 - x); });
    r.bubble_value = U.dot(A * U);
    r.bubble_norm = U.tail(n).dot(G * U.tail(n));
    return r;
}

InfSupReport infsup_probe(const SlabAssembly& as)
{
    const int np = as.space.field_size(0);
    const int u0 = as.space.offset(2);
    const int nu = as.space.offset(5) - u0;

    const Eigen::MatrixXd B = Eigen::MatrixXd(F(as, Form::g)).block(0, u0, np, nu);
    const Eigen::MatrixXd G = h1_gram(as.space, 2, 4).block(u0, u0, nu, nu);
    const Eigen::MatrixXd Mp = Eigen::MatrixXd(as.forms.mass).topLeftCorner(np, np);

    const Eigen::MatrixXd S = B * Eigen::LLT<Eigen::MatrixXd>(G).solve(B.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()), Mp,
                                                                Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw SolverError("inf-sup eigensolve failed");

    InfSupReport r;
    const Eigen::VectorXd ev = es.eigenvalues();
    r.eigs.assign(ev.data(), ev.data() + ev.size());
    r.null_eig = ev(0);
    r.beta = ev.size() > 1 ? std::sqrt(std::max(ev(1), 0.0)) : 0.0;
    return r;
}

bool ConvergenceReport::monotone(double min_ratio) const
{
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i].ratio >= min_ratio)) return false;
    return !levels.empty();
}

ConvergenceReport convergence_study(const SteadyProblem& base, const std::vector<int>& ladder, int reference)
{
    using clock = std::chrono::steady_clock;
    for (int n : ladder)
        if (n <= 0 || reference % n != 0) throw ConfigError("mesh ladder must divide the reference mesh");

    SteadyProblem rp = base;
    rp.mesh.n_elements = reference;
    const SteadySolution ref = solve_steady(rp);

    ConvergenceReport rep;
    rep.reference_elements = reference;
    rep.degree = base.mesh.degree;
    const Rule1D g = gauss_legendre(base.mesh.degree + 3, 0.0, 1.0);
    const double h = 1.0 / reference;

    for (int n : ladder) {
        const auto t0 = clock::now();
        SteadyProblem cp = base;
        cp.mesh.n_elements = n;
        const SteadySolution sol = solve_steady(cp);

        ConvergenceLevel lv;
        lv.n_elements = n;
        double total = 0.0;
        for (int e = 0; e < reference; ++e)
            for (std::size_t q = 0; q < g.size(); ++q) {
                const double x = (e + g.x[q]) * h;
                const StateVector diff = sol.at(x) - ref.at(x);
                const double w = g.w[q] * h;
                total += w * mass_inner(diff, diff);
                const auto a = diff.to_array();
                for (int c = 0; c < kFields; ++c) lv.component_error[c] += w * a[c] * a[c];
            }
        lv.error = std::sqrt(total);
        for (double& c : lv.component_error) c = std::sqrt(c);
        if (!rep.levels.empty()) {
            const double prev = rep.levels.back().error;
            lv.ratio = lv.error > 0.0 ? prev / lv.error : std::numeric_limits<double>::infinity();
            lv.rate = std::log2(lv.ratio) / std::log2(static_cast<double>(n) / rep.levels.back().n_elements);
        }
        lv.seconds = std::chrono::duration<double>(clock::now() - t0).count();
        rep.levels.push_back(lv);
    }
    return rep;
}

} // namespace r13

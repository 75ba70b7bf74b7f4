#include "r13lab/slab_forms.hpp"

#include <thread>
#include <utility>
#include <vector>

#include "r13lab/errors.hpp"
#include "r13lab/quadrature.hpp"

namespace r13 {

const char* form_name(Form f)
{
    static constexpr const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "g_theta", "j", "z", "h"};
    return names[static_cast<int>(f)];
}

WallData WallData::uniform_temperature(double theta_w)
{
    WallData w;
    w.theta = {theta_w, theta_w};
    return w;
}

WallData WallData::couette(double v)
{
    WallData w;
    w.u[0] = {-v, 0.0};
    w.u[1] = {v, 0.0};
    return w;
}

PointFeatures point_features(const StateVector& value, const StateVector& deriv)
{
    PointFeatures p;
    p.value = value;
    p.dtheta = deriv.theta;
    p.div_u = deriv.u(0);
    p.div_s = deriv.s(0);
    p.stf_grad_u = slab_grad_vec(value.u, deriv.u).stf;
    p.stf_grad_s = slab_grad_vec(value.s, deriv.s).stf;
    const SlabTensGrad g = slab_grad_stf2(value.sigma, deriv.sigma);
    p.div_sigma = g.div;
    p.stf_grad_sigma = g.stf;
    return p;
}

namespace {

double frob(const Mat3& a, const Mat3& b) { return a.cwiseProduct(b).sum(); }

} // namespace

double form_volume(Form form, const PointFeatures& X, const PointFeatures& Y, const FormContext& ctx)
{
    const auto& k = ctx.model->k;
    const double Kn = ctx.Kn;
    switch (form) {
    case Form::a:
        return 24.0 / 25.0 * k[7] * Kn * frob(X.stf_grad_s, Y.stf_grad_s) + 0.8 * k[6] * Kn * X.div_s * Y.div_s
             + 4.0 * ctx.model->l1 / (15.0 * Kn) * X.value.s.dot(Y.value.s);
    case Form::b: return k[0] * X.value.theta * Y.div_s;
    case Form::c: return -0.4 * k[8] * X.value.s.dot(Y.div_sigma);
    case Form::d:
        return k[9] * Kn * X.stf_grad_sigma.dot(Y.stf_grad_sigma) + 0.5 * k[10] * Kn * X.div_sigma.dot(Y.div_sigma)
             + ctx.model->l2 / (2.0 * Kn) * X.value.sigma.frob(Y.value.sigma);
    case Form::e: return k[5] * X.value.u.dot(Y.div_sigma);
    case Form::f: return k[3] * Kn * frob(X.stf_grad_u, Y.stf_grad_u);
    case Form::g: return X.value.rho * Y.div_u;
    case Form::g_theta: return X.value.theta * Y.div_u;
    case Form::j: return k[4] * Kn * frob(X.stf_grad_s, Y.stf_grad_u);
    case Form::z: return -1.5 * k[2] * Kn * X.dtheta * Y.div_sigma(0);
    case Form::h: return 1.5 * k[1] * Kn * X.dtheta * Y.dtheta;
    }
    return 0.0;
}

double form_boundary(Form form, const StateVector& X, const StateVector& Y, const Frame& fr, const FormContext& ctx)
{
    const BoundaryCoeffs& c = *ctx.coeffs;
    const auto& S = c.S;
    const auto& R = c.R;
    switch (form) {
    case Form::a: {
        const auto s = frame_components(X.s, fr), r = frame_components(Y.s, fr);
        return S[5] * s.n * r.n + S[1] * (s.t1 * r.t1 + s.t2 * r.t2);
    }
    case Form::b: return R[1] * X.theta * frame_components(Y.s, fr).n;
    case Form::c: {
        const auto r = frame_components(X.s, fr);
        const auto sg = frame_components(Y.sigma, fr);
        return R[2] * (r.t1 * sg.nt1 + r.t2 * sg.nt2) + R[3] * r.n * sg.nn;
    }
    case Form::d: {
        const auto s = frame_components(X.sigma, fr), t = frame_components(Y.sigma, fr);
        double v = S[3] * s.nn * t.nn + S[8] * s.t1t2 * t.t1t2;
        for (int i = 0; i < 2; ++i) {
            v += S[6] * (s.tt(i) + 0.5 * s.nn) * (t.tt(i) + 0.5 * t.nn);
            v += S[7] * s.nt(i) * t.nt(i);
        }
        return v;
    }
    case Form::e: {
        const auto v = frame_components(X.u, fr);
        const auto sg = frame_components(Y.sigma, fr);
        return R[4] * (sg.nt1 * v.t1 + sg.nt2 * v.t2);
    }
    case Form::f: {
        const auto u = frame_components(X.u, fr), v = frame_components(Y.u, fr);
        return S[2] * (u.t1 * v.t1 + u.t2 * v.t2);
    }
    case Form::g:
    case Form::g_theta: return 0.0;
    case Form::j: {
        const auto s = frame_components(X.s, fr), v = frame_components(Y.u, fr);
        return c.T1 * (s.t1 * v.t1 + s.t2 * v.t2);
    }
    case Form::z: return c.T2 * X.theta * frame_components(Y.sigma, fr).nn;
    case Form::h: return S[4] * X.theta * Y.theta;
    }
    return 0.0;
}

namespace {

// Field slots taking part in each argument of each form.
enum Group { kP, kTheta, kU, kS, kSigma };
constexpr std::array<std::pair<Group, Group>, kForms> kArgs = {{
    {kS, kS},          // a
    {kTheta, kS},      // b
    {kS, kSigma},      // c
    {kSigma, kSigma},  // d
    {kU, kSigma},      // e
    {kU, kU},          // f
    {kP, kU},          // g
    {kTheta, kU},      // g_theta
    {kS, kU},          // j
    {kTheta, kSigma},  // z
    {kTheta, kTheta},  // h
}};

bool in_group(int field, Group g)
{
    switch (g) {
    case kP: return field == 0;
    case kTheta: return field == 1;
    case kU: return field >= 2 && field <= 4;
    case kS: return field >= 5 && field <= 7;
    case kSigma: return field >= 8;
    }
    return false;
}

StateVector unit_component(int field, double v)
{
    std::array<double, kFields> a{};
    a[field] = v;
    return StateVector::from_array(a);
}

struct LocalDof {
    int dof;
    int field;
};

using Triplets = std::vector<Eigen::Triplet<double>>;

struct ChunkOutput {
    std::array<Triplets, kForms> forms;
    Triplets mass;
};

void assemble_range(const SlabSpace& space, const FormContext& ctx, int e0, int e1, ChunkOutput& out)
{
    const int k = space.mesh().degree;
    const double h = space.mesh().h();
    const Rule1D g = gauss_legendre(k + 2, 0.0, 1.0);

    for (int e = e0; e < e1; ++e) {
        // Local dof list (eliminated dofs kept for alignment, skipped on emit).
        std::vector<LocalDof> loc;
        for (int f = 0; f < kFields; ++f) {
            const LocalBasis b = space.basis(f, e, 0.5);
            for (int d : b.dofs) loc.push_back({d, f});
        }
        const int n = static_cast<int>(loc.size());
        std::array<Eigen::MatrixXd, kForms> Ke;
        for (auto& m : Ke) m = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd Me = Eigen::MatrixXd::Zero(n, n);

        for (std::size_t q = 0; q < g.size(); ++q) {
            std::vector<PointFeatures> feat;
            feat.reserve(n);
            for (int f = 0; f < kFields; ++f) {
                const LocalBasis b = space.basis(f, e, g.x[q]);
                for (std::size_t i = 0; i < b.dofs.size(); ++i)
                    feat.push_back(point_features(unit_component(f, b.value[i]), unit_component(f, b.deriv[i])));
            }
            const double w = g.w[q] * h;
            for (int fi = 0; fi < kForms; ++fi) {
                const auto [g1, g2] = kArgs[fi];
                for (int a = 0; a < n; ++a) {
                    if (!in_group(loc[a].field, g1)) continue;
                    for (int b = 0; b < n; ++b) {
                        if (!in_group(loc[b].field, g2)) continue;
                        Ke[fi](a, b) += w * form_volume(static_cast<Form>(fi), feat[a], feat[b], ctx);
                    }
                }
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) Me(a, b) += w * mass_inner(feat[a].value, feat[b].value);
        }

        // Walls.
        for (int wall = 0; wall < 2; ++wall) {
            const int we = wall == 0 ? 0 : space.mesh().n_elements - 1;
            if (we != e) continue;
            const double t = wall == 0 ? 0.0 : 1.0;
            const Frame fr = wall_frame(wall);
            std::vector<StateVector> tr;
            for (int f = 0; f < kFields; ++f) {
                const LocalBasis b = space.basis(f, e, t);
                for (double v : b.value) tr.push_back(unit_component(f, v));
            }
            for (int fi = 0; fi < kForms; ++fi) {
                const auto [g1, g2] = kArgs[fi];
                for (int a = 0; a < n; ++a) {
                    if (!in_group(loc[a].field, g1)) continue;
                    for (int b = 0; b < n; ++b) {
                        if (!in_group(loc[b].field, g2)) continue;
                        Ke[fi](a, b) += form_boundary(static_cast<Form>(fi), tr[a], tr[b], fr, ctx);
                    }
                }
            }
        }

        for (int fi = 0; fi < kForms; ++fi)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (loc[a].dof >= 0 && loc[b].dof >= 0 && Ke[fi](a, b) != 0.0)
                        out.forms[fi].emplace_back(loc[a].dof, loc[b].dof, Ke[fi](a, b));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (loc[a].dof >= 0 && loc[b].dof >= 0 && Me(a, b) != 0.0)
                    out.mass.emplace_back(loc[a].dof, loc[b].dof, Me(a, b));
    }
}

} // namespace

SlabForms assemble_forms(const SlabSpace& space, const FormContext& ctx, int threads)
{
    if (!ctx.model || !ctx.coeffs) throw ConfigError("assemble_forms: model and coefficients required");
    if (!(ctx.Kn > 0.0)) throw ConfigError("Kn must be positive");
    const int ne = space.mesh().n_elements;
    const int nt = std::clamp(threads, 1, ne);

    // Contiguous element chunks, concatenated in order: the triplet sequence
    // and hence every sum is independent of the thread count.
    std::vector<ChunkOutput> chunks(nt);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        const int e0 = ne * t / nt, e1 = ne * (t + 1) / nt;
        if (nt == 1) assemble_range(space, ctx, e0, e1, chunks[t]);
        else pool.emplace_back([&, t, e0, e1] { assemble_range(space, ctx, e0, e1, chunks[t]); });
    }
    for (auto& th : pool) th.join();

    const int N = space.n_dofs();
    SlabForms out;
    for (int fi = 0; fi < kForms; ++fi) {
        Triplets all;
        for (auto& c : chunks) all.insert(all.end(), c.forms[fi].begin(), c.forms[fi].end());
        out.phi[fi].resize(N, N);
        out.phi[fi].setFromTriplets(all.begin(), all.end());
    }
    Triplets all;
    for (auto& c : chunks) all.insert(all.end(), c.mass.begin(), c.mass.end());
    out.mass.resize(N, N);
    out.mass.setFromTriplets(all.begin(), all.end());

    out.slot0_mean = Eigen::VectorXd::Zero(N);
    const int k = space.mesh().degree;
    const Rule1D g = gauss_legendre(k + 2, 0.0, 1.0);
    for (int e = 0; e < ne; ++e)
        for (std::size_t q = 0; q < g.size(); ++q) {
            const LocalBasis b = space.basis(0, e, g.x[q]);
            for (std::size_t i = 0; i < b.dofs.size(); ++i)
                if (b.dofs[i] >= 0) out.slot0_mean(b.dofs[i]) += g.w[q] * space.mesh().h() * b.value[i];
        }
    return out;
}

WallLoads wall_loads(const StateVector& tr, int wall, const FormContext& ctx, const WallData& data)
{
    const BoundaryCoeffs& c = *ctx.coeffs;
    const Frame fr = wall_frame(wall);
    const auto s = frame_components(tr.s, fr);
    const auto u = frame_components(tr.u, fr);
    const auto sg = frame_components(tr.sigma, fr);
    const double tw = data.theta[wall];
    const auto& uw = data.u[wall];
    WallLoads L;
    L.L1 = c.L1_theta * tw * s.n + c.T1 * (uw[0] * s.t1 + uw[1] * s.t2);
    L.L2 = c.S[4] * tw * tr.theta;
    L.L3 = c.T2 * tw * sg.nn - (c.R[4] + ctx.model->k[5]) * (uw[0] * sg.nt1 + uw[1] * sg.nt2);
    L.L4 = c.S[2] * (uw[0] * u.t1 + uw[1] * u.t2);
    return L;
}

LoadVectors assemble_loads(const SlabSpace& space, const FormContext& ctx, const WallData& data)
{
    const int N = space.n_dofs();
    LoadVectors L{Eigen::VectorXd::Zero(N), Eigen::VectorXd::Zero(N), Eigen::VectorXd::Zero(N),
                  Eigen::VectorXd::Zero(N)};
    for (int wall = 0; wall < 2; ++wall) {
        const int e = wall == 0 ? 0 : space.mesh().n_elements - 1;
        const double t = wall == 0 ? 0.0 : 1.0;
        for (int f = 0; f < kFields; ++f) {
            const LocalBasis b = space.basis(f, e, t);
            for (std::size_t i = 0; i < b.dofs.size(); ++i) {
                if (b.dofs[i] < 0 || b.value[i] == 0.0) continue;
                const WallLoads w = wall_loads(unit_component(f, b.value[i]), wall, ctx, data);
                L.L1(b.dofs[i]) += w.L1;
                L.L2(b.dofs[i]) += w.L2;
                L.L3(b.dofs[i]) += w.L3;
                L.L4(b.dofs[i]) += w.L4;
            }
        }
    }
    return L;
}

} // namespace r13

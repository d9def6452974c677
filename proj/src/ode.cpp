#include "satchoice/ode.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace satchoice {

double BranchingMatrix::spectral_radius() const {
    // symmetric-in-offdiagonal nonnegative 2x2: eigenvalues via quadratic formula
    const double tr = m[0][0] + m[1][1];
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
    return (tr + disc) / 2.0;
}

double max_eigenvalue(double s20, double s21, double s22, double t) {
    if (t >= 1.0) throw std::invalid_argument("max_eigenvalue: t >= 1");
    return (s21 + 2.0 * std::sqrt(std::max(s20, 0.0) * std::max(s22, 0.0))) / (1.0 - t);
}

BranchingMatrix branching_matrix(double s20, double s21, double s22, double t) {
    if (t >= 1.0) throw std::invalid_argument("branching_matrix: t >= 1");
    const double scale = 1.0 / (1.0 - t);
    BranchingMatrix M;
    M.m[0][0] = s21 * scale;
    M.m[0][1] = 2.0 * s20 * scale;
    M.m[1][0] = 2.0 * s22 * scale;
    M.m[1][1] = s21 * scale;
    return M;
}

std::array<double, 2> branching_response(const BranchingMatrix& M,
                                         const std::array<double, 2>& seed) {
    if (M.spectral_radius() >= 1.0)
        throw std::domain_error("branching_response: supercritical branching matrix");
    const double a = 1.0 - M.m[0][0];
    const double b = -M.m[0][1];
    const double c = -M.m[1][0];
    const double d = 1.0 - M.m[1][1];
    const double det = a * d - b * c;
    return {(d * seed[0] - b * seed[1]) / det, (a * seed[1] - c * seed[0]) / det};
}

namespace {

constexpr double kDensityFloor = 1e-9;  // below this, 2-clause mass is treated as zero

struct Dynamics {
    int w;
    bool bsc;

    std::size_t size() const { return static_cast<std::size_t>((w + 1) * (w + 2) / 2 - 3); }
    // layout: widths 2..w, width i at offset[i], i+1 entries
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>((i + 1) * i / 2 - 3 + j);
    }

    struct Rates {
        double lambda, q0, q1, p_free, b0, b1;
    };

    // Fills derivative; returns rates. Fails (lambda >= 1) via flag.
    bool eval(const std::vector<double>& s, double t, std::vector<double>& ds,
              Rates& rates) const {
        const double s20 = std::max(s[index(2, 0)], 0.0);
        const double s21 = std::max(s[index(2, 1)], 0.0);
        const double s22 = std::max(s[index(2, 2)], 0.0);
        rates.lambda = max_eigenvalue(s20, s21, s22, t);
        if (rates.lambda >= 1.0) return false;

        const BranchingMatrix M = branching_matrix(s20, s21, s22, t);
        const double sum2 = s20 + s21 + s22;
        std::array<double, 2> seed{0.0, 1.0};
        if (bsc && sum2 >= kDensityFloor) seed = {s20 / sum2, (s21 + s22) / sum2};
        const auto b = branching_response(M, seed);
        rates.b0 = b[0];
        rates.b1 = b[1];
        const double round_len = b[0] + b[1];
        rates.q0 = b[0] / round_len;
        rates.q1 = b[1] / round_len;
        rates.p_free = 1.0 / round_len;

        const double inv = 1.0 / (1.0 - t);
        for (int j = 0; j <= w; ++j)
            ds[index(w, j)] = -w * s[index(w, j)] * inv;
        for (int i = w - 1; i >= 2; --i) {
            for (int j = 0; j <= i; ++j) {
                ds[index(i, j)] = ((i + 1 - j) * rates.q1 * s[index(i + 1, j)] +
                                   (j + 1) * rates.q0 * s[index(i + 1, j + 1)] -
                                   i * s[index(i, j)]) *
                                  inv;
            }
        }
        if (bsc) {
            for (int j = 0; j <= 2; ++j) {
                const double frac = sum2 >= kDensityFloor ? std::max(s[index(2, j)], 0.0) / sum2 : 0.0;
                ds[index(2, j)] -= rates.p_free * frac;
            }
        }
        return true;
    }
};

OdeState make_state(const Dynamics& dyn, const std::vector<double>& s, double t,
                    const Dynamics::Rates& rates) {
    OdeState state;
    state.t = t;
    state.densities.resize(static_cast<std::size_t>(dyn.w - 1));
    for (int i = 2; i <= dyn.w; ++i) {
        auto& row = state.densities[static_cast<std::size_t>(i - 2)];
        row.resize(static_cast<std::size_t>(i) + 1);
        for (int j = 0; j <= i; ++j) row[static_cast<std::size_t>(j)] = s[dyn.index(i, j)];
    }
    state.lambda = rates.lambda;
    state.q0 = rates.q0;
    state.q1 = rates.q1;
    state.p_free = rates.p_free;
    state.b0 = rates.b0;
    state.b1 = rates.b1;
    return state;
}

Trajectory integrate(const Dynamics& dyn, const PositiveProfile& profile, double alpha,
                     const StepControl& ctrl) {
    if (static_cast<int>(profile.p.size()) != dyn.w + 1)
        throw std::invalid_argument("profile length must be w + 1");
    if (alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
    if (!(ctrl.step > 0.0) || !(ctrl.t_end > 0.0 && ctrl.t_end < 1.0))
        throw std::invalid_argument("bad step control");

    std::vector<double> s(dyn.size(), 0.0);
    for (int j = 0; j <= dyn.w; ++j)
        s[dyn.index(dyn.w, j)] = alpha * profile.p[static_cast<std::size_t>(j)];

    Trajectory traj;
    std::vector<double> k1(s.size()), k2(s.size()), k3(s.size()), k4(s.size()),
        stage(s.size());
    Dynamics::Rates rates{}, stage_rates{};

    const auto total_steps =
        static_cast<long>(std::llround(std::ceil(ctrl.t_end / ctrl.step - 1e-12)));
    double t = 0.0;
    for (long step = 0;; ++step) {
        if (!dyn.eval(s, t, k1, rates)) {
            traj.supercritical = true;
            traj.supercritical_t = t;
            traj.max_lambda = std::max(traj.max_lambda, rates.lambda);
            return traj;
        }
        traj.max_lambda = std::max(traj.max_lambda, rates.lambda);
        if (step % ctrl.record_every == 0) traj.samples.push_back(make_state(dyn, s, t, rates));
        if (step >= total_steps) break;

        const double h = std::min(ctrl.step, ctrl.t_end - t);
        auto blend = [&](const std::vector<double>& d, double f) {
            for (std::size_t idx = 0; idx < s.size(); ++idx)
                stage[idx] = std::max(s[idx] + f * d[idx], 0.0);
        };
        blend(k1, h / 2);
        if (!dyn.eval(stage, t + h / 2, k2, stage_rates)) goto supercritical_stage;
        blend(k2, h / 2);
        if (!dyn.eval(stage, t + h / 2, k3, stage_rates)) goto supercritical_stage;
        blend(k3, h);
        if (!dyn.eval(stage, t + h, k4, stage_rates)) goto supercritical_stage;

        for (std::size_t idx = 0; idx < s.size(); ++idx) {
            s[idx] += h / 6.0 * (k1[idx] + 2.0 * k2[idx] + 2.0 * k3[idx] + k4[idx]);
            // clamp: the 2-clause sink can overshoot zero by O(h) once a
            // density depletes; the continuous solution is nonnegative
            if (s[idx] < 0.0) s[idx] = 0.0;
        }
        t = std::min(t + h, ctrl.t_end);
        continue;

    supercritical_stage:
        traj.supercritical = true;
        traj.supercritical_t = t;
        traj.max_lambda = std::max(traj.max_lambda, 1.0);
        return traj;
    }
    return traj;
}

}  // namespace

Trajectory integrate_buc(int w, const PositiveProfile& profile, double alpha,
                         const StepControl& ctrl) {
    if (w != 3 && w != 4) throw std::invalid_argument("integrate_buc: w must be 3 or 4");
    return integrate(Dynamics{w, false}, profile, alpha, ctrl);
}

Trajectory integrate_bsc(const PositiveProfile& profile, double alpha,
                         const StepControl& ctrl) {
    return integrate(Dynamics{3, true}, profile, alpha, ctrl);
}

double critical_alpha(const CriticalModel& model, double rel_tol, const StepControl& ctrl) {
    if (model.model == OdeModel::Bsc && model.ell != 3)
        throw std::invalid_argument("critical_alpha: BSC requires ell = 3");
    const PositiveProfile profile = positive_profile(model.k, model.t, model.ell);

    auto subcritical = [&](double alpha) {
        const Trajectory traj = model.model == OdeModel::Buc
                                    ? integrate_buc(model.ell, profile, alpha, ctrl)
                                    : integrate_bsc(profile, alpha, ctrl);
        return traj.subcritical();
    };

    double lo = 0.0, hi = 1.0;
    while (subcritical(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw std::runtime_error("critical_alpha: no supercritical bracket");
    }
    while (hi - lo > rel_tol * std::max(lo, 1.0)) {
        const double mid = (lo + hi) / 2.0;
        (subcritical(mid) ? lo : hi) = mid;
    }
    return lo;
}

void write_trajectory_csv(const Trajectory& traj, OdeModel model, std::ostream& out) {
    const bool bsc = model == OdeModel::Bsc;
    out << "t";
    if (!traj.samples.empty()) {
        const int w = traj.samples.front().top_width();
        for (int i = 2; i <= w; ++i)
            for (int j = 0; j <= i; ++j) out << ",s" << i << "_" << j;
    }
    out << ",lambda,q0,q1";
    if (bsc) out << ",p_free";
    out << "\n";
    for (const OdeState& st : traj.samples) {
        out << st.t;
        for (const auto& row : st.densities)
            for (double v : row) out << ',' << v;
        out << ',' << st.lambda << ',' << st.q0 << ',' << st.q1;
        if (bsc) out << ',' << st.p_free;
        out << "\n";
    }
}

}  // namespace satchoice

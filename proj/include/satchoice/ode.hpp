#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "satchoice/profile.hpp"

namespace satchoice {

// 2x2 matrix of expected unit-clause children, indexed (negative, positive).
struct BranchingMatrix {
    // row-major: m[0][0] m[0][1] / m[1][0] m[1][1]
    std::array<std::array<double, 2>, 2> m{};

    double spectral_radius() const;
};

// Largest eigenvalue of the unit-clause branching matrix built from the
// current 2-clause densities: (s21 + 2 sqrt(s20 s22)) / (1 - t).
double max_eigenvalue(double s20, double s21, double s22, double t);

BranchingMatrix branching_matrix(double s20, double s21, double s22, double t);

// Expected variables set (false, true) over a round: (I - M)^{-1} * seed.
// Throws std::domain_error when the process is supercritical.
std::array<double, 2> branching_response(const BranchingMatrix& M,
                                         const std::array<double, 2>& seed);

struct OdeState {
    double t = 0.0;
    // densities[i][j] for widths i = 2..w; densities[i] has i+1 entries
    std::vector<std::vector<double>> densities;
    double lambda = 0.0;
    double q0 = 0.0, q1 = 1.0;
    double p_free = 1.0;
    double b0 = 0.0, b1 = 1.0;

    int top_width() const { return static_cast<int>(densities.size()) + 1; }
    double s(int i, int j) const {
        return densities[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j)];
    }
};

struct StepControl {
    double step = 1e-4;
    double t_end = 1.0 - 1e-3;
    int record_every = 100;  // grid points per recorded sample
};

struct Trajectory {
    std::vector<OdeState> samples;
    double max_lambda = 0.0;
    bool supercritical = false;       // lambda reached 1 at some grid point
    double supercritical_t = 0.0;

    bool subcritical() const { return !supercritical; }
};

enum class OdeModel { Buc, Bsc };

// Biased unit clause dynamics for top width w in {3, 4}; profile has w+1 entries.
Trajectory integrate_buc(int w, const PositiveProfile& profile, double alpha,
                         const StepControl& ctrl = {});

// Biased short clause dynamics (w = 3) with the free-step 2-clause sink.
Trajectory integrate_bsc(const PositiveProfile& profile, double alpha,
                         const StepControl& ctrl = {});

struct CriticalModel {
    OdeModel model = OdeModel::Buc;
    int k = 3;
    int t = 2;
    int ell = 3;  // reduced width; equals top ODE width
};

// Binary search for the largest alpha with max_t lambda(t) < 1 on the grid.
// rel_tol is relative in alpha.
double critical_alpha(const CriticalModel& model, double rel_tol = 1e-3,
                      const StepControl& ctrl = {});

// CSV: t, s[i][j] lexicographic in (i, j), lambda, q0, q1[, p_free for BSC]
void write_trajectory_csv(const Trajectory& traj, OdeModel model, std::ostream& out);

}  // namespace satchoice

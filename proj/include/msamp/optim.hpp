#pragma once

#include <functional>

#include "msamp/costs.hpp"

namespace msamp {

struct LbfgsOptions {
  int memory = 10;
  int max_iters = 200;
  double armijo_c1 = 1e-4;
  double backtrack_factor = 0.5;
  double min_step = 1e-10;
  double grad_tol = 1e-8;
};

enum class Termination { ThresholdMet, GradTol, MaxIter, LineSearchFail };

const char* to_string(Termination t);

struct OptResult {
  Config q_final;
  int iterations = 0;
  int evaluations = 0;
  Termination termination = Termination::MaxIter;
  CostReport final_report;

  bool threshold_met() const {
    return termination == Termination::ThresholdMet;
  }
};

/// Generic objective for the core solver: value, gradient and whether the
/// caller's satisfaction thresholds hold at q.
struct ObjectiveEval {
  double value = 0.0;
  Eigen::VectorXd grad;
  bool thresholds_met = false;
};
using Objective = std::function<ObjectiveEval(const Config&)>;

/// Two-loop-recursion L-BFGS with Armijo backtracking. When use_thresholds
/// is set, the thresholds_met flag is checked at the start and after every
/// accepted step, and the run stops with ThresholdMet as soon as it holds.
OptResult minimize_objective(const Objective& objective, const Config& q0,
                             const LbfgsOptions& opts, bool use_thresholds);

/// L-BFGS over a cost bundle. Threshold stopping engages iff the bundle has
/// at least one thresholded term. Throws std::invalid_argument when the
/// cost at q0 is not finite.
OptResult minimize(const CostBundle& bundle, const Config& q0,
                   const LbfgsOptions& opts);

struct NrOptions {
  double alpha = 0.5;
  double damping = 1e-6;
  int max_iters = 100;
  double position_tol = 1e-6;
};

/// Damped-pseudoinverse Newton-Raphson baseline:
/// q <- q - alpha * J^+ (f(q) - x), J^+ = J^T (J J^T + damping I)^-1.
/// The target is a position (dim 2) or a full pose (dim 3). No line search.
OptResult newton_raphson_ik(const PlanarChain& chain, const Config& q0,
                            const Eigen::VectorXd& target,
                            const NrOptions& opts);

/// Project q0 onto the constraint manifold: minimize the constraint bundle
/// plus a posture regularizer centered at q0 (identity weights scaled by
/// posture_weight, no threshold). Success means ThresholdMet. A bundle with
/// no thresholded terms describes the whole limit volume, so projection is
/// the identity.
OptResult project(const CostBundle& constraints, const Config& q0,
                  const LbfgsOptions& opts, double posture_weight = 0.01);

/// IK via cost minimization: patch the bundle's task term with the target
/// (position, or position plus orientation for dim 3) and minimize. Success
/// means every threshold, the task's EE error included, is met.
OptResult solve_ik(const CostBundle& bundle_full, const Config& q0,
                   const Eigen::VectorXd& target, const LbfgsOptions& opts);

}  // namespace msamp

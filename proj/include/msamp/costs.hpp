#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "msamp/kinematics.hpp"

namespace msamp {

struct ValueGrad {
  double value = 0.0;
  Eigen::VectorXd grad;
};

/// Piecewise-quadratic barrier: zero inside [l_b, l_u], growing
/// quadratically with the violation. C1 across both boundaries.
ValueGrad barrier(const Eigen::VectorXd& x, const Eigen::VectorXd& l_b,
                  const Eigen::VectorXd& l_u);

/// (p(q) - p_ref)^T W (p(q) - p_ref) with diagonal W over (x, y, theta).
ValueGrad ee_pose_cost(const PlanarChain& chain, const Config& q,
                       const Eigen::Vector3d& p_ref,
                       const Eigen::Vector3d& w_diag);

/// (q - q_nom)^T W (q - q_nom) with diagonal W.
ValueGrad posture_cost(const Config& q, const Config& q_nom,
                       const Eigen::VectorXd& w_diag);

/// Barrier on q against the chain's joint limits.
ValueGrad joint_limit_cost(const PlanarChain& chain, const Config& q);

/// Barrier on the CoM horizontal coordinate against the support interval
/// [l_b, l_u].
ValueGrad static_stability_cost(const PlanarChain& chain, const Config& q,
                                double l_b, double l_u);

enum class TermKind { EePose, Posture, JointLimit, StaticStability };

/// One weighted cost term. `threshold` (when present) is the raw, unweighted
/// value at which the term counts as satisfied; posture terms are normally
/// regularizers and carry no threshold.
struct CostTerm {
  TermKind kind = TermKind::JointLimit;
  double weight = 1.0;
  std::optional<double> threshold;

  // EePose parameters.
  Eigen::Vector3d p_ref = Eigen::Vector3d::Zero();
  Eigen::Vector3d pose_w = Eigen::Vector3d::Zero();
  // Posture parameters.
  Config q_nom;
  Eigen::VectorXd posture_w;
  // StaticStability parameters.
  double com_lo = 0.0;
  double com_hi = 0.0;

  static CostTerm ee_pose(const Eigen::Vector3d& p_ref,
                          const Eigen::Vector3d& w_diag, double weight = 1.0,
                          std::optional<double> threshold = std::nullopt);
  static CostTerm posture(const Config& q_nom, const Eigen::VectorXd& w_diag,
                          double weight = 1.0,
                          std::optional<double> threshold = std::nullopt);
  static CostTerm joint_limit(double weight = 10.0,
                              std::optional<double> threshold = 1e-6);
  static CostTerm static_stability(double lo, double hi, double weight = 10.0,
                                   std::optional<double> threshold = 1e-6);
};

/// Weighted sum of terms sharing one chain. The chain is borrowed; the
/// owner (usually a Scenario) must outlive the bundle. `task_index`, when
/// set, names the EePose term whose p_ref is patched per IK target.
struct CostBundle {
  const PlanarChain* chain = nullptr;
  std::vector<CostTerm> terms;
  std::optional<std::size_t> task_index;

  bool has_thresholds() const;
};

struct CostReport {
  std::vector<double> raw;  // unweighted per-term values
  double total = 0.0;
  Eigen::VectorXd grad;
  bool all_below_threshold = false;
};

ValueGrad eval_term(const CostTerm& term, const PlanarChain& chain,
                    const Config& q);

/// Sum of weight * term over the bundle; all_below_threshold holds iff
/// every thresholded term's raw value is within its threshold.
CostReport evaluate(const CostBundle& bundle, const Config& q);

}  // namespace msamp

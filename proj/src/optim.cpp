#include "msamp/optim.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include <Eigen/Dense>

namespace msamp {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::ThresholdMet: return "threshold_met";
    case Termination::GradTol: return "grad_tol";
    case Termination::MaxIter: return "max_iter";
    case Termination::LineSearchFail: return "line_search_fail";
  }
  return "?";
}

namespace {

struct Pair {
  Eigen::VectorXd s;
  Eigen::VectorXd y;
  double rho;
};

Eigen::VectorXd two_loop_direction(const std::deque<Pair>& mem,
                                   const Eigen::VectorXd& grad) {
  Eigen::VectorXd q = grad;
  std::vector<double> alpha(mem.size());
  for (std::size_t i = mem.size(); i-- > 0;) {
    alpha[i] = mem[i].rho * mem[i].s.dot(q);
    q -= alpha[i] * mem[i].y;
  }
  if (!mem.empty()) {
    const Pair& last = mem.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (std::size_t i = 0; i < mem.size(); ++i) {
    const double beta = mem[i].rho * mem[i].y.dot(q);
    q += (alpha[i] - beta) * mem[i].s;
  }
  return -q;
}

}  // namespace

OptResult minimize_objective(const Objective& objective, const Config& q0,
                             const LbfgsOptions& opts, bool use_thresholds) {
  OptResult res;
  res.q_final = q0;

  ObjectiveEval cur = objective(q0);
  res.evaluations = 1;
  if (!std::isfinite(cur.value))
    throw std::invalid_argument("minimize: cost at the start is not finite");

  auto snapshot = [&](Termination t) {
    res.termination = t;
    res.final_report.total = cur.value;
    res.final_report.raw = {cur.value};
    res.final_report.grad = cur.grad;
    res.final_report.all_below_threshold = cur.thresholds_met;
    return res;
  };

  if (use_thresholds && cur.thresholds_met)
    return snapshot(Termination::ThresholdMet);

  std::deque<Pair> mem;
  Config q = q0;
  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    if (cur.grad.norm() <= opts.grad_tol) return snapshot(Termination::GradTol);

    Eigen::VectorXd dir = two_loop_direction(mem, cur.grad);
    double slope = cur.grad.dot(dir);
    if (!(slope < 0.0)) {  // safeguard: fall back to steepest descent
      dir = -cur.grad;
      slope = cur.grad.dot(dir);
    }

    // Backtracking Armijo line search.
    double step = 1.0;
    ObjectiveEval trial;
    Config q_trial;
    bool accepted = false;
    while (step >= opts.min_step) {
      q_trial = q + step * dir;
      trial = objective(q_trial);
      ++res.evaluations;
      if (std::isfinite(trial.value) &&
          trial.value <= cur.value + opts.armijo_c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= opts.backtrack_factor;
    }
    if (!accepted) return snapshot(Termination::LineSearchFail);

    const Eigen::VectorXd s = q_trial - q;
    const Eigen::VectorXd y = trial.grad - cur.grad;
    const double sy = s.dot(y);
    // Curvature pairs with s'y ~ 0 would wreck positive definiteness; skip.
    if (sy > 1e-10) {
      mem.push_back({s, y, 1.0 / sy});
      if (static_cast<int>(mem.size()) > opts.memory) mem.pop_front();
    }

    q = q_trial;
    cur = trial;
    res.q_final = q;
    res.iterations = iter;

    if (use_thresholds && cur.thresholds_met)
      return snapshot(Termination::ThresholdMet);
  }
  return snapshot(Termination::MaxIter);
}

OptResult minimize(const CostBundle& bundle, const Config& q0,
                   const LbfgsOptions& opts) {
  const Objective objective = [&](const Config& q) {
    CostReport r = evaluate(bundle, q);
    return ObjectiveEval{r.total, std::move(r.grad), r.all_below_threshold};
  };
  // Re-evaluate at q_final so final_report matches the returned point (the
  // last line-search evaluation may have been a rejected trial).
  OptResult res =
      minimize_objective(objective, q0, opts, bundle.has_thresholds());
  res.final_report = evaluate(bundle, res.q_final);
  return res;
}

OptResult newton_raphson_ik(const PlanarChain& chain, const Config& q0,
                            const Eigen::VectorXd& target,
                            const NrOptions& opts) {
  const auto rows = target.size();
  if (rows != 2 && rows != 3)
    throw std::invalid_argument(
        "newton_raphson_ik: target must be a position (2) or pose (3)");
  if (!(opts.alpha > 0.0 && opts.alpha <= 1.0))
    throw std::invalid_argument("newton_raphson_ik: alpha must be in (0, 1]");

  OptResult res;
  res.q_final = q0;
  auto residual = [&](const Config& q) -> Eigen::VectorXd {
    return forward_kinematics(chain, q).vec().head(rows) - target;
  };

  Eigen::VectorXd r = residual(q0);
  res.evaluations = 1;
  for (int iter = 0; iter < opts.max_iters && r.norm() > opts.position_tol;
       ++iter) {
    const Eigen::MatrixXd jac = jacobian(chain, res.q_final).topRows(rows);
    Eigen::MatrixXd gram = jac * jac.transpose();
    gram.diagonal().array() += opts.damping;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() != Eigen::Success)
      throw std::runtime_error("newton_raphson_ik: singular damped system");
    res.q_final -= opts.alpha * (jac.transpose() * ldlt.solve(r));
    r = residual(res.q_final);
    ++res.evaluations;
    res.iterations = iter + 1;
  }

  const double rn = r.norm();
  res.termination = rn <= opts.position_tol ? Termination::ThresholdMet
                                            : Termination::MaxIter;
  res.final_report.raw = {rn};
  res.final_report.total = rn;
  res.final_report.grad = Eigen::VectorXd::Zero(q0.size());
  res.final_report.all_below_threshold = res.threshold_met();
  return res;
}

OptResult project(const CostBundle& constraints, const Config& q0,
                  const LbfgsOptions& opts, double posture_weight) {
  if (!constraints.has_thresholds()) {
    // No thresholded constraint: the manifold is the whole limit volume.
    OptResult res;
    res.q_final = q0;
    res.evaluations = 1;
    res.termination = Termination::ThresholdMet;
    res.final_report = evaluate(constraints, q0);
    res.final_report.all_below_threshold = true;
    return res;
  }
  CostBundle with_posture = constraints;
  with_posture.terms.push_back(CostTerm::posture(
      q0, Eigen::VectorXd::Ones(q0.size()), posture_weight, std::nullopt));
  return minimize(with_posture, q0, opts);
}

OptResult solve_ik(const CostBundle& bundle_full, const Config& q0,
                   const Eigen::VectorXd& target, const LbfgsOptions& opts) {
  if (!bundle_full.task_index)
    throw std::invalid_argument("solve_ik: bundle has no task term");
  if (target.size() != 2 && target.size() != 3)
    throw std::invalid_argument("solve_ik: target must have dim 2 or 3");
  CostBundle bundle = bundle_full;
  CostTerm& task = bundle.terms.at(*bundle.task_index);
  task.p_ref.head(target.size()) = target;
  return minimize(bundle, q0, opts);
}

}  // namespace msamp

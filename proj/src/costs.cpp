#include "msamp/costs.hpp"

#include <stdexcept>

namespace msamp {

ValueGrad barrier(const Eigen::VectorXd& x, const Eigen::VectorXd& l_b,
                  const Eigen::VectorXd& l_u) {
  if (x.size() != l_b.size() || x.size() != l_u.size())
    throw std::invalid_argument("barrier: dimension mismatch");
  if ((l_b.array() > l_u.array()).any())
    throw std::invalid_argument("barrier: lower bound exceeds upper bound");
  const Eigen::VectorXd r_b = (x - l_b).cwiseMin(0.0);
  const Eigen::VectorXd r_u = (x - l_u).cwiseMax(0.0);
  ValueGrad out;
  out.value = 0.5 * (r_b.squaredNorm() + r_u.squaredNorm());
  out.grad = r_b + r_u;
  return out;
}

ValueGrad ee_pose_cost(const PlanarChain& chain, const Config& q,
                       const Eigen::Vector3d& p_ref,
                       const Eigen::Vector3d& w_diag) {
  const Eigen::Vector3d err = forward_kinematics(chain, q).vec() - p_ref;
  const Eigen::Vector3d werr = w_diag.cwiseProduct(err);
  ValueGrad out;
  out.value = err.dot(werr);
  out.grad = 2.0 * (jacobian(chain, q).transpose() * werr);
  return out;
}

ValueGrad posture_cost(const Config& q, const Config& q_nom,
                       const Eigen::VectorXd& w_diag) {
  if (q.size() != q_nom.size() || q.size() != w_diag.size())
    throw std::invalid_argument("posture_cost: dimension mismatch");
  const Eigen::VectorXd err = q - q_nom;
  const Eigen::VectorXd werr = w_diag.cwiseProduct(err);
  ValueGrad out;
  out.value = err.dot(werr);
  out.grad = 2.0 * werr;
  return out;
}

ValueGrad joint_limit_cost(const PlanarChain& chain, const Config& q) {
  return barrier(q, chain.joint_lower, chain.joint_upper);
}

ValueGrad static_stability_cost(const PlanarChain& chain, const Config& q,
                                double l_b, double l_u) {
  Eigen::VectorXd comx(1), lo(1), hi(1);
  comx[0] = center_of_mass(chain, q).x();
  lo[0] = l_b;
  hi[0] = l_u;
  const ValueGrad b = barrier(comx, lo, hi);
  ValueGrad out;
  out.value = b.value;
  out.grad = b.grad[0] * com_jacobian(chain, q).row(0).transpose();
  return out;
}

CostTerm CostTerm::ee_pose(const Eigen::Vector3d& p_ref,
                           const Eigen::Vector3d& w_diag, double weight,
                           std::optional<double> threshold) {
  CostTerm t;
  t.kind = TermKind::EePose;
  t.weight = weight;
  t.threshold = threshold;
  t.p_ref = p_ref;
  t.pose_w = w_diag;
  return t;
}

CostTerm CostTerm::posture(const Config& q_nom, const Eigen::VectorXd& w_diag,
                           double weight, std::optional<double> threshold) {
  CostTerm t;
  t.kind = TermKind::Posture;
  t.weight = weight;
  t.threshold = threshold;
  t.q_nom = q_nom;
  t.posture_w = w_diag;
  return t;
}

CostTerm CostTerm::joint_limit(double weight, std::optional<double> threshold) {
  CostTerm t;
  t.kind = TermKind::JointLimit;
  t.weight = weight;
  t.threshold = threshold;
  return t;
}

CostTerm CostTerm::static_stability(double lo, double hi, double weight,
                                    std::optional<double> threshold) {
  CostTerm t;
  t.kind = TermKind::StaticStability;
  t.weight = weight;
  t.threshold = threshold;
  t.com_lo = lo;
  t.com_hi = hi;
  return t;
}

bool CostBundle::has_thresholds() const {
  for (const CostTerm& t : terms)
    if (t.threshold) return true;
  return false;
}

ValueGrad eval_term(const CostTerm& term, const PlanarChain& chain,
                    const Config& q) {
  switch (term.kind) {
    case TermKind::EePose:
      return ee_pose_cost(chain, q, term.p_ref, term.pose_w);
    case TermKind::Posture:
      return posture_cost(q, term.q_nom, term.posture_w);
    case TermKind::JointLimit:
      return joint_limit_cost(chain, q);
    case TermKind::StaticStability:
      return static_stability_cost(chain, q, term.com_lo, term.com_hi);
  }
  throw std::logic_error("eval_term: unknown term kind");
}

CostReport evaluate(const CostBundle& bundle, const Config& q) {
  if (bundle.chain == nullptr)
    throw std::invalid_argument("evaluate: bundle has no chain");
  CostReport report;
  report.raw.reserve(bundle.terms.size());
  report.grad = Eigen::VectorXd::Zero(q.size());
  report.all_below_threshold = true;
  for (const CostTerm& term : bundle.terms) {
    const ValueGrad vg = eval_term(term, *bundle.chain, q);
    report.raw.push_back(vg.value);
    report.total += term.weight * vg.value;
    report.grad += term.weight * vg.grad;
    if (term.threshold && vg.value > *term.threshold)
      report.all_below_threshold = false;
  }
  return report;
}

}  // namespace msamp

#include "msamp/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace msamp {

namespace {

void check_dim(const PlanarChain& chain, const Config& q) {
  if (q.size() != chain.dof())
    throw std::invalid_argument("configuration dimension " +
                                std::to_string(q.size()) +
                                " does not match chain dof " +
                                std::to_string(chain.dof()));
}

}  // namespace

void PlanarChain::validate() const {
  const auto n = link_lengths.size();
  if (n == 0) throw std::invalid_argument("chain has no links");
  if (link_masses.size() != n || joint_lower.size() != n ||
      joint_upper.size() != n)
    throw std::invalid_argument("chain vectors must share length");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(link_lengths[i] > 0.0))
      throw std::invalid_argument("link_lengths must be > 0");
    if (!(link_masses[i] >= 0.0))
      throw std::invalid_argument("link_masses must be >= 0");
    if (!(joint_lower[i] < joint_upper[i]))
      throw std::invalid_argument("joint_lower must be < joint_upper");
  }
}

EePose forward_kinematics(const PlanarChain& chain, const Config& q) {
  check_dim(chain, q);
  EePose pose;
  pose.x = chain.base.x();
  pose.y = chain.base.y();
  double angle = 0.0;
  for (int i = 0; i < chain.dof(); ++i) {
    angle += q[i];
    pose.x += chain.link_lengths[i] * std::cos(angle);
    pose.y += chain.link_lengths[i] * std::sin(angle);
  }
  pose.theta = angle;
  return pose;
}

Eigen::Matrix<double, 3, Eigen::Dynamic> jacobian(const PlanarChain& chain,
                                                  const Config& q) {
  check_dim(chain, q);
  const int n = chain.dof();
  Eigen::Matrix<double, 3, Eigen::Dynamic> jac(3, n);

  // Suffix sums: d(x)/d(q_j) = -sum_{i>=j} L_i sin(c_i), c_i cumulative.
  std::vector<double> lc(n), ls(n);
  double angle = 0.0;
  for (int i = 0; i < n; ++i) {
    angle += q[i];
    lc[i] = chain.link_lengths[i] * std::cos(angle);
    ls[i] = chain.link_lengths[i] * std::sin(angle);
  }
  double sx = 0.0, sy = 0.0;
  for (int j = n - 1; j >= 0; --j) {
    sx += ls[j];
    sy += lc[j];
    jac(0, j) = -sx;
    jac(1, j) = sy;
    jac(2, j) = 1.0;
  }
  return jac;
}

Vec2 center_of_mass(const PlanarChain& chain, const Config& q) {
  check_dim(chain, q);
  const double total = chain.link_masses.sum();
  if (!(total > 0.0))
    throw std::invalid_argument("center_of_mass: all link masses are zero");
  Vec2 acc = Vec2::Zero();
  Vec2 joint = chain.base;
  double angle = 0.0;
  for (int i = 0; i < chain.dof(); ++i) {
    angle += q[i];
    const Vec2 dir(std::cos(angle), std::sin(angle));
    const Vec2 mid = joint + 0.5 * chain.link_lengths[i] * dir;
    acc += chain.link_masses[i] * mid;
    joint += chain.link_lengths[i] * dir;
  }
  return acc / total;
}

Eigen::Matrix<double, 2, Eigen::Dynamic> com_jacobian(const PlanarChain& chain,
                                                      const Config& q) {
  check_dim(chain, q);
  const int n = chain.dof();
  const double total = chain.link_masses.sum();
  if (!(total > 0.0))
    throw std::invalid_argument("com_jacobian: all link masses are zero");

  // Midpoint of link i depends on joints j <= i. Rotating joint j swings
  // link k >= j with the mass hanging past it: carried_k = 0.5 m_k (its own
  // midpoint) plus every mass beyond link k. The column for q_j is then the
  // suffix sum over k >= j of carried_k * L_k * dir'_k.
  Eigen::Matrix<double, 2, Eigen::Dynamic> jac(2, n);
  double angle = 0.0;
  std::vector<double> cum(n);
  for (int i = 0; i < n; ++i) {
    angle += q[i];
    cum[i] = angle;
  }
  double mass_beyond = 0.0;
  double sx = 0.0, sy = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double carried = mass_beyond + 0.5 * chain.link_masses[k];
    sx += carried * chain.link_lengths[k] * (-std::sin(cum[k]));
    sy += carried * chain.link_lengths[k] * std::cos(cum[k]);
    jac(0, k) = sx / total;
    jac(1, k) = sy / total;
    mass_beyond += chain.link_masses[k];
  }
  return jac;
}

std::vector<Segment> link_segments(const PlanarChain& chain, const Config& q) {
  check_dim(chain, q);
  std::vector<Segment> segs;
  segs.reserve(chain.dof());
  Vec2 joint = chain.base;
  double angle = 0.0;
  for (int i = 0; i < chain.dof(); ++i) {
    angle += q[i];
    const Vec2 next =
        joint + chain.link_lengths[i] * Vec2(std::cos(angle), std::sin(angle));
    segs.push_back({joint, next});
    joint = next;
  }
  return segs;
}

double segment_point_distance(const Segment& s, const Vec2& p) {
  const Vec2 d = s.b - s.a;
  const double len2 = d.squaredNorm();
  if (len2 <= 0.0) return (p - s.a).norm();
  const double t = std::clamp((p - s.a).dot(d) / len2, 0.0, 1.0);
  return (s.a + t * d - p).norm();
}

namespace {

double segment_segment_distance(const Segment& s, const Segment& t) {
  const Vec2 d1 = s.b - s.a;
  const Vec2 d2 = t.b - t.a;
  const auto cross = [](const Vec2& u, const Vec2& v) {
    return u.x() * v.y() - u.y() * v.x();
  };
  const double denom = cross(d1, d2);
  if (denom != 0.0) {
    const Vec2 r = t.a - s.a;
    const double u = cross(r, d2) / denom;
    const double v = cross(r, d1) / denom;
    if (u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0) return 0.0;
  }
  double best = segment_point_distance(s, t.a);
  best = std::min(best, segment_point_distance(s, t.b));
  best = std::min(best, segment_point_distance(t, s.a));
  best = std::min(best, segment_point_distance(t, s.b));
  return best;
}

bool point_in_box(const Vec2& p, const BoxObstacle& box) {
  return p.x() >= box.lo.x() && p.x() <= box.hi.x() && p.y() >= box.lo.y() &&
         p.y() <= box.hi.y();
}

}  // namespace

double segment_box_distance(const Segment& s, const BoxObstacle& box) {
  if (point_in_box(s.a, box) || point_in_box(s.b, box)) return 0.0;
  const Vec2 c0 = box.lo;
  const Vec2 c1(box.hi.x(), box.lo.y());
  const Vec2 c2 = box.hi;
  const Vec2 c3(box.lo.x(), box.hi.y());
  const Segment edges[4] = {{c0, c1}, {c1, c2}, {c2, c3}, {c3, c0}};
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& e : edges)
    best = std::min(best, segment_segment_distance(s, e));
  return best;
}

double world_clearance(const PlanarChain& chain, const Config& q,
                       const World& world) {
  double best = std::numeric_limits<double>::infinity();
  if (world.obstacles.empty()) return best;
  const auto segs = link_segments(chain, q);
  for (const Segment& s : segs) {
    for (const Obstacle& obs : world.obstacles) {
      double c;
      if (const auto* circle = std::get_if<CircleObstacle>(&obs))
        c = segment_point_distance(s, circle->center) - circle->radius;
      else
        c = segment_box_distance(s, std::get<BoxObstacle>(obs));
      best = std::min(best, c);
    }
  }
  return best;
}

bool in_collision(const PlanarChain& chain, const Config& q,
                  const World& world) {
  if (world.obstacles.empty()) return false;
  return world_clearance(chain, q, world) < world.clearance_margin;
}

}  // namespace msamp

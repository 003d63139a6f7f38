#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace msamp {

using Config = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;

/// Serial planar chain of revolute joints. Link i has length link_lengths[i]
/// and a point mass link_masses[i] at its midpoint. Angles are relative to
/// the previous link; the chain is fixed at `base`.
struct PlanarChain {
  std::string name;
  Eigen::VectorXd link_lengths;
  Eigen::VectorXd link_masses;
  Vec2 base{0.0, 0.0};
  Eigen::VectorXd joint_lower;
  Eigen::VectorXd joint_upper;

  int dof() const { return static_cast<int>(link_lengths.size()); }

  /// Throws std::invalid_argument on inconsistent dimensions, non-positive
  /// lengths, negative masses, or inverted joint limits.
  void validate() const;
};

/// End-effector pose. theta is the plain sum of joint angles, deliberately
/// unwrapped so the pose map stays smooth.
struct EePose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Eigen::Vector3d vec() const { return {x, y, theta}; }
};

struct CircleObstacle {
  Vec2 center;
  double radius = 0.0;
};

struct BoxObstacle {
  Vec2 lo;
  Vec2 hi;
};

using Obstacle = std::variant<CircleObstacle, BoxObstacle>;

struct World {
  std::vector<Obstacle> obstacles;
  double clearance_margin = 0.0;
};

struct Segment {
  Vec2 a;
  Vec2 b;
};

EePose forward_kinematics(const PlanarChain& chain, const Config& q);

/// 3 x n analytic Jacobian of (x, y, theta) w.r.t. q. The theta row is all
/// ones.
Eigen::Matrix<double, 3, Eigen::Dynamic> jacobian(const PlanarChain& chain,
                                                  const Config& q);

/// Mass-weighted average of link midpoints. Throws std::invalid_argument if
/// all masses are zero.
Vec2 center_of_mass(const PlanarChain& chain, const Config& q);

Eigen::Matrix<double, 2, Eigen::Dynamic> com_jacobian(const PlanarChain& chain,
                                                      const Config& q);

/// Segment i runs from joint frame i to joint frame i+1.
std::vector<Segment> link_segments(const PlanarChain& chain, const Config& q);

double segment_point_distance(const Segment& s, const Vec2& p);
double segment_box_distance(const Segment& s, const BoxObstacle& box);

/// Smallest clearance between any link segment and any obstacle. Circle
/// clearance is point-segment distance minus radius (can be negative); box
/// clearance is segment-to-box distance (zero when intersecting). Returns
/// +inf for an empty world.
double world_clearance(const PlanarChain& chain, const Config& q,
                       const World& world);

/// True iff some link's clearance is below world.clearance_margin.
bool in_collision(const PlanarChain& chain, const Config& q,
                  const World& world);

}  // namespace msamp

/*
 * Copyright 2026 The GridForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <numbers>
#include <random>

#include "Eigen/LU"
#include "gridforge/common/error.h"
#include "gridforge/odometry/gicp.h"
#include "gtest/gtest.h"
#include "test_clouds.h"

namespace gridforge {
namespace odometry {
namespace {

using transform::SE3Transform;

constexpr double kDegree = std::numbers::pi / 180.;

Eigen::Matrix3d RandomCovariance(std::mt19937& rng) {
  std::normal_distribution<double> n(0., 1.);
  Eigen::Matrix3d a;
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = n(rng);
  return a * a.transpose() + 0.05 * Eigen::Matrix3d::Identity();
}

// Stacks all residuals and the block-diagonal combined covariance, then
// solves the dense system.
double DenseResidual(const SE3Transform& x,
                     const std::vector<Eigen::Vector3d>& src,
                     const std::vector<Eigen::Vector3d>& tgt,
                     const std::vector<Correspondence>& pairs,
                     const PointCovariances& src_cov,
                     const PointCovariances& tgt_cov) {
  const int n = static_cast<int>(pairs.size());
  Eigen::VectorXd d(3 * n);
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(3 * n, 3 * n);
  const Eigen::Matrix3d& r = x.rotation();
  for (int i = 0; i < n; ++i) {
    const Correspondence& c = pairs[i];
    d.segment<3>(3 * i) =
        tgt[c.target] - (r * src[c.source] + x.translation());
    sigma.block<3, 3>(3 * i, 3 * i) =
        tgt_cov[c.target] + r * src_cov[c.source] * r.transpose();
  }
  return d.dot(sigma.fullPivLu().solve(d));
}

TEST(GicpResidualTest, ZeroAtIdentity) {
  const std::vector<Eigen::Vector3d> points = testing::MakeSurfaceCloud(50, 1);
  std::vector<Correspondence> pairs;
  for (int i = 0; i < 50; ++i) pairs.push_back({i, i});
  const PointCovariances cov(50, Eigen::Matrix3d::Identity());
  EXPECT_EQ(GicpResidual(SE3Transform::Identity(), points, points, pairs, cov,
                         cov),
            0.);
}

TEST(GicpResidualTest, SinglePairQuadraticForm) {
  const std::vector<Eigen::Vector3d> src{{0, 0, 0}};
  const std::vector<Eigen::Vector3d> tgt{{1, 0, 0}};
  const std::vector<Correspondence> pairs{{0, 0}};
  const PointCovariances cov{Eigen::Matrix3d::Identity() * 0.5};
  EXPECT_DOUBLE_EQ(
      GicpResidual(SE3Transform::Identity(), src, tgt, pairs, cov, cov), 1.);
}

TEST(GicpResidualTest, MatchesDenseOracle) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1., 1.);
  for (int trial = 0; trial < 100; ++trial) {
    const int ns = 3 + trial % 7, nt = 4 + trial % 5;
    std::vector<Eigen::Vector3d> src, tgt;
    PointCovariances src_cov, tgt_cov;
    for (int i = 0; i < ns; ++i) {
      src.emplace_back(u(rng), u(rng), u(rng));
      src_cov.push_back(RandomCovariance(rng));
    }
    for (int i = 0; i < nt; ++i) {
      tgt.emplace_back(u(rng), u(rng), u(rng));
      tgt_cov.push_back(RandomCovariance(rng));
    }
    std::vector<Correspondence> pairs;
    for (int i = 0; i < ns; ++i) pairs.push_back({i, (i * 7 + trial) % nt});
    SE3Transform::Vector6 twist;
    for (int k = 0; k < 6; ++k) twist[k] = u(rng);
    const SE3Transform x = SE3Transform::Exp(twist);
    const double expected = DenseResidual(x, src, tgt, pairs, src_cov, tgt_cov);
    const double actual = GicpResidual(x, src, tgt, pairs, src_cov, tgt_cov);
    EXPECT_NEAR(actual, expected, 1e-9 * std::abs(expected)) << trial;
  }
}

class RegisterTest : public ::testing::Test {
 protected:
  void SetUp() override { points_ = testing::MakeSurfaceCloud(1500, 42); }

  RegistrationResult RegisterMoved(const SE3Transform& motion) {
    std::vector<Eigen::Vector3d> moved;
    for (const auto& p : points_) moved.push_back(motion * p);
    const CovarianceCloud source = CovarianceCloud::FromPoints(points_, 10);
    const RegistrationTarget target(moved, 10);
    return Register(source, target, SE3Transform::Identity());
  }

  std::vector<Eigen::Vector3d> points_;
};

TEST_F(RegisterTest, SameCloudGivesIdentity) {
  const RegistrationResult result = RegisterMoved(SE3Transform::Identity());
  EXPECT_LT(result.transform.translation().norm(), 1e-6);
  EXPECT_LT(result.transform.RotationAngle(), 1e-6);
  EXPECT_TRUE(result.converged);
}

TEST_F(RegisterTest, RecoversTranslation) {
  const RegistrationResult result =
      RegisterMoved(SE3Transform::FromTranslation({0.1, 0, 0}));
  EXPECT_LT((result.transform.translation() - Eigen::Vector3d(0.1, 0, 0))
                .norm(),
            1e-3);
}

TEST_F(RegisterTest, RecoversYaw) {
  const RegistrationResult result =
      RegisterMoved(SE3Transform::FromYaw(5 * kDegree));
  EXPECT_NEAR(transform::Se3ToPose2D(result.transform).yaw, 5 * kDegree,
              0.1 * kDegree);
}

TEST_F(RegisterTest, AcceptedStepsDoNotIncreaseResidual) {
  const RegistrationResult result = RegisterMoved(
      SE3Transform::FromRollPitchYaw(0.02, -0.01, 0.1, {0.2, -0.1, 0.05}));
  for (const auto& [before, after] : result.accepted_steps) {
    EXPECT_LE(after, before);
  }
}

TEST(RegisterFailureTest, TooFewCorrespondences) {
  const std::vector<Eigen::Vector3d> points = testing::MakeSurfaceCloud(200, 3);
  std::vector<Eigen::Vector3d> far;
  for (const auto& p : points) far.push_back(p + Eigen::Vector3d(50, 0, 0));
  const CovarianceCloud source = CovarianceCloud::FromPoints(points, 10);
  const RegistrationTarget target(far, 10);
  EXPECT_THROW(Register(source, target, SE3Transform::Identity()),
               RegistrationError);
}

TEST(RegisterScanToScanTest, EmptyCloud) {
  EXPECT_THROW(RegisterScanToScan({}, {}), RegistrationError);
}

}  // namespace
}  // namespace odometry
}  // namespace gridforge

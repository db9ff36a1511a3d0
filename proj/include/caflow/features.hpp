#pragma once

#include <array>
#include <vector>

#include "caflow/projector.hpp"
#include "caflow/types.hpp"
#include "caflow/vessel_tree.hpp"

namespace caflow::feat {

/// Deterministic direction set for the virtual spheres around each
/// centerline point (view-independent).
struct SphereSampling {
  int k = 16;  // surface points per node; node center is always included
};

std::vector<Vector3d> fibonacci_directions(int k);

/// Mean of bilinear line-integral samples at the projected node center and
/// its k sphere-surface points. Samples outside the detector are dropped
/// from the mean; all-outside entries become 0 and are counted in
/// dropped_entries (a coverage warning is printed once per call).
MatrixXd backprojection_feature(const proj::ProjectionStack& stack,
                                const tree::VesselTree& tr,
                                const SphereSampling& sampling,
                                long long* dropped_entries = nullptr);

/// Intersection area of two discs with center distance d.
double circle_lens_area(double r1, double r2, double d);

/// Overlap uncertainty u_{i,t}: every node's inscribed sphere projects to a
/// disc under central magnification; u is the summed pairwise disc
/// intersection (self included) over the node's own disc area, so an
/// isolated node scores exactly 1. Pruned and exhaustive evaluation are
/// bit-identical (pruning only skips exact-zero terms).
MatrixXd overlap_map(const tree::VesselTree& tr, const proj::CArmTrajectory& traj,
                     bool prune = true, int jobs = 1);

/// Foreshortening angle v_{i,t} = arccos(|ray . tangent|) in [0, pi/2];
/// 0 = ray parallel to the vessel (maximal foreshortening).
MatrixXd foreshortening_map(const tree::VesselTree& tr,
                            const proj::CArmTrajectory& traj, int jobs = 1);

struct FeatureNorms {
  double c_bp = 0.0;  // backprojection divisor; pipeline uses mu_eff*2*r_ref
  double u_cap = 9.0; // overlap scale: ch1 = clip((u-1)/u_cap, 0, 1)
};

/// 3 x P x T network input (channels: backprojection, overlap,
/// foreshortening), normalized per FeatureNorms; channel 2 divided by pi/2.
struct FeatureTensor {
  std::array<MatrixXd, 3> channels;  // each P x T
  FeatureNorms norms;
};

FeatureTensor assemble(const MatrixXd& bp, const MatrixXd& overlap,
                       const MatrixXd& foreshortening, const FeatureNorms& norms);

}  // namespace caflow::feat

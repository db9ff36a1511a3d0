#pragma once

#include <cstdint>
#include <vector>

#include "caflow/hemo.hpp"
#include "caflow/types.hpp"
#include "caflow/vessel_tree.hpp"

namespace caflow::proj {

/// Rotational C-arm sweep: primary angle alpha about the cranio-caudal (z)
/// axis advancing delta_alpha per frame, fixed secondary tilt beta.
struct CArmTrajectory {
  double alpha0 = 0.0;       // deg, starting primary angle
  double beta = 0.0;         // deg, secondary tilt
  double delta_alpha = 0.85; // deg per frame
  double frame_rate = 60.0;  // 1/s
  int n_frames = 1;
  double sid = 750.0;        // mm, source-isocenter distance
  double sdd = 1200.0;       // mm, source-detector distance
  int det_rows = 256;        // H
  int det_cols = 256;        // W
  double pixel_pitch = 1.0;  // mm at the detector

  void check() const {
    require(sdd > sid && sid > 0.0, "trajectory: need sdd > sid > 0");
    require(pixel_pitch > 0.0 && n_frames >= 1 && frame_rate > 0.0 &&
                det_rows >= 1 && det_cols >= 1,
            "trajectory: invalid detector/frame parameters");
  }
};

/// One frame's pose. Pixel (row, col) lies at
///   det_origin + col*pitch*col_axis + row*pitch*row_axis,
/// and `matrix` maps homogeneous world points to (col*w, row*w, w) with
/// w = depth along the detector normal. Isocenter maps to the detector
/// center ((W-1)/2, (H-1)/2).
struct ProjectionGeometry {
  Vector3d source;
  Vector3d det_origin;   // world position of pixel (0,0)
  Vector3d row_axis;     // unit, direction of increasing row
  Vector3d col_axis;     // unit, direction of increasing col
  Vector3d view_dir;     // unit, source -> isocenter (detector normal)
  double mag = 0.0;      // sdd / pixel_pitch, px per unit tangent
  ProjMatrix34 matrix;

  // (col, row) pixel coordinates and depth of a world point.
  Vector3d project(const Vector3d& x) const {
    const Eigen::Vector4d h(x.x(), x.y(), x.z(), 1.0);
    const Vector3d p = matrix * h;
    return {p.x() / p.z(), p.y() / p.z(), p.z()};
  }
};

/// Monoenergetic attenuation of the contrast agent. mu_eff is derived from
/// the mass-attenuation mixture rule and the CA density. The coefficient
/// defaults are placeholders at a nominal tube energy; they scale projection
/// inputs, not ground-truth concentrations.
struct AttenuationModel {
  double w_ip = 0.471;      // iopromide weight fraction (623 mg/ml solution)
  double mu_rho_ip = 2.48;  // cm^2/g
  double mu_rho_w = 0.206;  // cm^2/g
  double rho_ca = 1.322;    // g/ml
  double noise_sigma = 0.0; // additive Gaussian in line-integral domain
  std::uint64_t noise_seed = 0;

  double mu_eff() const;  // 1/mm for pure CA (c = 1)
};

/// T line-integral frames g = integral of mu_eff * c along the ray.
struct ProjectionStack {
  std::vector<ArrayXXd> frames;  // each H x W (row-major indexing frame(r,c))
  CArmTrajectory traj;
};

ProjectionGeometry geometry_at(const CArmTrajectory& traj, int frame);

double ca_mass_attenuation(double w_ip, double mu_rho_ip, double mu_rho_w);

/// Chord length of ray (origin + t*dir, t >= 0) inside the finite uncapped
/// cylinder of given radius around segment [a, b]. Zero when disjoint.
double ray_cylinder_chord(const Vector3d& origin, const Vector3d& dir,
                          const Vector3d& a, const Vector3d& b, double radius);

struct ProjectOptions {
  int jobs = 1;
  bool culling = true;  // per-segment projected bounding rectangles
};

ProjectionStack forward_project(const tree::VesselTree& tr,
                                const hemo::ConcentrationMap& conc,
                                const CArmTrajectory& traj,
                                const AttenuationModel& atten,
                                const ProjectOptions& opt = {});

std::vector<ArrayXXd> intensity_domain(const ProjectionStack& stack, double i0);

}  // namespace caflow::proj

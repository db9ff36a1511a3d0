#pragma once

#include "caflow/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace caflow::tree {

/// One centerline point. Positions and radii in millimetres.
struct Node {
  Vector3d position = Vector3d::Zero();
  double radius = 0.0;
  Vector3d tangent = Vector3d::UnitZ();
  int branch_id = -1;
  double arc_pos = 0.0;  // distance from branch start, mm
  bool is_bifurcation_region = false;
};

/// Contiguous node interval [first_node, last_node), ordered proximal->distal.
struct Branch {
  int id = -1;
  int first_node = 0;
  int last_node = 0;
  int parent = -1;  // -1 for the root branch
  std::vector<int> children;
  // Fraction of the inlet flow carried by this branch. 0 until flow_splits()
  // has been applied; the root carries 1 afterwards.
  double flow_fraction = 0.0;

  int size() const { return last_node - first_node; }
};

struct VesselTree {
  std::vector<Node> nodes;
  std::vector<Branch> branches;
  int root_branch = 0;
  double node_spacing = 0.0;  // mm; 0 until resampled
  std::uint64_t seed = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  bool has_flow_splits() const;
  double mean_radius() const;

  /// Throws std::runtime_error on any structural invariant violation.
  /// Spacing uniformity is checked only when node_spacing > 0, flow
  /// conservation only when flow_splits() has been applied.
  void validate() const;
};

struct TreeGenParams {
  int depth = 3;
  double branch_length_min = 11.0;  // mm
  double branch_length_max = 24.0;  // mm
  double root_radius = 2.0;         // mm
  double murray_exponent = 3.0;
  double tortuosity_amplitude = 0.9;   // mm
  double tortuosity_wavelength = 9.0;  // mm
  double siphon_probability = 0.0;     // chance of a 270 deg arc per branch
  double bif_half_angle_min = deg2rad(18.0);
  double bif_half_angle_max = deg2rad(42.0);
  // Radius ratio between sibling branches; [1,1] forces symmetric splits.
  double child_ratio_min = 0.7;
  double child_ratio_max = 1.0;
};

/// Procedural binary tree with tortuous branches and optional siphon arcs.
/// Deterministic for fixed (params, seed). Child radii obey
/// r_parent^k = sum r_child^k with k = murray_exponent.
VesselTree generate_tree(const TreeGenParams& params, std::uint64_t seed);

/// Plain-text centerline polyline format, see write_centerlines().
VesselTree import_centerlines(std::istream& in);
VesselTree import_centerlines_file(const std::string& path);

void write_centerlines(const VesselTree& tree, std::ostream& out);
void write_centerlines_file(const VesselTree& tree, const std::string& path);

/// Arc-length resampling at spacing h with linear interpolation of position
/// and radius. Tangents are recomputed by central differences; nodes within
/// one local radius of a junction are flagged as bifurcation region.
/// Branches shorter than 2h keep exactly their two endpoints.
VesselTree resample(const VesselTree& tree, double h);

/// Fills flow fractions: at each bifurcation the child share is proportional
/// to (mean child radius)^gamma, propagated down from the root (fraction 1).
VesselTree flow_splits(const VesselTree& tree, double gamma);

/// Flags nodes within one local radius of a junction. resample() applies
/// this itself; call it after importing a pre-resampled tree from disk.
void mark_bifurcation_regions(VesselTree& tree);

/// Per-branch node index list with bifurcation-region nodes excluded.
struct BranchView {
  int branch_id = -1;
  std::vector<int> node_indices;  // global indices, proximal->distal
};

/// Disjoint views covering all non-bifurcation nodes, one per branch.
std::vector<BranchView> decompose(const VesselTree& tree);

/// Scatters per-view row blocks back into a P-row matrix (inverse of taking
/// view rows). Rows not covered by any view are left untouched.
void recombine(const std::vector<BranchView>& views,
               const std::vector<MatrixXd>& per_view_rows, MatrixXd& out);

/// true for rows excluded from views (bifurcation-region nodes).
std::vector<bool> bifurcation_mask(const VesselTree& tree);

}  // namespace caflow::tree

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "caflow/hemo.hpp"
#include "caflow/io.hpp"
#include "caflow/nn.hpp"
#include "caflow/projector.hpp"
#include "caflow/vessel_tree.hpp"

namespace caflow::pipeline {

/// Shared stage context: parsed config, output root, global seed and worker
/// count. Every random draw is keyed by (seed, case/geometry id) so any
/// case can be reproduced in isolation.
struct Context {
  io::Config cfg;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  int jobs = 1;

  static Context from_config(const io::Config& cfg, const std::string& out_override,
                             std::uint64_t seed_override, bool seed_given,
                             int jobs_override);
};

struct CaseSpec {
  int case_id = 0;
  int geometry_id = 0;
  int wave_id = 0;
  int traj_id = 0;
  std::string split;
};

std::vector<CaseSpec> enumerate_cases(const Context& ctx);

std::string geometry_dir(const Context& ctx, int geometry_id);
std::string case_dir(const Context& ctx, int case_id);

tree::TreeGenParams tree_params(const Context& ctx);
hemo::WaveformParams waveform_params(const Context& ctx, int geometry_id, int wave_id);
hemo::InjectionParams injection_params(const Context& ctx);
proj::CArmTrajectory trajectory_params(const Context& ctx, int traj_id);
proj::AttenuationModel attenuation_params(const Context& ctx);
nn::ModelConfig model_config(const Context& ctx);

void run_generate(const Context& ctx);
void run_simulate(const Context& ctx);
void run_project(const Context& ctx);
void run_featurize(const Context& ctx);
void run_train(const Context& ctx);
void run_infer(const Context& ctx, int only_case = -1);
void run_eval(const Context& ctx);
void run_report(const Context& ctx, std::ostream& out);

/// Load a trained model from <out>/train/checkpoint.
nn::Model load_checkpoint(const Context& ctx);

/// Branch training samples for every case with features on disk.
std::vector<nn::Sample> load_dataset(const Context& ctx);

}  // namespace caflow::pipeline

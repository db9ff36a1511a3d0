#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caflow/types.hpp"

namespace caflow::nn {

/// Dense n-d array of 64-bit floats with a gradient of the same shape.
/// Row-major; shape is carried for checkpointing and sanity checks.
struct Tensor {
  std::vector<int> shape;
  VectorXd data;
  VectorXd grad;

  static Tensor zeros(std::vector<int> shape);
  Eigen::Index size() const { return data.size(); }
  void zero_grad() { grad.setZero(); }
};

/// C x H x W feature map, flattened row-major (c, h, w). The model treats
/// H as arc position and W as time.
struct Feat {
  int C = 0, H = 0, W = 0;
  VectorXd v;

  static Feat zeros(int C, int H, int W) {
    Feat f;
    f.C = C;
    f.H = H;
    f.W = W;
    f.v = VectorXd::Zero(static_cast<Eigen::Index>(C) * H * W);
    return f;
  }
};

/// Layers cache what their backward pass needs during forward; backward
/// accumulates parameter gradients and returns the input gradient. One
/// sample is in flight at a time (batch size 1).
struct Conv2d {
  int cin = 0, cout = 0, kh = 0, kw = 0;
  Tensor w;  // {cout, cin, kh, kw}
  Tensor b;  // {cout}

  Conv2d() = default;
  Conv2d(int cin, int cout, int kh, int kw);
  Feat forward(const Feat& x);
  Feat backward(const Feat& dy);

 private:
  Feat x_;  // cached input; the im2col matrix is rebuilt in backward
};

struct InstanceNorm {
  double eps = 1e-5;
  Tensor gamma;  // {C}
  Tensor beta;   // {C}

  InstanceNorm() = default;
  explicit InstanceNorm(int channels, double eps = 1e-5);
  Feat forward(const Feat& x);
  Feat backward(const Feat& dy);

 private:
  Feat xhat_;
  VectorXd inv_std_;
};

struct LeakyReLU {
  double slope = 0.01;

  Feat forward(const Feat& x);
  Feat backward(const Feat& dy);

 private:
  Feat x_;
};

/// Mean absolute error with 0-subgradient at ties. grad() returns
/// dL/dprediction for the last forward.
struct MaeLoss {
  double forward(const VectorXd& pred, const VectorXd& target);
  VectorXd grad() const;

 private:
  VectorXd diff_;
};

struct ModelConfig {
  int blocks = 5;
  int kernel = 5;                                  // kh = kw
  std::vector<int> channels = {16, 32, 64, 64, 64}; // C_i per block
  double leaky_slope = 0.01;
  double in_eps = 1e-5;
  int in_channels = 3;
};

/// Residual block: conv-IN-LReLU-conv-IN, skip (1x1 projection on channel
/// change), LReLU after the sum.
struct ResBlock {
  Conv2d conv1, conv2;
  InstanceNorm in1, in2;
  LeakyReLU act1, act2;
  Conv2d proj;  // used only when cin != cout
  bool has_proj = false;

  Feat forward(const Feat& x);
  Feat backward(const Feat& dy);

 private:
  Feat skip_in_;  // shape bookkeeping for the identity skip
};

struct Model {
  ModelConfig cfg;
  std::vector<ResBlock> blocks;
  Conv2d head;  // 1x1 linear to 1 channel

  explicit Model(const ModelConfig& cfg = {});
  void init(std::uint64_t seed);  // He-uniform weights, zero biases
  Feat forward(const Feat& z);
  void backward(const Feat& dloss_dy);
  std::vector<Tensor*> params();
  std::vector<std::string> param_names() const;
  void zero_grad();
  std::vector<VectorXd> snapshot() const;
  void restore(const std::vector<VectorXd>& snap);
};

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct Adam {
  AdamConfig cfg;
  long long t = 0;

  explicit Adam(const AdamConfig& cfg = {}) : cfg(cfg) {}
  void step(const std::vector<Tensor*>& params);

 private:
  std::vector<VectorXd> m_, v_;
};

/// One branch training pair: input Z^b and target X^b, with the labels the
/// split audit needs.
struct Sample {
  Feat z;       // 3 x P_b x T
  VectorXd x;   // P_b * T target, row-major (arc, time)
  int geometry_id = 0;
  int case_id = 0;
  int branch_id = 0;
  std::string split;  // train | val | test
};

struct TrainConfig {
  int epochs = 300;
  AdamConfig adam;
  std::uint64_t seed = 0;
  bool verbose = false;
};

struct TrainResult {
  std::vector<double> train_mae;  // per epoch, mean over train samples
  std::vector<double> val_mae;    // per epoch, mean over val samples
  int best_epoch = -1;            // argmin val_mae
};

/// Branch-wise training: seeded shuffle each epoch, one Adam step per
/// sample. The model is left holding the lowest-validation-loss weights.
/// Throws if a geometry id appears in two splits or a split is empty.
TrainResult train(Model& model, const std::vector<Sample>& samples,
                  const TrainConfig& cfg);

/// Mean |pred - target| of one sample under the current weights.
double sample_mae(Model& model, const Sample& s);

}  // namespace caflow::nn

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsa/parallel.hpp"
#include "dsa/scenario.hpp"

namespace dsa {

// Per-process level-triggered sampler. A report fires whenever the summed
// increments since the last trigger leave (-delta, delta); the overshoot
// beyond delta is quantized with bits-1 mid-riser bits over [0, phi].
struct LtSampler {
  double delta = 1.0;
  double phi = 1.0;
  int bits = 3;  // r >= 1
  double pending = 0.0;
  double running_sum = 0.0;        // local V
  double last_sample_value = 0.0;  // local V at the previous trigger
  long trigger_count = 0;
};

struct LtMessage {
  int su_id = 0;
  int pu_index = 0;   // i
  int component = 0;  // n
  int sign = 1;       // +1 / -1
  unsigned quant_index = 0;
  long t = 0;
};

struct OvershootCode {
  unsigned index = 0;
  double level = 0.0;
};

// Mid-riser quantization of an overshoot q >= 0 over [0, phi] with
// 2^(bits-1) equal bins; values above phi clamp to the top level.
OvershootCode quantize_overshoot(double q, double phi, int bits);
double overshoot_level(unsigned index, double phi, int bits);

std::optional<LtMessage> sampler_update(LtSampler& s, double y, long t,
                                        int su_id = 0, int pu_index = 0,
                                        int component = 0);

double reconstruct_increment(const LtMessage& m, double delta, double phi,
                             int bits);

// Payload wire format: r bits total, sign first (1 = positive), then the
// bits-1 quantizer index, big-endian.
std::uint32_t encode_payload(int sign, unsigned index, int bits);
std::pair<int, unsigned> decode_payload(std::uint32_t payload, int bits);

// Fusion-side running reconstruction of one process.
struct FcAccumulator {
  double recon_sum = 0.0;
  long message_count = 0;

  void apply(double increment) {
    recon_sum += increment;
    ++message_count;
  }
};

// Root of delta*tanh(delta/2) = sum(mean_abs_increments)/target_rate,
// bracketed bisection to 1e-9. The left side is strictly increasing, so the
// positive root is unique. Throws if the right side is not positive.
double solve_delta(double target_rate,
                   const std::vector<double>& mean_abs_increments);

enum class HypothesisConditioning { idle_only, busy_only, mixture };

// Average messages per unit time across all 4K processes at a given delta,
// measured over independent frames (channel redrawn per frame).
double measure_message_rate(const ScenarioConfig& cfg, double delta,
                            HypothesisConditioning cond, int frames,
                            int steps_per_frame, std::uint64_t seed,
                            RunMode mode = RunMode::parallel);

// Monotone search for the delta whose simulated rate hits target_rate
// within tol (relative); uses common random numbers so the rate is a
// deterministic nonincreasing function of delta during the search.
double calibrate_delta_mc(const ScenarioConfig& cfg, double target_rate,
                          HypothesisConditioning cond, std::uint64_t seed,
                          double tol = 0.005, int frames = 768,
                          int steps_per_frame = 256,
                          RunMode mode = RunMode::parallel);

// Offline percentile of the magnitude of window_len-step increment sums of
// one reporting process, per (pu, su) link; used to size the quantizer range.
std::vector<double> calibrate_phi(const ScenarioConfig& cfg, long window_len,
                                  double percentile, int samples,
                                  std::uint64_t seed,
                                  RunMode mode = RunMode::parallel);

}  // namespace dsa

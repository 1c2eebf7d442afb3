#include "dsa/lt_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsa {

OvershootCode quantize_overshoot(double q, double phi, int bits) {
  if (q < 0.0 || phi <= 0.0 || bits < 1)
    throw std::invalid_argument("quantize_overshoot: bad arguments");
  const unsigned bins = 1u << (bits - 1);
  const double step = phi / double(bins);
  unsigned index = q >= phi ? bins - 1 : unsigned(q / step);
  index = std::min(index, bins - 1);
  return {index, (index + 0.5) * step};
}

double overshoot_level(unsigned index, double phi, int bits) {
  const unsigned bins = 1u << (bits - 1);
  if (index >= bins)
    throw std::out_of_range("overshoot_level: index out of range");
  return (index + 0.5) * (phi / double(bins));
}

std::optional<LtMessage> sampler_update(LtSampler& s, double y, long t,
                                        int su_id, int pu_index,
                                        int component) {
  s.pending += y;
  s.running_sum += y;
  if (std::abs(s.pending) < s.delta) return std::nullopt;
  LtMessage m;
  m.su_id = su_id;
  m.pu_index = pu_index;
  m.component = component;
  m.sign = s.pending >= 0.0 ? 1 : -1;
  m.quant_index =
      quantize_overshoot(std::abs(s.pending) - s.delta, s.phi, s.bits).index;
  m.t = t;
  s.pending = 0.0;  // the overshoot travels in the message, not the residual
  s.last_sample_value = s.running_sum;
  ++s.trigger_count;
  return m;
}

double reconstruct_increment(const LtMessage& m, double delta, double phi,
                             int bits) {
  return m.sign * (delta + overshoot_level(m.quant_index, phi, bits));
}

std::uint32_t encode_payload(int sign, unsigned index, int bits) {
  const unsigned bins = 1u << (bits - 1);
  if (index >= bins) throw std::out_of_range("encode_payload: index too wide");
  const std::uint32_t sign_bit = sign > 0 ? 1u : 0u;
  return (sign_bit << (bits - 1)) | index;
}

std::pair<int, unsigned> decode_payload(std::uint32_t payload, int bits) {
  if (payload >> bits) throw std::out_of_range("decode_payload: stray bits");
  const int sign = (payload >> (bits - 1)) & 1u ? 1 : -1;
  const unsigned index = payload & ((1u << (bits - 1)) - 1u);
  return {sign, index};
}

double solve_delta(double target_rate,
                   const std::vector<double>& mean_abs_increments) {
  double rhs = 0.0;
  for (double v : mean_abs_increments) rhs += std::abs(v);
  if (target_rate <= 0.0) throw std::invalid_argument("solve_delta: rate <= 0");
  rhs /= target_rate;
  if (rhs <= 0.0)
    throw std::domain_error(
        "solve_delta: degenerate zero-mean increments; use the Monte Carlo "
        "calibration instead");
  auto f = [](double d) { return d * std::tanh(d / 2.0); };
  double lo = 0.0, hi = 1.0;
  while (f(hi) < rhs) hi *= 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < rhs ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// Triggers of all 4K processes over one frame: channel fixed, pilots and
// noise redrawn per step. Reproduces exactly what the SU samplers see.
long frame_trigger_count(const ScenarioConfig& cfg, double delta,
                         Hypothesis hyp, int steps, RandomStream& rng) {
  const auto constellation = cfg.make_constellation();
  const int k_sus = cfg.k_sus;
  std::vector<ChannelCoeff> h(std::size_t(2) * k_sus);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < k_sus; ++k)
      h[std::size_t(i) * k_sus + k] = sample_channel(cfg.cross_prior(i, k), rng);
  std::vector<double> pending(std::size_t(4) * k_sus, 0.0);
  long triggers = 0;
  for (int t = 0; t < steps; ++t) {
    const PilotSymbol p[2] = {gen_pilot(constellation, rng),
                              gen_pilot(constellation, rng)};
    for (int k = 0; k < k_sus; ++k) {
      for (int i = 0; i < 2; ++i) {
        const auto prior = cfg.cross_prior(i, k);
        const auto y = observe(hyp, h[std::size_t(i) * k_sus + k], p[i], prior, rng);
        const auto obs = realify(y, p[i]);
        for (int n = 0; n < 2; ++n) {
          double& v = pending[(std::size_t(k) * 2 + i) * 2 + n];
          v += n == 0 ? obs.y1 : obs.y2;
          if (std::abs(v) >= delta) {
            ++triggers;
            v = 0.0;
          }
        }
      }
    }
  }
  return triggers;
}

}  // namespace

double measure_message_rate(const ScenarioConfig& cfg, double delta,
                            HypothesisConditioning cond, int frames,
                            int steps_per_frame, std::uint64_t seed,
                            RunMode mode) {
  std::vector<long> counts(frames, 0);
  parallel_for(frames, mode, [&](std::int64_t f) {
    RandomStream rng = RandomStream::derived(seed, stream_id::delta, f);
    Hypothesis hyp;
    switch (cond) {
      case HypothesisConditioning::idle_only: hyp = Hypothesis::idle; break;
      case HypothesisConditioning::busy_only: hyp = Hypothesis::busy; break;
      default:
        hyp = rng.uniform() < cfg.pi0 ? Hypothesis::idle : Hypothesis::busy;
    }
    counts[f] = frame_trigger_count(cfg, delta, hyp, steps_per_frame, rng);
  });
  long total = 0;
  for (long c : counts) total += c;
  return double(total) / (double(frames) * steps_per_frame);
}

double calibrate_delta_mc(const ScenarioConfig& cfg, double target_rate,
                          HypothesisConditioning cond, std::uint64_t seed,
                          double tol, int frames, int steps_per_frame,
                          RunMode mode) {
  if (target_rate <= 0.0)
    throw std::invalid_argument("calibrate_delta_mc: rate <= 0");
  if (target_rate >= 4.0 * cfg.k_sus)
    throw std::invalid_argument(
        "calibrate_delta_mc: rate unattainable (above one message per process "
        "per sample)");
  auto rate_at = [&](double d) {
    return measure_message_rate(cfg, d, cond, frames, steps_per_frame, seed,
                                mode);
  };
  double lo = 1e-6, hi = 1.0;
  while (rate_at(hi) > target_rate) hi *= 2.0;
  // same seed everywhere: the measured rate is pathwise nonincreasing in
  // delta, so plain bisection converges
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double r = rate_at(mid);
    if (std::abs(r - target_rate) <= tol * target_rate) return mid;
    (r > target_rate ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> calibrate_phi(const ScenarioConfig& cfg, long window_len,
                                  double percentile, int samples,
                                  std::uint64_t seed, RunMode mode) {
  const int k_sus = cfg.k_sus;
  std::vector<std::vector<double>> mags(std::size_t(2) * k_sus,
                                        std::vector<double>(samples));
  parallel_for(samples, mode, [&](std::int64_t s) {
    RandomStream rng = RandomStream::derived(seed, stream_id::phi, s);
    const auto constellation = cfg.make_constellation();
    const Hypothesis hyp =
        rng.uniform() < cfg.pi0 ? Hypothesis::idle : Hypothesis::busy;
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < k_sus; ++k) {
        const auto prior = cfg.cross_prior(i, k);
        const auto h = sample_channel(prior, rng);
        double sum = 0.0;
        for (long w = 0; w < window_len; ++w) {
          const auto p = gen_pilot(constellation, rng);
          sum += realify(observe(hyp, h, p, prior, rng), p).y1;
        }
        mags[std::size_t(i) * k_sus + k][s] = std::abs(sum);
      }
    }
  });
  std::vector<double> phi(mags.size());
  for (std::size_t idx = 0; idx < mags.size(); ++idx) {
    auto& v = mags[idx];
    std::sort(v.begin(), v.end());
    const double pos = percentile / 100.0 * (v.size() - 1);
    const std::size_t i0 = std::size_t(pos);
    const std::size_t i1 = std::min(i0 + 1, v.size() - 1);
    phi[idx] = v[i0] + (pos - double(i0)) * (v[i1] - v[i0]);
  }
  return phi;
}

}  // namespace dsa

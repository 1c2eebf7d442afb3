#pragma once

#include <complex>
#include <vector>

#include "dsa/random.hpp"

namespace dsa {

using Complex = std::complex<double>;

enum class Hypothesis : int { idle = 0, busy = 1 };

// Prior of one cross link. The complex coefficient h has i.i.d. real and
// imaginary parts, each N(mean_re, variance_re); Rayleigh fading is
// mean_re = 0. noise_var is the total complex noise variance N0 at the
// receiver observing through this link.
struct ChannelPrior {
  double mean_re = 0.0;
  double variance_re = 0.5;
  double noise_var = 1.0;

  bool valid() const { return variance_re > 0.0 && noise_var > 0.0; }

  // N0 / sigma^2 with sigma^2 = 2*variance_re (complex channel variance).
  // This is the ratio that regularizes the estimator and LLR.
  double prior_ratio() const { return noise_var / (2.0 * variance_re); }

  // E[|h|^2] = mu^2/2-ish per component; total complex second moment.
  double mean_square() const {
    return 2.0 * (mean_re * mean_re + variance_re);
  }
};

struct ChannelCoeff {
  double re = 0.0;
  double im = 0.0;

  double norm2() const { return re * re + im * im; }
  Complex as_complex() const { return {re, im}; }
};

struct PilotSymbol {
  double re = 0.0;
  double im = 0.0;
  double power = 0.0;  // |p|^2, kept alongside to avoid recomputation

  Complex as_complex() const { return {re, im}; }
};

// One complex observation folded into the paired real model:
// y1 = Re(conj(p) y), y2 = Im(conj(p) y). Under the busy hypothesis these are
// independent Gaussians with mean h_n |p|^2 and variance |p|^2 N0 / 2.
struct RealObservationPair {
  double y1 = 0.0;
  double y2 = 0.0;
  double pilot_power = 0.0;
};

// Finite pilot constellation, already scaled to its declared average power.
struct ConstellationSpec {
  std::vector<Complex> points;
  double average_power = 0.0;

  static ConstellationSpec qam16(double average_power);
  static ConstellationSpec qpsk(double average_power);
};

ChannelCoeff sample_channel(const ChannelPrior& prior, RandomStream& rng);

PilotSymbol gen_pilot(const ConstellationSpec& constellation, RandomStream& rng);

Complex observe(Hypothesis hyp, const ChannelCoeff& h, const PilotSymbol& p,
                const ChannelPrior& prior, RandomStream& rng);

RealObservationPair realify(Complex y, const PilotSymbol& p);

}  // namespace dsa

#include "dsa/channel_model.hpp"

#include <cmath>
#include <stdexcept>

namespace dsa {

ConstellationSpec ConstellationSpec::qam16(double average_power) {
  // {+-1,+-3}^2 grid has mean point power 10; scale to the requested average.
  const double scale = std::sqrt(average_power / 10.0);
  ConstellationSpec spec;
  spec.average_power = average_power;
  for (int a : {-3, -1, 1, 3})
    for (int b : {-3, -1, 1, 3})
      spec.points.emplace_back(a * scale, b * scale);
  return spec;
}

ConstellationSpec ConstellationSpec::qpsk(double average_power) {
  const double s = std::sqrt(average_power / 2.0);
  ConstellationSpec spec;
  spec.average_power = average_power;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) spec.points.emplace_back(a * s, b * s);
  return spec;
}

ChannelCoeff sample_channel(const ChannelPrior& prior, RandomStream& rng) {
  const double sd = std::sqrt(prior.variance_re);
  return {rng.gaussian(prior.mean_re, sd), rng.gaussian(prior.mean_re, sd)};
}

PilotSymbol gen_pilot(const ConstellationSpec& constellation,
                      RandomStream& rng) {
  if (constellation.points.empty())
    throw std::invalid_argument("gen_pilot: empty constellation");
  const Complex p =
      constellation.points[rng.uniform_int(int(constellation.points.size()))];
  return {p.real(), p.imag(), std::norm(p)};
}

Complex observe(Hypothesis hyp, const ChannelCoeff& h, const PilotSymbol& p,
                const ChannelPrior& prior, RandomStream& rng) {
  // Circularly symmetric noise: N0/2 per real dimension.
  const double sd = std::sqrt(prior.noise_var / 2.0);
  Complex w{rng.gaussian(0.0, sd), rng.gaussian(0.0, sd)};
  if (hyp == Hypothesis::idle) return w;
  return h.as_complex() * p.as_complex() + w;
}

RealObservationPair realify(Complex y, const PilotSymbol& p) {
  const Complex z = std::conj(p.as_complex()) * y;
  return {z.real(), z.imag(), p.power};
}

}  // namespace dsa

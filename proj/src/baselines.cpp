#include "dsa/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace dsa {

SprtOutcome sprt_step(double llr, const SprtConfig& cfg) {
  if (!(cfg.lower < cfg.upper))
    throw std::invalid_argument("sprt_step: need lower < upper");
  if (llr >= cfg.upper) return SprtOutcome::decide_busy;
  if (llr <= cfg.lower) return SprtOutcome::decide_idle;
  return SprtOutcome::keep_sampling;
}

int slrt_e_decide(double llr, double c0, double c1) {
  return llr >= std::log(c0) - std::log(c1) ? 1 : 0;
}

double underlay_power(const PowerPolicyInputs& in) {
  double p = in.pmax;
  if (in.gain1 > 0.0) p = std::min(p, in.cap1 / in.gain1);
  if (in.gain2 > 0.0) p = std::min(p, in.cap2 / in.gain2);
  return p;
}

double opportunistic_power(int decision, double pmax) {
  return decision == 1 ? 0.0 : pmax;
}

}  // namespace dsa

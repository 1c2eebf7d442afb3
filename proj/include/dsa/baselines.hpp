#pragma once

namespace dsa {

// Two-threshold sequential probability ratio test on the marginalized LLR.
struct SprtConfig {
  double lower = -2.0;  // A < 0
  double upper = 2.0;   // B > 0
};

enum class SprtOutcome { keep_sampling, decide_idle, decide_busy };

SprtOutcome sprt_step(double llr, const SprtConfig& cfg);

// Plain LRT decision used by SLRT&E: busy iff llr >= log(c0/c1).
int slrt_e_decide(double llr, double c0, double c1);

struct PowerPolicyInputs {
  double gain1 = 0.0;  // |h to PU 1|^2
  double gain2 = 0.0;
  double cap1 = 1.0;  // I_1
  double cap2 = 1.0;
  double pmax = 1.0;
};

// min{Pmax, I1/gain1, I2/gain2}; a zero gain drops its cap (deep fade).
double underlay_power(const PowerPolicyInputs& in);

double opportunistic_power(int decision, double pmax);

}  // namespace dsa

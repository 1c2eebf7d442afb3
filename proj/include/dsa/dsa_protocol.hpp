#pragma once

#include <array>
#include <span>
#include <vector>

#include "dsa/lt_sampling.hpp"
#include "dsa/sjde.hpp"

namespace dsa {

// Sampling parameters shared by the SUs and the FC.
struct LtParams {
  double delta = 1.0;
  std::vector<double> phi;  // per (pu, su), laid out pu * k_sus + su
  int bits = 3;
  int k_sus = 2;

  double phi_at(int pu, int su) const {
    return phi[std::size_t(pu) * k_sus + su];
  }
};

struct SuAgent {
  int id = 0;
  bool is_tx = true;
  SjdeState state;
  std::array<std::array<LtSampler, 2>, 2> samplers{};  // [pu][component]
};

SuAgent make_su_agent(int id, bool is_tx, const LtParams& params);

// Feeds both PUs' observations for one sample into the local statistics and
// all four samplers; returns the triggered reports in (pu, component) order.
std::vector<LtMessage> su_step(SuAgent& agent,
                               const std::array<RealObservationPair, 2>& obs,
                               long t);

struct FcState {
  int k_sus = 2;
  std::array<double, 2> pilot_energy{0.0, 0.0};
  std::vector<std::array<std::array<FcAccumulator, 2>, 2>> acc;  // [su][pu][n]
  long t = 0;
  bool stopped = false;
  long tau = 0;

  explicit FcState(int k = 2) : k_sus(k), acc(k) {}

  double total_pilot_energy() const {
    return pilot_energy[0] + pilot_energy[1];
  }
  long total_messages() const;
};

// One fusion-center time step: accrues pilot energy, applies the decoded
// reports, stops at the threshold or truncates at the preamble end.
void fc_step(FcState& fc, std::span<const LtMessage> messages,
             const std::array<double, 2>& pilot_powers, double gamma, long tp,
             const LtParams& params);

// Estimates per (su, pu, component), flattened (su*2 + pu)*2 + n.
std::vector<double> fc_estimate(
    const FcState& fc, std::span<const std::array<ChannelPrior, 2>> priors);

double fc_global_llr(const FcState& fc,
                     std::span<const std::array<ChannelPrior, 2>> priors);

JointDecision fc_decide(const FcState& fc,
                        std::span<const std::array<ChannelPrior, 2>> priors,
                        const CostWeights& w);

// Transmitter pick under a busy decision: argmax of min{I1/|h1|^2, I2/|h2|^2}
// over the candidates; gains are per-PU squared magnitudes of the estimates.
int select_su(std::span<const int> tx_ids,
              std::span<const std::array<double, 2>> est_gain2, double cap1,
              double cap2);

// Transmit power at the granted SU. Busy decisions use the SU's local
// estimate gains against the calibrated caps; idle decisions use full power.
double compute_power(int decision, const std::array<double, 2>& est_gain2,
                     const std::array<double, 2>& calibrated_caps, double pmax);

struct TransmissionPlan {
  int su_id = -1;
  double power = 0.0;
  int decision = 0;
};

}  // namespace dsa

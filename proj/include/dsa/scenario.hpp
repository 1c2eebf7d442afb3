#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dsa/channel_model.hpp"
#include "dsa/sjde.hpp"

namespace dsa {

enum class Scheme { dsa_sjde, dsa_sprt, opportunistic, underlay };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

// One experiment's physical and algorithmic parameters. Powers are linear
// unless the key says dB; channel variances are total complex variances
// (per-component variance is half); time is counted in samples at
// sample_rate_hz.
struct ScenarioConfig {
  int k_sus = 2;      // K, even: K/2 transmitter-receiver pairs
  double pi0 = 0.5;   // prior probability that the PUs are idle
  double pmax_db = 15.0;
  double p_out = 0.075;
  double outage_margin = 0.5;  // target outage scaled to (1-margin)*p_out
  long frame_samples = 20000;      // T
  long preamble_samples = 2000;    // Tp
  double sample_rate_hz = 1.0e6;   // fs (units only)
  std::string constellation = "qam16";
  double pilot_power = 1.0;   // E|p_i[t]|^2
  double noise_var = 1.0;     // N0 at the SUs and on the SU Tx-Rx link
  double h_mean = 0.0;        // complex mean of cross links (0 = Rayleigh)
  double h_var = 1.0;         // complex variance of cross links
  double beta_var = 1.0;      // SU Tx-Rx link (Rayleigh)
  double g_var = 1.0;         // PU-PU links (Rayleigh)
  std::array<double, 2> pu_tx_power{1.0, 1.0};  // Q_i under busy
  double pu_rate = 0.05;      // R_i target, bits/s/Hz
  double pu_noise_var = 0.3;  // eta at the PU receivers
  CostWeights weights{0.2, 0.2, 0.6};
  int lt_bits = 3;            // r bits per report
  double msg_rate = 0.0;      // M; 0 selects the default M = K
  long uniform_period = 4;    // Tu in samples for the uniform-sampling schemes
  double gamma_lo = 2.0;      // offline search interval for the stopping threshold
  double gamma_hi = 512.0;
  int tune_grid = 16;
  long tune_trials = 8000;
  Scheme scheme = Scheme::dsa_sjde;
  std::uint64_t seed = 20240801;
  long trials = 10000;

  // per-link overrides keyed h_var_<i>_<k> / h_mean_<i>_<k> (1-based)
  std::vector<double> h_var_override;   // 2*K entries, <0 = use default
  std::vector<double> h_mean_override;

  void validate() const;

  double pmax() const;
  double effective_msg_rate() const { return msg_rate > 0 ? msg_rate : k_sus; }
  int num_tx() const { return k_sus / 2; }
  int tx_id(int pair) const { return 2 * pair; }
  int rx_id(int pair) const { return 2 * pair + 1; }

  ChannelPrior cross_prior(int pu, int su) const;
  ChannelPrior beta_prior() const;
  ChannelPrior g_prior() const;
  ConstellationSpec make_constellation() const;
  std::vector<std::array<ChannelPrior, 2>> priors_per_su() const;

  // Hash over every field that affects calibration artifacts.
  std::uint64_t calibration_hash() const;
};

ScenarioConfig read_scenario(const std::string& path);
ScenarioConfig parse_scenario(const std::string& text);

}  // namespace dsa

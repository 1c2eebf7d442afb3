#include "dsa/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsa {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::dsa_sjde: return "dsa-sjde";
    case Scheme::dsa_sprt: return "dsa-sprt";
    case Scheme::opportunistic: return "opportunistic";
    case Scheme::underlay: return "underlay";
  }
  return "?";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "dsa-sjde") return Scheme::dsa_sjde;
  if (name == "dsa-sprt") return Scheme::dsa_sprt;
  if (name == "opportunistic") return Scheme::opportunistic;
  if (name == "underlay") return Scheme::underlay;
  throw std::invalid_argument("unknown scheme: " + name);
}

void ScenarioConfig::validate() const {
  if (k_sus < 2 || k_sus % 2 != 0)
    throw std::invalid_argument("k_sus must be even and >= 2");
  if (pi0 < 0.0 || pi0 > 1.0) throw std::invalid_argument("pi0 out of [0,1]");
  if (preamble_samples <= 0 || frame_samples < preamble_samples)
    throw std::invalid_argument("need 0 < preamble_samples <= frame_samples");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (pilot_power <= 0 || noise_var <= 0 || h_var <= 0 || beta_var <= 0 ||
      g_var <= 0 || pu_noise_var <= 0)
    throw std::invalid_argument("powers and variances must be positive");
  if (p_out <= 0.0 || p_out >= 1.0)
    throw std::invalid_argument("p_out must be in (0,1)");
  if (outage_margin < 0.0 || outage_margin >= 1.0)
    throw std::invalid_argument("outage_margin must be in [0,1)");
  if (lt_bits < 1) throw std::invalid_argument("lt_bits must be >= 1");
  if (uniform_period < 1) throw std::invalid_argument("uniform_period >= 1");
  if (weights.c0 < 0 || weights.c1 < 0 || weights.ce < 0 ||
      (weights.c0 == 0 && weights.c1 == 0 && weights.ce == 0))
    throw std::invalid_argument("cost weights invalid");
}

double ScenarioConfig::pmax() const { return std::pow(10.0, pmax_db / 10.0); }

ChannelPrior ScenarioConfig::cross_prior(int pu, int su) const {
  const std::size_t idx = std::size_t(pu) * k_sus + su;
  double var = h_var;
  double mean = h_mean;
  if (idx < h_var_override.size() && h_var_override[idx] >= 0.0)
    var = h_var_override[idx];
  if (idx < h_mean_override.size() && h_mean_override[idx] > -1.0e300)
    mean = h_mean_override[idx];
  return {mean / 2.0, var / 2.0, noise_var};
}

ChannelPrior ScenarioConfig::beta_prior() const {
  return {0.0, beta_var / 2.0, noise_var};
}

ChannelPrior ScenarioConfig::g_prior() const {
  return {0.0, g_var / 2.0, pu_noise_var};
}

ConstellationSpec ScenarioConfig::make_constellation() const {
  if (constellation == "qam16") return ConstellationSpec::qam16(pilot_power);
  if (constellation == "qpsk") return ConstellationSpec::qpsk(pilot_power);
  throw std::invalid_argument("unknown constellation: " + constellation);
}

std::vector<std::array<ChannelPrior, 2>> ScenarioConfig::priors_per_su() const {
  std::vector<std::array<ChannelPrior, 2>> out(k_sus);
  for (int k = 0; k < k_sus; ++k)
    out[k] = {cross_prior(0, k), cross_prior(1, k)};
  return out;
}

namespace {

void hash_mix(std::uint64_t& h, double v) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  h ^= bits;
  h *= 0x100000001B3ULL;  // FNV-1a step
}

void hash_mix(std::uint64_t& h, long v) { hash_mix(h, double(v)); }

}  // namespace

std::uint64_t ScenarioConfig::calibration_hash() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  hash_mix(h, long(k_sus));
  hash_mix(h, pi0);
  hash_mix(h, pmax_db);
  hash_mix(h, p_out);
  hash_mix(h, outage_margin);
  hash_mix(h, frame_samples);
  hash_mix(h, preamble_samples);
  hash_mix(h, pilot_power);
  hash_mix(h, noise_var);
  hash_mix(h, h_mean);
  hash_mix(h, h_var);
  hash_mix(h, beta_var);
  hash_mix(h, g_var);
  hash_mix(h, pu_tx_power[0]);
  hash_mix(h, pu_tx_power[1]);
  hash_mix(h, pu_rate);
  hash_mix(h, pu_noise_var);
  hash_mix(h, weights.c0);
  hash_mix(h, weights.c1);
  hash_mix(h, weights.ce);
  hash_mix(h, long(lt_bits));
  hash_mix(h, effective_msg_rate());
  hash_mix(h, uniform_period);
  hash_mix(h, gamma_lo);
  hash_mix(h, gamma_hi);
  hash_mix(h, long(tune_grid));
  hash_mix(h, tune_trials);
  for (char c : constellation) hash_mix(h, long(c));
  for (double v : h_var_override) hash_mix(h, v);
  for (double v : h_mean_override) hash_mix(h, v);
  return h;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_link_key(const std::string& key, const std::string& prefix, int k_sus,
                    std::size_t& idx) {
  if (key.rfind(prefix, 0) != 0) return false;
  int pu = 0, su = 0;
  if (std::sscanf(key.c_str() + prefix.size(), "%d_%d", &pu, &su) != 2)
    throw std::invalid_argument("bad per-link key: " + key);
  if (pu < 1 || pu > 2 || su < 1 || su > k_sus)
    throw std::invalid_argument("per-link key out of range: " + key);
  idx = std::size_t(pu - 1) * k_sus + (su - 1);
  return true;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
  ScenarioConfig cfg;
  // two passes so per-link overrides can size off k_sus regardless of order
  std::vector<std::pair<std::string, std::string>> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line missing '=': " + line);
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  for (const auto& [key, value] : kv)
    if (key == "k_sus") cfg.k_sus = std::stoi(value);
  cfg.h_var_override.assign(std::size_t(2) * cfg.k_sus, -1.0);
  cfg.h_mean_override.assign(std::size_t(2) * cfg.k_sus, -1.0e301);

  for (const auto& [key, value] : kv) {
    std::size_t idx = 0;
    if (key == "k_sus") continue;
    else if (key == "pi0") cfg.pi0 = std::stod(value);
    else if (key == "pmax_db") cfg.pmax_db = std::stod(value);
    else if (key == "p_out") cfg.p_out = std::stod(value);
    else if (key == "outage_margin") cfg.outage_margin = std::stod(value);
    else if (key == "frame_samples") cfg.frame_samples = std::stol(value);
    else if (key == "preamble_samples") cfg.preamble_samples = std::stol(value);
    else if (key == "sample_rate_hz") cfg.sample_rate_hz = std::stod(value);
    else if (key == "constellation") cfg.constellation = value;
    else if (key == "pilot_power") cfg.pilot_power = std::stod(value);
    else if (key == "noise_var") cfg.noise_var = std::stod(value);
    else if (key == "h_mean") cfg.h_mean = std::stod(value);
    else if (key == "h_var") cfg.h_var = std::stod(value);
    else if (key == "beta_var") cfg.beta_var = std::stod(value);
    else if (key == "g_var") cfg.g_var = std::stod(value);
    else if (key == "pu_tx_power_1") cfg.pu_tx_power[0] = std::stod(value);
    else if (key == "pu_tx_power_2") cfg.pu_tx_power[1] = std::stod(value);
    else if (key == "pu_rate") cfg.pu_rate = std::stod(value);
    else if (key == "pu_noise_var") cfg.pu_noise_var = std::stod(value);
    else if (key == "c0") cfg.weights.c0 = std::stod(value);
    else if (key == "c1") cfg.weights.c1 = std::stod(value);
    else if (key == "ce") cfg.weights.ce = std::stod(value);
    else if (key == "lt_bits") cfg.lt_bits = std::stoi(value);
    else if (key == "msg_rate") cfg.msg_rate = std::stod(value);
    else if (key == "uniform_period") cfg.uniform_period = std::stol(value);
    else if (key == "gamma_lo") cfg.gamma_lo = std::stod(value);
    else if (key == "gamma_hi") cfg.gamma_hi = std::stod(value);
    else if (key == "tune_grid") cfg.tune_grid = std::stoi(value);
    else if (key == "tune_trials") cfg.tune_trials = std::stol(value);
    else if (key == "scheme") cfg.scheme = scheme_from_string(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "trials") cfg.trials = std::stol(value);
    else if (parse_link_key(key, "h_var_", cfg.k_sus, idx))
      cfg.h_var_override[idx] = std::stod(value);
    else if (parse_link_key(key, "h_mean_", cfg.k_sus, idx))
      cfg.h_mean_override[idx] = std::stod(value);
    else
      throw std::invalid_argument("unknown config key: " + key);
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig read_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace dsa

#ifndef QOT_CHANNEL_HPP
#define QOT_CHANNEL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qot/errors.hpp"
#include "qot/fiber.hpp"

namespace qot {

// One WDM channel. center_freq is relative to the spectral center of the
// transmitted band (the ISRS tilt formulas are written around f = 0); the
// absolute optical frequency lives on the plan as absolute_ref_freq.
struct Channel {
  std::size_t index = 0;       // ordinal within the plan
  double center_freq = 0.0;    // Hz, signed, relative to band center
  double bandwidth = 0.0;      // Hz (equals symbol rate under the Nyquist assumption)
  double launch_power = 0.0;   // W
};

// Ordered, non-overlapping channel loadout with derived totals.
class ChannelPlan {
 public:
  ChannelPlan(std::vector<Channel> channels, double absolute_ref_freq)
      : channels_(std::move(channels)), absolute_ref_freq_(absolute_ref_freq) {
    if (channels_.empty()) throw DomainError("ChannelPlan: needs at least one channel");
    double sum = 0.0;
    for (std::size_t i = 0; i < channels_.size(); ++i) {
      const Channel& c = channels_[i];
      if (c.index != i) {
        throw DomainError("ChannelPlan: channel index " + std::to_string(c.index) +
                          " does not match position " + std::to_string(i));
      }
      if (!(c.bandwidth > 0.0)) throw DomainError("ChannelPlan: bandwidth must be > 0");
      if (!(c.launch_power > 0.0)) throw DomainError("ChannelPlan: launch_power must be > 0");
      if (i > 0) {
        const Channel& p = channels_[i - 1];
        if (!(c.center_freq > p.center_freq)) {
          throw DomainError("ChannelPlan: channels must be sorted by center_freq");
        }
        // Strict non-overlap; touching edges (gapless Nyquist grid) is allowed.
        if (c.center_freq - p.center_freq < 0.5 * (c.bandwidth + p.bandwidth) - 1e-6) {
          throw DomainError("ChannelPlan: channels overlap near index " + std::to_string(i));
        }
      }
      sum += c.launch_power;
    }
    total_power_ = sum;
    band_lo_ = channels_.front().center_freq - 0.5 * channels_.front().bandwidth;
    band_hi_ = channels_.back().center_freq + 0.5 * channels_.back().bandwidth;
  }

  const std::vector<Channel>& channels() const { return channels_; }
  std::size_t size() const { return channels_.size(); }
  const Channel& at(std::size_t i) const { return channels_.at(i); }

  double total_power() const { return total_power_; }
  // Lowest channel lower edge to highest channel upper edge.
  double total_bandwidth() const { return band_hi_ - band_lo_; }
  double band_lo() const { return band_lo_; }
  double band_hi() const { return band_hi_; }
  double absolute_ref_freq() const { return absolute_ref_freq_; }

  // Same spectral loadout with per-channel powers replaced (totals re-derived).
  ChannelPlan with_powers(const std::vector<double>& powers_w) const {
    if (powers_w.size() != channels_.size()) {
      throw DomainError("ChannelPlan::with_powers: size mismatch");
    }
    std::vector<Channel> chs = channels_;
    for (std::size_t i = 0; i < chs.size(); ++i) chs[i].launch_power = powers_w[i];
    return ChannelPlan(std::move(chs), absolute_ref_freq_);
  }

 private:
  std::vector<Channel> channels_;
  double absolute_ref_freq_;
  double total_power_ = 0.0;
  double band_lo_ = 0.0;
  double band_hi_ = 0.0;
};

namespace detail {

// A Channel argument to the model entry points is only a selector into the
// plan; reject stale copies whose geometry no longer matches.
inline void require_member(const ChannelPlan& plan, const Channel& c, const char* who) {
  if (c.index >= plan.size() || plan.at(c.index).center_freq != c.center_freq ||
      plan.at(c.index).bandwidth != c.bandwidth) {
    throw DomainError(std::string(who) + ": channel is not a member of the plan");
  }
}

}  // namespace detail

// One fiber span followed by its amplifier, optional lumped loss at the span
// end, and an optional WSS power-equalization stage after the amplifier.
struct SpanConfig {
  FiberParams fiber;
  double amp_gain_db = 0.0;
  double amp_nf_db = 0.0;
  double lumped_loss_db = 0.0;
  bool wss = false;           // re-equalize signal powers to the launch profile
  double wss_loss_db = 0.0;   // insertion loss applied to ASE/NLI at the WSS
  bool noiseless = false;     // diagnostic flag: amplifier adds no ASE

  void validate() const {
    fiber.validate();
    if (amp_gain_db < 0.0) throw DomainError("SpanConfig: amp_gain_db must be >= 0");
    if (lumped_loss_db < 0.0) throw DomainError("SpanConfig: lumped_loss_db must be >= 0");
    if (wss_loss_db < 0.0) throw DomainError("SpanConfig: wss_loss_db must be >= 0");
  }
};

struct LinkConfig {
  std::vector<SpanConfig> spans;
  double coherence_epsilon = 0.0;  // NLI accumulates as n^(1+eps); 0 = incoherent

  void validate() const {
    if (spans.empty()) throw DomainError("LinkConfig: needs at least one span");
    if (coherence_epsilon < 0.0) throw DomainError("LinkConfig: coherence_epsilon must be >= 0");
    for (const SpanConfig& s : spans) s.validate();
  }
};

}  // namespace qot

#endif  // QOT_CHANNEL_HPP

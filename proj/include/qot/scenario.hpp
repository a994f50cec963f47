#ifndef QOT_SCENARIO_HPP
#define QOT_SCENARIO_HPP

// Scenario configuration: a flat sectioned text format (key = value lines,
// '#' comments), deterministic generators for the three bundled loadouts,
// and the builders that turn a parsed config into domain objects. Unknown
// sections, unknown keys, duplicate keys, and malformed values are all hard
// errors; a config that parses is fully specified.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/fiber.hpp"
#include "qot/gn_integral.hpp"
#include "qot/prng.hpp"
#include "qot/units.hpp"

namespace qot {

// One contiguous group of channels sharing a symbol rate and a power rule.
// Either the grid form (first/last/spacing) or the explicit centers list is
// given, never both. Frequencies are absolute THz at this boundary.
struct BandSpec {
  std::string label;
  double first_thz = 0.0;
  double last_thz = 0.0;
  double spacing_ghz = 0.0;
  std::vector<double> centers_thz;
  double symbol_rate_gbd = 64.0;
  bool optimize_power = true;  // power_dbm = optimize
  double power_dbm = 0.0;      // used when optimize_power is false
};

// Engineering-unit view of the span chain; converted to SI by build_fiber /
// build_link. Every span in a scenario is identical apart from the optional
// WSS position.
struct LinkSpec {
  int span_count = 10;
  double span_length_km = 100.0;
  double attenuation_db_per_km = 0.2;
  double attenuation_bar_db_per_km = 0.2;
  double beta2_ps2_per_km = -21.7;
  double beta3_ps3_per_km = 0.14;
  double gamma_per_w_per_km = 1.3;
  double raman_slope_per_w_per_km_per_thz = 0.028;
  double amp_gain_db = 20.5;
  double amp_nf_db = 4.5;
  double lumped_loss_db = 0.5;
  int wss_after_span = 0;  // 0 = no WSS; k = equalize after span k
  double wss_loss_db = 0.0;
  double coherence_epsilon = 0.0;
};

struct OutputSpec {
  std::string directory = "out";
};

struct ScenarioConfig {
  std::uint64_t seed = 0;
  std::vector<BandSpec> bands;
  LinkSpec link;
  std::vector<std::string> models = {"closed_form", "integral"};
  QuadratureSpec quadrature;
  OutputSpec output;

  void validate() const;
};

// Absolute channel centers of one band, THz, ascending.
inline std::vector<double> band_centers_thz(const BandSpec& band) {
  if (!band.centers_thz.empty()) return band.centers_thz;
  double spacing_thz = band.spacing_ghz / 1000.0;
  double count_f = (band.last_thz - band.first_thz) / spacing_thz;
  auto n = static_cast<std::size_t>(std::llround(count_f)) + 1;
  std::vector<double> centers(n);
  for (std::size_t k = 0; k < n; ++k) {
    centers[k] = band.first_thz + spacing_thz * static_cast<double>(k);
  }
  return centers;
}

inline void ScenarioConfig::validate() const {
  if (bands.empty()) throw ConfigError("config: needs at least one [band] section");
  double prev_hi = 0.0;
  for (std::size_t b = 0; b < bands.size(); ++b) {
    const BandSpec& band = bands[b];
    std::string where = "band " + std::to_string(b + 1);
    bool has_grid = band.first_thz != 0.0 || band.last_thz != 0.0 || band.spacing_ghz != 0.0;
    if (band.centers_thz.empty() == !has_grid) {
      throw ConfigError(where + ": give either first/last/spacing or centers_thz, not both");
    }
    if (band.centers_thz.empty()) {
      if (!(band.spacing_ghz > 0.0)) throw ConfigError(where + ": spacing_ghz must be > 0");
      if (band.last_thz < band.first_thz) {
        throw ConfigError(where + ": last_thz must be >= first_thz");
      }
      double count_f = (band.last_thz - band.first_thz) * 1000.0 / band.spacing_ghz;
      if (std::fabs(count_f - std::llround(count_f)) > 1e-6) {
        throw ConfigError(where + ": last_thz - first_thz is not a multiple of spacing_ghz");
      }
    } else {
      for (std::size_t i = 1; i < band.centers_thz.size(); ++i) {
        if (!(band.centers_thz[i] > band.centers_thz[i - 1])) {
          throw ConfigError(where + ": centers_thz must be strictly ascending");
        }
      }
    }
    if (!(band.symbol_rate_gbd > 0.0)) throw ConfigError(where + ": symbol_rate_gbd must be > 0");
    auto centers = band_centers_thz(band);
    if (b > 0 && centers.front() <= prev_hi) {
      throw ConfigError("config: [band] sections must be ordered by ascending frequency");
    }
    prev_hi = centers.back();
  }

  if (link.span_count < 1) throw ConfigError("link: span_count must be >= 1");
  if (!(link.span_length_km > 0.0)) throw ConfigError("link: span_length_km must be > 0");
  if (!(link.attenuation_db_per_km > 0.0)) {
    throw ConfigError("link: attenuation_db_per_km must be > 0");
  }
  if (!(link.attenuation_bar_db_per_km > 0.0)) {
    throw ConfigError("link: attenuation_bar_db_per_km must be > 0");
  }
  if (link.gamma_per_w_per_km < 0.0) throw ConfigError("link: gamma_per_w_per_km must be >= 0");
  if (link.raman_slope_per_w_per_km_per_thz < 0.0) {
    throw ConfigError("link: raman_slope_per_w_per_km_per_thz must be >= 0");
  }
  if (link.amp_gain_db < 0.0) throw ConfigError("link: amp_gain_db must be >= 0");
  if (link.lumped_loss_db < 0.0) throw ConfigError("link: lumped_loss_db must be >= 0");
  if (link.wss_after_span < 0 || link.wss_after_span > link.span_count) {
    throw ConfigError("link: wss_after_span must lie in [0, span_count]");
  }
  if (link.wss_loss_db < 0.0) throw ConfigError("link: wss_loss_db must be >= 0");
  if (link.coherence_epsilon < 0.0) throw ConfigError("link: coherence_epsilon must be >= 0");

  if (models.empty()) throw ConfigError("models: names must list at least one model");
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (std::size_t j = i + 1; j < models.size(); ++j) {
      if (models[i] == models[j]) {
        throw ConfigError("models: duplicate name '" + models[i] + "'");
      }
    }
  }

  try {
    quadrature.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("quadrature: ") + e.what());
  }
  if (output.directory.empty()) throw ConfigError("output: directory must not be empty");
}

inline FiberParams build_fiber(const LinkSpec& link) {
  FiberParams f;
  f.alpha = attenuation_from_db_per_km(link.attenuation_db_per_km);
  f.alpha_bar = attenuation_from_db_per_km(link.attenuation_bar_db_per_km);
  f.beta2 = link.beta2_ps2_per_km * 1e-27;
  f.beta3 = link.beta3_ps3_per_km * 1e-39;
  f.gamma = link.gamma_per_w_per_km * 1e-3;
  f.cr = link.raman_slope_per_w_per_km_per_thz / (1e3 * 1e12);
  f.length = link.span_length_km * 1e3;
  f.validate();
  return f;
}

inline LinkConfig build_link(const LinkSpec& link) {
  FiberParams fiber = build_fiber(link);
  LinkConfig out;
  out.coherence_epsilon = link.coherence_epsilon;
  out.spans.reserve(static_cast<std::size_t>(link.span_count));
  for (int s = 1; s <= link.span_count; ++s) {
    SpanConfig span;
    span.fiber = fiber;
    span.amp_gain_db = link.amp_gain_db;
    span.amp_nf_db = link.amp_nf_db;
    span.lumped_loss_db = link.lumped_loss_db;
    span.wss = (s == link.wss_after_span);
    span.wss_loss_db = link.wss_loss_db;
    out.spans.push_back(span);
  }
  out.validate();
  return out;
}

// Channel index lists per band, in band order (indices are contiguous).
inline std::vector<std::vector<std::size_t>> band_partition(const ScenarioConfig& config) {
  std::vector<std::vector<std::size_t>> parts;
  std::size_t next = 0;
  for (const BandSpec& band : config.bands) {
    std::size_t n = band_centers_thz(band).size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), next);
    next += n;
    parts.push_back(std::move(idx));
  }
  return parts;
}

// The plan with fixed-power bands at their configured level and
// optimize-power bands at a 0 dBm placeholder (the runner replaces the
// placeholder with the sweep result before simulating).
inline ChannelPlan build_plan(const ScenarioConfig& config) {
  std::vector<double> abs_thz;
  std::vector<double> bandwidth;
  std::vector<double> power;
  for (const BandSpec& band : config.bands) {
    for (double c : band_centers_thz(band)) {
      abs_thz.push_back(c);
      bandwidth.push_back(band.symbol_rate_gbd * 1e9);
      power.push_back(band.optimize_power ? 1e-3 : dbm_to_watt(band.power_dbm));
    }
  }
  // The relative-frequency origin sits mid-spectrum between the outermost
  // channel centers, which keeps the ISRS tilt formulas centered.
  double ref_thz = 0.5 * (abs_thz.front() + abs_thz.back());
  std::vector<Channel> channels(abs_thz.size());
  for (std::size_t i = 0; i < abs_thz.size(); ++i) {
    channels[i] = Channel{i, (abs_thz[i] - ref_thz) * 1e12, bandwidth[i], power[i]};
  }
  return ChannelPlan(std::move(channels), ref_thz * 1e12);
}

enum class ScenarioKind { c_band_48, cl_band_96, random_60 };

// The three bundled loadouts: 48 channels on a 100 GHz grid at 191.4-196.1
// THz; the same plus 48 more at 186.1-190.8 THz; and a seeded random pick of
// 32 of the 48 upper-band slots and 28 of the 48 lower-band slots. All run
// 10 spans of 100 km with a 20.5 dB amplifier and a WSS after span 5.
inline ScenarioConfig generate_scenario(ScenarioKind kind, std::uint64_t seed) {
  BandSpec upper;
  upper.label = "C";
  upper.first_thz = 191.4;
  upper.last_thz = 196.1;
  upper.spacing_ghz = 100.0;

  BandSpec lower;
  lower.label = "L";
  lower.first_thz = 186.1;
  lower.last_thz = 190.8;
  lower.spacing_ghz = 100.0;

  ScenarioConfig config;
  config.seed = seed;
  config.link.wss_after_span = 5;

  switch (kind) {
    case ScenarioKind::c_band_48:
      config.bands = {upper};
      break;
    case ScenarioKind::cl_band_96:
      config.bands = {lower, upper};
      break;
    case ScenarioKind::random_60: {
      // One draw stream: upper-band slots are shuffled first, then the
      // lower-band slots, so the two picks are coupled to the single seed.
      SplitMix64 rng(seed);
      auto perm_upper = shuffled_indices(48, rng);
      auto perm_lower = shuffled_indices(48, rng);
      std::vector<std::size_t> upper_slots(perm_upper.begin(), perm_upper.begin() + 32);
      std::vector<std::size_t> lower_slots(perm_lower.begin(), perm_lower.begin() + 28);
      std::sort(upper_slots.begin(), upper_slots.end());
      std::sort(lower_slots.begin(), lower_slots.end());

      BandSpec lower_pick;
      lower_pick.label = "L";
      for (std::size_t slot : lower_slots) {
        lower_pick.centers_thz.push_back(186.1 + 0.1 * static_cast<double>(slot));
      }
      BandSpec upper_pick;
      upper_pick.label = "C";
      for (std::size_t slot : upper_slots) {
        upper_pick.centers_thz.push_back(191.4 + 0.1 * static_cast<double>(slot));
      }
      config.bands = {lower_pick, upper_pick};
      break;
    }
  }
  config.validate();
  return config;
}

namespace detail {

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

inline std::string trim(const std::string& s) {
  std::size_t lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return "";
  std::size_t hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline double parse_double(const std::string& s, int line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("line " + std::to_string(line_no) + ": '" + s + "' is not a number");
  }
  return v;
}

inline long long parse_int(const std::string& s, int line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("line " + std::to_string(line_no) + ": '" + s + "' is not an integer");
  }
  return v;
}

inline std::uint64_t parse_uint64(const std::string& s, int line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("line " + std::to_string(line_no) + ": '" + s +
                      "' is not an unsigned integer");
  }
  return v;
}

}  // namespace detail

inline ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig config;
  config.bands.clear();
  config.models.clear();

  enum class Section { top, band, link, models, quadrature, output };
  Section section = Section::top;
  bool saw_link = false, saw_models = false, saw_quadrature = false, saw_output = false;
  std::vector<std::string> seen_keys;

  auto mark_key = [&](const std::string& key, int line_no) {
    if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    seen_keys.push_back(key);
  };

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string raw = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = detail::trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
      }
      std::string name = detail::trim(line.substr(1, line.size() - 2));
      seen_keys.clear();
      if (name == "band") {
        section = Section::band;
        config.bands.emplace_back();
        config.bands.back().symbol_rate_gbd = 64.0;
      } else if (name == "link") {
        if (saw_link) throw ConfigError("line " + std::to_string(line_no) + ": duplicate [link]");
        saw_link = true;
        section = Section::link;
      } else if (name == "models") {
        if (saw_models) {
          throw ConfigError("line " + std::to_string(line_no) + ": duplicate [models]");
        }
        saw_models = true;
        section = Section::models;
      } else if (name == "quadrature") {
        if (saw_quadrature) {
          throw ConfigError("line " + std::to_string(line_no) + ": duplicate [quadrature]");
        }
        saw_quadrature = true;
        section = Section::quadrature;
      } else if (name == "output") {
        if (saw_output) {
          throw ConfigError("line " + std::to_string(line_no) + ": duplicate [output]");
        }
        saw_output = true;
        section = Section::output;
      } else {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" + name + "]");
      }
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    mark_key(key, line_no);

    switch (section) {
      case Section::top:
        if (key == "seed") {
          config.seed = detail::parse_uint64(value, line_no);
        } else {
          throw ConfigError("line " + std::to_string(line_no) + ": unknown top-level key '" +
                            key + "'");
        }
        break;
      case Section::band: {
        BandSpec& band = config.bands.back();
        if (key == "label") {
          band.label = value;
        } else if (key == "first_thz") {
          band.first_thz = detail::parse_double(value, line_no);
        } else if (key == "last_thz") {
          band.last_thz = detail::parse_double(value, line_no);
        } else if (key == "spacing_ghz") {
          band.spacing_ghz = detail::parse_double(value, line_no);
        } else if (key == "centers_thz") {
          for (const std::string& tok : detail::split_ws(value)) {
            band.centers_thz.push_back(detail::parse_double(tok, line_no));
          }
        } else if (key == "symbol_rate_gbd") {
          band.symbol_rate_gbd = detail::parse_double(value, line_no);
        } else if (key == "power_dbm") {
          if (value == "optimize") {
            band.optimize_power = true;
          } else {
            band.optimize_power = false;
            band.power_dbm = detail::parse_double(value, line_no);
          }
        } else {
          throw ConfigError("line " + std::to_string(line_no) + ": unknown [band] key '" + key +
                            "'");
        }
        break;
      }
      case Section::link: {
        LinkSpec& link = config.link;
        if (key == "span_count") {
          link.span_count = static_cast<int>(detail::parse_int(value, line_no));
        } else if (key == "span_length_km") {
          link.span_length_km = detail::parse_double(value, line_no);
        } else if (key == "attenuation_db_per_km") {
          link.attenuation_db_per_km = detail::parse_double(value, line_no);
        } else if (key == "attenuation_bar_db_per_km") {
          link.attenuation_bar_db_per_km = detail::parse_double(value, line_no);
        } else if (key == "beta2_ps2_per_km") {
          link.beta2_ps2_per_km = detail::parse_double(value, line_no);
        } else if (key == "beta3_ps3_per_km") {
          link.beta3_ps3_per_km = detail::parse_double(value, line_no);
        } else if (key == "gamma_per_w_per_km") {
          link.gamma_per_w_per_km = detail::parse_double(value, line_no);
        } else if (key == "raman_slope_per_w_per_km_per_thz") {
          link.raman_slope_per_w_per_km_per_thz = detail::parse_double(value, line_no);
        } else if (key == "amp_gain_db") {
          link.amp_gain_db = detail::parse_double(value, line_no);
        } else if (key == "amp_nf_db") {
          link.amp_nf_db = detail::parse_double(value, line_no);
        } else if (key == "lumped_loss_db") {
          link.lumped_loss_db = detail::parse_double(value, line_no);
        } else if (key == "wss_after_span") {
          link.wss_after_span = static_cast<int>(detail::parse_int(value, line_no));
        } else if (key == "wss_loss_db") {
          link.wss_loss_db = detail::parse_double(value, line_no);
        } else if (key == "coherence_epsilon") {
          link.coherence_epsilon = detail::parse_double(value, line_no);
        } else {
          throw ConfigError("line " + std::to_string(line_no) + ": unknown [link] key '" + key +
                            "'");
        }
        break;
      }
      case Section::models:
        if (key == "names") {
          config.models = detail::split_ws(value);
        } else {
          throw ConfigError("line " + std::to_string(line_no) + ": unknown [models] key '" +
                            key + "'");
        }
        break;
      case Section::quadrature:
        if (key == "zeta_points") {
          config.quadrature.zeta_points = static_cast<int>(detail::parse_int(value, line_no));
        } else if (key == "f_grid_points") {
          config.quadrature.f_grid_points = static_cast<int>(detail::parse_int(value, line_no));
        } else if (key == "grid_strategy") {
          if (value == "uniform") {
            config.quadrature.grid_strategy = GridStrategy::uniform;
          } else if (value == "hyperbolic_refined") {
            config.quadrature.grid_strategy = GridStrategy::hyperbolic_refined;
          } else {
            throw ConfigError("line " + std::to_string(line_no) + ": grid_strategy must be " +
                              "'uniform' or 'hyperbolic_refined'");
          }
        } else if (key == "rel_tol") {
          config.quadrature.rel_tol = detail::parse_double(value, line_no);
        } else {
          throw ConfigError("line " + std::to_string(line_no) + ": unknown [quadrature] key '" +
                            key + "'");
        }
        break;
      case Section::output:
        if (key == "directory") {
          config.output.directory = value;
        } else {
          throw ConfigError("line " + std::to_string(line_no) + ": unknown [output] key '" +
                            key + "'");
        }
        break;
    }
  }

  if (!saw_models) config.models = {"closed_form", "integral"};
  config.validate();
  return config;
}

// Canonical form: every key written explicitly, floats at %.15g, bands in
// file order. parse(serialize(c)) reproduces c up to float formatting.
inline std::string serialize_config(const ScenarioConfig& config) {
  std::string out;
  out += "seed = " + std::to_string(config.seed) + "\n";
  for (const BandSpec& band : config.bands) {
    out += "\n[band]\n";
    if (!band.label.empty()) out += "label = " + band.label + "\n";
    if (band.centers_thz.empty()) {
      out += "first_thz = " + detail::fmt_double(band.first_thz) + "\n";
      out += "last_thz = " + detail::fmt_double(band.last_thz) + "\n";
      out += "spacing_ghz = " + detail::fmt_double(band.spacing_ghz) + "\n";
    } else {
      out += "centers_thz =";
      for (double c : band.centers_thz) out += " " + detail::fmt_double(c);
      out += "\n";
    }
    out += "symbol_rate_gbd = " + detail::fmt_double(band.symbol_rate_gbd) + "\n";
    out += "power_dbm = ";
    out += band.optimize_power ? "optimize" : detail::fmt_double(band.power_dbm);
    out += "\n";
  }
  const LinkSpec& link = config.link;
  out += "\n[link]\n";
  out += "span_count = " + std::to_string(link.span_count) + "\n";
  out += "span_length_km = " + detail::fmt_double(link.span_length_km) + "\n";
  out += "attenuation_db_per_km = " + detail::fmt_double(link.attenuation_db_per_km) + "\n";
  out += "attenuation_bar_db_per_km = " + detail::fmt_double(link.attenuation_bar_db_per_km) +
         "\n";
  out += "beta2_ps2_per_km = " + detail::fmt_double(link.beta2_ps2_per_km) + "\n";
  out += "beta3_ps3_per_km = " + detail::fmt_double(link.beta3_ps3_per_km) + "\n";
  out += "gamma_per_w_per_km = " + detail::fmt_double(link.gamma_per_w_per_km) + "\n";
  out += "raman_slope_per_w_per_km_per_thz = " +
         detail::fmt_double(link.raman_slope_per_w_per_km_per_thz) + "\n";
  out += "amp_gain_db = " + detail::fmt_double(link.amp_gain_db) + "\n";
  out += "amp_nf_db = " + detail::fmt_double(link.amp_nf_db) + "\n";
  out += "lumped_loss_db = " + detail::fmt_double(link.lumped_loss_db) + "\n";
  out += "wss_after_span = " + std::to_string(link.wss_after_span) + "\n";
  out += "wss_loss_db = " + detail::fmt_double(link.wss_loss_db) + "\n";
  out += "coherence_epsilon = " + detail::fmt_double(link.coherence_epsilon) + "\n";
  out += "\n[models]\nnames =";
  for (const std::string& m : config.models) out += " " + m;
  out += "\n";
  out += "\n[quadrature]\n";
  out += "zeta_points = " + std::to_string(config.quadrature.zeta_points) + "\n";
  out += "f_grid_points = " + std::to_string(config.quadrature.f_grid_points) + "\n";
  out += "grid_strategy = ";
  out += config.quadrature.grid_strategy == GridStrategy::uniform ? "uniform"
                                                                  : "hyperbolic_refined";
  out += "\n";
  out += "rel_tol = " + detail::fmt_double(config.quadrature.rel_tol) + "\n";
  out += "\n[output]\ndirectory = " + config.output.directory + "\n";
  return out;
}

}  // namespace qot

#endif  // QOT_SCENARIO_HPP

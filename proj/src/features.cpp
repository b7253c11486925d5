#include "resona/features.hpp"

#include <algorithm>
#include <cmath>

#include "resona/errors.hpp"

namespace resona {
namespace {

constexpr double kSnrCapDb = 99.0;
constexpr double kMassFloor = 1e-6;

double frame_mean_power(std::span<const double> frame) {
  double acc = 0.0;
  for (double v : frame) acc += v * v;
  return acc / static_cast<double>(frame.size());
}

// Min-max map to [0,1]; a constant column has no spread to encode, so it
// collapses to the quadrant center.
double normalize(double v, double lo, double hi) {
  if (hi <= lo) return 0.5;
  return (v - lo) / (hi - lo);
}

}  // namespace

TimeFeatures time_features(const Signal& signal, double event_threshold) {
  if (signal.samples.empty()) throw InvalidArgument("time_features: empty signal");
  if (!(signal.sample_rate_hz > 0.0))
    throw InvalidArgument("time_features: sample rate must be positive");
  if (!(event_threshold > 0.0 && event_threshold < 1.0))
    throw InvalidArgument("time_features: event_threshold must lie in (0, 1)");

  TimeFeatures out;
  out.duration_s = signal.duration_s();

  double total_power = frame_mean_power(signal.samples);
  out.rms_energy = std::sqrt(total_power);

  const std::size_t frame_len = std::max<std::size_t>(
      1, static_cast<std::size_t>(signal.sample_rate_hz * 0.010));
  std::vector<std::span<const double>> frames =
      frame_signal(signal, frame_len, frame_len);
  if (frames.empty()) frames.emplace_back(signal.samples);

  std::vector<double> powers(frames.size());
  double max_rms = 0.0;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    powers[i] = frame_mean_power(frames[i]);
    max_rms = std::max(max_rms, std::sqrt(powers[i]));
  }

  const double threshold_rms = event_threshold * max_rms;
  double event_power = 0.0, rest_power = 0.0;
  std::size_t event_frames = 0, rest_frames = 0;
  bool in_run = false;
  for (double p : powers) {
    const bool loud = std::sqrt(p) > threshold_rms;
    if (loud) {
      if (!in_run) ++out.event_count;
      event_power += p;
      ++event_frames;
    } else {
      rest_power += p;
      ++rest_frames;
    }
    in_run = loud;
  }

  if (event_frames == 0) {
    out.snr_db = 0.0;
  } else if (rest_frames == 0 || rest_power == 0.0) {
    out.snr_db = kSnrCapDb;
  } else {
    out.snr_db = 10.0 * std::log10((event_power / event_frames) /
                                   (rest_power / rest_frames));
    out.snr_db = std::min(out.snr_db, kSnrCapDb);
  }
  return out;
}

SpectralFeatures spectral_features(const Spectrum& spectrum) {
  if (spectrum.bins.empty())
    throw InvalidArgument("spectral_features: empty spectrum");

  const std::size_t half = spectrum.source_length / 2;
  double total = 0.0, weighted = 0.0;
  for (std::size_t k = 0; k <= half && k < spectrum.bins.size(); ++k) {
    const double mag = std::abs(spectrum.bins[k]);
    const double fk = spectrum.bin_width_hz * static_cast<double>(k);
    total += mag;
    weighted += fk * mag;
  }
  if (total == 0.0)
    throw DegenerateInput("spectral_features: all-zero spectrum has no centroid");

  SpectralFeatures out;
  out.centroid_hz = weighted / total;

  double spread = 0.0;
  for (std::size_t k = 0; k <= half && k < spectrum.bins.size(); ++k) {
    const double mag = std::abs(spectrum.bins[k]);
    const double fk = spectrum.bin_width_hz * static_cast<double>(k);
    spread += (fk - out.centroid_hz) * (fk - out.centroid_hz) * mag;
  }
  out.bandwidth_hz = std::sqrt(spread / total);
  return out;
}

std::vector<Body> embed(std::span<const FeatureRecord> records) {
  if (records.empty()) throw InvalidArgument("embed: no feature records");

  double cmin = records[0].spectral.centroid_hz, cmax = cmin;
  double bmin = records[0].spectral.bandwidth_hz, bmax = bmin;
  double max_rms = 0.0;
  for (const FeatureRecord& r : records) {
    cmin = std::min(cmin, r.spectral.centroid_hz);
    cmax = std::max(cmax, r.spectral.centroid_hz);
    bmin = std::min(bmin, r.spectral.bandwidth_hz);
    bmax = std::max(bmax, r.spectral.bandwidth_hz);
    max_rms = std::max(max_rms, r.time.rms_energy);
  }
  if (max_rms <= 0.0)
    throw InvalidArgument("embed: every record has zero rms_energy");

  std::vector<Body> bodies;
  bodies.reserve(records.size());
  for (const FeatureRecord& r : records) {
    Body b;
    b.id = r.id;
    b.position.x = normalize(r.spectral.centroid_hz, cmin, cmax);
    b.position.y = normalize(r.spectral.bandwidth_hz, bmin, bmax);
    b.mass = std::max(kMassFloor, r.time.rms_energy / max_rms);
    bodies.push_back(b);
  }
  return bodies;
}

}  // namespace resona

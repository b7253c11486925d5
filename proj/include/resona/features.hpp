#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "resona/signal.hpp"
#include "resona/vec2.hpp"

namespace resona {

struct TimeFeatures {
  double duration_s = 0.0;
  double snr_db = 0.0;
  std::size_t event_count = 0;
  double rms_energy = 0.0;
};

struct SpectralFeatures {
  double centroid_hz = 0.0;
  double bandwidth_hz = 0.0;
};

// A signal reduced to a point in the 2D feature plane: position in [0,1]^2,
// positive mass, and accumulators the interaction engines write into.
struct Body {
  int id = 0;
  Vec2 position;
  double mass = 1.0;
  Vec2 force;
  double amplitude = 0.0;

  void reset_accumulators() {
    force = Vec2{};
    amplitude = 0.0;
  }
};

// One signal's features, keyed by the caller's id (file index, row number).
struct FeatureRecord {
  int id = 0;
  SpectralFeatures spectral;
  TimeFeatures time;
};

// Time-domain features over non-overlapping 10 ms frames.
//
// Event detection is a relative-threshold run-length rule: a frame is "loud"
// when its RMS exceeds event_threshold * (max frame RMS over the signal), and
// event_count is the number of maximal runs of consecutive loud frames.
// snr_db = 10 log10(mean loud-frame power / mean quiet-frame power), capped
// at 99.0 dB when there is no quiet frame (or its power is zero), and 0.0
// when there is no loud frame. A signal shorter than one 10 ms frame is
// treated as a single frame. event_threshold must lie in (0, 1).
TimeFeatures time_features(const Signal& signal, double event_threshold);

// Magnitude-weighted mean frequency (centroid) and standard deviation about
// it (bandwidth), over bins 0..N/2. Throws DegenerateInput when every bin in
// that range has zero magnitude.
SpectralFeatures spectral_features(const Spectrum& spectrum);

// Place each record as a Body: x = min-max normalized centroid, y = min-max
// normalized bandwidth (a constant column maps to 0.5), mass = rms_energy
// relative to the collection maximum, floored at 1e-6. Requires at least one
// record and at least one positive rms_energy.
std::vector<Body> embed(std::span<const FeatureRecord> records);

}  // namespace resona

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "resona/allpairs.hpp"
#include "resona/features.hpp"
#include "resona/regression.hpp"

// Plain CSV serialization. Doubles are written with 17 significant digits so
// every file round-trips to the exact same values.
namespace resona::csv {

// Header: id,x,y,mass
void write_bodies(std::span<const Body> bodies, std::ostream& os);
std::vector<Body> read_bodies(std::istream& is);

// Header: id,fx,fy,amplitude. The evaluation counter is run telemetry and is
// not serialized.
void write_results(const InteractionResult& result, std::ostream& os);
InteractionResult read_results(std::istream& is);

// Header: id,centroid_hz,bandwidth_hz,duration_s,snr_db,event_count,rms_energy
void write_features(std::span<const FeatureRecord> records, std::ostream& os);
std::vector<FeatureRecord> read_features(std::istream& is);

// Header: x0..x{N-1},y0..y{P-1}; one example per row, outputs after inputs.
void write_dataset(const DataSet& data, std::ostream& os);
DataSet read_dataset(std::istream& is, std::size_t n_outputs);

// Header: y0..y{P-1}; one row per input feature. Only the weight matrix is
// stored; the reader leaves lambda at 0.
void write_weights(const RidgeModel& model, std::ostream& os);
RidgeModel read_weights(std::istream& is);

// File wrappers; opening failures raise IoError.
void write_file(const std::string& path, void (*writer)(std::ostream&));

template <typename Fn>
void with_output_file(const std::string& path, Fn&& fn);

template <typename Fn>
auto with_input_file(const std::string& path, Fn&& fn);

}  // namespace resona::csv

#include "resona/csv_inl.hpp"

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace resona {

// Uniformly sampled real-valued waveform, full scale +/-1.0.
struct Signal {
  std::vector<double> samples;
  double sample_rate_hz = 1.0;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

enum class WindowKind { Rectangular, Hamming, Hann };

struct WindowSpec {
  WindowKind kind = WindowKind::Rectangular;
  std::size_t length = 0;
};

// Complex bins of one analysis frame. The transform is forward-unnormalized:
// bins[k] = sum_n x[n] * exp(-i 2 pi k n / N), all N bins kept, so for real
// input bin k and bin N-k are conjugates.
struct Spectrum {
  std::vector<std::complex<double>> bins;
  double bin_width_hz = 0.0;
  std::size_t source_length = 0;

  double nyquist_hz() const {
    return bin_width_hz * static_cast<double>(source_length) / 2.0;
  }
};

// Time-ordered sequence of spectra at hop-spaced frame offsets.
struct Spectrogram {
  std::vector<Spectrum> frames;
  std::size_t hop = 0;
  WindowSpec window;
};

// Window coefficients for the given spec. The symmetric convention is used:
// Hamming is 0.54 - 0.46 cos(2 pi n / (L-1)) and Hann is
// 0.5 (1 - cos(2 pi n / (L-1))), so both taper to their endpoint values at
// n = 0 and n = L-1. A length-1 window is the single coefficient 1 for every
// kind. Throws InvalidArgument for length 0.
std::vector<double> make_window(const WindowSpec& spec);

// Contiguous full-length views of `signal.samples` at offsets 0, hop, 2*hop,
// ... Frames that would run past the end are dropped, so the count is
// floor((len - frame_len) / hop) + 1 when len >= frame_len and 0 otherwise.
// The views alias the signal's storage.
std::vector<std::span<const double>> frame_signal(const Signal& signal,
                                                  std::size_t frame_len,
                                                  std::size_t hop);

// Discrete Fourier transform of one real frame (see Spectrum for the
// convention). `sample_rate_hz` only scales bin_width_hz; pass 1.0 when the
// frame has no physical rate. Power-of-two lengths take a radix-2 fast path;
// any other length falls back to the direct summation, and both agree to
// better than 1e-9 relative. Throws InvalidArgument on empty or non-finite
// input.
Spectrum dft(std::span<const double> frame, double sample_rate_hz = 1.0);

// samples[t] = amplitude * sin(2 pi f0 t / fs). f0 must lie strictly between
// 0 and the Nyquist rate.
Signal synth_sinusoid(double amplitude, double f0_hz, double sample_rate_hz,
                      std::size_t n);

// Short-time Fourier transform: dft(window * frame) per frame_signal frame.
// A window longer than the signal yields an empty spectrogram; a zero hop
// throws InvalidArgument.
Spectrogram stft(const Signal& signal, const WindowSpec& window,
                 std::size_t hop);

}  // namespace resona

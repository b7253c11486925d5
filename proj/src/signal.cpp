#include "resona/signal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "resona/errors.hpp"

namespace resona {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_finite(std::span<const double> frame) {
  for (double v : frame) {
    if (!std::isfinite(v)) throw InvalidArgument("dft: non-finite input sample");
  }
}

// In-place iterative radix-2 transform, N a power of two.
void fft_radix2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -kTwoPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Direct O(N^2) summation with a precomputed twiddle table. The table keeps
// the angles exact multiples of 2 pi / N instead of accumulating k*n phase.
std::vector<std::complex<double>> dft_direct(std::span<const double> frame) {
  const std::size_t n = frame.size();
  std::vector<std::complex<double>> twiddle(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double ang = -kTwoPi * static_cast<double>(m) / static_cast<double>(n);
    twiddle[m] = {std::cos(ang), std::sin(ang)};
  }
  std::vector<std::complex<double>> bins(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    std::size_t idx = 0;
    for (std::size_t t = 0; t < n; ++t) {
      acc += frame[t] * twiddle[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    bins[k] = acc;
  }
  return bins;
}

}  // namespace

std::vector<double> make_window(const WindowSpec& spec) {
  if (spec.length == 0) throw InvalidArgument("make_window: zero length");
  std::vector<double> w(spec.length, 1.0);
  if (spec.length == 1 || spec.kind == WindowKind::Rectangular) return w;
  const double denom = static_cast<double>(spec.length - 1);
  for (std::size_t i = 0; i < spec.length; ++i) {
    const double c = std::cos(kTwoPi * static_cast<double>(i) / denom);
    switch (spec.kind) {
      case WindowKind::Hamming:
        w[i] = 0.54 - 0.46 * c;
        break;
      case WindowKind::Hann:
        w[i] = 0.5 * (1.0 - c);
        break;
      case WindowKind::Rectangular:
        break;
    }
  }
  return w;
}

std::vector<std::span<const double>> frame_signal(const Signal& signal,
                                                  std::size_t frame_len,
                                                  std::size_t hop) {
  if (frame_len == 0) throw InvalidArgument("frame_signal: zero frame length");
  if (hop == 0) throw InvalidArgument("frame_signal: zero hop");
  std::vector<std::span<const double>> frames;
  const std::size_t len = signal.samples.size();
  if (len < frame_len) return frames;
  frames.reserve((len - frame_len) / hop + 1);
  for (std::size_t off = 0; off + frame_len <= len; off += hop) {
    frames.emplace_back(signal.samples.data() + off, frame_len);
  }
  return frames;
}

Spectrum dft(std::span<const double> frame, double sample_rate_hz) {
  if (frame.empty()) throw InvalidArgument("dft: empty frame");
  if (!(sample_rate_hz > 0.0))
    throw InvalidArgument("dft: sample rate must be positive");
  check_finite(frame);

  const std::size_t n = frame.size();
  Spectrum spec;
  spec.bin_width_hz = sample_rate_hz / static_cast<double>(n);
  spec.source_length = n;
  if (std::has_single_bit(n)) {
    spec.bins.assign(frame.begin(), frame.end());
    fft_radix2(spec.bins);
  } else {
    spec.bins = dft_direct(frame);
  }
  return spec;
}

Signal synth_sinusoid(double amplitude, double f0_hz, double sample_rate_hz,
                      std::size_t n) {
  if (n == 0) throw InvalidArgument("synth_sinusoid: zero length");
  if (!(sample_rate_hz > 0.0))
    throw InvalidArgument("synth_sinusoid: sample rate must be positive");
  if (!(f0_hz > 0.0) || f0_hz >= sample_rate_hz / 2.0)
    throw InvalidArgument("synth_sinusoid: f0 must lie in (0, fs/2)");
  Signal s;
  s.sample_rate_hz = sample_rate_hz;
  s.samples.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    s.samples[t] =
        amplitude * std::sin(kTwoPi * f0_hz * static_cast<double>(t) / sample_rate_hz);
  }
  return s;
}

Spectrogram stft(const Signal& signal, const WindowSpec& window,
                 std::size_t hop) {
  if (hop == 0) throw InvalidArgument("stft: zero hop");
  const std::vector<double> coeffs = make_window(window);
  Spectrogram gram;
  gram.hop = hop;
  gram.window = window;

  std::vector<double> buf(window.length);
  for (std::span<const double> frame : frame_signal(signal, window.length, hop)) {
    for (std::size_t i = 0; i < window.length; ++i) buf[i] = frame[i] * coeffs[i];
    gram.frames.push_back(dft(buf, signal.sample_rate_hz));
  }
  return gram;
}

}  // namespace resona

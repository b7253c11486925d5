#include "resona/allpairs.hpp"

#include <atomic>
#include <cmath>

#include "resona/errors.hpp"
#include "resona/parallel.hpp"

namespace resona {

void KernelConfig::validate() const {
  if (!(g > 0.0)) throw InvalidArgument("kernel: coupling g must be positive");
  if (!(eps_soft > 0.0))
    throw InvalidArgument("kernel: softening eps_soft must be positive");
  if (theta < 0.0) throw InvalidArgument("kernel: theta must be nonnegative");
}

double calculate_similarity(const Body& i, const Body& j, const KernelConfig& k) {
  const double d2 = (j.position - i.position).norm2();
  return k.g * i.mass * j.mass / std::sqrt(d2 + k.eps_soft * k.eps_soft);
}

PairContribution adjust_amplitude(const Body& i, const Body& j,
                                  double similarity, const KernelConfig& k) {
  const Vec2 delta = j.position - i.position;
  const double soft2 = delta.norm2() + k.eps_soft * k.eps_soft;
  const double scale = k.g * i.mass * j.mass / (soft2 * std::sqrt(soft2));
  return {similarity, delta * scale};
}

InteractionResult all_pairs(std::span<const Body> bodies, const KernelConfig& k,
                            unsigned workers) {
  if (bodies.empty()) throw InvalidArgument("all_pairs: empty body set");
  k.validate();

  const std::size_t n = bodies.size();
  InteractionResult result;
  result.bodies.resize(n);

  std::atomic<std::uint64_t> evaluations{0};
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned) {
    std::uint64_t local_evals = 0;
    for (std::size_t i = begin; i < end; ++i) {
      BodyResult& slot = result.bodies[i];
      slot.id = bodies[i].id;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double similarity = calculate_similarity(bodies[i], bodies[j], k);
        const PairContribution c =
            adjust_amplitude(bodies[i], bodies[j], similarity, k);
        slot.amplitude += c.d_amplitude;
        slot.force += c.d_force;
        ++local_evals;
      }
    }
    evaluations.fetch_add(local_evals, std::memory_order_relaxed);
  });

  result.evaluations = evaluations.load();
  return result;
}

}  // namespace resona

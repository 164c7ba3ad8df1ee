#ifndef RFADV_CHANNEL_HPP
#define RFADV_CHANNEL_HPP

#include <cstdint>

#include "rfadv/rng.hpp"
#include "rfadv/types.hpp"

namespace rfadv::channel {

struct ChannelConfig {
  double snr_db = 30.0;
  double phase_offset_rad = 0.0;   // [-pi, pi]
  long time_shift_samples = 0;     // [0, L)
  uint64_t seed = 0;
};

// Adds circularly symmetric complex Gaussian noise at the requested SNR,
// referenced to the frame's measured power at the point of injection.
// The output is not renormalized. snr_db = +inf is the identity; NaN is
// rejected.
IQFrame add_awgn(const IQFrame& frame, double snr_db, Rng& rng);

// Multiplies every sample by e^{j theta}.
IQFrame phase_rotate(const IQFrame& frame, double theta);

// Rotates samples by k positions (k taken mod L, negative k allowed).
IQFrame circular_shift(const IQFrame& frame, long k);

// Post-adversarial noise level, 20*log10(sigma_a / sigma_gwn) dB. Both
// arguments are standard deviations and must be positive.
double pan_db(double sigma_a, double sigma_gwn);

}  // namespace rfadv::channel

#endif

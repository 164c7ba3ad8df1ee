#ifndef RFADV_DSP_HPP
#define RFADV_DSP_HPP

#include "rfadv/types.hpp"

namespace rfadv::dsp {

// In-place radix-2 FFT / inverse FFT. Length must be a power of two.
void fft(std::vector<cplx>& a, bool inverse);

// Circular cross-correlation: out[k] = sum_n rx[n] * conj(ref[(n - k) mod L]).
// FFT path for power-of-two lengths, direct sum otherwise.
std::vector<cplx> circular_correlate(const IQFrame& rx, const IQFrame& ref);

}  // namespace rfadv::dsp

#endif

#ifndef RFADV_TYPES_HPP
#define RFADV_TYPES_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace rfadv {

using cplx = std::complex<double>;

// Complex baseband frame. Frames stored in a dataset are normalized to unit
// average power; the same vector doubles as the L x 2 real (I, Q) view used
// by the classifier and the attack code.
using IQFrame = std::vector<cplx>;

// One bit per entry, values 0 or 1.
using BitVec = std::vector<uint8_t>;

// Mean of |sample|^2 over the frame.
double measure_power(const IQFrame& frame);

// l2 norm over the L x 2 real view (== complex l2 norm).
double l2_norm(const IQFrame& frame);

// Scale the frame in place to unit average power. No-op on the zero frame.
void normalize_power(IQFrame& frame);

}  // namespace rfadv

#endif

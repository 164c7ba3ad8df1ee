#ifndef RFADV_RECEIVER_HPP
#define RFADV_RECEIVER_HPP

#include <string>
#include <vector>

#include "rfadv/modem.hpp"
#include "rfadv/types.hpp"

namespace rfadv::receiver {

struct SyncEstimate {
  long timing_offset = 0;  // [0, L)
  double phase = 0.0;      // radians
  double amplitude = 1.0;  // > 0
  double peak_correlation = 0.0;
};

// Circular cross-correlation of rx against the known transmitted frame. The
// argmax bin gives the timing offset; the complex peak value gives the phase
// (its argument) and the amplitude (|peak| / ||tx_ref||^2).
SyncEstimate correlate_sync(const IQFrame& tx_ref, const IQFrame& rx);

// Un-shifts, de-rotates, and rescales rx back to the reference frame.
IQFrame equalize(const IQFrame& rx, const SyncEstimate& est);

struct BerEntry {
  std::string scheme;
  long bits_compared = 0;
  long bit_errors = 0;
  double ber = 0.0;
};

struct BerReport {
  std::vector<BerEntry> per_scheme;
  // Bit-weighted mean BER.
  double aggregate() const;
};

BerEntry measure_ber(const BitVec& tx_bits, const BitVec& rx_bits,
                     const std::string& scheme_name = "");

// correlate_sync -> equalize -> demodulate_symbols -> measure_ber.
BerEntry decode_chain(const IQFrame& tx_frame, const BitVec& tx_bits,
                      const IQFrame& rx_frame, const modem::ModScheme& scheme,
                      const modem::PulseShape& shape);

}  // namespace rfadv::receiver

#endif

#ifndef RFADV_MODEM_HPP
#define RFADV_MODEM_HPP

#include <string>
#include <vector>

#include "rfadv/types.hpp"

namespace rfadv::modem {

enum class Family { PSK, APSK, QAM, FSK };

struct ModScheme {
  Family family;
  int order;  // power of two, 2..128

  int bits_per_symbol() const;
  std::string name() const;  // "bpsk", "qpsk", "16apsk", ...

  bool operator==(const ModScheme&) const = default;
};

// The 16 supported (family, order) pairs, in dataset class-index order.
const std::vector<ModScheme>& all_schemes();

bool is_supported(const ModScheme& scheme);

// Parse "bpsk", "qfsk", "64qam", ... Throws on unknown names.
ModScheme scheme_from_name(const std::string& name);

// Symbol alphabet with unit mean power and one bit pattern per point.
// PSK and square QAM are Gray-labeled; APSK uses Gray-coded indices over a
// ring-major enumeration; FSK points stand in for tone indices.
struct Constellation {
  std::vector<cplx> points;
  std::vector<uint32_t> bit_labels;  // bit_labels[i] labels points[i]
  int bits_per_symbol = 0;
};

Constellation build_constellation(const ModScheme& scheme);

// Root-raised-cosine shaping. Tap count = span_symbols * sps + 1, taps are
// symmetric and energy-normalized (sum of squares = 1).
struct PulseShape {
  double rolloff = 0.35;
  int span_symbols = 8;
  int sps = 4;
};

std::vector<double> rrc_taps(const PulseShape& shape);

// Baseband tone frequencies (cycles/sample) for M-ary FSK at a given sps.
// Spacing is one symbol rate while all tones fit below Nyquist (M <= sps),
// otherwise the M tones uniformly fill the band.
std::vector<double> fsk_tone_freqs(int order, int sps);

// Number of symbols whose bits survive the frame crop. Linear schemes lose
// span_symbols to the filter transient; FSK frames carry a full frame_len/sps.
int payload_symbols(const ModScheme& scheme, const PulseShape& shape, int frame_len);
int payload_bits(const ModScheme& scheme, const PulseShape& shape, int frame_len);

// bits -> unit-power frame of length frame_len. Bit count must equal
// payload_bits(...). PSK/APSK/QAM are RRC-shaped at shape.sps; FSK is a
// continuous-phase tone sequence and skips the filter.
IQFrame modulate(const BitVec& bits, const ModScheme& scheme, const PulseShape& shape,
                 int frame_len);

// Matched filter + symbol-rate sampling + minimum-distance decision (tone
// energy comparison for FSK). Expects a timing- and phase-aligned frame;
// recovers the payload_bits(...) bits of the surviving symbols.
BitVec demodulate_symbols(const IQFrame& frame, const ModScheme& scheme,
                          const PulseShape& shape);

}  // namespace rfadv::modem

#endif

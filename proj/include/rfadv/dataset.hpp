#ifndef RFADV_DATASET_HPP
#define RFADV_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rfadv/modem.hpp"
#include "rfadv/types.hpp"

namespace rfadv::dataset {

// Labeled frames with their ground-truth payload bits. The class index of a
// frame is its scheme's position in the scheme table.
struct Dataset {
  int frame_len = 1024;
  std::vector<modem::ModScheme> schemes;  // class index -> scheme
  modem::PulseShape shape;
  std::vector<int> labels;
  std::vector<BitVec> payloads;
  std::vector<IQFrame> frames;

  size_t size() const { return frames.size(); }
  int num_classes() const { return static_cast<int>(schemes.size()); }
  // Indices of all records with the given label.
  std::vector<size_t> indices_of(int label) const;
};

struct GenConfig {
  std::vector<modem::ModScheme> schemes = modem::all_schemes();
  int frames_per_class = 250;
  int frame_len = 1024;
  modem::PulseShape shape;
  uint64_t seed = 1;
};

// Deterministic under seed: frame i of class c draws its payload from a seed
// derived from (seed, c, i).
Dataset generate(const GenConfig& cfg);

// "RFADVD1" file: header (frame_len, num_classes, scheme table, sps, rolloff),
// then per record the label, payload bit count, packed payload bits and the
// frame as interleaved little-endian float32 I/Q pairs.
void save(const Dataset& ds, const std::string& path);
Dataset load(const std::string& path);

}  // namespace rfadv::dataset

#endif

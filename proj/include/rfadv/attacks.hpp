#ifndef RFADV_ATTACKS_HPP
#define RFADV_ATTACKS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rfadv/neural.hpp"
#include "rfadv/rng.hpp"
#include "rfadv/types.hpp"

namespace rfadv::attacks {

struct AttackConfig {
  double epsilon = 8.0;  // l2 budget over the L x 2 real view
  int steps = 50;
  double step_size = 0.05;
  std::optional<int> targeted;  // target class t for targeted variants
  uint64_t seed = 0;

  // Universal crafting knobs.
  int craft_samples = 512;   // training samples visited per epoch (cap)
  int craft_epochs = 5;
  int inner_steps = 10;      // short PGD inside the universal loop
  int val_slice = 128;       // frames used for the stopping check
  double fool_target = 0.8;  // stop once validation fooling rate reaches this
  int min_class_count = 64;  // per-class floor for CUAA crafting
};

enum class PertKind : uint8_t { PerSample = 0, Universal = 1, PerClass = 2 };

std::string kind_name(PertKind kind);

// Additive adversarial vectors keyed by sample id, the single universal
// slot 0, or class index. Every stored vector satisfies ||r||_2 <= epsilon_used.
struct Perturbation {
  PertKind kind = PertKind::Universal;
  std::map<int, IQFrame> vectors;
  double epsilon_used = 0.0;
  bool warning = false;  // crafting stopped short of the fooling target
};

// r unchanged inside the ball, radially rescaled onto it outside. Idempotent.
IQFrame project_l2(const IQFrame& r, double epsilon);

// l2-normalized-gradient PGD. Untargeted ascends loss at the given label;
// when cfg.targeted is set it descends the loss toward the target class.
// Returns the perturbation vector for x (||r||_2 <= epsilon).
IQFrame pgd_vector(const neural::Model& model, const IQFrame& x, int label,
                   const AttackConfig& cfg);

// Per-sample PGD over a whole set, keyed by frame index. Parallel over frames.
Perturbation pgd(const neural::Model& model, std::span<const IQFrame> frames,
                 std::span<const int> labels, const AttackConfig& cfg, int threads = 1);

// Universal perturbation: epochs over shuffled samples, a fresh random phase
// rotation per visit, and a short PGD refinement whenever the rotated sample
// is not yet fooled. Stops at cfg.fool_target on a validation slice or after
// cfg.craft_epochs; below-target results carry warning = true.
Perturbation craft_uaa(const neural::Model& model, std::span<const IQFrame> frames,
                       std::span<const int> labels, const AttackConfig& cfg);

// One universal vector per source class (classes below cfg.min_class_count
// samples are skipped). Crafting runs per class in parallel.
Perturbation craft_cuaa(const neural::Model& model, std::span<const IQFrame> frames,
                        std::span<const int> labels, int num_classes,
                        const AttackConfig& cfg, int threads = 1);

// x + shift(rotate(r)). key selects the vector (sample id / 0 / class index);
// unknown keys are rejected.
IQFrame apply(const IQFrame& x, const Perturbation& pert, int key, long time_shift = 0,
              double phase = 0.0);

// Gaussian noise rescaled to exactly the vector's l2 norm.
IQFrame control_gwn(const IQFrame& r, Rng& rng);

// Random permutation of the 2L real entries (norm-preserving).
IQFrame control_shuffle(const IQFrame& r, Rng& rng);

// Targeted efficacy matrix: a[s][t] = fraction of class-s samples classified
// as t after the targeted attack toward t. Diagonal is kept at zero.
struct TargetedMatrix {
  int num_classes = 0;
  std::vector<double> a;      // row-major C x C
  std::vector<long> counts;   // N_s per source class

  double& at(int s, int t) { return a[static_cast<size_t>(s) * num_classes + t]; }
  double at(int s, int t) const { return a[static_cast<size_t>(s) * num_classes + t]; }
  double mean_offdiag() const;
};

// attack_kind: PerSample = targeted PGD per sample, Universal = one targeted
// universal vector per target class, PerClass = one per (source, target).
TargetedMatrix targeted_matrix(const neural::Model& model,
                               std::span<const IQFrame> frames,
                               std::span<const int> labels, PertKind attack_kind,
                               const AttackConfig& cfg, int threads = 1);

// "RFADVP1" format: kind tag, then per vector its key, length, interleaved
// little-endian float32 I/Q payload and the stored epsilon.
void save_perturbation(const Perturbation& pert, const std::string& path);
Perturbation load_perturbation(const std::string& path);

}  // namespace rfadv::attacks

#endif

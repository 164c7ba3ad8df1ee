#ifndef RFADV_EXPERIMENT_HPP
#define RFADV_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rfadv/attacks.hpp"
#include "rfadv/dataset.hpp"
#include "rfadv/neural.hpp"
#include "rfadv/receiver.hpp"

namespace rfadv::experiment {

// One self-describing result line: condition axes that do not apply to a row
// are left empty in the CSV.
struct ReportRow {
  std::string experiment;
  std::string condition;
  std::optional<double> epsilon;
  std::optional<double> pan_db;
  std::optional<double> snr_db;
  std::optional<long> shift;
  std::string metric;
  double value = 0.0;
  long trials = 0;
  uint64_t seed = 0;
};

void write_csv(const std::string& path, const std::vector<ReportRow>& rows);

// Fixed-per-class random subsample used as the held-out evaluation slice.
struct EvalSet {
  std::vector<IQFrame> frames;
  std::vector<int> labels;
};

EvalSet subsample(const dataset::Dataset& ds, int per_class, uint64_t seed);

// ---- sweep-eps ----------------------------------------------------------

struct SweepEpsConfig {
  std::vector<double> eps_list = {1, 2, 3, 4, 6, 8, 12, 16};
  int eval_per_class = 25;
  attacks::AttackConfig attack;  // epsilon overridden per sweep point
  uint64_t seed = 1;
  int threads = 2;
};

struct SweepEpsResult {
  std::vector<ReportRow> rows;
  std::vector<double> eps;
  // condition -> accuracy per eps; conditions: clean, pgd, uaa, cuaa, gwn, shuffle
  std::map<std::string, std::vector<double>> accuracy;
};

SweepEpsResult sweep_eps(const neural::Model& model, const dataset::Dataset& train,
                         const dataset::Dataset& test, const SweepEpsConfig& cfg);

// ---- sweep-pan ----------------------------------------------------------

struct SweepPanConfig {
  double epsilon = 8.0;
  std::vector<double> pan_list = {-20, -15, -10, -5, 0, 5, 10};
  int eval_per_class = 25;
  attacks::AttackConfig attack;
  uint64_t seed = 1;
  int threads = 2;
};

struct SweepPanResult {
  std::vector<ReportRow> rows;
  std::vector<double> pan;
  // condition -> accuracy per PAN point; conditions: baseline, pgd, uaa, cuaa
  std::map<std::string, std::vector<double>> accuracy;
};

SweepPanResult sweep_pan(const neural::Model& model, const dataset::Dataset& train,
                         const dataset::Dataset& test, const SweepPanConfig& cfg);

// ---- targeted -----------------------------------------------------------

struct TargetedConfig {
  double epsilon = 8.0;
  int eval_per_class = 20;
  attacks::AttackConfig attack;
  uint64_t seed = 1;
  int threads = 2;
};

struct TargetedResult {
  std::vector<ReportRow> rows;
  attacks::TargetedMatrix pgd;
  attacks::TargetedMatrix uaa;
  attacks::TargetedMatrix cuaa;
};

TargetedResult targeted(const neural::Model& model, const dataset::Dataset& train,
                        const dataset::Dataset& test, const TargetedConfig& cfg);

// Grid CSV of one matrix (header row/column of class names, diagonal zero).
void write_matrix_csv(const std::string& path, const attacks::TargetedMatrix& m,
                      const std::vector<modem::ModScheme>& schemes);

// ---- ber ----------------------------------------------------------------

struct BerConfig {
  double pert_below_signal_db = 14.0;  // perturbation norm fixed this far below the signal
  std::vector<double> snr_list = {0, 5, 10, 15, 20};  // extra channel AWGN sweep
  bool include_noiseless = true;                      // adds the no-extra-noise point
  int frames_per_scheme = 40;
  double craft_epsilon = 8.0;  // UAA crafted here, rescaled to the BER level
  attacks::AttackConfig attack;
  uint64_t seed = 1;
  int threads = 2;
};

struct BerResult {
  std::vector<ReportRow> rows;
  // condition -> aggregate BER at the no-extra-noise point
  std::map<std::string, double> aggregate_ber;
  // per-scheme BER at the no-extra-noise point, condition -> entries
  std::map<std::string, std::vector<receiver::BerEntry>> per_scheme;
  // classifier accuracy under the same perturbation level
  std::map<std::string, double> accuracy;
};

BerResult run_ber(const neural::Model& model, const dataset::Dataset& train,
                  const dataset::Dataset& test, const BerConfig& cfg);

// ---- smartjam -----------------------------------------------------------

struct SmartjamConfig {
  double epsilon = 8.0;
  int eval_per_class = 25;
  attacks::AttackConfig attack;
  uint64_t seed = 1;
  int threads = 2;
};

struct SmartjamResult {
  std::vector<ReportRow> rows;
  double fooling_sync = 0.0;
  double fooling_jammed = 0.0;
  double accuracy_sync = 0.0;
  double accuracy_jammed = 0.0;
};

// Synchronized (shift 0, phase 0) vs per-frame randomized shift and phase
// application of a universal or per-class perturbation.
SmartjamResult smartjam(const neural::Model& model, const attacks::Perturbation& pert,
                        const dataset::Dataset& test, const SmartjamConfig& cfg);

// Clean accuracy of the model on an EvalSet.
double clean_accuracy(const neural::Model& model, const EvalSet& eval, int threads);

}  // namespace rfadv::experiment

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spca/dataset.hpp"
#include "spca/schedule.hpp"

namespace spca {

struct GridSpec {
  double base = 5.0;
  int imin = -5;
  int imax = 10;

  std::vector<double> values() const;  // base^i for i in [imin, imax]
};

struct DatasetSpec {
  enum class Type { Spiked, Docword, Cifar, SpcaFile };

  Type type = Type::Spiked;

  // spiked
  Index d = 200;
  Index k_true = 0;  // 0 means "use the run's k"
  double sigma = 0.01;
  Index n = 2000;
  std::uint64_t seed = 7;

  // file-backed
  std::string path;                // docword / spca container
  std::vector<std::string> paths;  // cifar batch files
  Index max_docs = 0;              // docword prefix; 0 reads everything
  bool center = false;             // dense datasets only
};

struct AlgoSpec {
  std::string name;                  // adaoja | oja | spm | hpca
  std::optional<Schedule> schedule;  // required for oja
};

/// One experiment: a dataset, the run parameters, and either a c-grid (sweep
/// mode) or an algorithm list (compare mode). JSON round-trips losslessly.
struct ExperimentSpec {
  std::string name = "experiment";
  DatasetSpec dataset;
  std::vector<AlgoSpec> algorithms;  // compare mode
  Index k = 5;
  Index batch = 10;
  double b0 = 1e-5;
  std::uint64_t seed = 1;
  GridSpec grid;                          // sweep mode
  std::vector<Schedule::Kind> schedules;  // sweep mode
  std::int64_t checkpoint_every = 10;
  bool offline = true;  // include the offline reference where feasible
  int workers = 0;      // 0 = hardware concurrency
  std::string out = "out";

  /// Throws ContractViolation on invalid values or missing referenced paths.
  void validate() const;

  /// Dataset spec with k_true resolved against the run's k.
  DatasetSpec resolved_dataset() const;

  std::string to_json_string(int indent = 2) const;
  static ExperimentSpec from_json_string(const std::string& text);

  static ExperimentSpec preset(const std::string& name);
  static std::vector<std::string> preset_names();
};

/// Materializes the dataset described by the spec. Spiked data is generated
/// through its stream; docword stays CSR; cifar and container files load
/// dense (optionally centered).
DataSet load_dataset(const DatasetSpec& spec);

}  // namespace spca

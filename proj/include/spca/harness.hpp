#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spca/experiment.hpp"
#include "spca/metrics.hpp"

namespace spca {

struct SweepRow {
  std::string algorithm;          // "oja" | "adaoja" | "offline"
  std::string schedule;           // schedule kind, "adaptive", or ""
  std::optional<double> c;
  std::optional<double> final_ev;
  std::string status;             // "ok" | "numerical-fault" | "data-error" | "config-error"
};

struct RunInfo {
  std::string label;
  double wall_seconds = 0.0;
  std::uint64_t stream_checksum = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<RunInfo> runs;
};

struct CompareResult {
  std::vector<EvCurve> curves;
  std::vector<RunInfo> runs;
};

/// Scheduled-Oja c-grid sweep plus AdaOja and (optionally) the offline
/// reference, all over identical re-seeded streams. Individual run failures
/// are recorded per row; grid points execute concurrently up to the worker
/// limit with deterministic output order.
SweepResult run_sweep(const ExperimentSpec& spec);

/// Runs the spec's algorithm list on identical streams and evaluates the
/// explained-variance curve of each.
CompareResult run_compare(const ExperimentSpec& spec);

/// CSV serializations; fixed headers, shortest round-trip number formatting.
std::string sweep_csv(const SweepResult& result);
std::string compare_csv(const CompareResult& result);
std::string format_double(double v);

struct OutputDigest {
  std::string path;  // relative to the manifest's directory
  std::string fnv1a64;
};

/// Reproducibility record written next to the outputs: spec echo, library
/// version, per-run wall clock and stream checksums, output digests.
void write_manifest(const std::string& dir, const ExperimentSpec& spec,
                    const std::string& command,
                    const std::vector<RunInfo>& runs,
                    const std::vector<OutputDigest>& outputs);

/// Orchestrators behind the CLI subcommands: run, write CSV(s) + manifest
/// into spec.out, return the written file paths (manifest last).
std::vector<std::string> execute_sweep(const ExperimentSpec& spec,
                                       SweepResult* result = nullptr);
std::vector<std::string> execute_compare(const ExperimentSpec& spec,
                                         CompareResult* result = nullptr);
std::vector<std::string> execute_gen_spiked(const ExperimentSpec& spec);
std::vector<std::string> execute_offline_ev(const ExperimentSpec& spec,
                                            double* ev_out = nullptr);

}  // namespace spca

#include "spca/algorithms.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "spca/errors.hpp"
#include "spca/gradient.hpp"
#include "spca/orthonormalize.hpp"

namespace spca {

namespace {

struct Recorder {
  std::int64_t every;
  std::int64_t blocks = 0;
  std::int64_t samples = 0;
  std::vector<Checkpoint> checkpoints;

  void step(const Basis& q, Index block_rows) {
    ++blocks;
    samples += block_rows;
    if (blocks % every == 0) checkpoints.push_back({samples, q});
  }
  void finish(const Basis& q) {
    if (checkpoints.empty() || checkpoints.back().samples_seen != samples)
      checkpoints.push_back({samples, q});
  }
};

void ensure_finite(const Matrix& m, const char* what) {
  if (!m.allFinite())
    throw NumericalFault(std::string(what) + ": non-finite value");
}

[[noreturn]] void rethrow_with_block(const NumericalFault& e, std::int64_t t) {
  throw NumericalFault(std::string(e.what()) + " (block " + std::to_string(t) +
                       ")");
}

Basis starting_basis(const SampleStream& stream, const RunConfig& cfg,
                     const std::optional<Basis>& init) {
  if (!init) return init_basis(stream.dim(), cfg.k, cfg.seed);
  if (init->dim() != stream.dim() || init->rank() != cfg.k)
    throw ContractViolation("run: initial basis shape does not match stream/config");
  return *init;
}

RunResult assemble(std::string algorithm, const RunConfig& cfg, Basis q,
                   Recorder&& rec, const SampleStream& stream) {
  if (rec.blocks == 0)
    throw DataError(algorithm + ": empty stream");
  rec.finish(q);
  RunResult out;
  out.algorithm = std::move(algorithm);
  out.config = cfg;
  out.final_basis = std::move(q);
  out.checkpoints = std::move(rec.checkpoints);
  out.blocks_seen = rec.blocks;
  out.samples_seen = rec.samples;
  out.stream_checksum = stream.checksum();
  return out;
}

void check_run_pre(const SampleStream& stream, const RunConfig& cfg) {
  cfg.validate();
  if (stream.dim() < cfg.k)
    throw ContractViolation("run: stream dim " + std::to_string(stream.dim()) +
                            " < k " + std::to_string(cfg.k));
}

}  // namespace

void RunConfig::validate() const {
  if (k < 1) throw ContractViolation("run config: k must be >= 1");
  if (batch < 1) throw ContractViolation("run config: batch must be >= 1");
  if (!(b0 > 0.0))
    throw ContractViolation("run config: b0 must be positive");
  if (checkpoint_every < 1)
    throw ContractViolation("run config: checkpoint_every must be >= 1");
}

Basis init_basis(Index d, Index k, std::uint64_t seed) {
  if (d < 1 || k < 1) throw ContractViolation("init_basis: d and k must be >= 1");
  if (k > d)
    throw ContractViolation("init_basis: k " + std::to_string(k) + " > d " +
                            std::to_string(d));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(d, k);
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < d; ++i) m(i, j) = gauss(rng);
  if (k == 1) return Basis{normalize_vector(m.col(0))};
  return orthonormalize(m);
}

RunResult adaoja_run(SampleStream& stream, const RunConfig& cfg,
                     AdaOjaForm form, const std::optional<Basis>& init) {
  check_run_pre(stream, cfg);
  const bool vector_form =
      form == AdaOjaForm::Vector || (form == AdaOjaForm::Auto && cfg.k == 1);
  if (vector_form && cfg.k != 1)
    throw ContractViolation("adaoja: vector form requires k == 1");

  Basis q = starting_basis(stream, cfg, init);
  AdaRateState ada = AdaRateState::init(cfg.k, cfg.b0);
  Recorder rec{cfg.checkpoint_every};

  while (auto block = stream.next()) {
    const std::int64_t t = rec.blocks + 1;
    try {
      Matrix g = block_gradient(*block, q);
      ensure_finite(g, "adaoja: gradient");
      if (vector_form) {
        const double gnorm = g.col(0).norm();
        ada.b[0] = std::sqrt(ada.b[0] * ada.b[0] + gnorm * gnorm);
        q.q.col(0) = normalize_vector(q.q.col(0) + g.col(0) / ada.b[0]);
      } else {
        for (Index i = 0; i < cfg.k; ++i) {
          const double gnorm = g.col(i).norm();
          ada.b[i] = std::sqrt(ada.b[i] * ada.b[i] + gnorm * gnorm);
        }
        q = orthonormalize(q.q + g * ada.b.cwiseInverse().asDiagonal());
      }
      ensure_finite(q.q, "adaoja: basis");
    } catch (const NumericalFault& e) {
      rethrow_with_block(e, t);
    }
    rec.step(q, block->rows());
  }

  RunResult out = assemble("adaoja", cfg, std::move(q), std::move(rec), stream);
  out.adarate = std::move(ada);
  return out;
}

RunResult oja_run(SampleStream& stream, const RunConfig& cfg,
                  const Schedule& sched, const std::optional<Basis>& init) {
  check_run_pre(stream, cfg);
  Basis q = starting_basis(stream, cfg, init);
  Recorder rec{cfg.checkpoint_every};

  while (auto block = stream.next()) {
    const std::int64_t t = rec.blocks + 1;
    const double eta = sched.eta(t);
    try {
      if (!std::isfinite(eta))
        throw NumericalFault("oja: non-finite step size (schedule " +
                             sched.kind_name() + ", c=" +
                             std::to_string(sched.scale()) + ")");
      Matrix g = block_gradient(*block, q);
      ensure_finite(g, "oja: gradient");
      if (cfg.k == 1)
        q.q.col(0) = normalize_vector(q.q.col(0) + eta * g.col(0));
      else
        q = orthonormalize(q.q + eta * g);
      ensure_finite(q.q, "oja: basis");
    } catch (const NumericalFault& e) {
      rethrow_with_block(e, t);
    }
    rec.step(q, block->rows());
  }
  return assemble("oja", cfg, std::move(q), std::move(rec), stream);
}

RunResult spm_run(SampleStream& stream, const RunConfig& cfg,
                  const std::optional<Basis>& init) {
  check_run_pre(stream, cfg);
  Basis q = starting_basis(stream, cfg, init);
  Recorder rec{cfg.checkpoint_every};

  while (auto block = stream.next()) {
    const std::int64_t t = rec.blocks + 1;
    try {
      Matrix g = block_gradient(*block, q);
      ensure_finite(g, "spm: gradient");
      if (cfg.k == 1)
        q.q.col(0) = normalize_vector(g.col(0));
      else
        q = orthonormalize(g);
      ensure_finite(q.q, "spm: basis");
    } catch (const NumericalFault& e) {
      rethrow_with_block(e, t);
    }
    rec.step(q, block->rows());
  }
  return assemble("spm", cfg, std::move(q), std::move(rec), stream);
}

RunResult hpca_run(SampleStream& stream, const RunConfig& cfg,
                   const std::optional<Basis>& init) {
  check_run_pre(stream, cfg);
  Basis q = starting_basis(stream, cfg, init);
  Vector lam = Vector::Zero(cfg.k);
  Recorder rec{cfg.checkpoint_every};

  while (auto block = stream.next()) {
    const std::int64_t t = rec.blocks + 1;
    try {
      const double hist = static_cast<double>(t - 1) / static_cast<double>(t);
      const double fresh = 1.0 / static_cast<double>(t);
      Matrix g = block_gradient(*block, q);
      ensure_finite(g, "hpca: gradient");
      // Power step of C_t = hist * Q diag(lam) Q^T + fresh * (1/B) X^T X,
      // applied to Q itself (Q^T Q = I collapses the history term).
      Matrix m = hist * (q.q * lam.asDiagonal()) + fresh * g;
      Basis qn = (cfg.k == 1) ? Basis{normalize_vector(m.col(0)).eval()}
                              : orthonormalize(m);
      // Rayleigh quotients of the new columns under the same C_t.
      Matrix cq = hist * (q.q * (lam.asDiagonal() * (q.q.transpose() * qn.q))) +
                  fresh * block_gradient(*block, qn);
      for (Index i = 0; i < cfg.k; ++i)
        lam[i] = std::max(0.0, qn.q.col(i).dot(cq.col(i)));
      q = std::move(qn);
      ensure_finite(q.q, "hpca: basis");
    } catch (const NumericalFault& e) {
      rethrow_with_block(e, t);
    }
    rec.step(q, block->rows());
  }
  RunResult out = assemble("hpca", cfg, std::move(q), std::move(rec), stream);
  out.eigval_estimates = std::move(lam);
  return out;
}

}  // namespace spca

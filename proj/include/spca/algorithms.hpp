#pragma once

#include <cstdint>
#include <optional>

#include "spca/run.hpp"
#include "spca/sample_stream.hpp"
#include "spca/schedule.hpp"

namespace spca {

/// Seeded i.i.d. standard-normal matrix, orthonormalized (normalized when
/// k == 1). Same seed, same basis.
Basis init_basis(Index d, Index k, std::uint64_t seed);

/// Update form for adaoja_run. Auto picks Vector when k == 1, Matrix
/// otherwise; Vector renormalizes the single column, Matrix re-projects via
/// thin QR. Both forms share the gradient and accumulator updates.
enum class AdaOjaForm { Auto, Vector, Matrix };

/// Oja's method with per-column adaptive rates: per block,
/// b[i] <- sqrt(b[i]^2 + ||G[:,i]||^2), Q[:,i] <- Q[:,i] + G[:,i]/b[i],
/// then re-orthonormalize.
RunResult adaoja_run(SampleStream& stream, const RunConfig& cfg,
                     AdaOjaForm form = AdaOjaForm::Auto,
                     const std::optional<Basis>& init = std::nullopt);

/// Scheduled Oja: W <- orth(W + eta_t * G), eta_t from the schedule with t
/// the 1-based block index.
RunResult oja_run(SampleStream& stream, const RunConfig& cfg,
                  const Schedule& sched,
                  const std::optional<Basis>& init = std::nullopt);

/// Streaming power method: W <- orth(G), one power step per block.
RunResult spm_run(SampleStream& stream, const RunConfig& cfg,
                  const std::optional<Basis>& init = std::nullopt);

/// History PCA: keeps (Q, lambda) and per block applies one power step of
/// C_t = ((t-1)/t) Q diag(lambda) Q^T + (1/t)(1/B) X_t^T X_t, exploiting the
/// low-rank + block structure, then refreshes lambda with Rayleigh quotients.
RunResult hpca_run(SampleStream& stream, const RunConfig& cfg,
                   const std::optional<Basis>& init = std::nullopt);

}  // namespace spca

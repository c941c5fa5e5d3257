#include "spca/spiked.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

#include "spca/errors.hpp"
#include "spca/orthonormalize.hpp"

namespace spca {

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed) {
  // Distinct from the model rng so streams and model construction never
  // share draws.
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

class SpikedStream final : public SampleStream {
 public:
  SpikedStream(SpikedModel model, Index n, Index batch)
      : SampleStream(model.d, batch, n),
        model_(std::move(model)),
        n_(n),
        rng_(sample_rng(model_.seed)),
        gauss_(0.0, 1.0) {}

 private:
  std::optional<SampleBlock> fetch() override {
    if (emitted_ >= n_) return std::nullopt;
    const Index take = std::min<Index>(batch(), n_ - emitted_);
    RowMatrix x(take, model_.d);
    Vector z(model_.k_true);
    // Per sample: k_true factor draws, then d noise draws. The draw order is
    // fixed per sample, so the emitted matrix is independent of the block
    // boundaries.
    for (Index r = 0; r < take; ++r) {
      for (Index j = 0; j < model_.k_true; ++j) z[j] = gauss_(rng_);
      const Vector signal = model_.a0 * model_.w.cwiseProduct(z);
      for (Index j = 0; j < model_.d; ++j)
        x(r, j) = signal[j] + model_.sigma * gauss_(rng_);
    }
    emitted_ += take;
    return SampleBlock::dense(std::move(x));
  }

  SpikedModel model_;
  Index n_;
  Index emitted_ = 0;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_;
};

}  // namespace

SpikedModel SpikedModel::make(Index d, Index k_true, double sigma,
                              std::uint64_t seed) {
  if (d < 1 || k_true < 1)
    throw ContractViolation("spiked model: d and k_true must be >= 1");
  if (k_true > d)
    throw ContractViolation("spiked model: k_true " + std::to_string(k_true) +
                            " > d " + std::to_string(d));
  if (!(sigma >= 0.0))
    throw ContractViolation("spiked model: sigma must be >= 0");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(d, k_true);
  for (Index j = 0; j < k_true; ++j)
    for (Index i = 0; i < d; ++i) a(i, j) = gauss(rng);

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vector w(k_true);
  for (Index i = 0; i < k_true; ++i) {
    do {
      w[i] = unif(rng);
    } while (w[i] == 0.0);  // weights must stay strictly positive
  }
  std::sort(w.data(), w.data() + k_true, std::greater<>());
  w /= w[0];
  w[0] = 1.0;

  SpikedModel model;
  model.d = d;
  model.k_true = k_true;
  model.sigma = sigma;
  model.seed = seed;
  model.a0 = (k_true == 1) ? Matrix(normalize_vector(a.col(0)))
                           : orthonormalize(a).q;
  model.w = std::move(w);
  return model;
}

std::unique_ptr<SampleStream> gen_spiked(const SpikedModel& model, Index n,
                                         Index batch) {
  if (n < 1) throw ContractViolation("gen_spiked: n must be >= 1");
  if (batch < 1) throw ContractViolation("gen_spiked: batch must be >= 1");
  return std::make_unique<SpikedStream>(model, n, batch);
}

}  // namespace spca

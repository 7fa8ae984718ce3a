#include "isoconn/isospectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "isoconn/error.hpp"
#include "isoconn/spectral.hpp"

namespace isoconn {

namespace {

constexpr double kTransformTol = 1e-9;
constexpr double kDistinctTol = 1e-12;

// Uniform draw from [0, bound) by rejection, independent of the standard
// library's distribution implementation so sampled families are portable.
std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % b);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

IsoFamilyEntry conjugate(const Matrix& laplacian, const Permutation& perm) {
  const Matrix j = permutation_matrix(perm);
  IsoFamilyEntry e{perm, j, j.transposed() * laplacian * j, false, false};
  const double tol = kEigenvalueTol * std::max(1.0, laplacian.max_abs());
  e.laplacian_structured = validate_laplacian(e.result, tol).passes();
  e.distinct_from_base = !e.result.approx_equal(laplacian, kDistinctTol);
  return e;
}

class FamilyCollector {
 public:
  FamilyCollector(const Matrix& base, const FamilyOptions& options) : base_(base), options_(options) {}

  // Returns false once the limit is reached.
  bool offer(const Permutation& perm) {
    if (perm.is_identity()) return true;
    IsoFamilyEntry e = conjugate(base_, perm);
    if (options_.dedupe) {
      for (const Matrix& seen : seen_)
        if (seen == e.result) return true;
      seen_.push_back(e.result);
    }
    entries_.push_back(std::move(e));
    return options_.limit == 0 || entries_.size() < options_.limit;
  }

  std::vector<IsoFamilyEntry> take() { return std::move(entries_); }

 private:
  const Matrix& base_;
  const FamilyOptions& options_;
  std::vector<Matrix> seen_;
  std::vector<IsoFamilyEntry> entries_;
};

}  // namespace

IsoFamilyEntry similarity_transform(const Matrix& laplacian, const Matrix& q) {
  if (laplacian.order() != q.order()) throw Error(ErrorCode::OrderMismatch, "transform order differs from matrix order");
  const IsoTransformVerdict verdict = validate_iso_transform(q, kTransformTol);
  if (!verdict.passes()) {
    throw Error(ErrorCode::InvalidTransform,
                "transform must be orthonormal with unit row sums (orthonormality error " +
                    std::to_string(verdict.orthonormality_error) + ", row-sum error " +
                    std::to_string(verdict.fixed_point_error) + ")");
  }
  require_laplacian(laplacian, "base matrix");

  const double scale = std::max(1.0, laplacian.max_abs());
  IsoFamilyEntry e{std::nullopt, q, q.transposed() * laplacian * q, false, false};
  double worst_row = 0.0;
  for (double s : e.result.row_sums()) worst_row = std::max(worst_row, std::abs(s));
  if (worst_row > kTransformTol * scale * static_cast<double>(q.order())) {
    throw Error(ErrorCode::InvalidTransform, "transformed matrix lost zero row sums");
  }
  e.laplacian_structured = validate_laplacian(e.result, kEigenvalueTol * scale).passes();
  e.distinct_from_base = !e.result.approx_equal(laplacian, kDistinctTol);
  if (verdict.permutation) {
    std::vector<std::size_t> images(q.order());
    for (std::size_t i = 0; i < q.order(); ++i)
      for (std::size_t j = 0; j < q.order(); ++j)
        if (std::abs(q(i, j) - 1.0) <= kTransformTol) images[i] = j;
    e.perm = Permutation(std::move(images));
  }
  return e;
}

std::vector<IsoFamilyEntry> permutation_family(const Matrix& laplacian, const FamilyOptions& options) {
  require_laplacian(laplacian, "base matrix");
  const std::size_t n = laplacian.order();
  FamilyCollector collector(laplacian, options);

  if (n <= kMaxEnumerationOrder) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    do {
      if (!collector.offer(Permutation(images))) break;
    } while (std::next_permutation(images.begin(), images.end()));
    return collector.take();
  }

  if (!options.seed) {
    throw Error(ErrorCode::OrderTooLarge, "full enumeration is limited to order " +
                                              std::to_string(kMaxEnumerationOrder) + "; supply a sampling seed");
  }
  std::mt19937_64 rng(*options.seed);
  const std::size_t limit = options.limit == 0 ? kDefaultSampleLimit : options.limit;
  FamilyOptions bounded = options;
  bounded.limit = limit;
  FamilyCollector sampler(laplacian, bounded);
  std::vector<std::size_t> images(n);
  for (std::size_t attempt = 0; attempt < 100 * limit; ++attempt) {
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(images[i], images[uniform_below(rng, i + 1)]);
    if (!sampler.offer(Permutation(images))) break;
  }
  return sampler.take();
}

AgentConfiguration relabel_configuration(const AgentConfiguration& config, const Permutation& perm) {
  if (perm.size() != config.size())
    throw Error(ErrorCode::NotBijection, "permutation size does not match the number of agents");
  // (J^T L J)_{ij} = L_{p^-1(i), p^-1(j)}: slot i receives agent p^-1(i).
  const Permutation inv = perm.inverse();
  std::vector<Agent> agents;
  agents.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) agents.push_back(config.agent(inv(i)));
  return AgentConfiguration(std::move(agents), config.sigma(), config.range());
}

}  // namespace isoconn

#pragma once

// Isospectral Laplacian families: similarity transforms Q^T L Q with Q
// orthonormal and Q 1 = 1, in particular agent relabelings.

#include <cstdint>
#include <optional>
#include <vector>

#include "isoconn/matrix.hpp"
#include "isoconn/topology.hpp"

namespace isoconn {

struct IsoFamilyEntry {
  std::optional<Permutation> perm;  ///< set when the transform is a relabeling
  Matrix transform;
  Matrix result;
  bool laplacian_structured = false;
  bool distinct_from_base = false;  ///< some entry differs from the base by more than 1e-12
};

/// Q^T L Q. Q must pass validate_iso_transform at 1e-9 (InvalidTransform)
/// and L must be a Laplacian (NotLaplacian). Zero row sums of the result are
/// checked rather than assumed.
IsoFamilyEntry similarity_transform(const Matrix& laplacian, const Matrix& q);

inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::uint64_t kDefaultSamplingSeed = 1729;
inline constexpr std::size_t kDefaultSampleLimit = 100;

struct FamilyOptions {
  std::size_t limit = 0;  ///< maximum number of entries returned; 0 means no limit
  bool dedupe = true;     ///< collapse entries whose result matrices are equal
  /// Required above order 8: draw uniformly random permutations from this
  /// seed instead of enumerating all n! of them. Sampling with limit 0 stops
  /// after kDefaultSampleLimit entries.
  std::optional<std::uint64_t> seed;
};

/// Conjugates of L under every non-identity permutation, in lexicographic
/// order of the permutation (or in draw order when sampling). With dedupe,
/// the first entry for each distinct result is kept; results equal to L
/// itself (automorphisms) still count as one entry.
std::vector<IsoFamilyEntry> permutation_family(const Matrix& laplacian, const FamilyOptions& options);

/// Agents reordered so build_laplacian(result) == J^T build_laplacian(config) J
/// with J = permutation_matrix(perm); ids travel with their positions.
AgentConfiguration relabel_configuration(const AgentConfiguration& config, const Permutation& perm);

}  // namespace isoconn

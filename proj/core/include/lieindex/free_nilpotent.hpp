#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieindex/lie_algebra.hpp"

namespace lieindex {

/// Möbius function by trial division.
int mobius(std::uint64_t n);

struct WittDimension {
  Integer total;      // dim F_{g,c}
  Integer top_layer;  // dimension of the weight-c layer
};

/// Witt formula: layer m has (1/m) sum_{d|m} mu(d) g^{m/d} elements.
/// Requires g >= 2 and c >= 1.
WittDimension witt_dimension(std::uint64_t generators, std::uint64_t nilpotency_class);
Integer witt_layer(std::uint64_t generators, std::uint64_t weight);

/// A basic bracket of the Hall set. Generators have left == right == nullopt
/// and carry their generator number; compound elements are [left, right]
/// with both children given as basis indices.
struct HallBasisElement {
  std::size_t index = 0;
  std::size_t weight = 1;
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
  std::size_t generator = 0;  // 0-based; meaningful only when weight == 1
  std::string label;

  bool is_generator() const { return weight == 1; }
};

/// F_{g,c} (or a quotient of it) presented on a graded basis.
struct FreeNilpotentAlgebra {
  std::size_t generators = 0;
  std::size_t nilpotency_class = 0;
  LieAlgebra algebra;
  /// Hall elements (or, for metabelian quotients, the surviving Hall
  /// elements) in basis order.
  std::vector<HallBasisElement> hall_basis;
  /// layer_offsets[w - 1] is the first index of weight w; one extra entry
  /// holds dim, so layer w spans [layer_offsets[w-1], layer_offsets[w]).
  std::vector<std::size_t> layer_offsets;

  std::size_t dim() const { return algebra.dim(); }
  std::size_t layer_size(std::size_t weight) const {
    return layer_offsets[weight] - layer_offsets[weight - 1];
  }
};

/// Default ceiling on dim for free constructions.
inline constexpr std::size_t kDefaultDimensionCeiling = 500;

/// Builds F_{g,c} on the Hall basis; structure constants come from
/// recursive rewriting of brackets into Hall normal form with truncation
/// above weight c. Throws ResourceLimit if dim would exceed `ceiling`.
FreeNilpotentAlgebra build_free_nilpotent(std::size_t generators, std::size_t nilpotency_class,
                                          std::size_t ceiling = kDefaultDimensionCeiling);

/// Same algebra, but the rewriting memo is filled by querying basis pairs
/// in an order given by `seed` (used to check that the normal form does not
/// depend on query order).
FreeNilpotentAlgebra build_free_nilpotent_shuffled(std::size_t generators, std::size_t nilpotency_class,
                                                   std::uint64_t seed);

/// M_{g,c} = F_{g,c} / [F^2, F^2].
FreeNilpotentAlgebra build_metabelian(std::size_t generators, std::size_t nilpotency_class,
                                      std::size_t ceiling = kDefaultDimensionCeiling);

/// F_{g,3} on the basis x_i, x_ij = [x_i, x_j] (i < j) and
/// x_ijk = [x_i, [x_j, x_k]] (j < k, i <= k). For k < i the bracket
/// [x_i, x_jk] rewrites to -x_jki + x_kji.
FreeNilpotentAlgebra build_fg3_paper_basis(std::size_t generators);

/// Basis index of x_ijk (1-based generator numbers) in build_fg3_paper_basis.
std::size_t fg3_triple_index(std::size_t generators, std::size_t i, std::size_t j, std::size_t k);
/// Basis index of x_ij (1-based, i < j) in build_fg3_paper_basis.
std::size_t fg3_pair_index(std::size_t generators, std::size_t i, std::size_t j);

}  // namespace lieindex

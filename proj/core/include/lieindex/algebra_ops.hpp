#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieindex/errors.hpp"
#include "lieindex/lie_algebra.hpp"
#include "lieindex/matrix.hpp"

namespace lieindex {

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

/// Checks the Jacobi identity on every basis triple i < j < k; returns the
/// first violating triple, or nullopt when the algebra is a Lie algebra.
std::optional<JacobiViolation> check_jacobi(const LieAlgebra& g);

/// Throws JacobiError describing the first violation.
void require_jacobi(const LieAlgebra& g);

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

Subspace center(const LieAlgebra& g);

/// All x with [x, s] = 0.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

/// g^1 = g, g^{k+1} = [g, g^k], listed until a term repeats; the last entry
/// is the zero subspace exactly when g is nilpotent.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

/// Nilpotency class inferred from the lower central series (0 for the zero
/// algebra, 1 for nonzero abelian); nullopt if g is not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g);

struct DerivedPair {
  Subspace derived;         // [g, g]
  Subspace second_derived;  // [[g, g], [g, g]]
};
DerivedPair derived_subalgebra_pair(const LieAlgebra& g);

/// Smallest ideal containing s.
Subspace ideal_closure(const LieAlgebra& g, const Subspace& s);
/// Smallest subalgebra containing s.
Subspace subalgebra_closure(const LieAlgebra& g, const Subspace& s);

/// Pair (basis index of g, basis vector index of s) whose bracket leaves s.
struct IdealWitness {
  std::size_t algebra_index;
  std::size_t subspace_index;
};
std::optional<IdealWitness> find_ideal_violation(const LieAlgebra& g, const Subspace& s);

class NotAnIdeal : public InvalidArgument {
 public:
  NotAnIdeal(IdealWitness w);
  IdealWitness witness;
};

struct QuotientResult {
  LieAlgebra algebra;
  /// dim(quotient) x dim(g); column j is the image of x_j.
  Matrix<Rational> projection;
  /// Basis indices of g whose images form the quotient basis.
  std::vector<std::size_t> complement;
};

/// g / ideal on the complement of the ideal's echelon pivots (first free
/// standard basis vectors, in order). Throws NotAnIdeal.
QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal);

/// Indices (p, q) of basis vectors of s with [s_p, s_q] != 0.
std::optional<std::pair<std::size_t, std::size_t>> find_nonabelian_pair(const LieAlgebra& g, const Subspace& s);

class NotAbelian : public InvalidArgument {
 public:
  NotAbelian(std::size_t p, std::size_t q);
  std::size_t first, second;
};

bool is_abelian_subalgebra(const LieAlgebra& g, const Subspace& s);

}  // namespace lieindex

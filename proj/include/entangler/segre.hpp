#pragma once

#include "entangler/states.hpp"

namespace entangler::segre {

/// Exact decision data for "does a universal entangler exist on (m,n)".
/// All fields are integer arithmetic; no tolerances involved.
struct ExistenceVerdict {
  states::BipartiteDims dims;
  bool exists = false;
  int segre_dim = 0;          // m + n - 2
  int ambient_dim = 0;        // mn - 1
  int intersection_excess = 0;  // 2(m+n-2) - (mn-1) = 1 - (m-2)(n-2)
};

/// A universal entangler exists iff min(m,n) >= 3 and (m,n) != (3,3),
/// equivalently iff intersection_excess < 0, equivalently iff
/// (m-2)(n-2) >= 2. When the excess is >= 0 every unitary maps some
/// product state to a product state, so no gate can entangle universally.
ExistenceVerdict exists_universal_entangler(states::BipartiteDims dims);

/// Composite state of a product pair: kron(left, right).
states::PureState segre_embed(const states::ProductPair& p);

/// Largest magnitude among the 2x2 minors of the m x n matricization.
/// Exactly zero iff psi is a product state.
double max_minor_violation(const states::PureState& psi);

/// Product-state membership via vanishing of all 2x2 minors:
/// true iff max_minor_violation(psi) <= tol.
bool is_product(const states::PureState& psi, double tol = states::kRankTol);

}  // namespace entangler::segre

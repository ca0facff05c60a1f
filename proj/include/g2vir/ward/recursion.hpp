#pragma once

#include <map>
#include <stdexcept>

#include "g2vir/ward/operator.hpp"

namespace g2vir::ward {

/// Closed-form image of one factor under the bundled operator
/// nabla + P1 d + (weight) P2 inserted at `new_label`:
///   Om(j,k) -> Om(x,j) Om(x,k)
///   Nu(a,k) -> Om(x,k) Nu(a,x)
///   S(k)    -> 6 Om(x,k)^2 - 6 P4(x,k)
/// and zero for Alpha, P4 and X. Throws if `atom` already carries new_label.
[[nodiscard]] Polynomial rewrite_rule(const Atom& atom, int new_label);

/// The four families of terms the Ward recursion adds up, kept apart so the
/// P4 bookkeeping can be inspected.
struct RecursionTerms {
  Polynomial connection;   ///< (c/12) S(x) O_prev
  Polynomial insertion;    ///< A(x,x) O_prev
  Polynomial derivation;   ///< derive(O_prev, rewrite_rule(., x))
  Polynomial contraction;  ///< (c/2) sum_k P4(x,k) O_prev2(k)

  [[nodiscard]] Polynomial sum() const;
};

/// Inputs: O_prev on a label set L, and for every k in L the operator
/// O_prev2(k) on L \ {k}. `new_label` must not be in L.
[[nodiscard]] RecursionTerms expand_recursion(const OperatorForm& prev,
                                              const std::map<int, OperatorForm>& prev2,
                                              int new_label);

/// Thrown when P4 atoms survive the recursion sum.
class CancellationFailure : public std::runtime_error {
 public:
  CancellationFailure(Polynomial residual);
  [[nodiscard]] const Polynomial& residual() const noexcept { return residual_; }

 private:
  Polynomial residual_;
};

/// One step of the Ward recursion, returning O_n on L + {new_label}. Throws
/// CancellationFailure carrying the surviving P4 terms if they do not cancel.
[[nodiscard]] OperatorForm apply_recursion(const OperatorForm& prev,
                                           const std::map<int, OperatorForm>& prev2,
                                           int new_label);

}  // namespace g2vir::ward

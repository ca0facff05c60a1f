#pragma once

#include <string>
#include <string_view>

#include "g2vir/expr/polynomial.hpp"

namespace g2vir::expr {

/// Canonical s-expression form, one polynomial per line:
///
///   (+ (* (q 1/12) (c 1) (S 1)) (* (q 1) (Nu 1 1) (Nu 1 1) (Al 1 1)))
///
/// Each `(* ...)` term carries one rational `(q r)`, an optional power of the
/// central charge `(c k)` (omitted for k = 0) and the monomial's atoms, with
/// powers written out as repeated atoms. A coefficient with several c-degrees
/// contributes one term per degree, in ascending degree. Zero is `(+)`.
[[nodiscard]] std::string to_sexpr(const Polynomial& p);

/// Inverse of to_sexpr. Accepts any term order and repeated terms (they are
/// collected). Throws std::invalid_argument on malformed input.
[[nodiscard]] Polynomial parse_sexpr(std::string_view text);

/// LaTeX rendering for human inspection. Alpha atoms are shown through the
/// alpha -> d/dOmega reinterpretation as trailing \partial_{\Omega_{ab}}
/// factors. Formatting is not a stable contract.
[[nodiscard]] std::string to_latex(const Polynomial& p);
[[nodiscard]] std::string to_latex(const Coefficient& k);

}  // namespace g2vir::expr

#pragma once

#include "ale/form.hpp"

namespace ale {

struct WeightMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The six face integrals over [-1,1]^3 with r^2 = 1 + |y|^2:
//   weight m=3:  1 -> c1,  t^2 -> c2
//   weight m=4:  1 -> sigma4, t^2 -> sigma3, t^4 -> sigma1, t^2 u^2 -> sigma2
// Any monomial odd in some variable integrates to zero, as does any even
// pattern beyond the table (none exist within the degree bounds).
// classify_face_integral implements the table directly; the evaluation-point
// operators F and G below are cross-checks of the same functional.

/// Classifies a face-restricted value num / r^(2m). The restricted axis must
/// not occur in the numerator, the denominator exponent must equal m
/// (WeightMismatch otherwise), and the numerator degree is capped at 3 for
/// m=3 and 5 for m=4 (DegreeOverflow). Returns a polynomial in parameter
/// symbols and the c/sigma symbols.
Poly classify_face_integral(const RadialRational& restricted, int m, int axis);

/// Signed flux of a grade-3 form through the boundary of [-1,1]^4, expressed
/// in the c (m=3) or sigma (m=4) symbols:
///   sum_p classify(face_flux(w,p,+1)) - classify(face_flux(w,p,-1)).
/// Every coefficient of w is lifted to denominator weight m first.
Poly integrate_over_cube_boundary(const Form& w, int m);

/// The 17-point evaluation operator for degree <= 3 numerators, exactly as
/// displayed: F(p) = (1/16) sum over the 16 sign vertices of p times c1 +
/// p(0) (c2 - c1). NOTE: as printed this sends 1 -> c2 and t^2 -> c1, i.e.
/// the labels are swapped relative to the integral definitions; the
/// classifier above is the definition-true functional, and the cross-check
/// tests assert agreement after the swap.
Poly operator_F_eval(const Poly& p);

/// The 41-point evaluation operator for degree <= 5 numerators: sign
/// vertices, origin, doubled vertices, and the 8 signed unit vectors, with
/// the displayed sigma weights. Agrees with the m=4 classifier.
Poly operator_G_eval(const Poly& p);

}  // namespace ale

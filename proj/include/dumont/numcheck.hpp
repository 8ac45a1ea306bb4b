#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "dumont/report.hpp"
#include "dumont/triangle.hpp"

namespace dumont {

using Complex = std::complex<double>;

struct EllipticTriple {
    Complex sn, cn, dn;
};

// Fourth-order Runge-Kutta integration of sn' = cn*dn, cn' = a2*sn*dn,
// dn' = b2*sn*cn from (0,1,1) along the straight segment 0 -> u. This is
// the numeric oracle and is deliberately independent of the series module.
EllipticTriple elliptic_numeric(Complex u, Complex a2, Complex b2, int steps);

// Classical functions with modulus squared k2 (a2 = -1, b2 = -k2).
EllipticTriple elliptic_classical(Complex u, Complex k2, int steps);

// Incomplete elliptic integral of the first kind with modulus squared k2,
// integrated along the straight segment 0 -> x.
Complex elliptic_integral_first(Complex x, Complex k2);

// error(steps)/error(2*steps) against a high-order series reference for the
// classical sn; close to 16 for a fourth-order scheme.
double rk4_halving_ratio(double u, double k2, int steps);

struct SamplePoint {
    Complex x;
    double p = 0;
    double q = 0;
};

// Value of one closed form at one point: the odd/even parts where the
// theorem provides them, otherwise just the combined function.
struct ClosedFormValue {
    bool has_parts = false;
    Complex odd = 0.0, even = 0.0;
    Complex full = 0.0;
};

// Evaluates the printed form of a theorem (or, with proof_form, the reading
// rebuilt from its proof's characteristic sections where the two differ).
ClosedFormValue eval_closed_form(const std::string& id, const SamplePoint& s, int rk_steps,
                                 bool proof_form = false);

// Ids of every closed-form comparison this module knows about.
std::vector<std::string> closed_form_ids();

// Which coefficient triangle feeds the truncated EGF side; binom-C/binom-D
// need none and report ArrayName::c / ArrayName::d only nominally.
ArrayName closed_form_array(const std::string& id);
bool closed_form_needs_triangle(const std::string& id);

// Samples admissible points, evaluates the closed form and the truncated
// EGF of `tr`, and compares with a truncation allowance computed from the
// exact rows beyond `order` (tr must reach order+2). The printed form of a
// theorem is tried first; where only a proof-derived form validates, the
// report says so in `note` rather than correcting silently.
VerificationReport compare_closed_form(const std::string& id, const Triangle* tr, int order,
                                       int samples, double tol, std::uint64_t seed,
                                       int rk_steps);

}  // namespace dumont

#pragma once

#include <map>
#include <string>
#include <vector>

#include "dumont/polynomial.hpp"
#include "dumont/report.hpp"
#include "dumont/triangle.hpp"

namespace dumont {

// Truncated power series in one distinguished variable whose coefficients
// are exact polynomials in the remaining variables. Storage is factorial
// scaled: coeff(m) holds m! * [u^m], which keeps every series in this
// artifact integer-valued and all arithmetic exact.
class FormalPowerSeries {
public:
    FormalPowerSeries(VariableSetPtr coeff_ring, std::string var, int order);

    static FormalPowerSeries constant(VariableSetPtr ring, std::string var, int order,
                                      ExactPolynomial c);

    int order() const { return order_; }
    const std::string& var() const { return var_; }
    const VariableSetPtr& coeff_ring() const { return ring_; }

    const ExactPolynomial& coeff(int m) const;  // m! * [u^m]
    void set_coeff(int m, ExactPolynomial p);

    FormalPowerSeries operator+(const FormalPowerSeries& o) const;
    FormalPowerSeries operator-(const FormalPowerSeries& o) const;
    // Truncated product; the factorial scaling turns this into a binomial
    // convolution.
    FormalPowerSeries operator*(const FormalPowerSeries& o) const;
    FormalPowerSeries scale(const ExactPolynomial& c) const;
    // Multiplicative inverse; requires constant term exactly 1.
    FormalPowerSeries reciprocal() const;

    bool operator==(const FormalPowerSeries& o) const;

private:
    void check_compatible(const FormalPowerSeries& o) const;

    VariableSetPtr ring_;
    std::string var_;
    int order_;
    std::vector<ExactPolynomial> coeffs_;
};

struct JacobiSeries {
    FormalPowerSeries sn, cn, dn;
};

// Maclaurin series of the two-parameter functions from the symmetric ODE
// system sn' = cn*dn, cn' = a2*sn*dn, dn' = b2*sn*cn with sn(0)=0,
// cn(0)=dn(0)=1, over the ring Z[a2,b2].
JacobiSeries jacobi_two_param(int order);

// Classical series over Z[k2]: sn' = cn*dn, cn' = -sn*dn, dn' = -k2*sn*cn.
JacobiSeries jacobi_classical(int order);

// Integer coefficients J_{n,2i} of the polynomials J_n(k2) read off the
// classical sn (odd n) and cn (even n) series, signs stripped. J_0 = 1 by
// the convention that matches t_{0,0,0} = 1.
struct JTable {
    int nmax = 0;
    std::map<std::pair<int, int>, BigInt> entries;  // (n, 2i) -> J_{n,2i}

    BigInt j(int n, int two_i) const;
    std::vector<ExactPolynomial> polynomials() const;  // J_n as polynomials in k2
};

JTable j_coefficients(int nmax);

// Exact check of the closed generating function for D^n(x): builds
// (yz*sn + x*cn*dn) / (1 - x^2*sn^2) with a2 -> y^2-x^2, b2 -> z^2-x^2 and
// compares each factorial-scaled coefficient with the grammar iterate.
VerificationReport verify_dumont_gf(int nmax);

// The convolution identities tying J-coefficients to themselves and the
// boundary columns of the t and s triangles.
VerificationReport verify_convolution(const Triangle& t_tri, const Triangle& s_tri, int nmax);

}  // namespace dumont

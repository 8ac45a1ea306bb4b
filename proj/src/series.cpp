#include "dumont/series.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "dumont/grammar.hpp"

namespace dumont {

FormalPowerSeries::FormalPowerSeries(VariableSetPtr coeff_ring, std::string var, int order)
    : ring_(std::move(coeff_ring)), var_(std::move(var)), order_(order) {
    if (order_ < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(order_ + 1, ExactPolynomial::zero(ring_));
}

FormalPowerSeries FormalPowerSeries::constant(VariableSetPtr ring, std::string var, int order,
                                              ExactPolynomial c) {
    FormalPowerSeries s(std::move(ring), std::move(var), order);
    s.set_coeff(0, std::move(c));
    return s;
}

const ExactPolynomial& FormalPowerSeries::coeff(int m) const {
    if (m < 0 || m > order_) throw std::out_of_range("series coefficient index out of range");
    return coeffs_[m];
}

void FormalPowerSeries::set_coeff(int m, ExactPolynomial p) {
    if (m < 0 || m > order_) throw std::out_of_range("series coefficient index out of range");
    if (!same_ring(p.ring(), ring_))
        throw std::invalid_argument("coefficient ring mismatch");
    coeffs_[m] = std::move(p);
}

void FormalPowerSeries::check_compatible(const FormalPowerSeries& o) const {
    if (var_ != o.var_ || order_ != o.order_ || !same_ring(ring_, o.ring_))
        throw std::invalid_argument("series variable/order/ring mismatch");
}

FormalPowerSeries FormalPowerSeries::operator+(const FormalPowerSeries& o) const {
    check_compatible(o);
    FormalPowerSeries r(ring_, var_, order_);
    for (int m = 0; m <= order_; ++m) r.coeffs_[m] = coeffs_[m] + o.coeffs_[m];
    return r;
}

FormalPowerSeries FormalPowerSeries::operator-(const FormalPowerSeries& o) const {
    check_compatible(o);
    FormalPowerSeries r(ring_, var_, order_);
    for (int m = 0; m <= order_; ++m) r.coeffs_[m] = coeffs_[m] - o.coeffs_[m];
    return r;
}

FormalPowerSeries FormalPowerSeries::operator*(const FormalPowerSeries& o) const {
    check_compatible(o);
    FormalPowerSeries r(ring_, var_, order_);
    for (int m = 0; m <= order_; ++m) {
        ExactPolynomial acc(ring_);
        for (int k = 0; k <= m; ++k) {
            if (coeffs_[k].is_zero() || o.coeffs_[m - k].is_zero()) continue;
            acc += (coeffs_[k] * o.coeffs_[m - k]) * binomial(m, k);
        }
        r.coeffs_[m] = std::move(acc);
    }
    return r;
}

FormalPowerSeries FormalPowerSeries::scale(const ExactPolynomial& c) const {
    if (!same_ring(c.ring(), ring_)) throw std::invalid_argument("scale: ring mismatch");
    FormalPowerSeries r(ring_, var_, order_);
    for (int m = 0; m <= order_; ++m) r.coeffs_[m] = coeffs_[m] * c;
    return r;
}

FormalPowerSeries FormalPowerSeries::reciprocal() const {
    if (coeffs_[0] != ExactPolynomial::constant(ring_, 1))
        throw std::invalid_argument("reciprocal requires constant term 1");
    FormalPowerSeries r(ring_, var_, order_);
    r.coeffs_[0] = ExactPolynomial::constant(ring_, 1);
    for (int m = 1; m <= order_; ++m) {
        ExactPolynomial acc(ring_);
        for (int k = 1; k <= m; ++k) {
            if (coeffs_[k].is_zero() || r.coeffs_[m - k].is_zero()) continue;
            acc += (coeffs_[k] * r.coeffs_[m - k]) * binomial(m, k);
        }
        r.coeffs_[m] = -acc;
    }
    return r;
}

bool FormalPowerSeries::operator==(const FormalPowerSeries& o) const {
    if (var_ != o.var_ || order_ != o.order_ || !same_ring(ring_, o.ring_)) return false;
    return coeffs_ == o.coeffs_;
}

namespace {

JacobiSeries integrate_jacobi(const VariableSetPtr& ring, const ExactPolynomial& a2,
                              const ExactPolynomial& b2, int order) {
    FormalPowerSeries sn(ring, "u", order);
    FormalPowerSeries cn = FormalPowerSeries::constant(ring, "u", order,
                                                       ExactPolynomial::constant(ring, 1));
    FormalPowerSeries dn = cn;

    // March the coefficients of the ODE system upward: the (m+1)-st
    // factorial-scaled coefficient of f is the m-th of f'.
    for (int m = 0; m < order; ++m) {
        auto conv = [&](const FormalPowerSeries& f, const FormalPowerSeries& g) {
            ExactPolynomial acc(ring);
            for (int k = 0; k <= m; ++k) {
                if (f.coeff(k).is_zero() || g.coeff(m - k).is_zero()) continue;
                acc += (f.coeff(k) * g.coeff(m - k)) * binomial(m, k);
            }
            return acc;
        };
        ExactPolynomial sn_next = conv(cn, dn);
        ExactPolynomial cn_next = a2 * conv(sn, dn);
        ExactPolynomial dn_next = b2 * conv(sn, cn);
        sn.set_coeff(m + 1, std::move(sn_next));
        cn.set_coeff(m + 1, std::move(cn_next));
        dn.set_coeff(m + 1, std::move(dn_next));
    }
    return {std::move(sn), std::move(cn), std::move(dn)};
}

}  // namespace

JacobiSeries jacobi_two_param(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    auto ring = make_ring({"a2", "b2"});
    return integrate_jacobi(ring, ExactPolynomial::variable(ring, "a2"),
                            ExactPolynomial::variable(ring, "b2"), order);
}

JacobiSeries jacobi_classical(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    auto ring = make_ring({"k2"});
    return integrate_jacobi(ring, ExactPolynomial::constant(ring, -1),
                            -ExactPolynomial::variable(ring, "k2"), order);
}

BigInt JTable::j(int n, int two_i) const {
    if (n < 0 || two_i < 0 || two_i % 2 != 0) return 0;
    auto it = entries.find({n, two_i});
    return it == entries.end() ? BigInt(0) : it->second;
}

std::vector<ExactPolynomial> JTable::polynomials() const {
    auto ring = make_ring({"k2"});
    std::vector<ExactPolynomial> out(nmax + 1, ExactPolynomial::zero(ring));
    for (const auto& [key, v] : entries) {
        Monomial m(1);
        m.exp[0] = static_cast<unsigned>(key.second / 2);
        out[key.first].add_term(m, v);
    }
    return out;
}

JTable j_coefficients(int nmax) {
    if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
    JTable table;
    table.nmax = nmax;
    table.entries[{0, 0}] = 1;

    JacobiSeries js = jacobi_classical(nmax);
    auto read = [&](int n, const ExactPolynomial& coeff, int sign) {
        for (const auto& [m, c] : coeff.terms()) {
            BigInt v = sign > 0 ? c : -c;
            if (v != 0) table.entries[{n, 2 * static_cast<int>(m.exp[0])}] = v;
        }
    };
    for (int n = 1; n <= nmax; ++n) {
        int half = n / 2;
        int sign = half % 2 == 0 ? 1 : -1;
        read(n, n % 2 ? js.sn.coeff(n) : js.cn.coeff(n), sign);
    }
    return table;
}

VerificationReport verify_dumont_gf(int nmax) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = "dumont-gf";
    rep.range = "n <= " + std::to_string(nmax);

    JacobiSeries ab = jacobi_two_param(nmax);

    auto xyz = make_ring({"x", "y", "z"});
    auto x = ExactPolynomial::variable(xyz, "x");
    auto y = ExactPolynomial::variable(xyz, "y");
    auto z = ExactPolynomial::variable(xyz, "z");
    std::map<std::string, ExactPolynomial> bind{{"a2", y * y - x * x}, {"b2", z * z - x * x}};

    auto lift = [&](const FormalPowerSeries& f) {
        FormalPowerSeries out(xyz, "u", nmax);
        for (int m = 0; m <= nmax; ++m) out.set_coeff(m, f.coeff(m).substitute(bind));
        return out;
    };
    FormalPowerSeries sn = lift(ab.sn), cn = lift(ab.cn), dn = lift(ab.dn);

    FormalPowerSeries numerator = sn.scale(y * z) + (cn * dn).scale(x);
    FormalPowerSeries one =
        FormalPowerSeries::constant(xyz, "u", nmax, ExactPolynomial::constant(xyz, 1));
    FormalPowerSeries rhs = numerator * (one - (sn * sn).scale(x * x)).reciprocal();

    Grammar g = Grammar::schett();
    auto levels = iterate_levels({OperatorKind::D, g, x}, nmax);

    rep.pass = true;
    for (int n = 0; n <= nmax; ++n) {
        if (rhs.coeff(n) != levels[n]) {
            rep.pass = false;
            ExactPolynomial diff = rhs.coeff(n) - levels[n];
            rep.counterexample = "n=" + std::to_string(n) + " difference " + diff.to_string();
            break;
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_convolution(const Triangle& t_tri, const Triangle& s_tri, int nmax) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = "j-convolution";
    rep.range = "n <= " + std::to_string(nmax) + " (t-column convolutions included)";
    rep.pass = true;

    if (t_tri.nmax < 2 * nmax + 2 || s_tri.nmax < 2 * nmax)
        throw std::invalid_argument("triangles too shallow for the requested convolution range");

    JTable jt = j_coefficients(2 * nmax + 2);
    auto fail = [&](const std::string& what) {
        rep.pass = false;
        if (rep.counterexample.empty()) rep.counterexample = what;
    };

    for (int n = 0; n <= nmax && rep.pass; ++n) {
        for (int i = 0; i <= n; ++i) {
            // J_{2n+1,2n-2i} = sum_k C(2n,2k) sum_j J_{2k,2k-2j} J_{2n-2k,2i-2j}
            BigInt lhs = jt.j(2 * n + 1, 2 * n - 2 * i);
            BigInt rhs = 0;
            for (int k = 0; 2 * k <= 2 * n; ++k)
                for (int j = 0; j <= i; ++j)
                    rhs += binomial(2 * n, 2 * k) * jt.j(2 * k, 2 * k - 2 * j) *
                           jt.j(2 * n - 2 * k, 2 * i - 2 * j);
            if (lhs != rhs)
                fail("J odd case n=" + std::to_string(n) + " i=" + std::to_string(i));

            // J_{2n+2,2n-2i} = sum_k C(2n+1,2k+1) sum_j J_{2k+1,2k-2j} J_{2n-2k,2i-2j}
            lhs = jt.j(2 * n + 2, 2 * n - 2 * i);
            rhs = 0;
            for (int k = 0; 2 * k + 1 <= 2 * n + 1; ++k)
                for (int j = 0; j <= i; ++j)
                    rhs += binomial(2 * n + 1, 2 * k + 1) * jt.j(2 * k + 1, 2 * k - 2 * j) *
                           jt.j(2 * n - 2 * k, 2 * i - 2 * j);
            if (lhs != rhs)
                fail("J even case n=" + std::to_string(n) + " i=" + std::to_string(i));

            // t_{2n+1,i,0} = sum_k C(2n,2k) sum_j t_{2k,j,0} s_{2n-2k,i-j,0}
            lhs = t_tri.entry(2 * n + 1, i, 0);
            rhs = 0;
            for (int k = 0; 2 * k <= 2 * n; ++k)
                for (int j = 0; j <= i; ++j)
                    rhs += binomial(2 * n, 2 * k) * t_tri.entry(2 * k, j, 0) *
                           s_tri.entry(2 * n - 2 * k, i - j, 0);
            if (lhs != rhs)
                fail("t odd case n=" + std::to_string(n) + " i=" + std::to_string(i));

            // t_{2n+2,i+1,0} = sum_k C(2n+1,2k+1) sum_j t_{2k+1,j,0} s_{2n-2k,i-j,0}
            lhs = t_tri.entry(2 * n + 2, i + 1, 0);
            rhs = 0;
            for (int k = 0; 2 * k + 1 <= 2 * n + 1; ++k)
                for (int j = 0; j <= i; ++j)
                    rhs += binomial(2 * n + 1, 2 * k + 1) * t_tri.entry(2 * k + 1, j, 0) *
                           s_tri.entry(2 * n - 2 * k, i - j, 0);
            if (lhs != rhs)
                fail("t even case n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace dumont

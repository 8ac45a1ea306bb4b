#include "dumont/identities.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "dumont/numcheck.hpp"

namespace dumont {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const VariableSetPtr& xring() {
    static const VariableSetPtr r = make_ring({"x"});
    return r;
}

ExactPolynomial xconst(BigInt v) { return ExactPolynomial::constant(xring(), std::move(v)); }

ExactPolynomial xterm(BigInt c, unsigned e) {
    Monomial m(1);
    m.exp[0] = e;
    return ExactPolynomial::term(xring(), m, std::move(c));
}

ExactPolynomial from_coeffs(const std::vector<BigInt>& coeffs) {
    ExactPolynomial p(xring());
    for (std::size_t k = 0; k < coeffs.size(); ++k) p += xterm(coeffs[k], k);
    return p;
}

ExactPolynomial from_table(const DistributionTable& t) { return from_coeffs(t.coefficients()); }

ExactPolynomial one_plus_x_pow(unsigned k) {
    return (xconst(1) + xterm(1, 1)).pow(k);
}

ExactPolynomial one_minus_x_pow(unsigned k) {
    return (xconst(1) - xterm(1, 1)).pow(k);
}

BigInt pow2(unsigned k) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
    return r;
}

struct Checker {
    VerificationReport rep;
    Clock::time_point t0 = Clock::now();

    explicit Checker(std::string id) { rep.id = std::move(id); rep.pass = true; }

    void fail(const std::string& what) {
        if (rep.pass) {
            rep.pass = false;
            rep.counterexample = what;
        }
    }

    template <typename L, typename R>
    void expect_eq(const L& lhs, const R& rhs, const std::string& where) {
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << where << ": lhs=" << lhs << " rhs=" << rhs;
            fail(os.str());
        }
    }

    void expect_poly_eq(const ExactPolynomial& lhs, const ExactPolynomial& rhs,
                        const std::string& where) {
        if (lhs != rhs)
            fail(where + ": lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
    }

    VerificationReport done(std::string range) {
        rep.range = std::move(range);
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }
};

std::string ns(const BigInt& v) { return v.get_str(); }

}  // namespace

const Triangle& IdentityContext::triangle(ArrayName name, int nmax) {
    auto key = to_string(name);
    auto it = grammar_.find(key);
    if (it == grammar_.end() || it->second.nmax < nmax)
        it = grammar_.insert_or_assign(it == grammar_.end() ? grammar_.begin() : it, key,
                                       extract(name, nmax));
    return it->second;
}

const Triangle& IdentityContext::triangle_recur(ArrayName name, int nmax) {
    auto key = to_string(name);
    auto it = recur_.find(key);
    if (it == recur_.end() || it->second.nmax < nmax)
        it = recur_.insert_or_assign(it == recur_.end() ? recur_.begin() : it, key,
                                     recur(name, nmax));
    return it->second;
}

const DistributionTable& IdentityContext::stat(const std::string& key, int n) {
    auto k = std::make_pair(key, n);
    auto it = stats_.find(k);
    if (it != stats_.end()) return it->second;
    DistributionTable t;
    if (key == "interior-peaks") t = interior_peaks(n);
    else if (key == "left-peaks") t = left_peaks(n);
    else if (key == "descents") t = descents(n);
    else if (key == "descents-b") t = descents_type_b(n);
    else if (key == "alternating-runs") t = alternating_runs(n);
    else if (key == "updown-runs") t = up_down_runs(n);
    else if (key == "las") t = longest_alt_subseq(n);
    else if (key == "matchings") t = matchings_odd_smaller(n);
    else throw std::invalid_argument("unknown statistic key: " + key);
    return stats_.emplace(k, std::move(t)).first->second;
}

const BivariateTable& IdentityContext::cycle_peaks(int n) {
    auto it = cycle_.find(n);
    if (it != cycle_.end()) return it->second;
    return cycle_.emplace(n, cycle_peaks_xy(n)).first->second;
}

namespace {

// ---- mainthm01 -----------------------------------------------------------

VerificationReport mainthm01_i(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.i");
    const Triangle& a = ctx.triangle(ArrayName::a, nmax);
    for (int n = 1; n <= nmax; ++n)
        c.expect_eq(ns(a.total(n)), ns(double_factorial(2 * n - 1)), "n=" + std::to_string(n));
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport mainthm01_ii(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.ii");
    const Triangle& a = ctx.triangle(ArrayName::a, nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto rows = a.row_sums(n);
        const auto& match = ctx.stat("matchings", n);
        for (int i = 0; i <= n; ++i) {
            BigInt lhs = rows.count(i) ? rows[i] : BigInt(0);
            c.expect_eq(ns(lhs), ns(match.at(n - i)),
                        "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return c.done("n <= " + std::to_string(nmax));
}

// Fixed-column and antidiagonal slices against the left-peak polynomials.
// The printed statement sums over a dummy index absent from the summand;
// both readings that make it well-posed are checked.
VerificationReport mainthm01_iii(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.iii");
    const Triangle& a = ctx.triangle(ArrayName::a, nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto expect = ctx.stat("left-peaks", n).coefficients();
        c.expect_poly_eq(from_coeffs(a.fixed_column_poly(n, n / 2)), from_coeffs(expect),
                         "fixed column, n=" + std::to_string(n));
        c.expect_poly_eq(from_coeffs(a.antidiagonal_poly(n, n / 2)), from_coeffs(expect),
                         "antidiagonal, n=" + std::to_string(n));
    }
    c.rep.note = "summation dummy read as i; fixed-column and antidiagonal readings both hold";
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport mainthm01_iv(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.iv");
    const Triangle& tr = ctx.triangle(ArrayName::c, nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto rows = tr.row_sums(n);
        const auto& eul = ctx.stat("descents", n);
        for (int i = 0; i <= n; ++i) {
            BigInt lhs = rows.count(i) ? rows[i] : BigInt(0);
            c.expect_eq(ns(lhs), ns(eul.at(i) * pow2(n)),
                        "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport mainthm01_v(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.v");
    int bound = std::min(nmax, ctx.config().bn_max);
    const Triangle& d = ctx.triangle(ArrayName::d, bound);
    for (int n = 1; n <= bound; ++n) {
        auto rows = d.row_sums(n);
        const auto& bn = ctx.stat("descents-b", n);
        for (int i = 0; i <= n; ++i) {
            BigInt lhs = rows.count(i) ? rows[i] : BigInt(0);
            c.expect_eq(ns(lhs), ns(bn.at(i)),
                        "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return c.done("n <= " + std::to_string(bound) + " (signed-permutation enumeration bound)");
}

VerificationReport mainthm01_vi(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.vi");
    const Triangle& tr = ctx.triangle(ArrayName::c, nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto expect = ctx.stat("interior-peaks", n + 1).coefficients();
        c.expect_poly_eq(from_coeffs(tr.fixed_column_poly(n, n / 2)), from_coeffs(expect),
                         "fixed column, n=" + std::to_string(n));
        c.expect_poly_eq(from_coeffs(tr.antidiagonal_poly(n, n / 2)), from_coeffs(expect),
                         "antidiagonal, n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

// Column j=0 with reversed coefficients: odd level m gives P_{m+1}, even
// level m gives P_m.
VerificationReport mainthm01_vii(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.vii");
    const Triangle& tr = ctx.triangle(ArrayName::c, nmax);
    for (int m = 1; m <= nmax; ++m) {
        std::vector<BigInt> rev(m, BigInt(0));
        for (int i = 0; i < m; ++i) rev[m - 1 - i] = tr.entry(m, i, 0);
        auto expect = ctx.stat("interior-peaks", m % 2 ? m + 1 : m).coefficients();
        c.expect_poly_eq(from_coeffs(rev), from_coeffs(expect), "level " + std::to_string(m));
    }
    return c.done("levels <= " + std::to_string(nmax));
}

VerificationReport mainthm01_viii(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.viii");
    int bound = nmax;
    const Triangle& d = ctx.triangle(ArrayName::d, bound);
    for (int n = 1; n <= bound; ++n) {
        int jc = (n + 1) / 2;
        c.expect_poly_eq(from_coeffs(d.fixed_column_poly(n, jc)),
                         from_table(ctx.stat("left-peaks", n)),
                         "fixed column, n=" + std::to_string(n));
        c.expect_poly_eq(from_coeffs(d.antidiagonal_poly(n, jc)),
                         from_table(ctx.stat("left-peaks", n + 1)),
                         "antidiagonal, n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(bound));
}

VerificationReport mainthm01_ix(IdentityContext& ctx, int nmax) {
    Checker c("mainthm01.ix");
    const Triangle& d = ctx.triangle(ArrayName::d, nmax);
    for (int m = 2; m <= nmax; ++m) {
        std::vector<BigInt> rev(m + 1, BigInt(0));
        for (int i = 0; i <= m; ++i) rev[m - i] = d.entry(m, i, 0);
        auto expect = ctx.stat("left-peaks", m % 2 ? m : m + 1).coefficients();
        c.expect_poly_eq(from_coeffs(rev), from_coeffs(expect), "level " + std::to_string(m));
    }
    return c.done("levels 2.." + std::to_string(nmax));
}

// ---- Concludingremarks:01 -------------------------------------------------

VerificationReport concl01_i(IdentityContext& ctx, int nmax) {
    Checker c("concl01.i");
    const Triangle& b = ctx.triangle(ArrayName::b, nmax);
    for (int n = 1; n <= nmax; ++n)
        c.expect_eq(ns(b.total(n)), ns(double_factorial(2 * n - 1)), "n=" + std::to_string(n));
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport concl01_ii(IdentityContext& ctx, int nmax) {
    Checker c("concl01.ii");
    int bound = std::min(nmax, ctx.config().matching_max);
    const Triangle& b = ctx.triangle(ArrayName::b, bound);
    for (int n = 1; n <= bound; ++n) {
        auto rows = b.row_sums(n);
        const auto& match = ctx.stat("matchings", n);
        for (int i = 0; i <= n; ++i) {
            BigInt lhs = rows.count(i) ? rows[i] : BigInt(0);
            c.expect_eq(ns(lhs), ns(match.at(i + 1)),
                        "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return c.done("n <= " + std::to_string(bound) + " (matching enumeration bound)");
}

VerificationReport concl01_iii(IdentityContext& ctx, int nmax) {
    Checker c("concl01.iii");
    const Triangle& b = ctx.triangle(ArrayName::b, nmax);
    bool all_even = true;
    for (int n = 1; n <= nmax; ++n) {
        c.expect_poly_eq(from_coeffs(b.fixed_column_poly(n, n / 2)),
                         from_table(ctx.stat("interior-peaks", n)),
                         "fixed column, n=" + std::to_string(n));
        // antidiagonal equals P_{n+1}/2; compared with denominators cleared
        auto next = ctx.stat("interior-peaks", n + 1);
        for (const auto& [k, v] : next.counts)
            if (v % 2 != 0) all_even = false;
        c.expect_poly_eq(from_coeffs(b.antidiagonal_poly(n, n / 2)) * BigInt(2),
                         from_table(next), "antidiagonal (doubled), n=" + std::to_string(n));
    }
    c.rep.note = all_even ? "all interior-peak polynomials involved have even coefficients"
                          : "odd coefficient found in an interior-peak polynomial";
    return c.done("n <= " + std::to_string(nmax));
}

// ---- mainthm02 -------------------------------------------------------------

VerificationReport mainthm02_i(IdentityContext& ctx, int nmax) {
    Checker c("mainthm02.i");
    const Triangle& t = ctx.triangle(ArrayName::t, nmax);
    const Triangle& r = ctx.triangle(ArrayName::r, nmax);
    for (int n = 1; n <= nmax; ++n) {
        c.expect_eq(ns(t.total(n)), ns(factorial(n)), "t total, n=" + std::to_string(n));
        c.expect_eq(ns(r.total(n - 1)), ns(factorial(n)), "r total, n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport mainthm02_ii(IdentityContext& ctx, int nmax) {
    Checker c("mainthm02.ii");
    const Triangle& t = ctx.triangle(ArrayName::t, nmax);
    for (int n = 1; n <= nmax; ++n) {
        const auto& las = ctx.stat("las", n);
        const auto& runs = ctx.stat("updown-runs", n);
        if (las.counts != runs.counts)
            c.fail("subsequence-DP and up-down-runs tables differ at n=" + std::to_string(n));
        auto cols = t.col_sums(n);
        for (int j = 0; j <= n; ++j) {
            BigInt lhs = cols.count(j) ? cols[j] : BigInt(0);
            c.expect_eq(ns(lhs), ns(las.at(n - j)),
                        "vs subsequence table, n=" + std::to_string(n) + " j=" + std::to_string(j));
            c.expect_eq(ns(lhs), ns(runs.at(n - j)),
                        "vs up-down-runs table, n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
    c.rep.note = "checked against both statistics; their tables agree entrywise";
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport mainthm02_iii(IdentityContext& ctx, int nmax) {
    Checker c("mainthm02.iii");
    const Triangle& t = ctx.triangle(ArrayName::t, nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto rows = t.row_sums(n);
        const auto& lp = ctx.stat("left-peaks", n);
        for (int i = 0; i <= n; ++i) {
            BigInt lhs = rows.count(i) ? rows[i] : BigInt(0);
            c.expect_eq(ns(lhs), ns(lp.at(n / 2 - i)),
                        "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport mainthm02_iv(IdentityContext& ctx, int nmax) {
    Checker c("mainthm02.iv");
    const Triangle& r = ctx.triangle(ArrayName::r, nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto cols = r.col_sums(n);
        const auto& runs = ctx.stat("alternating-runs", n + 1);
        for (int j = 0; j <= n; ++j) {
            BigInt lhs = cols.count(j) ? cols[j] : BigInt(0);
            c.expect_eq(ns(lhs), ns(runs.at(n - j)),
                        "n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport mainthm02_v(IdentityContext& ctx, int nmax) {
    Checker c("mainthm02.v");
    const Triangle& r = ctx.triangle(ArrayName::r, nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto rows = r.row_sums(n);
        const auto& ip = ctx.stat("interior-peaks", n + 1);
        for (int i = 0; i <= n; ++i) {
            BigInt lhs = rows.count(i) ? rows[i] : BigInt(0);
            c.expect_eq(ns(lhs), ns(ip.at(n / 2 - i)),
                        "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return c.done("n <= " + std::to_string(nmax));
}

// ---- polynomial identities --------------------------------------------------

VerificationReport stembridge(IdentityContext& ctx, int nmax) {
    Checker c("stembridge");
    for (int n = 1; n <= nmax; ++n) {
        auto peaks = ctx.stat("interior-peaks", n).coefficients();
        ExactPolynomial lhs(xring());
        for (std::size_t k = 0; k < peaks.size(); ++k)
            lhs += xterm(peaks[k], k) * xconst(BigInt(1) << (2 * k)) *
                   one_plus_x_pow(n - 1 - 2 * k);
        ExactPolynomial rhs = from_table(ctx.stat("descents", n)) * pow2(n - 1);
        c.expect_poly_eq(lhs, rhs, "n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport petersen(IdentityContext& ctx, int nmax) {
    Checker c("petersen");
    for (int n = 1; n <= nmax; ++n) {
        auto lp = ctx.stat("left-peaks", n).coefficients();
        ExactPolynomial lhs(xring());
        for (std::size_t k = 0; k < lp.size(); ++k)
            lhs += xterm(lp[k], k) * xconst(BigInt(1) << (2 * k)) * one_plus_x_pow(n - 2 * k);
        ExactPolynomial rhs = one_minus_x_pow(n);
        for (int i = 1; i <= n; ++i)
            rhs += one_minus_x_pow(n - i) * xterm(binomial(n, i) * pow2(i), 1) *
                   from_table(ctx.stat("descents", i));
        c.expect_poly_eq(lhs, rhs, "n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport type_b(IdentityContext& ctx, int nmax) {
    Checker c("typeB");
    for (int n = 1; n <= nmax; ++n) {
        auto lp = ctx.stat("left-peaks", n).coefficients();
        ExactPolynomial lhs(xring());
        for (std::size_t k = 0; k < lp.size(); ++k)
            lhs += xterm(lp[k], k) * xconst(BigInt(1) << (2 * k)) * one_plus_x_pow(n - 2 * k);
        c.expect_poly_eq(lhs, from_table(ctx.stat("descents-b", n)), "n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport runs_peaks(IdentityContext& ctx, int nmax) {
    Checker c("runs-peaks");
    for (int n = 2; n <= nmax; ++n) {
        ExactPolynomial lhs = from_table(ctx.stat("alternating-runs", n)) * pow2(n - 2);
        auto peaks = ctx.stat("interior-peaks", n).coefficients();
        ExactPolynomial sum(xring());
        for (std::size_t k = 0; k < peaks.size(); ++k)
            sum += xterm(peaks[k], k) * xconst(BigInt(1) << k) * one_plus_x_pow(n - 2 - k);
        c.expect_poly_eq(lhs, xterm(1, 1) * sum, "n=" + std::to_string(n));
    }
    return c.done("2 <= n <= " + std::to_string(nmax));
}

VerificationReport ema_convolution(IdentityContext& ctx, int nmax) {
    Checker c("eulerian-matching-convolution");
    bool literal_ok = true, shifted_ok = true;
    std::string literal_ce;
    for (int n = 1; n <= nmax; ++n) {
        ExactPolynomial lhs = from_table(ctx.stat("descents", n)) * pow2(n);
        ExactPolynomial rhs(xring());
        for (int k = 0; k <= n; ++k)
            rhs += from_table(ctx.stat("matchings", k)) *
                   from_table(ctx.stat("matchings", n - k)) * binomial(n, k);
        if (lhs != rhs && literal_ok) {
            literal_ok = false;
            literal_ce = "n=" + std::to_string(n) + ": lhs=" + lhs.to_string() +
                         " rhs=" + rhs.to_string();
        }
        if (xterm(1, 1) * lhs != rhs) shifted_ok = false;
    }
    if (literal_ok) {
        c.rep.note = "printed form validated";
    } else if (shifted_ok) {
        // The source of the display uses the x^(des+1) Eulerian convention;
        // with this paper's A_n = sum x^des the right side is x * 2^n A_n.
        c.rep.note = "printed form failed (" + literal_ce +
                     "); holds with the shifted Eulerian convention x*2^n*A_n(x)";
    } else {
        c.fail(literal_ce);
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport recurrence_p(IdentityContext& ctx, int nmax) {
    Checker c("recurrences.P");
    auto x = xterm(1, 1);
    for (int n = 1; n <= nmax; ++n) {
        ExactPolynomial pn = from_table(ctx.stat("interior-peaks", n));
        ExactPolynomial rhs = (x * BigInt(n - 1) + xconst(2)) * pn +
                              (x * BigInt(2) - x * x * BigInt(2)) * pn.partial_derivative("x");
        c.expect_poly_eq(from_table(ctx.stat("interior-peaks", n + 1)), rhs,
                         "n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport recurrence_ptilde(IdentityContext& ctx, int nmax) {
    Checker c("recurrences.Ptilde");
    auto x = xterm(1, 1);
    for (int n = 1; n <= nmax; ++n) {
        ExactPolynomial pn = from_table(ctx.stat("left-peaks", n));
        ExactPolynomial rhs = (x * BigInt(n) + xconst(1)) * pn +
                              (x * BigInt(2) - x * x * BigInt(2)) * pn.partial_derivative("x");
        c.expect_poly_eq(from_table(ctx.stat("left-peaks", n + 1)), rhs,
                         "n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport recurrence_n(IdentityContext& ctx, int nmax) {
    Checker c("recurrences.N");
    auto x = xterm(1, 1);
    for (int n = 0; n <= nmax; ++n) {
        ExactPolynomial nn = from_table(ctx.stat("matchings", n));
        ExactPolynomial rhs = x * BigInt(2 * n + 1) * nn +
                              (x * BigInt(2) - x * x * BigInt(2)) * nn.partial_derivative("x");
        c.expect_poly_eq(from_table(ctx.stat("matchings", n + 1)), rhs,
                         "n=" + std::to_string(n));
    }
    return c.done("n <= " + std::to_string(nmax));
}

// ---- series-driven cases ----------------------------------------------------

VerificationReport jacobi_tnij(IdentityContext& ctx, int nmax) {
    Checker c("jacobi-tnij");
    const Triangle& t = ctx.triangle(ArrayName::t, nmax);
    JTable jt = j_coefficients(nmax);
    for (int n = 1; n <= nmax; ++n)
        for (int i = 0; i <= n; ++i) {
            BigInt tv = n / 2 - i >= 0 ? t.entry(n, n / 2 - i, 0) : BigInt(0);
            c.expect_eq(ns(jt.j(n, 2 * i)), ns(tv),
                        "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    // boundary column of the s triangle against the same J-coefficients
    int s_even = 5, s_odd = 4;
    const Triangle& s = ctx.triangle(ArrayName::s, 2 * s_even);
    for (int n = 1; n <= s_even; ++n)
        for (int i = 0; i <= n; ++i)
            c.expect_eq(ns(s.entry(2 * n, i, 0)), ns(jt.j(2 * n, 2 * i)),
                        "s even, n=" + std::to_string(n) + " i=" + std::to_string(i));
    for (int n = 0; n <= s_odd; ++n)
        for (int i = 0; i <= n + 1; ++i)
            c.expect_eq(ns(s.entry(2 * n + 1, i, 0)), ns(jt.j(2 * n + 2, 2 * i)),
                        "s odd, n=" + std::to_string(n) + " i=" + std::to_string(i));
    c.rep.note = "includes the boundary identities s(2n,i,0)=J(2n,2i) (n<=5) and "
                 "s(2n+1,i,0)=J(2n+2,2i) (2n+1<=9)";
    return c.done("n <= " + std::to_string(nmax));
}

VerificationReport j_convolution_case(IdentityContext& ctx, int nmax) {
    const Triangle& t = ctx.triangle(ArrayName::t, 2 * nmax + 2);
    const Triangle& s = ctx.triangle(ArrayName::s, 2 * nmax);
    return verify_convolution(t, s, nmax);
}

VerificationReport conjecture(IdentityContext& ctx, int nmax) {
    Checker c("conjecture");
    const Triangle& s = ctx.triangle(ArrayName::s, nmax);
    const Triangle& t = ctx.triangle(ArrayName::t, nmax);
    for (int m = 0; m <= nmax; ++m) {
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= m; ++j) {
                BigInt lhs = s.entry(m, j, i);  // s~(m,i,j) = s(m,j,i)
                BigInt rhs;
                if (m % 2 == 1)
                    rhs = j == 0 ? t.entry(m, i, 0)
                                 : t.entry(m, i, 2 * j - 1) + t.entry(m, i, 2 * j);
                else
                    rhs = t.entry(m, i, 2 * j) + t.entry(m, i, 2 * j + 1);
                if (lhs != rhs) {
                    c.fail("(n,i,j)=(" + std::to_string(m) + "," + std::to_string(i) + "," +
                           std::to_string(j) + ") lhs=" + ns(lhs) + " rhs=" + ns(rhs));
                }
            }
        }
    }
    return c.done("n <= " + std::to_string(nmax));
}

struct CaseSpec {
    std::string id;
    int default_nmax;
    int hard_cap;
    std::function<VerificationReport(IdentityContext&, int)> run;
};

std::vector<CaseSpec> build_cases() {
    std::vector<CaseSpec> v;
    v.push_back({"mainthm01.i", 9, 64, mainthm01_i});
    v.push_back({"mainthm01.ii", 9, 9, mainthm01_ii});
    v.push_back({"mainthm01.iii", 9, 9, mainthm01_iii});
    v.push_back({"mainthm01.iv", 9, 10, mainthm01_iv});
    v.push_back({"mainthm01.v", 9, 9, mainthm01_v});
    v.push_back({"mainthm01.vi", 9, 9, mainthm01_vi});
    v.push_back({"mainthm01.vii", 9, 9, mainthm01_vii});
    v.push_back({"mainthm01.viii", 9, 9, mainthm01_viii});
    v.push_back({"mainthm01.ix", 9, 9, mainthm01_ix});
    v.push_back({"concl01.i", 9, 64, concl01_i});
    v.push_back({"concl01.ii", 9, 9, concl01_ii});
    v.push_back({"concl01.iii", 9, 9, concl01_iii});
    v.push_back({"mainthm02.i", 9, 10, mainthm02_i});
    v.push_back({"mainthm02.ii", 9, 10, mainthm02_ii});
    v.push_back({"mainthm02.iii", 9, 10, mainthm02_iii});
    v.push_back({"mainthm02.iv", 9, 9, mainthm02_iv});
    v.push_back({"mainthm02.v", 9, 9, mainthm02_v});
    v.push_back({"stembridge", 9, 10, stembridge});
    v.push_back({"petersen", 9, 10, petersen});
    v.push_back({"typeB", 9, 9, type_b});
    v.push_back({"runs-peaks", 9, 10, runs_peaks});
    v.push_back({"eulerian-matching-convolution", 9, 9, ema_convolution});
    v.push_back({"recurrences.P", 9, 9, recurrence_p});
    v.push_back({"recurrences.Ptilde", 9, 9, recurrence_ptilde});
    v.push_back({"recurrences.N", 8, 8, recurrence_n});
    v.push_back({"jacobi-tnij", 12, 20, jacobi_tnij});
    v.push_back({"j-convolution", 5, 8, j_convolution_case});
    v.push_back({"dumont-gf", 10, 16,
                 [](IdentityContext&, int n) { return verify_dumont_gf(n); }});
    v.push_back({"conjecture", 9, 14, conjecture});
    return v;
}

const std::vector<CaseSpec>& cases() {
    static const std::vector<CaseSpec> v = build_cases();
    return v;
}

}  // namespace

std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const auto& c : cases()) ids.push_back(c.id);
    for (const auto& id : closed_form_ids()) ids.push_back(id);
    return ids;
}

std::vector<VerificationReport> run_identity(const std::string& id, IdentityContext& ctx,
                                             std::optional<int> nmax) {
    for (const auto& c : cases()) {
        if (c.id != id) continue;
        int n = std::min(nmax.value_or(c.default_nmax), c.hard_cap);
        return {c.run(ctx, n)};
    }
    for (const auto& cf : closed_form_ids()) {
        if (cf != id) continue;
        const RunConfig& cfg = ctx.config();
        const Triangle* tr = nullptr;
        if (closed_form_needs_triangle(id))
            tr = &ctx.triangle(closed_form_array(id), cfg.egf_order + 2);
        int samples = std::max(cfg.samples, 5);
        return {compare_closed_form(id, tr, cfg.egf_order, samples, cfg.tol, cfg.seed,
                                    cfg.rk_steps)};
    }
    throw std::invalid_argument("unknown identity id: " + id);
}

std::vector<VerificationReport> run_all_identities(IdentityContext& ctx,
                                                   std::optional<int> nmax) {
    std::vector<VerificationReport> out;
    for (const auto& id : identity_ids())
        for (auto& r : run_identity(id, ctx, nmax)) out.push_back(std::move(r));
    return out;
}

namespace {

std::vector<VerificationReport> run_group(IdentityContext& ctx, int nmax,
                                          const std::vector<std::string>& ids) {
    std::vector<VerificationReport> out;
    for (const auto& id : ids)
        for (auto& r : run_identity(id, ctx, nmax)) out.push_back(std::move(r));
    return out;
}

}  // namespace

std::vector<VerificationReport> check_mainthm01(IdentityContext& ctx, int nmax) {
    return run_group(ctx, nmax,
                     {"mainthm01.i", "mainthm01.ii", "mainthm01.iii", "mainthm01.iv",
                      "mainthm01.v", "mainthm01.vi", "mainthm01.vii", "mainthm01.viii",
                      "mainthm01.ix"});
}

std::vector<VerificationReport> check_concluding01(IdentityContext& ctx, int nmax) {
    return run_group(ctx, nmax, {"concl01.i", "concl01.ii", "concl01.iii"});
}

std::vector<VerificationReport> check_mainthm02(IdentityContext& ctx, int nmax) {
    return run_group(ctx, nmax,
                     {"mainthm02.i", "mainthm02.ii", "mainthm02.iii", "mainthm02.iv",
                      "mainthm02.v"});
}

std::vector<VerificationReport> check_polynomial_identities(IdentityContext& ctx, int nmax) {
    return run_group(ctx, nmax,
                     {"stembridge", "petersen", "typeB", "runs-peaks",
                      "eulerian-matching-convolution", "recurrences.P", "recurrences.Ptilde",
                      "recurrences.N"});
}

VerificationReport check_conjecture(IdentityContext& ctx, int nmax) {
    return run_identity("conjecture", ctx, nmax).front();
}

VerificationReport check_cross_method(IdentityContext& ctx, int nmax) {
    Checker c("cross-method");
    for (auto name : {ArrayName::s, ArrayName::a, ArrayName::b, ArrayName::c, ArrayName::d,
                      ArrayName::t, ArrayName::r}) {
        const Triangle& g = ctx.triangle(name, nmax);
        const Triangle& r = ctx.triangle_recur(name, nmax);
        for (const auto& [k, v] : g.entries) {
            if (k[0] > nmax) continue;
            if (r.entry(k[0], k[1], k[2]) != v)
                c.fail("array " + to_string(name) + " (" + std::to_string(k[0]) + "," +
                       std::to_string(k[1]) + "," + std::to_string(k[2]) + "): grammar=" +
                       ns(v) + " recurrence=" + ns(r.entry(k[0], k[1], k[2])));
        }
        for (const auto& [k, v] : r.entries) {
            if (k[0] > nmax) continue;
            if (g.entry(k[0], k[1], k[2]) != v)
                c.fail("array " + to_string(name) + " (" + std::to_string(k[0]) + "," +
                       std::to_string(k[1]) + "," + std::to_string(k[2]) + "): recurrence=" +
                       ns(v) + " grammar=" + ns(g.entry(k[0], k[1], k[2])));
        }
    }
    return c.done("all arrays, n <= " + std::to_string(nmax));
}

}  // namespace dumont

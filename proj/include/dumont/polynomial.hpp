#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dumont/bigint.hpp"
#include "dumont/variable_set.hpp"

#include "json.hpp"

namespace dumont {

// Exponent vector; one entry per ring variable, all positions explicit.
struct Monomial {
    std::vector<unsigned> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> e) : exp(std::move(e)) {}

    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exp) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// Display / storage order: graded, higher total degree first, ties broken
// lexicographically (larger exponent vector first). Chosen for stable
// golden files; any fixed total order would do.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.exp > b.exp;
    }
};

// Sparse multivariate polynomial with exact integer coefficients over a
// declared variable set. Canonical form: no stored coefficient is zero, so
// structural equality of the term maps is polynomial equality.
class ExactPolynomial {
public:
    using TermMap = std::map<Monomial, BigInt, MonomialOrder>;

    explicit ExactPolynomial(VariableSetPtr ring) : ring_(std::move(ring)) {}

    static ExactPolynomial zero(VariableSetPtr ring) { return ExactPolynomial(std::move(ring)); }
    static ExactPolynomial constant(VariableSetPtr ring, BigInt c);
    static ExactPolynomial variable(VariableSetPtr ring, std::string_view name);
    static ExactPolynomial term(VariableSetPtr ring, Monomial m, BigInt c);

    const VariableSetPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    unsigned total_degree() const;  // 0 for the zero polynomial
    bool is_homogeneous(unsigned degree) const;

    BigInt coefficient(const Monomial& m) const;
    // Sum of |coefficients|; handy for truncation bounds.
    BigInt coefficient_norm() const;

    void add_term(const Monomial& m, const BigInt& c);

    ExactPolynomial operator-() const;
    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial& operator+=(const ExactPolynomial& o);
    ExactPolynomial& operator-=(const ExactPolynomial& o);
    ExactPolynomial operator*(const BigInt& c) const;
    ExactPolynomial pow(unsigned e) const;

    bool operator==(const ExactPolynomial& o) const;
    bool operator!=(const ExactPolynomial& o) const { return !(*this == o); }

    ExactPolynomial partial_derivative(std::string_view var) const;

    // Simultaneous substitution. Every bound variable must exist in this
    // ring; all images must share one ring, which becomes the result ring
    // and must contain any unbound variables.
    ExactPolynomial substitute(const std::map<std::string, ExactPolynomial>& bindings) const;

    std::complex<double> eval_complex(const std::map<std::string, std::complex<double>>& point) const;

    std::string to_string() const;
    static ExactPolynomial parse(VariableSetPtr ring, std::string_view text);

    nlohmann::json to_json() const;
    static ExactPolynomial from_json(VariableSetPtr ring, const nlohmann::json& j);

private:
    void check_same_ring(const ExactPolynomial& o) const;

    VariableSetPtr ring_;
    TermMap terms_;
};

inline ExactPolynomial operator*(const BigInt& c, const ExactPolynomial& p) { return p * c; }

}  // namespace dumont

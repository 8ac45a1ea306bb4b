#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dumont/grammar.hpp"
#include "dumont/polynomial.hpp"

#include "json.hpp"

namespace dumont {

enum class ArrayName { s, a, b, c, d, t, r };

ArrayName array_name_from_string(std::string_view s);
std::string to_string(ArrayName n);

// Three-index integer array {(n,i,j) -> value}. Indices outside the stored
// region are zero. `provenance` records how it was produced.
struct Triangle {
    std::string name;
    int nmax = 0;
    std::string provenance;
    std::map<std::array<int, 3>, BigInt> entries;

    const BigInt& entry(int n, int i, int j) const;
    void set(int n, int i, int j, BigInt v);

    BigInt total(int n) const;
    std::map<int, BigInt> row_sums(int n) const;  // i -> sum over j
    std::map<int, BigInt> col_sums(int n) const;  // j -> sum over i

    // Coefficient lists in x^i.
    std::vector<BigInt> fixed_column_poly(int n, int j0) const;    // sum_i entry(n,i,j0) x^i
    std::vector<BigInt> antidiagonal_poly(int n, int j0) const;    // sum_i entry(n,i,j0-i) x^i

    ExactPolynomial generating_polynomial(int n) const;  // sum entry(n,i,j) p^i q^j

    bool same_entries(const Triangle& o) const { return entries == o.entries; }

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// The defining operator of each array: which grammar, which composite
// operator, which seed.
OperatorSpec operator_for(ArrayName name);

// Build the triangle by iterating the operator and matching every monomial
// against the array's parity pattern. A monomial that fails the pattern is
// a hard error naming the level and the monomial.
Triangle extract(ArrayName name, int nmax);

// Matches one already-derived level against the pattern (used by extract;
// exposed so property tests can drive it to higher levels cheaply).
std::map<std::pair<int, int>, BigInt> match_level(ArrayName name, int n,
                                                  const ExactPolynomial& derived);

// Build the triangle from the recurrence relations with hard-coded base
// rows; fully independent of the grammar path.
Triangle recur(ArrayName name, int nmax);

}  // namespace dumont

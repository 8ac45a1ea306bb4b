#pragma once

#include <map>
#include <string>
#include <vector>

#include "dumont/polynomial.hpp"

namespace dumont {

// A context-free grammar in Chen's sense: a substitution rule per variable.
// The induced formal derivative extends the rules by linearity and the
// Leibniz rule. Variables without a rule derive to zero.
class Grammar {
public:
    Grammar(VariableSetPtr ring, std::map<std::string, ExactPolynomial> rules);

    // Parses literals such as "x->y*z; y->x*z; z->x*y".
    static Grammar parse(VariableSetPtr ring, std::string_view text);

    // D(x)=yz, D(y)=xz, D(z)=xy over ring (x,y,z).
    static Grammar schett();
    // {w->wx, x->yz, y->xz, z->xy} over ring (w,x,y,z).
    static Grammar schett_extended();
    // {w->wx, x->wx} over ring (w,x).
    static Grammar eulerian();

    const VariableSetPtr& ring() const { return ring_; }
    ExactPolynomial derive(const ExactPolynomial& a) const;

    std::string to_string() const;

private:
    VariableSetPtr ring_;
    std::vector<ExactPolynomial> rules_;  // rule image per variable; zero when absent
};

enum class OperatorKind { D, XD, DX };

OperatorKind operator_kind_from_string(std::string_view s);
std::string to_string(OperatorKind k);

// One derivation operator: plain D, a |-> x*D(a), or a |-> D(x*a).
struct OperatorSpec {
    OperatorKind kind;
    Grammar grammar;
    ExactPolynomial seed;
};

ExactPolynomial apply_operator(const OperatorSpec& op, const ExactPolynomial& a);

// Levels 0..n of the iterated operator; level 0 is the seed. The whole
// sequence is returned because triangle extraction needs every level.
std::vector<ExactPolynomial> iterate_levels(const OperatorSpec& op, int n);

ExactPolynomial iterate(const OperatorSpec& op, int n);

// D^n(w) for the grammar {w->wx, x->wx}; compared against the Eulerian
// distribution from brute-force descent counts.
ExactPolynomial eulerian_sanity(int n);

}  // namespace dumont

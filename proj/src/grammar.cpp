#include "dumont/grammar.hpp"

#include <sstream>
#include <stdexcept>

namespace dumont {

Grammar::Grammar(VariableSetPtr ring, std::map<std::string, ExactPolynomial> rules)
    : ring_(std::move(ring)) {
    rules_.assign(ring_->size(), ExactPolynomial::zero(ring_));
    for (auto& [name, image] : rules) {
        std::size_t idx = ring_->require(name);
        if (!same_ring(image.ring(), ring_))
            throw std::invalid_argument("rule image for '" + name + "' lives in a different ring");
        rules_[idx] = std::move(image);
    }
}

Grammar Grammar::parse(VariableSetPtr ring, std::string_view text) {
    std::map<std::string, ExactPolynomial> rules;
    std::string spec(text);
    std::istringstream in(spec);
    std::string clause;
    while (std::getline(in, clause, ';')) {
        if (clause.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto arrow = clause.find("->");
        if (arrow == std::string::npos)
            throw std::invalid_argument("grammar clause missing '->': " + clause);
        std::string lhs = clause.substr(0, arrow);
        std::string rhs = clause.substr(arrow + 2);
        lhs.erase(0, lhs.find_first_not_of(" \t\r\n"));
        lhs.erase(lhs.find_last_not_of(" \t\r\n") + 1);
        if (rules.count(lhs)) throw std::invalid_argument("duplicate rule for '" + lhs + "'");
        rules.emplace(lhs, ExactPolynomial::parse(ring, rhs));
    }
    return Grammar(std::move(ring), std::move(rules));
}

Grammar Grammar::schett() {
    auto ring = make_ring({"x", "y", "z"});
    return parse(ring, "x->y*z; y->x*z; z->x*y");
}

Grammar Grammar::schett_extended() {
    auto ring = make_ring({"w", "x", "y", "z"});
    return parse(ring, "w->w*x; x->y*z; y->x*z; z->x*y");
}

Grammar Grammar::eulerian() {
    auto ring = make_ring({"w", "x"});
    return parse(ring, "w->w*x; x->w*x");
}

ExactPolynomial Grammar::derive(const ExactPolynomial& a) const {
    if (!same_ring(a.ring(), ring_))
        throw std::invalid_argument("derive: polynomial ring differs from grammar ring");
    const std::size_t nv = ring_->size();
    ExactPolynomial out(ring_);
    // Leibniz over each monomial: D(c*prod v^e) = c*sum_i e_i v^(e_i-1) D(v_i) * rest.
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < nv; ++i) {
            if (m.exp[i] == 0 || rules_[i].is_zero()) continue;
            Monomial rest = m;
            rest.exp[i] -= 1;
            BigInt scale = c * BigInt(m.exp[i]);
            for (const auto& [rm, rc] : rules_[i].terms()) {
                Monomial prod = rest;
                for (std::size_t k = 0; k < nv; ++k) prod.exp[k] += rm.exp[k];
                out.add_term(prod, scale * rc);
            }
        }
    }
    return out;
}

std::string Grammar::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        if (rules_[i].is_zero()) continue;
        if (!first) out << "; ";
        out << ring_->name(i) << "->" << rules_[i].to_string();
        first = false;
    }
    return out.str();
}

OperatorKind operator_kind_from_string(std::string_view s) {
    if (s == "D") return OperatorKind::D;
    if (s == "xD") return OperatorKind::XD;
    if (s == "Dx") return OperatorKind::DX;
    throw std::invalid_argument("unknown operator kind: " + std::string(s));
}

std::string to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::D: return "D";
        case OperatorKind::XD: return "xD";
        case OperatorKind::DX: return "Dx";
    }
    return "?";
}

ExactPolynomial apply_operator(const OperatorSpec& op, const ExactPolynomial& a) {
    switch (op.kind) {
        case OperatorKind::D:
            return op.grammar.derive(a);
        case OperatorKind::XD: {
            auto x = ExactPolynomial::variable(op.grammar.ring(), "x");
            return x * op.grammar.derive(a);
        }
        case OperatorKind::DX: {
            auto x = ExactPolynomial::variable(op.grammar.ring(), "x");
            return op.grammar.derive(x * a);
        }
    }
    throw std::logic_error("unreachable operator kind");
}

std::vector<ExactPolynomial> iterate_levels(const OperatorSpec& op, int n) {
    if (n < 0) throw std::invalid_argument("iteration count must be >= 0");
    if (!same_ring(op.seed.ring(), op.grammar.ring()))
        throw std::invalid_argument("seed ring differs from grammar ring");
    std::vector<ExactPolynomial> levels;
    levels.reserve(static_cast<std::size_t>(n) + 1);
    levels.push_back(op.seed);
    for (int k = 1; k <= n; ++k) levels.push_back(apply_operator(op, levels.back()));
    return levels;
}

ExactPolynomial iterate(const OperatorSpec& op, int n) {
    return iterate_levels(op, n).back();
}

ExactPolynomial eulerian_sanity(int n) {
    if (n < 1) throw std::invalid_argument("eulerian_sanity requires n >= 1");
    Grammar g = Grammar::eulerian();
    OperatorSpec op{OperatorKind::D, g, ExactPolynomial::variable(g.ring(), "w")};
    return iterate(op, n);
}

}  // namespace dumont

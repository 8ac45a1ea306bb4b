#include "dumont/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dumont {

ExactPolynomial ExactPolynomial::constant(VariableSetPtr ring, BigInt c) {
    ExactPolynomial p(std::move(ring));
    if (c != 0) p.terms_.emplace(Monomial(p.ring_->size()), std::move(c));
    return p;
}

ExactPolynomial ExactPolynomial::variable(VariableSetPtr ring, std::string_view name) {
    std::size_t idx = ring->require(name);
    Monomial m(ring->size());
    m.exp[idx] = 1;
    return term(std::move(ring), std::move(m), 1);
}

ExactPolynomial ExactPolynomial::term(VariableSetPtr ring, Monomial m, BigInt c) {
    if (m.exp.size() != ring->size())
        throw std::invalid_argument("monomial length does not match ring size");
    ExactPolynomial p(std::move(ring));
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

unsigned ExactPolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool ExactPolynomial::is_homogeneous(unsigned degree) const {
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != degree) return false;
    return true;
}

BigInt ExactPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt ExactPolynomial::coefficient_norm() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) s += abs(c);
    return s;
}

void ExactPolynomial::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    if (m.exp.size() != ring_->size())
        throw std::invalid_argument("monomial length does not match ring size");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ExactPolynomial::check_same_ring(const ExactPolynomial& o) const {
    if (!same_ring(ring_, o.ring_))
        throw std::invalid_argument("polynomial ring mismatch");
}

ExactPolynomial ExactPolynomial::operator-() const {
    ExactPolynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    ExactPolynomial r = *this;
    r += o;
    return r;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
    ExactPolynomial r = *this;
    r -= o;
    return r;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    check_same_ring(o);
    ExactPolynomial r(ring_);
    const std::size_t nv = ring_->size();
    Monomial prod(nv);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t k = 0; k < nv; ++k) prod.exp[k] = ma.exp[k] + mb.exp[k];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

ExactPolynomial ExactPolynomial::operator*(const BigInt& c) const {
    ExactPolynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

ExactPolynomial ExactPolynomial::pow(unsigned e) const {
    ExactPolynomial r = constant(ring_, 1);
    ExactPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool ExactPolynomial::operator==(const ExactPolynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

ExactPolynomial ExactPolynomial::partial_derivative(std::string_view var) const {
    std::size_t idx = ring_->require(var);
    ExactPolynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[idx] == 0) continue;
        Monomial d = m;
        d.exp[idx] -= 1;
        r.add_term(d, c * BigInt(m.exp[idx]));
    }
    return r;
}

ExactPolynomial ExactPolynomial::substitute(const std::map<std::string, ExactPolynomial>& bindings) const {
    if (bindings.empty()) return *this;

    VariableSetPtr target;
    for (const auto& [name, image] : bindings) {
        ring_->require(name);
        if (!target)
            target = image.ring();
        else if (!same_ring(target, image.ring()))
            throw std::invalid_argument("substitution images live in different rings");
    }

    const std::size_t nv = ring_->size();
    // Per-variable image (or the corresponding target variable when unbound).
    std::vector<ExactPolynomial> image;
    image.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        auto it = bindings.find(ring_->name(i));
        if (it != bindings.end()) {
            image.push_back(it->second);
        } else {
            if (!target->index_of(ring_->name(i)))
                throw std::invalid_argument("unbound variable '" + ring_->name(i) +
                                            "' is missing from the target ring");
            image.push_back(ExactPolynomial::variable(target, ring_->name(i)));
        }
    }

    ExactPolynomial result(target);
    for (const auto& [m, c] : terms_) {
        ExactPolynomial t = ExactPolynomial::constant(target, c);
        for (std::size_t i = 0; i < nv; ++i)
            if (m.exp[i] > 0) t = t * image[i].pow(m.exp[i]);
        result += t;
    }
    return result;
}

std::complex<double> ExactPolynomial::eval_complex(
    const std::map<std::string, std::complex<double>>& point) const {
    const std::size_t nv = ring_->size();
    std::vector<std::complex<double>> value(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        auto it = point.find(ring_->name(i));
        if (it == point.end())
            throw std::invalid_argument("unbound variable in evaluation: " + ring_->name(i));
        value[i] = it->second;
    }

    // Cache v^e per variable up to the largest exponent that occurs.
    std::vector<std::vector<std::complex<double>>> powers(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        unsigned emax = 0;
        for (const auto& [m, c] : terms_) emax = std::max(emax, m.exp[i]);
        powers[i].resize(emax + 1);
        powers[i][0] = 1.0;
        for (unsigned e = 1; e <= emax; ++e) powers[i][e] = powers[i][e - 1] * value[i];
    }

    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = to_double(c);
        for (std::size_t i = 0; i < nv; ++i)
            if (m.exp[i] > 0) t *= powers[i][m.exp[i]];
        acc += t;
    }
    return acc;
}

std::string ExactPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool is_const = m.total_degree() == 0;
        bool wrote = false;
        if (a != 1 || is_const) {
            out << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (wrote) out << "*";
            out << ring_->name(i);
            if (m.exp[i] > 1) out << "^" << m.exp[i];
            wrote = true;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    VariableSetPtr ring;
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                    ": " + what);
    }

    std::string read_integer() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        if (digits.empty()) fail("expected integer");
        return digits;
    }

    std::string read_identifier() {
        skip_ws();
        std::string id;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            id += s[pos++];
        if (id.empty() || std::isdigit(static_cast<unsigned char>(id[0]))) fail("expected variable");
        return id;
    }

    // term := integer ('*' factor)* | factor ('*' factor)*
    void parse_term(bool negative, ExactPolynomial& out) {
        BigInt coef = 1;
        Monomial m(ring->size());
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = bigint_from_string(read_integer());
            saw_factor = true;
            if (!consume('*')) {
                out.add_term(m, negative ? -coef : coef);
                return;
            }
        }
        while (true) {
            std::string id = read_identifier();
            std::size_t idx = ring->require(id);
            unsigned e = 1;
            if (consume('^')) e = static_cast<unsigned>(std::stoul(read_integer()));
            m.exp[idx] += e;
            saw_factor = true;
            if (!consume('*')) break;
        }
        if (!saw_factor) fail("empty term");
        out.add_term(m, negative ? -coef : coef);
    }
};

}  // namespace

ExactPolynomial ExactPolynomial::parse(VariableSetPtr ring, std::string_view text) {
    Parser p{std::move(ring), text};
    ExactPolynomial out(p.ring);
    if (p.eof()) throw std::invalid_argument("empty polynomial literal");
    bool neg = p.consume('-');
    if (!neg) p.consume('+');
    if (p.peek() == '0') {
        // allow a bare zero literal
        std::size_t save = p.pos;
        std::string d = p.read_integer();
        if (d == "0" && p.eof()) return out;
        p.pos = save;
    }
    p.parse_term(neg, out);
    while (!p.eof()) {
        if (p.consume('+'))
            p.parse_term(false, out);
        else if (p.consume('-'))
            p.parse_term(true, out);
        else
            p.fail("expected '+' or '-'");
    }
    return out;
}

nlohmann::json ExactPolynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_)
        terms.push_back({{"exponents", m.exp}, {"coef", c.get_str()}});
    return terms;
}

ExactPolynomial ExactPolynomial::from_json(VariableSetPtr ring, const nlohmann::json& j) {
    ExactPolynomial p(std::move(ring));
    for (const auto& t : j) {
        Monomial m(t.at("exponents").get<std::vector<unsigned>>());
        p.add_term(m, bigint_from_string(t.at("coef").get<std::string>()));
    }
    return p;
}

}  // namespace dumont

#include "dumont/triangle.hpp"

#include <sstream>
#include <stdexcept>

namespace dumont {

ArrayName array_name_from_string(std::string_view s) {
    if (s == "s") return ArrayName::s;
    if (s == "a") return ArrayName::a;
    if (s == "b") return ArrayName::b;
    if (s == "c") return ArrayName::c;
    if (s == "d") return ArrayName::d;
    if (s == "t") return ArrayName::t;
    if (s == "r") return ArrayName::r;
    throw std::invalid_argument("unknown array name: " + std::string(s));
}

std::string to_string(ArrayName n) {
    switch (n) {
        case ArrayName::s: return "s";
        case ArrayName::a: return "a";
        case ArrayName::b: return "b";
        case ArrayName::c: return "c";
        case ArrayName::d: return "d";
        case ArrayName::t: return "t";
        case ArrayName::r: return "r";
    }
    return "?";
}

const BigInt& Triangle::entry(int n, int i, int j) const {
    static const BigInt zero = 0;
    if (n < 0 || i < 0 || j < 0) return zero;
    auto it = entries.find({n, i, j});
    return it == entries.end() ? zero : it->second;
}

void Triangle::set(int n, int i, int j, BigInt v) {
    if (v == 0) return;
    entries[{n, i, j}] = std::move(v);
}

BigInt Triangle::total(int n) const {
    BigInt s = 0;
    for (const auto& [k, v] : entries)
        if (k[0] == n) s += v;
    return s;
}

std::map<int, BigInt> Triangle::row_sums(int n) const {
    std::map<int, BigInt> out;
    for (const auto& [k, v] : entries)
        if (k[0] == n) out[k[1]] += v;
    return out;
}

std::map<int, BigInt> Triangle::col_sums(int n) const {
    std::map<int, BigInt> out;
    for (const auto& [k, v] : entries)
        if (k[0] == n) out[k[2]] += v;
    return out;
}

std::vector<BigInt> Triangle::fixed_column_poly(int n, int j0) const {
    std::vector<BigInt> coeffs;
    for (const auto& [k, v] : entries) {
        if (k[0] != n || k[2] != j0) continue;
        if (static_cast<int>(coeffs.size()) <= k[1]) coeffs.resize(k[1] + 1, BigInt(0));
        coeffs[k[1]] = v;
    }
    return coeffs;
}

std::vector<BigInt> Triangle::antidiagonal_poly(int n, int j0) const {
    std::vector<BigInt> coeffs;
    for (int i = 0; i <= j0; ++i) {
        const BigInt& v = entry(n, i, j0 - i);
        if (v != 0) {
            if (static_cast<int>(coeffs.size()) <= i) coeffs.resize(i + 1, BigInt(0));
            coeffs[i] = v;
        }
    }
    return coeffs;
}

ExactPolynomial Triangle::generating_polynomial(int n) const {
    static const VariableSetPtr pq = make_ring({"p", "q"});
    ExactPolynomial out(pq);
    for (const auto& [k, v] : entries) {
        if (k[0] != n) continue;
        Monomial m(2);
        m.exp[0] = static_cast<unsigned>(k[1]);
        m.exp[1] = static_cast<unsigned>(k[2]);
        out.add_term(m, v);
    }
    return out;
}

nlohmann::json Triangle::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [k, v] : entries)
        rows.push_back({k[0], k[1], k[2], v.get_str()});
    return {{"name", name}, {"nmax", nmax}, {"provenance", provenance}, {"entries", rows}};
}

std::string Triangle::to_csv() const {
    std::ostringstream out;
    out << "n,i,j,value\n";
    for (const auto& [k, v] : entries)
        out << k[0] << "," << k[1] << "," << k[2] << "," << v.get_str() << "\n";
    return out.str();
}

OperatorSpec operator_for(ArrayName name) {
    switch (name) {
        case ArrayName::s: {
            Grammar g = Grammar::schett();
            return {OperatorKind::D, g, ExactPolynomial::variable(g.ring(), "x")};
        }
        case ArrayName::a: {
            Grammar g = Grammar::schett();
            return {OperatorKind::XD, g, ExactPolynomial::variable(g.ring(), "x")};
        }
        case ArrayName::b: {
            Grammar g = Grammar::schett();
            return {OperatorKind::XD, g, ExactPolynomial::variable(g.ring(), "y")};
        }
        case ArrayName::c: {
            Grammar g = Grammar::schett();
            return {OperatorKind::DX, g, ExactPolynomial::variable(g.ring(), "x")};
        }
        case ArrayName::d: {
            Grammar g = Grammar::schett();
            return {OperatorKind::DX, g, ExactPolynomial::variable(g.ring(), "y")};
        }
        case ArrayName::t: {
            Grammar g = Grammar::schett_extended();
            return {OperatorKind::D, g, ExactPolynomial::variable(g.ring(), "w")};
        }
        case ArrayName::r: {
            Grammar g = Grammar::schett_extended();
            auto w = ExactPolynomial::variable(g.ring(), "w");
            return {OperatorKind::D, g, w * w};
        }
    }
    throw std::logic_error("unreachable array name");
}

namespace {

[[noreturn]] void pattern_error(ArrayName name, int n, const Monomial& m,
                                const VariableSetPtr& ring) {
    std::ostringstream out;
    out << "array '" << to_string(name) << "': level " << n << " monomial ";
    for (std::size_t k = 0; k < ring->size(); ++k)
        out << ring->name(k) << "^" << m.exp[k] << (k + 1 < ring->size() ? "*" : "");
    out << " does not match the index pattern";
    throw std::runtime_error(out.str());
}

// Decodes (i,j) from one monomial of the level-n derived polynomial,
// enforcing the parity pattern of the array.
std::pair<int, int> decode(ArrayName name, int n, const Monomial& m, const VariableSetPtr& ring) {
    auto fail = [&]() -> std::pair<int, int> { pattern_error(name, n, m, ring); };
    bool even = n % 2 == 0;
    switch (name) {
        case ArrayName::s: {
            unsigned x = m.exp[0], y = m.exp[1], z = m.exp[2];
            int i, j;
            if (even) {
                if (x % 2 != 1 || y % 2 != 0) return fail();
                i = static_cast<int>(x - 1) / 2;
                j = static_cast<int>(y) / 2;
            } else {
                if (x % 2 != 0 || y % 2 != 1) return fail();
                i = static_cast<int>(x) / 2;
                j = static_cast<int>(y - 1) / 2;
            }
            if (static_cast<int>(z) != n - 2 * i - 2 * j) return fail();
            return {i, j};
        }
        case ArrayName::a:
        case ArrayName::c: {
            unsigned x = m.exp[0], y = m.exp[1], z = m.exp[2];
            if (x % 2 != 1 || y % 2 != (even ? 0u : 1u)) return fail();
            int i = static_cast<int>(x - 1) / 2;
            int j = static_cast<int>(even ? y / 2 : (y - 1) / 2);
            int zexp = even ? 2 * n - 2 * i - 2 * j : 2 * n - 1 - 2 * i - 2 * j;
            if (static_cast<int>(z) != zexp) return fail();
            return {i, j};
        }
        case ArrayName::d: {
            unsigned x = m.exp[0], y = m.exp[1], z = m.exp[2];
            if (x % 2 != 0 || y % 2 != (even ? 1u : 0u)) return fail();
            int i = static_cast<int>(x) / 2;
            int j = static_cast<int>(even ? (y - 1) / 2 : y / 2);
            int zexp = even ? 2 * n - 2 * i - 2 * j : 2 * n + 1 - 2 * i - 2 * j;
            if (static_cast<int>(z) != zexp) return fail();
            return {i, j};
        }
        case ArrayName::b: {
            unsigned x = m.exp[0], y = m.exp[1], z = m.exp[2];
            if (n == 0) {
                // seed y itself; recorded as (0,0) by convention
                if (x == 0 && y == 1 && z == 0) return {0, 0};
                return fail();
            }
            if (x % 2 != 0 || x < 2 || z % 2 != (even ? 0u : 1u)) return fail();
            int i = static_cast<int>(x - 2) / 2;
            int j = static_cast<int>(even ? z / 2 : (z - 1) / 2);
            int yexp = even ? 2 * n - 1 - 2 * i - 2 * j : 2 * n - 2 - 2 * i - 2 * j;
            if (static_cast<int>(y) != yexp) return fail();
            return {i, j};
        }
        case ArrayName::t:
        case ArrayName::r: {
            unsigned w = m.exp[0], x = m.exp[1], y = m.exp[2], z = m.exp[3];
            unsigned wexp = name == ArrayName::t ? 1u : 2u;
            if (w != wexp || x % 2 != (even ? 0u : 1u)) return fail();
            int i = static_cast<int>(even ? x / 2 : (x - 1) / 2);
            int j = static_cast<int>(y);
            int zexp = even ? n - 2 * i - j : n - 1 - 2 * i - j;
            if (static_cast<int>(z) != zexp) return fail();
            return {i, j};
        }
    }
    throw std::logic_error("unreachable array name");
}

}  // namespace

std::map<std::pair<int, int>, BigInt> match_level(ArrayName name, int n,
                                                  const ExactPolynomial& derived) {
    std::map<std::pair<int, int>, BigInt> out;
    for (const auto& [m, c] : derived.terms()) {
        auto ij = decode(name, n, m, derived.ring());
        if (!out.emplace(ij, c).second) pattern_error(name, n, m, derived.ring());
    }
    return out;
}

Triangle extract(ArrayName name, int nmax) {
    if (nmax < 1) throw std::invalid_argument("extract requires nmax >= 1");
    Triangle tr;
    tr.name = to_string(name);
    tr.nmax = nmax;
    tr.provenance = "grammar";
    auto levels = iterate_levels(operator_for(name), nmax);
    for (int n = 0; n <= nmax; ++n)
        for (auto& [ij, v] : match_level(name, n, levels[n]))
            tr.set(n, ij.first, ij.second, v);
    return tr;
}

namespace {

using Row = std::map<std::pair<int, int>, BigInt>;

BigInt at(const Row& row, int i, int j) {
    if (i < 0 || j < 0) return 0;
    auto it = row.find({i, j});
    return it == row.end() ? BigInt(0) : it->second;
}

// One recurrence step; `m` is the level being filled from `prev` (level m-1).
Row recur_step(ArrayName name, int m, const Row& prev) {
    Row out;
    auto put = [&](int i, int j, BigInt v) {
        if (v != 0) out[{i, j}] = std::move(v);
    };
    int bound = 2 * m + 2;
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; j <= bound; ++j) {
            BigInt v = 0;
            bool even = m % 2 == 0;
            int n = even ? m / 2 : (m - 1) / 2;  // the half-level of the target
            switch (name) {
                case ArrayName::s:
                    if (even)
                        v = BigInt(2 * j + 1) * at(prev, i, j) + BigInt(2 * i + 2) * at(prev, i + 1, j - 1) +
                            BigInt(2 * n - 2 * i - 2 * j + 1) * at(prev, i, j - 1);
                    else
                        v = BigInt(2 * i + 1) * at(prev, i, j) + BigInt(2 * j + 2) * at(prev, i - 1, j + 1) +
                            BigInt(2 * n - 2 * i - 2 * j + 2) * at(prev, i - 1, j);
                    break;
                case ArrayName::a:
                    if (even)
                        v = BigInt(2 * i + 1) * at(prev, i, j - 1) + BigInt(2 * j + 1) * at(prev, i - 1, j) +
                            BigInt(4 * n - 2 * i - 2 * j + 1) * at(prev, i - 1, j - 1);
                    else
                        v = BigInt(2 * i + 1) * at(prev, i, j) + BigInt(2 * j + 2) * at(prev, i - 1, j + 1) +
                            BigInt(4 * n - 2 * i - 2 * j + 2) * at(prev, i - 1, j);
                    break;
                case ArrayName::c:
                    if (even)
                        v = BigInt(2 * i + 2) * at(prev, i, j - 1) + BigInt(2 * j + 1) * at(prev, i - 1, j) +
                            BigInt(4 * n - 2 * i - 2 * j + 1) * at(prev, i - 1, j - 1);
                    else
                        v = BigInt(2 * i + 2) * at(prev, i, j) + BigInt(2 * j + 2) * at(prev, i - 1, j + 1) +
                            BigInt(4 * n - 2 * i - 2 * j + 2) * at(prev, i - 1, j);
                    break;
                case ArrayName::d:
                    if (even)
                        v = BigInt(2 * i + 1) * at(prev, i, j) + BigInt(2 * j + 2) * at(prev, i - 1, j + 1) +
                            BigInt(4 * n - 2 * i - 2 * j + 1) * at(prev, i - 1, j);
                    else
                        v = BigInt(2 * i + 1) * at(prev, i, j - 1) + BigInt(2 * j + 1) * at(prev, i - 1, j) +
                            BigInt(4 * n - 2 * i - 2 * j + 4) * at(prev, i - 1, j - 1);
                    break;
                case ArrayName::b:
                    if (even)
                        v = BigInt(4 * n - 2 * i - 2 * j) * at(prev, i - 1, j - 1) +
                            BigInt(2 * i + 2) * at(prev, i, j - 1) + BigInt(2 * j + 1) * at(prev, i - 1, j);
                    else
                        v = BigInt(4 * n - 2 * i - 2 * j + 1) * at(prev, i - 1, j) +
                            BigInt(2 * i + 2) * at(prev, i, j) + BigInt(2 * j + 2) * at(prev, i - 1, j + 1);
                    break;
                case ArrayName::t:
                case ArrayName::r: {
                    BigInt first = name == ArrayName::t ? 1 : 2;
                    if (even)
                        v = first * at(prev, i - 1, j) + BigInt(2 * i + 1) * at(prev, i, j - 1) +
                            BigInt(j + 1) * at(prev, i - 1, j + 1) +
                            BigInt(2 * n - 2 * i - j + 1) * at(prev, i - 1, j - 1);
                    else
                        v = first * at(prev, i, j) + BigInt(2 * i + 2) * at(prev, i + 1, j - 1) +
                            BigInt(j + 1) * at(prev, i, j + 1) +
                            BigInt(2 * n - 2 * i - j + 1) * at(prev, i, j - 1);
                    break;
                }
            }
            put(i, j, std::move(v));
        }
    }
    return out;
}

}  // namespace

Triangle recur(ArrayName name, int nmax) {
    if (nmax < 1) throw std::invalid_argument("recur requires nmax >= 1");
    Triangle tr;
    tr.name = to_string(name);
    tr.nmax = nmax;
    tr.provenance = "recurrence";

    // Base rows as literal constants; levels 0 and 1 are never produced by
    // the recurrence itself, which keeps this path independent of the
    // grammar engine.
    std::vector<Row> rows(nmax + 1);
    rows[0][{0, 0}] = 1;
    if (nmax >= 1) {
        switch (name) {
            case ArrayName::s: rows[1][{0, 0}] = 1; break;
            case ArrayName::a: rows[1][{0, 0}] = 1; break;
            case ArrayName::b: rows[1][{0, 0}] = 1; break;
            case ArrayName::c: rows[1][{0, 0}] = 2; break;
            case ArrayName::d:
                rows[1][{0, 1}] = 1;
                rows[1][{1, 0}] = 1;
                break;
            case ArrayName::t: rows[1][{0, 0}] = 1; break;
            case ArrayName::r: rows[1][{0, 0}] = 2; break;
        }
    }
    for (int m = 2; m <= nmax; ++m) rows[m] = recur_step(name, m, rows[m - 1]);

    for (int n = 0; n <= nmax; ++n)
        for (auto& [ij, v] : rows[n]) tr.set(n, ij.first, ij.second, v);
    return tr;
}

}  // namespace dumont

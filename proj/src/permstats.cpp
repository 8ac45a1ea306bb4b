#include "dumont/permstats.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dumont {

BigInt DistributionTable::total() const {
    BigInt s = 0;
    for (const auto& [k, v] : counts) s += v;
    return s;
}

BigInt DistributionTable::at(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> DistributionTable::coefficients() const {
    std::vector<BigInt> c;
    for (const auto& [k, v] : counts) {
        if (k < 0) throw std::logic_error("negative statistic value");
        if (static_cast<int>(c.size()) <= k) c.resize(k + 1, BigInt(0));
        c[k] = v;
    }
    return c;
}

BigInt BivariateTable::total() const {
    BigInt s = 0;
    for (const auto& [k, v] : counts) s += v;
    return s;
}

BigInt BivariateTable::at(int i, int j) const {
    auto it = counts.find({i, j});
    return it == counts.end() ? BigInt(0) : it->second;
}

unsigned enumeration_threads() {
    if (const char* env = std::getenv("DUMONT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// Runs fn(v) for every permutation of [n] with the given first entries;
// successors come from std::next_permutation on the tail, so there is no
// recursion anywhere.
template <typename Fn>
void scan_prefix(int n, const std::vector<int>& first_values, Fn&& fn) {
    for (int f : first_values) {
        std::vector<int> v(n);
        v[0] = f;
        int w = 1;
        for (int x = 1; x <= n; ++x)
            if (x != f) v[w++] = x;
        do {
            fn(v);
        } while (std::next_permutation(v.begin() + 1, v.end()));
    }
}

// Tally of stat(pi) over all of S_n, partitioned across workers by the
// first entry.
template <typename Stat>
std::vector<std::uint64_t> tally_sn(int n, int slots, Stat&& stat) {
    unsigned nthreads = std::min<unsigned>(enumeration_threads(), static_cast<unsigned>(n));
    std::vector<std::vector<std::uint64_t>> partial(nthreads,
                                                    std::vector<std::uint64_t>(slots, 0));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
        std::vector<int> firsts;
        for (int f = 1 + static_cast<int>(t); f <= n; f += static_cast<int>(nthreads))
            firsts.push_back(f);
        workers.emplace_back([n, firsts, &partial, t, &stat]() {
            auto& local = partial[t];
            scan_prefix(n, firsts, [&](const std::vector<int>& v) { local[stat(v)] += 1; });
        });
    }
    for (auto& w : workers) w.join();
    std::vector<std::uint64_t> out(slots, 0);
    for (const auto& p : partial)
        for (int k = 0; k < slots; ++k) out[k] += p[k];
    return out;
}

DistributionTable table_from(const std::string& name, int n,
                             const std::vector<std::uint64_t>& tally) {
    DistributionTable t;
    t.statistic = name;
    t.n = n;
    for (std::size_t k = 0; k < tally.size(); ++k)
        if (tally[k]) t.counts[static_cast<int>(k)] = BigInt(static_cast<unsigned long>(tally[k]));
    return t;
}

void require_n(int n, int min) {
    if (n < min) throw std::invalid_argument("statistic undefined for n < " + std::to_string(min));
}

}  // namespace

int stat_interior_peaks(const std::vector<int>& v) {
    int n = static_cast<int>(v.size()), k = 0;
    for (int i = 1; i + 1 < n; ++i)
        if (v[i - 1] < v[i] && v[i] > v[i + 1]) ++k;
    return k;
}

int stat_left_peaks(const std::vector<int>& v) {
    int n = static_cast<int>(v.size()), k = 0;
    for (int i = 0; i + 1 < n; ++i) {
        int prev = i == 0 ? 0 : v[i - 1];
        if (prev < v[i] && v[i] > v[i + 1]) ++k;
    }
    return k;
}

int stat_descents(const std::vector<int>& v) {
    int k = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] > v[i + 1]) ++k;
    return k;
}

int stat_alternating_runs(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    if (n < 2) return 0;
    int changes = 0;
    for (int i = 1; i + 1 < n; ++i)
        if ((v[i - 1] < v[i] && v[i] > v[i + 1]) || (v[i - 1] > v[i] && v[i] < v[i + 1])) ++changes;
    return changes + 1;
}

int stat_up_down_runs(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    if (n == 0) return 0;
    int runs = 1;
    int prev = 0;  // the prepended 0 makes the first step an ascent
    bool up = v[0] > prev;
    prev = v[0];
    for (int i = 1; i < n; ++i) {
        bool step_up = v[i] > prev;
        if (step_up != up) {
            ++runs;
            up = step_up;
        }
        prev = v[i];
    }
    return runs;
}

int stat_longest_alt_subseq(const std::vector<int>& v) {
    // Longest subsequence matching v[i1] > v[i2] < v[i3] > ...; a lone
    // element counts as length 1 and the first comparison must be a descent.
    int n = static_cast<int>(v.size());
    if (n == 0) return 0;
    std::vector<int> down(n, 0), up(n, 0);  // best length ending here, by last step
    int best = 1;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (v[i] > v[j]) {
                int cand = std::max(2, up[i] > 0 ? up[i] + 1 : 0);
                down[j] = std::max(down[j], cand);
            } else if (v[i] < v[j] && down[i] > 0) {
                up[j] = std::max(up[j], down[i] + 1);
            }
        }
        best = std::max({best, down[j], up[j]});
    }
    return best;
}

std::pair<int, int> stat_cycle_peaks_xy(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    std::vector<int> inv(n + 1, 0);
    for (int idx = 0; idx < n; ++idx) inv[v[idx]] = idx + 1;
    int x = 0, y = 0;
    for (int i = 1; i <= n; ++i)
        if (inv[i] < i && v[i - 1] < i) (i % 2 ? x : y) += 1;
    return {x, y};
}

bool is_alternating(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        bool want_descent = i % 2 == 0;  // 1-based odd position
        if (want_descent ? v[i] < v[i + 1] : v[i] > v[i + 1]) return false;
    }
    return true;
}

bool is_reverse_alternating(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        bool want_ascent = i % 2 == 0;
        if (want_ascent ? v[i] > v[i + 1] : v[i] < v[i + 1]) return false;
    }
    return true;
}

DistributionTable interior_peaks(int n) {
    require_n(n, 1);
    return table_from("interior-peaks", n, tally_sn(n, n / 2 + 2, stat_interior_peaks));
}

DistributionTable left_peaks(int n) {
    require_n(n, 1);
    return table_from("left-peaks", n, tally_sn(n, n / 2 + 2, stat_left_peaks));
}

DistributionTable descents(int n) {
    require_n(n, 1);
    return table_from("descents", n, tally_sn(n, n + 1, stat_descents));
}

DistributionTable alternating_runs(int n) {
    require_n(n, 1);
    if (n == 1) {
        // internal convention: a single element has zero runs, which keeps
        // the run/triangle column correspondence total at its base
        DistributionTable t;
        t.statistic = "alternating-runs";
        t.n = 1;
        t.counts[0] = 1;
        return t;
    }
    return table_from("alternating-runs", n, tally_sn(n, n + 1, stat_alternating_runs));
}

DistributionTable up_down_runs(int n) {
    require_n(n, 1);
    return table_from("updown-runs", n, tally_sn(n, n + 2, stat_up_down_runs));
}

DistributionTable longest_alt_subseq(int n) {
    require_n(n, 1);
    return table_from("longest-alt-subseq", n, tally_sn(n, n + 2, stat_longest_alt_subseq));
}

BivariateTable cycle_peaks_xy(int n) {
    require_n(n, 1);
    unsigned nthreads = std::min<unsigned>(enumeration_threads(), static_cast<unsigned>(n));
    int dim = n / 2 + 2;
    std::vector<std::vector<std::uint64_t>> partial(nthreads,
                                                    std::vector<std::uint64_t>(dim * dim, 0));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
        std::vector<int> firsts;
        for (int f = 1 + static_cast<int>(t); f <= n; f += static_cast<int>(nthreads))
            firsts.push_back(f);
        workers.emplace_back([n, firsts, &partial, t, dim]() {
            auto& local = partial[t];
            scan_prefix(n, firsts, [&](const std::vector<int>& v) {
                auto [x, y] = stat_cycle_peaks_xy(v);
                local[x * dim + y] += 1;
            });
        });
    }
    for (auto& w : workers) w.join();

    BivariateTable out;
    out.statistic = "cycle-peaks-xy";
    out.n = n;
    for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
            std::uint64_t c = 0;
            for (const auto& p : partial) c += p[x * dim + y];
            if (c) out.counts[{x, y}] = BigInt(static_cast<unsigned long>(c));
        }
    return out;
}

DistributionTable descents_type_b(int n) {
    require_n(n, 1);
    unsigned nthreads = std::min<unsigned>(enumeration_threads(), static_cast<unsigned>(n));
    std::vector<std::vector<std::uint64_t>> partial(nthreads,
                                                    std::vector<std::uint64_t>(n + 2, 0));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
        std::vector<int> firsts;
        for (int f = 1 + static_cast<int>(t); f <= n; f += static_cast<int>(nthreads))
            firsts.push_back(f);
        workers.emplace_back([n, firsts, &partial, t]() {
            auto& local = partial[t];
            scan_prefix(n, firsts, [&](const std::vector<int>& v) {
                const std::uint32_t nmask = 1u << n;
                for (std::uint32_t mask = 0; mask < nmask; ++mask) {
                    int prev = 0, k = 0;
                    for (int i = 0; i < n; ++i) {
                        int val = (mask >> i) & 1u ? -v[i] : v[i];
                        if (prev > val) ++k;
                        prev = val;
                    }
                    local[k] += 1;
                }
            });
        });
    }
    for (auto& w : workers) w.join();
    std::vector<std::uint64_t> tally(n + 2, 0);
    for (const auto& p : partial)
        for (int k = 0; k < n + 2; ++k) tally[k] += p[k];
    return table_from("descents-b", n, tally);
}

namespace {

// Iterative depth-first enumeration of perfect matchings of [2n] starting
// from a partially used state. fn receives the number of pairs whose
// smaller entry is odd.
template <typename Fn>
void scan_matchings(int two_n, std::vector<char>& used, int odd0, Fn&& fn) {
    int pairs_left = 0;
    for (int x = 1; x <= two_n; ++x)
        if (!used[x]) ++pairs_left;
    pairs_left /= 2;
    if (pairs_left == 0) {
        fn(odd0);
        return;
    }

    std::vector<int> first(pairs_left), partner(pairs_left);
    int odd = odd0;
    int depth = 0;

    auto enter = [&](int d) {
        int f = 1;
        while (used[f]) ++f;
        first[d] = f;
        used[f] = 1;
        partner[d] = f;  // partner search starts just above f
    };

    enter(0);
    while (true) {
        int p = partner[depth] + 1;
        while (p <= two_n && used[p]) ++p;
        if (p <= two_n) {
            if (partner[depth] != first[depth]) used[partner[depth]] = 0;
            else odd += first[depth] & 1;
            used[p] = 1;
            partner[depth] = p;
            if (depth == pairs_left - 1) {
                fn(odd);
            } else {
                ++depth;
                enter(depth);
            }
        } else {
            if (partner[depth] != first[depth]) {
                used[partner[depth]] = 0;
                odd -= first[depth] & 1;
            }
            used[first[depth]] = 0;
            if (depth == 0) break;
            --depth;
        }
    }
}

}  // namespace

DistributionTable matchings_odd_smaller(int n) {
    if (n < 0) throw std::invalid_argument("matchings_odd_smaller requires n >= 0");
    if (n == 0) {
        DistributionTable t;
        t.statistic = "matchings-odd-smaller";
        t.n = 0;
        t.counts[0] = 1;  // the empty matching
        return t;
    }
    const int two_n = 2 * n;
    // Parallel over the partner of element 1.
    std::vector<int> pivots;
    for (int p = 2; p <= two_n; ++p) pivots.push_back(p);
    unsigned nthreads = std::min<unsigned>(enumeration_threads(), pivots.size());
    std::vector<std::vector<std::uint64_t>> partial(nthreads,
                                                    std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
        workers.emplace_back([&, t]() {
            auto& local = partial[t];
            for (std::size_t idx = t; idx < pivots.size(); idx += nthreads) {
                std::vector<char> used(two_n + 1, 0);
                used[1] = 1;
                used[pivots[idx]] = 1;
                scan_matchings(two_n, used, 1, [&](int odd) { local[odd] += 1; });
            }
        });
    }
    for (auto& w : workers) w.join();
    std::vector<std::uint64_t> tally(n + 1, 0);
    for (const auto& p : partial)
        for (int k = 0; k <= n; ++k) tally[k] += p[k];
    return table_from("matchings-odd-smaller", n, tally);
}

std::vector<BigInt> euler_numbers(int nmax) {
    require_n(nmax, 1);
    std::vector<BigInt> e;
    e.reserve(nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto alt = tally_sn(n, 2, [](const std::vector<int>& v) { return is_alternating(v) ? 1 : 0; });
        auto rev = tally_sn(n, 2,
                            [](const std::vector<int>& v) { return is_reverse_alternating(v) ? 1 : 0; });
        if (alt[1] != rev[1])
            throw std::logic_error("complement bijection violated for Euler numbers");
        e.emplace_back(static_cast<unsigned long>(alt[1]));
    }
    return e;
}

}  // namespace dumont

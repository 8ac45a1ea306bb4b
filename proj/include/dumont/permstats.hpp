#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dumont/bigint.hpp"

namespace dumont {

// Exact counts {statistic value -> count} over S_n, B_n or the perfect
// matchings of [2n].
struct DistributionTable {
    std::string statistic;
    int n = 0;
    std::map<int, BigInt> counts;

    BigInt total() const;
    BigInt at(int k) const;  // 0 when absent
    // Coefficient list of sum_k count(k) x^k.
    std::vector<BigInt> coefficients() const;
};

struct BivariateTable {
    std::string statistic;
    int n = 0;
    std::map<std::pair<int, int>, BigInt> counts;

    BigInt total() const;
    BigInt at(int i, int j) const;
};

// Number of worker threads for the enumerations; reads DUMONT_THREADS,
// falling back to the hardware count.
unsigned enumeration_threads();

DistributionTable interior_peaks(int n);
DistributionTable left_peaks(int n);
DistributionTable descents(int n);
DistributionTable descents_type_b(int n);
BivariateTable cycle_peaks_xy(int n);
DistributionTable alternating_runs(int n);  // n==1 yields the internal {0:1} convention
DistributionTable up_down_runs(int n);
DistributionTable longest_alt_subseq(int n);
DistributionTable matchings_odd_smaller(int n);

// Counts of alternating permutations E_1..E_nmax; asserts the complement
// bijection against the reverse-alternating counts.
std::vector<BigInt> euler_numbers(int nmax);

// Statistic kernels on a single permutation; exposed for spot tests.
int stat_interior_peaks(const std::vector<int>& v);
int stat_left_peaks(const std::vector<int>& v);
int stat_descents(const std::vector<int>& v);
int stat_alternating_runs(const std::vector<int>& v);
int stat_up_down_runs(const std::vector<int>& v);
int stat_longest_alt_subseq(const std::vector<int>& v);
std::pair<int, int> stat_cycle_peaks_xy(const std::vector<int>& v);
bool is_alternating(const std::vector<int>& v);
bool is_reverse_alternating(const std::vector<int>& v);

}  // namespace dumont

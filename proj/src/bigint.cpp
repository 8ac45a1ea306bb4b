#include "dumont/bigint.hpp"

#include <stdexcept>

namespace dumont {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt double_factorial(long k) {
    if (k <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt bigint_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a valid integer literal: '" + s + "'");
    }
}

}  // namespace dumont

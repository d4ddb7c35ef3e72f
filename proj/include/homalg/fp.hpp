#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homalg {

/* Prime field GF(p). Primality is checked once at construction; all scalar
 * arithmetic is done on residues in [0, p). */
struct FieldSpec {
    std::uint32_t p = 2;

    FieldSpec() = default;
    explicit FieldSpec(std::uint32_t prime) : p(prime) {
        if (p < 2 || !is_prime(p))
            throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) + " is not prime");
        if (p >= (1u << 15))
            throw std::invalid_argument("FieldSpec: modulus too large for this build");
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t reduce(long long a) const {
        long long r = a % static_cast<long long>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("FieldSpec::inv of zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return reduce(t);
    }

    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }
};

} // namespace homalg

#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ircert {

/* Exact integers and rationals. mpq_class keeps the canonical form we rely on
 * everywhere: gcd(num, den) = 1 and den > 0. */
using Int = mpz_class;
using Rat = mpq_class;

/* Raised for inputs outside the implemented range (as opposed to inputs that
 * are mathematically invalid, which raise std::domain_error). */
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int &num, const Int &den)
{
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    r.canonicalize();
    return r;
}

inline Int pow_int(const Int &base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int isqrt_floor(const Int &n)
{
    if (sgn(n) < 0)
        throw std::domain_error("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int &n, Int *root = nullptr)
{
    if (sgn(n) < 0)
        return false;
    Int r = isqrt_floor(n);
    if (r * r == n) {
        if (root)
            *root = r;
        return true;
    }
    return false;
}

/* floor of the k-th root; exact flag reports whether n is a perfect k-th power */
inline Int kth_root_floor(const Int &n, unsigned long k, bool *exact = nullptr)
{
    Int r;
    int ex = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (exact)
        *exact = ex != 0;
    return r;
}

inline bool is_prime(const Int &n)
{
    /* 40 Miller-Rabin rounds; mpz_probab_prime_p is exact below 2^64 anyway,
     * which covers every prime this project enumerates */
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline int kronecker(const Int &a, const Int &n)
{
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline bool is_squarefree(const Int &n)
{
    if (sgn(n) == 0)
        return false;
    Int m = abs(n);
    if (m == 1)
        return true;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0)
            return false;
        while (m % p == 0)
            m /= p;
    }
    return true;
}

/* n = f^2 * s with s squarefree; returns s (sign of n kept), sets f */
inline Int squarefree_part(const Int &n, Int *square_root = nullptr)
{
    if (sgn(n) == 0)
        throw std::domain_error("squarefree part of zero");
    Int m = abs(n), s = 1, f = 1;
    for (Int p = 2; p * p <= m; ++p) {
        unsigned v = 0;
        while (m % p == 0) {
            m /= p;
            ++v;
        }
        for (unsigned i = 0; i + 1 < v; i += 2)
            f *= p;
        if (v % 2)
            s *= p;
    }
    s *= m;
    if (square_root)
        *square_root = f;
    return sgn(n) < 0 ? Int(-s) : s;
}

/* machine-word modular arithmetic for residue fields F_q, q < 2^31 */
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q)
{
    std::uint64_t r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t q)
{
    /* q prime in every caller */
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(q),
                 nr = static_cast<std::int64_t>(a % q);
    while (nr != 0) {
        std::int64_t k = r / nr;
        std::int64_t tmp = t - k * nt;
        t = nt;
        nt = tmp;
        tmp = r - k * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        throw std::domain_error("invmod: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(q) : t);
}

inline std::uint64_t to_u64(const Int &n)
{
    if (!n.fits_ulong_p())
        throw std::domain_error("integer too large for machine word");
    return mpz_get_ui(n.get_mpz_t());
}

} // namespace ircert

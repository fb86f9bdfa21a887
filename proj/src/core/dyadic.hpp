#pragma once

#include "core/exact.hpp"

namespace ircert {

/* Dyadic rational man * 2^exp, normalized so man is odd or zero (zero keeps
 * exp = 0).  Addition and multiplication are exact; rounding happens only
 * where a caller asks for it, always in a stated direction. */
struct Dyadic {
    Int man;
    long exp = 0;

    Dyadic() : man(0) {}
    Dyadic(Int m, long e);
    static Dyadic from_int(const Int &v) { return Dyadic(v, 0); }

    bool is_zero() const { return sgn(man) == 0; }
    int sign() const { return sgn(man); }
    Dyadic neg() const { return Dyadic(-man, exp); }

    /* number of significant bits of |man| (0 for zero) */
    std::size_t bits() const;
};

Dyadic dy_add(const Dyadic &a, const Dyadic &b);
Dyadic dy_sub(const Dyadic &a, const Dyadic &b);
Dyadic dy_mul(const Dyadic &a, const Dyadic &b);
int dy_cmp(const Dyadic &a, const Dyadic &b);

/* round to at most prec significant bits; up = toward +inf, else toward -inf */
Dyadic dy_round(const Dyadic &x, long prec, bool up);

/* directed quotient a/b to prec significant bits (b nonzero) */
Dyadic dy_div(const Dyadic &a, const Dyadic &b, long prec, bool up);

/* directed square root (x >= 0) to prec significant bits */
Dyadic dy_sqrt(const Dyadic &x, long prec, bool up);

Rat dy_to_rat(const Dyadic &x);
Dyadic dy_of_rat(const Rat &x, long prec, bool up);

/* exact decimal representation; every dyadic has a finite one */
std::string dy_to_decimal(const Dyadic &x);

/* Closed interval [lo, hi] with dyadic endpoints.  Every operation rounds
 * outward at the operation's working precision, so the interval image of the
 * exact real operation is always contained in the result. */
struct Enclosure {
    Dyadic lo, hi;

    Enclosure() = default;
    Enclosure(Dyadic l, Dyadic h);

    static Enclosure exactly(const Int &v);
    static Enclosure exactly(const Dyadic &v) { return Enclosure(v, v); }
    static Enclosure of_rat(const Rat &x, long prec);

    bool contains(const Rat &x) const;
    bool contains(const Enclosure &inner) const;
    Dyadic width() const { return dy_sub(hi, lo); }
    int sign_lo() const { return lo.sign(); }
};

Enclosure enc_neg(const Enclosure &a);
Enclosure enc_add(const Enclosure &a, const Enclosure &b, long prec);
Enclosure enc_sub(const Enclosure &a, const Enclosure &b, long prec);
Enclosure enc_mul(const Enclosure &a, const Enclosure &b, long prec);
/* requires 0 outside b */
Enclosure enc_div(const Enclosure &a, const Enclosure &b, long prec);
Enclosure enc_pow_ui(const Enclosure &a, unsigned long e, long prec);
/* requires a.lo >= 0 */
Enclosure enc_sqrt(const Enclosure &a, long prec);
Enclosure enc_mul_int(const Enclosure &a, const Int &k, long prec);
Enclosure enc_max(const Enclosure &a, const Enclosure &b);

/* natural log, requires a.lo > 0.  Argument is reduced to f * 2^E with
 * f in [1,2), then ln f = 2 atanh((f-1)/(f+1)) is summed in fixed point with
 * an explicit tail bound, and E * ln 2 is added from a cached enclosure of
 * ln 2 = 2 atanh(1/3). */
Enclosure enc_ln(const Enclosure &a, long prec);

/* exponential.  Argument is reduced by the nearest multiple of ln 2, the
 * remainder (|r| < 0.8) goes through the Taylor series with an explicit tail
 * bound, and the power of two is reattached exactly. */
Enclosure enc_exp(const Enclosure &a, long prec);

/* enclosure of ln 2 to roughly prec bits (cached per precision) */
Enclosure ln2_enclosure(long prec);

/* smallest integer >= hi / largest integer <= lo */
Int ceil_upper(const Enclosure &a);
Int floor_lower(const Enclosure &a);

} // namespace ircert

#include "doctest.h"

#include "core/dyadic.hpp"

using namespace ircert;

namespace {

/* "3.25" -> 13/4, digits taken literally (truncation handled by callers) */
Rat rat_from_decimal(const std::string &s)
{
    std::string t = s;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    auto dot = t.find('.');
    std::string digits = t;
    unsigned long frac = 0;
    if (dot != std::string::npos) {
        frac = t.size() - dot - 1;
        digits = t.substr(0, dot) + t.substr(dot + 1);
    }
    Int num(digits, 10);
    Int den = pow_int(10, frac);
    Rat r = make_rat(neg ? Int(-num) : num, den);
    return r;
}

/* the frozen decimal is a truncation of the true value, and containment of
 * the true value is the construction's own invariant; what the freeze checks
 * is that the enclosure sits inside the decimal's neighborhood, i.e. the
 * computed digits match the frozen ones */
bool agrees_with_decimal(const Enclosure &e, const std::string &dec)
{
    Rat d = rat_from_decimal(dec);
    auto dot = dec.find('.');
    unsigned long frac = dot == std::string::npos ? 0 : dec.size() - dot - 1;
    Rat ulp = make_rat(1, pow_int(10, frac));
    return d - ulp <= dy_to_rat(e.lo) && dy_to_rat(e.hi) <= d + 2 * ulp;
}

/* exact containment proof for a + b sqrt(m), a,b,m integers, b > 0, m > 0:
 * x <= a + b sqrt(m) iff x <= a or (x-a)^2 <= b^2 m, and symmetrically */
bool contains_surd(const Enclosure &e, const Int &a, const Int &b, const Int &m)
{
    Rat lo = dy_to_rat(e.lo), hi = dy_to_rat(e.hi);
    Rat bbm = Rat(b * b * m);
    bool lo_ok = lo <= Rat(a) || (lo - a) * (lo - a) <= bbm;
    bool hi_ok = hi >= Rat(a) && (hi - a) * (hi - a) >= bbm;
    return lo_ok && hi_ok;
}

Rat rat_width(const Enclosure &e) { return dy_to_rat(e.width()); }

} // namespace

TEST_CASE("dyadic normalization and exact arithmetic")
{
    Dyadic a(Int(12), 0); // 12 = 3 * 2^2
    CHECK(a.man == 3);
    CHECK(a.exp == 2);
    Dyadic z(Int(0), 57);
    CHECK(z.is_zero());
    CHECK(z.exp == 0);

    Dyadic x(Int(3), -3), y(Int(5), -3); // 3/8 + 5/8 = 1
    Dyadic s = dy_add(x, y);
    CHECK(dy_to_rat(s) == Rat(1));
    CHECK(dy_to_rat(dy_mul(x, y)) == make_rat(15, 64));
    CHECK(dy_cmp(x, y) < 0);
    CHECK(dy_cmp(y, x) > 0);
    CHECK(dy_cmp(x, x) == 0);
    CHECK(dy_to_rat(dy_sub(y, x)) == make_rat(1, 4));
}

TEST_CASE("directed rounding brackets the exact value")
{
    Dyadic v(Int("deadbeefcafe", 16), -20);
    Dyadic down = dy_round(v, 12, false);
    Dyadic up = dy_round(v, 12, true);
    CHECK(dy_cmp(down, v) <= 0);
    CHECK(dy_cmp(v, up) <= 0);
    CHECK(down.bits() <= 12);
    /* rounding something already short is the identity */
    Dyadic w(Int(5), 3);
    CHECK(dy_cmp(dy_round(w, 12, true), w) == 0);
    CHECK(dy_cmp(dy_round(w, 12, false), w) == 0);
}

TEST_CASE("directed division and square root")
{
    Dyadic one = Dyadic::from_int(1), three = Dyadic::from_int(3);
    Dyadic qd = dy_div(one, three, 64, false);
    Dyadic qu = dy_div(one, three, 64, true);
    CHECK(dy_to_rat(qd) < make_rat(1, 3));
    CHECK(make_rat(1, 3) < dy_to_rat(qu));
    CHECK(dy_to_rat(dy_sub(qu, qd)) < make_rat(1, Int(1) << 60));

    /* exact square: both directions coincide */
    Dyadic f49 = Dyadic::from_int(49);
    CHECK(dy_to_rat(dy_sqrt(f49, 32, false)) == Rat(7));
    CHECK(dy_to_rat(dy_sqrt(f49, 32, true)) == Rat(7));

    Dyadic two = Dyadic::from_int(2);
    Rat rd = dy_to_rat(dy_sqrt(two, 96, false));
    Rat ru = dy_to_rat(dy_sqrt(two, 96, true));
    CHECK(rd * rd < 2);
    CHECK(2 < ru * ru);
}

TEST_CASE("exact decimal strings")
{
    CHECK(dy_to_decimal(Dyadic(Int(13), -2)) == "3.25");
    CHECK(dy_to_decimal(Dyadic(Int(1), -1)) == "0.5");
    CHECK(dy_to_decimal(Dyadic(Int(5), 3)) == "40");
    CHECK(dy_to_decimal(Dyadic(Int(-7), -4)) == "-0.4375");
    CHECK(dy_to_decimal(Dyadic()) == "0");
    CHECK(dy_to_decimal(Dyadic(Int(1), -10)) == "0.0009765625");
}

TEST_CASE("enclosure arithmetic stays outward")
{
    Enclosure a = Enclosure::of_rat(make_rat(1, 3), 64);
    CHECK(a.contains(make_rat(1, 3)));
    Enclosure b = Enclosure::of_rat(make_rat(-2, 7), 64);
    Enclosure s = enc_add(a, b, 64);
    CHECK(s.contains(make_rat(1, 3) + make_rat(-2, 7)));
    Enclosure p = enc_mul(a, b, 64);
    CHECK(p.contains(make_rat(1, 3) * make_rat(-2, 7)));
    Enclosure q = enc_div(a, b, 64);
    CHECK(q.contains(make_rat(1, 3) / make_rat(-2, 7)));
    CHECK_THROWS_AS(enc_div(a, Enclosure(Dyadic::from_int(-1), Dyadic::from_int(1)), 64),
                    std::domain_error);

    /* integer powers of exact integers stay exact */
    Enclosure two = Enclosure::exactly(Int(2));
    Enclosure p10 = enc_pow_ui(two, 10, 64);
    CHECK(dy_to_rat(p10.lo) == Rat(1024));
    CHECK(dy_to_rat(p10.hi) == Rat(1024));
}

TEST_CASE("ceiling and floor of enclosures")
{
    Enclosure a(dy_of_rat(make_rat(16, 5), 64, false), dy_of_rat(make_rat(17, 5), 64, true));
    CHECK(ceil_upper(a) == 4);
    CHECK(floor_lower(a) == 3);
    Enclosure b = Enclosure::exactly(Int(7));
    CHECK(ceil_upper(b) == 7);
    CHECK(floor_lower(b) == 7);
    Enclosure c = Enclosure::exactly(Int(-3));
    CHECK(ceil_upper(c) == -3);
    CHECK(floor_lower(c) == -3);
    Enclosure d(dy_of_rat(make_rat(-17, 5), 64, false), dy_of_rat(make_rat(-16, 5), 64, true));
    CHECK(ceil_upper(d) == -3);
    CHECK(floor_lower(d) == -4);
}

TEST_CASE("ln 2 against frozen digits")
{
    Enclosure l2 = ln2_enclosure(160);
    CHECK(agrees_with_decimal(l2, "0.6931471805599453094172321214581765680755"));
    CHECK(rat_width(l2) < make_rat(1, Int(1) << 150));
}

TEST_CASE("logarithm: frozen values and functional identities")
{
    Enclosure one = Enclosure::exactly(Int(1));
    Enclosure l1 = enc_ln(one, 96);
    CHECK(l1.contains(Rat(0)));
    CHECK(rat_width(l1) < make_rat(1, Int(1) << 90));

    Enclosure two = Enclosure::exactly(Int(2));
    Enclosure l2 = enc_ln(two, 128);
    CHECK(agrees_with_decimal(l2, "0.693147180559945309417232121458"));

    /* ln 4 = 2 ln 2 */
    Enclosure l4 = enc_ln(Enclosure::exactly(Int(4)), 128);
    Enclosure twol2 = enc_mul_int(l2, 2, 128);
    CHECK(dy_to_rat(l4.lo) <= dy_to_rat(twol2.hi));
    CHECK(dy_to_rat(twol2.lo) <= dy_to_rat(l4.hi));

    /* ln 10 frozen */
    Enclosure l10 = enc_ln(Enclosure::exactly(Int(10)), 128);
    CHECK(agrees_with_decimal(l10, "2.302585092994045684017991454684"));

    /* monotonicity of the interval extension */
    Enclosure l7 = enc_ln(Enclosure::exactly(Int(7)), 96);
    CHECK(dy_cmp(l4.hi, l7.lo) < 0);

    CHECK_THROWS_AS(enc_ln(Enclosure(Dyadic(), Dyadic::from_int(1)), 64), std::domain_error);
}

TEST_CASE("exponential: frozen values and round trips")
{
    Enclosure e0 = enc_exp(Enclosure::exactly(Int(0)), 96);
    CHECK(e0.contains(Rat(1)));
    CHECK(rat_width(e0) < make_rat(1, Int(1) << 90));

    Enclosure e1 = enc_exp(Enclosure::exactly(Int(1)), 160);
    CHECK(agrees_with_decimal(e1, "2.7182818284590452353602874713526624977572"));

    /* exp(-1) = 1/e */
    Enclosure em1 = enc_exp(Enclosure::exactly(Int(-1)), 128);
    CHECK(agrees_with_decimal(em1, "0.367879441171442321595523770161"));

    /* exp(ln x) recovers x for assorted rationals */
    for (const Rat &x : {make_rat(3, 7), make_rat(22, 7), make_rat(355, 113),
                         make_rat(1, 1000000), make_rat(123456789, 1000)}) {
        Enclosure ex = Enclosure::of_rat(x, 128);
        Enclosure back = enc_exp(enc_ln(ex, 128), 128);
        CHECK(back.contains(x));
        CHECK(rat_width(back) < x * make_rat(1, Int(1) << 100));
    }

    /* a larger argument exercises the power-of-two split */
    Enclosure e20 = enc_exp(Enclosure::exactly(Int(20)), 128);
    CHECK(agrees_with_decimal(e20, "485165195.40979027796910683054"));
}

TEST_CASE("twelfth power of 1 + sqrt 2 against the exact surd")
{
    /* (1+sqrt2)^12 = 19601 + 13860 sqrt2; bound sqrt2 independently through
     * integer square roots so the check shares nothing with enc_sqrt */
    long prec = 192;
    Enclosure two = Enclosure::exactly(Int(2));
    Enclosure unit = enc_add(Enclosure::exactly(Int(1)), enc_sqrt(two, prec), prec);
    Enclosure p12 = enc_pow_ui(unit, 12, prec);

    CHECK(contains_surd(p12, 19601, 13860, 2));
    CHECK(rat_width(p12) < make_rat(1, Int(1) << 150));
    CHECK(ceil_upper(p12) == 39202);

    /* same value through exp(12 ln(1+sqrt2)) — wildly different code path */
    Enclosure viaexp = enc_exp(enc_mul_int(enc_ln(unit, prec), 12, prec), prec);
    CHECK(contains_surd(viaexp, 19601, 13860, 2));
}

TEST_CASE("higher precision nests inside lower precision")
{
    Enclosure seven = Enclosure::exactly(Int(7));
    Enclosure coarse = enc_ln(seven, 64);
    Enclosure fine = enc_ln(seven, 192);
    CHECK(coarse.contains(fine));
    CHECK(rat_width(fine) < rat_width(coarse));

    Enclosure ecoarse = enc_exp(coarse, 64);
    Enclosure efine = enc_exp(fine, 192);
    CHECK(ecoarse.contains(efine));
    CHECK(ecoarse.contains(Rat(7)));
    CHECK(efine.contains(Rat(7)));
}

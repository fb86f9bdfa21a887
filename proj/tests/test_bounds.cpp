#include "core/bounds.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ircert;
using namespace ircert::testutil;

namespace {

Field cyclotomic7()
{
    /* seventh cyclotomic field: degree 6, totally imaginary, h = 1 */
    SuppliedData d;
    d.degree = 6;
    d.disc = -16807;
    d.class_number = 1;
    d.reg_lo = Rat(2);
    d.reg_hi = Rat(3);
    d.poly = {1, 1, 1, 1, 1, 1, 1};
    return Field::supplied(d);
}

bool is_exactly(const Enclosure &e, const Rat &v)
{
    return dy_to_rat(e.lo) == v && dy_to_rat(e.hi) == v;
}

} // namespace

TEST_CASE("height floor delta")
{
    /* degree 1 and 2: ln2 / (unit rank + 1) */
    CHECK(agrees_with_decimal(delta_K(Field::rationals(), 128),
                              "0.693147180559945309417232121458"));
    CHECK(agrees_with_decimal(delta_K(Field::quadratic(2), 128),
                              "0.346573590279972654708616060729"));
    CHECK(agrees_with_decimal(delta_K(Field::quadratic(-5), 128),
                              "0.693147180559945309417232121458"));

    /* degree 6: the 1/(53 d ln 6d) branch wins over the iterated-log branch */
    Enclosure d6 = delta_K(cyclotomic7(), 128);
    CHECK(agrees_with_decimal(d6, "0.000877532431684351027857552575"));
    CHECK(dy_to_rat(d6.lo) > make_rat(29, 1000000)); // second branch is ~2.9e-5
    CHECK(d6.sign_lo() > 0);
}

TEST_CASE("unit-adjustment constant C1")
{
    CHECK(is_exactly(c1_bound(Field::rationals(), 96), Rat(0)));
    CHECK(is_exactly(c1_bound(Field::quadratic(-5), 96), Rat(0)));
    CHECK(is_exactly(c1_bound(Field::quadratic(-163), 96), Rat(0)));
    /* rank one: the delta power drops out and C1 is one half on the nose */
    CHECK(is_exactly(c1_bound(Field::quadratic(2), 96), make_rat(1, 2)));
    CHECK(is_exactly(c1_bound(Field::quadratic(5), 96), make_rat(1, 2)));

    /* rank two: C1 = 2^3 delta^-1 / 2 = 4/delta */
    Field F = cyclotomic7();
    Enclosure c1 = c1_bound(F, 128);
    Enclosure back = enc_mul(c1, delta_K(F, 128), 128);
    CHECK(back.contains(Rat(4)));
    CHECK(dy_to_rat(c1.lo) > Rat(4500)); // 4/0.0008775... = 4558.2...
    CHECK(dy_to_rat(c1.hi) < Rat(4600));
}

TEST_CASE("generator spread C2")
{
    CHECK(is_exactly(c2_bound(Field::rationals(), 96), Rat(1)));
    CHECK(is_exactly(c2_bound(Field::quadratic(-1), 96), Rat(1)));
    CHECK(is_exactly(c2_bound(Field::quadratic(-5), 96), Rat(1)));

    /* real quadratic: C2 = exp(12 ln eps) is the twelfth power of the
     * fundamental unit; frozen exact surd expansions */
    struct Expect {
        long m;
        Int a, b;
    };
    const Expect table[] = {
        {2, 19601, 13860},
        {3, 3650401, 2107560},
        {5, 161, 72},
    };
    for (const Expect &e : table) {
        CAPTURE(e.m);
        Enclosure c2 = c2_bound(Field::quadratic(e.m), 160);
        CHECK(contains_surd(c2, Rat(e.a), Rat(e.b), e.m));
    }
}

TEST_CASE("main bound C(K,n)")
{
    Field Q = Field::rationals();
    CHECK(c_of_n(Q, 2, 96) == 17305600);
    CHECK(c_of_n(Q, 1, 96) == 4);
    CHECK(c_of_n(Field::quadratic(-1), 2, 96) == Int("299483791360000"));
    CHECK_THROWS_AS(c_of_n(Q, 0, 96), std::domain_error);

    /* enclosure branch, frozen against exact surd expansion of
     * (n^12h (unit)^12 + n^6h)^2d */
    CHECK(c_of_n(Field::quadratic(2), 2, 160) ==
          Int("664773012831513917832654994952956"));
    CHECK(c_of_n(Field::quadratic(5), 3, 160) ==
          Int("857500454879439409809915330053610"));

    /* ceiling stability: more precision never raises an integer bound */
    for (long prec : {128L, 256L, 512L}) {
        CAPTURE(prec);
        CHECK(c_of_n(Field::quadratic(2), 2, prec) ==
              Int("664773012831513917832654994952956"));
    }

    /* strict monotonicity in n */
    Int last = 0;
    for (long n = 1; n <= 6; ++n) {
        Int v = c_of_n(Field::quadratic(2), n, 128);
        CHECK(v > last);
        last = v;
    }
}

TEST_CASE("torsion ceiling")
{
    CHECK(torsion_bound(Field::rationals()) == 532900);
    CHECK(torsion_bound(Field::quadratic(-1)) == Int("282430599364"));
    CHECK(torsion_bound(Field::quadratic(-5)) == Int("79766443077437368936324"));
    CHECK(torsion_bound(Field::quadratic(-5)) > torsion_bound(Field::quadratic(-1)));
}

TEST_CASE("multiplicative-place bound B(K;q)")
{
    Field Q = Field::rationals();
    CHECK(b_of_q(Q, 2, 96) == 17305600); // C(Q,2) dominates 532900
    CHECK(b_of_q(Q, 3, 96) == Int("283204908900"));
    CHECK(b_of_q(Q, 31, 96) == Int("620412662363634928974053312440047364"));

    Field K5 = Field::quadratic(-5);
    CHECK(b_of_q(K5, 3, 96) == Int("6362733331331843173388331087277572916014871056"));
    CHECK_THROWS_AS(b_of_q(K5, 11, 96), std::domain_error); // inert
    CHECK_THROWS_AS(b_of_q(K5, 5, 96), std::domain_error);  // ramified
}

TEST_CASE("Chebotarev norm cap")
{
    CHECK(jk_bound(Field::quadratic(-1), Rat(1)) == 8);
    CHECK(jk_bound(Field::quadratic(-5), Rat(1)) == 800);
    CHECK(jk_bound(Field::quadratic(-7), Rat(1)) == 14);
    CHECK(jk_bound(Field::rationals(), Rat(1)) == 2);
    CHECK(jk_bound(Field::rationals(), make_rat(7, 3)) == 2);
    /* fractional exponents through exact root extraction */
    CHECK(jk_bound(Field::quadratic(-5), make_rat(1, 2)) == 40);  // 2 * 20
    CHECK(jk_bound(Field::quadratic(-5), make_rat(1, 3)) == 15);  // 2 * 400^(1/3) = 14.73..
    CHECK(jk_bound(Field::quadratic(-1), make_rat(3, 2)) == 16);  // 2 * 4^(3/2)
    CHECK_THROWS_AS(jk_bound(Field::rationals(), Rat(0)), std::domain_error);
    CHECK_THROWS_AS(jk_bound(Field::rationals(), Rat(-1)), std::domain_error);
}

TEST_CASE("field bound C_K")
{
    CHECK(c_K_bound(Field::rationals(), Rat(1), 96) == 17305600);
    Int ck = c_K_bound(Field::quadratic(-1), Rat(1), 96);
    CHECK(ck == Int("22301085482844660353714621515958698639360000"));
    CHECK(ck > torsion_bound(Field::quadratic(-1)));
    CHECK(c_K_bound(Field::quadratic(2), Rat(1), 96) ==
          Int("14824909938642149960979174913704933638008317024112298765898922190314104786144"));

    /* nondecreasing in the Chebotarev constant */
    CHECK(c_K_bound(Field::quadratic(-5), Rat(2), 96) >=
          c_K_bound(Field::quadratic(-5), Rat(1), 96));
    CHECK(c_K_bound(Field::quadratic(2), Rat(2), 160) >=
          c_K_bound(Field::quadratic(2), Rat(1), 160));
}

#include "core/bounds.hpp"

namespace ircert {

Enclosure delta_K(const Field &K, long prec)
{
    int d = K.degree();
    if (d <= 2) {
        Enclosure l2 = ln2_enclosure(prec + 8);
        return enc_div(l2, Enclosure::exactly(Int(K.unit_rank() + 1)), prec);
    }
    /* both admissible expressions, keep the larger floor */
    Enclosure ln6d = enc_ln(Enclosure::exactly(Int(6 * d)), prec + 8);
    Enclosure first = enc_div(Enclosure::exactly(Int(1)),
                              enc_mul_int(ln6d, Int(53 * d), prec + 8), prec);
    Enclosure lnd = enc_ln(Enclosure::exactly(Int(d)), prec + 8);
    Enclosure lnlnd = enc_ln(lnd, prec + 8);
    Enclosure ratio = enc_div(lnlnd, lnd, prec + 8);
    Enclosure second = enc_div(enc_pow_ui(ratio, 3, prec + 8),
                               Enclosure::exactly(Int(1201)), prec);
    return enc_max(first, second);
}

Enclosure c1_bound(const Field &K, long prec)
{
    int r = K.unit_rank();
    if (r == 0)
        return Enclosure::exactly(Int(0));
    if (r == 1)
        return Enclosure::of_rat(make_rat(1, 2), prec); // delta exponent is 0
    Int rr = pow_int(r, static_cast<unsigned long>(r) + 1);
    Enclosure dpow = enc_pow_ui(delta_K(K, prec + 16),
                                static_cast<unsigned long>(r) - 1, prec + 16);
    return enc_div(Enclosure::exactly(rr),
                   enc_mul_int(dpow, Int(2), prec + 16), prec);
}

Enclosure c2_bound(const Field &K, long prec)
{
    if (K.unit_rank() == 0)
        return Enclosure::exactly(Int(1));
    Enclosure c1 = c1_bound(K, prec + 16);
    Enclosure arg = enc_mul(enc_mul_int(c1, Int(12 * K.degree()), prec + 16),
                            K.regulator(prec + 16), prec + 16);
    return enc_exp(arg, prec);
}

namespace {

unsigned long exp_ui(const Int &e)
{
    if (sgn(e) < 0)
        throw std::domain_error("negative exponent");
    return to_u64(e);
}

} // namespace

Int c_of_n(const Field &K, const Int &n, long prec)
{
    if (n < 1)
        throw std::domain_error("bound argument must be a positive integer");
    Int h = K.class_number();
    unsigned long d2 = 2 * static_cast<unsigned long>(K.degree());
    Int hi = pow_int(n, exp_ui(12 * h)), lo = pow_int(n, exp_ui(6 * h));
    if (K.unit_rank() == 0)
        return pow_int(hi + lo, d2); // C2 is exactly 1
    /* widen the working precision until the enclosure pins an integer, so the
     * reported ceiling is the same at every requested precision */
    long w = prec < 64 ? 64 : prec;
    Enclosure v;
    for (int rounds = 0; rounds < 24; ++rounds) {
        Enclosure c2 = c2_bound(K, w);
        Enclosure sum = enc_add(enc_mul_int(c2, hi, w), Enclosure::exactly(lo), w);
        v = enc_pow_ui(sum, d2, w);
        if (dy_cmp(v.width(), Dyadic(1, 0)) < 0)
            break;
        w *= 2;
    }
    return ceil_upper(v);
}

Int torsion_bound(const Field &K)
{
    Int e = 6 * K.degree() * K.class_number();
    Int t = 1 + pow_int(3, exp_ui(e));
    return t * t;
}

Int b_of_q(const Field &K, const Int &q, long prec)
{
    if (!K.is_totally_split(q))
        throw std::domain_error("the multiplicative-place bound needs a totally split prime");
    Int c = c_of_n(K, q, prec), t = torsion_bound(K);
    return c > t ? c : t;
}

Int jk_bound(const Field &K, const Rat &A)
{
    if (sgn(A) <= 0)
        throw std::domain_error("the Chebotarev constant must be positive");
    Rat e = A * Rat(K.class_number());
    Int absd = abs(K.disc());
    Int t = pow_int(absd, exp_ui(Int(e.get_num())));
    unsigned long den = to_u64(Int(e.get_den()));
    bool exact = false;
    Int root = kth_root_floor(t, den, &exact);
    if (exact)
        return 2 * root;
    /* 2 t^(1/den) is irrational, strictly between 2 root and 2 root + 2;
     * it exceeds 2 root + 1 exactly when 2^den t > (2 root + 1)^den */
    if (pow_int(2, den) * t < pow_int(2 * root + 1, den))
        return 2 * root + 1;
    return 2 * root + 2;
}

Int c_K_bound(const Field &K, const Rat &A, long prec)
{
    Int c = c_of_n(K, jk_bound(K, A), prec), t = torsion_bound(K);
    return c > t ? c : t;
}

} // namespace ircert

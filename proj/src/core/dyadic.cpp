#include "core/dyadic.hpp"

#include <map>
#include <mutex>

namespace ircert {

/* ---- dyadic primitives ---- */

Dyadic::Dyadic(Int m, long e) : man(std::move(m)), exp(e)
{
    if (sgn(man) == 0) {
        exp = 0;
        return;
    }
    /* keep mantissas odd so equality of values is equality of fields */
    mp_bitcnt_t t = mpz_scan1(man.get_mpz_t(), 0);
    if (t > 0) {
        mpz_fdiv_q_2exp(man.get_mpz_t(), man.get_mpz_t(), t);
        exp += static_cast<long>(t);
    }
}

std::size_t Dyadic::bits() const
{
    return is_zero() ? 0 : mpz_sizeinbase(man.get_mpz_t(), 2);
}

Dyadic dy_add(const Dyadic &a, const Dyadic &b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    long e = std::min(a.exp, b.exp);
    Int am = a.man << static_cast<unsigned long>(a.exp - e);
    Int bm = b.man << static_cast<unsigned long>(b.exp - e);
    return Dyadic(am + bm, e);
}

Dyadic dy_sub(const Dyadic &a, const Dyadic &b) { return dy_add(a, b.neg()); }

Dyadic dy_mul(const Dyadic &a, const Dyadic &b)
{
    if (a.is_zero() || b.is_zero())
        return Dyadic();
    return Dyadic(a.man * b.man, a.exp + b.exp);
}

int dy_cmp(const Dyadic &a, const Dyadic &b)
{
    int sa = a.sign(), sb = b.sign();
    if (sa != sb)
        return sa < sb ? -1 : 1;
    return dy_sub(a, b).sign();
}

Dyadic dy_round(const Dyadic &x, long prec, bool up)
{
    if (prec < 2)
        prec = 2;
    long n = static_cast<long>(x.bits());
    if (n <= prec)
        return x;
    unsigned long shift = static_cast<unsigned long>(n - prec);
    Int q;
    if (up)
        mpz_cdiv_q_2exp(q.get_mpz_t(), x.man.get_mpz_t(), shift);
    else
        mpz_fdiv_q_2exp(q.get_mpz_t(), x.man.get_mpz_t(), shift);
    return Dyadic(q, x.exp + static_cast<long>(shift));
}

Dyadic dy_div(const Dyadic &a, const Dyadic &b, long prec, bool up)
{
    if (b.is_zero())
        throw std::domain_error("division by zero dyadic");
    if (a.is_zero())
        return Dyadic();
    Int num = a.man, den = b.man;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long k = prec + 2 + db - nb;
    if (k < 0)
        k = 0;
    Int scaled = num << static_cast<unsigned long>(k);
    Int q;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return dy_round(Dyadic(q, a.exp - b.exp - k), prec, up);
}

Dyadic dy_sqrt(const Dyadic &x, long prec, bool up)
{
    int s = x.sign();
    if (s < 0)
        throw std::domain_error("square root of negative dyadic");
    if (s == 0)
        return Dyadic();
    long k = 2 * (prec + 2) - static_cast<long>(x.bits());
    if (k < 0)
        k = 0;
    if ((x.exp - k) % 2 != 0)
        ++k;
    Int m = x.man << static_cast<unsigned long>(k);
    Int r = isqrt_floor(m);
    if (up && r * r != m)
        ++r;
    return dy_round(Dyadic(r, (x.exp - k) / 2), prec, up);
}

Rat dy_to_rat(const Dyadic &x)
{
    Rat r(x.man);
    if (x.exp >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(x.exp));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-x.exp));
    return r;
}

Dyadic dy_of_rat(const Rat &x, long prec, bool up)
{
    return dy_div(Dyadic::from_int(x.get_num()), Dyadic::from_int(x.get_den()), prec, up);
}

std::string dy_to_decimal(const Dyadic &x)
{
    if (x.is_zero())
        return "0";
    Int m = abs(x.man);
    std::string sign = x.sign() < 0 ? "-" : "";
    if (x.exp >= 0) {
        Int v = m << static_cast<unsigned long>(x.exp);
        return sign + v.get_str();
    }
    /* man / 2^e = man * 5^e / 10^e: exact digits, point e places from the right */
    unsigned long e = static_cast<unsigned long>(-x.exp);
    Int five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, e);
    std::string digits = Int(m * five).get_str();
    if (digits.size() <= e)
        digits.insert(0, e + 1 - digits.size(), '0');
    digits.insert(digits.size() - e, ".");
    while (digits.back() == '0')
        digits.pop_back();
    if (digits.back() == '.')
        digits.pop_back();
    return sign + digits;
}

/* ---- enclosures ---- */

Enclosure::Enclosure(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h))
{
    if (dy_cmp(lo, hi) > 0)
        throw std::logic_error("enclosure with crossed endpoints");
}

Enclosure Enclosure::exactly(const Int &v)
{
    Dyadic d = Dyadic::from_int(v);
    return Enclosure(d, d);
}

Enclosure Enclosure::of_rat(const Rat &x, long prec)
{
    return Enclosure(dy_of_rat(x, prec, false), dy_of_rat(x, prec, true));
}

bool Enclosure::contains(const Rat &x) const
{
    return dy_to_rat(lo) <= x && x <= dy_to_rat(hi);
}

bool Enclosure::contains(const Enclosure &inner) const
{
    return dy_cmp(lo, inner.lo) <= 0 && dy_cmp(inner.hi, hi) <= 0;
}

Enclosure enc_neg(const Enclosure &a) { return Enclosure(a.hi.neg(), a.lo.neg()); }

Enclosure enc_add(const Enclosure &a, const Enclosure &b, long prec)
{
    return Enclosure(dy_round(dy_add(a.lo, b.lo), prec, false),
                     dy_round(dy_add(a.hi, b.hi), prec, true));
}

Enclosure enc_sub(const Enclosure &a, const Enclosure &b, long prec)
{
    return enc_add(a, enc_neg(b), prec);
}

Enclosure enc_mul(const Enclosure &a, const Enclosure &b, long prec)
{
    Dyadic p[4] = {dy_mul(a.lo, b.lo), dy_mul(a.lo, b.hi), dy_mul(a.hi, b.lo),
                   dy_mul(a.hi, b.hi)};
    Dyadic mn = p[0], mx = p[0];
    for (int i = 1; i < 4; ++i) {
        if (dy_cmp(p[i], mn) < 0)
            mn = p[i];
        if (dy_cmp(p[i], mx) > 0)
            mx = p[i];
    }
    return Enclosure(dy_round(mn, prec, false), dy_round(mx, prec, true));
}

Enclosure enc_div(const Enclosure &a, const Enclosure &b, long prec)
{
    if (b.lo.sign() <= 0 && b.hi.sign() >= 0)
        throw std::domain_error("division by enclosure containing zero");
    Dyadic one = Dyadic::from_int(1);
    /* reciprocal of [lo,hi] with 0 outside is [1/hi, 1/lo], rounded outward */
    Enclosure rec(dy_div(one, b.hi, prec + 4, false), dy_div(one, b.lo, prec + 4, true));
    return enc_mul(a, rec, prec);
}

Enclosure enc_pow_ui(const Enclosure &a, unsigned long e, long prec)
{
    Enclosure r = Enclosure::exactly(Int(1));
    Enclosure base = a;
    while (e) {
        if (e & 1)
            r = enc_mul(r, base, prec + 8);
        e >>= 1;
        if (e)
            base = enc_mul(base, base, prec + 8);
    }
    return Enclosure(dy_round(r.lo, prec, false), dy_round(r.hi, prec, true));
}

Enclosure enc_sqrt(const Enclosure &a, long prec)
{
    if (a.lo.sign() < 0)
        throw std::domain_error("square root of enclosure below zero");
    return Enclosure(dy_sqrt(a.lo, prec, false), dy_sqrt(a.hi, prec, true));
}

Enclosure enc_mul_int(const Enclosure &a, const Int &k, long prec)
{
    return enc_mul(a, Enclosure::exactly(k), prec);
}

Enclosure enc_max(const Enclosure &a, const Enclosure &b)
{
    return Enclosure(dy_cmp(a.lo, b.lo) >= 0 ? a.lo : b.lo,
                     dy_cmp(a.hi, b.hi) >= 0 ? a.hi : b.hi);
}

Int ceil_upper(const Enclosure &a)
{
    const Dyadic &h = a.hi;
    if (h.is_zero())
        return 0;
    Int r;
    if (h.exp >= 0)
        r = h.man << static_cast<unsigned long>(h.exp);
    else
        mpz_cdiv_q_2exp(r.get_mpz_t(), h.man.get_mpz_t(),
                        static_cast<unsigned long>(-h.exp));
    return r;
}

Int floor_lower(const Enclosure &a)
{
    const Dyadic &l = a.lo;
    if (l.is_zero())
        return 0;
    Int r;
    if (l.exp >= 0)
        r = l.man << static_cast<unsigned long>(l.exp);
    else
        mpz_fdiv_q_2exp(r.get_mpz_t(), l.man.get_mpz_t(),
                        static_cast<unsigned long>(-l.exp));
    return r;
}

/* ---- fixed-point cores for ln and exp ----
 *
 * Intermediate values are integer intervals [lo, hi] standing for
 * [lo * 2^-w, hi * 2^-w] at working scale w.  Divisions round outward
 * (floor on lo, ceil on hi), so containment is preserved step by step. */

namespace {

struct Fix {
    Int lo, hi;
};

Int fdiv(const Int &a, const Int &b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int cdiv(const Int &a, const Int &b)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int shr_floor(const Int &a, unsigned long k)
{
    Int q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), a.get_mpz_t(), k);
    return q;
}

Int shr_ceil(const Int &a, unsigned long k)
{
    Int q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), a.get_mpz_t(), k);
    return q;
}

Fix fix_mul(const Fix &a, const Fix &b, unsigned long w)
{
    Int p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Int mn = p[0], mx = p[0];
    for (int i = 1; i < 4; ++i) {
        if (p[i] < mn)
            mn = p[i];
        if (p[i] > mx)
            mx = p[i];
    }
    return {shr_floor(mn, w), shr_ceil(mx, w)};
}

Fix fix_div_small(const Fix &a, unsigned long n)
{
    Int d(n);
    return {fdiv(a.lo, d), cdiv(a.hi, d)};
}

/* atanh(t) = sum t^(2k+1)/(2k+1) for a nonnegative t-interval with
 * t.hi < 0.35 * 2^w; the dropped tail is below (8/7) * p/(2k+1). */
Fix atanh_series(const Fix &t, unsigned long w)
{
    Fix t2 = fix_mul(t, t, w);
    Fix p = t;
    Fix sum{0, 0};
    unsigned long k = 0;
    while (true) {
        Fix term = fix_div_small(p, 2 * k + 1);
        sum.lo += term.lo;
        sum.hi += term.hi;
        p = fix_mul(p, t2, w);
        ++k;
        if (p.hi <= 1 || k > w)
            break;
    }
    Int tail = cdiv(p.hi * 8, Int(7 * (2 * k + 1))) + 1;
    sum.hi += tail;
    return sum;
}

/* scale-w integer interval for a positive dyadic, outward-rounded */
Fix fix_of_dyadic(const Dyadic &d, unsigned long w)
{
    long e = d.exp + static_cast<long>(w);
    if (e >= 0) {
        Int v = d.man << static_cast<unsigned long>(e);
        return {v, v};
    }
    unsigned long k = static_cast<unsigned long>(-e);
    return {shr_floor(d.man, k), shr_ceil(d.man, k)};
}

std::mutex ln2_mutex;
std::map<unsigned long, Fix> ln2_cache;

Fix ln2_fix(unsigned long w)
{
    std::lock_guard<std::mutex> lock(ln2_mutex);
    auto it = ln2_cache.find(w);
    if (it != ln2_cache.end())
        return it->second;
    /* ln 2 = 2 atanh(1/3) */
    Int unit = Int(1) << w;
    Fix third{fdiv(unit, Int(3)), cdiv(unit, Int(3))};
    Fix s = atanh_series(third, w);
    Fix r{2 * s.lo, 2 * s.hi};
    ln2_cache.emplace(w, r);
    return r;
}

/* enclosure of ln(d) for an exact positive dyadic, at scale w */
Fix ln_fix(const Dyadic &d, unsigned long w)
{
    /* d = f * 2^E with f = man/2^(n-1) in [1, 2) */
    long n = static_cast<long>(d.bits());
    long E = d.exp + n - 1;
    Dyadic f(d.man, -(n - 1));
    Fix F = fix_of_dyadic(f, w);
    Int unit = Int(1) << w;
    /* t = (f-1)/(f+1) in [0, 1/3) */
    Fix num{F.lo - unit, F.hi - unit};
    Fix den{F.lo + unit, F.hi + unit};
    Fix t{fdiv(num.lo << w, den.hi), cdiv(num.hi << w, den.lo)};
    if (t.lo < 0)
        t.lo = 0;
    Fix s = atanh_series(t, w);
    Fix lnf{2 * s.lo, 2 * s.hi};
    Fix l2 = ln2_fix(w);
    Int elo, ehi;
    if (E >= 0) {
        elo = E * l2.lo;
        ehi = E * l2.hi;
    } else {
        elo = E * l2.hi;
        ehi = E * l2.lo;
    }
    return {lnf.lo + elo, lnf.hi + ehi};
}

/* enclosure of exp(d) for an exact dyadic: scale-w interval for exp(r)
 * together with the split-off power of two, d = k ln 2 + r, |r| < 1.5 */
struct ExpFix {
    Fix m;
    long k;
};

ExpFix exp_fix(const Dyadic &d, unsigned long w)
{
    Fix l2 = ln2_fix(w);
    Int unit = Int(1) << w;
    if (d.is_zero())
        return {{unit, unit}, 0};
    Fix D = fix_of_dyadic(d.sign() > 0 ? d : d.neg(), w);
    if (d.sign() < 0)
        D = {-D.hi, -D.lo};
    /* |d| must stay word-sized for the power-of-two bookkeeping */
    if (D.hi > (unit << 40) || D.lo < -(unit << 40))
        throw std::domain_error("exp argument too large");
    Int kq = fdiv(fdiv(D.lo << w, l2.hi), unit);
    if (!kq.fits_slong_p())
        throw std::domain_error("exp argument too large");
    long k = kq.get_si();
    Int klo, khi;
    if (k >= 0) {
        klo = k * l2.lo;
        khi = k * l2.hi;
    } else {
        klo = k * l2.hi;
        khi = k * l2.lo;
    }
    Fix r{D.lo - khi, D.hi - klo};
    /* the reduction above lands within +-1 of the true quotient */
    Int bound = (unit * 3) >> 1;
    if (r.lo < -bound || r.hi > bound)
        throw std::logic_error("exp argument reduction out of range");
    Fix sum{unit, unit};
    Fix p{unit, unit};
    unsigned long nmax = 4 * w + 16;
    for (unsigned long n = 1; n <= nmax; ++n) {
        p = fix_mul(p, r, w);
        p = fix_div_small(p, n);
        sum.lo += p.lo;
        sum.hi += p.hi;
        if (n >= 3 && p.lo >= -1 && p.hi <= 1)
            break;
    }
    sum.lo -= 2;
    sum.hi += 2;
    if (sum.lo <= 0)
        throw std::logic_error("exp series lost positivity");
    return {sum, k};
}

Enclosure fix_to_enclosure(const Fix &f, unsigned long w, long extra_exp, long prec)
{
    Dyadic lo(f.lo, -static_cast<long>(w) + extra_exp);
    Dyadic hi(f.hi, -static_cast<long>(w) + extra_exp);
    return Enclosure(dy_round(lo, prec, false), dy_round(hi, prec, true));
}

} // namespace

Enclosure ln2_enclosure(long prec)
{
    unsigned long w = static_cast<unsigned long>(prec + 64);
    return fix_to_enclosure(ln2_fix(w), w, 0, prec);
}

Enclosure enc_ln(const Enclosure &a, long prec)
{
    if (a.lo.sign() <= 0)
        throw std::domain_error("log of enclosure touching zero");
    unsigned long w = static_cast<unsigned long>(prec + 64);
    Fix flo = ln_fix(a.lo, w);
    Fix fhi = dy_cmp(a.lo, a.hi) == 0 ? flo : ln_fix(a.hi, w);
    return fix_to_enclosure(Fix{flo.lo, fhi.hi}, w, 0, prec);
}

Enclosure enc_exp(const Enclosure &a, long prec)
{
    unsigned long w = static_cast<unsigned long>(prec + 64);
    ExpFix lo = exp_fix(a.lo, w);
    ExpFix hi = dy_cmp(a.lo, a.hi) == 0 ? lo : exp_fix(a.hi, w);
    Dyadic dlo = dy_round(Dyadic(lo.m.lo, -static_cast<long>(w) + lo.k), prec, false);
    Dyadic dhi = dy_round(Dyadic(hi.m.hi, -static_cast<long>(w) + hi.k), prec, true);
    return Enclosure(dlo, dhi);
}

} // namespace ircert

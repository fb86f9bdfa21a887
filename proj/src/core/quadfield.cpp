#include "core/quadfield.hpp"

#include <algorithm>

namespace ircert {

/* ---- construction and validation ---- */

Field Field::rationals()
{
    Field f;
    f.kind_ = FieldKind::Rational;
    return f;
}

Field Field::quadratic(const Int &m)
{
    if (m == 0 || m == 1)
        throw std::domain_error("quadratic radicand must not be 0 or 1");
    if (!is_squarefree(m))
        throw std::domain_error("quadratic radicand must be squarefree");
    Field f;
    f.kind_ = FieldKind::Quadratic;
    f.m_ = m;
    return f;
}

Field Field::supplied(SuppliedData data)
{
    if (data.degree < 1)
        throw std::domain_error("supplied field needs degree >= 1");
    if (sgn(data.disc) == 0)
        throw std::domain_error("supplied field needs a nonzero discriminant");
    if (sgn(data.class_number) <= 0)
        throw std::domain_error("supplied field needs a positive class number");
    if (data.reg_lo > data.reg_hi || sgn(data.reg_lo) <= 0)
        throw std::domain_error("supplied regulator bracket must be positive and ordered");
    if (static_cast<int>(data.poly.size()) != data.degree + 1 ||
        sgn(data.poly.back()) == 0)
        throw std::domain_error("supplied polynomial must have the stated degree");
    int roots = count_real_roots(data.poly);
    if (roots != 0 && roots != data.degree)
        throw std::domain_error(
            "supplied polynomial must be totally real or totally imaginary");
    if (roots == 0 && data.degree % 2 != 0)
        throw std::domain_error("odd degree forces a real embedding");
    if (roots == data.degree && sgn(data.disc) < 0)
        throw std::domain_error("totally real field cannot have negative discriminant");
    if (roots == 0 && sgn(data.disc) * ((data.degree / 2) % 2 == 0 ? 1 : -1) < 0)
        throw std::domain_error("discriminant sign contradicts the signature");
    Field f;
    f.kind_ = FieldKind::Supplied;
    f.sup_ = std::move(data);
    return f;
}

const Int &Field::radicand() const
{
    if (kind_ != FieldKind::Quadratic)
        throw std::logic_error("radicand of a non-quadratic field");
    return m_;
}

int Field::degree() const
{
    switch (kind_) {
    case FieldKind::Rational: return 1;
    case FieldKind::Quadratic: return 2;
    default: return sup_.degree;
    }
}

namespace {

int mod4(const Int &n)
{
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), 4);
    return static_cast<int>(r.get_ui());
}

} // namespace

Int Field::disc() const
{
    switch (kind_) {
    case FieldKind::Rational: return 1;
    case FieldKind::Quadratic: return mod4(m_) == 1 ? m_ : 4 * m_;
    default: return sup_.disc;
    }
}

int Field::r1() const
{
    switch (kind_) {
    case FieldKind::Rational: return 1;
    case FieldKind::Quadratic: return sgn(m_) > 0 ? 2 : 0;
    default: return count_real_roots(sup_.poly) == sup_.degree ? sup_.degree : 0;
    }
}

int Field::r2() const { return (degree() - r1()) / 2; }

int Field::unit_rank() const { return r1() + r2() - 1; }

Int Field::class_number() const
{
    if (h_)
        return *h_;
    Int h;
    switch (kind_) {
    case FieldKind::Rational: h = 1; break;
    case FieldKind::Quadratic:
        if (sgn(m_) < 0)
            h = class_number_imaginary(disc());
        else
            h = class_number_real(disc(), fundamental_unit()->norm == -1);
        break;
    default: h = sup_.class_number;
    }
    h_ = h;
    return h;
}

std::optional<FundamentalUnit> Field::fundamental_unit() const
{
    if (kind_ != FieldKind::Quadratic || sgn(m_) < 0)
        return std::nullopt;
    if (unit_)
        return unit_;

    /* continued fraction of sqrt(m): P' = aQ - P, Q' = (m - P'^2)/Q, with the
     * fundamental solution of x^2 - m y^2 = +-1 read off the convergent just
     * before the first Q = 1 */
    Int s = isqrt_floor(m_);
    Int a = s, P = 0, Q = 1;
    Int h_prev = 1, h = s, k_prev = 0, k = 1;
    long ell = 0;
    while (true) {
        P = a * Q - P;
        Q = (m_ - P * P) / Q;
        ++ell;
        if (Q == 1)
            break;
        a = (P + s) / Q;
        Int hn = a * h + h_prev, kn = a * k + k_prev;
        h_prev = h;
        h = hn;
        k_prev = k;
        k = kn;
    }
    FundamentalUnit u;
    u.x = h;
    u.y = k;
    u.den = 1;
    u.norm = (ell % 2 != 0) ? -1 : 1;

    if (mod4(m_) == 1) {
        /* the unit group of the maximal order can be three times larger; any
         * half-integral fundamental unit (x + y sqrt m)/2 satisfies
         * x^2 - m y^2 = +-4 with y below 2 (2X+1)^(1/3) / sqrt(m) */
        Int ymax = 2 * (kth_root_floor(2 * u.x + 1, 3) + 1) / s + 2;
        for (Int y = 1; y <= ymax; ++y) {
            for (int sign : {-1, 1}) {
                Int t = m_ * y * y + 4 * sign;
                Int x;
                if (sgn(t) > 0 && is_square(t, &x)) {
                    FundamentalUnit v;
                    v.x = x;
                    v.y = y;
                    v.den = 2;
                    v.norm = sign;
                    if (mpz_even_p(x.get_mpz_t()) && mpz_even_p(y.get_mpz_t())) {
                        v.x = x / 2;
                        v.y = y / 2;
                        v.den = 1;
                    }
                    unit_ = v;
                    return unit_;
                }
            }
            if (y > ymax)
                break;
        }
    }
    unit_ = u;
    return unit_;
}

Enclosure Field::regulator(long prec) const
{
    if (kind_ == FieldKind::Supplied)
        return Enclosure(dy_of_rat(sup_.reg_lo, prec, false),
                         dy_of_rat(sup_.reg_hi, prec, true));
    if (unit_rank() == 0)
        return Enclosure::exactly(Int(1)); // rank-zero convention
    FundamentalUnit u = *fundamental_unit();
    Enclosure root = enc_sqrt(Enclosure::exactly(m_), prec + 16);
    Enclosure val = enc_add(Enclosure::exactly(u.x), enc_mul_int(root, u.y, prec + 16),
                            prec + 16);
    if (u.den == 2)
        val = enc_div(val, Enclosure::exactly(Int(2)), prec + 16);
    return enc_ln(val, prec);
}

/* ---- splitting of rational primes ---- */

namespace {

/* polynomial helpers over F_q with machine-word coefficients, ascending order */
using PolyQ = std::vector<std::uint64_t>;

void ptrim(PolyQ &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

PolyQ pmul(const PolyQ &a, const PolyQ &b, std::uint64_t q)
{
    if (a.empty() || b.empty())
        return {};
    PolyQ r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], q)) % q;
    ptrim(r);
    return r;
}

PolyQ prem(PolyQ a, const PolyQ &b, std::uint64_t q)
{
    std::uint64_t lead_inv = invmod(b.back(), q);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t f = mulmod(a.back(), lead_inv, q);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = mulmod(f, b[i], q);
            a[i + shift] = (a[i + shift] + q - t) % q;
        }
        ptrim(a);
    }
    return a;
}

PolyQ pgcd(PolyQ a, PolyQ b, std::uint64_t q)
{
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PolyQ r = prem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PolyQ pderiv(const PolyQ &a, std::uint64_t q)
{
    PolyQ r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(mulmod(a[i], i % q, q));
    ptrim(r);
    return r;
}

/* X^q mod f by square and multiply */
PolyQ pxq(const PolyQ &f, std::uint64_t q)
{
    PolyQ x = {0, 1};
    x = prem(x, f, q);
    PolyQ r = {1};
    std::uint64_t e = q;
    while (e) {
        if (e & 1)
            r = prem(pmul(r, x, q), f, q);
        x = prem(pmul(x, x, q), f, q);
        e >>= 1;
    }
    return r;
}

PolyQ reduce_poly(const std::vector<Int> &poly, std::uint64_t q)
{
    PolyQ r;
    for (const Int &c : poly) {
        Int cm;
        mpz_fdiv_r(cm.get_mpz_t(), c.get_mpz_t(), Int(static_cast<unsigned long>(q)).get_mpz_t());
        r.push_back(to_u64(cm));
    }
    ptrim(r);
    return r;
}

void require_prime_cap(const Int &q)
{
    if (!is_prime(q))
        throw std::domain_error("splitting is defined for rational primes");
    if (!q.fits_ulong_p() || q > Int("2147483647"))
        throw std::domain_error("residue characteristic exceeds the machine-word cap");
}

void require_odd_prime_place(const Int &q)
{
    require_prime_cap(q);
    if (q < 3)
        throw std::domain_error("places are enumerated above odd primes only");
}

} // namespace

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t q)
{
    a %= q;
    if (a == 0)
        return 0;
    if (powmod(a, (q - 1) / 2, q) != 1)
        return std::nullopt;
    if (q % 4 == 3)
        return powmod(a, (q + 1) / 4, q);
    /* Tonelli-Shanks */
    std::uint64_t s = 0, t = q - 1;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (q - 1) / 2, q) != q - 1)
        ++z;
    std::uint64_t M = s;
    std::uint64_t c = powmod(z, t, q);
    std::uint64_t u = powmod(a, t, q);
    std::uint64_t r = powmod(a, (t + 1) / 2, q);
    while (u != 1) {
        std::uint64_t i = 0, v = u;
        while (v != 1) {
            v = mulmod(v, v, q);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < M; ++j)
            b = mulmod(b, b, q);
        M = i;
        c = mulmod(b, b, q);
        u = mulmod(u, c, q);
        r = mulmod(r, b, q);
    }
    return r;
}

bool Field::is_totally_split(const Int &q) const
{
    require_prime_cap(q);
    switch (kind_) {
    case FieldKind::Rational: return true;
    case FieldKind::Quadratic: return kronecker(disc(), q) == 1;
    default: {
        std::uint64_t qq = to_u64(q);
        PolyQ f = reduce_poly(sup_.poly, qq);
        if (static_cast<int>(f.size()) != sup_.degree + 1)
            return false; // leading coefficient vanished
        if (pgcd(f, pderiv(f, qq), qq).size() > 1)
            return false; // not squarefree mod q
        /* totally split iff x^q = x on the whole quotient ring */
        PolyQ xq = pxq(f, qq);
        return xq == PolyQ{0, 1};
    }
    }
}

std::vector<DegreeOnePlace> Field::degree_one_places(const Int &q) const
{
    require_odd_prime_place(q);
    std::vector<DegreeOnePlace> out;
    switch (kind_) {
    case FieldKind::Rational:
        out.push_back({q, 0, false});
        break;
    case FieldKind::Quadratic: {
        std::uint64_t qq = to_u64(q);
        if (m_ % q == 0) {
            out.push_back({q, 0, true});
            break;
        }
        Int mm;
        mpz_fdiv_r(mm.get_mpz_t(), m_.get_mpz_t(), q.get_mpz_t());
        auto r = sqrt_mod(to_u64(mm), qq);
        if (r) {
            std::uint64_t r1 = *r, r2 = qq - *r;
            if (r1 > r2)
                std::swap(r1, r2);
            out.push_back({q, Int(static_cast<unsigned long>(r1)), false});
            out.push_back({q, Int(static_cast<unsigned long>(r2)), false});
        }
        break;
    }
    default: {
        if (q > 10000000)
            throw std::domain_error("root enumeration above this prime is too large");
        std::uint64_t qq = to_u64(q);
        PolyQ f = reduce_poly(sup_.poly, qq);
        if (f.empty())
            throw std::domain_error("polynomial vanishes mod q");
        for (std::uint64_t x = 0; x < qq; ++x) {
            std::uint64_t v = 0;
            for (std::size_t i = f.size(); i-- > 0;)
                v = (mulmod(v, x, qq) + f[i]) % qq;
            if (v == 0)
                out.push_back({q, Int(static_cast<unsigned long>(x)), false});
        }
        break;
    }
    }
    return out;
}

/* ---- element arithmetic ---- */

void Field::require_arithmetic() const
{
    if (kind_ == FieldKind::Supplied)
        throw unsupported_error("element arithmetic is unavailable for supplied fields");
}

QuadElement Field::elt(const Rat &a, const Rat &b) const
{
    require_arithmetic();
    if (kind_ == FieldKind::Rational && sgn(b) != 0)
        throw std::domain_error("nonzero irrational coordinate over the rationals");
    return {a, b};
}

QuadElement Field::add(const QuadElement &x, const QuadElement &y) const
{
    return {x.a + y.a, x.b + y.b};
}

QuadElement Field::sub(const QuadElement &x, const QuadElement &y) const
{
    return {x.a - y.a, x.b - y.b};
}

QuadElement Field::mul(const QuadElement &x, const QuadElement &y) const
{
    if (kind_ == FieldKind::Rational)
        return {x.a * y.a, Rat(0)};
    return {x.a * y.a + Rat(m_) * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadElement Field::neg(const QuadElement &x) const { return {-x.a, -x.b}; }

QuadElement Field::conj(const QuadElement &x) const { return {x.a, -x.b}; }

Rat Field::norm(const QuadElement &x) const
{
    if (kind_ == FieldKind::Rational)
        return x.a;
    return x.a * x.a - Rat(m_) * x.b * x.b;
}

Rat Field::trace(const QuadElement &x) const
{
    if (kind_ == FieldKind::Rational)
        return x.a;
    return 2 * x.a;
}

QuadElement Field::inv(const QuadElement &x) const
{
    if (x.is_zero())
        throw std::domain_error("inverse of zero");
    if (kind_ == FieldKind::Rational)
        return {1 / x.a, Rat(0)};
    Rat n = norm(x);
    return {x.a / n, -x.b / n};
}

QuadElement Field::div(const QuadElement &x, const QuadElement &y) const
{
    return mul(x, inv(y));
}

QuadElement Field::pow(QuadElement x, unsigned long e) const
{
    QuadElement r = elt(Rat(1));
    while (e) {
        if (e & 1)
            r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

bool Field::is_integral(const QuadElement &x) const
{
    require_arithmetic();
    if (kind_ == FieldKind::Rational)
        return x.a.get_den() == 1;
    if (mod4(m_) != 1)
        return x.a.get_den() == 1 && x.b.get_den() == 1;
    /* basis {1, (1+sqrt m)/2}: x = (a-b) + 2b w needs 2b and a-b integral */
    Rat v = 2 * x.b, u = x.a - x.b;
    return v.get_den() == 1 && u.get_den() == 1;
}

std::pair<Int, Int> Field::omega_coords(const QuadElement &x) const
{
    if (!is_integral(x))
        throw std::domain_error("omega coordinates of a non-integral element");
    if (kind_ == FieldKind::Rational)
        return {Int(x.a.get_num()), 0};
    if (mod4(m_) != 1)
        return {Int(x.a.get_num()), Int(x.b.get_num())};
    Rat v = 2 * x.b, u = x.a - x.b;
    return {Int(u.get_num()), Int(v.get_num())};
}

QuadElement Field::from_omega_coords(const Int &u, const Int &v) const
{
    require_arithmetic();
    if (kind_ == FieldKind::Rational) {
        if (sgn(v) != 0)
            throw std::domain_error("nonzero irrational coordinate over the rationals");
        return {Rat(u), Rat(0)};
    }
    if (mod4(m_) != 1)
        return {Rat(u), Rat(v)};
    return {Rat(u) + make_rat(v, 2), make_rat(v, 2)};
}

int Field::real_sign(const QuadElement &x) const
{
    if (kind_ == FieldKind::Rational || sgn(x.b) == 0)
        return sgn(x.a);
    if (sgn(m_) < 0)
        throw std::logic_error("real sign of a non-real element");
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sa >= 0 && sb > 0)
        return 1;
    if (sa <= 0 && sb < 0)
        return -1;
    /* opposite signs: compare a^2 with m b^2; the surd term wins when
     * m b^2 exceeds a^2 */
    int cmp = (x.a * x.a < Rat(m_) * x.b * x.b) ? -1 : 1;
    return sb > 0 ? -cmp : cmp;
}

Enclosure Field::embed(const QuadElement &x, long prec) const
{
    if (kind_ == FieldKind::Rational || sgn(x.b) == 0)
        return Enclosure::of_rat(x.a, prec);
    if (sgn(m_) < 0)
        throw std::logic_error("real embedding of a non-real element");
    Enclosure root = enc_sqrt(Enclosure::exactly(m_), prec + 8);
    Enclosure bpart = enc_mul(Enclosure::of_rat(x.b, prec + 8), root, prec + 8);
    return enc_add(Enclosure::of_rat(x.a, prec + 8), bpart, prec);
}

/* ---- valuations and reduction ---- */

namespace {

Int int_valuation(Int n, const Int &q)
{
    Int v = 0;
    while (sgn(n) != 0 && n % q == 0) {
        n /= q;
        ++v;
    }
    return v;
}

} // namespace

Int Field::valuation(const QuadElement &x, const DegreeOnePlace &P) const
{
    require_arithmetic();
    if (x.is_zero())
        throw std::domain_error("valuation of zero");
    Int e = P.ramified ? 2 : 1;
    if (kind_ == FieldKind::Rational) {
        Int num = Int(x.a.get_num()), den = Int(x.a.get_den());
        return int_valuation(num, P.q) - int_valuation(den, P.q);
    }
    Int n = lcm(Int(x.a.get_den()), Int(x.b.get_den()));
    QuadElement z = mul(x, elt(Rat(n)));
    auto [u, v] = omega_coords(z);
    /* strip whole powers of q from the integral part */
    Int t = 0;
    while (u % P.q == 0 && v % P.q == 0 && (sgn(u) != 0 || sgn(v) != 0)) {
        u /= P.q;
        v /= P.q;
        ++t;
    }
    QuadElement zz = from_omega_coords(u, v);
    Int vz = 0;
    if (reduce_mod_place_raw(u, v, P) == 0) {
        Rat nz = norm(zz);
        vz = int_valuation(Int(nz.get_num()), P.q);
    }
    return t * e + vz - e * int_valuation(n, P.q);
}

Int Field::reduce_mod_place_raw(const Int &u, const Int &v, const DegreeOnePlace &P) const
{
    /* image of u + v w under w -> r_w */
    Int rw;
    if (mod4(m_) != 1)
        rw = P.r;
    else {
        Int inv2 = (P.q + 1) / 2;
        rw = ((1 + P.r) * inv2) % P.q;
    }
    Int res;
    mpz_fdiv_r(res.get_mpz_t(), Int(u + v * rw).get_mpz_t(), P.q.get_mpz_t());
    return res;
}

Int Field::reduce_mod_place(const QuadElement &x, const DegreeOnePlace &P) const
{
    require_arithmetic();
    if (x.is_zero())
        return 0;
    if (kind_ == FieldKind::Rational) {
        Int num = Int(x.a.get_num()), den = Int(x.a.get_den());
        /* canonical rationals keep q out of one side, so q | den is a pole */
        if (int_valuation(den, P.q) > 0)
            throw std::domain_error("reduction of an element with a pole");
        Int qn, qd;
        mpz_fdiv_r(qn.get_mpz_t(), num.get_mpz_t(), P.q.get_mpz_t());
        mpz_fdiv_r(qd.get_mpz_t(), den.get_mpz_t(), P.q.get_mpz_t());
        std::uint64_t qq = to_u64(P.q);
        return Int(static_cast<unsigned long>(
            mulmod(to_u64(qn), invmod(to_u64(qd), qq), qq)));
    }
    Int n = lcm(Int(x.a.get_den()), Int(x.b.get_den()));
    QuadElement z = mul(x, elt(Rat(n)));
    Int t = int_valuation(n, P.q);
    std::uint64_t qq = to_u64(P.q);
    if (t == 0) {
        auto [u, v] = omega_coords(z);
        Int red = reduce_mod_place_raw(u, v, P);
        Int nr;
        mpz_fdiv_r(nr.get_mpz_t(), n.get_mpz_t(), P.q.get_mpz_t());
        return Int(static_cast<unsigned long>(
            mulmod(to_u64(red), invmod(to_u64(nr), qq), qq)));
    }
    if (valuation(x, P) < 0)
        throw std::domain_error("reduction of an element with a pole");
    if (P.ramified)
        throw unsupported_error(
            "reduction at a ramified place with q in the denominator");
    /* kill the conjugate-place pole: w = sqrt(m) - rbar has positive valuation
     * at the conjugate place and none here, so z w^t is divisible by q^t */
    Int rbar = P.q - P.r;
    QuadElement w = elt(Rat(-rbar), Rat(1));
    QuadElement zw = mul(z, pow(w, to_u64(t)));
    auto [u2, v2] = omega_coords(zw);
    Int qt = pow_int(P.q, to_u64(t));
    if (u2 % qt != 0 || v2 % qt != 0)
        throw std::logic_error("pole cancellation failed");
    Int red = reduce_mod_place_raw(u2 / qt, v2 / qt, P);
    auto [wu, wv] = omega_coords(w);
    Int wred = reduce_mod_place_raw(wu, wv, P);
    Int nprime = n / qt;
    Int nr;
    mpz_fdiv_r(nr.get_mpz_t(), nprime.get_mpz_t(), P.q.get_mpz_t());
    std::uint64_t res = to_u64(red);
    std::uint64_t winv = invmod(to_u64(wred), qq);
    for (Int i = 0; i < t; ++i)
        res = mulmod(res, winv, qq);
    res = mulmod(res, invmod(to_u64(nr), qq), qq);
    return Int(static_cast<unsigned long>(res));
}

/* ---- ideals ---- */

namespace {

/* multiplication by w in omega coordinates */
std::pair<Int, Int> omega_times(const std::pair<Int, Int> &g, const Int &m)
{
    if (mod4(m) != 1)
        return {g.second * m, g.first};
    return {g.second * (m - 1) / 4, g.first + g.second};
}

} // namespace

QuadIdeal Field::ideal_from_generators(const std::vector<std::pair<Int, Int>> &gens) const
{
    require_arithmetic();
    if (kind_ != FieldKind::Quadratic)
        throw std::logic_error("ideals need a quadratic field");
    std::vector<std::pair<Int, Int>> rows;
    for (const auto &g : gens) {
        rows.push_back(g);
        rows.push_back(omega_times(g, m_));
    }
    /* Hermite form: combine to a single row with v = c = gcd of the v's */
    Int c = 0;
    std::pair<Int, Int> W{0, 0};
    for (const auto &row : rows) {
        if (sgn(row.second) == 0)
            continue;
        if (sgn(c) == 0) {
            c = row.second;
            W = row;
        } else {
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(),
                       row.second.get_mpz_t());
            W = {s * W.first + t * row.first, g};
            c = g;
        }
    }
    if (sgn(c) == 0)
        throw std::domain_error("generators span no ideal");
    if (sgn(c) < 0) {
        c = -c;
        W = {-W.first, -W.second};
    }
    Int a = 0;
    for (const auto &row : rows) {
        Int u = row.first - (row.second / c) * W.first;
        a = gcd(a, u);
    }
    if (sgn(a) == 0)
        throw std::domain_error("generators span no ideal");
    a = abs(a);
    Int b;
    mpz_fdiv_r(b.get_mpz_t(), W.first.get_mpz_t(), a.get_mpz_t());
    if (a % c != 0 || b % c != 0)
        throw std::logic_error("generated module is not an ideal");
    return {a, b, c};
}

QuadIdeal Field::principal_ideal(const QuadElement &x) const
{
    auto [u, v] = omega_coords(x);
    return ideal_from_generators({{u, v}});
}

QuadIdeal Field::place_ideal(const DegreeOnePlace &P) const
{
    if (kind_ != FieldKind::Quadratic)
        throw std::logic_error("place ideals need a quadratic field");
    Int rw;
    if (mod4(m_) != 1)
        rw = P.r;
    else {
        Int inv2 = (P.q + 1) / 2;
        rw = ((1 + P.r) * inv2) % P.q;
    }
    return ideal_from_generators({{P.q, 0}, {-rw, 1}});
}

QuadIdeal Field::ideal_mul(const QuadIdeal &I, const QuadIdeal &J) const
{
    /* products of the two Hermite bases generate the product ideal */
    auto basis = [this](const QuadIdeal &K) {
        return std::vector<QuadElement>{from_omega_coords(K.a, 0),
                                        from_omega_coords(K.b, K.c)};
    };
    std::vector<std::pair<Int, Int>> gens;
    for (const QuadElement &x : basis(I))
        for (const QuadElement &y : basis(J))
            gens.push_back(omega_coords(mul(x, y)));
    return ideal_from_generators(gens);
}

QuadIdeal Field::ideal_pow(const QuadIdeal &I, unsigned long e) const
{
    QuadIdeal r = ideal_from_generators({{1, 0}});
    QuadIdeal base = I;
    while (e) {
        if (e & 1)
            r = ideal_mul(r, base);
        e >>= 1;
        if (e)
            base = ideal_mul(base, base);
    }
    return r;
}

QuadIdeal Field::ideal_conj(const QuadIdeal &I) const
{
    /* conjugate of u + v w: w maps to -w (m != 1 mod 4) or 1 - w */
    std::vector<std::pair<Int, Int>> gens;
    auto add_conj = [&](const Int &u, const Int &v) {
        if (mod4(m_) != 1)
            gens.push_back({u, -v});
        else
            gens.push_back({u + v, -v});
    };
    add_conj(I.a, 0);
    add_conj(I.b, I.c);
    return ideal_from_generators(gens);
}

bool Field::ideal_contains(const QuadIdeal &I, const QuadElement &x) const
{
    if (!is_integral(x))
        return false;
    auto [u, v] = omega_coords(x);
    if (v % I.c != 0)
        return false;
    Int u2 = u - (v / I.c) * I.b;
    return u2 % I.a == 0;
}

QuadElement Field::generator_of_principal(const QuadIdeal &I) const
{
    if (kind_ != FieldKind::Quadratic)
        throw std::logic_error("ideal generators need a quadratic field");
    Int N = ideal_norm(I);
    if (sgn(N) <= 0)
        throw std::domain_error("generator of the zero ideal");
    if (sgn(m_) < 0) {
        /* definite norm form: enumerate the finitely many norm-N elements */
        bool half = mod4(m_) == 1;
        Int absm = -m_;
        Int target = half ? 4 * N : N;
        for (Int v = 0; absm * v * v <= target; ++v) {
            Int rest = target - absm * v * v;
            Int x;
            if (!is_square(rest, &x))
                continue;
            std::vector<QuadElement> cands;
            if (half) {
                for (const Int &xx : {x, Int(-x)}) {
                    Int num = xx - v;
                    if (mpz_even_p(num.get_mpz_t()))
                        cands.push_back(
                            {make_rat(xx, 2), make_rat(v, 2)}); // (x + v sqrt m)/2
                    if (sgn(x) == 0)
                        break;
                }
            } else {
                cands.push_back({Rat(x), Rat(v)});
                if (sgn(x) != 0)
                    cands.push_back({Rat(-x), Rat(v)});
            }
            for (const QuadElement &g : cands) {
                if (!is_integral(g))
                    continue;
                if (abs(Int(norm(g).get_num())) != N)
                    continue;
                if (ideal_contains(I, g))
                    return g;
            }
        }
        throw std::logic_error("no generator found: ideal is not principal");
    }
    /* real case: either sign of the norm can occur; bound |y| through a
     * unit-balanced generator, |gamma| <= sqrt(N eps) */
    FundamentalUnit u = *fundamental_unit();
    Enclosure ue = embed(elt(make_rat(u.x, u.den), make_rat(u.y, u.den)), 64);
    Int eps_ceil = ceil_upper(ue);
    bool half = mod4(m_) == 1;
    Int den = half ? 2 : 1;
    Int ymax = isqrt_floor(den * den * N * (eps_ceil + 1) / m_) + 2;
    QuadElement found{Rat(0), Rat(0)};
    bool ok = false;
    for (Int y = 0; y <= ymax && !ok; ++y) {
        for (int sign : {1, -1}) {
            Int rest = m_ * y * y + sign * den * den * N;
            Int x;
            if (sgn(rest) < 0 || !is_square(rest, &x))
                continue;
            for (const Int &xx : {x, Int(-x)}) {
                QuadElement g{make_rat(xx, den), make_rat(y, den)};
                if (!is_integral(g))
                    continue;
                if (abs(norm(g)) != Rat(N))
                    continue;
                if (ideal_contains(I, g)) {
                    found = g;
                    ok = true;
                    break;
                }
                if (sgn(x) == 0)
                    break;
            }
            if (ok)
                break;
        }
    }
    if (!ok)
        throw std::logic_error("no generator found: ideal is not principal");
    /* balance by unit powers to minimize the height */
    QuadElement epsv = elt(make_rat(u.x, u.den), make_rat(u.y, u.den));
    QuadElement epsi = inv(epsv);
    auto h_of = [this](const QuadElement &g) { return height_pow_d(g); };
    QuadElement cur = found;
    QuadElement curh = h_of(cur);
    for (int guard = 0; guard < 1000; ++guard) {
        bool moved = false;
        for (const QuadElement &step : {epsv, epsi}) {
            QuadElement nxt = mul(cur, step);
            QuadElement nh = h_of(nxt);
            if (real_sign(sub(nh, curh)) < 0) {
                cur = nxt;
                curh = nh;
                moved = true;
                break;
            }
        }
        if (!moved)
            break;
    }
    return cur;
}

QuadForm Field::place_form(const DegreeOnePlace &P) const
{
    if (kind_ != FieldKind::Quadratic || sgn(m_) > 0)
        throw std::logic_error("place forms are computed for imaginary quadratic fields");
    QuadIdeal I = place_ideal(P);
    if (I.c != 1)
        throw std::logic_error("place ideal is not primitive");
    if (mod4(m_) != 1)
        return {I.a, 2 * I.b, (I.b * I.b - m_) / I.a};
    Int bb = 2 * I.b + 1;
    return {I.a, bb, (bb * bb - m_) / (4 * I.a)};
}

/* ---- heights ---- */

QuadElement Field::height_pow_d(const QuadElement &x) const
{
    require_arithmetic();
    if (x.is_zero())
        throw std::domain_error("height of zero");
    if (kind_ == FieldKind::Rational) {
        Int num = abs(Int(x.a.get_num())), den = Int(x.a.get_den());
        return {Rat(num > den ? num : den), Rat(0)};
    }
    /* finite part: norm of the denominator ideal of x = z/n */
    Int n = lcm(Int(x.a.get_den()), Int(x.b.get_den()));
    if (mod4(m_) == 1) {
        while (mpz_even_p(n.get_mpz_t()) &&
               is_integral(mul(x, elt(Rat(n / 2)))))
            n /= 2;
    }
    QuadElement z = mul(x, elt(Rat(n)));
    Int fin = 1;
    if (n > 1) {
        auto [u, v] = omega_coords(z);
        QuadIdeal D = ideal_from_generators({{u, v}, {n, 0}});
        fin = n * n / ideal_norm(D);
    }
    if (sgn(m_) < 0) {
        /* one complex place: |x|^2 = a^2 + |m| b^2 exactly */
        Rat s = x.a * x.a - Rat(m_) * x.b * x.b;
        Rat arch = s > 1 ? s : Rat(1);
        return {Rat(fin) * arch, Rat(0)};
    }
    /* two real places */
    QuadElement prod = elt(Rat(fin));
    for (const QuadElement &emb : {x, conj(x)}) {
        QuadElement av = real_sign(emb) >= 0 ? emb : neg(emb);
        QuadElement factor =
            real_sign(sub(av, elt(Rat(1)))) > 0 ? av : elt(Rat(1));
        prod = mul(prod, factor);
    }
    return prod;
}

Enclosure Field::height_pow_d_enclosure(const QuadElement &x, long prec) const
{
    QuadElement h = height_pow_d(x);
    if (kind_ == FieldKind::Rational || sgn(m_) < 0 || sgn(h.b) == 0)
        return Enclosure::of_rat(h.a, prec);
    return embed(h, prec);
}

/* ---- Sturm chains for supplied polynomials ---- */

namespace {

using PolyR = std::vector<Rat>;

void rtrim(PolyR &p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

PolyR rderiv(const PolyR &p)
{
    PolyR r;
    for (std::size_t i = 1; i < p.size(); ++i)
        r.push_back(Rat(static_cast<unsigned long>(i)) * p[i]);
    rtrim(r);
    return r;
}

PolyR rrem(PolyR a, const PolyR &b)
{
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= f * b[i];
        a.pop_back();
        rtrim(a);
    }
    return a;
}

int sign_at_infinity(const PolyR &p, bool positive)
{
    if (p.empty())
        return 0;
    int s = sgn(p.back());
    if (!positive && (p.size() - 1) % 2 != 0)
        s = -s;
    return s;
}

} // namespace

int count_real_roots(const std::vector<Int> &poly)
{
    PolyR f;
    for (const Int &c : poly)
        f.push_back(Rat(c));
    rtrim(f);
    if (f.size() <= 1)
        throw std::domain_error("constant polynomial has no field attached");
    std::vector<PolyR> chain{f, rderiv(f)};
    while (chain.back().size() > 1) {
        PolyR r = rrem(chain[chain.size() - 2], chain.back());
        if (r.empty())
            throw std::domain_error("polynomial must be squarefree");
        for (Rat &c : r)
            c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool positive) {
        int count = 0, last = 0;
        for (const PolyR &p : chain) {
            int s = sign_at_infinity(p, positive);
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++count;
            last = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

} // namespace ircert

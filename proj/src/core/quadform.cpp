#include "core/quadform.hpp"

#include <map>
#include <stdexcept>

namespace ircert {

bool is_primitive(const QuadForm &f)
{
    Int g = gcd(gcd(f.a, f.b), f.c);
    return abs(g) == 1;
}

/* ---- imaginary (definite) forms ---- */

bool is_reduced_imaginary(const QuadForm &f)
{
    if (sgn(f.a) <= 0 || sgn(f.c) <= 0)
        return false;
    Int ab = abs(f.b);
    if (!(ab <= f.a && f.a <= f.c))
        return false;
    if ((ab == f.a || f.a == f.c) && sgn(f.b) < 0)
        return false;
    return true;
}

namespace {

/* translate b into (-a, a], keeping the discriminant; c is recomputed */
void normalize_imaginary(QuadForm &f, const Int &D)
{
    Int twoa = 2 * f.a;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), f.b.get_mpz_t(), twoa.get_mpz_t()); // r in [0, 2a)
    if (r > f.a)
        r -= twoa;
    f.b = r;
    f.c = (f.b * f.b - D) / (4 * f.a);
}

} // namespace

QuadForm reduce_imaginary(QuadForm f)
{
    Int D = f.disc();
    if (sgn(D) >= 0)
        throw std::domain_error("definite reduction needs negative discriminant");
    if (sgn(f.a) <= 0)
        throw std::domain_error("definite reduction needs a > 0");
    normalize_imaginary(f, D);
    while (f.a > f.c) {
        f = QuadForm{f.c, -f.b, f.a};
        normalize_imaginary(f, D);
    }
    if (f.a == f.c && sgn(f.b) < 0)
        f.b = -f.b;
    return f;
}

std::vector<QuadForm> reduced_imaginary_forms(const Int &D)
{
    if (sgn(D) >= 0)
        throw std::domain_error("imaginary form list needs negative discriminant");
    Int r4;
    mpz_fdiv_r_ui(r4.get_mpz_t(), D.get_mpz_t(), 4);
    if (r4 != 0 && r4 != 1)
        throw std::domain_error("discriminant must be 0 or 1 mod 4");
    std::vector<QuadForm> out;
    Int absD = -D;
    /* reduced means |b| <= a <= c, so 3 b^2 <= |D| */
    for (Int b = mpz_odd_p(D.get_mpz_t()) ? 1 : 0; 3 * b * b <= absD; b += 2) {
        Int n = (b * b + absD) / 4; // = a c
        for (Int a = b > 0 ? b : Int(1); a * a <= n; ++a) {
            if (n % a != 0)
                continue;
            Int c = n / a;
            QuadForm f{a, b, c};
            if (!is_primitive(f))
                continue;
            out.push_back(f);
            if (sgn(b) > 0 && b < a && a < c)
                out.push_back(QuadForm{a, -b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int class_number_imaginary(const Int &D)
{
    return Int(reduced_imaginary_forms(D).size());
}

std::size_t class_index_imaginary(const QuadForm &f, const std::vector<QuadForm> &reduced)
{
    QuadForm r = reduce_imaginary(f);
    for (std::size_t i = 0; i < reduced.size(); ++i)
        if (reduced[i] == r)
            return i;
    throw std::logic_error("reduced form missing from class list");
}

/* ---- real (indefinite) forms ---- */

bool is_reduced_real(const QuadForm &f, const Int &D)
{
    /* 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, in integer terms
     * with s = floor(sqrt D) and D non-square: b <= s, s - b < 2|a| <= s + b */
    if (sgn(f.b) <= 0)
        return false;
    Int s = isqrt_floor(D);
    if (f.b > s)
        return false;
    Int ta = 2 * abs(f.a);
    return s - f.b < ta && ta <= s + f.b;
}

std::vector<QuadForm> reduced_real_forms(const Int &D)
{
    if (sgn(D) <= 0)
        throw std::domain_error("real form list needs positive discriminant");
    if (is_square(D))
        throw std::domain_error("discriminant must not be a square");
    Int r4;
    mpz_fdiv_r_ui(r4.get_mpz_t(), D.get_mpz_t(), 4);
    if (r4 != 0 && r4 != 1)
        throw std::domain_error("discriminant must be 0 or 1 mod 4");
    Int s = isqrt_floor(D);
    std::vector<QuadForm> out;
    for (Int b = mpz_odd_p(D.get_mpz_t()) ? 1 : 0; b <= s; b += 2) {
        if (sgn(b) == 0)
            continue;
        Int n = (D - b * b) / 4; // = |a c|, with a c < 0
        for (Int d = 1; d * d <= n; ++d) {
            if (n % d != 0)
                continue;
            Int pair[2] = {d, n / d};
            for (int k = 0; k < (pair[0] == pair[1] ? 1 : 2); ++k) {
                const Int &e = pair[k];
                Int te = 2 * e;
                if (!(s - b < te && te <= s + b))
                    continue;
                Int c = n / e;
                QuadForm f{e, b, -c};
                if (!is_primitive(f))
                    continue;
                out.push_back(f);
                out.push_back(QuadForm{-e, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuadForm rho_real(const QuadForm &f, const Int &D)
{
    /* successor (c, b', *) with b' = -b mod 2|c| placed in (sqrt D - 2|c|, sqrt D) */
    Int s = isqrt_floor(D);
    Int tc = 2 * abs(f.c);
    Int lo = s - tc + 1;
    Int t;
    mpz_fdiv_r(t.get_mpz_t(), Int(-f.b).get_mpz_t(), tc.get_mpz_t());
    Int shift;
    mpz_fdiv_r(shift.get_mpz_t(), Int(t - lo).get_mpz_t(), tc.get_mpz_t());
    Int bp = lo + shift;
    Int cp = (bp * bp - D) / (4 * f.c);
    return QuadForm{f.c, bp, cp};
}

Int real_cycle_count(const Int &D)
{
    std::vector<QuadForm> forms = reduced_real_forms(D);
    std::map<QuadForm, std::size_t> index;
    for (std::size_t i = 0; i < forms.size(); ++i)
        index.emplace(forms[i], i);
    std::vector<bool> seen(forms.size(), false);
    Int cycles = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        std::size_t j = i;
        do {
            seen[j] = true;
            QuadForm next = rho_real(forms[j], D);
            auto it = index.find(next);
            if (it == index.end())
                throw std::logic_error("reduction step left the reduced set");
            j = it->second;
        } while (!seen[j]);
    }
    return cycles;
}

Int class_number_real(const Int &D, bool unit_norm_is_minus_one)
{
    Int cycles = real_cycle_count(D);
    if (unit_norm_is_minus_one)
        return cycles;
    if (mpz_odd_p(cycles.get_mpz_t()))
        throw std::logic_error("odd cycle count with unit norm +1");
    return cycles / 2;
}

} // namespace ircert

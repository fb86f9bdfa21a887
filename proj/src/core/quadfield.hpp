#pragma once

#include "core/dyadic.hpp"
#include "core/quadform.hpp"

#include <optional>
#include <vector>

namespace ircert {

/* Ground fields the library computes over: the rationals, a quadratic field
 * Q(sqrt m), or a caller-supplied Galois field known only through its
 * numerical invariants.  Supplied fields support the bound machinery but no
 * element, curve, or ideal arithmetic. */
enum class FieldKind { Rational, Quadratic, Supplied };

struct SuppliedData {
    int degree = 0;
    Int disc;
    Int class_number;
    Rat reg_lo, reg_hi;    // certified bracket for the regulator
    std::vector<Int> poly; // minimal polynomial, ascending coefficients
};

/* element a + b sqrt(m) with rational coordinates (b = 0 over Q) */
struct QuadElement {
    Rat a, b;

    bool operator==(const QuadElement &o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
};

/* finite place of residue degree one above q: the root r identifies the
 * embedding sqrt(m) -> r into F_q (r = 0 over Q and at ramified places) */
struct DegreeOnePlace {
    Int q;
    Int r;
    bool ramified = false;
};

/* integral ideal in Hermite form Z a + Z (b + c w) on the basis {1, w},
 * with c | a, c | b, 0 <= b < a; the norm is a c */
struct QuadIdeal {
    Int a, b, c;
    bool operator==(const QuadIdeal &o) const { return a == o.a && b == o.b && c == o.c; }
};

struct FundamentalUnit {
    Int x, y;
    int den;  // 1, or 2 when the unit is (x + y sqrt m)/2
    int norm; // +1 or -1
};

class Field {
  public:
    static Field rationals();
    static Field quadratic(const Int &m);
    static Field supplied(SuppliedData data);

    FieldKind kind() const { return kind_; }
    const Int &radicand() const; // quadratic only
    int degree() const;
    Int disc() const;
    /* real embeddings / conjugate pairs; a Galois field is all-or-nothing */
    int r1() const;
    int r2() const;
    int unit_rank() const;
    Int class_number() const;
    bool totally_real() const { return r1() > 0; }
    Enclosure regulator(long prec) const;
    std::optional<FundamentalUnit> fundamental_unit() const; // real quadratic only

    /* rational primes and their degree-one places */
    bool is_totally_split(const Int &q) const;
    std::vector<DegreeOnePlace> degree_one_places(const Int &q) const;

    /* ---- element arithmetic (Rational and Quadratic kinds only) ---- */
    QuadElement elt(const Rat &a, const Rat &b = Rat(0)) const;
    QuadElement add(const QuadElement &x, const QuadElement &y) const;
    QuadElement sub(const QuadElement &x, const QuadElement &y) const;
    QuadElement mul(const QuadElement &x, const QuadElement &y) const;
    QuadElement neg(const QuadElement &x) const;
    QuadElement conj(const QuadElement &x) const;
    QuadElement inv(const QuadElement &x) const;
    QuadElement div(const QuadElement &x, const QuadElement &y) const;
    QuadElement pow(QuadElement x, unsigned long e) const;
    Rat norm(const QuadElement &x) const;
    Rat trace(const QuadElement &x) const;
    bool is_integral(const QuadElement &x) const;
    /* coordinates over {1, w}; defined only for integral elements */
    std::pair<Int, Int> omega_coords(const QuadElement &x) const;
    QuadElement from_omega_coords(const Int &u, const Int &v) const;

    /* sign of a + b sqrt(m) under the embedding sqrt(m) > 0 (real case), or
     * of a rational element; exact */
    int real_sign(const QuadElement &x) const;
    /* enclosure of the image of x under the embedding sqrt(m) -> +sqrt(m)
     * (real case); for imaginary m this is the real part basis evaluation and
     * is only used internally */
    Enclosure embed(const QuadElement &x, long prec) const;

    /* ---- places, valuations, reduction ---- */
    Int valuation(const QuadElement &x, const DegreeOnePlace &P) const;
    /* image of x in F_q; requires v_P(x) >= 0 */
    Int reduce_mod_place(const QuadElement &x, const DegreeOnePlace &P) const;

    /* ---- ideals (Quadratic kind) ---- */
    QuadIdeal ideal_from_generators(const std::vector<std::pair<Int, Int>> &gens) const;
    QuadIdeal principal_ideal(const QuadElement &x) const;
    QuadIdeal place_ideal(const DegreeOnePlace &P) const;
    QuadIdeal ideal_mul(const QuadIdeal &I, const QuadIdeal &J) const;
    QuadIdeal ideal_pow(const QuadIdeal &I, unsigned long e) const;
    QuadIdeal ideal_conj(const QuadIdeal &I) const;
    Int ideal_norm(const QuadIdeal &I) const { return I.a * I.c; }
    bool ideal_contains(const QuadIdeal &I, const QuadElement &x) const;
    bool ideal_equal(const QuadIdeal &I, const QuadIdeal &J) const { return I == J; }

    /* a generator of I when I is principal of norm N(I); the real-quadratic
     * result is balanced by unit powers to keep its height small */
    QuadElement generator_of_principal(const QuadIdeal &I) const;

    /* binary quadratic form of the class of P (imaginary quadratic) */
    QuadForm place_form(const DegreeOnePlace &P) const;

    /* ---- heights ----
     * exact value of H(x)^degree as an element under the real embedding
     * (rational for Q and imaginary m; possibly a surd for real m) */
    QuadElement height_pow_d(const QuadElement &x) const;
    Enclosure height_pow_d_enclosure(const QuadElement &x, long prec) const;

  private:
    Field() = default;
    void require_arithmetic() const;
    /* image of u + v w in F_q under w -> r_w (quadratic kind) */
    Int reduce_mod_place_raw(const Int &u, const Int &v, const DegreeOnePlace &P) const;
    FieldKind kind_ = FieldKind::Rational;
    Int m_;            // quadratic radicand (squarefree, not 0 or 1)
    SuppliedData sup_; // supplied kind only
    /* caches */
    mutable std::optional<FundamentalUnit> unit_;
    mutable std::optional<Int> h_;
};

/* real-root count of a squarefree integer polynomial (Sturm) */
int count_real_roots(const std::vector<Int> &poly);

/* square root mod an odd prime q (q machine-sized); empty if none */
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t q);

} // namespace ircert

#pragma once

#include "core/exact.hpp"

#include <vector>

namespace ircert {

/* Integral binary quadratic form a x^2 + b xy + c y^2. */
struct QuadForm {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm &o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm &o) const
    {
        if (a != o.a)
            return a < o.a;
        if (b != o.b)
            return b < o.b;
        return c < o.c;
    }
};

bool is_primitive(const QuadForm &f);

/* negative discriminant, positive definite (a > 0) */
bool is_reduced_imaginary(const QuadForm &f);
QuadForm reduce_imaginary(QuadForm f);
/* all reduced primitive forms of discriminant D < 0, sorted */
std::vector<QuadForm> reduced_imaginary_forms(const Int &D);
Int class_number_imaginary(const Int &D);
/* index of f's class in reduced_imaginary_forms(f.disc()) */
std::size_t class_index_imaginary(const QuadForm &f, const std::vector<QuadForm> &reduced);

/* positive non-square discriminant, indefinite forms */
bool is_reduced_real(const QuadForm &f, const Int &D);
std::vector<QuadForm> reduced_real_forms(const Int &D);
/* the reduction-step permutation of the reduced forms */
QuadForm rho_real(const QuadForm &f, const Int &D);
/* number of rho-cycles = narrow class number */
Int real_cycle_count(const Int &D);
/* wide class number: cycles if the fundamental unit has norm -1, half otherwise */
Int class_number_real(const Int &D, bool unit_norm_is_minus_one);

} // namespace ircert

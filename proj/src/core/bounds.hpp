#pragma once

#include "core/quadfield.hpp"

namespace ircert {

/* The explicit constants controlling when an isogeny character is pinned
 * down: a height floor delta, the unit-adjustment constant C1, the generator
 * spread C2 = exp(12 d C1 R), the main bound C(K,n), the multiplicative-place
 * bound B(K;q), the torsion ceiling, and the Chebotarev norm cap with its
 * derived field bound C_K.  Real-valued quantities come back as enclosures;
 * every integer bound is an outward-rounded ceiling, so raising the working
 * precision can only sharpen it. */

/* positive lower bound for d_K ln H(alpha) over non-unit-root alpha:
 * ln2/(r+1) in degree <= 2, else the better of 1/(53 d ln 6d) and
 * (ln ln d / ln d)^3 / 1201 */
Enclosure delta_K(const Field &K, long prec);

/* C1 = r^(r+1) delta^-(r-1) / 2; exactly 0 for unit rank 0, exactly 1/2 for
 * rank 1 */
Enclosure c1_bound(const Field &K, long prec);

/* C2 = exp(12 d C1 R); exactly 1 when C1 = 0 */
Enclosure c2_bound(const Field &K, long prec);

/* C(K,n) = (n^12h C2 + n^6h)^2d, integer ceiling (exact when C2 = 1) */
Int c_of_n(const Field &K, const Int &n, long prec);

/* (1 + 3^6dh)^2, the prime-torsion ceiling over fields of degree 12 d h */
Int torsion_bound(const Field &K);

/* B(K;q) = max(C(K,q), torsion); q must be totally split in K */
Int b_of_q(const Field &K, const Int &q, long prec);

/* ceiling of 2 |disc|^(A h), the norm cap defining the place set J_K */
Int jk_bound(const Field &K, const Rat &A);

/* C_K = max(C(K, jk_bound), torsion) */
Int c_K_bound(const Field &K, const Rat &A, long prec);

} // namespace ircert

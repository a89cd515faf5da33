"""Repetition/check/multiplier codes, the regular LDGM ensemble, its exact
average spectra, and the analytic bound chain used for parameter design.

Spectra here are exact rationals; the bound functions (divergence, J,
delta_qd and friends) are 64-bit floats with minus/plus infinity as
first-class values, and 0 * (-inf) = 0 in the probability-weighted sums.
"""

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SupportViolation, TooLarge
from .genfun import GenPoly, expect_rename, multiplier_kernel
from .spectra import (
    CodeEnsemble,
    LinearCode,
    TypeVector,
    type_class_size,
)

INF = float("inf")


@dataclass(frozen=True)
class LdgmParams:
    """Regular (c, d) LDGM ensemble over GF(q) at size parameter n.

    The code is check after multiplier after interleaver after repetition:
    input length d'n, intermediate length c d'n = c' d n, output length c'n,
    where c' = c/gcd(c,d) and d' = d/gcd(c,d).
    """

    field: object
    c: int
    d: int
    n: int

    @property
    def cp(self):
        return self.c // math.gcd(self.c, self.d)

    @property
    def dp(self):
        return self.d // math.gcd(self.c, self.d)

    @property
    def in_len(self):
        return self.dp * self.n

    @property
    def mid_len(self):
        return self.c * self.dp * self.n

    @property
    def out_len(self):
        return self.cp * self.n


def stretch_type(P, c):
    """Type of the c-fold repetition of any sequence of type P."""
    return TypeVector(tuple(x * c for x in P.counts))


# ---------------------------------------------------------------------------
# generating functions of the building blocks


def rep_genfun(q, c):
    """(1/q) sum_a u_a v_a^c, the single-symbol repetition code."""
    out = GenPoly.constant(0)
    for a in range(q):
        out = out + GenPoly.variable(("u", a)) * GenPoly.variable(("v", a)) ** c * Fraction(1, q)
    return out


def rrep_genfun(q, c):
    """Expected genfun of repetition followed by uniform nonzero multipliers."""
    K = multiplier_kernel(q)
    g = expect_rename(rep_genfun(q, c), "u", K)
    return expect_rename(g, "v", K)


def rep_joint_spectrum(q, c, n):
    """Diagonal joint spectrum: mass S(F_q^n)(P) at (P, P-stretched-by-c)."""
    from .gf import field_make
    from .spectra import space_spectrum

    field = field_make(q)
    return {
        (P, stretch_type(P, c)): mass for P, mass in space_spectrum(n, field).items()
    }


def _u_sum(q):
    return GenPoly.linear_form({("u", a): Fraction(1) for a in range(q)})


def _u_alt(q):
    """(q u_0 - (u)_sum) / (q - 1)."""
    coeffs = {("u", 0): Fraction(1)}
    for a in range(1, q):
        coeffs[("u", a)] = Fraction(-1, q - 1)
    return GenPoly.linear_form(coeffs)


def chk_single_avg_genfun(q, d):
    """Expected genfun of one randomized check node of degree d."""
    s = _u_sum(q)
    t = _u_alt(q)
    v_sum = GenPoly.linear_form({("v", a): Fraction(1) for a in range(q)})
    v_alt = GenPoly.linear_form(
        dict(
            [(("v", 0), Fraction(q - 1))]
            + [(("v", a), Fraction(-1)) for a in range(1, q)]
        )
    )
    # v_alt is q v_0 - (v)_sum
    return (s**d * v_sum + t**d * v_alt) * Fraction(1, q ** (d + 1))


def chk_avg_genfun(q, d, n):
    """n independent parallel check nodes; variables merged across copies."""
    return chk_single_avg_genfun(q, d) ** n


def g1(q, d, n, Q):
    """Polynomial in u whose u^{dnP} coefficient is the expected check-code
    spectrum at (P, Q)."""
    s = _u_sum(q) ** d
    t = _u_alt(q) ** d
    nq0 = Q.counts[0]
    poly = (s + t * (q - 1)) ** nq0 * (s - t) ** (n - nq0)
    return poly * Fraction(type_class_size(Q), q ** (n * (d + 1)))


def chk_avg_spectrum(q, d, n, P, Q):
    """Exact expected spectrum of the parallel randomized check code."""
    assert P.n == d * n and Q.n == n
    poly = g1(q, d, n, Q)
    return Fraction(poly.coef({("u", a): P.counts[a] for a in range(q)}))


def g2_bound(q, d, n, O, P, Q):
    """Upper bound on the expected check spectrum from evaluating g1 at the
    point O instead of extracting the coefficient."""
    for a in range(q):
        if P.counts[a] > 0 and O.counts[a] == 0:
            raise SupportViolation(f"O gives zero mass to symbol {a} in P's support")
    o0 = Fraction(O.counts[0], O.n)
    t = ((q * o0 - 1) / Fraction(q - 1)) ** d
    nq0 = Q.counts[0]
    o_pow = Fraction(1)
    for a in range(q):
        o_pow *= Fraction(O.counts[a], O.n) ** P.counts[a]
    return (
        Fraction(type_class_size(Q), q ** (n * (d + 1)))
        / o_pow
        * (1 + (q - 1) * t) ** nq0
        * (1 - t) ** (n - nq0)
    )


# ---------------------------------------------------------------------------
# analytic bound chain


def divergence(x, y):
    """Binary divergence D(x || y) in nats, extended-real valued."""
    if not (0 <= x <= 1 and 0 <= y <= 1):
        raise DomainError("divergence arguments must lie in [0, 1]")
    total = 0.0
    for p, r in ((x, y), (1 - x, 1 - y)):
        if p == 0:
            continue
        if r == 0:
            return INF
        total += p * math.log(p / r)
    return total


def entropy(P):
    """Shannon entropy in nats of the distribution induced by a type."""
    n = P.n
    return -sum((c / n) * math.log(c / n) for c in P.counts if c)


def Delta(P):
    """H(P) minus the normalized log multinomial; in [0, q ln(n+1)/n]."""
    return entropy(P) - math.log(type_class_size(P)) / P.n


def J(q, d, x, y):
    if not (0 <= x <= 1 and 0 <= y <= 1):
        raise DomainError("J arguments must lie in [0, 1]")
    t = ((q * x - 1) / (q - 1)) ** d
    total = 0.0
    for w, arg in ((y, 1 + (q - 1) * t), (1 - y, 1 - t)):
        if w == 0:
            continue
        if arg < 0:
            if arg > -1e-15:
                arg = 0.0
            else:
                raise DomainError(f"negative log argument {arg}")
        total += -INF if arg == 0 else w * math.log(arg)
    return total


def lemma2_bound(q, d, x, y):
    """The closed-form cap ln[1 + (qy-1)((qx-1)/(q-1))^d]."""
    arg = 1 + (q * y - 1) * ((q * x - 1) / (q - 1)) ** d
    if arg < 0:
        raise DomainError(f"negative log argument {arg}")
    return -INF if arg == 0 else math.log(arg)


def delta_qd(q, d, x, y, tol=1e-9, grid=10**4):
    """inf over xh in (0,1) of d D(x||xh) + J(q,d,xh,y), numerically.

    Grid scan plus golden-section refinement around the best cell; the
    boundary value J(q,d,x,y) (the xh -> x limit) caps the result, so the
    return value never exceeds J + tol.
    """

    def f(xh):
        return d * divergence(x, xh) + J(q, d, xh, y)

    best_i, best_v = None, INF
    for i in range(1, grid):
        v = f(i / grid)
        if v < best_v:
            best_i, best_v = i, v
    if best_i is not None:
        lo = max(1e-15, (best_i - 1) / grid)
        hi = min(1 - 1e-15, (best_i + 1) / grid)
        phi = (math.sqrt(5) - 1) / 2
        a, b = lo, hi
        c1 = b - phi * (b - a)
        c2 = a + phi * (b - a)
        f1, f2 = f(c1), f(c2)
        while b - a > tol:
            if f1 <= f2:
                b, c2, f2 = c2, c1, f1
                c1 = b - phi * (b - a)
                f1 = f(c1)
            else:
                a, c1, f1 = c1, c2, f2
                c2 = a + phi * (b - a)
                f2 = f(c2)
        best_v = min(best_v, f1, f2)
    return min(best_v, J(q, d, x, y))


# ---------------------------------------------------------------------------
# the LDGM ensemble itself


def ldgm_generator(params, perm, mults):
    """Dense generator for a fixed interleaver and multiplier assignment.

    perm maps pre-interleaver position p to its post-interleaver slot;
    mults[j] is the nonzero multiplier at post-interleaver position j.
    Input symbol i feeds positions i*c .. i*c+c-1; output check j sums
    post-interleaver positions j*d .. j*d+d-1.
    """
    field = params.field
    c, d = params.c, params.d
    gen = [[0] * params.out_len for _ in range(params.in_len)]
    for p in range(params.mid_len):
        i = p // c
        slot = perm[p]
        j = slot // d
        gen[i][j] = field.add(gen[i][j], mults[slot])
    return LinearCode(field, tuple(tuple(r) for r in gen))


def ldgm_sample(params, seed):
    """Seeded draw: Fisher-Yates interleaver plus uniform nonzero multipliers.

    Returns the code and the pre-cancellation edge list (input symbol,
    output check, multiplier).
    """
    rng = random.Random(seed)
    perm = list(range(params.mid_len))
    rng.shuffle(perm)
    q = params.field.q
    mults = tuple(rng.randrange(1, q) if q > 2 else 1 for _ in range(params.mid_len))
    code = ldgm_generator(params, perm, mults)
    edges = [
        (p // params.c, perm[p] // params.d, mults[perm[p]]) for p in range(params.mid_len)
    ]
    return code, edges


def ldgm_ensemble_exact(params, limit=8):
    """Explicit uniform support over every interleaver and multiplier choice."""
    L = params.mid_len
    if L > limit:
        raise TooLarge(f"exact expansion capped at intermediate length {limit}")
    q = params.field.q
    mult_space = list(itertools.product(range(1, q), repeat=L))
    total = math.factorial(L) * len(mult_space)
    p = Fraction(1, total)
    merged = {}
    for perm in itertools.permutations(range(L)):
        for mults in mult_space:
            code = ldgm_generator(params, perm, mults)
            merged[code] = merged.get(code, 0) + p
    return CodeEnsemble(
        support=tuple(merged.items()),
        description=f"ldgm q={q} c={params.c} d={params.d} n={params.n}",
    )


def ldgm_conditional_spectrum(params, P, Q):
    """Exact E[S(Q|P)] of the LDGM ensemble.

    The repetition stage maps type P to the same distribution on the longer
    intermediate block, so the conditional equals that of the randomized
    check code at the stretched type.
    """
    q = params.field.q
    assert P.n == params.in_len and Q.n == params.out_len
    Pt = stretch_type(P, params.c)
    joint = chk_avg_spectrum(q, params.d, params.out_len, Pt, Q)
    marginal = Fraction(type_class_size(Pt), q**params.mid_len)
    return joint / marginal


def ldgm_alpha_bound(params, P, Q):
    """(c/d) delta_{q,d}(P(0), Q(0)) + c Delta at the stretched type: the
    upper bound on (1/(d'n)) ln alpha."""
    q = params.field.q
    x = P.counts[0] / P.n
    y = Q.counts[0] / Q.n
    return (params.c / params.d) * delta_qd(q, params.d, x, y) + params.c * Delta(
        stretch_type(P, params.c)
    )


# ---------------------------------------------------------------------------
# design helpers


def rho0_of(q, r0, gamma, d):
    return math.log(1 + (q - 1) * (q * gamma / (q - 1)) ** d) / r0


def rho0_and_dq(q, r0, gamma1, gamma2, delta):
    """Minimal check degree with rho0 <= delta, and the achieved rho0.

    gamma is the larger of the two window half-widths; d_min comes from the
    ceiling formula and is then verified (and nudged, in case of float
    borderline) so the returned pair really satisfies rho0 <= delta.
    """
    if r0 <= 0 or delta <= 0:
        raise DomainError("need r0 > 0 and delta > 0")
    if not (0 < gamma1 <= 1 / q) or gamma1 == 0.5:
        raise DomainError(f"gamma1={gamma1} outside (0, 1/q] \\ {{1/2}}")
    if not (0 < gamma2 < (q - 1) / q):
        raise DomainError(f"gamma2={gamma2} outside (0, (q-1)/q)")
    gamma = max(gamma1, gamma2)
    ratio = q * gamma / (q - 1)
    numer = math.exp(r0 * delta) - 1
    if numer >= q - 1:
        d_min = 1
    else:
        d_min = max(1, math.ceil(math.log(numer / (q - 1)) / math.log(ratio)))
    while rho0_of(q, r0, gamma, d_min) > delta:
        d_min += 1
    return {"rho0": rho0_of(q, r0, gamma, d_min), "d_min": d_min, "gamma": gamma}


# ---------------------------------------------------------------------------
# K_q


def kq_product(q, terms):
    out = Fraction(1)
    for i in range(1, terms + 1):
        out *= 1 - Fraction(1, q**i)
    return out


def kq_series(q, terms):
    """Euler pentagonal expansion 1 + sum (-1)^k [q^{-k(3k-1)/2} + q^{-k(3k+1)/2}]."""
    out = Fraction(1)
    k = 1
    while k * (3 * k - 1) // 2 <= terms:
        sign = -1 if k % 2 else 1
        out += sign * (
            Fraction(1, q ** (k * (3 * k - 1) // 2)) + Fraction(1, q ** (k * (3 * k + 1) // 2))
        )
        k += 1
    return out


def K_q(q, terms=64):
    return float(kq_product(q, terms))


def full_rank_probability(q, n):
    """Exact P{a uniform n x n matrix over GF(q) is invertible}."""
    return kq_product(q, n)

"""Serial concatenation, the kernel/image equivalence constructions, the
LDGM parameter design recipe, and the single-code lower bound."""

import itertools
import math
import random
from fractions import Fraction

from .errors import DimensionMismatch, DomainError, TooLarge
from .ldgm import full_rank_probability, kq_product, rho0_and_dq, rho0_of
from .linalg import matmul, null_space, rref, transpose
from .spectra import (
    CodeEnsemble,
    ENUM_LIMIT,
    LinearCode,
    PERM_LIMIT,
    all_vectors,
    alpha_table,
    single_code_ensemble,
)


def _as_ensemble(obj):
    return obj if isinstance(obj, CodeEnsemble) else single_code_ensemble(obj)


def _perm_matrix(field, perm):
    n = len(perm)
    return tuple(tuple(1 if perm[i] == j else 0 for j in range(n)) for i in range(n))


def compose(outer, inner, perm=None, uniform=False):
    """Concatenation outer, then an interleaver, then inner.

    perm is an explicit permutation of the intermediate coordinates; with
    uniform=True the result is the ensemble over all interleavers instead.
    Generator of each member is A_outer . P_sigma . A_inner.
    """
    F, G = _as_ensemble(outer), _as_ensemble(inner)
    if F.m != G.n:
        raise DimensionMismatch(f"outer emits length {F.m}, inner expects {G.n}")
    field, mid = F.field, F.m
    if uniform:
        if mid > PERM_LIMIT:
            raise TooLarge(f"uniform interleaver expansion capped at {PERM_LIMIT}")
        perms = list(itertools.permutations(range(mid)))
    else:
        perms = [tuple(perm) if perm is not None else tuple(range(mid))]
    scale = Fraction(1, len(perms))
    merged = {}
    for fc, fp in F.require_support():
        for sigma in perms:
            left = matmul(field, fc.generator, _perm_matrix(field, sigma))
            for gc, gp in G.require_support():
                code = LinearCode(field, matmul(field, left, gc.generator))
                merged[code] = merged.get(code, 0) + fp * gp * scale
    if len(merged) == 1 and next(iter(merged.values())) == 1:
        return next(iter(merged))
    return CodeEnsemble(support=tuple(merged.items()), description="concatenation")


def outer_weight_window(f, limit=ENUM_LIMIT):
    """Range of the zero-symbol fraction P(0) over nonzero codewords of f,
    reported as the tightest window around 1/q."""
    field = f.field
    if field.q**f.n > limit:
        raise TooLarge("image enumeration too large")
    q = field.q
    zero_in = (0,) * f.n
    p0s = set()
    for x in all_vectors(field, f.n):
        y = f.apply(x)
        if x == zero_in or not any(y):
            continue
        p0s.add(Fraction(y.count(0), f.m))
    if not p0s:
        raise DomainError("code has no nonzero codewords")
    p0_min, p0_max = min(p0s), max(p0s)
    return {
        "p0_min": p0_min,
        "p0_max": p0_max,
        "gamma1": Fraction(1, q) - p0_min,
        "gamma2": p0_max - Fraction(1, q),
    }


def design_concat(q, outer_rate, p0_min, p0_max, delta, inner_rate=None):
    """Pick the (c, d) of an inner LDGM code so the concatenated code's
    goodness figure is at most delta.

    outer_rate is R(f) = n/m of the outer code.  inner_rate r0 = d/c defaults
    to 1/(2 outer_rate), i.e. an overall rate-1/2 concatenation; pass it
    explicitly for any other rate chain.  The certificate records
    rho0 / outer_rate <= delta with all inputs.
    """
    outer_rate = Fraction(outer_rate)
    if inner_rate is None:
        inner_rate = 1 / (2 * outer_rate)
    r0 = Fraction(inner_rate)
    p0_min = Fraction(p0_min).limit_denominator(10**9)
    p0_max = Fraction(p0_max).limit_denominator(10**9)
    gamma1 = Fraction(1, q) - p0_min
    gamma2 = p0_max - Fraction(1, q)
    target = delta * float(outer_rate)
    res = rho0_and_dq(q, float(r0), float(gamma1), float(gamma2), target)
    d = res["d_min"]
    # d/c must equal r0 exactly, so bump d to the next multiple of r0's numerator
    num = r0.numerator
    while d % num:
        d += 1
    c = int(d / r0)
    rho0 = rho0_of(q, float(r0), res["gamma"], d)
    bound = rho0 / float(outer_rate)
    return {
        "q": q,
        "outer_rate": str(outer_rate),
        "p0_window": [str(p0_min), str(p0_max)],
        "delta": delta,
        "gamma": res["gamma"],
        "inner_rate": str(r0),
        "d": d,
        "c": c,
        "rho0": rho0,
        "bound": bound,
        "ok": bound <= delta + 1e-12,
    }


# ---------------------------------------------------------------------------
# kernel/image preserving equivalents


def _kernel_basis(field, A):
    return rref(field, null_space(field, transpose(A), len(A)))[0]


def _row_space(field, A):
    return rref(field, A)[0]


def wilson_interval(successes, trials, z=1.96):
    p = successes / trials
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


def equivalence_G1(F, exact=True, samples=10**5, seed=0, limit=ENUM_LIMIT):
    """Left-compose F with a uniform square random code on its output side
    and report how often the kernel survives."""
    F = _as_ensemble(F)
    field, m = F.field, F.m
    support = F.require_support()
    if exact:
        count = field.q ** (m * m)
        if count > limit:
            raise TooLarge(f"{count} matrices; use exact=False")
        prob = Fraction(0)
        for code, p in support:
            base = _kernel_basis(field, code.generator)
            hits = 0
            for flat in all_vectors(field, m * m):
                M = tuple(tuple(flat[i * m : (i + 1) * m]) for i in range(m))
                comp = matmul(field, code.generator, M)
                if _kernel_basis(field, comp) == base:
                    hits += 1
            prob += p * Fraction(hits, count)
        return {"probability": prob, "kq": kq_product(field.q, 64), "exact": True}
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples):
        code = F.draw(rng.randrange(1 << 30))
        M = tuple(tuple(rng.randrange(field.q) for _ in range(m)) for _ in range(m))
        comp = matmul(field, code.generator, M)
        if _kernel_basis(field, comp) == _kernel_basis(field, code.generator):
            hits += 1
    lo, hi = wilson_interval(hits, samples)
    return {
        "probability": hits / samples,
        "interval95": (lo, hi),
        "kq": float(kq_product(field.q, 64)),
        "exact": False,
    }


def equivalence_G2(F, exact=True, samples=10**5, seed=0, limit=ENUM_LIMIT):
    """Right-compose F with a uniform square random code on its input side
    and report how often the image survives."""
    F = _as_ensemble(F)
    field, n = F.field, F.n
    support = F.require_support()
    if exact:
        count = field.q ** (n * n)
        if count > limit:
            raise TooLarge(f"{count} matrices; use exact=False")
        prob = Fraction(0)
        for code, p in support:
            base = _row_space(field, code.generator)
            hits = 0
            for flat in all_vectors(field, n * n):
                M = tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
                comp = matmul(field, M, code.generator)
                if _row_space(field, comp) == base:
                    hits += 1
            prob += p * Fraction(hits, count)
        return {"probability": prob, "kq": kq_product(field.q, 64), "exact": True}
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples):
        code = F.draw(rng.randrange(1 << 30))
        M = tuple(tuple(rng.randrange(field.q) for _ in range(n)) for _ in range(n))
        comp = matmul(field, M, code.generator)
        if _row_space(field, comp) == _row_space(field, code.generator):
            hits += 1
    lo, hi = wilson_interval(hits, samples)
    return {
        "probability": hits / samples,
        "interval95": (lo, hi),
        "kq": float(kq_product(field.q, 64)),
        "exact": False,
    }


# ---------------------------------------------------------------------------
# single-code lower bound


def _balanced_multinomial(qy, m):
    base, extra = divmod(m, qy)
    counts = [base + 1] * extra + [base] * (qy - extra)
    out = math.factorial(m)
    for c in counts:
        out //= math.factorial(c)
    return out


def single_code_lower_bound(alphabet_size, m):
    """|Y|^m over the largest multinomial coefficient: no single code's
    maximum alpha can fall below this."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if alphabet_size < 2:
        raise ValueError("alphabet_size must be >= 2")
    return Fraction(alphabet_size**m, _balanced_multinomial(alphabet_size, m))


def check_lower_bound(code):
    """Compare a single code's max alpha over nonzero input types against
    the bound; returns the pair and whether the bound is respected."""
    E = single_code_ensemble(code)
    table = alpha_table(E)
    best = max(a for (P, _), a in table.items() if not P.is_zero_type())
    bound = single_code_lower_bound(code.field.q, code.m)
    return {"max_alpha": best, "bound": bound, "ok": best >= bound}

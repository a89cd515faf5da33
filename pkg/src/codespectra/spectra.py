"""Types, spectra, alpha/rho, conditionals and randomized-code transforms.

Everything probabilistic in this module is an exact Fraction.  A "spectrum"
is a plain dict mapping TypeVector to Fraction; a joint spectrum maps
(TypeVector, TypeVector) pairs.  Brute-force enumeration is the ground truth
throughout, with explicit size limits.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    EmptySequence,
    EmptySet,
    SupportExplosion,
    TooLarge,
    UnsupportedSampler,
    ZeroMarginal,
)
from .linalg import matvec, rank

ENUM_LIMIT = 1 << 20
PERM_LIMIT = 8


@dataclass(frozen=True)
class TypeVector:
    """Empirical distribution of a sequence, stored as symbol counts.

    counts is indexed by the field's element order (0..q-1), so two sequences
    have the same type iff their TypeVectors compare equal.
    """

    counts: tuple

    @property
    def n(self):
        return sum(self.counts)

    @property
    def q(self):
        return len(self.counts)

    def prob(self, a):
        return Fraction(self.counts[a], self.n)

    def is_zero_type(self):
        return self.counts[0] == self.n


def zero_type(n, q):
    return TypeVector((n,) + (0,) * (q - 1))


def type_of(seq, field):
    seq = tuple(seq)
    if not seq:
        raise EmptySequence("cannot take the type of an empty sequence")
    counts = [0] * field.q
    for a in seq:
        counts[a] += 1
    return TypeVector(tuple(counts))


def enumerate_types(n, field, limit=ENUM_LIMIT):
    if n < 1:
        raise ValueError("n must be >= 1")
    q = field.q
    total = math.comb(n + q - 1, q - 1)
    if total > limit:
        raise TooLarge(f"{total} types exceeds limit {limit}")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(TypeVector(prefix + (remaining,)))
            return
        for c in range(remaining + 1):
            rec(prefix + (c,), remaining - c, slots - 1)

    rec((), n, q)
    return out


def type_class_size(P):
    """Number of sequences with type P, the multinomial n over nP."""
    size = math.factorial(P.n)
    for c in P.counts:
        size //= math.factorial(c)
    return size


def all_vectors(field, n):
    return itertools.product(range(field.q), repeat=n)


def space_spectrum(n, field):
    denom = field.q**n
    return {P: Fraction(type_class_size(P), denom) for P in enumerate_types(n, field)}


def set_spectrum(A, field):
    A = list(A)
    if not A:
        raise EmptySet("spectrum of an empty set")
    out = {}
    w = Fraction(1, len(A))
    for x in A:
        P = type_of(x, field)
        out[P] = out.get(P, 0) + w
    return out


def partition_make(blocks, n):
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    seen = set()
    for b in blocks:
        if not b:
            raise ValueError("empty partition block")
        for i in b:
            if i in seen or not 0 <= i < n:
                raise ValueError("partition blocks must disjointly cover 0..n-1")
            seen.add(i)
    if len(seen) != n:
        raise ValueError("partition does not cover all coordinates")
    return blocks


def u_set_spectrum(A, field, partition):
    """Spectrum refined per block of a coordinate partition.

    Keys are tuples of TypeVectors, one per block in partition order.
    """
    A = list(A)
    if not A:
        raise EmptySet("spectrum of an empty set")
    partition = partition_make(partition, len(A[0]))
    out = {}
    w = Fraction(1, len(A))
    for x in A:
        key = tuple(type_of([x[i] for i in block], field) for block in partition)
        out[key] = out.get(key, 0) + w
    return out


# ---------------------------------------------------------------------------
# linear codes and ensembles


@dataclass(frozen=True)
class LinearCode:
    """The map x -> xA (+ offset when affine), A an n x m generator matrix."""

    field: object
    generator: tuple
    offset: tuple = None

    @property
    def n(self):
        return len(self.generator)

    @property
    def m(self):
        return len(self.generator[0])

    def apply(self, x):
        y = matvec(self.field, x, self.generator)
        if self.offset is not None:
            y = tuple(self.field.add(a, b) for a, b in zip(y, self.offset))
        return y

    def is_affine(self):
        return self.offset is not None and any(self.offset)


@dataclass(frozen=True)
class CodeEnsemble:
    """Random linear code: explicit (code, probability) support or a sampler.

    Exact-expectation operations require the explicit support; a
    sampler-backed ensemble only supports seeded draws.
    """

    support: tuple = None
    sampler: object = None
    description: str = ""

    def __post_init__(self):
        if self.support is not None:
            total = sum(p for _, p in self.support)
            assert total == 1, f"support probabilities sum to {total}"

    def require_support(self):
        if self.support is None:
            raise UnsupportedSampler(
                f"exact expectation needs an explicit support ({self.description!r})"
            )
        return self.support

    @property
    def field(self):
        code = self.support[0][0] if self.support else self.sampler(0)
        return code.field

    @property
    def n(self):
        code = self.support[0][0] if self.support else self.sampler(0)
        return code.n

    @property
    def m(self):
        code = self.support[0][0] if self.support else self.sampler(0)
        return code.m

    def draw(self, seed):
        if self.sampler is not None:
            return self.sampler(seed)
        import random

        rng = random.Random(seed)
        u = Fraction(rng.randrange(10**9), 10**9)
        acc = Fraction(0)
        for code, p in self.support:
            acc += p
            if u < acc:
                return code
        return self.support[-1][0]


def single_code_ensemble(code):
    return CodeEnsemble(support=((code, Fraction(1)),), description="single code")


def all_matrices_ensemble(field, n, m, limit=ENUM_LIMIT):
    count = field.q ** (n * m)
    if count > limit:
        raise TooLarge(f"{count} matrices exceeds limit {limit}")
    p = Fraction(1, count)
    support = []
    for flat in all_vectors(field, n * m):
        gen = tuple(tuple(flat[i * m : (i + 1) * m]) for i in range(n))
        support.append((LinearCode(field, gen), p))
    return CodeEnsemble(support=tuple(support), description=f"all {n}x{m} matrices")


# ---------------------------------------------------------------------------
# spectra of codes


def code_joint_spectrum(f, limit=ENUM_LIMIT):
    """Joint spectrum of the graph {(x, f(x))}."""
    field = f.field
    if field.q**f.n > limit:
        raise TooLarge(f"q^n = {field.q ** f.n} exceeds limit {limit}")
    out = {}
    w = Fraction(1, field.q**f.n)
    for x in all_vectors(field, f.n):
        key = (type_of(x, field), type_of(f.apply(x), field))
        out[key] = out.get(key, 0) + w
    return out


def kernel_spectrum(f, limit=ENUM_LIMIT):
    if f.is_affine():
        raise ValueError("kernel of an affine map is not a subgroup")
    field = f.field
    if field.q**f.n > limit:
        raise TooLarge(f"q^n = {field.q ** f.n} exceeds limit {limit}")
    zero = (0,) * f.m
    ker = [x for x in all_vectors(field, f.n) if f.apply(x) == zero]
    return set_spectrum(ker, field)


def image_spectrum(f, limit=ENUM_LIMIT):
    field = f.field
    if field.q**f.n > limit:
        raise TooLarge(f"q^n = {field.q ** f.n} exceeds limit {limit}")
    image = {f.apply(x) for x in all_vectors(field, f.n)}
    return set_spectrum(image, field)


def ensemble_avg_joint_spectrum(E, limit=ENUM_LIMIT):
    out = {}
    for code, p in E.require_support():
        for key, mass in code_joint_spectrum(code, limit).items():
            out[key] = out.get(key, 0) + p * mass
    return {k: v for k, v in out.items() if v != 0}


def alpha(E, P, Q, avg=None):
    """E[S_XY(F)(P,Q)] divided by the full product-space joint spectrum."""
    if avg is None:
        avg = ensemble_avg_joint_spectrum(E)
    n, m = P.n, Q.n
    q = len(P.counts)
    denom = Fraction(type_class_size(P), q**n) * Fraction(type_class_size(Q), q**m)
    return avg.get((P, Q), Fraction(0)) / denom


def alpha_table(E):
    """All (P, Q) -> alpha values with nonzero expected mass."""
    avg = ensemble_avg_joint_spectrum(E)
    return {key: alpha(E, key[0], key[1], avg=avg) for key in avg}


def rho(E):
    """max over nonzero input types P of (1/n) ln alpha(P, Q).

    Entries with alpha = 0 are excluded from the max (they would contribute
    minus infinity); for a nonempty ensemble some alpha > 0 exists at every
    P since the conditional masses over Q sum to 1.
    """
    table = alpha_table(E)
    n = E.n
    best = None
    for (P, Q), a in table.items():
        if P.is_zero_type() or a == 0:
            continue
        val = (math.log(a.numerator) - math.log(a.denominator)) / n
        if best is None or val > best:
            best = val
    assert best is not None, "no nonzero alpha at any nonzero input type"
    return best


def joint_marginal(J, axis):
    out = {}
    for (P, Q), mass in J.items():
        key = P if axis == 0 else Q
        out[key] = out.get(key, 0) + mass
    return out


def conditional_spectrum(J, direction="forward"):
    """Conditional table of a joint spectrum.

    direction "forward" gives S(Q|P), "backward" gives S(P|Q).  Keys with
    zero marginal do not appear.
    """
    axis = 0 if direction == "forward" else 1
    marg = joint_marginal(J, axis)
    out = {}
    for (P, Q), mass in J.items():
        given, other = (P, Q) if axis == 0 else (Q, P)
        if mass == 0:
            continue
        out.setdefault(given, {})[other] = mass / marg[given]
    return out


def conditional_at(J, given, direction="forward"):
    table = conditional_spectrum(J, direction)
    if given not in table:
        raise ZeroMarginal(f"conditioning type {given} has zero marginal")
    return table[given]


def compose_avg_conditional(F, G, limit=ENUM_LIMIT):
    """Average conditional spectrum of G after a uniform interleaver after F.

    Chapman-Kolmogorov style: sum over the intermediate type P of
    E[S(F)(P|O)] * E[S(G)(Q|P)].
    """
    if F.m != G.n:
        raise DimensionMismatch(f"F outputs length {F.m}, G expects {G.n}")
    cond_f = conditional_spectrum(ensemble_avg_joint_spectrum(F, limit))
    cond_g = conditional_spectrum(ensemble_avg_joint_spectrum(G, limit))
    out = {}
    for O, inner in cond_f.items():
        acc = {}
        for P, w in inner.items():
            for Q, v in cond_g.get(P, {}).items():
                acc[Q] = acc.get(Q, 0) + w * v
        out[O] = acc
    return out


# ---------------------------------------------------------------------------
# randomized-code transforms


def _permutation_matrices(field, n):
    if n > PERM_LIMIT:
        raise SupportExplosion(f"permutation expansion capped at n <= {PERM_LIMIT}")
    mats = []
    for perm in itertools.permutations(range(n)):
        mats.append(tuple(tuple(1 if perm[i] == j else 0 for j in range(n)) for i in range(n)))
    return mats


def _apply_perms(field, code, in_perms, out_perms):
    from .linalg import matmul

    out = []
    for pin in in_perms:
        left = matmul(field, pin, code.generator) if pin is not None else code.generator
        for pout in out_perms:
            gen = matmul(field, left, pout) if pout is not None else left
            out.append(LinearCode(field, gen, code.offset))
    return out


def randomize(E, mode):
    """Expand an ensemble over coordinate permutations and, for mode affine,
    uniform output offsets.

    mode "in" composes with a uniform input permutation, "out" with an output
    permutation, "both" with independent ones, "affine" additionally adds a
    uniform offset so every single point maps uniformly.
    """
    if mode not in ("in", "out", "both", "affine"):
        raise ValueError(f"unknown mode {mode!r}")
    support = E.require_support()
    field, n, m = E.field, E.n, E.m
    in_perms = _permutation_matrices(field, n) if mode in ("in", "both", "affine") else [None]
    out_perms = _permutation_matrices(field, m) if mode in ("out", "both", "affine") else [None]
    offsets = list(all_vectors(field, m)) if mode == "affine" else [None]
    scale = Fraction(1, len(in_perms) * len(out_perms) * len(offsets))
    new = []
    for code, p in support:
        for variant in _apply_perms(field, code, in_perms, out_perms):
            for off in offsets:
                if off is None:
                    new.append((variant, p * scale))
                else:
                    base = variant.offset or (0,) * m
                    shifted = tuple(field.add(a, b) for a, b in zip(base, off))
                    new.append((LinearCode(field, variant.generator, shifted), p * scale))
    merged = {}
    for code, p in new:
        merged[code] = merged.get(code, 0) + p
    return CodeEnsemble(
        support=tuple(merged.items()), description=f"{E.description} randomized {mode}"
    )


def point_distribution(E, x):
    """Exact distribution of F(x) over the explicit support."""
    out = {}
    for code, p in E.require_support():
        y = code.apply(x)
        out[y] = out.get(y, 0) + p
    return out


def rates(obj):
    """(R_s, R_c, R) from the generator rank: R_s = rank ln q / n, etc."""
    if isinstance(obj, CodeEnsemble):
        codes = [c for c, _ in obj.require_support()]
    else:
        codes = [obj]
    ranks = {rank(c.field, c.generator) for c in codes}
    if len(ranks) != 1:
        raise ValueError("ensemble members have differing ranks; rates undefined")
    r = ranks.pop()
    code = codes[0]
    lnq = math.log(code.field.q)
    return (r * lnq / code.n, r * lnq / code.m, Fraction(code.n, code.m))

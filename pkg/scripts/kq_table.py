"""Tabulate the limiting invertibility constant K_q two ways.

For each q, prints the truncated product prod_{i<=T} (1 - q^{-i}), the
pentagonal-number series evaluation, their gap, and the exact probability
that a uniform n x n matrix over GF(q) is invertible for small n.

    python3 scripts/kq_table.py
"""

from codespectra.ldgm import full_rank_probability, kq_product, kq_series

TERMS = 64

print(f"{'q':>3} {'product':>18} {'series':>18} {'|gap|':>10}")
for q in (2, 3, 4, 5, 7, 8, 9):
    prod = kq_product(q, TERMS)
    ser = kq_series(q, TERMS)
    print(f"{q:>3} {float(prod):>18.12f} {float(ser):>18.12f} {float(abs(prod - ser)):>10.2e}")

print()
print("P{n x n invertible} over GF(2), exact:")
for n in range(1, 9):
    p = full_rank_probability(2, n)
    print(f"  n={n}: {p} = {float(p):.12f}")

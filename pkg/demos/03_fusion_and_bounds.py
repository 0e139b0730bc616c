"""Fusion bounds and the two number-theoretic gates for the ree family.

Outer automorphisms can merge suborbits, but only equal-length ones and at
most |X| at a time, so grouping by length bounds the fused class count from
below. That count feeds the diameter-cutoff gate; the kernel-chain gate
instead tracks certifying primes through stabilizer orders.
"""
from dtgcert import (
    REE,
    FusionConstraint,
    bhk_gate,
    build_table,
    instantiate,
    kernel_prime_data,
    length_groups,
    min_fused_classes,
)
from dtgcert.pipeline import gate_text

print("== fused class lower bounds at q = 27 ==")
ct = instantiate(build_table(REE), 27)
groups = length_groups(ct)
print(f"{len(groups)} length classes over {sum(g.multiplicity for g in groups)} nontrivial suborbits")
for x in (1, 2, 3, 6):
    bound = min_fused_classes(groups, FusionConstraint(x))
    print(f"  |X| = {x}: at least {bound} fused classes")

print()
print("== diameter cutoff gate ==")
# the cutoff d < (8/3) log2(v) fails from n = 4 on, decided exactly
for n in (1, 3, 4, 6):
    q = REE.param_for_n(n)
    verdict = bhk_gate(REE, q, FusionConstraint(2 * (2 * n + 1)))
    print(f"  n={n}: {gate_text(verdict)}")

print()
print("== certifying kernel primes ==")
for q in (27, 243, 2187):
    data = kernel_prime_data(q)
    print(f"  q={q}: q-3m+1 = {data.minus_value} -> {data.p_minus},"
          f" q+3m+1 = {data.plus_value} -> {data.p_plus}")

"""
Stratification by representation type
=====================================

Points of the character variety are semisimple representations; collecting
them by the multiplicities and dimensions of their irreducible summands
cuts the variety into strata indexed by weighted partitions of n.
"""

from charvar import (
    WeightedPartition,
    enumerate_weighted_partitions,
    parse_group_spec,
    singular_codim_factor,
    strata_table,
    stratum_codim,
    stratum_dim_gl,
)

# weighted partitions of 3: from the generic type (1,3) down to
# three distinct one-dimensional summands
for nu in enumerate_weighted_partitions(3):
    print(f"{str(nu):16} k = {nu.k}, generic = {nu.is_generic}")

# the table for SL(3) at genus 2; the open stratum has codimension 0
print()
table = strata_table(parse_group_spec("SL(3)"), 2)
for n, rows in table.factor_tables:
    print(f"SL({n}) strata at genus 2:")
    for row in rows:
        print(f"  {str(row.nu):16} dim_sl = {row.dim_sl:3}  codim = {row.codim:3}"
              f"  open = {row.is_open}")

# dimension formula: 2(k + (g-1) sum v_t^2), one term per distinct summand
nu = WeightedPartition.of((1, 2), (1, 1))
print(f"\n{nu} at (n,g) = (3,2): dim_gl = {stratum_dim_gl(nu, 2)},"
      f" codim = {stratum_codim(nu, 2, 3)}")

# the singular locus is everything outside the open stratum; its
# codimension drops to 2 only for n = 2, g = 2 (and everywhere at genus 1)
print("\nsingular locus codimension of one SL(n) factor:")
for n in (2, 3, 4):
    row = [singular_codim_factor(n, g) for g in (1, 2, 3, 4)]
    print(f"  n = {n}: genus 1..4 -> {row}")

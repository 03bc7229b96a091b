"""
Fixed loci of central twists
============================

Quotienting by Z0 makes the character variety of the smaller group a
quotient of the SL one by a finite group of central twists.  Points fixed
by a twist become extra singularities, so their codimension is the
quantity that decides everything downstream.
"""

from math import gcd, lcm

from charvar import (
    Center,
    canonical_decomposition,
    codim_highgenus_from_orders,
    fixed_codim_genus1,
    fixed_codim_highgenus,
    fixed_tangent_oracle,
    genus1_orbit_oracle,
    min_nonfree_codim,
    parse_group_spec,
)

center = Center(1, (2, 3))  # one torus coordinate, factors SL(2) x SL(3)

# a twist with a torus coordinate never has fixed points
free = center.element(["1/2"], (0, 0))  # nontrivial torus angle
print(fixed_codim_genus1(free, (2, 3)).note)

# torus-trivial twists fix loci of computable codimension
tau = center.element([0], (1, 2))
print("genus 1:", fixed_codim_genus1(tau, (2, 3)).to_json())
print("genus 2:", fixed_codim_highgenus(tau, (2, 3), 2).to_json())

# closed form at genus >= 2: 2(g-1) sum n_i^2 (1 - 1/l_i).
# an independent count over eigenvalue block patterns confirms it
print("\nn = 4, order-2 twist, genus 2:")
print("  closed form  :", codim_highgenus_from_orders([4], [2], 2))
print("  tangent count:", fixed_tangent_oracle(4, 2, 2))

# and at genus one the orbit model gives the dimension directly
n = 6
for pair in ((1, 0), (2, 3), (0, 0)):
    a, b = pair
    ell = lcm(n // gcd(a, n), n // gcd(b, n))
    dim = genus1_orbit_oracle(n, pair)
    print(f"genus-1 twist {pair} on SL({n}): order {ell}, fixed locus dim {dim}")

# the smallest codimension over the kernel of PGL(2) is 4(g-1): exactly
# the terminality threshold, which is why PGL(2) sits on the boundary
decomp = canonical_decomposition(parse_group_spec("PGL(2)"))
for genus in (1, 2, 3):
    best = min_nonfree_codim(decomp, genus)
    print(f"PGL(2) genus {genus}: minimal fixed-locus codim {best[0]}")

"""
When does a symplectic resolution exist
=======================================

The headline dichotomy.  Abelian groups give smooth (hence trivially
resolved) moduli.  For everything else the answer depends only on the
genus and on which central subgroup was quotiented away: genus one wants
a product of SL factors and PGL(2) slots, genus two wants a power of
SL(2) with nothing quotiented, and genus three and up always fails.
"""

from charvar import (
    Center,
    GroupSpec,
    classify_resolution,
    parse_group_spec,
    properties_report,
    singular_locus_codim,
)

CASES = [
    ("GL(1)^2", 3),
    ("SL(2)", 2),
    ("SL(3)", 1),
    ("SL(3)", 2),
    ("PGL(2)", 1),
    ("PGL(2)", 2),
    ("GL(2)", 2),
    ("SL(2)^3", 2),
    ("SL(2)", 3),
]

for name, genus in CASES:
    verdict = classify_resolution(parse_group_spec(name), genus)
    print(f"{name:9} g={genus}: {verdict.kind:13}", verdict.case or "")

# the diagonal quotient of SL(2) x SL(2) shows that WHICH subgroup is
# quotiented matters, not just its size: PGL(2) x SL(2) resolves at g=1
# but the diagonal quotient does not
center = Center(0, (2, 2))
diag = GroupSpec(0, (2, 2), (center.element([], (1, 1)),))
print("\n(SL(2)xSL(2))/diagonal, g=1:", classify_resolution(diag, 1).kind)
print("PGL(2)xSL(2),          g=1:",
      classify_resolution(parse_group_spec("PGL(2)xSL(2)"), 1).kind)

# the no-resolution certificate is a codimension computation: once the
# singular locus has codim >= 4 the variety is terminal, and a singular
# Q-factorial terminal variety cannot be resolved crepantly
spec = parse_group_spec("SL(3)")
print("\nSL(3) at genus 2:")
print("  singular locus codim:", singular_locus_codim(spec, 2))
print("  property flags:", properties_report(spec, 2).to_json())
print("  witness:", classify_resolution(spec, 2).witness)

"""Finite open blocks carved out by a single idempotent.

Multiplying by the idempotent e = b^i0 a^i0 on either side is a retraction
whose image misses exactly the block { b^i a^j : i, j < i0 }.  That block
is therefore open in any topology where the two translation maps are
continuous, and it is a finite neighborhood of every point it contains.
"""

from bicyclic import (
    BicyclicElement as E,
    CPlus,
    Full,
    IdempotentChain,
    finite_neighborhood,
    format_descriptor,
    multiply,
)

for desc, x in [(Full(), E(2, 3)), (CPlus(), E(1, 4)), (IdempotentChain(), E(3, 3))]:
    nb = finite_neighborhood(desc, x, bound=12)
    elements = sorted(nb.elements)
    print(f"family {format_descriptor(desc)}, point {x}:")
    print(f"  isolating idempotent index i0 = {nb.i0}")
    print(f"  block size {len(elements)}: " + ", ".join(str(z) for z in elements[:8])
          + (" ..." if len(elements) > 8 else ""))
    e = E(nb.i0, nb.i0)
    inside = all(multiply(z, e) not in nb.elements for z in elements)
    print(f"  every translate z*e leaves the block: {inside}")
    print()

"""Four topology descriptors and their basic neighborhood chains.

Row topologies fix the b-exponent and refine the a-exponent through
progressions of step p^idx; column topologies do the mirror image; window
topologies isolate low points and attach row tails to the rest; discrete
isolates everything.  All are Hausdorff: any two distinct carrier points
separate at a finite chain index.
"""

from bicyclic import (
    BicyclicElement as E,
    basic_nbhd,
    format_symset,
    format_topology,
    parse_topology,
    separation_index,
)

for text, x in [
    ("padic+:2", E(1, 3)),
    ("padic-:3", E(4, 1)),
    ("window:2:0:2", E(0, 1)),
    ("window:2:0:2", E(1, 4)),
    ("discrete:full", E(2, 2)),
]:
    top = parse_topology(text)
    print(f"{format_topology(top)} at {x}:")
    for idx in (1, 2, 3):
        print(f"  V_{idx} = {format_symset(basic_nbhd(top, x, idx))}")
    print()

top = parse_topology("padic+:2")
pairs = [(E(0, 0), E(0, 2)), (E(0, 0), E(0, 8)), (E(1, 2), E(2, 3))]
for x, y in pairs:
    idx = separation_index(top, x, y, 10)
    print(f"{x} and {y} get disjoint basic sets at index {idx}")

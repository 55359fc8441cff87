"""Named subsemigroups, bounded closures, and idempotent counting.

A census answers: how many idempotents does a subsemigroup contain?  For
two-generator families the answer can switch from finite to infinite the
moment one strictly-upper and one strictly-lower element coexist, because
their mixed powers generate a whole arithmetic progression of idempotents.
"""

from bicyclic import (
    BicyclicElement as E,
    FinitelyGenerated,
    closure,
    enumerate_members,
    format_descriptor,
    idempotent_census,
    idempotent_family,
    parse_descriptor,
)

for text in ["cplus-window:1:3", "idem", "gen:b^1a^2,b^3a^1"]:
    desc = parse_descriptor(text)
    members = enumerate_members(desc, 4)
    print(f"{format_descriptor(desc)}: members up to exponent 4:")
    print("  " + ", ".join(str(m) for m in members))
    census = idempotent_census(desc, bound=8)
    print(f"  idempotent census (bound 8): count={census.count} verdict={census.verdict.value}")
    if census.witness:
        u, v = census.witness
        print(f"  witness pair: {u} (upper) with {v} (lower)")
    print()

u, v = E(1, 3), E(3, 0)
fam = idempotent_family(u, v, prefix=5)
print(f"mixed powers of u={u} and v={v} land on the diagonal:")
print(f"  offset={fam.offset}, step={fam.step}")
print("  first members: " + ", ".join(str(m) for m in fam.first(5)))

result = closure([u, v], bound=9)
print(f"  bounded closure of {{u, v}} holds {len(result.members)} elements "
      f"(saturated={result.saturated})")

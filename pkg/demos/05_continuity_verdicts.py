"""Shift and joint continuity, decided exactly.

A shift check either finds a modulus k with image(V_k) inside the target
V_t, or certifies failure structurally: the image of every V_k contains a
whole line that the target misses, so no k can ever work.  The certificate
is valid for all k, far beyond the sampled counterexamples.
"""

from bicyclic import (
    BicyclicElement as E,
    ContinuousAt,
    PAdicPlus,
    ShiftSide,
    check_joint,
    check_shift_at,
    equation_replay,
    find_discontinuity,
    window_joint_report,
)

top = PAdicPlus(2)
good = check_shift_at(top, ShiftSide.LEFT, E(0, 1), E(0, 0), t=2)
print(f"left shift by b^0a^1 at b^0a^0, t=2: modulus k={good.modulus_for(2)}")

w = find_discontinuity(top, ShiftSide.RIGHT, bound=3)
v = w.verdict
print(f"first right-shift failure: s={w.s}, x={w.x}, t={w.t}")
print(f"  structural reason: {v.structural_reason}")
for k, esc in v.counterexamples[:2]:
    print(f"  at k={k} the image point {esc} escapes the target")
print()

report = window_joint_report(p=2, m=0, n=2, bound=4, t_max=2)
cont = sum(isinstance(c.verdict, ContinuousAt) for c in report.cells)
print(f"window joint sweep: {cont}/{len(report.cells)} cells continuous")
cases = {}
for c in report.cells:
    cases[c.case] = cases.get(c.case, 0) + 1
for case, n in sorted(cases.items()):
    print(f"  {case}: {n} cells")
print()

joint = check_joint(PAdicPlus(2), bound=1, t_max=1)
bad = [c for c in joint.failures]
print(f"row topology joint sweep (bound 1): {len(bad)} discontinuous cell(s)")
if bad:
    c = bad[0]
    print(f"  e.g. multiplication is not jointly continuous at ({c.x}, {c.y})")
print()

r = equation_replay(0, 5, 1, 3)
print(f"division replay: {r.left_factor} * {r.distinguished} = {r.target}")
print("  full solution set: " + ", ".join(str(s) for s in r.solutions))

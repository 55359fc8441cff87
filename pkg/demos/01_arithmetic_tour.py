"""Tour of exact arithmetic in the two-generator monoid with ab = 1.

Every element has a unique normal form b^k a^l, so arithmetic is integer
arithmetic on the pair (k, l).  This script multiplies, reduces words,
takes powers and inverses, and solves one-sided division problems.
"""

from bicyclic import (
    BicyclicElement as E,
    IDENTITY,
    invert,
    multiply,
    natural_leq_witness,
    power,
    reduce_word,
    solve_left,
    solve_right,
    word_of,
)

x, y = E(2, 3), E(5, 1)
print(f"normal forms:      x = {x}, y = {y}")
print(f"product:           x * y = {multiply(x, y)}")
print(f"in the other order y * x = {multiply(y, x)}")
print()

w = "bbabaa"
print(f"word {w!r} reduces to {reduce_word(w)}")
print(f"round trip: {word_of(x)!r} reduces back to {reduce_word(word_of(x))}")
print(f"ab collapses: {reduce_word('ab')} is the identity {IDENTITY}")
print()

z = E(1, 3)
print(f"powers of {z}: " + ", ".join(str(power(z, n)) for n in range(1, 6)))
print(f"inverse of {x} is {invert(x)}; x * x' * x = {multiply(multiply(x, invert(x)), x)}")
print()

lo, hi = E(5, 3), E(4, 2)
e = natural_leq_witness(lo, hi)
print(f"{lo} lies below {hi} in the natural order: {hi} * {e} = {multiply(hi, e)}")
print()

a, c = E(0, 2), E(0, 2)
sols = solve_left(a, c)
print(f"all X with {a} * X = {c}:  " + ", ".join(str(s) for s in sols))
print(f"all X with X * {a} = {c}:  " + ", ".join(str(s) for s in solve_right(c, a)))
print("left division is always finite: 1 + min(a_l, c_l) solutions when solvable")

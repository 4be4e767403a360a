"""
The octave divided by the fifth
===============================

Intervals compose by multiplication, so subtracting a fifth from an octave
divides 2 by 3/2. Written as exponents of 2 and 3 this is vector subtraction.
Every remainder is a power of 2 against a power of 3, so none is ever the
unison and the division never ends.
"""

import mpmath

from pythagorean.harmonics import FIFTH, OCTAVE, musical_anth, philolaus_table

for row in philolaus_table():
    ratio = row["remainder"]["ratio"]
    print(f"{row['relation']:<28} remainder {row['remainder_name']} = {ratio}")

steps = musical_anth(OCTAVE, FIFTH, 30)
print("quotients:", [s.quotient for s in steps])

# the same numbers come out of the continued fraction of log 2 / log 1.5
with mpmath.workdps(200):
    x = mpmath.log(2) / mpmath.log(1.5)
    cf = []
    for _ in range(12):
        k = int(mpmath.floor(x))
        cf.append(k)
        x = 1 / (x - k)
print("log oracle:", cf)

last = steps[-1].remainder
print(f"step 30 remainder is 2^{last.e2} * 3^{last.e3}; still not the unison")

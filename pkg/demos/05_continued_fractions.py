"""Irrationals whose convergent denominators dodge all small primes.

Fixing a smoothness bound m, set a = lcm(1..m) and b = (a + sqrt(a^2+4))/2,
the positive root of b^2 = a*b + 1.  Seeding the quotient stream with the
Euclid word of two large primes and continuing with the constant quotient a
pins every later denominator to the residues x, y mod a -- all coprime to a.
Denominators then grow in lockstep inside (r b^i, 2 r b^i), and each
convergent approximates the limit to 1/(m q^2).

Everything below is exact integer/rational arithmetic; the irrational is
only ever touched through enclosures between consecutive convergents.
"""

from fractions import Fraction
from math import gcd, lcm

from cornerforge import AlphaSequence, approximants, build_alpha_hard, quotients_from_pair, verify_alpha

print("convergents of (1;1,1,1,1,...):", approximants([1, 1, 1, 1, 1, 1]))
print("Euclid word pinning Q_t=5, Q_t+1=8:", quotients_from_pair(5, 8))

seq = build_alpha_hard(m=10, r=3)
print(f"\nm=10: a = lcm(1..10) = {seq.a}, primes x={seq.x}, y={seq.y}, start index {seq.start_index}")
for i in range(seq.start_index, seq.start_index + 6):
    check = verify_alpha(seq, i)
    print(
        f"  i={i}: q has {len(str(check.q))} digits, "
        f"smooth={check.smooth_ok} interval={check.interval_ok} approx={check.approx_ok}"
    )

p, q = seq.p_q(seq.start_index + 2)
print(f"\nsample approximant p/q with q={q}: gcd(q, lcm(1..10)) = {gcd(q, seq.a)}")
lo, hi = seq.enclosure(seq.start_index + seq.offset + 2)
print(f"enclosure width at that depth: {float(hi - lo):.3e} (exact rational bounds)")

# a stream that was NOT built this way fails the checks
golden = AlphaSequence(m=3, r=Fraction(1), a=lcm(1, 2, 3), prefix=(0,), tail=1)
bad = [verify_alpha(golden, i) for i in range(2, 10)]
print(
    "\nall-ones quotient stream vs m=3 requirements: "
    f"smooth fails at {[c.index for c in bad if not c.smooth_ok]}, "
    f"growth fails at {[c.index for c in bad if not c.interval_ok]}"
)

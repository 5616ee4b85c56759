"""Digit-sphere sets avoiding linear relations and quadratic configurations.

Numbers are written in a base with capped digits so a target relation can
never carry between digit positions, then restricted to one sphere
sum(digits^2) = r.  Any in-set solution of the relation would force a
digitwise solution among equal-norm vectors, which convexity forbids.
"""

from cornerforge import (
    RELATION_3AP,
    RELATION_SUM3,
    behrend_3ap_free,
    behrend_qc_free,
    behrend_sum_free,
    find_qc_witness,
    find_relation_witness,
    is_qc,
    qc_coefficients,
)

for length in (100, 1000, 10000, 100000):
    out = behrend_3ap_free(length)
    params = out.params
    witness = find_relation_witness(out.members, RELATION_3AP)
    print(
        f"3-AP-free in [0,{length}): {len(out):4d} members "
        f"(dim {params.dim}, base {params.base}, radius {params.radius_sq}); witness: {witness}"
    )

print()
for length in (64, 512, 4096):
    out = behrend_sum_free(length)
    witness = find_relation_witness(out.members, RELATION_SUM3)
    print(f"x+y+z=3w free in [0,{length}): {len(out)} members, witness: {witness}")

# --- quadratic configurations ---------------------------------------------------

a = (0, 1, 2, 3, 4)
sys5 = qc_coefficients(a)
print(f"\nwindow system for a={a}: scale {sys5.M}, rows {sys5.gamma}")
print("  (each row kills P(a_i..a_i+3) for every polynomial P of degree <= 2)")

squares = tuple(t * t for t in a)
print(f"  squares {squares} recognized as quadratic: {is_qc(sys5, squares)}")
print(f"  constant (7,7,7,7,7) rejected: {not is_qc(sys5, (7,) * 5)}")
print(f"  tampered (0,1,4,9,17) rejected: {not is_qc(sys5, (0, 1, 4, 9, 17))}")

for length in (256, 1024, 8192):
    out = behrend_qc_free(a, length)
    witness = find_qc_witness(sys5, out.members)
    print(f"QC-free in [0,{length}): {len(out)} members, witness: {witness}")

# a set that is NOT QC-free, caught by the verifier
planted = set(squares) | {50, 60}
print(f"\nplanted squares inside {sorted(planted)}: witness {find_qc_witness(sys5, planted)}")

"""
Alexander matrices and determinant signs
========================================

Delete the columns of two adjacent regions and compare the determinant with
the state sum, then check the sign predicted under a compliant labeling.
"""
from importlib import resources

from clockwork import parse_diagram
from clockwork.alexander import alexander_matrix, check_signed_relation, det, reduced
from clockwork.states import adjacent_star_pairs
from clockwork.statesum import BW, SCHEMES, state_sum

d = parse_diagram((resources.files("clockwork") / "corpus" / "figure_eight.pd").read_text())
A = alexander_matrix(d, BW)
print(f"{len(A.rows)} x {len(A.cols)} matrix in the B/W specialization")
for cid, row in zip(A.rows, A.entries):
    print(f"  v{cid}:", " | ".join(str(e) for e in row))

# every reduced determinant is the state sum up to sign
for sp in adjacent_star_pairs(d)[:3]:
    D = det(reduced(A, sp.low, sp.high))
    P = state_sum(d, sp, SCHEMES[BW]).value
    print(sp.regions, "det == state sum" if D == P else "det == -state sum")

# the sign is predicted by the labels of the deleted columns
for i, j, predicted, observed in check_signed_relation(d, BW):
    print(f"  labels {i},{j}: predicted {predicted:+d} observed {observed:+d}")

"""Build the four symmetry families and verify their defining relations.

For each spin, four inequivalent sign assignments exist for the squares of
time reversal R and total inversion T.  Family 1 acts on the bare spin
space; families 2-4 double it.  All operator matrices are integral, so the
relations are checked with exact integer arithmetic.
"""

from gamowkit import build_representation, time_reversal_matrix, verify_group_relations

print("single-sheet time-reversal matrix C and its square")
for twice_j in (0, 1, 2):
    c = time_reversal_matrix(twice_j)
    square = (c @ c.conj()).astype(int)
    print(f"  2j = {twice_j}: C =")
    for line in str(c).splitlines():
        print(f"    {line}")
    print(f"    C conj(C) = {'+' if square[0, 0] > 0 else '-'}I")
print()

print("sign table of the four families (eps_R, eps_T) and relation checks")
for twice_j in (0, 1, 2, 3, 4):
    print(f"  2j = {twice_j}:")
    for row in (1, 2, 3, 4):
        rep = build_representation(row, twice_j)
        report = verify_group_relations(rep)
        status = "ok " if report.all_passed else "FAIL"
        print(f"    family {row}: eps_R = {rep.reversal_sign:+d}, "
              f"eps_T = {rep.inversion_sign:+d}, dim = {rep.dim}, "
              f"Sigma R = {report.commutation_sign:+d} R Sigma   [{status}]")
print()

rep = build_representation(4, 1)
print("family 4 at spin 1/2, operator blocks (r=0 sheet first):")
print("  parity (Sigma):")
for line in str(rep.parity.matrix).splitlines():
    print(f"    {line}")
print("  time reversal (R, followed by complex conjugation):")
for line in str(rep.time_reversal.matrix).splitlines():
    print(f"    {line}")
print()
print("full relation report for that family:")
for check in verify_group_relations(rep).checks:
    print(f"  {check.name}: expected {check.expected}, observed {check.observed} "
          f"-> {'pass' if check.passed else 'FAIL'}")

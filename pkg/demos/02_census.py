# Walk all orbits of length p and p-1 and tally which structure family each
# one lands in, next to the dimension actually measured.
from collections import Counter

from zerosum import classify, enumerate_canonical, solution_dim

for p in (5, 7, 11):
    tags = Counter()
    mismatch = []
    for A in enumerate_canonical(p, p):
        c = classify(A)
        tags[c.tag] += 1
        if c.predicted_dim != solution_dim(A):
            mismatch.append(A)
    print(f"p={p} l={p}:", dict(tags), "mismatches:", len(mismatch))

# note that the ExceptionalP family with parameter t and p-2-t coincide after
# scaling by -1, so there are (p-3)/2 such orbits
for A in enumerate_canonical(7, 7):
    c = classify(A)
    if c.tag == "ExceptionalP":
        print("  ", A, "t =", c.t)

for p in (5, 7, 11):
    tags = Counter()
    odd = []
    for A in enumerate_canonical(p, p - 1, "zero_sum"):
        c = classify(A)
        tags[c.tag] += 1
        d = solution_dim(A)
        if d != c.predicted_dim:
            odd.append((str(A), c.predicted_dim, d))
    print(f"p={p} l={p - 1} zero-sum:", dict(tags))
    for row in odd:
        print("   predicted/measured differ:", row)

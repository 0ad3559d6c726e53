# Solution sets of a single sequence: list the 0-1 solutions, their span,
# the minimal ones and a basis built from them.
import numpy as np

from zerosum import Sequence, enumerate_solutions, minimal_basis, minimal_solutions, solution_dim, support_indices

A = Sequence(7, [1, 1, 3, 4, 5, 6, 2])
S = enumerate_solutions(A)
print(A, "has", len(S), "zero-sum subsets")

# indicator matrix, one row per solution
X = S.indicators()
print(X[:6])
print("rows annihilated by A:", not ((X @ A.as_array()) % A.p).any())

print("dim =", solution_dim(A), "out of a possible", len(A) - 1)

mins = minimal_solutions(S)
print(len(mins), "minimal solutions, smallest first:")
for m in mins[:8]:
    print("  ", support_indices(m))

B = minimal_basis(A, S)
print("basis of minimal solutions:")
print(B)

# the same set from the meet-in-the-middle solver
print("mitm agrees:", np.array_equal(S.members, enumerate_solutions(A, mode="mitm").members))

# a sequence whose solutions do not span: constant of length p
C = Sequence(5, [3] * 5)
print(C, "dim", solution_dim(C), "solutions", [support_indices(m) for m in enumerate_solutions(C)])

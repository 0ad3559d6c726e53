# Inhomogeneous targets: S_A^alpha is a translate, via flipping the
# coordinates of one witness, of the solution set of another sequence.
from zerosum import Sequence, affine_dim, affine_reduce, enumerate_solutions, solution_dim, support_indices

A = Sequence(5, [1, 1, 1, 2, 3])
for alpha in range(5):
    red = affine_reduce(A, alpha)
    S = enumerate_solutions(A, alpha)
    T = enumerate_solutions(red.reduced)
    assert sorted(red.flip(m) for m in S) == list(T)
    print(
        f"alpha={alpha}: witness {red.indices}, A_I = {red.reduced.entries},",
        f"{len(S)} solutions, affine dim {affine_dim(A, alpha)} = dim(A_I) {solution_dim(red.reduced)}",
    )

# short sequences can miss a target entirely
B = Sequence(7, [1, 1])
print([a for a in range(7) if affine_reduce(B, a) is None], "unreachable for", B)
print([support_indices(m) for m in enumerate_solutions(B, 2)])

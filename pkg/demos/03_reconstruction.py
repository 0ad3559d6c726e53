# Which sequences share the solution set of a given one?  Usually only its
# scalar multiples; at p = 7 there is a second class.
from zerosum import Sequence, check_necessary_conditions, partner_form, decompose, reconstruct

A = Sequence(7, [6, 1, 5, 2, 4, 3])
res = reconstruct(A, "equal")
print("classes with S_B = S_A:", res.classes)
(B,) = res.others()
print("partner", B, "form", partner_form(A, B))

dec = decompose(A, B)
for lam, part, sigma in zip(dec.ratios, dec.parts, dec.ratio_sets):
    print(f"  ratio {lam}: indices {part} subsums {sorted(sigma)}")
print(check_necessary_conditions(A, B))

# superset mode also admits B whose solution set is strictly bigger
sup = reconstruct(A, "superset")
print(len(sup.classes), "classes with S_A inside S_B")

# a sequence that has a partner of none of the listed forms
E = Sequence(7, [1, 1, 2, 2, 4, 4])
r = reconstruct(E, "equal")
for B in r.others():
    print(E, "->", B, "form:", partner_form(E, B))

# for length p everything collapses to the collinear class
print(reconstruct(Sequence(5, [1, 1, 2, 3, 3]), "equal").classes)

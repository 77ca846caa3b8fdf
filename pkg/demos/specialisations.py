"""
Classical sequences from one parametric matrix
==============================================

Substituting numbers (or a marker variable t) into the x and y weights of
the Dyck path production matrix collapses the master polynomial sequence
to familiar counting sequences.
"""

from parametric_eco import dyck_main_matrix, sequence, tail_ones, var

t = var("t")
P = dyck_main_matrix()


def show(seq):
    return ", ".join(map(str, seq))


# F(;;z): everything set to 1 gives the Catalan numbers
print("catalan  ", show(sequence(P.substitute(tail_ones()), 7)))

# F(1,0;;z): kill level segments of shape u ud d -> Motzkin numbers
print("motzkin  ", show(sequence(P.substitute(tail_ones([1, 0])), 7)))

# F(2;;z): double every peak -> little Schroeder numbers
print("schroeder", show(sequence(P.substitute(tail_ones([2])), 7)))

# F(t;;z): mark peaks -> Narayana polynomials
for n, p in enumerate(sequence(P.substitute(tail_ones([t])), 4)):
    print(f"narayana a_{n} =", p)

# the full catalog, checked term by term
from parametric_eco.closedform import catalog_check

print(catalog_check().to_text())

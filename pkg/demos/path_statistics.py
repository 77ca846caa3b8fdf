"""
Weighted Dyck paths, by brute force and by matrix
=================================================

Each path gets the monomial  prod x_m^{s_m} * prod y^{rise height}.  The
sum over all paths of a given length is compared with the matrix powers.
Rises can be indexed two ways: numbered left to right, or by how many
closed blocks precede them.  Only the second matches the matrix.
"""

from parametric_eco import dyck_main_matrix, sequence, x
from parametric_eco.dyck import DyckPath, omega_block_monomial, omega_monomial, stats, weighted_sum

p = DyckPath("uuduuududduuddddud")
s = stats(p)
print("rise heights ", s.rise_heights)
print("peak heights ", s.peak_heights)
print("segments s_m ", s.segment_counts)
print("weight       ", omega_monomial(p))

# the smallest path where the two y-indexings disagree
q = DyckPath("uududduudd")
print(q, "left-to-right:", omega_monomial(q), " block-indexed:", omega_block_monomial(q))

seq = sequence(dyck_main_matrix(), 6)
for n in range(1, 8):
    lr = weighted_sum(n, "omega") == x(0) * seq[n - 1]
    blk = weighted_sum(n, "omega_block") == x(0) * seq[n - 1]
    print(f"n={n}: left-to-right {lr!s:5}  block-indexed {blk}")

"""
Counting good labelings of a path
=================================

Up to reversal, the number of crossing-free labelings of an m-vertex
path is m * 2^(m-3). Four independent formulas agree with the count.
"""

from mupermanent import count_path_labelings, enumerate_path_labelings
from mupermanent.sequences import cross_validate, format_table

# the 8 labelings of the 4-vertex path, each with first < last
for seq in enumerate_path_labelings(4):
    print(*seq)

# counts for orders 2..12, found by backtracking
for m in range(2, 13):
    count = count_path_labelings(m, engine="pruned")
    law = m * 2 ** (m - 3) if m >= 3 else 1
    print(f"m={m:2d}  count={count:5d}  m*2^(m-3)={law}")

# closed form, recurrence and two determinant formulas side by side
print(format_table(cross_validate(12, enumerate_up_to=9)))

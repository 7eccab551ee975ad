"""
Public-key sizes at matched workfactor
======================================
"""

# %%
from arbc.analysis import format_table, reference_table

rows = reference_table()
print(format_table(rows))

# %%
# The "quoted" column is the arbitrary-error key size as commonly cited for
# each pairing; the third disagrees with n^2 + k(n-k) and matches
# n^2 + n(n-k) instead.
for r in rows:
    p = r.new_point
    print((p.n, p.k), r.new_key_bits, r.reference_new_key_bits, p.n**2 + p.n * (p.n - p.k))

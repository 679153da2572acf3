# %% [markdown]
# # Counting partitions with parts in a finite set
#
# p_A(n) is the number of ways to write n as an unordered sum of elements of
# A. Three routes to the same number live in `denumerant.exact`.

# %%
from denumerant import (
    count_any,
    count_dp,
    count_recursive,
    enumerate_partitions,
    make_part_set,
    residue_reduction,
    split,
)

A = make_part_set([3, 5, 7])
print(A)

# %% [markdown]
# The generating-function table is the workhorse: one pass per part.

# %%
table = count_dp(A, 30)
print(table.counts)

# %% [markdown]
# The recursion removes the largest part a_k, rescales the rest by their gcd d
# and sums over the admissible multiplicities of a_k.

# %%
sp = split(A)
print(sp)
for n in (17, 100, 1000):
    rr = residue_reduction(n, sp)
    print(n, rr, count_recursive(A, n), count_dp(A, n)[n])

# %% [markdown]
# A non-trivial d shows up once the remaining parts share a factor.

# %%
B = make_part_set([4, 6, 9])
print(split(B), residue_reduction(50, split(B)))
print(count_recursive(B, 50), count_dp(B, 50)[50])

# %% [markdown]
# Listing is only feasible for small n, but it is the most literal check.

# %%
for p in enumerate_partitions(A, 17):
    print(" + ".join(map(str, p)))

# %% [markdown]
# Sets with a common factor are handled by dividing it out.

# %%
C = make_part_set([6, 10])
print([count_any(C, n) for n in range(0, 61, 2)])

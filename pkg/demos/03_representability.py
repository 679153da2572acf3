# %% [markdown]
# # When is p_A(n) >= 1?
#
# For coprime A every large enough n is a sum of parts. The Apery set gives
# the exact cut-off and an O(1) membership test.

# %%
from denumerant import apery_set, count_dp, frobenius, is_representable, make_part_set

for parts in ([3, 5], [6, 9, 20], [1, 4, 9], [11, 13, 17, 19]):
    res = frobenius(make_part_set(parts))
    print(parts, "frobenius", res.frobenius, "threshold", res.threshold)

# %%
A = make_part_set([6, 9, 20])
print(apery_set(A))
table = count_dp(A, 60)
print([n for n in range(61) if table[n] == 0])
print([n for n in range(61) if not is_representable(A, n)])

# %% [markdown]
# With two parts the classical ab - a - b falls out.

# %%
for a, b in ((3, 5), (7, 11), (13, 29)):
    print(a, b, frobenius(make_part_set([a, b])).frobenius, a * b - a - b)

# %% [markdown]
# # Leading term and error order
#
# For coprime A with k parts, p_A(n) = n^(k-1) / (prod(A) (k-1)!) + O(n^(k-2)).

# %%
from denumerant import (
    alternating_binomial_check,
    erdos_lehner_coefficient,
    error_slope,
    leading_coefficient,
    make_part_set,
    power_sum_check,
    report,
)

A = make_part_set([3, 5, 7])
print("leading coefficient:", leading_coefficient(A))

# %% [markdown]
# The ratio to the leading term approaches 1, while the absolute error keeps
# growing roughly like n (k - 2 = 1 here).

# %%
for n in (10**2, 10**3, 10**4, 10**5):
    r = report(A, n)
    print(f"n={n:>6}  p={r.exact:>10}  ratio={r.ratio:.6f}  |p-L|={float(r.abs_err):10.3f}  /n={r.norm_err:.4f}")

# %% [markdown]
# A log-log fit of the windowed maximum error estimates the exponent.

# %%
for parts, lo, hi in (([1, 2], 16, 4096), ([3, 5, 7], 64, 65536), ([4, 9, 11, 13], 64, 65536)):
    fit = error_slope(make_part_set(parts), lo, hi, 8)
    print(parts, "slope", round(fit.slope, 4), "expected at most", len(parts) - 2)

# %% [markdown]
# For A = {1..k} the coefficient reduces to 1/(k!(k-1)!).

# %%
for k in range(1, 9):
    assert leading_coefficient(make_part_set(range(1, k + 1))) == erdos_lehner_coefficient(k)
    print(k, erdos_lehner_coefficient(k))

# %% [markdown]
# The two sums that drive the induction step.

# %%
print(power_sum_check(10, 2), power_sum_check(10**4, 8)[1])
print(all(alternating_binomial_check(k) for k in range(2, 65)))

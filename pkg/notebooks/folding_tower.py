# %% [markdown]
# # Folding a column into a shape
#
# Each fold keeps the inverse descent set.  Starting from a super-standard
# permutation on the single column and folding it into ``mu`` gives one
# term of the Schur coefficient.

# %%
from macfold import phi_mu
from macfold.stats import inverse_descents, stats_fast

for step in phi_mu((4, 2, 2, 1), (8, 4, 1, 5, 6, 7, 3, 9, 2), trace=True):
    print(f"{step.label:10} {''.join(map(str, step.word))} {step.shape} "
          f"{stats_fast(step.shape, step.word)} {sorted(inverse_descents(step.word))}")

# %% [markdown]
# Hooks agree with brute force everywhere.  For two-column shapes the two
# routes agree while the first row is short and part ways once it has four
# or more cells.

# %%
from macfold import compare_methods
from macfold.core import partitions

for n in range(4, 8):
    for mu in partitions(n):
        if len(mu) > 1 and mu[1] > 2:
            continue
        cmp = compare_methods(mu)
        print(n, mu, "agree" if cmp.equal else f"differ at {[lam for lam, _, _ in cmp.diff]}")

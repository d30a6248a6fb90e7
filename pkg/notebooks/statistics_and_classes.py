# %% [markdown]
# # Fillings, statistics and dual equivalence
#
# A permutation read into a partition diagram (top row first, left to
# right) picks up two statistics, ``inv_mu`` and ``maj_mu``.  Summing
# ``q^inv t^maj F_iDes`` over all of S_n gives the transformed Macdonald
# polynomial.

# %%
from macfold import Filling, enumerate_classes, kostka_macdonald
from macfold.stats import inv_mu, maj_mu, mu_descent_cells

f = Filling((4, 2, 2, 1), (5, 8, 3, 6, 9, 1, 7, 2, 4))
print(f.pretty())
print("descent cells hold", [f.entry(c) for c in mu_descent_cells(f)])
print("inv", inv_mu(f), "maj", maj_mu(f))

# %% [markdown]
# The generalized involutions cut S_n into classes on which the weight is
# constant.  Each class generating function is Schur positive.

# %%
from macfold.dual_equivalence import class_fund_gf
from macfold.schur import decompose_to_schur
from macfold.stats import stats_fast

mu = (3, 1)
for c in enumerate_classes(4, "mu", mu):
    weight = stats_fast(mu, c.representative)
    print(c, weight, decompose_to_schur(class_fund_gf(c)))

# %%
print(kostka_macdonald((3, 1)).entries)

# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Polynomials from the four C2 trig families
#
# Each family `c+`, `c-`, `s+`, `s-` becomes a polynomial in
# `X = 2 c+(1,0)` and `Y = 2 c+(1,1)` once it is normalized and divided by
# its lowest member (`U`, `V` or `W`; nothing for `c+`).

# %%
import numpy as np

from c2trig import recurrences as rec
from c2trig.tables import render_table
from c2trig.trig import Family, Label, decompose_product, eval_trig

# %% [markdown]
# ## Products close within the families
#
# Multiplying two functions gives a finite sum of functions from one family.

# %%
a, b = Label("cplus", 1, 0), Label("cplus", 1, 0)
for coef, lab in decompose_product(a, b):
    print(coef, lab)

# %% [markdown]
# Multiplying by `X/2` or `Y/2` is the basic step of the recurrences.  A few
# low-order polynomials:

# %%
for fam in Family:
    lam = rec.LAMBDA_MIN[fam] + 2
    for mu in rec.row_labels(fam, lam):
        print(f"{fam.symbol}({lam},{mu}):", rec.gen_poly(fam, lam, mu))

# %% [markdown]
# ## Two independent constructions
#
# The row-at-a-time matrix recurrence reproduces the scalar one.

# %%
for fam in Family:
    lam = 9
    same = rec.gen_row_matrix(fam, lam) == rec.generator(fam).row(lam)
    print(fam.value, "row", lam, "agrees:", same)

# %% [markdown]
# ## Back on the trig side
#
# Evaluating a polynomial at `(X(x,y), Y(x,y))` should reproduce `g f / d`.

# %%
rng = np.random.default_rng(0)
u, v = rng.uniform(0.05, 0.95, (2, 500))
x, y = u, u * v
for fam in Family:
    worst = max(
        rec.consistency_error(fam, lam, mu, rec.gen_poly(fam, lam, mu), x, y)
        for lam in range(9) for mu in rec.row_labels(fam, lam)
    )
    print(fam.value, f"{worst:.1e}")

# %% [markdown]
# ## Coefficient tables
#
# One table per family and congruence class.  The first rows of the `c+`,
# class 0 table:

# %%
print("\n".join(render_table("cplus", 0, 4, "markdown").splitlines()[:8]))

# %%
print(eval_trig(Label("sminus", 2, 1), 0.3, 0.1))

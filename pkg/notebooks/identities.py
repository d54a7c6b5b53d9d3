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
# # Product identities
#
# The catalog stores each identity as data: two expressions in the index
# parameters `lam, mu, lamp, mup`, plus any constraints between them.

# %%
import numpy as np

from c2trig import identities as ids

# %%
cat = ids.catalog()
print(len(cat), "entries,", sum(i.is_generic for i in cat), "generic")
v1 = ids.get("v1")
print(v1.lhs)
print("  =", v1.rhs)

# %% [markdown]
# ## Pointwise checks
#
# Points come from `[0, 2]^2`; nothing restricts the identities to the
# fundamental region.

# %%
rng = np.random.default_rng(2)
pts = rng.uniform(0, 2, (100, 2))
rows = []
for ident in cat:
    worst = max(ids.verify_identity(ident.id, ids.random_params(ident, rng), pts).residual for _ in range(5))
    rows.append((ident.id, worst))
for iid, worst in rows:
    if worst > 1e-11:
        print(f"{iid:22s} {worst:.2f}")

# %% [markdown]
# Four `c-` entries fail by an order-one amount.  Each omits a term with a
# zero first index, `cm(0, k) = -cm(k, 0)`, which is not identically zero.
# The catalog keeps the entry as written and records the repaired right side.

# %%
for iid, _ in rows:
    ident = ids.get(iid)
    if ident.corrected_rhs:
        r = ids.verify_identity(iid, ids.random_params(ident, rng), pts, use_correction=True)
        print(iid, "->", ident.corrected_rhs, f"({r.residual:.1e})")

# %% [markdown]
# ## Agreement with the generic relations
#
# A specialization is its parent relation with the constraints substituted.
# Both sides are reduced to exact label combinations and compared.

# %%
bad = {i.id: len(ids.check_specialization(i.id, span=3)) for i in cat if not i.is_generic}
print({k: v for k, v in bad.items() if v})

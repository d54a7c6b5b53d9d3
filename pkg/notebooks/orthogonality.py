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
# # Orthogonality over the triangle
#
# The fundamental region is `F = {0 <= y <= x <= 1}`.  All integrals are done
# on the `(x, y)` side with a tensor Gauss rule pulled onto `F`.

# %%
import matplotlib.pyplot as plt
import numpy as np

from c2trig import orthogonality as orth
from c2trig.trig import Family

# %%
rule = orth.mapped_gauss_rule(64)
print(len(rule), "nodes, weights sum to", rule.w.sum())

# %% [markdown]
# ## Gram matrices
#
# The normalized functions are orthogonal with squared norm `g`.

# %%
for fam in Family:
    labels, gram = orth.gram_matrix(fam, 6, rule)
    want = np.diag([orth.expected_norm(l) for l in labels])
    print(f"{fam.value:7s} {len(labels):3d} labels, max error {np.abs(gram - want).max():.1e}")

# %% [markdown]
# ## The image region
#
# `(x, y) -> (X, Y)` maps `F` onto a curved triangle bounded by a parabola and
# two lines.  The weights are built from its two boundary factors.

# %%
u, v = np.meshgrid(np.linspace(0, 1, 60), np.linspace(0, 1, 60))
Xv, Yv = orth.X_of(u, u * v), orth.Y_of(u, u * v)

s = np.linspace(-4, 4, 200)
fig, ax = plt.subplots(figsize=(5, 4))
ax.plot(Xv.ravel(), Yv.ravel(), ".", ms=1, color="0.6")
ax.plot(s, s**2 / 4, label="Y = X^2/4")
ax.plot(s[s >= 0], 2 * s[s >= 0] - 4, label="Y = 2X - 4")
ax.plot(s[s <= 0], -2 * s[s <= 0] - 4, label="Y = -2X - 4")
ax.set_xlabel("X")
ax.set_ylabel("Y")
ax.legend()

# %% [markdown]
# ## Jacobian
#
# Computing the Jacobian from `(X, Y)` loses digits near the boundary, where
# both radicand factors are small.

# %%
rng = np.random.default_rng(1)
x, y = orth.sample_interior(20000, rng)
jac = orth.jacobian(orth.X_of(x, y), orth.Y_of(x, y))
ref = np.pi**2 * np.abs(orth.W_of(x, y))
rel = np.abs(jac - ref) / ref
d = orth.boundary_distance(x, y)
for m in (0.0, 1e-3, 0.01, 0.02, 0.05):
    print(f"distance >= {m:<6} max rel error {rel[d >= m].max():.1e}")

# %% [markdown]
# The same integral on the `(X, Y)` side, with the `c+` weight:

# %%
from c2trig.recurrences import gen_cplus

p = gen_cplus(2, 1)
print(orth.weighted_inner_product_XY("cplus", p, p, rule))

# %% [markdown]
# # Characters of flagged Weyl modules, two ways
#
# For a strongly separated family with multiplicities, the character is an
# iterated Demazure operator.  The module itself is the span of products of
# minors of an upper-triangular matrix; splitting that span into weight
# spaces and taking exact ranks gives an independent check.

# %%
from bottsamelson import demazure_char, full_char, parse_mult_family, render_young, weyl_char_oracle

dm = parse_mult_family("24,4", 4)
print(render_young(dm))
flagged = demazure_char(dm)
print("formula:", flagged)
print("oracle: ", weyl_char_oracle(dm, flagged=True))
assert flagged == weyl_char_oracle(dm, flagged=True)

# %% [markdown]
# Dropping the flag (arbitrary rows, full matrix) symmetrizes the character.

# %%
full = full_char(dm)
assert full.is_symmetric() and full == weyl_char_oracle(dm, flagged=False)
print(full)

# %% [markdown]
# Words need not be reduced for the Bott-Samelson version of the formula.

# %%
from bottsamelson import bott_samelson_char

print(bott_samelson_char((2, 1, 1, 2), (1, 0, 1, 1), 3))

# %% [markdown]
# # Configurations of subspaces
#
# A point of the Bott-Samelson variety of a reduced word is a sequence of
# subspaces, one per chamber, obtained by changing a flag one step at a
# time.  The same points are cut out by inclusions `V_C <= V_C'` whenever
# `C < C'`, with the standard flag fixed.

# %%
import random

from bottsamelson import full_chamber_family, generating_point, is_inclusion_point
from bottsamelson.configgeom import (conjecture_conditions, positional_config,
                                     random_upper_triangular, theta_image_conditions)

rng = random.Random(0)
word = (2, 1, 2)
z = generating_point(full_chamber_family(word, 3))
point = z.apply(random_upper_triangular(3, rng))
print("inclusion:", is_inclusion_point(word, point))
print("flag chain:", theta_image_conditions(word, positional_config(word, point)))

# %% [markdown]
# Orbit points of a generating point satisfy the dimension bounds of every
# subfamily.  Only this necessary direction is checked.

# %%
from bottsamelson import parse_family
from bottsamelson.configgeom import random_invertible

fam = parse_family("124,2,24,234", 4)
zd = generating_point(fam)
print(all(conjecture_conditions(fam, zd.apply(random_invertible(4, rng))) for _ in range(5)))

# %% [markdown]
# # Schubert polynomials going down and going up
#
# Going down: start at the staircase monomial and apply divided differences
# along first ascents.  Going up: take the inversion family `I(w)` and
# evaluate its flagged character with the Demazure formula.

# %%
from bottsamelson import (Permutation, all_permutations, first_ascent_word, inversion_family,
                          schubert_ascending, schubert_descending, verify_kp)

w = Permutation((2, 4, 1, 5, 3))
print("I(w) =", inversion_family(w))
print("first ascents:", first_ascent_word(w))
print("down:", schubert_descending(w))
print("up:  ", schubert_ascending(w))

# %%
for v in all_permutations(3):
    print(v, schubert_descending(v))

# %%
for n in range(2, 6):
    print(f"S_{n}:", verify_kp(n))

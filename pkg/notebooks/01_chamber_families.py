# %% [markdown]
# # Chamber families and strong separation
#
# A reduced word `i = (i_1, ..., i_l)` for a permutation sweeps out subsets
# `C_k = s_{i_1} ... s_{i_k} [i_k]`.  Reading them off a wiring diagram gives
# the same list: each region is labelled by the curves passing above it.

# %%
from bottsamelson import (chamber_family, find_embedding_word, full_chamber_family,
                          is_percent_avoiding, is_strongly_separated, longest, parse_family,
                          reduced_words, render_wiring)

for word in reduced_words(longest(3)):
    print(word, "->", chamber_family(word, 3))

# %% [markdown]
# The full family prepends the standard flag sets `[1], ..., [n]`.

# %%
word = (3, 1, 2, 1, 3, 2)
print(full_chamber_family(word, 4))
print(render_wiring(word, 4, ascii=True))

# %% [markdown]
# Strongly separated families are exactly the subfamilies of full chamber
# families.  When a family passes the test we can produce a certificate: a
# shortest reduced word whose chambers contain it.

# %%
for text in ("13,2", "24,34,4", "12,124,24,4"):
    fam = parse_family(text, 4)
    ok = is_strongly_separated(fam)
    assert ok == is_percent_avoiding(fam)
    cert = find_embedding_word(fam) if ok else None
    print(f"{text:>14}: separated={ok} certificate={cert}")

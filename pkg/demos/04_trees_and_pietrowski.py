# Tree products of infinite cyclic groups and a one-relator example with a stable letter.
import itertools
import os

from garside.trees import (load_tree, load_pietrowski, vertex_exponents, hnn_over_tree_garside,
                           pietrowski_validate, pietrowski_build)
from garside import verify_garside, serialize

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")
t = load_tree(os.path.join(DATA, "seven.tree"))
ex = vertex_exponents(t)
print("exponents:", ex)
print("HNN pairs that stay Garside:",
      [(a, b) for a, b in itertools.combinations(t.vertices, 2) if hnn_over_tree_garside(t, a, b)])

d = load_pietrowski(os.path.join(DATA, "chain_stable.pie"))
print("valid:", pietrowski_validate(d).ok)
c = pietrowski_build(d)
print(serialize(c.presentation))
print(verify_garside(c.presentation, c.table).summary())

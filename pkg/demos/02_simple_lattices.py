# Simple elements, the Garside element, and roots of its powers.
import os

import networkx as nx

from garside import load_presentation, simple_closure, hasse_lattice, roots, root_descriptor

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

for name in ("chi.mon", "kappa.mon"):
    p = load_presentation(os.path.join(DATA, name))
    gs = simple_closure(p)
    print(p.name, "simples:", gs.count, "delta:", p.compact(gs.delta), "e:", gs.central_exponent)
    g = hasse_lattice(gs)
    print("  longest chain:", nx.dag_longest_path_length(g))
    print("  simples:", " ".join(p.compact(s) for s in gs.simples))

kappa = load_presentation(os.path.join(DATA, "kappa.mon"))
gs = simple_closure(kappa)
for p_, q in ((1, 3), (2, 3)):
    found = roots(gs, p_, q)
    print(f"delta^{p_}/{q}:", ", ".join(kappa.compact(h) for h in found))

d = root_descriptor(gs, kappa.word("x x y x y"))
print("xxyxy is a root of delta^%d of degree %d" % (d.delta_power, d.degree))

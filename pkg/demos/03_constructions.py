# Gluing Garside monoids: an amalgam along a common root, then a stuffed HNN extension.
import os

from garside import Factor, amalgam, hnn_stuffed, hnn_hypothesis_check, load_presentation, verify_garside, serialize

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")
chi = Factor.of(load_presentation(os.path.join(DATA, "chi.mon")))
kappa = Factor.of(load_presentation(os.path.join(DATA, "kappa.mon")))
K = kappa.presentation

c = amalgam(chi, chi.presentation.word("c b"), kappa, K.word("y x y x"))
print(serialize(c.presentation))
rep = verify_garside(c.presentation, c.table)
print(rep.summary(), "| delta =", c.presentation.compact(rep.structure.delta))

for h1, h2 in (("x y", "x y"), ("y", "x y"), ("y", "y x")):
    hyp = hnn_hypothesis_check(kappa, K.word(h1), K.word(h2))
    h = hnn_stuffed(kappa, K.word(h1), K.word(h2), "z")
    rep = verify_garside(h.presentation, h.table)
    note = f" [{'; '.join(hyp.warnings)}]" if hyp.warnings else ""
    print(f"({h1}, {h2}):", rep.summary() + note)

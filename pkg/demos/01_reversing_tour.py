# A short walk through word reversing on two small monoids.
import os

from garside import load_presentation, right_complement_table, theta, words_equal, right_lcm, cube_check_all

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")

chi = load_presentation(os.path.join(DATA, "chi.mon"))
kappa = load_presentation(os.path.join(DATA, "kappa.mon"))
tchi = right_complement_table(chi)
tkappa = right_complement_table(kappa)

# the letter table, one row per pair
for x in chi.gens:
    for y in chi.gens:
        if x != y:
            print(f"{x}\\{y} = {chi.compact(tchi[chi.index(x), chi.index(y)])}")

# complements of words are computed by reversing, letter pair by letter pair
u, v = chi.word("a"), chi.word("c b")
print("a\\cb =", chi.compact(theta(tchi, u, v)))

# the cube condition on letters is what makes this a decision procedure
print("cube ok on chi:", cube_check_all(tchi).ok)
print("cube ok on kappa:", cube_check_all(tkappa).ok)

print("xyxyx == yy:", words_equal(tkappa, kappa.word("x y x y x"), kappa.word("y y")))
print("x v y =", kappa.compact(right_lcm(tkappa, kappa.word("x"), kappa.word("y"))))

# A dyadic phase with l digits turns into a GF(2) polynomial of degree < 2^l
# whose error at every input matches the cosine's.
import math

import numpy as np

from pfourier.approx import (
    RandomizedPhaseFamily,
    check_pointwise_error,
    expected_values,
    polynomial_error,
    theorem3_polynomial,
)
from pfourier.core import make_family
from pfourier.dyadic import Dyadic
from pfourier.periodic import cq_recipe

# Exact case: the top weight bit is the function itself.
pp = theorem3_polynomial(cq_recipe(3))
for i, y in enumerate(pp.atoms[0].ys):
    print(f"y_{i} = {y}  (degree {y.degree})")

# Approximate case: the CHSH phases approximate CQ_2 with error (1 - 1/sqrt2)/2.
chsh = RandomizedPhaseFamily(2, ((1, {0: Dyadic(1, 2), 1: Dyadic(-1, 2), 2: Dyadic(-1, 2)}),))
f = make_family("cq", 2)
print()
print("E[cos] at each input:", np.round(expected_values(chsh), 4).tolist())
eps = (1 - 1 / math.sqrt(2)) / 2
print("pointwise eps:", round(eps, 6), check_pointwise_error(chsh, f, eps + 1e-12))
pp = theorem3_polynomial(chsh)
print("polynomial atoms:", [(round(a.weight, 4), str(a.poly)) for a in pp.atoms])
print("polynomial error:", round(polynomial_error(pp, f), 6))

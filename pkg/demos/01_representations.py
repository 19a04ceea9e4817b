# Periodic Fourier representations: f(x) = cos(pi * sum_S phi_S x^S).
# We build a few by hand-rolled constructions and compare their sizes.
import numpy as np

from pfourier.core import make_family
from pfourier.periodic import c3_recipe, cq_recipe, from_anf, from_fourier, stats, verify

# The second bit of the Hamming weight. Its ordinary Fourier expansion is
# dense (it is bent for even n), but a 2-digit phase needs only n + 1 terms.
for n in (4, 6, 8):
    f = make_family("cq", n)
    print(f"CQ_{n}")
    for label, rep in [("fourier", from_fourier(f)), ("anf", from_anf(f)), ("mod4", cq_recipe(n))]:
        s, k = stats(rep)
        print(f"  {label:8s} sparsity={s:4d} digits={k} verified={verify(rep, f).ok}")

print()
print("CQ_3 via the weight polynomial:", cq_recipe(3))

# AND-ing a representation with a parity: C^3 = CQ and XOR.
# Sparsity is 2n+1 except n = 2 mod 8 where one phase cancels.
sizes = {n: stats(c3_recipe(n))[0] for n in range(3, 11)}
print()
print("C^3_n sparsity:", sizes)
print("n with sparsity 2n:", [n for n, s in sizes.items() if s == 2 * n])

# The phase sum is an integer everywhere; its parity is f.
rep = cq_recipe(5)
from pfourier.periodic import phase_sums

sums, top = phase_sums(rep)
print()
print("phase sums for CQ_5 (first 16 inputs):", (np.asarray(sums[:16], dtype=np.int64) >> top).tolist())

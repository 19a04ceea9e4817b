# How small can a periodic representation be? Degree, dimension, and
# exhaustive search at n <= 3.
from pfourier.anf import moebius
from pfourier.core import make_family
from pfourier.fourier import mod3_closed_form, wht
from pfourier.periodic import brute_force_pfs, from_fourier, lower_bounds

for name, n, k in [("and", 2, None), ("and", 3, None), ("maj", 3, None), ("mod", 3, 3), ("xor", 3, None)]:
    f = make_family(name, n, k=k)
    pfs, witness = brute_force_pfs(f)
    print(f"{name}{n}: deg={moebius(f).degree} bounds={lower_bounds(f)} exhaustive pfs={pfs}")
    print("    smallest:", witness)

# Mod^3_n: the degree bound meets the Fourier construction, so pfs is pinned.
print()
for n in range(3, 9):
    f = make_family("mod", n, k=3)
    print(f"Mod3_{n}: fourier sparsity {from_fourier(f).sparsity:4d}  bound {max(lower_bounds(f).values()):4d}")

# The spectrum has a closed form from the cube-root-of-unity product.
print()
print("closed form matches WHT for n=3..10:",
      all(mod3_closed_form(n) == wht(make_family("mod", n, k=3)) for n in range(3, 11)))

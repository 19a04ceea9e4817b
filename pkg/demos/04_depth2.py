# Two layers make symmetric functions cheap. Layer 1 tests |x| == k through
# cos(pi (|x| - k) / 2^j); layer 2 ORs the outcome bits.
import math

from pfourier.core import make_family
from pfourier.depth2 import build_for, qubit_count, simulate_support, verify_depth2

p = build_for(make_family("or", 2))
for bits in [(0, 0), (1, 0), (1, 1)]:
    support, outputs = simulate_support(p, bits)
    print(f"OR_2{bits}: layer-1 support {sorted(support[0])} -> outputs {outputs}")

print()
print(" n   OR  Mod3  Maj   one-layer AND needs 2^n-1")
for n in range(1, 11):
    row = [qubit_count(build_for(make_family("or", n))), qubit_count(build_for(make_family("mod", n, k=3)))]
    row.append(qubit_count(build_for(make_family("maj", n))) if n % 2 else None)
    print(f"{n:2d} {row[0]:4d} {row[1]:5d} {str(row[2]):>4s}   {2 ** n - 1}")

ok = all(verify_depth2(build_for(make_family(name, n, k=3 if name == "mod" else None)),
                       make_family(name, n, k=3 if name == "mod" else None))
         for n in range(1, 9) for name in ("or", "mod"))
print()
print("exhaustive verification n<=8:", ok)

"""Scratch profiling: derivation images of the degree-18 relation, step by step."""
import sys
import time

sys.path.insert(0, "src")

from nicholsq.realization import gamma3_realization
from nicholsq.scalars import Scalar
from nicholsq.tensor import build_hv1, iterated_ad, skew_derivation

space = build_hv1(gamma3_realization())
W = Scalar.omega()
u = lambda i, j: iterated_ad(space, [i, j, 4])
u12413 = u(1, 2) * u(1, 3) + (u(1, 3) * u(1, 2)).scale(W * W)

t0 = time.time()
top = u12413 ** 3
print("expanded:", len(top.terms), f"{time.time()-t0:.1f}s", flush=True)

for i in (1, 2, 3):
    t0 = time.time()
    d = skew_derivation(i, top)
    print(f"d{i}(top): {len(d.terms)} words {time.time()-t0:.1f}s", flush=True)

t0 = time.time()
d4 = skew_derivation(4, top)
print(f"d4(top): {len(d4.terms)} words {time.time()-t0:.1f}s", flush=True)

cur = [d4]
t_all = time.time()
for depth in range(2, 19):
    t0 = time.time()
    nxt = {}
    for e in cur:
        for i in (1, 2, 3, 4):
            d = skew_derivation(i, e)
            if not d.is_zero():
                nxt[d.canonical_key()] = d
    cur = list(nxt.values())
    if not cur:
        print(f"depth {depth}: ALL ZERO -> member ({time.time()-t_all:.1f}s cum)", flush=True)
        break
    sizes = sorted(len(e.terms) for e in cur)
    print(f"depth {depth}: {len(cur)} elems, max size {sizes[-1]}, total {sum(sizes)} "
          f"({time.time()-t0:.1f}s step, {time.time()-t_all:.1f}s cum)", flush=True)

"""Scratch profiling: full completion of the 4-letter Nichols presentation."""
import sys
import time

sys.path.insert(0, "src")

from nicholsq.engine import Presentation, complete, dimension, hilbert
from nicholsq.realization import gamma3_realization
from nicholsq.scalars import Scalar
from nicholsq.tensor import build_hv1, iterated_ad

space = build_hv1(gamma3_realization())
W = Scalar.omega()


def z(h):
    return iterated_ad(space, [h, 4])


def u(i, j):
    return iterated_ad(space, [i, j, 4])


x4 = space.letter(4)
u12, u13 = u(1, 2), u(1, 3)
top = (u12 * u13 + (u13 * u12).scale(W * W)) ** 3
print("top relation words:", len(top.terms))

rels = [
    space.word("11"), space.word("22"), space.word("33"),
    space.word("12") + space.word("31") + space.word("23"),
    space.word("21") + space.word("13") + space.word("32"),
    space.word("444444"),
    top,
    u(2, 1) - u(1, 3).scale(W),
    u(3, 1) - u(1, 2).scale(W),
]
for h in (1, 2, 3):
    zh = z(h)
    rels.append(x4 * zh - (zh * x4).scale(Scalar.q2()))

pres = Presentation("1234", [r.terms for r in rels], precedence="4123")
t0 = time.time()
cap = int(sys.argv[1]) if len(sys.argv) > 1 else 36
gb = complete(pres, cap)
t1 = time.time()
print(f"completion cap={cap}: {t1-t0:.1f}s, rules={len(gb.rules)}, certified={gb.certified}")
by_deg = {}
for l in gb.rules:
    by_deg[len(l)] = by_deg.get(len(l), 0) + 1
print("rules by degree:", dict(sorted(by_deg.items())))
t0 = time.time()
series = hilbert(gb, 36)
print("hilbert:", series)
print("total:", sum(series), "dim:", dimension(gb), f"({time.time()-t0:.1f}s)")

"""Scratch profiling v2: staged, with incremental normal forms."""
import sys
import time

sys.path.insert(0, "src")

from nicholsq.engine import Presentation, complete, dimension, hilbert, normal_form, reduce_terms
from nicholsq.realization import finite_realization
from nicholsq.realization import gamma3_realization
from nicholsq.scalars import CyclotomicNumber, Scalar
from nicholsq.tensor import build_hv1, iterated_ad

space = build_hv1(gamma3_realization())
W = Scalar.omega()
z = lambda h: iterated_ad(space, [h, 4])
u = lambda i, j: iterated_ad(space, [i, j, 4])
x4 = space.letter(4)
u12413 = u(1, 2) * u(1, 3) + (u(1, 3) * u(1, 2)).scale(W * W)

dist = [
    space.word("11"), space.word("22"), space.word("33"),
    space.word("12") + space.word("31") + space.word("23"),
    space.word("21") + space.word("13") + space.word("32"),
    u(2, 1) - u(1, 3).scale(W),
    u(3, 1) - u(1, 2).scale(W),
]
for h in (1, 2, 3):
    zh = z(h)
    dist.append(x4 * zh - (zh * x4).scale(Scalar.q2()))

t0 = time.time()
pres = Presentation("1234", [r.terms for r in dist], precedence="4123")
gb = complete(pres, 26)
print(f"distinguished cap=26: {time.time()-t0:.1f}s rules={len(gb.rules)} certified={gb.certified}", flush=True)
print("hilbert:", hilbert(gb, 20), flush=True)


def nf_mul(gb, a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            c = c1 * c2
            if w in out:
                s = out[w] + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
            else:
                out[w] = c
    return reduce_terms(out, gb.rules, gb.lengths, gb.order)


t0 = time.time()
A = normal_form(u12413.terms, gb, check_cap=False)
print(f"nf(A): {len(A)} words {time.time()-t0:.2f}s", flush=True)
t0 = time.time()
A2 = nf_mul(gb, A, A)
print(f"nf(A^2): {len(A2)} words {time.time()-t0:.2f}s", flush=True)
t0 = time.time()
A3 = nf_mul(gb, A2, A)
print(f"nf(A^3): {len(A3)} words {time.time()-t0:.2f}s", flush=True)

t0 = time.time()
z4 = {"444444": Scalar.one()}
lhs = nf_mul(gb, z4, A3)
rhs = nf_mul(gb, A3, z4)
diff = dict(lhs)
qq = Scalar.q2() ** 72
for w, c in rhs.items():
    cc = qq * c
    s = diff.get(w, Scalar.zero()) - cc
    if s.is_zero():
        diff.pop(w, None)
    else:
        diff[w] = s
print(f"z4 q-commutation diff empty: {not diff} ({time.time()-t0:.2f}s)", flush=True)

# B5 for top-minimality
t0 = time.time()
pres5 = Presentation("1234", [r.terms for r in dist] + [{"444444": Scalar.one()}], precedence="4123")
gb5 = complete(pres5, 19)
A5 = normal_form(u12413.terms, gb5, check_cap=False)
A5b = nf_mul(gb5, A5, A5)
A5c = nf_mul(gb5, A5b, A5)
print(f"B5 cap=19: {time.time()-t0:.1f}s rules={len(gb5.rules)} top-nf-zero={not A5c} nfwords={len(A5c)}", flush=True)

"""Group models and principal realizations of rack braidings.

Three group models share a tiny duck-typed protocol (identity, mul, inv,
is_finite, elements):

* ``EnvelopingGroup`` -- the infinite enveloping group of the triangle
  quandle, generated by nu, gamma, zeta with gamma*nu = nu^2*gamma, zeta
  central, nu^3 = 1.  Elements are normal forms nu^b gamma^a zeta^c.
* ``FiniteQuotientGroup`` -- the quotient with gamma^N = zeta^M = 1 (N even
  so that gamma^N is central); order 3*N*M.
* ``TableGroup`` -- any finite group given by elements and a multiplication
  function (used for the symmetric group on 3 letters).

A ``PrincipalRealization`` attaches group-likes g_i, the conjugation action
on letters and 1-cocycles chi_i to a rack-with-cocycle braiding.  The chi_i
are stored by their values on the generators g_j (namely the transposed
cocycle table) and evaluated on arbitrary elements by word decomposition,
using chi_i(h t) = chi_i(t) * chi_{t.i}(h); well-definedness is validated,
not assumed.
"""

from __future__ import annotations

import itertools

from .racks import Rack, TwoCocycle, hv1_rack_and_cocycle, dihedral_rack
from .scalars import CyclotomicNumber, Scalar, Specialization

__all__ = [
    "InfiniteGroup",
    "EnvelopingGroup",
    "FiniteQuotientGroup",
    "TableGroup",
    "symmetric_group_3",
    "PrincipalRealization",
    "gamma3_realization",
    "finite_realization",
    "fk3_realization_s3",
    "lambda_support_predicates",
]


class InfiniteGroup(RuntimeError):
    """An exhaustive check was requested on an infinite group model."""


def _pow2_mod3(a: int) -> int:
    return 2 if a % 2 else 1


class EnvelopingGroup:
    """Normal forms nu^b gamma^a zeta^c, b in Z_3, a and c unbounded."""

    is_finite = False

    identity = (0, 0, 0)

    def mul(self, x, y):
        b1, a1, c1 = x
        b2, a2, c2 = y
        return ((b1 + _pow2_mod3(a1) * b2) % 3, a1 + a2, c1 + c2)

    def inv(self, x):
        b, a, c = x
        return ((-_pow2_mod3(a) * b) % 3, -a, -c)

    def elements(self):
        raise InfiniteGroup("the enveloping group is infinite")

    def sample(self, span: int = 2):
        """Finite witness set: all normal forms with small exponents."""
        for b in range(3):
            for a in range(-span, span + 1):
                for c in range(-span, span + 1):
                    yield (b, a, c)

    def __repr__(self):
        return "EnvelopingGroup()"


class FiniteQuotientGroup(EnvelopingGroup):
    """Quotient by gamma^N and zeta^M; N must be even for centrality."""

    is_finite = True

    def __init__(self, N: int, M: int):
        if N <= 0 or N % 2:
            raise ValueError("gamma order N must be a positive even integer")
        if M <= 0:
            raise ValueError("zeta order M must be positive")
        self.N = N
        self.M = M
        self.size = 3 * N * M

    def _norm(self, x):
        b, a, c = x
        return (b % 3, a % self.N, c % self.M)

    def mul(self, x, y):
        return self._norm(super().mul(x, y))

    def inv(self, x):
        return self._norm(super().inv(x))

    def elements(self):
        for b in range(3):
            for a in range(self.N):
                for c in range(self.M):
                    yield (b, a, c)

    def __repr__(self):
        return f"FiniteQuotientGroup(N={self.N}, M={self.M})"


class TableGroup:
    """Finite group from a list of hashable elements and a product map."""

    is_finite = True

    def __init__(self, elements, mul):
        self._elements = list(elements)
        self._mul = mul
        self.size = len(self._elements)
        eset = set(self._elements)
        ident = None
        for e in self._elements:
            if all(mul(e, x) == x for x in self._elements):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element")
        self.identity = ident
        self._inv = {}
        for x in self._elements:
            for y in self._elements:
                if mul(x, y) not in eset:
                    raise ValueError("multiplication not closed")
                if mul(x, y) == ident:
                    self._inv[x] = y

    def mul(self, x, y):
        return self._mul(x, y)

    def inv(self, x):
        return self._inv[x]

    def elements(self):
        return iter(self._elements)

    def __repr__(self):
        return f"TableGroup(size={self.size})"


def symmetric_group_3() -> TableGroup:
    """Permutations of {0,1,2} as tuples, composed left-to-right on points."""
    elems = list(itertools.permutations(range(3)))

    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    return TableGroup(elems, mul)


class PrincipalRealization:
    """Group model + group-likes g_i + 1-cocycles chi_i + action on letters.

    chi_i(g_j) is the (j, i) entry of the rack cocycle; general values are
    produced by decomposing elements into words over the g_j and folding the
    cocycle law.  Letters are 1-based at this interface.
    """

    def __init__(self, group, g_map, rack: Rack, cocycle: TwoCocycle,
                 specialization: Specialization | None = None):
        self.group = group
        self.letters = sorted(g_map)
        self.g = dict(g_map)
        self.rack = rack
        self.specialization = specialization
        if specialization is None:
            self._one = Scalar.one()
            convert = lambda v: v
        else:
            self._one = CyclotomicNumber.one(specialization.n)
            convert = specialization.apply
        # chi_values[i][j] = chi_i(g_j) = cocycle[j][i]
        self.chi_values = {
            i: {j: convert(cocycle(j - 1, i - 1)) for j in self.letters}
            for i in self.letters
        }
        self.cocycle_values = {
            (i, j): convert(cocycle(i - 1, j - 1))
            for i in self.letters for j in self.letters
        }
        self._gen_action = {
            j: {i: rack.op(j - 1, i - 1) + 1 for i in self.letters}
            for j in self.letters
        }
        self._gen_action_inv = {
            j: {v: k for k, v in perm.items()}
            for j, perm in self._gen_action.items()
        }
        self._decomp_cache = {}
        self._chi_cache = {}
        self._act_cache = {}

    # -- word decomposition -------------------------------------------------

    def decompose(self, x):
        """x as a word ((letter, +-1), ...) over the generators g_i."""
        try:
            return self._decomp_cache[x]
        except KeyError:
            pass
        if isinstance(self.group, EnvelopingGroup):
            word = self._decompose_env(x)
        else:
            word = self._decompose_bfs(x)
        self._decomp_cache[x] = word
        return word

    def _decompose_env(self, x):
        # nu = g1^{-1} g2, gamma = g1, zeta = g4
        b, a, c = x
        word = []
        word.extend(((1, -1), (2, +1)) * (b % 3))
        word.extend(((1, 1 if a >= 0 else -1),) * abs(a))
        word.extend(((4, 1 if c >= 0 else -1),) * abs(c))
        return tuple(word)

    def _decompose_bfs(self, x):
        if not self._decomp_cache:
            grp = self.group
            frontier = [grp.identity]
            self._decomp_cache[grp.identity] = ()
            steps = [(i, +1, self.g[i]) for i in self.letters]
            steps += [(i, -1, grp.inv(self.g[i])) for i in self.letters]
            while frontier:
                nxt = []
                for e in frontier:
                    for (i, s, ge) in steps:
                        v = grp.mul(ge, e)
                        if v not in self._decomp_cache:
                            self._decomp_cache[v] = ((i, s),) + self._decomp_cache[e]
                            nxt.append(v)
                frontier = nxt
        return self._decomp_cache[x]

    # -- cocycle evaluation and action ---------------------------------------

    def _gen_act(self, j: int, sign: int, i: int) -> int:
        return self._gen_action[j][i] if sign > 0 else self._gen_action_inv[j][i]

    def _gen_chi(self, i: int, j: int, sign: int):
        if sign > 0:
            return self.chi_values[i][j]
        return self.chi_values[self._gen_act(j, -1, i)][j].inverse()

    def act(self, x, i: int):
        """(x . i, chi_i(x)) for a group element x and letter i."""
        key = (x, i)
        try:
            return self._act_cache[key]
        except KeyError:
            pass
        value = self._one
        cur = i
        for (j, sign) in reversed(self.decompose(x)):
            value = value * self._gen_chi(cur, j, sign)
            cur = self._gen_act(j, sign, cur)
        self._act_cache[key] = (cur, value)
        return (cur, value)

    def act_letter(self, x, i: int) -> int:
        return self.act(x, i)[0]

    def chi(self, i: int, x):
        return self.act(x, i)[1]

    # -- validation -----------------------------------------------------------

    def validate(self, cocycle_pair_bound: int = 160_000):
        """Check the principal-realization axioms; (ok, first violation).

        On finite models with at most `cocycle_pair_bound` element pairs the
        cocycle law is checked exhaustively, otherwise on generator pairs
        plus a seeded random sample.
        """
        grp = self.group
        gs = self.g
        fk = [i for i in self.letters if i != 4]

        # conjugation must realize the rack: g_i g_j g_i^{-1} = g_{i > j}
        for i in self.letters:
            for j in self.letters:
                lhs = grp.mul(gs[i], grp.mul(gs[j], grp.inv(gs[i])))
                if lhs != gs[self.rack.op(i - 1, j - 1) + 1]:
                    return False, ("conjugation-vs-rack", (i, j))

        if 4 in self.letters:
            # g_i^2 all equal, braid-type exchange, g_4 central
            for i in fk:
                for j in fk:
                    if grp.mul(gs[i], gs[i]) != grp.mul(gs[j], gs[j]):
                        return False, ("squares-differ", (i, j))
                    k = self.rack.op(i - 1, j - 1) + 1
                    if grp.mul(gs[i], gs[j]) != grp.mul(gs[k], gs[i]):
                        return False, ("exchange", (i, j))
            central_on = grp.elements() if grp.is_finite else (
                grp.sample(2) if isinstance(grp, EnvelopingGroup) else [])
            for h in central_on:
                if grp.mul(h, gs[4]) != grp.mul(gs[4], h):
                    return False, ("g4-not-central", h)

        # YD compatibility on generators: x . i must satisfy
        # g_{x . i} = x g_i x^{-1} whenever x is one of the g_j.
        for j in self.letters:
            for i in self.letters:
                tgt, _ = self.act(gs[j], i)
                conj = grp.mul(gs[j], grp.mul(gs[i], grp.inv(gs[j])))
                if conj != gs[tgt]:
                    return False, ("yd-compat", (j, i))

        # cocycle law chi_i(ht) = chi_i(t) chi_{t.i}(h): exhaustive on small
        # finite models, generator pairs plus a seeded sample on larger ones.
        if grp.is_finite and grp.size * grp.size <= cocycle_pair_bound:
            pairs = itertools.product(grp.elements(), repeat=2)
        elif grp.is_finite:
            import random

            rng = random.Random(0xC0C1)
            elems = list(grp.elements())
            gens = [gs[i] for i in self.letters] + [grp.inv(gs[i]) for i in self.letters]
            pairs = [(h, t) for h in gens for t in elems]
            pairs += [(rng.choice(elems), rng.choice(elems)) for _ in range(2000)]
        else:
            sample = list(grp.sample(2))
            pairs = itertools.product(sample, repeat=2)
        for h, t in pairs:
            ht = grp.mul(h, t)
            for i in self.letters:
                ti, chit = self.act(t, i)
                _, chih = self.act(h, ti)
                if self.chi(i, ht) != chit * chih:
                    return False, ("cocycle-law", (h, t, i))
        return True, None

    def __repr__(self):
        tag = "symbolic" if self.specialization is None else f"q1->{self.specialization.q1_image}"
        return f"PrincipalRealization({self.group!r}, {tag})"

    # -- serialization ---------------------------------------------------------

    def describe(self) -> dict:
        if isinstance(self.group, FiniteQuotientGroup):
            kind = {"kind": "env-quotient", "N": self.group.N, "M": self.group.M}
        elif isinstance(self.group, EnvelopingGroup):
            kind = {"kind": "env"}
        else:
            kind = {"kind": "table", "size": self.group.size}
        spec = None
        if self.specialization is not None:
            spec = {"order": self.specialization.n, "q1": str(self.specialization.q1_image)}
        return {
            "group": kind,
            "letters": self.letters,
            "generators": {str(i): str(self.g[i]) for i in self.letters},
            "specialization": spec,
        }


def gamma3_realization() -> PrincipalRealization:
    """Symbolic realization over the enveloping group: g_i = gamma nu^{i-1}
    in normal form, g_4 = zeta."""
    grp = EnvelopingGroup()
    # gamma nu^{i-1} normalized: nu^{2(i-1) mod 3} gamma
    g_map = {1: (0, 1, 0), 2: (2, 1, 0), 3: (1, 1, 0), 4: (0, 0, 1)}
    rack, cocycle = hv1_rack_and_cocycle()
    return PrincipalRealization(grp, g_map, rack, cocycle)


def finite_realization(N: int = 24, M: int = 12,
                       specialization: Specialization | None = None) -> PrincipalRealization:
    """Realization over the finite quotient, with specialized cocycle values.

    The default specialization q1 -> w is the one that makes the cocycles
    well defined on the quotient (q2^M and q1^N must be 1).
    """
    if specialization is None:
        specialization = Specialization.q1_to_omega(12)
    grp = FiniteQuotientGroup(N, M)
    g_map = {1: (0, 1, 0), 2: (2, 1, 0), 3: (1, 1, 0), 4: (0, 0, 1)}
    rack, cocycle = hv1_rack_and_cocycle()
    return PrincipalRealization(grp, g_map, rack, cocycle, specialization)


def fk3_realization_s3(specialization: Specialization | None = None) -> PrincipalRealization:
    """The 3-letter triangle braiding realized over the symmetric group on
    three letters, g_i the transposition fixing point i-1, cocycle -1."""
    grp = symmetric_group_3()
    g_map = {1: (0, 2, 1), 2: (2, 1, 0), 3: (1, 0, 2)}
    rack = dihedral_rack()
    minus_one = -Scalar.one()
    cocycle = TwoCocycle([[minus_one] * 3 for _ in range(3)])
    return PrincipalRealization(grp, g_map, rack, cocycle, specialization)


# ---------------------------------------------------------------------------
# Deformation-parameter support predicates
# ---------------------------------------------------------------------------


def _char_trivial(realization: PrincipalRealization, powers: dict):
    """Whether prod_i chi_i^{powers[i]} is the trivial character.

    Exhaustive on finite models; on infinite models a False verdict comes
    from a witness, a True verdict cannot be certified (InfiniteGroup).
    """
    grp = realization.group
    if grp.is_finite:
        pool = grp.elements()
        certifying = True
    else:
        pool = grp.sample(3)
        certifying = False
    one = realization._one
    for x in pool:
        v = one
        for i, e in powers.items():
            v = v * (realization.chi(i, x) ** e)
        if v != one:
            return False
    if not certifying:
        raise InfiniteGroup("cannot certify a character condition exhaustively")
    return True


def _group_power_nontrivial(realization: PrincipalRealization, powers: dict) -> bool:
    grp = realization.group
    v = grp.identity
    for i, e in powers.items():
        base = realization.g[i] if e >= 0 else grp.inv(realization.g[i])
        for _ in range(abs(e)):
            v = grp.mul(v, base)
    return v != grp.identity


def _slot(realization, char_powers_list, group_powers_list):
    """A lambda-slot is permitted iff every character condition holds and
    every group element condition is nontrivial."""
    for powers in group_powers_list:
        if not _group_power_nontrivial(realization, powers):
            return False
    for powers in char_powers_list:
        try:
            if not _char_trivial(realization, powers):
                return False
        except InfiniteGroup:
            raise
    return True


def lambda_support_predicates(realization: PrincipalRealization):
    """Per-slot admissibility of nonzero deformation parameters.

    Slot k is permitted when the attached character is trivial and the
    attached group-like is nontrivial; returns four booleans.
    """
    fk = [1, 2, 3]
    slot1 = _slot(
        realization,
        [{i: 2} for i in fk],
        [{i: 2} for i in fk],
    )
    slot2 = _slot(
        realization,
        [{i: 1, j: 1} for i in fk for j in fk if i != j],
        [{i: 1, j: 1} for i in fk for j in fk if i != j],
    )
    slot3 = _slot(realization, [{4: 6}], [{4: 6}])
    slot4 = _slot(realization, [{1: 12, 4: 6}], [{1: 12, 4: 6}])
    return (slot1, slot2, slot3, slot4)


def fk3_lambda_predicates(realization: PrincipalRealization):
    """Two-slot variant for the 3-letter triangle braiding."""
    fk = [1, 2, 3]
    slot1 = _slot(realization, [{i: 2} for i in fk], [{i: 2} for i in fk])
    slot2 = _slot(
        realization,
        [{i: 1, j: 1} for i in fk for j in fk if i != j],
        [{i: 1, j: 1} for i in fk for j in fk if i != j],
    )
    return (slot1, slot2)

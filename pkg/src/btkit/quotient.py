"""The partition Temperley-Lieb quotient: the braids-and-ties algebra modulo
the two-sided ideal generated by E_1 E_2 T_{12} (the Steinberg-type element
multiplied by the adjacent ties).

The ideal is materialized as a reduced row echelon basis, built by closing
the span of the generator under left/right multiplication by every T_i and
E_i; closure is verified, which certifies the span IS the two-sided ideal.
Cosets are represented by reduction against the echelon (unique
representative with zero coordinates at the pivots).
"""

from math import comb

from . import algebra
from .algebra import BasisIndex, E, F, L, T, one, steinberg
from .domains import SYMBOLIC, IntMod, PrimeDomain
from .linalg import Echelon, ModPEchelon
from .partitions import enumerate_partitions


def catalan_number(n):
    return comb(2 * n, n) // (n + 1)


class IdealBasis:
    """Echelonized span of a two-sided ideal, with coset reduction."""

    def __init__(self, n, dom, ech, index, generator_pair, tied=True):
        self.n = n
        self.dom = dom
        self.ech = ech
        self.index = index
        self.generator_pair = generator_pair
        self.tied = tied

    @property
    def dim(self):
        return self.ech.rank

    @property
    def quotient_dim(self):
        return len(self.index) - self.ech.rank

    def _to_row(self, elem):
        vec = self.index.vector(elem)
        if isinstance(self.ech, ModPEchelon):
            return [c.v if isinstance(c, IntMod) else int(c) for c in vec]
        return vec

    def _to_element(self, row):
        if isinstance(self.ech, ModPEchelon):
            p = self.ech.p
            vec = [IntMod(int(c), p) for c in row]
        else:
            vec = row
        return self.index.element(vec)

    def reduce(self, elem):
        """Canonical coset representative of elem (idempotent, linear)."""
        return self._to_element(self.ech.reduce(self._to_row(elem)))

    def contains(self, elem):
        return self.ech.is_zero_mod(self._to_row(elem))

    def row_elements(self):
        return [self._to_element(r) for r in self.ech.rows]


def _generators(n, dom):
    gens = []
    for i in range(1, n):
        gens.append(("T", i, T(i, n, dom)))
    for i in range(1, n):
        gens.append(("E", i, E(i, n, dom)))
    return gens


class _PrimeOps:
    """Vectorized one-generator multiplication on coefficient rows over
    GF(p): every generator acts as a scatter with at most three targets per
    basis element, precomputed once per basis."""

    def __init__(self, index, dom):
        import numpy as np
        from .permutations import Permutation
        self.np = np
        self.p = dom.p
        self.u1 = dom.u_minus_1.v
        n = index.n
        pairs = index.pairs
        pos = index.index
        self.tables = {}
        for i in range(1, n):
            s_i = Permutation.transposition(i, n)
            # right multiplication by T_i
            asc_s, asc_t, dsc_s, dsc1, dsc2, dsc3 = [], [], [], [], [], []
            for k, (I, w) in enumerate(pairs):
                if not w.has_right_descent(i):
                    asc_s.append(k)
                    asc_t.append(pos[(I, w.right_mul_gen(i))])
                else:
                    v = w.right_mul_gen(i)
                    Ip = I.join_arc(v.apply(i), v.apply(i + 1))
                    dsc_s.append(k)
                    dsc1.append(pos[(I, v)])
                    dsc2.append(pos[(Ip, v)])
                    dsc3.append(pos[(Ip, w)])
            self.tables[("R", "T", i)] = tuple(
                np.asarray(a) for a in (asc_s, asc_t, dsc_s, dsc1, dsc2, dsc3))
            # left multiplication by T_i
            asc_s, asc_t, dsc_s, dsc1, dsc2, dsc3 = [], [], [], [], [], []
            for k, (I, w) in enumerate(pairs):
                Ii = I.apply(s_i)
                if not w.has_left_descent(i):
                    asc_s.append(k)
                    asc_t.append(pos[(Ii, w.left_mul_gen(i))])
                else:
                    wp = w.left_mul_gen(i)
                    Ip = Ii.join_arc(i, i + 1)
                    dsc_s.append(k)
                    dsc1.append(pos[(Ii, wp)])
                    dsc2.append(pos[(Ip, wp)])
                    dsc3.append(pos[(Ip, w)])
            self.tables[("L", "T", i)] = tuple(
                np.asarray(a) for a in (asc_s, asc_t, dsc_s, dsc1, dsc2, dsc3))
            # tie generators: a single target each
            self.tables[("R", "E", i)] = np.asarray(
                [pos[(I.join_arc(w.apply(i), w.apply(i + 1)), w)]
                 for I, w in pairs])
            self.tables[("L", "E", i)] = np.asarray(
                [pos[(I.join_arc(i, i + 1), w)] for I, w in pairs])

    def keys(self):
        return sorted(self.tables)

    def apply(self, key, row):
        np = self.np
        out = np.zeros_like(row)
        table = self.tables[key]
        if key[1] == "E":
            np.add.at(out, table, row)
        else:
            asc_s, asc_t, dsc_s, dsc1, dsc2, dsc3 = table
            if asc_s.size:
                np.add.at(out, asc_t, row[asc_s])
            if dsc_s.size:
                src = row[dsc_s]
                np.add.at(out, dsc1, src)
                scaled = (src * self.u1) % self.p
                np.add.at(out, dsc2, scaled)
                np.add.at(out, dsc3, scaled)
        return out % self.p


def ideal_generator_element(n, dom=SYMBOLIC, pair=(1, 2), tied=True):
    """E_i E_j T_{ij} (tied; the quotient's defining generator), or the bare
    Steinberg element T_{ij} (untied; the generator the sandwich identities
    are equivalent to)."""
    i, j = pair
    st = steinberg(i, j, n, dom)
    if not tied:
        return st
    return E(i, n, dom) * E(j, n, dom) * st


_PRIME_OPS_CACHE = {}


def _prime_ops(index, dom):
    key = (index.n, dom.p, dom.s)
    if key not in _PRIME_OPS_CACHE:
        _PRIME_OPS_CACHE[key] = _PrimeOps(index, dom)
    return _PRIME_OPS_CACHE[key]


def build_ideal(n, dom=SYMBOLIC, pair=(1, 2), tied=True, index=None,
                generator=None):
    """Echelon basis of the two-sided ideal generated by E_i E_j T_{ij}
    (or by T_{ij} alone with tied=False, or by an explicit ``generator``
    element), by closing under generator multiplication on both sides."""
    if n < 3:
        raise ValueError("the quotient relation needs n >= 3")
    index = index or BasisIndex(n, dom)
    seed = generator if generator is not None else \
        ideal_generator_element(n, dom, pair, tied)
    if isinstance(dom, PrimeDomain):
        ech = ModPEchelon(width=len(index), p=dom.p)
        ib = IdealBasis(n, dom, ech, index, pair, tied)
        ops = _prime_ops(index, dom)
        queue = [ib._to_row(seed)]
        while queue:
            row = queue.pop(0)
            if not ech.insert(row):
                continue
            new = ech._mat[ech.rank - 1].copy()
            for key in ops.keys():
                queue.append(ops.apply(key, new))
        return ib
    ech = Echelon(width=len(index))
    ib = IdealBasis(n, dom, ech, index, pair, tied)
    gens = _generators(n, dom)
    queue = [seed]
    while queue:
        elem = queue.pop(0)
        row = ib._to_row(elem)
        if not ech.insert(row):
            continue
        new = ib._to_element(ech.rows[-1])
        for _, _, g in gens:
            queue.append(g * new)
            queue.append(new * g)
    return ib


def verify_ideal_closure(ib):
    """reduce(x*r) == 0 == reduce(r*x) for every echelon row r and every
    generator x; certifies the span is the whole two-sided ideal."""
    if isinstance(ib.dom, PrimeDomain):
        import numpy as np
        ech = ib.ech
        mat = ech._mat[:ech.rank]
        ops = _prime_ops(ib.index, ib.dom)
        for key in ops.keys():
            images = np.stack([ops.apply(key, row) for row in mat]) \
                if ech.rank else mat
            if ech.rank and np.any(ech.reduce_batch(images)):
                return False
        return True
    gens = _generators(ib.n, ib.dom)
    for row in ib.row_elements():
        for _, _, g in gens:
            if not ib.contains(g * row) or not ib.contains(row * g):
                return False
    return True


def build_ideal_by_pairs(n, dom=SYMBOLIC, pair=(1, 2), tied=True):
    """The literal span of {b1 * g * b2} over all basis pairs (the slow
    oracle for :func:`build_ideal` at small n)."""
    index = BasisIndex(n, dom)
    g = ideal_generator_element(n, dom, pair, tied)
    ech = Echelon(width=len(index))
    ib = IdealBasis(n, dom, ech, index, pair, tied)
    left = [index.basis_elem(k) * g for k in range(len(index))]
    for lg in left:
        for k in range(len(index)):
            ech.insert(ib._to_row(lg * index.basis_elem(k)))
    return ib


def reduce_mod_ideal(elem, ib):
    if elem.n != ib.n:
        raise ValueError("mismatched n")
    return ib.reduce(elem)


def equal_mod_ideal(a, b, ib):
    return ib.contains(a - b)


# ---------------------------------------------------------------------------
# the two quotient presentations
# ---------------------------------------------------------------------------

def presentation_instances(n):
    """Identity instances of the F- and L-generator presentations, plus the
    tie relations they inherit."""
    out = []
    gens = range(1, n)
    for i in gens:
        out.append(("quot-F-square", (i,)))
        out.append(("quot-L-idempotent", (i,)))
        out.append(("quot-F-E-own", (i,)))
        out.append(("quot-L-E-own", (i,)))
        out.append(("quot-tie-idempotent", (i,)))
    for i in gens:
        for j in gens:
            if abs(i - j) > 1:
                out.append(("quot-F-commute", (i, j)))
                out.append(("quot-F-E-commute", (i, j)))
                out.append(("quot-L-commute", (i, j)))
                out.append(("quot-L-E-commute", (i, j)))
            if i < j:
                out.append(("quot-tie-commute", (i, j)))
    for i in gens:
        for j in gens:
            if abs(i - j) == 1:
                out.append(("quot-F-tie-slide-a", (i, j)))
                out.append(("quot-F-tie-slide-b", (i, j)))
                out.append(("quot-F-cross", (i, j)))
                out.append(("quot-F-sandwich", (i, j)))
                out.append(("quot-L-tie-slide-a", (i, j)))
                out.append(("quot-L-tie-slide-b", (i, j)))
                out.append(("quot-L-cross", (i, j)))
                out.append(("quot-L-sandwich", (i, j)))
    return out


def presentation_sides(pid, params, n, dom=SYMBOLIC):
    u1 = dom.u_minus_1
    up1 = dom.u + dom.one
    delta = (dom.one - dom.u) / up1
    cu = dom.one / up1
    if pid == "quot-F-square":
        (i,) = params
        fi, ei = F(i, n, dom), E(i, n, dom)
        return fi * fi, fi.scale(dom.one + delta) - (ei * fi).scale(delta)
    if pid == "quot-L-idempotent":
        (i,) = params
        li = L(i, n, dom)
        return li * li, li
    if pid == "quot-F-E-own":
        (i,) = params
        return E(i, n, dom) * F(i, n, dom), F(i, n, dom) * E(i, n, dom)
    if pid == "quot-L-E-own":
        (i,) = params
        return E(i, n, dom) * L(i, n, dom), L(i, n, dom) * E(i, n, dom)
    if pid == "quot-tie-idempotent":
        (i,) = params
        return E(i, n, dom) * E(i, n, dom), E(i, n, dom)
    if pid == "quot-tie-commute":
        i, j = params
        return E(i, n, dom) * E(j, n, dom), E(j, n, dom) * E(i, n, dom)
    if pid == "quot-F-commute":
        i, j = params
        return F(i, n, dom) * F(j, n, dom), F(j, n, dom) * F(i, n, dom)
    if pid == "quot-F-E-commute":
        i, j = params
        return F(i, n, dom) * E(j, n, dom), E(j, n, dom) * F(i, n, dom)
    if pid == "quot-L-commute":
        i, j = params
        return L(i, n, dom) * L(j, n, dom), L(j, n, dom) * L(i, n, dom)
    if pid == "quot-L-E-commute":
        i, j = params
        return L(i, n, dom) * E(j, n, dom), E(j, n, dom) * L(i, n, dom)
    if pid == "quot-F-tie-slide-a":
        i, j = params
        ei, ej, fi = E(i, n, dom), E(j, n, dom), F(i, n, dom)
        return ei * ej * fi, fi * ei * ej
    if pid == "quot-F-tie-slide-b":
        i, j = params
        ei, ej, fi = E(i, n, dom), E(j, n, dom), F(i, n, dom)
        return ei * ej * fi, ej * fi * ej + (ei * ej - ej).scale(cu)
    if pid == "quot-F-cross":
        i, j = params
        ei, ej = E(i, n, dom), E(j, n, dom)
        fi, fj = F(i, n, dom), F(j, n, dom)
        rhs = (fj * fi * ej
               + ((ei - ej) * fj + fi * (ei - ej)).scale(cu)
               - (ei - ej).scale(cu * cu))
        return ei * fj * fi, rhs
    if pid == "quot-F-sandwich":
        i, j = params
        ei, fi, fj = E(i, n, dom), F(i, n, dom), F(j, n, dom)
        rhs = (fi - (ei * fi).scale(dom.one - dom.u)).scale(cu * cu)
        return fi * fj * fi, rhs
    if pid == "quot-L-tie-slide-a":
        i, j = params
        ei, ej, li = E(i, n, dom), E(j, n, dom), L(i, n, dom)
        return ei * ej * li, li * ei * ej
    if pid == "quot-L-tie-slide-b":
        i, j = params
        ei, ej, li = E(i, n, dom), E(j, n, dom), L(i, n, dom)
        half = dom.one / dom.of_int(2)
        return ei * ej * li, ej * li * ej + (ei * ej - ej).scale(half)
    if pid == "quot-L-cross":
        i, j = params
        ei, ej = E(i, n, dom), E(j, n, dom)
        li, lj = L(i, n, dom), L(j, n, dom)
        two, four = dom.of_int(2), dom.of_int(4)
        lhs = (li * lj * ei).scale(four) + (ej * (lj + li)).scale(two) + ei
        rhs = (ej * li * lj).scale(four) + ((li + lj) * ei).scale(two) + ej
        return lhs, rhs
    if pid == "quot-L-sandwich":
        i, j = params
        ei, ej = E(i, n, dom), E(j, n, dom)
        li, lj = L(i, n, dom), L(j, n, dom)
        lhs = ((li * lj * li).scale(dom.of_int(8))
               + (li * ej * lj * li + ei * li * lj * li
                  + li * lj * ei * li).scale(dom.of_int(4) * u1)
               + (ei * ej * li * lj * li).scale(
                   u1 * u1 * (dom.u + dom.of_int(5))))
        rhs = (li.scale(dom.of_int(2)) + (ei * li).scale(dom.of_int(3) * u1)
               + (ei * ej * li).scale(u1 * u1))
        return lhs, rhs
    raise ValueError("unknown presentation identity %r" % pid)


def verify_presentations(n, ib, dom=SYMBOLIC, ib_untied=None):
    """Check every presentation identity in the algebra itself, modulo the
    defining (tied) ideal, and optionally modulo the bare-Steinberg ideal.

    The sandwich identities are scalar multiples of the bare Steinberg
    element, so they fail in the algebra and hold exactly modulo the
    untied ideal; everything else holds outright.  ``ok`` records the
    expected pattern; ``holds_mod_ideal`` is the raw computation against
    the quotient's own ideal."""
    checks = []
    for pid, params in presentation_instances(n):
        lhs, rhs = presentation_sides(pid, params, n, dom)
        diff = lhs - rhs
        in_algebra = diff.is_zero()
        mod_ideal = in_algebra or ib.contains(diff)
        expected_in_algebra = not pid.endswith("sandwich")
        entry = {
            "id": pid,
            "instance": list(params),
            "holds_in_algebra": in_algebra,
            "holds_mod_ideal": mod_ideal,
            "ok": in_algebra == expected_in_algebra,
        }
        if ib_untied is not None:
            entry["holds_mod_steinberg_ideal"] = (
                in_algebra or ib_untied.contains(diff))
            entry["ok"] = entry["ok"] and entry["holds_mod_steinberg_ideal"]
        checks.append(entry)
    return checks


# ---------------------------------------------------------------------------
# reduced words in the F generators (Jones normal form)
# ---------------------------------------------------------------------------

class FReducedWord:
    """A product of descending runs F_i F_{i-1} ... F_j, encoded by the run
    endpoints ((i_1, j_1), ..., (i_k, j_k)) with i's and j's strictly
    increasing and j_l <= i_l.  There are Catalan(n) such words."""

    __slots__ = ("runs",)

    def __init__(self, runs):
        self.runs = tuple(runs)
        last_i, last_j = 0, 0
        for i, j in self.runs:
            if not (i > last_i and j > last_j and j <= i):
                raise ValueError("runs violate the normal form: %r" % (runs,))
            last_i, last_j = i, j

    def letters(self):
        out = []
        for i, j in self.runs:
            out.extend(range(i, j - 1, -1))
        return tuple(out)

    def element(self, n, dom=SYMBOLIC):
        out = one(n, dom)
        for i in self.letters():
            out = out * F(i, n, dom)
        return out

    def __eq__(self, other):
        return isinstance(other, FReducedWord) and self.runs == other.runs

    def __hash__(self):
        return hash(self.runs)

    def __str__(self):
        if not self.runs:
            return "1"
        return "".join("(%s)" % ".".join("F%d" % k for k in range(i, j - 1, -1))
                       for i, j in self.runs)

    def __repr__(self):
        return "FReducedWord(%r)" % (self.runs,)


def enumerate_F_reduced(n):
    """All F-reduced words for n strands, in run-lexicographic order;
    count = Catalan(n)."""
    out = []

    def rec(runs, last_i, last_j):
        out.append(FReducedWord(runs))
        for i in range(last_i + 1, n):
            for j in range(last_j + 1, i + 1):
                rec(runs + ((i, j),), i, j)

    rec((), 0, 0)
    return out


# ---------------------------------------------------------------------------
# spanning evidence for the conjectured quotient basis
# ---------------------------------------------------------------------------

def spanning_check(n, ib, dom=SYMBOLIC):
    """Rank, modulo the ideal, of the candidate basis {E_I F}: partitions
    times F-reduced words.  Spanning makes rank == quotient dim a hard
    requirement; rank == Bell(n)*Catalan(n) is conjecture evidence."""
    index = ib.index if ib is not None else BasisIndex(n, dom)
    words = enumerate_F_reduced(n)
    parts = enumerate_partitions(n)
    candidates = 0
    nonzero = 0
    if isinstance(dom, PrimeDomain):
        import numpy as np
        from .permutations import Permutation
        ech = ModPEchelon(width=len(index), p=dom.p)
        ops = _prime_ops(index, dom)
        p = dom.p
        inv_up1 = pow((dom.u + dom.one).v, p - 2, p)
        e = Permutation.identity(n)
        for I in parts:
            base = np.zeros(len(index), dtype=np.int64)
            base[index.index[(I, e)]] = 1
            for w in words:
                row = base
                for i in w.letters():
                    row = ((row + ops.apply(("R", "T", i), row))
                           * inv_up1) % p
                if ib is not None:
                    row = ib.ech.reduce(row)
                candidates += 1
                if np.any(row):
                    nonzero += 1
                ech.insert(row)
    else:
        ech = Echelon(width=len(index))
        f_elems = {w: w.element(n, dom) for w in words}
        for I in parts:
            eI = algebra.E_of_partition(I, dom)
            for w in words:
                elem = eI * f_elems[w]
                if ib is not None:
                    elem = ib.reduce(elem)
                candidates += 1
                if not elem.is_zero():
                    nonzero += 1
                ech.insert(index.vector(elem))
    return {
        "n": n,
        "candidates": candidates,
        "nonzero_candidates": nonzero,
        "spanning_rank": ech.rank,
        "quotient_dim": ib.quotient_dim if ib is not None else len(index),
        "conjectured_dim": len(parts) * len(words),
    }

"""Markov-style trace functionals on the tower of braids-and-ties algebras.

The level-n functional rho_n is the solution of an exact linear system over
the basis {E_I T_w}: normalization rho(1) = 1, full trace symmetry
rho(ab) = rho(ba) for all basis pairs, and the tower rules relating level n
to level n-1 through the last generators,

    rho_n(x T_{n-1})         = A rho_{n-1}(x)
    rho_n(x E_{n-1} T_{n-1}) = A rho_{n-1}(x)
    rho_n(x E_{n-1})         = B rho_{n-1}(x)

with parameters A, B.  Existence (consistency) and uniqueness (full rank)
are computed, not assumed; the solver also reports how many instances of the
middle rule family are implied by the remaining constraints.
"""

from . import scalars
from .algebra import AlgebraElement, BasisIndex, E, T, one
from .domains import SYMBOLIC, IntMod, PrimeDomain
from .linalg import LinearSystem, ModPLinearSystem
from .partitions import SetPartition, intern_partition
from .permutations import Permutation, intern_perm


class ParamPoly:
    """Polynomial in the trace parameters with coefficients in a specialized
    domain (used for right-hand sides when u is specialized; the symbolic
    path keeps A, B inside Scalar itself)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = coeffs  # {(degA, degB): domain element}, no zeros

    @staticmethod
    def zero():
        return ParamPoly({})

    @staticmethod
    def constant(c):
        return ParamPoly({(0, 0): c} if c else {})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            c0 = out.get(k)
            c0 = c if c0 is None else c0 + c
            if c0:
                out[k] = c0
            else:
                out.pop(k, None)
        return ParamPoly(out)

    def __sub__(self, other):
        return self + ParamPoly({k: -c for k, c in other.coeffs.items()})

    def __mul__(self, c):
        if not c:
            return ParamPoly({})
        return ParamPoly({k: v * c for k, v in self.coeffs.items()})

    def times_A(self):
        return ParamPoly({(a + 1, b): c for (a, b), c in self.coeffs.items()})

    def times_B(self):
        return ParamPoly({(a, b + 1): c for (a, b), c in self.coeffs.items()})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, ParamPoly) and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b) in sorted(self.coeffs):
            c = self.coeffs[(a, b)]
            mono = "".join((["A" if a == 1 else "A^%d" % a] if a else [])
                           + (["B" if b == 1 else "B^%d" % b] if b else []))
            parts.append(("(%s)" % c) + ("*" + mono if mono else ""))
        return " + ".join(parts)


def embed_pair(I, w, n):
    """Embedding of a level-(n-1) basis pair: the partition gains the
    singleton {n}, the permutation fixes n."""
    return (intern_partition(I.rgs + (max(I.rgs) + 1,)),
            intern_perm(w.images + (n,)))


def embed_element(elem, n, dom):
    terms = {}
    for (I, w), c in elem.terms.items():
        terms[embed_pair(I, w, n)] = c
    return AlgebraElement(n, terms, dom)


class TraceFunctional:
    """Solved level-n trace: a value table over the basis plus the solver's
    existence/uniqueness verdicts."""

    def __init__(self, n, dom, table, exists, unique, rank,
                 inconsistent_rows, implied_middle_rules, middle_rules):
        self.n = n
        self.dom = dom
        self.table = table
        self.exists = exists
        self.unique = unique
        self.rank = rank
        self.inconsistent_rows = inconsistent_rows
        self.implied_middle_rules = implied_middle_rules
        self.middle_rules = middle_rules

    def value(self, I, w):
        return self.table[(I, w)]

    def evaluate(self, elem):
        """Linear extension of the table to an arbitrary element."""
        if not self.exists:
            raise ValueError("trace functional does not exist at this level")
        total = None
        for key, c in elem.terms.items():
            term = self.table[key] * c
            total = term if total is None else total + term
        if total is None:
            total = (scalars.ZERO if self.dom is SYMBOLIC
                     else ParamPoly.zero())
        return total

    def table_json(self):
        """Basis -> polynomial-string map, deterministic order."""
        out = {}
        for (I, w) in sorted(self.table, key=lambda k: (k[0].rgs, k[1].images)):
            key = "%s %s" % (",".join(map(str, I.rgs)),
                             ",".join(map(str, w.images)))
            out[key] = str(self.table[(I, w)])
        return out


_CACHE = {}


def _dom_key(dom):
    if dom is SYMBOLIC:
        return "symbolic"
    return (dom.name, str(getattr(dom, "point", "")), getattr(dom, "p", 0))


def solve_trace(n, dom=SYMBOLIC):
    """Solve the level-n system exactly (levels solved recursively).  The
    symbolic path keeps generic u and symbolic A, B; with a PrimeDomain the
    matrix lives in GF(p) and right-hand sides are ParamPoly."""
    key = (n, _dom_key(dom))
    if key in _CACHE:
        return _CACHE[key]
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        pair = (SetPartition.unit(1), Permutation.identity(1))
        value = scalars.ONE if dom is SYMBOLIC else ParamPoly.constant(dom.one)
        tf = TraceFunctional(1, dom, {pair: value}, True, True, 1, 0, 0, 0)
        _CACHE[key] = tf
        return tf

    prev = solve_trace(n - 1, dom)
    index = BasisIndex(n, dom)
    width = len(index)
    symbolic = dom is SYMBOLIC
    zero_rhs = scalars.ZERO if symbolic else ParamPoly.zero()

    def rhs_times_A(v):
        return v * scalars.A if symbolic else v.times_A()

    def rhs_times_B(v):
        return v * scalars.B if symbolic else v.times_B()

    rows = []
    one_pair = (SetPartition.unit(n), Permutation.identity(n))
    vec = [dom.zero] * width
    vec[index.index[one_pair]] = dom.one
    one_rhs = scalars.ONE if symbolic else ParamPoly.constant(dom.one)
    rows.append(("normalization", vec, one_rhs))

    t_last = T(n - 1, n, dom)
    e_last = E(n - 1, n, dom)
    et_last = e_last * t_last
    middle = []
    for (I, w), pv in prev.table.items():
        x = AlgebraElement(n, {embed_pair(I, w, n): dom.one}, dom)
        rows.append(("rule-T", index.vector(x * t_last), rhs_times_A(pv)))
        middle.append(("rule-ET", index.vector(x * et_last), rhs_times_A(pv)))
        rows.append(("rule-E", index.vector(x * e_last), rhs_times_B(pv)))
    rows.extend(middle)

    elems = [index.basis_elem(k) for k in range(width)]
    for k1 in range(width):
        a = elems[k1]
        for k2 in range(k1 + 1, width):
            b = elems[k2]
            ab = a * b
            ba = b * a
            if ab == ba:
                continue
            rows.append(("symmetry", index.vector(ab - ba), zero_rhs))

    if symbolic:
        def make_system():
            return LinearSystem(width)

        def to_row(vec):
            return vec
    else:
        def make_system():
            return ModPLinearSystem(
                width, dom.p,
                rhs_scale=lambda rhs, c: rhs * IntMod(c, dom.p))

        def to_row(vec):
            return [c.v for c in vec]

    system = make_system()
    for _, vec, rhs in rows:
        system.add(to_row(vec), rhs)

    # middle-rule redundancy: how many rule-ET rows are implied by everything
    # else (rank analysis for the tower-rule overlap)
    other = make_system()
    for kind, vec, rhs in rows:
        if kind != "rule-ET":
            other.add(to_row(vec), rhs)
    implied = sum(1 for kind, vec, rhs in rows
                  if kind == "rule-ET" and other.is_implied(to_row(vec), rhs))

    exists = not system.inconsistent
    unique = exists and system.rank == width
    table = {}
    if exists:
        sol = system.solution(zero_rhs)
        for k, pair in enumerate(index.pairs):
            table[pair] = sol[k]
    tf = TraceFunctional(n, dom, table, exists, unique, system.rank,
                         len(system.inconsistent), implied, len(middle))
    _CACHE[key] = tf
    return tf


def evaluate_trace(tf, elem):
    return tf.evaluate(elem)


def is_scalar_multiple(p, g):
    """Whether p = c * g for a coefficient c; returns (ok, c)."""
    if p.is_zero():
        return True, p.dom.zero
    ratio = None
    for key, cg in g.terms.items():
        cp = p.terms.get(key)
        if cp is None:
            continue
        ratio = cp / cg
        break
    if ratio is None:
        return False, None
    return (p == g.scale(ratio)), ratio


def factorization_condition(tf3=None):
    """The obstruction for the level-3 trace to vanish on the quotient
    ideal: rho_3(E_1 E_2 T_{12}) as a polynomial in A, B, its two vanishing
    lines A = -B and A = -B/(1+u), and the scalar-multiple property
    z * g in K g for every basis element z."""
    from .quotient import ideal_generator_element
    if tf3 is None:
        tf3 = solve_trace(3)
    if not tf3.exists:
        raise ValueError("level-3 trace does not exist")
    g = ideal_generator_element(3)
    value = tf3.evaluate(g)
    A, B, U, ONE = scalars.A, scalars.B, scalars.U, scalars.ONE
    expected = (U + ONE) * A * A + (U + scalars.TWO) * A * B + B * B
    at_minus_B = value.subs(A=-B)
    at_minus_B_over = value.subs(A=-B / (ONE + U))
    at_equal = value.subs(A=B)
    index = BasisIndex(3)
    multiples = []
    all_multiples = True
    for k in range(len(index)):
        z = index.basis_elem(k)
        ok, ratio = is_scalar_multiple(z * g, g)
        all_multiples = all_multiples and ok
        multiples.append(str(ratio) if ok else None)
    return {
        "value": str(value),
        "matches_expected": value == expected,
        "vanishes_at_A_eq_minus_B": not at_minus_B,
        "vanishes_at_A_eq_minus_B_over_1_plus_u": not at_minus_B_over,
        "nonzero_at_A_eq_B": bool(at_equal),
        "value_at_A_eq_B": str(at_equal),
        "scalar_multiple_step": all_multiples,
        "scalar_multiple_ratios": multiples,
    }

"""Integral lattices: evenness, rescaling, direct sums, discriminant groups,
discriminant quadratic forms, and the Gauss-sum consistency identity.

A lattice here is a free Z-module carrying a symmetric integer Gram matrix.
When the form is nondegenerate the lattice sits inside its dual with finite
quotient; that quotient, together with the induced Q/2Z-valued quadratic
form on it, is the invariant the classification machinery matches.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm, prod

from .cyclotomic import Cyclotomic
from .errors import Degenerate, NotElementary, NotEven, NotSymmetric, ZeroScale
from .linalg import Matrix, determinant, pair_value, signature, smith_normal_form


@dataclass(frozen=True, repr=False)
class Lattice:
    """A lattice given by its Gram matrix; ``name`` is display metadata."""

    gram: Matrix
    name: str | None = None

    def __post_init__(self):
        gram = self.gram
        if not isinstance(gram, Matrix):
            gram = Matrix(gram)
        if not gram.is_square:
            raise ValueError("Gram matrix must be square")
        if not gram.is_integral:
            raise ValueError("Gram matrix must have integer entries")
        if not gram.is_symmetric:
            raise NotSymmetric("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram.to_int())

    @property
    def rank(self) -> int:
        return self.gram.nrows

    def __repr__(self):
        label = self.name if self.name else f"rank {self.rank}"
        return f"Lattice({label})"


def det(lat: Lattice) -> int:
    return int(determinant(lat.gram))


def is_even(lat: Lattice) -> bool:
    """True iff every vector has even square (even diagonal suffices)."""
    return all(lat.gram[i, i] % 2 == 0 for i in range(lat.rank))


def rescale(lat: Lattice, m: int) -> Lattice:
    """Multiply the bilinear form by m; decorates the name with ``(m)``."""
    if m == 0:
        raise ZeroScale("scale factor must be nonzero")
    if m == 1:
        return lat
    name = f"{lat.name}({m})" if lat.name else None
    return Lattice(lat.gram.scaled(m), name)


def direct_sum(l1: Lattice, l2: Lattice) -> Lattice:
    """Orthogonal direct sum: block-diagonal Gram matrix."""
    if l1.rank == 0:
        return l2
    if l2.rank == 0:
        return l1
    n1, n2 = l1.rank, l2.rank
    rows = [list(l1.gram.row(i)) + [0] * n2 for i in range(n1)]
    rows += [[0] * n1 + list(l2.gram.row(i)) for i in range(n2)]
    name = f"{l1.name}+{l2.name}" if l1.name and l2.name else None
    return Lattice(Matrix(rows), name)


@dataclass(frozen=True, repr=False)
class DiscriminantGroup:
    """The finite quotient (dual lattice)/(lattice).

    ``generators`` are rational coset representatives in lattice-basis
    coordinates, one per invariant factor, with entries reduced into [0, 1).
    """

    rank: int
    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    order: int
    _coords: Matrix = field(compare=False)
    _positions: tuple[int, ...] = field(compare=False)

    @property
    def s(self) -> int:
        """Minimal number of generators."""
        return len(self.invariant_factors)

    def elements(self):
        """Coefficient tuples (one residue per invariant factor)."""
        return product(*(range(d) for d in self.invariant_factors))

    def representative(self, coeffs) -> tuple[Fraction, ...]:
        """A coset representative of sum(c_i * g_i), coordinates in [0, 1)."""
        vec = [Fraction(0)] * self.rank
        for c, gen in zip(coeffs, self.generators):
            for i, x in enumerate(gen):
                vec[i] += c * x
        return tuple(x % 1 for x in vec)

    def coordinates_of(self, vec) -> tuple[int, ...]:
        """Class of a dual vector in invariant-factor coordinates."""
        w = [Fraction(x) for x in self._coords.mul_vec(vec)]
        if any(x.denominator != 1 for x in w):
            raise ValueError("vector is not in the dual lattice")
        return tuple(
            int(w[pos]) % d for pos, d in zip(self._positions, self.invariant_factors)
        )

    def __repr__(self):
        return f"DiscriminantGroup(factors={list(self.invariant_factors)})"


@lru_cache(maxsize=None)
def discriminant_group(lat: Lattice) -> DiscriminantGroup:
    """Invariant factors and generators of (dual)/(lattice).

    From U @ G @ V = D the quotient Z^n / G Z^n is the direct sum of Z/d_i,
    and the dual-coset generator for factor d_i is (column i of V) / d_i.
    """
    g = lat.gram
    n = lat.rank
    if n and determinant(g) == 0:
        raise Degenerate("lattice is degenerate")
    u, d, v = smith_normal_form(g)
    diag = tuple(int(d[i, i]) for i in range(n))
    positions = tuple(i for i in range(n) if diag[i] > 1)
    gens = tuple(
        tuple(Fraction(x, diag[i]) % 1 for x in v.column(i)) for i in positions
    )
    return DiscriminantGroup(
        rank=n,
        invariant_factors=tuple(diag[i] for i in positions),
        generators=gens,
        order=prod(diag) if n else 1,
        _coords=u @ g,
        _positions=positions,
    )


def is_p_elementary(lat: Lattice, p: int) -> bool:
    """True iff every invariant factor of the discriminant group equals p."""
    return all(d == p for d in discriminant_group(lat).invariant_factors)


@dataclass(frozen=True, repr=False, eq=False)
class FiniteQuadraticForm:
    """Q/2Z-valued quadratic form on a discriminant group.

    ``q_values`` maps every coefficient tuple to its value as a Fraction in
    [0, 2); ``bilinear_values`` holds the associated pairing on generator
    pairs with values in [0, 1).  ``lattice_signature`` is the eigenvalue
    sign count of the source lattice, carried along for the Gauss-sum check.
    """

    group: DiscriminantGroup
    q_values: dict
    bilinear_values: Matrix
    lattice_signature: tuple[int, int, int]

    def __repr__(self):
        return f"FiniteQuadraticForm(factors={list(self.group.invariant_factors)})"


@lru_cache(maxsize=None)
def discriminant_form(lat: Lattice) -> FiniteQuadraticForm:
    """Evaluate the discriminant quadratic form on every group element.

    q(x) = x^T G x mod 2Z on any coset representative; well defined because
    the lattice is even.  Values on general elements are expanded from the
    generator values and pairings with rescaled integer arithmetic, so the
    full table costs O(|A| * s) small-int operations.
    """
    if not is_even(lat):
        raise NotEven("the discriminant form needs an even lattice")
    group = discriminant_group(lat)
    gens = group.generators
    g = lat.gram
    s = group.s
    q_gen = [Fraction(pair_value(g, w, w)) % 2 for w in gens]
    b_gen = [[Fraction(pair_value(g, w1, w2)) % 1 for w2 in gens] for w1 in gens]

    den = 1
    for x in q_gen:
        den = lcm(den, x.denominator)
    for row in b_gen:
        for x in row:
            den = lcm(den, x.denominator)
    q_scaled = [int(x * den) for x in q_gen]
    b_scaled = [[int(x * den) for x in row] for row in b_gen]
    mod = 2 * den
    dims = group.invariant_factors

    values: dict = {}
    prefix = [0] * s

    def walk(i, acc, lin):
        if i == s:
            values[tuple(prefix)] = Fraction(acc, den)
            return
        qi = q_scaled[i]
        bi = b_scaled[i]
        for c in range(dims[i]):
            prefix[i] = c
            if c == 0:
                walk(i + 1, acc, lin)
            else:
                acc_c = (acc + c * c * qi + 2 * c * lin[i]) % mod
                lin_c = [(lin[k] + c * bi[k]) % den for k in range(s)]
                walk(i + 1, acc_c, lin_c)
        prefix[i] = 0

    walk(0, 0, [0] * s)
    return FiniteQuadraticForm(
        group=group,
        q_values=values,
        bilinear_values=Matrix(b_gen),
        lattice_signature=signature(g),
    )


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _square_and_squarefree(n: int) -> tuple[int, int]:
    """n = a*a*b with b squarefree; returns (a, b)."""
    a, b = 1, 1
    for p in _prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        a *= p ** (e // 2)
        b *= p ** (e % 2)
    return a, b


def _sqrt_as_cyclotomic(b: int, m: int) -> Cyclotomic:
    """sqrt(b) for squarefree b >= 1, written exactly in Z[zeta_m].

    sqrt(2) = zeta_8 + zeta_8^-1; for odd p the quadratic Gauss sum
    sum_t zeta_p^(t*t) equals sqrt(p) or i*sqrt(p) according to p mod 4.
    """
    out = Cyclotomic.integer(m, 1)
    if b % 2 == 0:
        out = out * (Cyclotomic.root(m, m // 8) + Cyclotomic.root(m, -(m // 8)))
        b //= 2
    for p in _prime_factors(b):
        gauss = Cyclotomic.integer(m, 0)
        for t in range(p):
            gauss = gauss + Cyclotomic.root(m, (t * t % p) * (m // p))
        if p % 4 == 3:
            gauss = gauss * Cyclotomic.root(m, -(m // 4))
        out = out * gauss
    return out


def milgram_holds(form: FiniteQuadraticForm) -> bool:
    """Gauss-sum consistency of the form with its lattice signature.

    The sum of exp(pi*i*q(x)) over the group must equal
    sqrt(|A|) * exp(2*pi*i*sigma/8).  Both sides are evaluated in Z[zeta_m]
    for an m large enough to contain every term (m = 24 for 3-elementary
    forms), so the comparison is exact.
    """
    counts = Counter(form.q_values.values())
    order = form.group.order
    plus, _, minus = form.lattice_signature
    sigma = plus - minus
    m = 8
    for val in counts:
        m = lcm(m, 2 * val.denominator)
    square, squarefree = _square_and_squarefree(order)
    for p in _prime_factors(squarefree):
        m = lcm(m, 8 if p == 2 else 4 * p)
    lhs = Cyclotomic.integer(m, 0)
    for val, count in sorted(counts.items()):
        lhs = lhs + count * Cyclotomic.root(m, val.numerator * (m // (2 * val.denominator)))
    rhs = square * _sqrt_as_cyclotomic(squarefree, m)
    rhs = rhs * Cyclotomic.root(m, (sigma % 8) * (m // 8))
    return lhs == rhs


def forms_match_opposite(
    form_s: FiniteQuadraticForm, form_t: FiniteQuadraticForm
) -> bool:
    """Do two 3-elementary forms glue, i.e. is one the other's negative?

    Checks equal invariant factors and equality of the value multisets
    {q_s(x)} and {-q_t(y) mod 2}; for 3-elementary forms the rank and value
    distribution pin down the isomorphism class.  Both sides must also pass
    the Gauss-sum identity, which ties the forms to their signatures.
    """
    for form in (form_s, form_t):
        if any(d != 3 for d in form.group.invariant_factors):
            raise NotElementary("both forms must live on 3-elementary groups")
    if form_s.group.invariant_factors != form_t.group.invariant_factors:
        return False
    negated = Counter((-v) % 2 for v in form_t.q_values.values())
    if Counter(form_s.q_values.values()) != negated:
        return False
    return milgram_holds(form_s) and milgram_holds(form_t)


def lattice_from_dict(data) -> Lattice:
    """Build a lattice from the JSON literal {"name": ..., "gram": [[...]]}."""
    if not isinstance(data, dict) or "gram" not in data:
        raise ValueError('expected an object with a "gram" field')
    gram = data["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise ValueError('"gram" must be a list of rows')
    for row in gram:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError('"gram" entries must be integers')
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ValueError('"name" must be a string')
    return Lattice(Matrix(gram), name)

"""Graded quotient rings A = F_p[x1..xm]/I and finite-colength bookkeeping.

I is generated by homogeneous polynomials of positive degree, so A is
graded and its colength questions for homogeneous data agree with the
local ones at the irrelevant maximal ideal.  Ring elements are stored as
normal forms against the reduced Groebner basis of I, which makes
equality a dict comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import (
    INFINITE,
    AlgebraError,
    ContractError,
    PolyContext,
    Polynomial,
    VectorPolynomial,
)
from .groebner import Budget, buchberger, monomial_ideal_dimension


class GradedRing:
    """F_p[x1..xm]/I with I homogeneous; carries the reduced basis of I."""

    __slots__ = ("ctx", "ideal_gens", "ideal_basis", "dimension")

    def __init__(self, ctx, ideal_gens, ideal_basis, dimension):
        self.ctx = ctx
        self.ideal_gens = ideal_gens
        self.ideal_basis = ideal_basis  # GroebnerBasis of rank 1, or None for I = 0
        self.dimension = dimension

    @property
    def p(self):
        return self.ctx.p

    @property
    def names(self):
        return self.ctx.names

    def reduce(self, poly):
        """Normal form of a raw polynomial against the ideal basis."""
        if self.ideal_basis is None:
            return poly
        return self.ideal_basis.normal_form_poly(poly)

    def element(self, poly):
        return RingElement(self, self.reduce(poly))

    def zero(self):
        return RingElement(self, self.ctx.zero())

    def one(self):
        return RingElement(self, self.reduce(self.ctx.one()))

    def constant(self, c):
        return self.element(self.ctx.constant(c))

    def variable(self, i):
        return self.element(self.ctx.variable(i))

    def lifted_ideal_columns(self, rank):
        """The vectors g*e_j for ideal generators g, used to work over A
        by lifting module questions to the free polynomial ring."""
        cols = []
        zero = self.ctx.zero()
        for g in self.ideal_gens:
            for j in range(rank):
                comps = [zero] * rank
                comps[j] = g
                cols.append(VectorPolynomial(tuple(comps)))
        return cols

    def __eq__(self, other):
        return (
            isinstance(other, GradedRing)
            and self.ctx == other.ctx
            and self.ideal_gens == other.ideal_gens
        )

    def __hash__(self):
        return hash((self.ctx, self.ideal_gens))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.ideal_gens)
        return "GradedRing(p=%d, vars=%s, ideal=[%s])" % (self.p, list(self.names), gens)


class RingElement:
    """Element of a GradedRing, stored as the normal form of a representative."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring, rep):
        # rep must already be reduced; use ring.element for raw polynomials
        self.ring = ring
        self.rep = rep

    def is_zero(self):
        return self.rep.is_zero()

    def degree(self):
        return self.rep.degree()

    def is_homogeneous(self):
        return self.rep.is_homogeneous()

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __add__(self, other):
        assert self.ring == other.ring
        # normal forms are spanned by standard monomials, so sums stay reduced
        return RingElement(self.ring, self.rep + other.rep)

    def __neg__(self):
        return RingElement(self.ring, -self.rep)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, self.rep.scale(other))
        assert self.ring == other.ring
        return RingElement(self.ring, self.ring.reduce(self.rep * other.rep))

    __rmul__ = __mul__

    def scale(self, c):
        return RingElement(self.ring, self.rep.scale(c))

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return "RingElement(%s)" % self.rep


def make_ring(p, variables, ideal_gens=(), budget=None):
    """Build F_p[variables]/(ideal_gens) and check it has positive dimension.

    ideal_gens: Polynomials over PolyContext(p, variables), each nonzero,
    homogeneous and of positive degree.  Rejects non-prime p, duplicate or
    malformed names, inhomogeneous generators and dimension zero.
    """
    ctx = PolyContext(p, variables)
    gens = []
    for i, g in enumerate(ideal_gens):
        if not isinstance(g, Polynomial) or g.ctx != ctx:
            raise ContractError("ideal generator %d is not over F_%d[%s]" % (i, p, ", ".join(ctx.names)))
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ContractError("ideal generator %d (%s) is not homogeneous" % (i, g))
        if g.degree() == 0:
            raise ContractError("ideal generator %d is a unit" % i)
        gens.append(g)
    gens = tuple(gens)
    if gens:
        basis = buchberger([VectorPolynomial((g,)) for g in gens], budget)
        lead_exps = [t[1:] for t in basis.lead_terms]
    else:
        basis = None
        lead_exps = []
    d = monomial_ideal_dimension(lead_exps, ctx.nvars)
    if d <= 0:
        raise ContractError("quotient ring has dimension %d; positive dimension required" % d)
    return GradedRing(ctx, gens, basis, d)


class SubmoduleOfFree:
    """Submodule N of A^rank given by a finite list of generating vectors.

    Generators are tuples of RingElement; every nonzero entry must be
    homogeneous (degree zero entries are allowed here, parameter-module
    checks reject them separately).
    """

    __slots__ = ("ring", "rank", "generators")

    def __init__(self, ring, rank, generators):
        assert rank >= 1
        gens = []
        for gi, vec in enumerate(generators):
            vec = tuple(vec)
            if len(vec) != rank:
                raise ContractError("generator %d has %d entries, expected %d" % (gi, len(vec), rank))
            for ei, ent in enumerate(vec):
                assert isinstance(ent, RingElement) and ent.ring == ring
                if not ent.is_homogeneous():
                    raise ContractError("generator %d entry %d (%s) is not homogeneous" % (gi, ei, ent))
            gens.append(vec)
        self.ring = ring
        self.rank = rank
        self.generators = tuple(gens)

    @property
    def ngens(self):
        return len(self.generators)

    def lifted_generators(self):
        return [VectorPolynomial(tuple(e.rep for e in vec)) for vec in self.generators]


def _quotient_colength(ring, lifted_vectors, rank, budget=None):
    cols = list(lifted_vectors) + ring.lifted_ideal_columns(rank)
    cols = [v for v in cols if not v.is_zero()]
    if not cols:
        return INFINITE
    return buchberger(cols, budget).colength()


def ideal_colength(ring, gens, budget=None):
    """Length of A/(gens), INFINITE when the ideal is not primary to the
    irrelevant maximal ideal."""
    lifted = [VectorPolynomial((g.rep,)) for g in gens]
    return _quotient_colength(ring, lifted, 1, budget)


def submodule_colength(ring, sub, budget=None):
    """Length of A^rank / N for a SubmoduleOfFree N, or INFINITE."""
    return _quotient_colength(ring, sub.lifted_generators(), sub.rank, budget)


def min_generators(ring, sub, budget=None):
    """Minimal number of generators of N, via the two colengths of N and
    of (x1..xm)N inside A^rank.  Requires N of finite colength."""
    ln = submodule_colength(ring, sub, budget)
    if ln is INFINITE:
        raise AlgebraError("minimal generator count needs finite colength")
    scaled = []
    for vec in sub.lifted_generators():
        for i in range(ring.ctx.nvars):
            xi = ring.ctx.variable(i)
            scaled.append(vec.scale(xi))
    lmn = _quotient_colength(ring, scaled, sub.rank, budget)
    assert lmn is not INFINITE
    return lmn - ln


@dataclass(frozen=True)
class ParameterVerdict:
    """Outcome of the parameter-module test for N inside A^rank."""

    finite_colength: bool
    inside_max_ideal: bool
    generators_match: bool  # minimal generators == dim A + rank - 1
    colength: object        # int or INFINITE
    mu: object              # int or None when not computable

    @property
    def ok(self):
        return self.finite_colength and self.inside_max_ideal and self.generators_match


def is_parameter_module(ring, sub, budget=None):
    """Check the three defining conditions for a parameter module:
    finite colength, containment in (x1..xm)A^rank, and exactly
    dim A + rank - 1 minimal generators."""
    inside = all(
        ent.is_zero() or ent.degree() >= 1
        for vec in sub.generators
        for ent in vec
    )
    ln = submodule_colength(ring, sub, budget)
    if ln is INFINITE:
        return ParameterVerdict(False, inside, False, INFINITE, None)
    mu = min_generators(ring, sub, budget)
    target = ring.dimension + sub.rank - 1
    return ParameterVerdict(True, inside, mu == target, ln, mu)

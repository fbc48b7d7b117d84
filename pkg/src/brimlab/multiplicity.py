"""Buchsbaum-Rim multiplicity of a parameter module and theorem reports.

For N inside F = A^r presented by an r x n matrix, the length function

    lambda(k) = length of S_k(F) / R_k(N)

(R_k = image of the k-fold products of the columns inside the k-th
symmetric power) eventually agrees with a polynomial of degree
D = dim A + r - 1 written in the binomial basis

    P(k) = sum_(i=0..D) (-1)^i e_i binom(k + D - 1 - i, D - i),

and e_0 is the multiplicity.  e_0 is read off as the stabilized D-th
finite difference of lambda; the full coefficient vector comes from an
exact solve on a stable window, cross-checked by re-evaluating P against
every stable value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .poly import INFINITE, AlgebraError, BudgetExceededError, VectorPolynomial
from .groebner import buchberger
from .rings import SubmoduleOfFree, ideal_colength, is_parameter_module, submodule_colength
from .koszul import build_koszul, fitting_ideal, sym_basis, verify_complex
from .homology import all_homology, annihilation_check, euler_characteristics

MAX_POWER_GENERATORS = 50_000


class StabilizationError(AlgebraError):
    """lambda never settled into a degree-D polynomial within n_max."""

    def __init__(self, message, differences):
        super().__init__(message)
        self.differences = differences


class SamplingError(AlgebraError):
    """Random search could not produce enough parameter modules."""


@dataclass(frozen=True)
class SymPowerBasis:
    """Monomial basis of S_k(A^r): multidegrees of total k, first row
    heaviest first, with positions memoized for matrix assembly."""

    r: int
    k: int
    labels: tuple
    index: dict

    @classmethod
    def build(cls, r, k):
        labels = tuple(s.multidegree for s in sym_basis(r, k))
        return cls(r, k, labels, {m: i for i, m in enumerate(labels)})


def rees_power_generators(matrix, k, cap=MAX_POWER_GENERATORS):
    """Generators of R_k(N) in the S_k basis: one vector per multiset of k
    columns, expanded by iterated symmetric multiplication."""
    assert k >= 1
    r, n = matrix.r, matrix.n
    ring = matrix.ring
    count = comb(k + n - 1, k)
    if count > cap:
        raise BudgetExceededError(
            "expansion",
            "symmetric power needs %d generators, cap is %d" % (count, cap),
        )
    basis = SymPowerBasis.build(r, k)
    cols = matrix.columns()
    out = []
    for choice in combinations_with_replacement(range(n), k):
        # product of the chosen columns inside Sym(F)
        acc = {(0,) * r: ring.one()}
        for j in choice:
            nxt = {}
            for mono, c in acc.items():
                for i in range(r):
                    ent = cols[j][i]
                    if ent.is_zero():
                        continue
                    m2 = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                    cur = nxt.get(m2)
                    nxt[m2] = ent * c if cur is None else cur + ent * c
            acc = nxt
        vec = [ring.zero()] * len(basis.labels)
        for mono, c in acc.items():
            vec[basis.index[mono]] = c
        out.append(tuple(vec))
    return basis, out


def lambda_value(matrix, k, budget=None, cap=MAX_POWER_GENERATORS):
    """length of S_k(F)/R_k(N); k = 0 gives 0.  INFINITE when not finite."""
    assert k >= 0
    if k == 0:
        return 0
    ring = matrix.ring
    basis, gens = rees_power_generators(matrix, k, cap)
    lifted = [VectorPolynomial(tuple(e.rep for e in g)) for g in gens]
    cols = [v for v in lifted if not v.is_zero()]
    cols += ring.lifted_ideal_columns(len(basis.labels))
    if not cols:
        return INFINITE
    return buchberger(cols, budget).colength()


@dataclass(frozen=True)
class BRFunctionTable:
    """Computed lambda values and the finite-difference analysis.

    values[i] = lambda(i+1); stable_from is the first argument where the
    D-th difference is constant over a window of three and the full
    binomial refit reproduces every later value.
    """

    degree: int      # D = dim A + r - 1
    values: tuple
    stable_from: int
    e0: int
    coefficients: tuple

    def polynomial_value(self, k):
        D = self.degree
        acc = 0
        for i, e in enumerate(self.coefficients):
            acc += (-1) ** i * e * comb(k + D - 1 - i, D - i)
        return acc


def _differences(values):
    return tuple(b - a for a, b in zip(values, values[1:]))


def _solve_coefficients(D, n0, window):
    """Exact solve of P(n0+j) = window[j], j = 0..D, in the binomial basis."""
    rows = []
    for j in range(D + 1):
        k = n0 + j
        rows.append([Fraction((-1) ** i * comb(k + D - 1 - i, D - i)) for i in range(D + 1)]
                    + [Fraction(window[j])])
    m = D + 1
    for col in range(m):
        piv = next((r for r in range(col, m) if rows[r][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(m):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    sol = [rows[i][m] for i in range(m)]
    if any(v.denominator != 1 for v in sol):
        return None
    return tuple(int(v) for v in sol)


def br_function_table(matrix, ring_dim, budget=None, n_max=None, cap=MAX_POWER_GENERATORS):
    """Compute lambda incrementally until it provably behaves polynomially.

    Stop at the first argument where some window start n0 satisfies:
    the D-th difference is constant over n0, n0+1, n0+2 (equivalently the
    (D+1)-th difference vanishes twice), the exact refit on
    lambda(n0..n0+D) has integer coefficients, and the refit reproduces
    every computed value from n0 on.  Raises StabilizationError past n_max.
    """
    D = ring_dim + matrix.r - 1
    if n_max is None:
        n_max = 4 * (ring_dim + matrix.r)
    values = []
    for k in range(1, n_max + 1):
        v = lambda_value(matrix, k, budget, cap)
        if v is INFINITE:
            raise AlgebraError("lambda(%d) is infinite; the module has no finite colength" % k)
        values.append(v)
        found = _find_stable(D, values)
        if found is not None:
            n0, e0, coeffs = found
            return BRFunctionTable(D, tuple(values), n0, e0, coeffs)
    diffs = list(values)
    for _ in range(D):
        diffs = list(_differences(diffs))
    raise StabilizationError(
        "no stable window for the order-%d difference within %d values (last differences %r)"
        % (D, n_max, diffs[-3:]),
        tuple(diffs),
    )


def _find_stable(D, values):
    if len(values) < D + 3:
        return None
    diffs = list(values)
    for _ in range(D):
        diffs = list(_differences(diffs))
    # diffs[i] is the D-th difference at argument i+1
    for i in range(len(diffs) - 2):
        if not diffs[i] == diffs[i + 1] == diffs[i + 2]:
            continue
        n0 = i + 1
        if n0 + D > len(values):
            continue
        coeffs = _solve_coefficients(D, n0, values[n0 - 1:n0 + D])
        if coeffs is None:
            continue
        table = BRFunctionTable(D, tuple(values), n0, coeffs[0], coeffs)
        if all(table.polynomial_value(k) == values[k - 1] for k in range(n0, len(values) + 1)):
            return n0, coeffs[0], coeffs
    return None


def br_multiplicity(matrix, ring_dim, budget=None, n_max=None):
    """e_0: the stabilized D-th finite difference of lambda."""
    return br_function_table(matrix, ring_dim, budget, n_max).e0


def br_coefficients(matrix, ring_dim, budget=None, n_max=None):
    """The full vector (e_0, ..., e_D) of the binomial-basis polynomial."""
    return br_function_table(matrix, ring_dim, budget, n_max).coefficients


@dataclass(frozen=True)
class ChiRow:
    """Homology lengths and partial Euler characteristics of K(a; t)."""

    t: int
    h_lengths: tuple
    chis: tuple


# Verdict keys that state theorems, so False means a genuine violation.
# The remaining keys (parameter_module, lengths_equal, cm_witness, ...)
# describe the instance and may legitimately be False.
THEOREM_VERDICTS = frozenset(
    (
        "square_zero",
        "annihilation",
        "chi_nonnegative",
        "chi0_t_independent",
        "chi0_rank_case",
        "colength_ge_e0",
        "fitting_colength_ge_e0",
        "h0_ge_e0_all_t",
        "h0_t1_equals_colength",
        "h0_t0_equals_fitting_colength",
    )
)


@dataclass(frozen=True)
class BRReport:
    """Everything the theorem suite knows about one ring/matrix instance."""

    ring: object
    matrix: object
    parameter: object            # ParameterVerdict
    len_f_mod_n: object          # int or INFINITE
    len_a_mod_in: object         # int or INFINITE
    table: object                # BRFunctionTable or None
    e0: object                   # int or None
    coefficients: object         # tuple or None
    chi_rows: tuple              # ChiRow per t, empty when lengths are infinite
    square_zero_ok: bool
    annihilation_ok: bool
    verdicts: dict

    @property
    def ok(self):
        """No theorem-backed verdict failed (descriptive ones may be False)."""
        return not self.failures

    @property
    def failures(self):
        return tuple(
            k for k, v in self.verdicts.items() if v is False and k in THEOREM_VERDICTS
        )


def theorem_check(matrix, trange=None, budget=None, n_max=None, mutate=None):
    """Build the complexes, compute all invariants and judge the claims.

    trange defaults to [-1, min(dim A, n-r+1)].  mutate, when given, is
    applied to each complex after construction (test hook).  Verdict
    values: True/False for statements the theory forces on this input,
    None for ones that do not apply (non-parameter modules, infinite
    colengths).
    """
    ring = matrix.ring
    d = ring.dimension
    r, n = matrix.r, matrix.n
    top = n - r + 1
    if trange is None:
        trange = (-1, min(d, top))
    tmin, tmax = trange
    if not (-1 <= tmin <= tmax <= top):
        raise AlgebraError("t range [%d, %d] outside supported [-1, %d]" % (tmin, tmax, top))
    sub = matrix.submodule()
    verdict = is_parameter_module(ring, sub, budget)
    len_f = verdict.colength
    minors = fitting_ideal(matrix)
    len_i = ideal_colength(ring, minors, budget)

    square_zero_ok = True
    annihilation_ok = True
    chi_rows = []
    complexes = {}
    broken = set()
    for t in range(tmin, tmax + 1):
        cx = build_koszul(matrix, t, check=False)
        if mutate is not None:
            mutate(cx)
        if verify_complex(cx):
            square_zero_ok = False
            broken.add(t)  # homology of a non-complex means nothing
        complexes[t] = cx

    finite = len_f is not INFINITE
    table = None
    e0 = None
    coefficients = None
    if finite:
        table = br_function_table(matrix, d, budget, n_max)
        e0 = table.e0
        coefficients = table.coefficients
        for t in range(tmin, tmax + 1):
            if t in broken:
                continue
            cx = complexes[t]
            pres = all_homology(cx, budget)
            if annihilation_check(cx, minors, pres, budget):
                annihilation_ok = False
            tab = euler_characteristics(cx, budget, pres)
            chi_rows.append(ChiRow(t, tab.lengths, tab.chis))
    else:
        for t in range(tmin, tmax + 1):
            if t in broken:
                continue
            if annihilation_check(complexes[t], minors, None, budget):
                annihilation_ok = False

    verdicts = {
        "square_zero": square_zero_ok,
        "annihilation": annihilation_ok,
        "finite_colength": finite,
        "inside_max_ideal": verdict.inside_max_ideal,
        "parameter_module": verdict.ok,
    }
    if finite:
        chi0s = [row.chis[0] for row in chi_rows]
        verdicts["chi_nonnegative"] = all(c >= 0 for row in chi_rows for c in row.chis)
        verdicts["chi0_t_independent"] = len(set(chi0s)) <= 1
        if n == d + r - 1:
            verdicts["chi0_rank_case"] = all(c == e0 for c in chi0s)
        else:
            verdicts["chi0_rank_case"] = all(c == 0 for c in chi0s)
        verdicts["lengths_equal"] = len_f == len_i
    else:
        verdicts["chi_nonnegative"] = None
        verdicts["chi0_t_independent"] = None
        verdicts["chi0_rank_case"] = None
        verdicts["lengths_equal"] = None
    if verdict.ok:
        verdicts["colength_ge_e0"] = len_f >= e0
        verdicts["fitting_colength_ge_e0"] = len_i >= e0
        h0 = {row.t: row.h_lengths[0] for row in chi_rows}
        verdicts["h0_ge_e0_all_t"] = all(v >= e0 for v in h0.values())
        verdicts["h0_t1_equals_colength"] = h0[1] == len_f if 1 in h0 else None
        verdicts["h0_t0_equals_fitting_colength"] = h0[0] == len_i if 0 in h0 else None
        verdicts["cm_witness"] = len_f == e0 or len_i == e0
    else:
        for key in (
            "colength_ge_e0",
            "fitting_colength_ge_e0",
            "h0_ge_e0_all_t",
            "h0_t1_equals_colength",
            "h0_t0_equals_fitting_colength",
            "cm_witness",
        ):
            verdicts[key] = None
    return BRReport(
        ring=ring,
        matrix=matrix,
        parameter=verdict,
        len_f_mod_n=len_f,
        len_a_mod_in=len_i,
        table=table,
        e0=e0,
        coefficients=coefficients,
        chi_rows=tuple(chi_rows),
        square_zero_ok=square_zero_ok,
        annihilation_ok=annihilation_ok,
        verdicts=verdicts,
    )


@dataclass(frozen=True)
class SpreadSample:
    matrix_text: str
    colength: int
    e0: int

    @property
    def difference(self):
        return self.colength - self.e0


@dataclass(frozen=True)
class SpreadResult:
    """Observed values of length(F/N) - e(F/N) over random parameter modules.

    For rings where that difference is independent of N the multiset is
    constant; the report only states what was seen.
    """

    seed: int
    entry_degree: int
    samples: tuple
    differences: tuple

    @property
    def distinct(self):
        return tuple(sorted(set(self.differences)))


def random_parameter_matrix(ring, r, rng, entry_degree=1, attempts=200, budget=None):
    """Draw r x (dim A + r - 1) matrices with random homogeneous entries
    until one presents a parameter module."""
    from itertools import combinations_with_replacement as cwr
    from .koszul import ModuleMatrix

    ctx = ring.ctx
    n = ring.dimension + r - 1
    monos = [m for m in _monomials_of_degree(ctx.nvars, entry_degree)]
    for _ in range(attempts):
        entries = []
        for _i in range(r):
            row = []
            for _j in range(n):
                poly = ctx.zero()
                for m in monos:
                    c = rng.randrange(ctx.p)
                    if c:
                        poly = poly + ctx.monomial(m, c)
                row.append(ring.element(poly))
            entries.append(row)
        try:
            mat = ModuleMatrix(ring, entries)
        except Exception:
            continue
        if is_parameter_module(ring, mat.submodule(), budget).ok:
            return mat
    raise SamplingError("no parameter module found in %d attempts" % attempts)


def _monomials_of_degree(nvars, d):
    out = []

    def rec(prefix, rest, left):
        if rest == 1:
            out.append(tuple(prefix) + (left,))
            return
        for e in range(left + 1):
            rec(prefix + [e], rest - 1, left - e)

    rec([], nvars, d)
    return out


def buchsbaum_spread(ring, r, samples, seed, entry_degree=1, budget=None, n_max=None):
    """Sample random parameter modules and report length - multiplicity.

    Exploratory: the output is data, not a verdict.  Deterministic for a
    fixed seed.
    """
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        mat = random_parameter_matrix(ring, r, rng, entry_degree, budget=budget)
        ln = submodule_colength(ring, mat.submodule(), budget)
        e0 = br_multiplicity(mat, ring.dimension, budget, n_max)
        out.append(SpreadSample(str(mat), ln, e0))
    return SpreadResult(
        seed=seed,
        entry_degree=entry_degree,
        samples=tuple(out),
        differences=tuple(s.difference for s in out),
    )

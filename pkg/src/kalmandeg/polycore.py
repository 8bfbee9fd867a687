"""Exact sparse multivariate polynomial arithmetic with per-variable degree caps.

Every computation downstream (degree extraction, generating functions,
determinant identities, critical-point checks) reduces to sums, products and
coefficient lookups of polynomials with arbitrary-precision integer
coefficients.  A polynomial is a term map from exponent tuples to nonzero
ints over a fixed, ordered tuple of variable names; coefficients never touch
floating point.

Optional per-variable exponent caps truncate arithmetic as it happens: any
monomial exceeding a cap in a single variable is dropped.  Exponents are
nonnegative and add under multiplication, so a monomial within the caps can
only arise from factor monomials that are themselves within the caps; every
coefficient a truncated product keeps therefore equals the corresponding
coefficient of the exact, untruncated product, regardless of signs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

# One exponent per ring variable, all >= 0.
ExponentVec = tuple[int, ...]


def _merge_caps(a: tuple[int, ...] | None, b: tuple[int, ...] | None) -> tuple[int, ...] | None:
    if a is None:
        return b
    if b is None:
        return a
    return tuple(min(x, y) for x, y in zip(a, b))


class TPoly:
    """Sparse multivariate polynomial with exact integer coefficients.

    Instances are immutable by convention: no method mutates ``terms`` after
    construction, so values can be shared freely between threads.
    """

    __slots__ = ("vars", "caps", "terms")

    def __init__(
        self,
        vars: Sequence[str],
        terms: Mapping[ExponentVec, int] | None = None,
        caps: Sequence[int] | None = None,
    ):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names in ring")
        if caps is None:
            self.caps = None
        else:
            self.caps = tuple(caps)
            if len(self.caps) != len(self.vars):
                raise ValueError("caps length does not match variable count")
            if any(c < 0 for c in self.caps):
                raise ValueError("caps must be nonnegative")
        clean: dict[ExponentVec, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise ValueError("exponent vector length does not match variable count")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            if coeff == 0:
                continue
            if self.caps is not None and any(e > c for e, c in zip(exps, self.caps)):
                continue
            clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[ExponentVec, int], caps: tuple[int, ...] | None) -> TPoly:
        # Internal fast path: caller guarantees all invariants already hold.
        self = object.__new__(cls)
        self.vars = vars
        self.caps = caps
        self.terms = terms
        return self

    @classmethod
    def zero(cls, vars: Sequence[str], caps: Sequence[int] | None = None) -> TPoly:
        return cls(vars, {}, caps)

    @classmethod
    def constant(cls, vars: Sequence[str], value: int, caps: Sequence[int] | None = None) -> TPoly:
        return cls(vars, {(0,) * len(tuple(vars)): value}, caps)

    @classmethod
    def one(cls, vars: Sequence[str], caps: Sequence[int] | None = None) -> TPoly:
        return cls.constant(vars, 1, caps)

    @classmethod
    def variable(cls, vars: Sequence[str], name: str, caps: Sequence[int] | None = None) -> TPoly:
        return cls.monomial(vars, {name: 1}, 1, caps)

    @classmethod
    def monomial(
        cls,
        vars: Sequence[str],
        powers: Mapping[str, int],
        coeff: int = 1,
        caps: Sequence[int] | None = None,
    ) -> TPoly:
        vars = tuple(vars)
        exps = [0] * len(vars)
        for name, e in powers.items():
            try:
                exps[vars.index(name)] = e
            except ValueError:
                raise ValueError(f"unknown variable {name!r}") from None
        return cls(vars, {tuple(exps): coeff}, caps)

    # -- queries ----------------------------------------------------------

    def coefficient(self, exps: Sequence[int]) -> int:
        """Exact coefficient of the given monomial; 0 if absent."""
        exps = tuple(exps)
        if len(exps) != len(self.vars):
            raise ValueError("exponent vector length does not match variable count")
        return self.terms.get(exps, 0)

    @property
    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # term maps are dicts; instances are not hashable

    # -- arithmetic -------------------------------------------------------

    def _check_same_ring(self, other: TPoly) -> None:
        if self.vars != other.vars:
            raise ValueError(f"ring mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: TPoly) -> TPoly:
        self._check_same_ring(other)
        caps = _merge_caps(self.caps, other.caps)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        if caps is not None:
            out = {e: c for e, c in out.items() if all(x <= m for x, m in zip(e, caps))}
        return TPoly._raw(self.vars, out, caps)

    def __neg__(self) -> TPoly:
        return TPoly._raw(self.vars, {e: -c for e, c in self.terms.items()}, self.caps)

    def __sub__(self, other: TPoly) -> TPoly:
        return self + (-other)

    def __mul__(self, other: TPoly | int) -> TPoly:
        if isinstance(other, int):
            return self.scaled(other)
        return poly_mul(self, other)

    def __rmul__(self, other: int) -> TPoly:
        return self.scaled(other)

    def scaled(self, factor: int) -> TPoly:
        if factor == 0:
            return TPoly._raw(self.vars, {}, self.caps)
        return TPoly._raw(self.vars, {e: factor * c for e, c in self.terms.items()}, self.caps)

    def __pow__(self, n: int) -> TPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TPoly.one(self.vars, self.caps)
        base = self
        while n:
            if n & 1:
                result = poly_mul(result, base)
            n >>= 1
            if n:
                base = poly_mul(base, base)
        return result

    def partial(self, name: str) -> TPoly:
        """Partial derivative with respect to one ring variable."""
        try:
            idx = self.vars.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None
        out: dict[ExponentVec, int] = {}
        for e, c in self.terms.items():
            if e[idx] == 0:
                continue
            lowered = e[:idx] + (e[idx] - 1,) + e[idx + 1 :]
            out[lowered] = out.get(lowered, 0) + c * e[idx]
        return TPoly._raw(self.vars, {e: c for e, c in out.items() if c}, self.caps)

    def evaluate(self, values: Mapping[str, int | Fraction]) -> int | Fraction:
        """Evaluate at a point with exact integer/rational coordinates.

        Only variables that actually occur with positive exponent need a value.
        """
        total: int | Fraction = 0
        for e, c in self.terms.items():
            val: int | Fraction = c
            for name, exp in zip(self.vars, e):
                if exp:
                    if name not in values:
                        raise ValueError(f"no value supplied for variable {name!r}")
                    val *= values[name] ** exp
            total += val
        return total

    def without_vars(self, names: Iterable[str]) -> TPoly:
        """Project onto the subring omitting ``names``.

        Fails if a dropped variable occurs with positive exponent anywhere.
        """
        drop = set(names)
        unknown = drop - set(self.vars)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        keep = [i for i, v in enumerate(self.vars) if v not in drop]
        for e in self.terms:
            for i, v in enumerate(self.vars):
                if v in drop and e[i]:
                    raise ValueError(f"variable {v!r} occurs with positive exponent")
        new_vars = tuple(self.vars[i] for i in keep)
        new_caps = None if self.caps is None else tuple(self.caps[i] for i in keep)
        new_terms = {tuple(e[i] for i in keep): c for e, c in self.terms.items()}
        return TPoly._raw(new_vars, new_terms, new_caps)

    def coefficient_in(self, name: str, power: int) -> TPoly:
        """The coefficient of ``name**power``, as a polynomial with that variable zeroed."""
        try:
            idx = self.vars.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None
        out: dict[ExponentVec, int] = {}
        for e, c in self.terms.items():
            if e[idx] == power:
                out[e[:idx] + (0,) + e[idx + 1 :]] = c
        return TPoly._raw(self.vars, out, self.caps)

    # -- serialization ----------------------------------------------------

    def __str__(self) -> str:
        """Deterministic text form: monomials sorted lexicographically by exponents."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"


def poly_mul(a: TPoly, b: TPoly, caps: Sequence[int] | None = None) -> TPoly:
    """Exact product, dropping every monomial that exceeds a cap in any variable.

    With ``caps=None`` the caps carried by the operands (componentwise minimum)
    apply.  All coefficients within the caps are exact.
    """
    a._check_same_ring(b)
    if caps is None:
        caps = _merge_caps(a.caps, b.caps)
    else:
        caps = tuple(caps)
        if len(caps) != len(a.vars):
            raise ValueError("caps length does not match variable count")
        if any(c < 0 for c in caps):
            raise ValueError("caps must be nonnegative")
    out: dict[ExponentVec, int] = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if caps is not None and any(x > m for x, m in zip(e, caps)):
                continue
            out[e] = out.get(e, 0) + c1 * c2
    return TPoly._raw(a.vars, {e: c for e, c in out.items() if c}, caps)


def coefficient_of(p: TPoly, m: Sequence[int]) -> int:
    """Exact coefficient of the monomial with exponent vector ``m``; 0 if absent."""
    return p.coefficient(m)


def elementary_symmetric(vars: Sequence[str], subset: Sequence[str], i: int) -> TPoly:
    """The elementary symmetric polynomial e_i over a subset of the ring variables.

    e_0 is the constant 1; e_i for i > len(subset) is rejected.
    """
    vars = tuple(vars)
    subset = tuple(subset)
    if len(set(subset)) != len(subset):
        raise ValueError("subset contains repeated variables")
    missing = set(subset) - set(vars)
    if missing:
        raise ValueError(f"subset variables {sorted(missing)} not in ring")
    if i < 0 or i > len(subset):
        raise ValueError(f"index {i} out of range for {len(subset)} variables")
    if i == 0:
        return TPoly.one(vars)
    idx = [vars.index(v) for v in subset]
    terms: dict[ExponentVec, int] = {}
    for combo in combinations(idx, i):
        exps = [0] * len(vars)
        for j in combo:
            exps[j] = 1
        terms[tuple(exps)] = 1
    return TPoly(vars, terms)


class PolyMatrix:
    """A rectangular matrix of polynomials sharing one ring."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence[TPoly]]):
        rows = [tuple(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        vars = rows[0][0].vars
        for r in rows:
            for p in r:
                if p.vars != vars:
                    raise ValueError("matrix entries live in different rings")
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.cols = width

    @property
    def vars(self) -> tuple[str, ...]:
        return self.entries[0][0].vars


def det(m: PolyMatrix) -> TPoly:
    """Exact determinant by cofactor expansion, memoized on active column sets.

    Intended for the small bordered matrices of this package (dimension on the
    order of ten); memoization brings the cost down from n! to 2^n subproblems.
    """
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    vars = m.vars
    memo: dict[int, TPoly] = {}

    def expand(mask: int) -> TPoly:
        if mask == 0:
            return TPoly.one(vars)
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = n - bin(mask).count("1")
        acc = TPoly.zero(vars)
        sign = 1
        col = 0
        rest = mask
        while rest:
            if rest & 1:
                entry = m.entries[row][col]
                if entry:
                    prod = poly_mul(entry, expand(mask ^ (1 << col)))
                    acc = acc + prod if sign > 0 else acc - prod
                sign = -sign
            rest >>= 1
            col += 1
        memo[mask] = acc
        return acc

    return expand((1 << n) - 1)

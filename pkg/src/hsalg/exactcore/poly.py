"""Sparse polynomials in commuting (even) and Grassmann (odd) variables.

Monomials are stored canonically: a dense exponent tuple over the even
variables and a strictly increasing tuple of odd-variable positions, with
reordering signs absorbed into the coefficient.  A monomial containing a
repeated odd variable is identically zero and never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .scalars import GaussianRational, format_gaussian, parse_gaussian

EVEN = "even"
ODD = "odd"

MonomialKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


class VariableTable:
    """Ordered list of (name, parity); the position is the variable index."""

    __slots__ = ("names", "parities", "_index", "even_pos", "odd_pos",
                 "even_names", "odd_names")

    def __init__(self, variables: Iterable[Tuple[str, str]]):
        names = []
        parities = []
        for name, parity in variables:
            if parity not in (EVEN, ODD):
                raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
            names.append(name)
            parities.append(parity)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.names = tuple(names)
        self.parities = tuple(parities)
        self._index = {name: k for k, name in enumerate(names)}
        # positions within the even / odd sub-lists
        even_pos, odd_pos = {}, {}
        even_names, odd_names = [], []
        for k, parity in enumerate(parities):
            if parity == EVEN:
                even_pos[k] = len(even_names)
                even_names.append(names[k])
            else:
                odd_pos[k] = len(odd_names)
                odd_names.append(names[k])
        self.even_pos = even_pos
        self.odd_pos = odd_pos
        self.even_names = tuple(even_names)
        self.odd_names = tuple(odd_names)

    @property
    def n_even(self) -> int:
        return len(self.even_names)

    @property
    def n_odd(self) -> int:
        return len(self.odd_names)

    def index(self, name: str) -> int:
        return self._index[name]

    def is_odd(self, name: str) -> bool:
        return self.parities[self._index[name]] == ODD

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        if not isinstance(other, VariableTable):
            return NotImplemented
        return self.names == other.names and self.parities == other.parities

    def __hash__(self):
        return hash((self.names, self.parities))

    def __repr__(self):
        return f"VariableTable({list(zip(self.names, self.parities))!r})"


def merge_odd_words(u: Tuple[int, ...], v: Tuple[int, ...]):
    """Merge two increasing words; return (word, sign) or None on a repeat."""
    if not u:
        return v, 1
    if not v:
        return u, 1
    out = []
    sign = 1
    i = j = 0
    nu = len(u)
    while i < nu and j < len(v):
        a, b = u[i], v[j]
        if a == b:
            return None
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
            if (nu - i) & 1:
                sign = -sign
    out.extend(u[i:])
    out.extend(v[j:])
    return tuple(out), sign


class SuperPolynomial:
    """Map from canonical monomial to GaussianRational, over a VariableTable.

    Treated as immutable: no method mutates ``self`` and instances may be
    shared freely between threads.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms: Optional[dict] = None):
        self.table = table
        if terms is None:
            terms = {}
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, table: VariableTable) -> "SuperPolynomial":
        return cls(table)

    @classmethod
    def constant(cls, table: VariableTable, value) -> "SuperPolynomial":
        c = GaussianRational.coerce(value)
        key = ((0,) * table.n_even, ())
        return cls(table, {key: c})

    @classmethod
    def one(cls, table: VariableTable) -> "SuperPolynomial":
        return cls.constant(table, 1)

    @classmethod
    def variable(cls, table: VariableTable, name: str) -> "SuperPolynomial":
        k = table.index(name)
        if table.parities[k] == EVEN:
            exps = [0] * table.n_even
            exps[table.even_pos[k]] = 1
            key = (tuple(exps), ())
        else:
            key = ((0,) * table.n_even, (table.odd_pos[k],))
        return cls(table, {key: GaussianRational.one()})

    # -- ring operations ---------------------------------------------------

    def _check_table(self, other: "SuperPolynomial"):
        if self.table is not other.table and self.table != other.table:
            raise ValueError("polynomials over different variable tables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = SuperPolynomial.constant(self.table, other)
        self._check_table(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key)
            if s is None:
                terms[key] = c
            else:
                s = s + c
                if s.is_zero():
                    del terms[key]
                else:
                    terms[key] = s
        return SuperPolynomial(self.table, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = SuperPolynomial.constant(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SuperPolynomial(self.table, {k: -c for k, c in self.terms.items()})

    def scale(self, scalar) -> "SuperPolynomial":
        c = GaussianRational.coerce(scalar)
        if c.is_zero():
            return SuperPolynomial(self.table)
        return SuperPolynomial(self.table, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._check_table(other)
        out: dict = {}
        for (ue, uo), cu in self.terms.items():
            for (ve, vo), cv in other.terms.items():
                merged = merge_odd_words(uo, vo)
                if merged is None:
                    continue
                word, sign = merged
                key = (tuple(a + b for a, b in zip(ue, ve)), word)
                c = cu * cv
                if sign < 0:
                    c = -c
                s = out.get(key)
                out[key] = c if s is None else s + c
        return SuperPolynomial(self.table, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers")
        result = SuperPolynomial.one(self.table)
        for _ in range(exponent):
            result = result * self
        return result

    # -- calculus ----------------------------------------------------------

    def derivative(self, name: str, side: str = "left") -> "SuperPolynomial":
        """Partial derivative; for odd variables the side matters.

        Left derivative strips the variable after moving it to the front of
        the Grassmann word, right derivative to the back.
        """
        k = self.table.index(name)
        out: dict = {}
        if self.table.parities[k] == EVEN:
            pos = self.table.even_pos[k]
            for (exps, word), c in self.terms.items():
                e = exps[pos]
                if e == 0:
                    continue
                new = list(exps)
                new[pos] = e - 1
                key = (tuple(new), word)
                cc = c * e
                s = out.get(key)
                out[key] = cc if s is None else s + cc
        else:
            pos = self.table.odd_pos[k]
            for (exps, word), c in self.terms.items():
                if pos not in word:
                    continue
                t = word.index(pos)
                sign = -1 if (t % 2 if side == "left" else (len(word) - 1 - t) % 2) else 1
                key = (exps, word[:t] + word[t + 1:])
                cc = c if sign > 0 else -c
                s = out.get(key)
                out[key] = cc if s is None else s + cc
        return SuperPolynomial(self.table, out)

    def substitute(self, name: str, value) -> "SuperPolynomial":
        """Substitute a scalar for an even variable."""
        k = self.table.index(name)
        if self.table.parities[k] != EVEN:
            raise ValueError("scalar substitution only for even variables")
        pos = self.table.even_pos[k]
        val = GaussianRational.coerce(value)
        out: dict = {}
        for (exps, word), c in self.terms.items():
            e = exps[pos]
            new = list(exps)
            new[pos] = 0
            cc = c * val ** e
            if cc.is_zero():
                continue
            key = (tuple(new), word)
            s = out.get(key)
            out[key] = cc if s is None else s + cc
        return SuperPolynomial(self.table, out)

    def map_variables(self, target: VariableTable, mapping: dict) -> "SuperPolynomial":
        """Reinterpret over ``target`` sending variable index k -> mapping[k].

        Distinct odd variables may collapse onto the same target, in which
        case the monomial dies (Grassmann square); reordering signs are
        computed from the target word.
        """
        src = self.table
        even_map = {}
        odd_map = {}
        for k_src, k_tgt in mapping.items():
            if src.parities[k_src] == EVEN:
                even_map[src.even_pos[k_src]] = target.even_pos[k_tgt]
            else:
                odd_map[src.odd_pos[k_src]] = target.odd_pos[k_tgt]
        out: dict = {}
        n_even = target.n_even
        for (exps, word), c in self.terms.items():
            new_exps = [0] * n_even
            for p, e in enumerate(exps):
                if e:
                    new_exps[even_map[p]] += e
            new_word = []
            sign = 1
            dead = False
            for p in word:
                q = odd_map[p]
                # insertion sort with transposition signs
                t = len(new_word)
                while t > 0 and new_word[t - 1] > q:
                    t -= 1
                if t > 0 and new_word[t - 1] == q:
                    dead = True
                    break
                if (len(new_word) - t) & 1:
                    sign = -sign
                new_word.insert(t, q)
            if dead:
                continue
            key = (tuple(new_exps), tuple(new_word))
            cc = c if sign > 0 else -c
            s = out.get(key)
            out[key] = cc if s is None else s + cc
        return SuperPolynomial(target, out)

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = SuperPolynomial.constant(self.table, other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exps) + len(word) for exps, word in self.terms)

    def grassmann_degrees(self) -> set:
        return {len(word) for _, word in self.terms}

    def parity(self) -> Optional[int]:
        """0/1 if Grassmann-homogeneous, None for mixed, 0 for zero."""
        degs = {d % 2 for d in self.grassmann_degrees()}
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def homogeneous_part(self, degree: int) -> "SuperPolynomial":
        return SuperPolynomial(self.table, {
            k: c for k, c in self.terms.items() if sum(k[0]) + len(k[1]) == degree})

    def constant_term(self) -> GaussianRational:
        key = ((0,) * self.table.n_even, ())
        return self.terms.get(key, GaussianRational.zero())

    def coefficient(self, key: MonomialKey) -> GaussianRational:
        return self.terms.get(key, GaussianRational.zero())

    # -- univariate views ------------------------------------------------

    def univariate_coeffs(self) -> list:
        """Coefficient list [c0, c1, ...] for a polynomial in one even variable."""
        if self.table.n_odd or self.table.n_even != 1:
            raise ValueError("not univariate")
        if not self.terms:
            return []
        deg = max(exps[0] for exps, _ in self.terms)
        coeffs = [GaussianRational.zero()] * (deg + 1)
        for (exps, _), c in self.terms.items():
            coeffs[exps[0]] = c
        return coeffs

    @classmethod
    def from_univariate_coeffs(cls, table: VariableTable, coeffs) -> "SuperPolynomial":
        return cls(table, {((k,), ()): GaussianRational.coerce(c)
                           for k, c in enumerate(coeffs)})

    # -- formatting ----------------------------------------------------------

    def _monomial_str(self, key: MonomialKey) -> str:
        exps, word = key
        parts = []
        for p, e in enumerate(exps):
            if e == 1:
                parts.append(self.table.even_names[p])
            elif e > 1:
                parts.append(f"{self.table.even_names[p]}^{e}")
        parts.extend(self.table.odd_names[p] for p in word)
        return "*".join(parts) if parts else "1"

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=lambda k: (sum(k[0]) + len(k[1]), k)):
            c = self.terms[key]
            mono = self._monomial_str(key)
            if mono == "1":
                bits.append(format_gaussian(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                cs = format_gaussian(c)
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = f"({cs})"
                bits.append(f"{cs}*{mono}")
        out = bits[0]
        for b in bits[1:]:
            out += b if b.startswith("-") else "+" + b
        return out

    def __repr__(self):
        return f"SuperPolynomial({self})"

    def to_json_obj(self) -> list:
        """Canonical JSON form: sorted list of {monomial, coeff} pairs."""
        rows = []
        for key in sorted(self.terms, key=lambda k: (sum(k[0]) + len(k[1]), k)):
            rows.append({"monomial": self._monomial_str(key),
                         "coeff": format_gaussian(self.terms[key])})
        return rows


def poly_mul(p: SuperPolynomial, q: SuperPolynomial) -> SuperPolynomial:
    """Product of two polynomials over the same table (Grassmann sign rule)."""
    return p * q

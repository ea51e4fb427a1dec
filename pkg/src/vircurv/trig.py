"""Sparse trigonometric vector fields on the circle.

A :class:`TrigField` stores ``f(t) d/dt`` with
``f(t) = sum_k a_k cos(kt) + b_k sin(kt)`` as a sparse map
``k -> (a_k, b_k)``.  The sine coefficient of mode 0 does not exist.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping, Tuple

from gmpy2 import mpq

from .errors import DomainError
from .exact import ZERO, ExactScalar, format_scalar, parse_scalar, rational

Pair = Tuple[ExactScalar, ExactScalar]
BasisLabel = Tuple[str, int]


class TrigField:
    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[int, Tuple] | None = None):
        c: dict[int, Pair] = {}
        for k, (a, b) in (coefficients or {}).items():
            k = int(k)
            if k < 0:
                raise DomainError(f"negative mode {k}")
            a, b = rational(a), rational(b)
            if k == 0 and b != 0:
                raise DomainError("mode 0 has no sine component")
            if a or b:
                c[k] = (a, b)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "TrigField":
        # trusted constructor: c already canonical
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def from_triples(cls, triples: Iterable[Tuple]) -> "TrigField":
        acc: dict[int, list] = defaultdict(lambda: [ZERO, ZERO])
        for k, a, b in triples:
            a = parse_scalar(a) if isinstance(a, str) else rational(a)
            b = parse_scalar(b) if isinstance(b, str) else rational(b)
            acc[int(k)][0] += a
            acc[int(k)][1] += b
        return cls({k: tuple(v) for k, v in acc.items()})

    def to_triples(self) -> list[tuple[int, str, str]]:
        """Canonical serialized form: sorted ``(k, "a_k", "b_k")``."""
        return [(k, format_scalar(a), format_scalar(b)) for k, (a, b) in self.items()]

    def items(self) -> Iterator[tuple[int, Pair]]:
        return iter(sorted(self._c.items()))

    def get(self, k: int, default=None):
        return self._c.get(k, default)

    def a(self, k: int) -> ExactScalar:
        return self._c.get(k, (ZERO, ZERO))[0]

    def b(self, k: int) -> ExactScalar:
        return self._c.get(k, (ZERO, ZERO))[1]

    @property
    def modes(self) -> list[int]:
        return sorted(self._c)

    @property
    def max_mode(self) -> int:
        return max(self._c, default=0)

    def is_mean_zero(self) -> bool:
        return 0 not in self._c

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, TrigField):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: "TrigField") -> "TrigField":
        if not isinstance(other, TrigField):
            return NotImplemented
        c = dict(self._c)
        for k, (a, b) in other._c.items():
            if k in c:
                a0, b0 = c[k]
                a, b = a0 + a, b0 + b
                if a or b:
                    c[k] = (a, b)
                else:
                    del c[k]
            else:
                c[k] = (a, b)
        return TrigField._raw(c)

    def __neg__(self) -> "TrigField":
        return TrigField._raw({k: (-a, -b) for k, (a, b) in self._c.items()})

    def __sub__(self, other: "TrigField") -> "TrigField":
        if not isinstance(other, TrigField):
            return NotImplemented
        c = dict(self._c)
        for k, (a, b) in other._c.items():
            if k in c:
                a0, b0 = c[k]
                a, b = a0 - a, b0 - b
                if a or b:
                    c[k] = (a, b)
                else:
                    del c[k]
            else:
                c[k] = (-a, -b)
        return TrigField._raw(c)

    def __mul__(self, s) -> "TrigField":
        if isinstance(s, TrigField) or isinstance(s, float):
            return NotImplemented
        s = rational(s)
        if s == 0:
            return TrigField._raw({})
        return TrigField._raw({k: (s * a, s * b) for k, (a, b) in self._c.items()})

    __rmul__ = __mul__

    def __repr__(self):
        from .parser import format_field

        return f"TrigField({format_field(self)!r})"


ZERO_FIELD = TrigField()


def basis_f(k: int) -> TrigField:
    """``f_k = cos(kt)``; ``k >= 0``."""
    if k < 0:
        raise DomainError(f"basis_f needs k >= 0, got {k}")
    return TrigField._raw({k: (rational(1), ZERO)})


def basis_g(k: int) -> TrigField:
    """``g_k = sin(kt)``; ``k >= 1``."""
    if k < 1:
        raise DomainError(f"basis_g needs k >= 1, got {k} (sin 0t is not a basis element)")
    return TrigField._raw({k: (ZERO, rational(1))})


def basis(label: BasisLabel) -> TrigField:
    kind, k = label
    if kind == "f":
        return basis_f(k)
    if kind == "g":
        return basis_g(k)
    raise DomainError(f"unknown basis kind {kind!r}")


def basis_labels(max_mode: int, start: int = 1) -> list[BasisLabel]:
    """``f_start..f_max`` then ``g_start..g_max`` (``g_0`` never appears)."""
    fs = [("f", k) for k in range(start, max_mode + 1)]
    gs = [("g", k) for k in range(max(start, 1), max_mode + 1)]
    return fs + gs


def label_str(label: BasisLabel) -> str:
    return f"{label[0]}_{label[1]}"


def derivative(x: TrigField) -> TrigField:
    # d/dt (a cos kt + b sin kt) = k b cos kt - k a sin kt
    c = {}
    for k, (a, b) in x._c.items():
        if k:
            c[k] = (k * b if b else ZERO, -k * a if a else ZERO)
    return TrigField._raw(c)


def _accumulate_product(cos_acc: dict, sin_acc: dict, x: TrigField, y: TrigField, sign: int) -> None:
    # doubled coefficients of sign * x * y, by product-to-sum
    for m, (a1, b1) in x._c.items():
        for n, (a2, b2) in y._c.items():
            s = m + n
            d = m - n
            ad = d if d >= 0 else -d
            # cos.cos -> cos(m-n) + cos(m+n); sin.sin -> cos(m-n) - cos(m+n)
            if a1 and a2:
                cc = a1 * a2 if sign > 0 else -(a1 * a2)
                cos_acc[ad] += cc
                cos_acc[s] += cc
            if b1 and b2:
                ss = b1 * b2 if sign > 0 else -(b1 * b2)
                cos_acc[ad] += ss
                cos_acc[s] -= ss
            # cos m sin n = sin(m+n) - sin(m-n); sin m cos n = sin(m+n) + sin(m-n)
            if a1 and b2:
                cs = a1 * b2 if sign > 0 else -(a1 * b2)
                sin_acc[s] += cs
                if d:
                    sin_acc[ad] += -cs if d > 0 else cs
            if b1 and a2:
                sc = b1 * a2 if sign > 0 else -(b1 * a2)
                sin_acc[s] += sc
                if d:
                    sin_acc[ad] += sc if d > 0 else -sc


def _halved(cos_acc: dict, sin_acc: dict) -> TrigField:
    c = {}
    for k in set(cos_acc) | set(sin_acc):
        a = cos_acc.get(k, 0)
        b = sin_acc.get(k, 0) if k else 0
        if a or b:
            c[k] = (mpq(a) / 2 if a else ZERO, mpq(b) / 2 if b else ZERO)
    return TrigField._raw(c)


def product(x: TrigField, y: TrigField) -> TrigField:
    """Pointwise product of two trigonometric polynomials via product-to-sum."""
    cos_acc: dict = defaultdict(int)
    sin_acc: dict = defaultdict(int)
    _accumulate_product(cos_acc, sin_acc, x, y, 1)
    return _halved(cos_acc, sin_acc)


def bracket(x: TrigField, y: TrigField) -> TrigField:
    """Vector-field bracket ``[f, g] = f g' - f' g``."""
    cos_acc: dict = defaultdict(int)
    sin_acc: dict = defaultdict(int)
    _accumulate_product(cos_acc, sin_acc, x, derivative(y), 1)
    _accumulate_product(cos_acc, sin_acc, derivative(x), y, -1)
    return _halved(cos_acc, sin_acc)


def apply_J(x: TrigField) -> TrigField:
    """Complex structure: ``sum a_k f_k + b_k g_k -> sum b_k f_k - a_k g_k``."""
    if 0 in x._c:
        raise DomainError("J is only defined on mean-zero fields (nonzero a_0)")
    return TrigField._raw({k: (b, -a) for k, (a, b) in x._c.items()})


def project_m(x: TrigField) -> TrigField:
    """Drop the rotation (constant) component."""
    if 0 not in x._c:
        return x
    return TrigField._raw({k: v for k, v in x._c.items() if k})


def project_h(x: TrigField) -> TrigField:
    if 0 not in x._c:
        return ZERO_FIELD
    return TrigField._raw({0: x._c[0]})


def integral_pair(x: TrigField, y: TrigField) -> ExactScalar:
    """``(1/2pi) * integral_0^{2pi} f g dt`` by Fourier orthogonality."""
    total = ZERO
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    for k, (a, b) in small._c.items():
        other = big._c.get(k)
        if other is None:
            continue
        if k == 0:
            total += a * other[0]
        else:
            total += (a * other[0] + b * other[1]) / 2
    return total


def require_mean_zero(*fields: TrigField) -> None:
    for x in fields:
        if 0 in x._c:
            raise DomainError("argument must lie in diff_0 (no constant a_0 component)")

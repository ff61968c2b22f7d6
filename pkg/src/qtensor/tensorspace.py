"""Sparse vectors in the r-fold tensor power of the vector module, the
generator actions obtained from the iterated coproduct, the transposition
generator action, weight extraction, and the standard bilinear form.

Basis vectors are indexed by tuples a in {1..n}^r; the single-factor rules
are F_i: v_i -> v_{i+1}, E_i: v_{i+1} -> v_i (all else to zero), with the
grouplike generators acting diagonally by integer powers of q.  Vectors are
immutable; every operation returns a fresh value.
"""

from __future__ import annotations

import json
from typing import Iterator

from .coeff import ScalarField

__all__ = [
    "TensorVector",
    "MixedWeightError",
    "ShapeMismatchError",
    "apply_generator",
    "apply_E",
    "apply_F",
    "apply_K",
    "apply_tK",
    "weight_of",
    "apply_T",
    "apply_T_factored",
    "bilinear",
    "prepend",
    "vector_to_json_dict",
    "vector_from_json_dict",
    "vector_to_json",
    "format_vector",
]

Index = tuple[int, ...]


class MixedWeightError(ValueError):
    """The support mixes several letter contents, so no weight is defined."""


class ShapeMismatchError(ValueError):
    """Operands live in different tensor spaces."""


class TensorVector:
    """Finitely supported map from index tuples to scalars."""

    __slots__ = ("field", "n", "r", "coeffs")

    def __init__(self, field: ScalarField, n: int, r: int, coeffs: dict[Index, object] | None = None):
        if n < 1 or r < 0:
            raise ValueError("need n >= 1 and r >= 0")
        self.field = field
        self.n = n
        self.r = r
        clean: dict[Index, object] = {}
        if coeffs:
            for idx, c in coeffs.items():
                if not c:
                    continue
                if len(idx) != r or any(not 1 <= a <= n for a in idx):
                    raise ValueError(f"bad index {idx} for degree {r} over {n} letters")
                clean[idx] = c
        self.coeffs = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: ScalarField, n: int, r: int) -> TensorVector:
        return cls(field, n, r)

    @classmethod
    def unit(cls, field: ScalarField, n: int) -> TensorVector:
        """The basis vector of the zeroth tensor power."""
        return cls(field, n, 0, {(): field.one()})

    @classmethod
    def basis(cls, field: ScalarField, n: int, idx: Index) -> TensorVector:
        return cls(field, n, len(idx), {tuple(idx): field.one()})

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def iter_terms(self) -> Iterator[tuple[Index, object]]:
        """Terms in lexicographic index order."""
        for idx in sorted(self.coeffs):
            yield idx, self.coeffs[idx]

    def _check_shape(self, other: TensorVector):
        if self.n != other.n or self.r != other.r:
            raise ShapeMismatchError(
                f"({self.n},{self.r}) vs ({other.n},{other.r})")

    def __add__(self, other: TensorVector) -> TensorVector:
        if not isinstance(other, TensorVector):
            return NotImplemented
        self._check_shape(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = out.get(idx)
            s = c if s is None else s + c
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return self._fresh(out)

    def __sub__(self, other: TensorVector) -> TensorVector:
        return self + (-other)

    def __neg__(self) -> TensorVector:
        return self._fresh({idx: -c for idx, c in self.coeffs.items()})

    def scale(self, c) -> TensorVector:
        if not c:
            return self._fresh({})
        return self._fresh({idx: v * c for idx, v in self.coeffs.items()})

    def _fresh(self, coeffs: dict[Index, object]) -> TensorVector:
        v = TensorVector.__new__(TensorVector)
        v.field = self.field
        v.n = self.n
        v.r = self.r
        v.coeffs = coeffs
        return v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.r, tuple(sorted((k, hash(v)) for k, v in self.coeffs.items()))))

    def __str__(self) -> str:
        return format_vector(self)

    def __repr__(self) -> str:
        return f"TensorVector({self.n},{self.r}; {format_vector(self)})"


# -- generator actions ---------------------------------------------------------


def _check_ef_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def apply_E(i: int, v: TensorVector) -> TensorVector:
    """Raising generator via the iterated coproduct: grouplike factors to the
    left of the active slot contribute a power of q."""
    _check_ef_index(i, v.n)
    field = v.field
    out: dict[Index, object] = {}
    for idx, c in v.coeffs.items():
        tk = 0  # exponent from grouplike factors left of the active slot
        for s, letter in enumerate(idx):
            if letter == i + 1:
                new = idx[:s] + (i,) + idx[s + 1:]
                add = c * field.q_power(tk) if tk else c
                cur = out.get(new)
                cur = add if cur is None else cur + add
                if cur:
                    out[new] = cur
                else:
                    out.pop(new, None)
            if letter == i:
                tk += 1
            elif letter == i + 1:
                tk -= 1
    return v._fresh(out)


def apply_F(i: int, v: TensorVector) -> TensorVector:
    """Lowering generator: inverse grouplike factors to the right of the
    active slot contribute the power of q."""
    _check_ef_index(i, v.n)
    field = v.field
    out: dict[Index, object] = {}
    for idx, c in v.coeffs.items():
        # suffix[s] = (#i) - (#(i+1)) among positions > s
        suffix = [0] * (len(idx) + 1)
        for s in range(len(idx) - 1, -1, -1):
            delta = 1 if idx[s] == i else (-1 if idx[s] == i + 1 else 0)
            suffix[s] = suffix[s + 1] + delta
        for s, letter in enumerate(idx):
            if letter != i:
                continue
            new = idx[:s] + (i + 1,) + idx[s + 1:]
            e = -suffix[s + 1]
            add = c * field.q_power(e) if e else c
            cur = out.get(new)
            cur = add if cur is None else cur + add
            if cur:
                out[new] = cur
            else:
                out.pop(new, None)
    return v._fresh(out)


def apply_K(j: int, v: TensorVector, inverse: bool = False) -> TensorVector:
    """Diagonal grouplike generator: q to the multiplicity of the letter j."""
    if not 1 <= j <= v.n:
        raise ValueError(f"generator index {j} out of range 1..{v.n}")
    sign = -1 if inverse else 1
    field = v.field
    out = {}
    for idx, c in v.coeffs.items():
        e = sign * sum(1 for a in idx if a == j)
        out[idx] = c * field.q_power(e) if e else c
    return v._fresh(out)


def apply_tK(i: int, v: TensorVector, inverse: bool = False) -> TensorVector:
    """Diagonal coroot grouplike: q to the content difference at i, i+1."""
    _check_ef_index(i, v.n)
    sign = -1 if inverse else 1
    field = v.field
    out = {}
    for idx, c in v.coeffs.items():
        e = sign * (sum(1 for a in idx if a == i) - sum(1 for a in idx if a == i + 1))
        out[idx] = c * field.q_power(e) if e else c
    return v._fresh(out)


_GENERATORS = {
    "E": lambda i, v: apply_E(i, v),
    "F": lambda i, v: apply_F(i, v),
    "K": lambda i, v: apply_K(i, v),
    "Kinv": lambda i, v: apply_K(i, v, inverse=True),
    "tK": lambda i, v: apply_tK(i, v),
    "tKinv": lambda i, v: apply_tK(i, v, inverse=True),
}


def apply_generator(kind: str, i: int, v: TensorVector) -> TensorVector:
    """Dispatch on the generator family: E, F, K, Kinv, tK, tKinv."""
    try:
        fn = _GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown generator kind {kind!r}") from None
    return fn(i, v)


def weight_of(v: TensorVector) -> tuple[int, ...]:
    """Letter content (m_1..m_n) common to the whole support; this is the
    eigenvalue exponent tuple of the diagonal generators."""
    if v.is_zero:
        raise ValueError("the zero vector has no weight")
    it = iter(v.coeffs)
    first = next(it)
    content = [0] * v.n
    for a in first:
        content[a - 1] += 1
    for idx in it:
        other = [0] * v.n
        for a in idx:
            other[a - 1] += 1
        if other != content:
            raise MixedWeightError(f"support mixes contents {content} and {other}")
    return tuple(content)


# -- transposition-generator action ---------------------------------------------


def apply_T(i: int, v: TensorVector) -> TensorVector:
    """Right action of the i-th transposition generator by the three-case rule."""
    if not 1 <= i <= v.r - 1:
        raise ValueError(f"T index {i} out of range 1..{v.r - 1}")
    field = v.field
    q = field.q_power(1)
    qdiff = field.q_power(1) - field.q_power(-1)
    out: dict[Index, object] = {}

    def acc(idx, c):
        cur = out.get(idx)
        cur = c if cur is None else cur + c
        if cur:
            out[idx] = cur
        else:
            out.pop(idx, None)

    for idx, c in v.coeffs.items():
        a, b = idx[i - 1], idx[i]
        if a == b:
            acc(idx, c * q)
        else:
            swapped = idx[: i - 1] + (b, a) + idx[i + 1:]
            acc(swapped, c)
            if a < b:
                acc(idx, c * qdiff)
    return v._fresh(out)


def apply_T_factored(i: int, v: TensorVector) -> TensorVector:
    """Same action through the identity-padded two-site operator; kept as an
    independent cross-check of apply_T."""
    if not 1 <= i <= v.r - 1:
        raise ValueError(f"T index {i} out of range 1..{v.r - 1}")
    field = v.field
    q = field.q_power(1)
    qdiff = field.q_power(1) - field.q_power(-1)
    out: dict[Index, object] = {}

    def acc(idx, c):
        cur = out.get(idx)
        cur = c if cur is None else cur + c
        if cur:
            out[idx] = cur
        else:
            out.pop(idx, None)

    for idx, c in v.coeffs.items():
        head, (s, t), tail = idx[: i - 1], idx[i - 1: i + 1], idx[i + 1:]
        if s == t:
            acc(head + (s, t) + tail, c * q)
        elif s < t:
            acc(head + (s, t) + tail, c * qdiff)
            acc(head + (t, s) + tail, c)
        else:
            acc(head + (t, s) + tail, c)
    return v._fresh(out)


# -- bilinear form ---------------------------------------------------------------


def bilinear(u: TensorVector, v: TensorVector):
    """Standard symmetric form: the index basis is orthonormal."""
    u._check_shape(v)
    if len(v.coeffs) < len(u.coeffs):
        u, v = v, u
    total = u.field.zero()
    for idx, c in u.coeffs.items():
        d = v.coeffs.get(idx)
        if d is not None:
            total = total + c * d
    return total


def prepend(letter: int, v: TensorVector) -> TensorVector:
    """Tensor a basis letter onto the left, raising the degree by one."""
    if not 1 <= letter <= v.n:
        raise ValueError(f"letter {letter} out of range 1..{v.n}")
    out = {(letter,) + idx: c for idx, c in v.coeffs.items()}
    w = TensorVector.__new__(TensorVector)
    w.field = v.field
    w.n = v.n
    w.r = v.r + 1
    w.coeffs = out
    return w


# -- serialization ----------------------------------------------------------------


def vector_to_json_dict(v: TensorVector) -> dict:
    terms = [{"idx": list(idx), "coeff": v.field.render(c)} for idx, c in v.iter_terms()]
    return {"n": v.n, "r": v.r, "terms": terms}


def vector_from_json_dict(field: ScalarField, obj: dict) -> TensorVector:
    coeffs = {tuple(t["idx"]): field.parse(t["coeff"]) for t in obj["terms"]}
    return TensorVector(field, obj["n"], obj["r"], coeffs)


def vector_to_json(v: TensorVector) -> str:
    return json.dumps(vector_to_json_dict(v), separators=(",", ":"))


def format_vector(v: TensorVector) -> str:
    """Human-readable rendering with terms in lexicographic index order."""
    if v.is_zero:
        return "0"
    parts = []
    for idx, c in v.iter_terms():
        ctext = v.field.render(c)
        if " " in ctext and not ctext.startswith("("):
            ctext = f"({ctext})"
        body = "v[" + ",".join(map(str, idx)) + "]"
        parts.append(body if ctext == "1" else f"{ctext}*{body}")
    return " + ".join(parts)

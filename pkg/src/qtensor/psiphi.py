"""Construction of highest-weight vectors in tensor space.

The building blocks are weight-dependent elements of the lowering subalgebra,
defined by a two-term recursion over Coxeter-type words and combined into
box-adding operators: applying the operator for row m to a highest-weight
vector of a given shape yields a highest-weight vector of the shape with one
box added in row m, one tensor factor higher.  Composing the operators along
a walk produces the orthogonal family indexed by walks.

Words in the lowering generators are kept in a canonical form for the
far-commutation relation (letters at distance > 1 commute), which makes
equality of elements a structural comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .coeff import ScalarField
from .combinatorics import Partition, Walk, a_const, c_const, d_const
from .tensorspace import TensorVector, apply_E, apply_F, prepend, weight_of

__all__ = [
    "NegElement",
    "MaximalVectorRecord",
    "PsiUndefinedError",
    "AddabilityError",
    "canonical_word",
    "psi",
    "apply_neg",
    "phi",
    "build_c_pi",
    "is_maximal",
    "xi_map",
    "jimbo_root_vectors",
    "jimbo_pivot_agreement",
]

NegWord = tuple[int, ...]


class PsiUndefinedError(ValueError):
    """The recursion divides by a vanishing q-integer for this weight."""


class AddabilityError(ValueError):
    """The requested row cannot receive a box at this weight."""


def canonical_word(word: NegWord) -> NegWord:
    """Lexicographically least word in the far-commutation class.

    Adjacent letters at distance > 1 commute; bubbling every decreasing
    commuting pair to a fixed point reaches the unique minimum.
    """
    w = list(word)
    changed = True
    while changed:
        changed = False
        for t in range(len(w) - 1):
            if w[t] > w[t + 1] + 1:
                w[t], w[t + 1] = w[t + 1], w[t]
                changed = True
    return tuple(w)


class NegElement:
    """Formal linear combination of generator words with scalar coefficients.

    Words are stored canonically; the same container serves for words in the
    lowering generators and (for the root-vector recursion) in the raising
    generators, since both families satisfy the same far commutation.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: ScalarField, terms: dict[NegWord, object] | None = None):
        self.field = field
        clean: dict[NegWord, object] = {}
        if terms:
            for word, c in terms.items():
                if not c:
                    continue
                cw = canonical_word(tuple(word))
                cur = clean.get(cw)
                cur = c if cur is None else cur + c
                if cur:
                    clean[cw] = cur
                else:
                    clean.pop(cw, None)
        self.terms = clean

    @classmethod
    def one(cls, field: ScalarField) -> NegElement:
        return cls(field, {(): field.one()})

    @classmethod
    def generator(cls, field: ScalarField, i: int) -> NegElement:
        if i < 1:
            raise ValueError("generator indices start at 1")
        return cls(field, {(i,): field.one()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: NegElement) -> NegElement:
        if not isinstance(other, NegElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            cur = out.get(w)
            cur = c if cur is None else cur + c
            if cur:
                out[w] = cur
            else:
                out.pop(w, None)
        return self._fresh(out)

    def __sub__(self, other: NegElement) -> NegElement:
        return self + other.scale(self.field.from_int(-1))

    def scale(self, c) -> NegElement:
        if not c:
            return self._fresh({})
        return self._fresh({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: NegElement) -> NegElement:
        """Concatenation product, re-canonicalized."""
        if not isinstance(other, NegElement):
            return NotImplemented
        out: dict[NegWord, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = canonical_word(w1 + w2)
                c = c1 * c2
                cur = out.get(w)
                cur = c if cur is None else cur + c
                if cur:
                    out[w] = cur
                else:
                    out.pop(w, None)
        return self._fresh(out)

    def _fresh(self, terms: dict[NegWord, object]) -> NegElement:
        e = NegElement.__new__(NegElement)
        e.field = self.field
        e.terms = terms
        return e

    def max_letter(self) -> int:
        return max((max(w) for w in self.terms if w), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NegElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted((w, hash(c)) for w, c in self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.field.render(self.terms[w])
            parts.append(f"{c} * F[{','.join(map(str, w))}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NegElement({self})"


# -- the recursion -------------------------------------------------------------


def _weight_window(weight, j: int, shift: int) -> tuple[int, ...]:
    # Entries below index shift+1 never enter the shifted constants; zeroing
    # them makes the memo key insensitive to them.
    def entry(i: int) -> int:
        seq = weight.parts if isinstance(weight, Partition) else tuple(weight)
        return seq[i - 1] if i <= len(seq) else 0

    return (0,) * shift + tuple(entry(i) for i in range(shift + 1, j + shift + 2))


def psi(j: int, weight, field: ScalarField, shift: int = 0) -> NegElement:
    """The j-th lowering element for the given weight, shifted ``shift`` times
    (every generator index and every simple-root index raised by ``shift``).

    Supported on Coxeter-type words in the generators shift+1 .. shift+j.
    Undefined exactly when the (j+shift)-th coroot pairing vanishes; that is
    reported with a distinct error rather than a zero element.
    """
    if j < 0:
        raise ValueError("need j >= 0")
    if shift < 0:
        raise ValueError("need shift >= 0")
    return _psi_cached(j, shift, _weight_window(weight, j, shift), field)


@lru_cache(maxsize=None)
def _psi_cached(j: int, shift: int, window: tuple[int, ...], field: ScalarField) -> NegElement:
    if j == 0:
        return NegElement.one(field)
    d = d_const(window, j, shift)
    if j == 1:
        if d == 0:
            raise PsiUndefinedError(
                f"coroot pairing {1 + shift} vanishes for weight {window}")
        return NegElement(field, {(1 + shift,): field.one() / field.qint(d)})
    if d == 0:
        # cannot happen for dominant weights, only for general integer ones
        raise PsiUndefinedError(f"denominator constant d_{j} (shift {shift}) vanishes")
    c = c_const(window, j, shift)
    inner = psi(j - 1, window, field, shift + 1)
    gen = NegElement.generator(field, 1 + shift)
    dd = field.qint(d)
    return (gen * inner).scale(field.qint(c) / dd) - (inner * gen).scale(field.qint(c - 1) / dd)


def apply_neg(e: NegElement, v: TensorVector) -> TensorVector:
    """Realize an element as an operator: each word acts letter by letter,
    rightmost letter first."""
    if e.max_letter() > v.n - 1:
        raise ValueError(f"element uses generator {e.max_letter()}, ambient has {v.n - 1}")
    out = TensorVector.zero(v.field, v.n, v.r)
    for word, c in e.terms.items():
        acted = reduce(lambda vec, i: apply_F(i, vec), reversed(word), v)
        out = out + acted.scale(c)
    return out


# -- box-adding operators --------------------------------------------------------


def phi(m: int, weight, b: TensorVector, shift: int = 0, validate: bool = False) -> TensorVector:
    """Add a box in row m: maps a highest-weight vector of the given weight to
    one of that weight plus a unit in row m, in one more tensor factor (new
    factor on the left).

    ``shift`` gives the shifted variant used by the recursion consistency
    checks.  With ``validate`` the highest-weight precondition on ``b`` is
    checked instead of being caller-asserted.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    field = b.field
    if m >= 2 and a_const(weight, m - 1 + shift) == 0:
        raise AddabilityError(f"row {m + shift} is not addable at weight {tuple(weight)}")
    if validate:
        if b.r > 0 and not is_maximal(b):
            raise ValueError("phi input is not a highest-weight vector")
        if b.r > 0:
            wt = weight_of(b)
            want = tuple(weight.parts if isinstance(weight, Partition) else weight)
            if tuple(wt[: len(want)]) != want or any(x != 0 for x in wt[len(want):]):
                raise ValueError(f"weight mismatch: vector has {wt}, caller said {want}")
    minus_qinv = field.from_int(0) - field.q_power(-1)
    acc = TensorVector.zero(field, b.n, b.r + 1)
    coeff = field.one()
    for j in range(m):
        term = apply_neg(psi(j, weight, field, m - j - 1 + shift), b)
        acc = acc + prepend(m - j + shift, term).scale(coeff)
        coeff = coeff * minus_qinv
    return acc


@dataclass(frozen=True)
class MaximalVectorRecord:
    """A walk, the highest-weight vector it produces, and its shape."""

    walk: Walk
    vector: TensorVector
    weight: Partition


def build_c_pi(pi: Walk, field: ScalarField, n: int | None = None) -> MaximalVectorRecord:
    """Compose the box-adding operators along a walk, starting from the unit
    of the zeroth tensor power."""
    if n is None:
        n = max(pi.rows, default=1)
    vec = TensorVector.unit(field, n)
    lam = Partition()
    for k in pi.rows:
        vec = phi(k, lam, vec)
        lam = lam.add_box(k)
    return MaximalVectorRecord(walk=pi, vector=vec, weight=lam)


def is_maximal(v: TensorVector) -> bool:
    """True when v is a weight vector killed by every raising generator."""
    if v.is_zero:
        raise ValueError("the zero vector is not classified")
    try:
        weight_of(v)
    except ValueError:
        return False
    return all(apply_E(i, v).is_zero for i in range(1, v.n))


# -- the basis-vector-to-lowering-element map -------------------------------------


def xi_map(m: int, weight, field: ScalarField) -> list[tuple[int, NegElement]]:
    """For each basis index j = 1..m-1, the lowering element that the
    row-m box-adding operator tensors against the j-th basis letter.

    Entry j has weight minus the root-sum over rows j..m-1; the entries are
    nonzero with pairwise distinct weights.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if a_const(weight, m - 1) == 0:
        raise PsiUndefinedError(f"coroot pairing {m - 1} vanishes for weight {tuple(weight)}")
    return [(j, psi(m - j, weight, field, shift=j - 1)) for j in range(1, m)]


# -- recursive root vectors --------------------------------------------------------


def jimbo_root_vectors(n: int, field: ScalarField) -> tuple[dict, dict]:
    """Recursive root vectors: raising ones E^(i,j) for i < j and lowering
    ones F^(i,j) for i > j, with the adjacent base cases and the fixed pivot
    next to i in the two-term recursion."""
    if n < 2:
        raise ValueError("need n >= 2")
    e_hat: dict[tuple[int, int], NegElement] = {}
    f_hat: dict[tuple[int, int], NegElement] = {}
    q = field.q_power(1)
    qinv = field.q_power(-1)
    for i in range(1, n):
        e_hat[(i, i + 1)] = NegElement.generator(field, i)
        f_hat[(i + 1, i)] = NegElement.generator(field, i)
    for span in range(2, n):
        for i in range(1, n - span + 1):
            j = i + span
            k = i + 1
            e_hat[(i, j)] = e_hat[(i, k)] * e_hat[(k, j)] - (e_hat[(k, j)] * e_hat[(i, k)]).scale(q)
        for i in range(span + 1, n + 1):
            j = i - span
            k = i - 1
            f_hat[(i, j)] = f_hat[(i, k)] * f_hat[(k, j)] - (f_hat[(k, j)] * f_hat[(i, k)]).scale(qinv)
    return e_hat, f_hat


def jimbo_pivot_agreement(n: int, field: ScalarField) -> bool:
    """Exhaustively compare every admissible pivot in the root-vector
    recursion; True when all pivots give the same element."""
    q = field.q_power(1)
    qinv = field.q_power(-1)

    def variants(lo: int, hi: int, raising: bool) -> list[NegElement]:
        if hi - lo == 1:
            return [NegElement.generator(field, lo)]
        out: dict = {}
        for k in range(lo + 1, hi):
            for left in variants(lo, k, raising):
                for right in variants(k, hi, raising):
                    if raising:
                        val = left * right - (right * left).scale(q)
                    else:
                        val = left * right - (right * left).scale(qinv)
                    out[hash(val)] = val
        return list(out.values())

    for span in range(2, n):
        for lo in range(1, n - span + 1):
            for raising in (True, False):
                vals = variants(lo, lo + span, raising)
                if any(v != vals[0] for v in vals[1:]):
                    return False
    return True

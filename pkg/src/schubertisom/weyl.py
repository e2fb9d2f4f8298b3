"""Weyl group arithmetic through the integral reflection representation.

Group elements are identified by their faithful action on the root lattice
(and, in parallel, on the coroot lattice), so equality is a matrix compare
and descent tests are sign tests on columns.  Root and coroot vectors are
plain integer tuples in the simple-root / simple-coroot bases, ordered by
the Cartan matrix's label order.  All arithmetic is exact: coordinates are
arbitrary-precision integers, so unbounded root growth in infinite types
is handled without overflow.
"""

from dataclasses import dataclass

from .cartan import CartanMatrix
from .errors import (
    LengthCapExceededError,
    EnumerationCapExceededError,
    MixedContextsError,
    NotACoverError,
    NotInSupportError,
)

DEFAULT_LENGTH_CAP = 20
DEFAULT_ELEMENT_CAP = 200_000


def _matmul(a, b):
    n = len(a)
    rng = range(n)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in rng) for j in rng) for i in rng
    )


def _matvec(a, v):
    rng = range(len(a))
    return tuple(sum(a[i][k] * v[k] for k in rng) for i in rng)


def _identity_matrix(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def is_negative_vector(coords):
    return any(c < 0 for c in coords) and all(c <= 0 for c in coords)


def is_positive_vector(coords):
    return any(c > 0 for c in coords) and all(c >= 0 for c in coords)


class WeylElement:
    """A Weyl group element with its action on roots and coroots.

    `mat` has column t equal to the coordinates of w(alpha_t); `cmat` is the
    analogous coroot action with column t the coordinates of w(h_t).  The
    inverse matrices are carried along so that descents and inversion tests
    never require matrix inversion.
    """

    __slots__ = ("cartan", "mat", "inv", "cmat", "cinv", "_word", "_hash")

    def __init__(self, cartan, mat, inv, cmat, cinv, word=None):
        self.cartan = cartan
        self.mat = mat
        self.inv = inv
        self.cmat = cmat
        self.cinv = cinv
        self._word = word
        self._hash = hash(mat)

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.cartan == other.cartan
            and self.mat == other.mat
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeylElement({' '.join(self.canonical_word) or 'e'})"

    def __mul__(self, other):
        return multiply(self, other)

    def is_identity(self):
        return self.mat == _context(self.cartan).id_matrix

    @property
    def canonical_word(self):
        """The ShortLex-least reduced word, via greedy least-left-descent."""
        if self._word is None:
            ctx = _context(self.cartan)
            word = []
            cur = self
            while cur.mat != ctx.id_matrix:
                s = min(cur.left_descents(), key=ctx.cartan.index_set.index)
                word.append(s)
                cur = multiply(ctx.gens[s], cur)
            self._word = tuple(word)
        return self._word

    @property
    def length(self):
        return len(self.canonical_word)

    def inverse(self):
        return WeylElement(self.cartan, self.inv, self.mat, self.cinv, self.cmat)

    def apply_to_root(self, coords):
        return _matvec(self.mat, coords)

    def apply_inverse_to_root(self, coords):
        return _matvec(self.inv, coords)

    def apply_to_coroot(self, coords):
        return _matvec(self.cmat, coords)

    def apply_inverse_to_coroot(self, coords):
        return _matvec(self.cinv, coords)

    def right_descents(self):
        """Labels s with w(alpha_s) a negative root."""
        labels = self.cartan.labels
        n = len(labels)
        return {
            labels[j]
            for j in range(n)
            if all(self.mat[i][j] <= 0 for i in range(n))
        }

    def left_descents(self):
        labels = self.cartan.labels
        n = len(labels)
        return {
            labels[j]
            for j in range(n)
            if all(self.inv[i][j] <= 0 for i in range(n))
        }


@dataclass(frozen=True)
class Reflection:
    """A reflection s_beta with its positive root and coroot."""

    element: WeylElement
    root: tuple
    coroot: tuple


class _Context:
    """Per-Cartan-matrix caches: generator matrices and memo tables."""

    def __init__(self, cartan):
        n = len(cartan)
        self.cartan = cartan
        self.id_matrix = _identity_matrix(n)
        identity = WeylElement(
            cartan, self.id_matrix, self.id_matrix, self.id_matrix, self.id_matrix,
            word=(),
        )
        self.identity = identity
        self.gens = {}
        A = cartan.entries
        for k, s in enumerate(cartan.labels):
            mat = [list(row) for row in self.id_matrix]
            cmat = [list(row) for row in self.id_matrix]
            for j in range(n):
                mat[k][j] -= A[k][j]
                cmat[k][j] -= A[j][k]
            mat = tuple(tuple(row) for row in mat)
            cmat = tuple(tuple(row) for row in cmat)
            self.gens[s] = WeylElement(cartan, mat, mat, cmat, cmat, word=(s,))
        self.reduced_words = {identity: frozenset({()})}
        self.subword_products = {identity: frozenset({identity})}


_CONTEXTS = {}


def _context(cartan):
    ctx = _CONTEXTS.get(cartan)
    if ctx is None:
        ctx = _CONTEXTS[cartan] = _Context(cartan)
    return ctx


def identity_element(A):
    return _context(A).identity


def simple_reflection(A, s):
    A.index_set.index(s)
    return _context(A).gens[s]


def multiply(x, y):
    if x.cartan != y.cartan:
        raise MixedContextsError()
    return WeylElement(
        x.cartan,
        _matmul(x.mat, y.mat),
        _matmul(y.inv, x.inv),
        _matmul(x.cmat, y.cmat),
        _matmul(y.cinv, x.cinv),
    )


def element_from_word(A, word):
    ctx = _context(A)
    out = ctx.identity
    for s in word:
        A.index_set.index(s)
        out = multiply(out, ctx.gens[s])
    return out


def left_descents(w):
    return w.left_descents()


def right_descents(w):
    return w.right_descents()


def support(w):
    return set(w.canonical_word)


def simple_root(A, s):
    k = A.index_set.index(s)
    return tuple(int(i == k) for i in range(len(A)))


simple_coroot = simple_root


def bruhat_leq(u, w):
    """Bruhat order test by descent recursion.

    Strip the least left descent s from w; replace u by su whenever s is
    also a left descent of u.  Terminates at w = e with u <= w iff u = e.
    """
    if u.cartan != w.cartan:
        raise MixedContextsError()
    ctx = _context(u.cartan)
    order = u.cartan.index_set.index
    lu, lw = u.length, w.length
    while w.mat != ctx.id_matrix:
        if lu > lw:
            return False
        s = min(w.left_descents(), key=order)
        g = ctx.gens[s]
        w = multiply(g, w)
        lw -= 1
        if s in u.left_descents():
            u = multiply(g, u)
            lu -= 1
    return u.mat == ctx.id_matrix


def two_letter_leq(A, s, t, w):
    """Whether st <= w for s != t in S(w), by the subword property.

    If A[s][t] = 0 then st = ts <= w already.  Otherwise st <= w exactly
    when s appears before t in any (hence the canonical) reduced word.
    """
    word = w.canonical_word
    sup = set(word)
    if s not in sup:
        raise NotInSupportError(s)
    if t not in sup:
        raise NotInSupportError(t)
    if A.entry(s, t) == 0:
        return True
    first_s = word.index(s)
    return t in word[first_s + 1:]


def subword_products(w):
    """All distinct products of subwords of w's canonical word.

    By the subword property this set is exactly the Bruhat interval [e,w];
    it is the independent membership oracle used alongside bruhat_leq.
    """
    ctx = _context(w.cartan)
    cached = ctx.subword_products.get(w)
    if cached is not None:
        return cached
    elements = {ctx.identity}
    for s in w.canonical_word:
        g = ctx.gens[s]
        elements |= {multiply(v, g) for v in elements}
    result = frozenset(elements)
    ctx.subword_products[w] = result
    return result


def _element_sort_key(v):
    order = v.cartan.index_set.index
    word = v.canonical_word
    return (len(word), tuple(order(s) for s in word))


class BruhatInterval:
    """The interval [e,w] with its cover relations, in sorted order."""

    __slots__ = ("top", "elements", "covers_up", "covers_down", "_members")

    def __init__(self, top, elements, covers_up, covers_down):
        self.top = top
        self.elements = elements
        self.covers_up = covers_up
        self.covers_down = covers_down
        self._members = frozenset(elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v):
        return v in self._members

    @property
    def cartan(self):
        return self.top.cartan


def interval(w, length_cap=DEFAULT_LENGTH_CAP):
    if w.length > length_cap:
        raise LengthCapExceededError(w.length, length_cap)
    elements = sorted(subword_products(w), key=_element_sort_key)
    by_length = {}
    for v in elements:
        by_length.setdefault(v.length, []).append(v)
    covers_up = {v: [] for v in elements}
    covers_down = {v: [] for v in elements}
    for k, level in by_length.items():
        for v in by_length.get(k + 1, []):
            below = subword_products(v)
            for u in level:
                if u in below:
                    covers_up[u].append(v)
                    covers_down[v].append(u)
    return BruhatInterval(
        w,
        tuple(elements),
        {v: tuple(ups) for v, ups in covers_up.items()},
        {v: tuple(downs) for v, downs in covers_down.items()},
    )


def reduced_words(w, length_cap=DEFAULT_LENGTH_CAP):
    """The set Red(w), as a frozenset of label tuples."""
    if w.length > length_cap:
        raise LengthCapExceededError(w.length, length_cap)
    ctx = _context(w.cartan)
    cached = ctx.reduced_words.get(w)
    if cached is not None:
        return cached
    words = set()
    for s in w.right_descents():
        shorter = multiply(w, ctx.gens[s])
        for word in reduced_words(shorter, length_cap):
            words.add(word + (s,))
    result = frozenset(words)
    ctx.reduced_words[w] = result
    return result


def inversion_set(w):
    """The positive roots sent negative by w^{-1}; size equals length(w)."""
    A = w.cartan
    roots = set()
    prefix = identity_element(A)
    for s in w.canonical_word:
        beta = prefix.apply_to_root(simple_root(A, s))
        assert is_positive_vector(beta)
        roots.add(beta)
        prefix = multiply(prefix, simple_reflection(A, s))
    return frozenset(roots)


def cover_reflection(u, v):
    """The unique reflection r with r*u = v for a Bruhat cover u <| v.

    Scans the prefix reflections t_l = s_1...s_{l-1} s_l s_{l-1}...s_1 of a
    reduced word of v; the matching one is packaged with its positive root
    beta = s_1...s_{l-1}(alpha_{s_l}) and the corresponding coroot.
    """
    if u.cartan != v.cartan:
        raise MixedContextsError()
    if v.length != u.length + 1:
        raise NotACoverError()
    A = u.cartan
    prefix = identity_element(A)
    for s in v.canonical_word:
        g = simple_reflection(A, s)
        refl = multiply(multiply(prefix, g), prefix.inverse())
        if multiply(refl, u) == v:
            root = prefix.apply_to_root(simple_root(A, s))
            coroot = prefix.apply_to_coroot(simple_coroot(A, s))
            if is_negative_vector(root):
                root = tuple(-c for c in root)
                coroot = tuple(-c for c in coroot)
            return Reflection(refl, root, coroot)
        prefix = multiply(prefix, g)
    raise NotACoverError()


def enumerate_elements(A, max_length, max_elements=DEFAULT_ELEMENT_CAP):
    """All w with length(w) <= max_length, BFS by right multiplication.

    Sorted by (length, canonical word).  Raises if the element count cap is
    hit, since there is no general finiteness test for W(A).
    """
    ctx = _context(A)
    seen = {ctx.identity}
    frontier = [ctx.identity]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            ascents = set(A.labels) - w.right_descents()
            for s in sorted(ascents, key=A.index_set.index):
                v = multiply(w, ctx.gens[s])
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
                    if len(seen) > max_elements:
                        raise EnumerationCapExceededError(max_elements)
        frontier = nxt
    return sorted(seen, key=_element_sort_key)

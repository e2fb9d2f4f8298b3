"""The integral cohomology ring of X(w,A) on its Schubert basis.

Only products of a simple class by an arbitrary class are needed (and
implemented): by the Chevalley formula,

    xi_s * xi_u = sum over Bruhat covers v = s_beta u inside [e,w]
                  of omega_s(u^{-1}(beta_vee)) xi_v,

and every coefficient is a nonnegative integer.  The abstract export
(`CohomologyOracle`) relabels the basis with seeded pseudo-random ids so
that downstream reconstruction cannot peek at element names.
"""

import random
from dataclasses import dataclass, field

from .errors import MalformedOracleError, NotInIntervalError, UnknownLabelError
from . import weyl
from .weyl import cover_reflection, element_from_word


@dataclass
class SchubertClass:
    """A finitely supported integer combination of Schubert basis classes."""

    interval: weyl.BruhatInterval
    coeffs: dict

    def __post_init__(self):
        self.coeffs = {v: c for v, c in self.coeffs.items() if c != 0}
        for v in self.coeffs:
            if v not in self.interval:
                raise NotInIntervalError(v.canonical_word)

    def __eq__(self, other):
        return (
            isinstance(other, SchubertClass)
            and self.interval.top == other.interval.top
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for v, c in other.coeffs.items():
            coeffs[v] = coeffs.get(v, 0) + c
        return SchubertClass(self.interval, coeffs)

    def scaled(self, k):
        return SchubertClass(self.interval, {v: k * c for v, c in self.coeffs.items()})

    def is_homogeneous(self):
        lengths = {v.length for v in self.coeffs}
        return len(lengths) <= 1


def basis_class(itv, v):
    if v not in itv:
        raise NotInIntervalError(v.canonical_word)
    return SchubertClass(itv, {v: 1})


# Chevalley data for a cover u <| v depends only on the pair, not on the
# ambient interval, so it is memoized globally.
_COVER_COROOT = {}


def _cover_coroot(u, v):
    cached = _COVER_COROOT.get((u, v))
    if cached is None:
        refl = cover_reflection(u, v)
        cached = u.apply_inverse_to_coroot(refl.coroot)
        _COVER_COROOT[(u, v)] = cached
    return cached


def chevalley_product(s, u, itv):
    """Expand xi_s * xi_u on the Schubert basis of the interval."""
    if s not in weyl.support(itv.top):
        raise UnknownLabelError(s)
    if u not in itv:
        raise NotInIntervalError(u.canonical_word)
    k = itv.cartan.index_set.index(s)
    coeffs = {}
    for v in itv.covers_up[u]:
        c = _cover_coroot(u, v)[k]
        assert c >= 0, "Chevalley coefficient must be nonnegative"
        if c:
            coeffs[v] = c
    return SchubertClass(itv, coeffs)


def multiply_by_simple(s, F):
    """Linear extension of chevalley_product to arbitrary classes."""
    out = SchubertClass(F.interval, {})
    for u, c in F.coeffs.items():
        out = out + chevalley_product(s, u, F.interval).scaled(c)
    return out


def simple_square_closed_form(t, itv):
    """xi_t^2 by the closed form: sum of -A[s',t] xi_{s't} over s't <= w.

    Independent oracle for chevalley_product(t, t): no cover scan involved.
    """
    A = itv.cartan
    sup = weyl.support(itv.top)
    if t not in sup:
        raise UnknownLabelError(t)
    coeffs = {}
    for s_prime in sup:
        if s_prime == t or A.entry(s_prime, t) == 0:
            continue
        st = element_from_word(A, (s_prime, t))
        if st in itv:
            coeffs[st] = -A.entry(s_prime, t)
    return SchubertClass(itv, coeffs)


def support(F):
    """The set of basis elements appearing with nonzero coefficient."""
    return frozenset(F.coeffs)


def minimal_coset_reps(J, itv):
    """W^J restricted to the interval: elements with no right descent in J."""
    J = set(J)
    return frozenset(u for u in itv if not (u.right_descents() & J))


def support_closure(J, itv):
    """E^J: the union of supports over the subring generated by S(w) \\ J.

    Computed as the least fixpoint containing xi_e and closed under taking
    supports of products by the allowed simple classes; valid because the
    Chevalley coefficients never cancel.
    """
    generators = sorted(
        weyl.support(itv.top) - set(J), key=itv.cartan.index_set.index
    )
    unit = itv.elements[0]
    assert unit.is_identity()
    closure = {unit}
    frontier = [unit]
    while frontier:
        u = frontier.pop()
        for s in generators:
            for v in support(chevalley_product(s, u, itv)):
                if v not in closure:
                    closure.add(v)
                    frontier.append(v)
    return frozenset(closure)


@dataclass
class CohomologyOracle:
    """An anonymized graded basis with its degree-2 multiplication table."""

    basis: tuple  # of (id, degree) pairs
    generators: tuple  # ids of degree 2
    products: dict  # (generator id, basis id) -> tuple of (basis id, coeff)
    _degrees: dict = field(default=None, repr=False, compare=False)

    def degree(self, bid):
        if self._degrees is None:
            self._degrees = dict(self.basis)
        return self._degrees[bid]

    @property
    def unit_id(self):
        return next(bid for bid, d in self.basis if d == 0)

    @property
    def top_id(self):
        top_degree = max(d for _, d in self.basis)
        return next(bid for bid, d in self.basis if d == top_degree)

    def validate(self):
        ids = [bid for bid, _ in self.basis]
        if len(set(ids)) != len(ids):
            raise MalformedOracleError("duplicate basis ids")
        degrees = dict(self.basis)
        if any(d < 0 or d % 2 for d in degrees.values()):
            raise MalformedOracleError("degrees must be nonnegative even integers")
        units = [bid for bid, d in self.basis if d == 0]
        if len(units) != 1:
            raise MalformedOracleError("exactly one degree-0 basis element required")
        top_degree = max(degrees.values())
        tops = [bid for bid, d in self.basis if d == top_degree]
        if len(tops) != 1:
            raise MalformedOracleError("exactly one top-degree basis element required")
        if set(self.generators) != {bid for bid, d in self.basis if d == 2}:
            raise MalformedOracleError("generators must be exactly the degree-2 ids")
        for g in self.generators:
            for bid in degrees:
                if (g, bid) not in self.products:
                    raise MalformedOracleError(f"missing product ({g}, {bid})")
        for (g, bid), terms in self.products.items():
            if g not in set(self.generators) or bid not in degrees:
                raise MalformedOracleError(f"product ({g}, {bid}) uses unknown ids")
            for vid, coeff in terms:
                if vid not in degrees:
                    raise MalformedOracleError(f"product ({g}, {bid}) hits unknown id")
                if degrees[vid] != degrees[bid] + 2:
                    raise MalformedOracleError(
                        f"product ({g}, {bid}) does not raise degree by 2"
                    )
                if coeff == 0:
                    raise MalformedOracleError("zero coefficients must be omitted")
        unit = units[0]
        for g in self.generators:
            if self.products[(g, unit)] != ((g, 1),):
                raise MalformedOracleError("degree-0 element must act as the unit")
        return self

    def to_json(self):
        return {
            "basis": [{"id": bid, "degree": d} for bid, d in self.basis],
            "generators": list(self.generators),
            "products": {
                f"{g}|{bid}": [{"id": vid, "coeff": c} for vid, c in terms]
                for (g, bid), terms in sorted(self.products.items())
            },
        }

    @classmethod
    def from_json(cls, data):
        basis = tuple((entry["id"], entry["degree"]) for entry in data["basis"])
        generators = tuple(data["generators"])
        products = {}
        for key, terms in data["products"].items():
            g, _, bid = key.partition("|")
            if not bid:
                raise MalformedOracleError(f"bad product key {key!r}")
            products[(g, bid)] = tuple(
                (entry["id"], entry["coeff"]) for entry in terms
            )
        return cls(basis, generators, products)


def _fresh_ids(count, seed):
    rng = random.Random(seed)
    ids = set()
    while len(ids) < count:
        ids.add("b" + "".join(rng.choice("0123456789abcdef") for _ in range(8)))
    return sorted(ids, key=lambda _: rng.random())


def export_oracle_with_map(w, seed=0, length_cap=weyl.DEFAULT_LENGTH_CAP):
    """Build the anonymized oracle of H*(X(w,A)) plus the element -> id map."""
    itv = weyl.interval(w, length_cap)
    ids = _fresh_ids(len(itv), seed)
    naming = dict(zip(itv.elements, ids))
    basis = tuple(
        sorted(((naming[v], 2 * v.length) for v in itv), key=lambda p: p[0])
    )
    generators = tuple(sorted(naming[v] for v in itv if v.length == 1))
    products = {}
    label_of = {naming[v]: v.canonical_word[0] for v in itv if v.length == 1}
    for gid in generators:
        s = label_of[gid]
        for u in itv:
            F = chevalley_product(s, u, itv)
            terms = tuple(
                sorted((naming[v], c) for v, c in F.coeffs.items())
            )
            products[(gid, naming[u])] = terms
    oracle = CohomologyOracle(basis, generators, products).validate()
    return oracle, naming


def export_oracle(w, seed=0, length_cap=weyl.DEFAULT_LENGTH_CAP):
    return export_oracle_with_map(w, seed, length_cap)[0]

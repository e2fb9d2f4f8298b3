"""Cartan equivalence of pairs (w, A): decision, witnesses, class enumeration.

Two pairs are Cartan equivalent when a bijection of supports matches some
reduced word of w letterwise to a reduced word of w' and matches the Cartan
entries A[s][t] for every pair with st <= w.  Any reduced word works, so the
decision procedure searches bijections of supports rather than reduced
words, pruned by per-generator entry profiles.
"""

from dataclasses import dataclass

from .cartan import diagram_automorphisms, graph_automorphisms, simple_graph, submatrix
from .errors import NotFullySupportedError
from . import weyl
from .weyl import (
    element_from_word,
    enumerate_elements,
    subword_products,
    support,
    two_letter_leq,
)


@dataclass(frozen=True)
class EquivalenceWitness:
    """A support bijection plus matched reduced words certifying equivalence."""

    source: weyl.WeylElement
    target: weyl.WeylElement
    sigma: dict

    @property
    def source_word(self):
        return self.source.canonical_word

    @property
    def target_word(self):
        return tuple(self.sigma[s] for s in self.source_word)

    def to_json(self):
        return {
            "sigma": {s: t for s, t in sorted(self.sigma.items())},
            "source_word": list(self.source_word),
            "target_word": list(self.target_word),
        }


_SUPPORT_DATA = {}


def _support_data(w):
    """(sorted support, constrained pair set, per-label entry profile)."""
    data = _SUPPORT_DATA.get(w)
    if data is not None:
        return data
    A = w.cartan
    order = A.index_set.index
    sup = sorted(support(w), key=order)
    pairs = {
        (s, t)
        for s in sup
        for t in sup
        if s != t and two_letter_leq(A, s, t, w)
    }
    profiles = {}
    for s in sup:
        out_entries = sorted(A.entry(s, t) for t in sup if (s, t) in pairs)
        in_entries = sorted(A.entry(t, s) for t in sup if (t, s) in pairs)
        profiles[s] = (tuple(out_entries), tuple(in_entries))
    data = (sup, pairs, profiles)
    _SUPPORT_DATA[w] = data
    return data


def check_equivalence(w, w_prime):
    """Return an EquivalenceWitness, or None when not Cartan equivalent.

    Searches injections sigma over the supports in lexicographic order,
    backtracking on Cartan entry mismatches for pairs st <= w, and finally
    verifies that sigma applied to the canonical word of w multiplies to
    w' (the image word is automatically reduced).
    """
    A, B = w.cartan, w_prime.cartan
    if w.length != w_prime.length:
        return None
    src, src_pairs, src_profiles = _support_data(w)
    dst, dst_pairs, dst_profiles = _support_data(w_prime)
    if len(src) != len(dst):
        return None

    candidates = {
        s: [t for t in dst if dst_profiles[t] == src_profiles[s]] for s in src
    }
    if any(not opts for opts in candidates.values()):
        return None

    word = w.canonical_word
    sigma = {}
    used = set()

    def extend(i):
        if i == len(src):
            image = tuple(sigma[s] for s in word)
            if element_from_word(B, image) == w_prime:
                return True
            return False
        s = src[i]
        for t in candidates[s]:
            if t in used:
                continue
            ok = True
            for r in src[:i]:
                if (s, r) in src_pairs and A.entry(s, r) != B.entry(t, sigma[r]):
                    ok = False
                    break
                if (r, s) in src_pairs and A.entry(r, s) != B.entry(sigma[r], t):
                    ok = False
                    break
            if not ok:
                continue
            sigma[s] = t
            used.add(t)
            if extend(i + 1):
                return True
            del sigma[s]
            used.discard(t)
        return False

    if extend(0):
        return EquivalenceWitness(w, w_prime, dict(sigma))
    return None


def transport_interval(witness, length_cap=weyl.DEFAULT_LENGTH_CAP):
    """The induced poset isomorphism [e,w] -> [e,w'] of a witness.

    Each v <= w is sent to the product of the sigma-image of its canonical
    word.  The map is checked to be an order isomorphism before returning.
    """
    sigma = witness.sigma
    B = witness.target.cartan
    source_interval = weyl.interval(witness.source, length_cap)
    mapping = {}
    for v in source_interval:
        image = element_from_word(B, tuple(sigma[s] for s in v.canonical_word))
        mapping[v] = image
    images = set(mapping.values())
    assert len(images) == len(mapping), "transported map is not injective"
    for u in source_interval:
        for v in source_interval:
            fwd = u in subword_products(v)
            back = mapping[u] in subword_products(mapping[v])
            assert fwd == back, "transported map is not an order isomorphism"
    return mapping


def isom_classes(A, max_length, max_elements=weyl.DEFAULT_ELEMENT_CAP):
    """Partition {w : length(w) <= max_length} into Cartan equivalence classes.

    Each new element is compared against one representative per class,
    bucketed by a cheap invariant.  Classes come out sorted by their least
    member under (length, ShortLex); members are sorted the same way.
    """
    elements = enumerate_elements(A, max_length, max_elements)
    order = A.index_set.index
    buckets = {}
    classes = []
    for w in elements:
        sup, _, profiles = _support_data(w)
        key = (w.length, tuple(sorted(profiles[s] for s in sup)))
        bucket = buckets.setdefault(key, [])
        for members in bucket:
            if check_equivalence(members[0], w) is not None:
                members.append(w)
                break
        else:
            members = [w]
            bucket.append(members)
            classes.append(members)

    def class_key(members):
        word = members[0].canonical_word
        return (len(word), tuple(order(s) for s in word))

    return sorted(classes, key=class_key)


def isom_class_bound(A, w):
    """Upper bound on |Isom(w,A)| for fully supported w, via automorphisms."""
    missing = set(A.labels) - support(w)
    if missing:
        raise NotFullySupportedError(missing)
    if A.is_symmetric():
        return len(diagram_automorphisms(A))
    return len(graph_automorphisms(simple_graph(A)))


def restriction_witness(w):
    """Witness for X(w,A) = X(w,A_{S(w)}): identity sigma onto the submatrix."""
    A = w.cartan
    sub = submatrix(A, sorted(support(w), key=A.index_set.index))
    w_restricted = element_from_word(sub, w.canonical_word)
    return check_equivalence(w, w_restricted)

"""Stable-letter decompositions along a pivot vertex.

Picking a pivot vertex t presents the group as an HNN extension of the
special subgroup on the remaining vertices, with associated subgroup
generated by the link of t; the stable letter t commutes elementwise with
that associated subgroup. Elements then carry a syllable form

    x0 * t^a1 * x1 * ... * t^an * xn

with every x_i in the base and every interior x_i outside the associated
subgroup. Canonical words produce such a reduced form directly: two pivot
runs separated only by letters commuting with the pivot would have merged
during canonicalisation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cosets
from .words import Element

__all__ = [
    "HnnSplitting",
    "HnnWord",
    "NoConjugator",
    "decompose",
    "recompose",
    "cyclically_reduce",
    "cyclic_permutations",
    "prefixes",
    "natural_projection",
    "centralizer_of_reduced",
    "centralizer_cyclic",
    "minasyan_conjugate_under",
]


class HnnSplitting:
    """A choice of pivot vertex on a fixed graph."""

    def __init__(self, graph, pivot):
        if not 0 <= pivot < graph.n:
            raise ValueError("pivot out of range")
        self.graph = graph
        self.pivot = pivot
        self.base = frozenset(range(graph.n)) - {pivot}
        self.assoc = graph.link(pivot)

    def t(self, power=1):
        lt = self.pivot + 1
        if power == 0:
            return Element(self.graph, (), canonical=True)
        return Element(
            self.graph, (lt if power > 0 else -lt,) * abs(power), canonical=True
        )

    def in_base(self, x):
        return x.in_special(self.base)

    def in_assoc(self, x):
        return x.in_special(self.assoc)

    def __repr__(self):
        return f"HnnSplitting(pivot={self.graph.vertices[self.pivot]!r})"


@dataclass(frozen=True)
class HnnWord:
    """Syllable form x0 t^a1 x1 ... t^an xn. head = x0 may be trivial."""

    head: Element
    syllables: tuple

    @property
    def n(self):
        return len(self.syllables)

    @property
    def exponents(self):
        return tuple(a for a, _ in self.syllables)

    def xprod(self):
        """Product of the base parts x0 x1 ... xn."""
        out = self.head
        for _, x in self.syllables:
            out = out * x
        return out

    def base_prefix(self, i):
        """x0 x1 ... x_i (i ranges over 0..n, where 0 gives the head)."""
        out = self.head
        for _, x in self.syllables[:i]:
            out = out * x
        return out

    def full_prefix(self, split, k):
        """x0 t^a1 x1 ... t^ak xk as an element."""
        out = self.head
        for a, x in self.syllables[:k]:
            out = out * split.t(a) * x
        return out

    def to_element(self, split):
        return self.full_prefix(split, self.n)

    def rotated(self, k):
        """Whole-syllable rotation moving the first k syllables to the back;
        requires a trivial head. The result equals p^-1 * self * p for
        p = full_prefix(split, k)."""
        assert self.head.is_identity()
        return HnnWord(self.head, self.syllables[k:] + self.syllables[:k])


def decompose(split, g):
    """Syllable form of g with respect to the splitting.

    The interior parts land outside the associated subgroup automatically,
    which keeps the form reduced in Britton's sense; this is asserted.
    """
    graph = split.graph
    tv = split.pivot + 1
    chunks = [[]]
    exps = []
    for lt in g.letters:
        if lt == tv or lt == -tv:
            s = 1 if lt > 0 else -1
            if exps and not chunks[-1]:
                # continuing a pivot run; canonical words never mix signs in one
                assert (exps[-1] > 0) == (s > 0)
                exps[-1] += s
            else:
                exps.append(s)
                chunks.append([])
        else:
            chunks[-1].append(lt)
    # contiguous pieces of a canonical word are canonical
    head = Element(graph, tuple(chunks[0]), canonical=True)
    syllables = tuple(
        (exps[k], Element(graph, tuple(chunks[k + 1]), canonical=True))
        for k in range(len(exps))
    )
    for k in range(len(syllables) - 1):
        assert not split.in_assoc(syllables[k][1]), "interior syllable pinches"
    return HnnWord(head, syllables)


def cyclically_reduce(split, g):
    """Return (conj, word) with g == conj * w * conj^-1, where w is the
    element of the cyclically reduced HnnWord `word`.

    The output has a trivial head, and either n == 0 (word.head is then the
    cyclic normal form of a base element, stored in the head slot with no
    syllables) or the last base part avoids the associated subgroup unless
    n == 1. Rewrites happen at the syllable level throughout: re-deriving
    the syllable form from a canonical word could re-expose associated
    letters in front of the first pivot run and loop forever.
    """
    graph = split.graph
    identity = Element(graph, (), canonical=True)
    conj = identity
    hw = decompose(split, g)
    head, syls = hw.head, list(hw.syllables)
    while True:
        if not syls:
            c2, core = head.cyclic_normal_form()
            return conj * c2, HnnWord(core, ())
        if not head.is_identity():
            if split.in_assoc(head):
                # slide through the first pivot run, which it commutes with
                a1, x1 = syls[0]
                syls[0] = (a1, head * x1)
            else:
                conj = conj * head
                an, xn = syls[-1]
                syls[-1] = (an, xn * head)
            head = identity
            continue
        an, xn = syls[-1]
        if len(syls) >= 2 and (xn.is_identity() or split.in_assoc(xn)):
            # rotate the final syllable to the front; its base part commutes
            # with the pivot, so the two pivot runs merge
            conj = conj * xn.inverse() * split.t(-an)
            a1, x1 = syls[0]
            merged = (an + a1, xn * x1)
            syls = [merged] + syls[1:-1]
            if merged[0] == 0:
                head = merged[1]
                syls = syls[1:]
            continue
        return conj, HnnWord(head, tuple(syls))


def recompose(split, w):
    """The Element a syllable form stands for; inverse of decompose."""
    return w.to_element(split)


def cyclic_permutations(w):
    """All whole-syllable rotations of a cyclically reduced form."""
    if w.n == 0:
        raise ValueError("no syllables to rotate")
    return [w.rotated(k) for k in range(w.n)]


def prefixes(split, w):
    """The n+1 partial products up to each pivot run (identity first)."""
    return [w.full_prefix(split, k) for k in range(w.n + 1)]


def natural_projection(split, x):
    """Image of x under the retraction killing the pivot."""
    return x.retract(split.base)


@dataclass(frozen=True)
class NoConjugator:
    """Certified absence of a conjugator, naming the failed condition."""

    reason: str


def centralizer_of_reduced(split, w, subgroup):
    """Symbolic description of the pivot-free centralizer of w's element
    inside the special subgroup on `subgroup`.

    A pivot-free element commutes with x0 t^a1 x1 ... t^an xn exactly when
    it commutes with the product of the base parts and lies in every
    base-prefix conjugate of the associated subgroup; the returned spec
    says precisely that and is evaluated elsewhere, so no infinite set is
    ever materialised here.
    """
    if w.n == 0:
        raise ValueError("no pivot runs; compute the centralizer in the base")
    terms = tuple((w.base_prefix(i), split.assoc) for i in range(w.n))
    return cosets.SubgroupIntersectionSpec(frozenset(subgroup), w.xprod(), terms)


def centralizer_cyclic(split, w, conj_tester, centralizer_service):
    """Generators of the full centralizer of a cyclically reduced form.

    If the single base part lies in the associated subgroup, the
    centralizer is generated by the pivot together with the associated
    centralizer of that part. Otherwise it is generated by the pivot-free
    centralizer (which lives in the associated subgroup), the element
    itself, and one shift element per syllable rotation that is conjugate
    to w under the associated subgroup. A rotation whose tester call comes
    back INCONCLUSIVE clears the completeness flag instead of guessing.
    """
    assert w.n >= 1 and w.head.is_identity()
    graph = split.graph
    if w.n == 1 and split.in_assoc(w.syllables[0][1]):
        kpart = centralizer_service(graph, split.assoc, (w.syllables[0][1],))
        return cosets.make_gens(
            [split.t(1)] + list(kpart), complete=kpart.complete
        )
    u = recompose(split, w)
    kpart = centralizer_service(graph, split.assoc, (u,))
    out = list(kpart) + [u]
    complete = kpart.complete
    for k in range(1, w.n):
        if w.rotated(k).exponents != w.exponents:
            continue
        sigma = conj_tester(u, recompose(split, w.rotated(k)), split.assoc)
        if sigma is cosets.INCONCLUSIVE:
            # a missed shift can only make the returned subgroup smaller
            complete = False
        elif sigma is not None:
            shift = w.full_prefix(split, k) * sigma
            assert shift * u == u * shift
            out.append(shift)
    return cosets.make_gens(out, complete=complete)


def minasyan_conjugate_under(
    split, xw, yw, subgroup, conj_tester, centralizer_service, search_bound=None
):
    """Conjugator inside the special subgroup on `subgroup` taking xw's
    element to yw's, for reduced forms with at least one pivot run.

    Three conditions, each necessary and together sufficient: the pivot
    exponent sequences agree; the base-part products are conjugate under
    the subgroup, with witness alpha; and the coset of alpha by the
    centralizer of the base product meets every prefix coset
    ypref_i * <assoc> * xpref_i^-1. Any solution of the last intersection
    conjugates xw to yw, and the returned witness is verified.

    Returns an Element, NoConjugator, or cosets.INCONCLUSIVE.
    """
    graph = split.graph
    assert xw.n >= 1
    if xw.exponents != yw.exponents:
        return NoConjugator("hnn-exponent-pattern")
    xprod = xw.xprod()
    yprod = yw.xprod()
    alpha = conj_tester(xprod, yprod, subgroup)
    if alpha is cosets.INCONCLUSIVE:
        return cosets.INCONCLUSIVE
    if alpha is None:
        return NoConjugator("base-product-conjugacy")
    spec = cosets.SubgroupIntersectionSpec(frozenset(subgroup), xprod, ())
    double_cosets = [
        cosets.SpecialCoset(
            yw.base_prefix(i), split.assoc, xw.base_prefix(i).inverse()
        )
        for i in range(xw.n)
    ]
    x_elt = recompose(split, xw)
    y_elt = recompose(split, yw)
    if search_bound is None:
        search_bound = 2 * (len(x_elt) + len(y_elt)) + 8
    sigma = cosets.coset_intersection_nonempty(
        alpha, spec, double_cosets, search_bound, centralizer_service
    )
    if sigma is cosets.EMPTY:
        return NoConjugator("coset-intersection")
    if sigma is cosets.INCONCLUSIVE:
        return cosets.INCONCLUSIVE
    assert sigma.in_special(subgroup)
    assert sigma * x_elt * sigma.inverse() == y_elt
    return sigma

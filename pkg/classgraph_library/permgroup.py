"""
Finite permutation groups held as fully enumerated element tables.

A permutation is a tuple of images: `perm[i]` is where point `i` goes. The
product `a * b` applies `a` first and then `b`, and conjugation is
`x ** g = g^-1 * x * g`. Every group is enumerated up front (desk scale), so
subgroups are plain sets of element indices of their parent group.
"""
import logging
from collections import Counter
from dataclasses import dataclass

import numpy as np

from classgraph_library.exceptions import (
    CapExceeded,
    ClassGraphException,
    DegreeMismatch,
    ElementNotInGroup,
    InvalidPermutation,
    NotNormal,
    ParentMismatch,
)
from classgraph_library.settings_helpers import get_enumeration_cap
from classgraph_library.utils import lcm, p_part, prime_factors

logger = logging.getLogger(__name__)


def identity_permutation(degree):
    return tuple(range(degree))


def validate_permutation(images, degree=None):
    images = tuple(images)
    if degree is not None and len(images) != degree:
        raise DegreeMismatch('Expected a permutation of degree {}, got {} images.'.format(degree, len(images)))
    if not images:
        raise InvalidPermutation('A permutation needs at least one point.')
    if sorted(images) != list(range(len(images))):
        raise InvalidPermutation('{} is not a bijection on 0..{}.'.format(list(images), len(images) - 1))
    return images


def perm_mul(a, b):
    return tuple(map(b.__getitem__, a))


def perm_inverse(a):
    inverse = [0] * len(a)
    for point, image in enumerate(a):
        inverse[image] = point
    return tuple(inverse)


def perm_cycles(a):
    seen = [False] * len(a)
    cycles = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point)
            point = a[point]
        cycles.append(tuple(cycle))
    return cycles


def perm_order(a):
    return lcm(len(cycle) for cycle in perm_cycles(a))


def from_cycles(degree, cycles):
    """
    Builds a permutation from disjoint cycles, e.g. from_cycles(3, [(0, 1, 2)]).
    """
    images = list(range(degree))
    for cycle in cycles:
        for position, point in enumerate(cycle):
            images[point] = cycle[(position + 1) % len(cycle)]
    return validate_permutation(images, degree)


class FiniteGroup(object):
    """
    A permutation group with its complete element list. `elements[0]` is the
    identity and `index` maps each element to its position.
    Instances are never mutated after `generate` returns, apart from memoised
    derived data.
    """
    def __init__(self, degree, generators, elements, index, right_table, bfs_parents, name=None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self.name = name or 'group'
        self.right_table = right_table
        self._bfs_parents = bfs_parents
        self._memo = {}

    def __repr__(self):
        return '<FiniteGroup {} order={} degree={}>'.format(self.name, self.order, self.degree)

    def __len__(self):
        return self.order

    def __contains__(self, perm):
        return tuple(perm) in self.index

    def memo(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    def index_of(self, element):
        if isinstance(element, (int, np.integer)):
            if not 0 <= element < self.order:
                raise ElementNotInGroup('No element with index {} in {}.'.format(element, self.name))
            return int(element)
        try:
            return self.index[tuple(element)]
        except KeyError:
            raise ElementNotInGroup('{} is not an element of {}.'.format(list(element), self.name))

    def mul(self, i, j):
        return self.index[perm_mul(self.elements[i], self.elements[j])]

    def inverse(self, i):
        return self.inverse_indices()[i]

    def inverse_indices(self):
        return self.memo('inverse', lambda: [self.index[perm_inverse(element)] for element in self.elements])

    def conjugate(self, i, g):
        return self.mul(self.mul(self.inverse(g), i), g)

    def commutator(self, i, j):
        return self.mul(self.mul(self.inverse(i), self.inverse(j)), self.mul(i, j))

    def power(self, i, exponent):
        result = 0
        for _ in range(exponent):
            result = self.mul(result, i)
        return result

    def element_orders(self):
        return self.memo('orders', lambda: [perm_order(element) for element in self.elements])

    def conjugation_lists(self):
        """
        For each generator g, the list taking index i to the index of i ** g.
        """
        def compute():
            inverse = np.asarray(self.inverse_indices(), dtype=np.int64)
            rows = []
            for right in self.right_table:
                # g^-1 * x is the inverse of x^-1 * g
                left_inverse = inverse[right[inverse]]
                rows.append(right[left_inverse].tolist())
            return rows
        return self.memo('conjugation', compute)

    def image_under(self, generator_table):
        """
        Evaluates a homomorphism given by the images of the generators: the
        images are indices into another group whose right multiplication
        table is `generator_table` (one row per generator of this group).
        """
        images = [0] * self.order
        for i in range(1, self.order):
            parent, k = self._bfs_parents[i]
            images[i] = int(generator_table[k][images[parent]])
        return images

    def whole(self):
        return self.memo('whole', lambda: Subgroup(self, range(self.order), generators=self._generator_indices()))

    def trivial(self):
        return self.memo('trivial', lambda: Subgroup(self, [0], generators=[]))

    def _generator_indices(self):
        return [self.index[g] for g in self.generators if self.index[g] != 0]

    def subgroup(self, generators):
        """
        The subgroup generated by the given element indices (or permutations).
        """
        generators = [self.index_of(g) for g in generators]
        return Subgroup(self, closure(self, generators), generators=generators)

    def subgroup_from_perms(self, perms, generators=None):
        members = [self.index_of(perm) for perm in perms]
        if generators is not None:
            generators = [self.index_of(perm) for perm in generators]
        return Subgroup(self, members, generators=generators)


def _normalise_generators(degree, gens):
    if degree < 1:
        raise DegreeMismatch('The degree must be at least 1.')
    return [validate_permutation(g, degree) for g in gens]


def generate(degree, gens, cap=None, name=None):
    """
    Enumerates the group generated by `gens` breadth first from the identity.
    Each new layer is sorted lexicographically before it gets indices, so the
    element order only depends on the generator list.
    """
    cap = cap or get_enumeration_cap()
    gens = _normalise_generators(degree, gens)
    identity = identity_permutation(degree)
    elements = [identity]
    index = {identity: 0}
    table = [[] for _ in gens]
    bfs_parents = [None]
    start = 0
    while start < len(elements):
        end = len(elements)
        fresh = {}
        layer = []
        for i in range(start, end):
            x = elements[i]
            row = []
            for k, g in enumerate(gens):
                product = tuple(map(g.__getitem__, x))
                row.append(product)
                if product not in index and product not in fresh:
                    fresh[product] = (i, k)
            layer.append(row)
        for product in sorted(fresh):
            index[product] = len(elements)
            elements.append(product)
            bfs_parents.append(fresh[product])
            if len(elements) > cap:
                raise CapExceeded('The group {} has more than {} elements.'.format(name or 'generated', cap))
        for row in layer:
            for k, product in enumerate(row):
                table[k].append(index[product])
        start = end

    right_table = np.array(table, dtype=np.int64).reshape(len(gens), len(elements))
    group = FiniteGroup(degree, gens, elements, index, right_table, bfs_parents, name=name)
    logger.debug('Generated %s of order %d on %d points.', group.name, group.order, degree)
    return group


def closure(G, generators, limit=None):
    """
    Indices of the subgroup of G generated by the given element indices.
    Stops early and returns None once more than `limit` elements are found.
    """
    generators = [g for g in dict.fromkeys(generators) if g != 0]
    members = {0}
    queue = [0]
    elements = G.elements
    index = G.index
    gens = [elements[g] for g in generators]
    while queue:
        x = elements[queue.pop()]
        for g in gens:
            product = index[tuple(map(g.__getitem__, x))]
            if product not in members:
                members.add(product)
                queue.append(product)
                if limit is not None and len(members) > limit:
                    return None
    return frozenset(members)


def greedy_generators(G, members):
    """
    A small generating set of the subgroup with the given members, picking
    elements of largest order first.
    """
    orders = G.element_orders()
    candidates = sorted((i for i in members if i != 0), key=lambda i: (-orders[i], i))
    generators = []
    span = frozenset([0])
    for candidate in candidates:
        if len(span) == len(members):
            break
        if candidate in span:
            continue
        generators.append(candidate)
        span = closure(G, generators)
    return generators


class Subgroup(object):
    """
    A subgroup of `parent` stored as the set of its element indices.
    """
    def __init__(self, parent, members, generators=None):
        self.parent = parent
        self.members = frozenset(members)
        self.order = len(self.members)
        self._generators = list(generators) if generators is not None else None
        self._group = None

    def __repr__(self):
        return '<Subgroup of {} order={}>'.format(self.parent.name, self.order)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __contains__(self, i):
        return i in self.members

    def __le__(self, other):
        _check_parents(self, other)
        return self.members <= other.members

    def __lt__(self, other):
        _check_parents(self, other)
        return self.members < other.members

    @property
    def generators(self):
        if self._generators is None:
            self._generators = greedy_generators(self.parent, self.members)
        return self._generators

    def is_trivial(self):
        return self.order == 1

    def is_whole(self):
        return self.order == self.parent.order

    def sorted_members(self):
        return sorted(self.members)

    def perms(self):
        return [self.parent.elements[i] for i in self.sorted_members()]

    def as_group(self, name=None):
        """
        This subgroup as a FiniteGroup in its own right, on the same points.
        """
        if self._group is None:
            perms = [self.parent.elements[g] for g in self.generators]
            self._group = generate(self.parent.degree, perms, cap=max(self.order, 1), name=name or '{}-sub{}'.format(self.parent.name, self.order))
        return self._group


def _check_parents(A, B):
    if A.parent is not B.parent:
        raise ParentMismatch('The subgroups live in different groups ({} and {}).'.format(A.parent.name, B.parent.name))


def embed(G, H):
    """
    Re-indexes a subgroup of another group on the same points inside G, e.g.
    a subgroup of `N.as_group()` carried back to the parent of N, or the
    other way round.
    """
    return G.subgroup_from_perms(H.perms(), generators=[H.parent.elements[g] for g in H.generators])


@dataclass(frozen=True)
class SeriesTag(object):
    kind: str
    chain: tuple


@dataclass(frozen=True)
class ProductSet(object):
    parent: FiniteGroup
    members: frozenset
    is_subgroup: bool

    def as_subgroup(self):
        if not self.is_subgroup:
            raise ClassGraphException('The product set is not a subgroup.')
        return Subgroup(self.parent, self.members)


def conjugation_orbits(G, within=None):
    """
    Splits `within` (default: all of G; it must be a union of G-classes)
    into orbits under conjugation by G, in order of smallest member.
    """
    lists = G.conjugation_lists()
    remaining = sorted(within) if within is not None else range(G.order)
    seen = set()
    orbits = []
    for start in remaining:
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        position = 0
        while position < len(orbit):
            x = orbit[position]
            position += 1
            for row in lists:
                y = row[x]
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        orbits.append(frozenset(orbit))
    return orbits


def conjugacy_classes(G):
    return G.memo('classes', lambda: conjugation_orbits(G))


def centralizer(G, x):
    x = G.index_of(x)
    element = G.elements[x]
    members = [
        i for i, g in enumerate(G.elements)
        if perm_mul(g, element) == perm_mul(element, g)
    ]
    return Subgroup(G, members)


def centralizer_of_subgroup(G, H):
    generators = [G.elements[h] for h in H.generators]
    members = [
        i for i, g in enumerate(G.elements)
        if all(perm_mul(g, h) == perm_mul(h, g) for h in generators)
    ]
    return Subgroup(G, members)


def center(G):
    return G.memo('center', lambda: centralizer_of_subgroup(G, G.whole()))


def normalizer(G, H):
    generators = [G.elements[h] for h in H.generators]
    members = []
    for i, g in enumerate(G.elements):
        g_inverse = perm_inverse(g)
        if all(G.index[perm_mul(perm_mul(g_inverse, h), g)] in H.members for h in generators):
            members.append(i)
    return Subgroup(G, members)


def is_normal(G, H):
    if H.parent is not G:
        raise ParentMismatch('The subgroup does not belong to {}.'.format(G.name))
    lists = G.conjugation_lists()
    return all(row[h] in H.members for row in lists for h in H.generators)


def is_abelian(G):
    return G.memo('abelian', lambda: all(
        perm_mul(a, b) == perm_mul(b, a)
        for position, a in enumerate(G.generators)
        for b in G.generators[position + 1:]
    ))


def is_cyclic(G):
    return G.order in G.element_orders()


def normal_closure(G, xs, within=None):
    """
    The smallest subgroup containing `xs` that is normalised by `within`
    (default: all of G).
    """
    if within is None or within.is_whole():
        lists = G.conjugation_lists()
        conjugators = None
    else:
        lists = None
        conjugators = within.generators
    generators = [G.index_of(x) for x in xs]
    members = closure(G, generators)
    changed = True
    while changed:
        changed = False
        for h in list(generators):
            if lists is not None:
                images = [row[h] for row in lists]
            else:
                images = [G.conjugate(h, g) for g in conjugators]
            for image in images:
                if image not in members:
                    generators.append(image)
                    members = closure(G, generators)
                    changed = True
    return Subgroup(G, members, generators=[g for g in generators if g != 0])


def join(G, A, B):
    generators = list(A.generators) + [g for g in B.generators if g not in A.members]
    return Subgroup(G, closure(G, generators), generators=generators)


def normal_subgroups(G):
    """
    All normal subgroups of G sorted by order. A normal subgroup is a union of
    conjugacy classes, so every one of them is a join of normal closures of
    single classes.
    """
    def compute():
        closures = []
        for orbit in conjugacy_classes(G):
            representative = min(orbit)
            if representative == 0:
                continue
            candidate = normal_closure(G, [representative])
            if candidate not in closures:
                closures.append(candidate)
        found = {G.trivial().members: G.trivial()}
        for candidate in closures:
            found.setdefault(candidate.members, candidate)
        frontier = list(found.values())
        while frontier:
            next_frontier = []
            for subgroup in frontier:
                for candidate in closures:
                    if candidate.members <= subgroup.members:
                        continue
                    joined = join(G, subgroup, candidate)
                    if joined.members not in found:
                        found[joined.members] = joined
                        next_frontier.append(joined)
            frontier = next_frontier
        result = sorted(found.values(), key=lambda H: (H.order, sorted(H.members)))
        logger.debug('%s has %d normal subgroups.', G.name, len(result))
        return result
    return G.memo('normal_subgroups', compute)


def minimal_normal_subgroups(G):
    nontrivial = [H for H in normal_subgroups(G) if not H.is_trivial()]
    return [
        H for H in nontrivial
        if not any(K.members < H.members for K in nontrivial)
    ]


class QuotientMap(object):
    """
    G -> G/N realised by the action of G on the right cosets of N.
    """
    def __init__(self, G, N):
        if N.parent is not G:
            raise ParentMismatch('The kernel does not belong to {}.'.format(G.name))
        if not is_normal(G, N):
            raise NotNormal('Cannot build the quotient of {} by a subgroup that is not normal.'.format(G.name))
        self.parent = G
        self.kernel = N
        coset_of = [-1] * G.order
        representatives = []
        kernel_elements = [G.elements[n] for n in N.sorted_members()]
        for i, x in enumerate(G.elements):
            if coset_of[i] >= 0:
                continue
            label = len(representatives)
            representatives.append(i)
            for n in kernel_elements:
                coset_of[G.index[perm_mul(n, x)]] = label
        self.coset_of = coset_of
        self.representatives = representatives
        index = len(representatives)
        degree = max(index, 1)
        gens = [
            tuple(coset_of[int(right[r])] for r in representatives)
            for right in G.right_table
        ]
        self.group = generate(degree, gens, cap=index, name='{}/{}'.format(G.name, N.order))
        self.images = G.image_under(self.group.right_table)

    def image(self, i):
        return self.images[i]

    def image_subgroup(self, H):
        return Subgroup(self.group, {self.images[h] for h in H.members})

    def preimage(self, S):
        if S.parent is not self.group:
            raise ParentMismatch('The subgroup does not belong to the quotient group.')
        return Subgroup(self.parent, [i for i, image in enumerate(self.images) if image in S.members])


def quotient_map(G, N):
    return G.memo(('quotient', N.members), lambda: QuotientMap(G, N))


def quotient(G, N):
    return quotient_map(G, N).group


def cyclic_subgroup(G, x):
    return G.subgroup([x])


def sylow(G, p):
    """
    A Sylow p-subgroup grown from a cyclic p-subgroup: while P is too small, a
    p-element of the normaliser of P outside P extends it. Every cyclic
    p-subgroup is tried in turn should an extension ever stall.
    """
    def compute():
        target = p_part(G.order, p)
        if target == 1:
            return G.trivial()
        orders = G.element_orders()
        starts = sorted(
            (i for i in range(1, G.order) if p_part(orders[i], p) == orders[i]),
            key=lambda i: (-orders[i], i),
        )
        for start in starts:
            P = cyclic_subgroup(G, start)
            while P.order < target:
                extension = next(
                    (y for y in sorted(normalizer(G, P).members)
                     if y not in P.members and p_part(orders[y], p) == orders[y]),
                    None,
                )
                if extension is None:
                    break
                P = G.subgroup(list(P.generators) + [extension])
            if P.order == target:
                return P
            logger.warning('Sylow %d-search from element %d stalled at order %d.', p, start, P.order)
        raise ClassGraphException('No Sylow {}-subgroup found in {}.'.format(p, G.name))
    return G.memo(('sylow', p), compute)


def is_p_subgroup(H, p):
    return p_part(H.order, p) == H.order


def o_p(G, p):
    """
    The largest normal p-subgroup of G.
    """
    def compute():
        if p_part(G.order, p) == G.order:
            return G.whole()
        p_subgroups = [H for H in normal_subgroups(G) if is_p_subgroup(H, p)]
        return max(p_subgroups, key=lambda H: H.order)
    return G.memo(('o_p', p), compute)


def fitting_subgroup(G):
    def compute():
        F = G.trivial()
        for p in prime_factors_of_order(G):
            F = join(G, F, o_p(G, p))
        return F
    return G.memo('fitting', compute)


def prime_factors_of_order(G):
    return prime_factors(G.order)


def _derived_of(G, H):
    generators = H.generators
    commutators = {
        G.commutator(a, b)
        for position, a in enumerate(generators)
        for b in generators[position + 1:]
    }
    commutators.discard(0)
    if not commutators:
        return G.trivial()
    return normal_closure(G, sorted(commutators), within=H)


def derived_subgroup(G):
    return G.memo('derived', lambda: _derived_of(G, G.whole()))


def derived_series(G):
    def compute():
        chain = [G.whole()]
        while True:
            current = chain[-1]
            following = derived_subgroup(G) if current.is_whole() else _derived_of(G, current)
            if following == current:
                break
            chain.append(following)
        return SeriesTag(kind='derived_series', chain=tuple(chain))
    return G.memo('derived_series', compute)


def is_solvable(G):
    return derived_series(G).chain[-1].is_trivial()


def element_order(G, x):
    return G.element_orders()[G.index_of(x)]


def exponent(G):
    return lcm(set(G.element_orders()))


def order_spectrum(G):
    return dict(sorted(Counter(G.element_orders()).items()))


def subgroup_exponent(H):
    orders = H.parent.element_orders()
    return lcm({orders[h] for h in H.members})


def intersection(A, B):
    _check_parents(A, B)
    return Subgroup(A.parent, A.members & B.members)


def product_set(A, B):
    _check_parents(A, B)
    G = A.parent
    a_elements = [G.elements[a] for a in A.members]
    b_elements = [G.elements[b] for b in B.members]
    ab = frozenset(G.index[perm_mul(a, b)] for a in a_elements for b in b_elements)
    ba = frozenset(G.index[perm_mul(b, a)] for a in a_elements for b in b_elements)
    return ProductSet(parent=G, members=ab, is_subgroup=ab == ba)


def is_abelian_subgroup(H):
    G = H.parent
    generators = [G.elements[g] for g in H.generators]
    return all(
        perm_mul(a, b) == perm_mul(b, a)
        for position, a in enumerate(generators)
        for b in generators[position + 1:]
    )


def is_cyclic_subgroup(H):
    orders = H.parent.element_orders()
    return H.order in {orders[h] for h in H.members}


def group_to_dict(G):
    return {
        'name': G.name,
        'degree': G.degree,
        'generators': [list(g) for g in G.generators],
    }


def homomorphism_from_images(source, target, images):
    """
    Extends generator images (indices into `target`) along the enumeration
    of `source`. Returns the index map, or None when the images do not
    respect the relations of `source`.
    """
    if len(images) != len(source.generators):
        raise ClassGraphException('Expected {} generator images, got {}.'.format(len(source.generators), len(images)))
    images = [target.index_of(image) for image in images]
    mapping = source.image_under([
        [target.mul(t, image) for t in range(target.order)]
        for image in images
    ])
    for k, image in enumerate(images):
        row = source.right_table[k]
        for i in range(source.order):
            if mapping[int(row[i])] != target.mul(mapping[i], image):
                return None
    return mapping


def reduce_generators(degree, perms):
    """
    Greedily drops permutations already generated by the ones kept so far.
    """
    kept = []
    span = None
    for perm in perms:
        if span is not None and perm in span:
            continue
        kept.append(tuple(perm))
        span = generate(degree, kept)
    return kept

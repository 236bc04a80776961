"""
Builders for the permutation groups the audits run on, the catalog of worked
examples with their expected class sizes, group files and the audit corpus.

A spec string names a family and its integer parameters, e.g. `dihedral:8`
or `semilinear:5:2:3`; `*` joins factors of a direct product, as in
`sl23*cyclic:2`, and `fixture:<name>` loads `<name>.json` from the fixtures
directory.
"""
import json
import logging
import os
from dataclasses import dataclass, field
from itertools import product
from math import gcd

import numpy as np
from sympy import Matrix, isprime, primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem, gf_strip

from classgraph_library.classes import g_classes
from classgraph_library.exceptions import CapExceeded, InvalidSpec, ParseError
from classgraph_library.permgroup import (
    derived_subgroup,
    from_cycles,
    generate,
    group_to_dict,
    homomorphism_from_images,
    is_abelian,
    order_spectrum,
    reduce_generators,
)
from classgraph_library.settings_helpers import classgraph_config, get_enumeration_cap
from classgraph_library.utils import prime_factors, prime_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupSpec(object):
    family: str
    params: tuple = ()

    def __str__(self):
        if self.family == 'direct_product':
            return '*'.join(str(factor) for factor in self.params)
        return ':'.join([self.family] + [str(param) for param in self.params])


@dataclass
class Construction(object):
    degree: int
    generators: list
    # name -> generating permutations, or a callable taking the built group
    normals: dict = field(default_factory=dict)
    order: int = None


@dataclass
class BuiltGroup(object):
    group: object
    normals: dict
    spec: GroupSpec

    def normal(self, name):
        try:
            return self.normals[name]
        except KeyError:
            raise InvalidSpec('{} has no normal subgroup named {!r} (known: {}).'.format(
                self.group.name, name, ', '.join(sorted(self.normals))))


@dataclass(frozen=True)
class CatalogEntry(object):
    name: str
    spec: GroupSpec
    normal: str
    expected_sizes: tuple
    expected_order: int
    note: str = ''


def _require(condition, message, *args):
    if not condition:
        raise InvalidSpec(message.format(*args))


def _require_prime(p):
    _require(isinstance(p, int) and isprime(p), '{} is not a prime.', p)


def cyclic(n):
    _require(n >= 1, 'A cyclic group needs n >= 1, got {}.', n)
    if n == 1:
        return Construction(1, [])
    return Construction(n, [tuple(list(range(1, n)) + [0])])


def dihedral(order):
    _require(order >= 6 and order % 2 == 0, 'The dihedral order must be even and at least 6, got {}.', order)
    n = order // 2
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return Construction(n, [rotation, reflection], {'rotations': [rotation]})


def dicyclic(order):
    """
    <a, x | a^2m = 1, x^2 = a^m, a^x = a^-1> on its own elements a^i x^j.
    """
    _require(order >= 8 and order % 4 == 0, 'The dicyclic order must be a multiple of 4 and at least 8, got {}.', order)
    m = order // 4

    def point(i, j):
        return i % (2 * m) + 2 * m * j

    a = [0] * order
    x = [0] * order
    for i in range(2 * m):
        a[point(i, 0)] = point(i + 1, 0)
        a[point(i, 1)] = point(i - 1, 1)
        x[point(i, 0)] = point(i, 1)
        x[point(i, 1)] = point(i + m, 0)
    return Construction(order, [tuple(a), tuple(x)], {'cyclic': [tuple(a)]})


def quaternion(order):
    power = prime_power(order)
    _require(power is not None and power[0] == 2 and order >= 8, 'A generalized quaternion group has order 2^k >= 8, got {}.', order)
    return dicyclic(order)


def symmetric(n):
    _require(n >= 1, 'A symmetric group needs n >= 1, got {}.', n)
    if n == 1:
        return Construction(1, [])
    if n == 2:
        return Construction(2, [(1, 0)])
    transposition = from_cycles(n, [(0, 1)])
    cycle = from_cycles(n, [tuple(range(n))])
    return Construction(n, [transposition, cycle], {'A{}'.format(n): derived_subgroup})


def alternating(n):
    _require(n >= 3, 'An alternating group needs n >= 3, got {}.', n)
    gens = [from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        long_cycle = tuple(range(n)) if n % 2 else tuple(range(1, n))
        gens.append(from_cycles(n, [long_cycle]))
    normals = {'V4': derived_subgroup} if n == 4 else {}
    return Construction(n, gens, normals)


def _vectors(p, n):
    codes = np.arange(p ** n)
    return np.stack([(codes // p ** i) % p for i in range(n)], axis=1), p ** np.arange(n)


def _as_perm(codes):
    return tuple(int(code) for code in codes)


def general_linear_generators(p, n):
    if n == 1:
        return [[[int(primitive_root(p))]]] if p > 2 else []
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                transvection = np.eye(n, dtype=int)
                transvection[i][j] = 1
                gens.append(transvection.tolist())
    if p > 2:
        diagonal = np.eye(n, dtype=int)
        diagonal[0][0] = int(primitive_root(p))
        gens.append(diagonal.tolist())
    return gens


def _check_matrices(p, n, matrices):
    for matrix in matrices:
        _require(np.shape(matrix) == (n, n), 'Expected {0}x{0} matrices, got {1}.', n, matrix)
        _require(Matrix(matrix).det() % p != 0, 'The matrix {} is not invertible mod {}.', matrix, p)


def affine(p, n, matrices=None):
    """
    Translations of GF(p)^n together with v -> Mv for the given matrices
    (default: generators of GL(n, p)), acting on the p^n vectors.
    """
    _require_prime(p)
    _require(n >= 1, 'The dimension must be at least 1, got {}.', n)
    if matrices is None:
        matrices = general_linear_generators(p, n)
    _check_matrices(p, n, matrices)
    vectors, weights = _vectors(p, n)
    translations = [_as_perm(((vectors + unit) % p) @ weights) for unit in np.eye(n, dtype=int)]
    linear = [_as_perm(((vectors @ np.array(matrix, dtype=int).T) % p) @ weights) for matrix in matrices]
    return Construction(p ** n, translations + linear, {'translations': translations})


def elementary_abelian(p, k):
    return affine(p, k, matrices=[])


def _linear_on_nonzero(p, n, matrices):
    vectors, weights = _vectors(p, n)
    perms = []
    for matrix in matrices:
        images = ((vectors @ np.array(matrix, dtype=int).T) % p) @ weights
        perms.append(tuple(int(code) - 1 for code in images[1:]))
    return perms


SL23_MATRICES = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]
GL23_EXTRA = [[2, 0], [0, 1]]


def sl23():
    return Construction(8, _linear_on_nonzero(3, 2, SL23_MATRICES), {'Q8': derived_subgroup})


def gl23():
    sl = _linear_on_nonzero(3, 2, SL23_MATRICES)
    return Construction(8, sl + _linear_on_nonzero(3, 2, [GL23_EXTRA]), {'SL': sl})


class GaloisField(object):
    """
    GF(p^n) as polynomials modulo the first monic irreducible polynomial of
    degree n. Elements are coded as integers through their coefficients in
    base p, constant term first.
    """
    def __init__(self, p, n):
        _require_prime(p)
        _require(n >= 1, 'The degree must be at least 1, got {}.', n)
        self.p = p
        self.n = n
        self.size = p ** n
        self.modulus = self._first_irreducible()

    def _digits(self, code):
        return [(code // self.p ** i) % self.p for i in range(self.n)]

    def _first_irreducible(self):
        for code in range(self.size):
            candidate = [1] + list(reversed(self._digits(code)))
            if gf_irreducible_p(candidate, self.p, ZZ):
                return candidate
        raise InvalidSpec('No irreducible polynomial of degree {} over GF({}).'.format(self.n, self.p))

    def poly(self, code):
        return gf_strip(list(reversed(self._digits(code))))

    def code(self, poly):
        coefficients = [0] * (self.n - len(poly)) + [int(c) % self.p for c in poly]
        return sum(c * self.p ** i for i, c in enumerate(reversed(coefficients)))

    def add(self, a, b):
        return sum(((x + y) % self.p) * self.p ** i for i, (x, y) in enumerate(zip(self._digits(a), self._digits(b))))

    def mul(self, a, b):
        return self.code(gf_rem(gf_mul(self.poly(a), self.poly(b), self.p, ZZ), self.modulus, self.p, ZZ))

    def power(self, a, exponent):
        return self.code(gf_pow_mod(self.poly(a), exponent, self.modulus, self.p, ZZ))

    def primitive_element(self):
        order = self.size - 1
        for candidate in range(1, self.size):
            if all(self.power(candidate, order // r) != 1 for r in prime_factors(order)):
                return candidate
        raise InvalidSpec('GF({}) has no primitive element.'.format(self.size))

    def translation(self, b):
        return tuple(self.add(x, b) for x in range(self.size))

    def multiplication(self, a):
        return tuple(self.mul(a, x) for x in range(self.size))

    def power_map(self, exponent):
        return tuple(self.power(x, exponent) for x in range(self.size))

    def basis(self):
        return [self.p ** i for i in range(self.n)]


def affine_field(p, n):
    """
    x -> a x + b over GF(p^n).
    """
    F = GaloisField(p, n)
    translations = [F.translation(b) for b in F.basis()]
    return Construction(F.size, translations + [F.multiplication(F.primitive_element())], {'translations': translations})


def semilinear(p, n, s, frobenius_power=1):
    """
    x -> a x^(p^f) + b over GF(p^n), f the Frobenius power. The normal
    subgroup N is the translations extended by the scalars of order s.
    """
    F = GaloisField(p, n)
    _require(s >= 1 and (F.size - 1) % s == 0, '{} does not divide {}.', s, F.size - 1)
    zeta = F.primitive_element()
    translations = [F.translation(b) for b in F.basis()]
    scalars = F.multiplication(F.power(zeta, (F.size - 1) // s))
    gens = translations + [F.multiplication(zeta), F.power_map(p ** frobenius_power)]
    return Construction(F.size, gens, {'translations': translations, 'N': translations + [scalars]})


def frobenius(p, q):
    _require_prime(p)
    _require_prime(q)
    _require((p - 1) % q == 0, '{} does not divide {}.', q, p - 1)
    r = pow(int(primitive_root(p)), (p - 1) // q, p)
    translation = tuple((x + 1) % p for x in range(p))
    return Construction(p, [translation, tuple(r * x % p for x in range(p))], {'kernel': [translation]})


def _heisenberg_point(p, x, y, z):
    return x % p + p * (y % p) + p * p * (z % p)


def extraspecial(p):
    """
    The extraspecial group of order p^3 and exponent p acting on itself:
    (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y').
    """
    _require_prime(p)
    _require(p > 2, 'The exponent-p extraspecial group needs an odd prime, got {}.', p)
    a, c, b = [0] * p ** 3, [0] * p ** 3, [0] * p ** 3
    for x, y, z in product(range(p), repeat=3):
        here = _heisenberg_point(p, x, y, z)
        a[here] = _heisenberg_point(p, x + 1, y, z)
        c[here] = _heisenberg_point(p, x, y + 1, z + x)
        b[here] = _heisenberg_point(p, x, y, z + 1)
    return Construction(p ** 3, [tuple(a), tuple(c)], {'center': [tuple(b)]})


def extraspecial_holomorph(p):
    """
    (P x Z2) extended by the automorphisms of the extraspecial group P that
    fix its centre elementwise. P acts regularly on its own elements, the
    automorphisms act as point maps, and Z2 swaps two extra points.
    """
    expected = 2 * p ** 6 * (p * p - 1)
    cap = get_enumeration_cap()
    if expected > cap:
        raise CapExceeded('The holomorph for p={} has {} elements, more than {}.'.format(p, expected, cap))
    base = extraspecial(p)
    P = generate(p ** 3, base.generators, name='extraspecial:{}'.format(p))
    central = P.index[base.normals['center'][0]]
    automorphisms = []
    for a_image, c_image in product(range(P.order), repeat=2):
        mapping = homomorphism_from_images(P, P, [a_image, c_image])
        if mapping is None or mapping[central] != central or len(set(mapping)) != P.order:
            continue
        automorphisms.append(tuple(mapping))
    logger.debug('Found %d automorphisms of the extraspecial group fixing its centre.', len(automorphisms))
    stabilizer = reduce_generators(P.order, automorphisms)

    swap_points = (P.order, P.order + 1)

    def pad(perm):
        return tuple(perm) + swap_points

    swap = tuple(range(P.order)) + (P.order + 1, P.order)
    translations = [pad(row.tolist()) for row in P.right_table]
    gens = translations + [pad(h) for h in stabilizer] + [swap]
    return Construction(P.order + 2, gens, {'N': translations + [swap], 'P': translations})


def regular_representation(G):
    return Construction(G.order, [tuple(row.tolist()) for row in G.right_table])


def semidirect(N, H, automorphisms):
    """
    N extended by H on the |H|·|N| pairs (h, n) standing for h·n, where
    automorphisms[k] maps each index of N to its conjugate under the k-th
    generator of H. Multiplying by (1, n0) gives (h, n·n0) and by (h0, 1)
    gives (h·h0, n^h0).
    """
    _require(len(automorphisms) == len(H.generators), 'Expected one automorphism per generator of H.')
    size = N.order

    def point(h, n):
        return h * size + n

    kernel_gens = []
    for row in N.right_table:
        images = [0] * (H.order * size)
        for h, n in product(range(H.order), range(size)):
            images[point(h, n)] = point(h, int(row[n]))
        kernel_gens.append(tuple(images))
    acting_gens = []
    for row, automorphism in zip(H.right_table, automorphisms):
        images = [0] * (H.order * size)
        for h, n in product(range(H.order), range(size)):
            images[point(h, n)] = point(int(row[h]), automorphism[n])
        acting_gens.append(tuple(images))
    return Construction(H.order * size, kernel_gens + acting_gens, {'N': kernel_gens}, order=H.order * size)


def semidirect_cyclic(n, m, r):
    """
    Z_n extended by Z_m whose generator acts as x -> r x.
    """
    _require(n >= 2 and m >= 1, 'Need n >= 2 and m >= 1, got {} and {}.', n, m)
    _require(gcd(r, n) == 1 and pow(r, m, n) == 1, '{} is not a unit of order dividing {} modulo {}.', r, m, n)
    kernel = generate(n, cyclic(n).generators)
    acting = generate(m, cyclic(m).generators)
    power = tuple((x + r) % n for x in range(n))
    automorphism = homomorphism_from_images(kernel, kernel, [kernel.index[power]])
    return semidirect(kernel, acting, [automorphism] * len(acting.generators))


FAMILIES = {
    'cyclic': (cyclic, (1,)),
    'dihedral': (dihedral, (1,)),
    'dicyclic': (dicyclic, (1,)),
    'quaternion': (quaternion, (1,)),
    'symmetric': (symmetric, (1,)),
    'alternating': (alternating, (1,)),
    'elementary_abelian': (elementary_abelian, (2,)),
    'affine': (affine, (2,)),
    'affine_field': (affine_field, (2,)),
    'semilinear': (semilinear, (3, 4)),
    'frobenius': (frobenius, (2,)),
    'extraspecial': (extraspecial, (1,)),
    'extraspecial_holomorph': (extraspecial_holomorph, (1,)),
    'sl23': (sl23, (0,)),
    'gl23': (gl23, (0,)),
    'semidirect_cyclic': (semidirect_cyclic, (3,)),
}


def _shift(perm, offset, degree):
    images = list(range(degree))
    for point, image in enumerate(perm):
        images[offset + point] = offset + image
    return tuple(images)


def _build_product(spec, cap, fixtures_dir):
    factors = [build(factor, cap=cap, fixtures_dir=fixtures_dir) for factor in spec.params]
    degree = sum(factor.group.degree for factor in factors)
    offsets = np.cumsum([0] + [factor.group.degree for factor in factors]).tolist()
    gens = [
        _shift(perm, offset, degree)
        for factor, offset in zip(factors, offsets)
        for perm in factor.group.generators
    ]
    G = generate(degree, gens, cap=cap, name=str(spec))
    normals = {'G': G.whole(), '1': G.trivial()}
    for names in product(*[sorted(factor.normals) for factor in factors]):
        if all(name == 'G' for name in names) or all(name == '1' for name in names):
            continue
        parts = []
        for factor, offset, name in zip(factors, offsets, names):
            H = factor.normals[name]
            parts.extend(_shift(factor.group.elements[g], offset, degree) for g in H.generators)
        normals['x'.join(names)] = G.subgroup(parts)
    return BuiltGroup(group=G, normals=normals, spec=spec)


def build(spec, cap=None, fixtures_dir=None):
    """
    Builds the group a spec describes together with its named normal
    subgroups; 'G' and '1' always name the whole and the trivial subgroup.
    """
    if isinstance(spec, str):
        spec = parse_builtin(spec)
    if spec.family == 'direct_product':
        return _build_product(spec, cap, fixtures_dir)
    if spec.family == 'fixture':
        return ingest_built(resolve_fixture(spec.params[0], fixtures_dir), cap=cap)
    try:
        builder, arities = FAMILIES[spec.family]
    except KeyError:
        raise InvalidSpec('Unknown group family {!r}; known families: {}.'.format(spec.family, ', '.join(sorted(FAMILIES))))
    _require(len(spec.params) in arities, '{} takes {} parameter(s), got {}.', spec.family, ' or '.join(str(a) for a in arities), len(spec.params))
    construction = builder(*spec.params)
    G = generate(construction.degree, construction.generators, cap=cap, name=str(spec))
    if construction.order is not None and G.order != construction.order:
        raise InvalidSpec('{} generates {} elements instead of {}.'.format(spec, G.order, construction.order))
    normals = {'G': G.whole(), '1': G.trivial()}
    for name, source in construction.normals.items():
        normals[name] = source(G) if callable(source) else G.subgroup(source)
    return BuiltGroup(group=G, normals=normals, spec=spec)


def parse_builtin(text):
    """
    Parses `family:param:...`, optionally prefixed with `builtin:`, with `*`
    separating direct factors.
    """
    if text.startswith('builtin:'):
        text = text[len('builtin:'):]
    factors = []
    for chunk in text.split('*'):
        parts = [part.strip() for part in chunk.split(':')]
        family, raw = parts[0], parts[1:]
        if not family:
            raise InvalidSpec('Empty group family in {!r}.'.format(text))
        if family == 'fixture':
            _require(len(raw) == 1, 'fixture takes a single name, got {!r}.', chunk)
            factors.append(GroupSpec('fixture', (raw[0],)))
            continue
        try:
            params = tuple(int(value) for value in raw)
        except ValueError:
            raise InvalidSpec('Parameters of {!r} must be integers.'.format(chunk))
        factors.append(GroupSpec(family, params))
    if len(factors) == 1:
        return factors[0]
    return GroupSpec('direct_product', tuple(factors))


def parse_group_source(source):
    if source.startswith('builtin:'):
        return parse_builtin(source)
    if source.endswith('.json') or os.path.exists(source):
        return GroupSpec('fixture', (source,))
    raise InvalidSpec('{!r} is neither a builtin spec nor a group file.'.format(source))


def resolve_fixture(name, fixtures_dir=None):
    if name.endswith('.json') or os.sep in name:
        return name
    fixtures_dir = fixtures_dir or classgraph_config()['FIXTURES_DIR']
    return os.path.join(fixtures_dir, '{}.json'.format(name))


def load_group_file(path):
    try:
        with open(path) as handle:
            data = json.load(handle)
    except (OSError, ValueError) as exc:
        raise ParseError('Cannot read the group file {}: {}'.format(path, exc))
    if not isinstance(data, dict):
        raise ParseError('{} must hold a JSON object.'.format(path))
    degree = data.get('degree')
    generators = data.get('generators')
    if not isinstance(degree, int) or not isinstance(generators, list):
        raise ParseError('{} needs an integer "degree" and a "generators" list.'.format(path))
    if not all(isinstance(g, list) and all(isinstance(i, int) for i in g) for g in generators):
        raise ParseError('Every generator in {} must be a list of integers.'.format(path))
    normals = data.get('normal_subgroups', {})
    if not isinstance(normals, dict):
        raise ParseError('"normal_subgroups" in {} must be an object.'.format(path))
    data.setdefault('name', os.path.splitext(os.path.basename(path))[0])
    return data


def ingest(path, cap=None):
    data = load_group_file(path)
    return generate(data['degree'], data['generators'], cap=cap, name=data['name'])


def ingest_built(path, cap=None):
    data = load_group_file(path)
    G = generate(data['degree'], data['generators'], cap=cap, name=data['name'])
    normals = {'G': G.whole(), '1': G.trivial()}
    for name, gens in sorted(data.get('normal_subgroups', {}).items()):
        normals[name] = G.subgroup(gens)
    return BuiltGroup(group=G, normals=normals, spec=GroupSpec('fixture', (path,)))


def write_group(path, G, normals=None):
    data = group_to_dict(G)
    if normals:
        data['normal_subgroups'] = {
            name: [list(G.elements[g]) for g in H.generators]
            for name, H in sorted(normals.items())
            if name not in ('G', '1')
        }
    with open(path, 'w') as handle:
        json.dump(data, handle, indent=2, sort_keys=True)
        handle.write('\n')


def example_catalog():
    """
    The worked examples: a group, a named normal subgroup and the multiset
    of class sizes that subgroup must split into.
    """
    spec = parse_builtin
    return [
        CatalogEntry('sl23-q8', spec('sl23'), 'Q8', (1, 1, 6), 24),
        CatalogEntry('s4-a4', spec('symmetric:4'), 'A4', (1, 3, 8), 24),
        CatalogEntry('sl23xz2-q8xz2', spec('sl23*cyclic:2'), 'Q8xG', (1, 1, 1, 1, 6, 6), 48),
        CatalogEntry('agl23xz2-translationsxz2', spec('affine:3:2*cyclic:2'), 'translationsxG', (1, 1, 8, 8), 864),
        CatalogEntry('extraspecial27-holomorph', spec('extraspecial_holomorph:3'), 'N', (1, 1, 1, 1, 1, 1, 24, 24), 11664),
        CatalogEntry('semilinear25-s3', spec('semilinear:5:2:3'), 'N', (1, 24, 50), 1200),
        CatalogEntry(
            'semilinear49-s3', spec('semilinear:7:2:3'), 'N', (1, 48, 49, 49), 4704,
            note='3 divides 7 - 1, so the Frobenius map fixes the order-3 scalars and their class splits.',
        ),
        CatalogEntry('a4-a4', spec('alternating:4'), 'G', (1, 3, 4, 4), 12),
        CatalogEntry('sg-324-8', spec('fixture:sg_324_8'), 'N', (1, 2, 3, 3), 324),
        CatalogEntry('d8-d8', spec('dihedral:8'), 'G', (1, 1, 2, 2, 2), 8),
        CatalogEntry('q8-q8', spec('quaternion:8'), 'G', (1, 1, 2, 2, 2), 8),
        CatalogEntry('agl17xs3-z7xz3', spec('affine:7:1*symmetric:3'), 'translationsxA3', (1, 2, 6, 12), 252),
        CatalogEntry(
            'z21-by-z6', spec('semidirect_cyclic:21:6:17'), 'N', (1, 2, 6, 6, 6), 126,
            note='Z6 acting on Z7 x Z3 through Z6 x Z2 only: the abelian N has classes of size at most 6.',
        ),
        CatalogEntry('sl23xz3-q8xz3', spec('sl23*cyclic:3'), 'Q8xG', (1, 1, 1, 1, 1, 1, 6, 6, 6), 72),
        CatalogEntry('gl23-sl23', spec('gl23'), 'SL', (1, 1, 6, 8, 8), 48),
        CatalogEntry('semilinear81-s5', spec('semilinear:3:4:5:2'), 'N', (1, 80, 162, 162), 12960),
        CatalogEntry('s5-a5', spec('symmetric:5'), 'A5', (1, 15, 20, 24), 120),
        CatalogEntry('sg-672-1258', spec('fixture:sg_672_1258'), 'N', (1, 3, 7, 21), 672),
        CatalogEntry('agl8xs3-translationsxa3', spec('affine_field:2:3*symmetric:3'), 'translationsxA3', (1, 2, 7, 14), 336),
        CatalogEntry('sg-600-150', spec('fixture:sg_600_150'), 'N', (1, 24, 25, 150), 600),
    ]


SWEEP_SPECS = (
    ['cyclic:{}'.format(n) for n in range(2, 13)]
    + ['elementary_abelian:2:2', 'elementary_abelian:2:3', 'elementary_abelian:3:2']
    + ['dihedral:{}'.format(2 * n) for n in range(3, 21)]
    + ['quaternion:8', 'quaternion:16', 'quaternion:32', 'dicyclic:12', 'dicyclic:20', 'dicyclic:24']
    + ['symmetric:3', 'symmetric:4', 'symmetric:5', 'alternating:4', 'alternating:5']
    + ['sl23', 'gl23', 'extraspecial:3']
    + ['affine_field:2:2', 'affine_field:2:3', 'affine_field:3:2', 'affine_field:5:1', 'affine_field:7:1', 'affine:3:2']
    + ['semilinear:3:2:4', 'semilinear:2:3:7']
)

# Direct factors for the product sweep; every product pairs a factor of
# order at most 6 with another listed factor.
PRODUCT_SMALL_FACTORS = ('cyclic:2', 'cyclic:3', 'cyclic:4', 'elementary_abelian:2:2', 'cyclic:5', 'symmetric:3')
PRODUCT_LARGE_FACTORS = (
    'dihedral:8', 'quaternion:8', 'dihedral:10', 'alternating:4', 'dicyclic:12',
    'frobenius:7:3', 'extraspecial:3', 'sl23', 'symmetric:4',
)


def frobenius_sweep(limit=31):
    primes = [p for p in range(3, limit + 1) if isprime(p)]
    return ['frobenius:{}:{}'.format(p, q) for p in primes for q in prime_factors(p - 1)]


def product_sweep(max_order):
    """
    Non-abelian direct products of the listed factors with order at most
    `max_order`, smallest first.
    """
    groups = {text: build(text).group for text in PRODUCT_SMALL_FACTORS + PRODUCT_LARGE_FACTORS}
    specs = []
    for position, small in enumerate(PRODUCT_SMALL_FACTORS):
        for other in PRODUCT_SMALL_FACTORS[position:] + PRODUCT_LARGE_FACTORS:
            A, B = groups[small], groups[other]
            if is_abelian(A) and is_abelian(B):
                continue
            if A.order * B.order <= max_order:
                specs.append((A.order * B.order, '{}*{}'.format(other, small)))
    return [text for _, text in sorted(specs)]


def fingerprint(G):
    sizes = sorted(c.size for c in g_classes(G, G.whole()))
    return G.order, tuple(sorted(order_spectrum(G).items())), tuple(sizes)


def corpus(max_order, fixtures_dir=None, cap=None):
    """
    Yields (BuiltGroup, provenance) for the catalog entries of order at most
    `max_order` followed by the family sweeps, skipping repeated fingerprints.
    """
    cap = min(cap or get_enumeration_cap(), max_order)
    seen = set()

    def fresh(built):
        key = fingerprint(built.group)
        if key in seen:
            return False
        seen.add(key)
        return True

    for entry in example_catalog():
        if entry.expected_order > max_order:
            continue
        built = build(entry.spec, cap=cap, fixtures_dir=fixtures_dir)
        if fresh(built):
            yield built, 'catalog:{}'.format(entry.name)
    for text in SWEEP_SPECS + frobenius_sweep() + product_sweep(max_order):
        try:
            built = build(parse_builtin(text), cap=cap, fixtures_dir=fixtures_dir)
        except CapExceeded:
            logger.debug('Skipping %s: larger than %d.', text, cap)
            continue
        if fresh(built):
            yield built, 'sweep:{}'.format(text)

"""
Structural predicates on groups: p-groups, CP-groups, Frobenius and
quasi-Frobenius decompositions, the classification of solvable CP-groups,
groups whose elements all have prime order, and fingerprint identification of
the few small groups the audits need.
"""
import logging
from dataclasses import dataclass, field
from math import gcd

from sympy import isprime

from classgraph_library.constants import ComplementTypes, DeaconescuCases, HigmanCases, SmallIdentities
from classgraph_library.exceptions import NotApplicable, NotNormal, ParentMismatch
from classgraph_library.permgroup import (
    FiniteGroup,
    Subgroup,
    center,
    closure,
    conjugacy_classes,
    conjugation_orbits,
    derived_subgroup,
    fitting_subgroup,
    intersection,
    is_abelian,
    is_abelian_subgroup,
    is_cyclic,
    is_cyclic_subgroup,
    is_normal,
    is_solvable,
    normal_subgroups,
    o_p,
    perm_mul,
    quotient,
    quotient_map,
    subgroup_exponent,
    sylow,
)
from classgraph_library.utils import p_part, prime_factors, prime_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrobeniusDecomposition(object):
    group: FiniteGroup
    kernel: Subgroup
    complement: Subgroup
    complement_type: str


@dataclass(frozen=True)
class QuasiFrobeniusDecomposition(object):
    kernel_preimage: Subgroup
    complement_preimage: Subgroup
    kernel_abelian: bool
    complement_abelian: bool
    quotient_decomposition: FrobeniusDecomposition = field(repr=False)

    @property
    def abelian_kernel_and_complement(self):
        return self.kernel_abelian and self.complement_abelian


@dataclass(frozen=True)
class HigmanCase(object):
    p: int
    P: Subgroup
    case: str
    quotient_order: int
    frobenius_evidence: bool


@dataclass(frozen=True)
class DeaconescuCase(object):
    case: str
    fitting_order: int
    derived_order: int
    abelianization_index: int
    equalities_hold: bool


@dataclass(frozen=True)
class SmallIdentity(object):
    tag: str
    evidence: dict


@dataclass(frozen=True)
class ExponentClaims(object):
    quotient_order: int
    exponent: int
    abelian: bool
    elementary_abelian: tuple


def _as_subgroup(H):
    return H.whole() if isinstance(H, FiniteGroup) else H


def is_p_group(G):
    power = prime_power(G.order)
    return power[0] if power else None


def is_elementary_abelian(G):
    """
    Returns (p, rank) when G is abelian of prime exponent p.
    """
    H = _as_subgroup(G)
    power = prime_power(H.order)
    if power is None or not is_abelian_subgroup(H):
        return None
    p, rank = power
    if subgroup_exponent(H) != p:
        return None
    return p, rank


def is_cp_group(G):
    return all(prime_power(order) is not None for order in set(G.element_orders()) if order > 1)


def all_elements_prime_order(G):
    return all(isprime(order) for order in set(G.element_orders()) if order > 1)


def is_nilpotent(G):
    return fitting_subgroup(G).is_whole()


def involution_count(G):
    return G.element_orders().count(2)


def is_generalized_quaternion(G):
    return is_p_group(G) == 2 and involution_count(G) == 1 and not is_cyclic(G)


def _order_modulo(H, Z, h):
    G = H.parent
    power = h
    n = 1
    while power not in Z.members:
        power = G.mul(power, h)
        n += 1
    return n


def exponent_claims(H, Z):
    """
    Exponent facts about the quotient H/Z, computed without building it: the
    order of hZ is the least n with h**n in Z.
    """
    H = _as_subgroup(H)
    if H.parent is not Z.parent:
        raise ParentMismatch('The subgroups live in different groups.')
    G = H.parent
    if not Z.members <= H.members or not all(G.conjugate(z, h) in Z.members for z in Z.generators for h in H.generators):
        raise NotNormal('The subgroup of order {} is not normal in the subgroup of order {}.'.format(Z.order, H.order))
    exponent = 1
    for h in H.members:
        n = _order_modulo(H, Z, h)
        exponent = exponent * n // gcd(exponent, n)
    abelian = all(
        G.commutator(a, b) in Z.members
        for position, a in enumerate(H.generators)
        for b in H.generators[position + 1:]
    )
    quotient_order = H.order // Z.order
    elementary = None
    power = prime_power(quotient_order)
    if abelian and power is not None and exponent == power[0]:
        elementary = power
    return ExponentClaims(quotient_order=quotient_order, exponent=exponent, abelian=abelian, elementary_abelian=elementary)


def _class_sizes_of(group):
    sizes = {}
    for orbit in conjugacy_classes(group):
        for member in orbit:
            sizes[member] = len(orbit)
    return sizes


def satisfies_kernel_criterion(N, K):
    """
    True when C_N(k) lies in K for every nontrivial k in K. Comparing
    |C_N(k)| = |N|/|k^N| with |C_K(k)| = |K|/|k^K| decides this, one N-class
    at a time.
    """
    K_group = K.as_group()
    sizes_in_kernel = _class_sizes_of(K_group)
    for orbit in conjugation_orbits(N, K.members):
        k = min(orbit)
        if k == 0:
            continue
        in_kernel = sizes_in_kernel[K_group.index[N.elements[k]]]
        if N.order // len(orbit) != K.order // in_kernel:
            return False
    return True


def _complement_candidates(N, K, m):
    orders = N.element_orders()
    return sorted(
        (i for i in range(1, N.order) if m % orders[i] == 0 and i not in K.members),
        key=lambda i: (-orders[i], i),
    )


def find_complement(N, K):
    """
    A subgroup of order |N:K| meeting K trivially, searched among Sylow
    subgroups, cyclic subgroups and subgroups on two generators.
    """
    m = N.order // K.order
    power = prime_power(m)
    if power is not None:
        H = sylow(N, power[0])
        return H if H.order == m else None
    orders = N.element_orders()
    candidates = _complement_candidates(N, K, m)
    for x in candidates:
        if orders[x] == m:
            return N.subgroup([x])
    top = orders[candidates[0]] if candidates else 1
    for x in (c for c in candidates if orders[c] == top):
        for y in candidates:
            members = closure(N, [x, y], limit=m)
            if members is not None and len(members) == m and not (members & K.members) - {0}:
                return Subgroup(N, members, generators=[x, y])
    return None


def complement_type(H):
    group = H.as_group()
    power = prime_power(H.order)
    if power is not None and is_cyclic(group):
        if power[1] == 1:
            return ComplementTypes.CYCLIC_Q
        if power[1] == 2:
            return ComplementTypes.CYCLIC_Q2
    if identify_small(group).tag == SmallIdentities.Q8:
        return ComplementTypes.QUATERNION8
    return ComplementTypes.OTHER


def verify_frobenius(decomposition):
    N = decomposition.group
    K = decomposition.kernel
    H = decomposition.complement
    if not (1 < K.order < N.order and is_normal(N, K)):
        return False
    if K.order * H.order != N.order or intersection(K, H).order != 1:
        return False
    if not is_nilpotent(K.as_group()):
        return False
    if closure(N, H.generators) != H.members:
        return False
    kernel_elements = [N.elements[k] for k in K.members if k != 0]
    for h in H.members:
        if h == 0:
            continue
        element = N.elements[h]
        if any(perm_mul(element, k) == perm_mul(k, element) for k in kernel_elements):
            return False
    return True


def frobenius_decompose(N):
    """
    Finds the Frobenius kernel among the normal subgroups of N through the
    centraliser criterion, then a complement. Returns None when N is not a
    Frobenius group.
    """
    def compute():
        if N.order < 6 or not center(N).is_trivial():
            return None
        for K in normal_subgroups(N):
            if K.is_trivial() or K.is_whole():
                continue
            if gcd(K.order, N.order // K.order) != 1:
                continue
            if not satisfies_kernel_criterion(N, K):
                continue
            H = find_complement(N, K)
            if H is None:
                logger.debug('No complement found for a kernel of order %d in %s.', K.order, N.name)
                continue
            decomposition = FrobeniusDecomposition(group=N, kernel=K, complement=H, complement_type=complement_type(H))
            if verify_frobenius(decomposition):
                logger.debug('%s is Frobenius with kernel %d and complement %d.', N.name, K.order, H.order)
                return decomposition
        return None
    return N.memo('frobenius', compute)


def quasi_frobenius_decompose(N):
    def compute():
        Z = center(N)
        if Z.is_trivial():
            decomposition = frobenius_decompose(N)
            if decomposition is None:
                return None
            K, H = decomposition.kernel, decomposition.complement
        else:
            quotient_of = quotient_map(N, Z)
            decomposition = frobenius_decompose(quotient_of.group)
            if decomposition is None:
                return None
            K = quotient_of.preimage(decomposition.kernel)
            H = quotient_of.preimage(decomposition.complement)
        return QuasiFrobeniusDecomposition(
            kernel_preimage=K,
            complement_preimage=H,
            kernel_abelian=is_abelian_subgroup(K),
            complement_abelian=is_abelian_subgroup(H),
            quotient_decomposition=decomposition,
        )
    return N.memo('quasi_frobenius', compute)


def _all_sylows_cyclic(G):
    return all(is_cyclic_subgroup(sylow(G, p)) for p in prime_factors(G.order))


def higman_classify(N):
    if not is_cp_group(N) or not is_solvable(N):
        raise NotApplicable('{} is not a solvable CP-group.'.format(N.name))
    candidates = [(o_p(N, p), p) for p in prime_factors(N.order)]
    candidates = [(P, p) for P, p in candidates if not P.is_trivial()]
    if not candidates:
        raise NotApplicable('{} has no nontrivial normal subgroup of prime power order.'.format(N.name))
    P, p = max(candidates, key=lambda item: (item[0].order, -item[1]))
    if P.is_whole():
        return HigmanCase(p=p, P=P, case=HigmanCases.EQUAL_P, quotient_order=1, frobenius_evidence=False)

    Q = quotient(N, P)
    q_power = prime_power(Q.order)
    case = HigmanCases.UNMATCHED
    if q_power is not None and q_power[0] != p and is_cyclic(Q):
        case = HigmanCases.CYCLIC_PRIME_POWER
    elif p % 2 == 1 and is_generalized_quaternion(Q):
        case = HigmanCases.GENERALIZED_QUATERNION
    else:
        primes = prime_factors(Q.order)
        if p in primes and len(primes) == 2:
            q = primes[0] if primes[1] == p else primes[1]
            if q % p_part(Q.order, p) == 1 and _all_sylows_cyclic(Q):
                case = HigmanCases.PQ_CYCLIC_SYLOWS
    if case == HigmanCases.PQ_CYCLIC_SYLOWS:
        evidence = frobenius_decompose(Q) is not None
    elif case == HigmanCases.UNMATCHED:
        evidence = False
        logger.warning('%s does not match any solvable CP-group case (O_%d of order %d).', N.name, p, P.order)
    else:
        evidence = frobenius_decompose(N) is not None
    return HigmanCase(p=p, P=P, case=case, quotient_order=Q.order, frobenius_evidence=evidence)


def deaconescu_classify(N):
    """
    Sorts a group whose nontrivial elements all have prime order into the
    p-group case, the four two-prime shapes, or A5, and rechecks the Fitting
    and derived subgroup orders that come with the matched shape.
    """
    if not all_elements_prime_order(N):
        raise NotApplicable('{} has an element of composite order.'.format(N.name))
    fitting_order = fitting_subgroup(N).order
    derived_order = derived_subgroup(N).order
    index = N.order // derived_order

    def result(case, holds):
        return DeaconescuCase(
            case=case,
            fitting_order=fitting_order,
            derived_order=derived_order,
            abelianization_index=index,
            equalities_hold=holds,
        )

    if is_p_group(N) is not None or N.order == 1:
        return result(DeaconescuCases.EXPONENT_P, len(set(N.element_orders()) - {1}) <= 1)
    if identify_small(N).tag == SmallIdentities.A5:
        return result(DeaconescuCases.ALTERNATING5, True)

    factors = {p: prime_power(p_part(N.order, p))[1] for p in prime_factors(N.order)}
    if len(factors) != 2:
        return result(DeaconescuCases.UNMATCHED, False)
    (r, a_r), (s, a_s) = sorted(factors.items())
    if r == 2:
        if a_s == 1 and a_r >= 2:
            two_power = 2 ** a_r
            return result(DeaconescuCases.TWO_POWER_TIMES_P, fitting_order == derived_order == two_power)
        if a_r == 1:
            p_power = s ** a_s
            elementary = is_elementary_abelian(fitting_subgroup(N)) is not None
            return result(DeaconescuCases.TWICE_P_POWER, fitting_order == derived_order == p_power and elementary)
        return result(DeaconescuCases.UNMATCHED, False)
    if a_s == 1 and a_r >= 3:
        # |N| = p^a q with p < q
        if fitting_order == r ** a_r:
            return result(DeaconescuCases.FROBENIUS_SMALL_P, derived_order == r ** a_r)
        return result(DeaconescuCases.SMALL_P_LARGE_Q, fitting_order == r ** (a_r - 1) and index == r)
    if a_r == 1:
        # |N| = p^a q with q < p
        return result(DeaconescuCases.SMALL_Q_LARGE_P, fitting_order == derived_order == s ** a_s)
    return result(DeaconescuCases.UNMATCHED, False)


def identify_small(G):
    """
    Fingerprints that separate the four groups the audits name:

    * order 8 and nonabelian leaves Q8 (one involution) and D8 (five);
    * A5 is the only simple group of order 60;
    * a group of order 120 with trivial centre whose derived subgroup is A5
      embeds in Aut(A5) = S5, so it is S5 (A5 x Z2 and SL(2,5) have centres).
    """
    def compute():
        if G.order == 8 and not is_abelian(G):
            involutions = involution_count(G)
            tag = {1: SmallIdentities.Q8, 5: SmallIdentities.D8}.get(involutions, SmallIdentities.NONE)
            return SmallIdentity(tag=tag, evidence={'order': 8, 'involutions': involutions})
        if G.order == 60:
            count = len(normal_subgroups(G))
            tag = SmallIdentities.A5 if count == 2 else SmallIdentities.NONE
            return SmallIdentity(tag=tag, evidence={'order': 60, 'normal_subgroups': count})
        if G.order == 120 and center(G).is_trivial():
            D = derived_subgroup(G)
            if D.order == 60 and identify_small(D.as_group()).tag == SmallIdentities.A5:
                return SmallIdentity(tag=SmallIdentities.S5, evidence={'order': 120, 'center': 1, 'derived': 60})
        return SmallIdentity(tag=SmallIdentities.NONE, evidence={'order': G.order})
    return G.memo('identity', compute)


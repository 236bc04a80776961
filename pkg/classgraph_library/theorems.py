"""
Audits of the structure statements about Γ_G(N) and Γ(G).

Every statement is a check class that says when it applies and lists its
alternative conclusions as named cases. All cases are evaluated, the first
match is reported, and a check passes when some case matches and all of its
side requirements hold. Failures are recorded on the report, never raised.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from joblib import Parallel, delayed

from classgraph_library.classes import build_gamma, classify_shape, components, has_distinct_class_sizes, is_complete, is_real_class
from classgraph_library.constants import (
    TRIANGLE_FREE_ORDINARY_ORDERS,
    Checks,
    ComplementTypes,
    DeaconescuCases,
    HigmanCases,
    Shapes,
    SmallIdentities,
    Verdicts,
)
from classgraph_library.constructions import build, example_catalog
from classgraph_library.exceptions import ClassGraphException
from classgraph_library.permgroup import (
    center,
    centralizer_of_subgroup,
    embed,
    group_to_dict,
    intersection,
    is_abelian,
    is_normal,
    is_solvable,
    normal_subgroups,
    o_p,
    order_spectrum,
    quotient,
    subgroup_exponent,
    sylow,
)
from classgraph_library.signals import check_failed, pair_audited
from classgraph_library.structure import (
    all_elements_prime_order,
    deaconescu_classify,
    exponent_claims,
    frobenius_decompose,
    higman_classify,
    identify_small,
    is_cp_group,
    is_elementary_abelian,
    is_p_group,
    quasi_frobenius_decompose,
)
from classgraph_library.utils import p_part, prime_factors, prime_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult(object):
    check: str
    verdict: str
    case: str = None
    evidence: dict = field(default_factory=dict)
    matched_cases: tuple = ()

    def to_dict(self):
        return {
            'check': self.check,
            'verdict': self.verdict,
            'case': self.case,
            'matched_cases': list(self.matched_cases),
            'evidence': self.evidence,
        }


@dataclass
class AuditReport(object):
    group_name: str
    n_description: str
    n_order: int
    class_sizes: list
    shape: object
    checks: list
    distinct_class_sizes: bool
    counterexample: dict = None

    @property
    def failed(self):
        return [check for check in self.checks if check.verdict == Verdicts.FAIL]

    def verdict_of(self, name):
        for check in self.checks:
            if check.check == name:
                return check
        raise KeyError(name)

    def to_dict(self):
        return {
            'group': self.group_name,
            'normal_subgroup': self.n_description,
            'n_order': self.n_order,
            'class_sizes': list(self.class_sizes),
            'shape': self.shape.tag,
            'graph': {
                'vertices': self.shape.vertices,
                'edges': self.shape.edges,
                'triangles': self.shape.triangles,
                'components': self.shape.components,
            },
            'distinct_class_sizes': self.distinct_class_sizes,
            'checks': [check.to_dict() for check in self.checks],
            'counterexample': self.counterexample,
        }


class PairContext(object):
    """
    The facts about a pair (G, N) that the checks share, computed on demand.
    Subgroups named `*_in_n` live in `n_group` (N as a group on its own),
    the others in G.
    """
    def __init__(self, G, N, description=None):
        self.G = G
        self.N = N
        self.description = description or 'order {}'.format(N.order)
        self.gamma = build_gamma(G, N)
        self.shape = classify_shape(self.gamma)

    @cached_property
    def n_group(self):
        return self.N.as_group()

    @cached_property
    def center(self):
        return center(self.G)

    @cached_property
    def central_part(self):
        return intersection(self.center, self.N)

    @cached_property
    def primes(self):
        return prime_factors(self.N.order)

    @cached_property
    def sizes(self):
        return sorted(self.gamma.class_sizes)

    @cached_property
    def frobenius(self):
        return frobenius_decompose(self.n_group)

    @cached_property
    def quasi_frobenius(self):
        return quasi_frobenius_decompose(self.n_group)

    @cached_property
    def cp_case(self):
        return higman_classify(self.n_group)

    @cached_property
    def prime_order_case(self):
        return deaconescu_classify(self.n_group)

    @property
    def is_empty(self):
        return self.shape.tag == Shapes.EMPTY

    @property
    def p_group_prime(self):
        return is_p_group(self.n_group)

    def sylow_in_n(self, p):
        return sylow(self.n_group, p)

    def sylow_in_g(self, p):
        return embed(self.G, self.sylow_in_n(p))

    def has_normal_sylow(self, p):
        return is_normal(self.n_group, self.sylow_in_n(p))

    def is_central(self, H):
        return H.members <= self.center.members

    def modulo_center(self, H):
        """
        Exponent facts about H/(Z(G) ∩ H) for a subgroup H of N taken in G.
        """
        return exponent_claims(H, intersection(self.center, H))


def _elementary_or_trivial(claims):
    return claims.quotient_order == 1 or claims.elementary_abelian is not None


def _the_other_prime(context, p):
    others = [q for q in context.primes if q != p]
    return others[0] if len(others) == 1 else None


def _central_sylow_of_order(context, q):
    if q not in context.primes:
        return False
    Q = context.sylow_in_g(q)
    return Q.order == q and context.is_central(Q)


def _elementary_sylow_factors(context):
    if len(context.primes) != 2:
        return False
    return all(
        context.has_normal_sylow(p) and is_elementary_abelian(context.sylow_in_n(p)) is not None
        for p in context.primes
    )


def _frobenius_with_prime_complement(context):
    """
    Frobenius with elementary abelian kernel and complement Z_q.
    """
    decomposition = context.frobenius
    return (
        decomposition is not None
        and decomposition.complement_type == ComplementTypes.CYCLIC_Q
        and is_elementary_abelian(decomposition.kernel) is not None
    )


def _frobenius_size_formula(context):
    decomposition = context.frobenius
    kernel, q = decomposition.kernel.order, decomposition.complement.order
    return context.sizes == sorted([1, kernel - 1, kernel * (q - 1)])


def _frobenius_bounded_kernel(context):
    """
    Frobenius with complement Z_q, Z_q^2 or Q8 whose kernel is a p-group of
    exponent at most p^2 (complement Z_q) or elementary abelian (otherwise).
    """
    decomposition = context.frobenius
    if decomposition is None:
        return False
    power = prime_power(decomposition.kernel.order)
    if power is None:
        return False
    if decomposition.complement_type == ComplementTypes.CYCLIC_Q:
        return (power[0] ** 2) % subgroup_exponent(decomposition.kernel) == 0
    if decomposition.complement_type in (ComplementTypes.CYCLIC_Q2, ComplementTypes.QUATERNION8):
        return is_elementary_abelian(decomposition.kernel) is not None
    return False


def _quasi_frobenius_abelian(context):
    decomposition = context.quasi_frobenius
    return decomposition is not None and decomposition.abelian_kernel_and_complement


class BaseCheck(object):
    """
    A statement audited on a pair. Subclasses define `applies`, the ordered
    alternative `cases` as (name, predicate) pairs, and optionally
    `requirements` that must hold whichever case matches and `notes` for
    extra evidence.
    """
    name = None

    def applies(self, context):
        raise NotImplementedError

    def cases(self):
        raise NotImplementedError

    def requirements(self, context):
        return {}

    def notes(self, context):
        return {}

    def evaluate(self, context):
        requirements = self.requirements(context)
        matched = tuple(case for case, predicate in self.cases() if predicate(context))
        if len(matched) > 1:
            logger.warning('%s: several cases match on %s with N=%s: %s', self.name, context.G.name, context.description, ', '.join(matched))
        evidence = dict(self.notes(context))
        if requirements:
            evidence['requirements'] = requirements
        verdict = Verdicts.PASS if matched and all(requirements.values()) else Verdicts.FAIL
        return CheckResult(
            check=self.name,
            verdict=verdict,
            case=matched[0] if matched else None,
            evidence=evidence,
            matched_cases=matched,
        )

    def run(self, context):
        try:
            if not self.applies(context):
                return CheckResult(check=self.name, verdict=Verdicts.NOT_APPLICABLE)
            return self.evaluate(context)
        except ClassGraphException as exc:
            logger.exception('%s raised on %s with N=%s.', self.name, context.G.name, context.description)
            return CheckResult(check=self.name, verdict=Verdicts.FAIL, evidence={'error': str(exc)})


class ComponentBoundCheck(BaseCheck):
    name = Checks.COMPONENT_BOUND

    def applies(self, context):
        return not context.is_empty

    def cases(self):
        return [('at_most_two_components', lambda context: context.shape.components <= 2)]

    def notes(self, context):
        return {'components': context.shape.components}


class DisconnectedStructureCheck(BaseCheck):
    name = Checks.DISCONNECTED_STRUCTURE

    def applies(self, context):
        return context.shape.components == 2

    def cases(self):
        return [
            ('quasi_frobenius_abelian', _quasi_frobenius_abelian),
            ('p_group_times_central', self._p_group_times_central),
        ]

    def _p_group_times_central(self, context):
        # N = P x A with A <= Z(G): every Sylow but one is central in G
        return any(
            all(context.is_central(context.sylow_in_g(q)) for q in context.primes if q != p)
            for p in context.primes
        )


class CompleteComponentsCheck(BaseCheck):
    name = Checks.COMPLETE_COMPONENTS

    def applies(self, context):
        return context.shape.components == 2

    def cases(self):
        return [('complete', lambda context: all(is_complete(context.gamma, part) for part in components(context.gamma)))]


class OneVertexCheck(BaseCheck):
    name = Checks.ONE_VERTEX

    def applies(self, context):
        return context.shape.tag == Shapes.ONE_VERTEX

    def cases(self):
        return [('p_group_elementary_central_quotient', self._holds)]

    def _holds(self, context):
        return context.p_group_prime is not None and _elementary_or_trivial(context.modulo_center(context.N))


class IsolatedPairCenterCheck(BaseCheck):
    name = Checks.ISOLATED_PAIR_CENTER

    def applies(self, context):
        return context.shape.tag == Shapes.TWO_ISOLATED

    def cases(self):
        return [('trivial_central_part', lambda context: context.central_part.is_trivial())]


class IsolatedPairCheck(BaseCheck):
    name = Checks.ISOLATED_PAIR

    def applies(self, context):
        return context.shape.tag == Shapes.TWO_ISOLATED

    def cases(self):
        return [
            ('two_group', lambda context: context.p_group_prime == 2),
            ('frobenius_prime_complement', self._frobenius),
        ]

    def _frobenius(self, context):
        return _frobenius_with_prime_complement(context) and _frobenius_size_formula(context)


class TriangleFreeCenterCheck(BaseCheck):
    name = Checks.TRIANGLE_FREE_CENTER

    def applies(self, context):
        return not context.is_empty and context.shape.triangles == 0 and context.p_group_prime is None

    def cases(self):
        return [
            ('trivial_central_part', lambda context: context.central_part.is_trivial()),
            ('central_two_part_two', lambda context: p_part(context.central_part.order, 2) == 2),
        ]

    def notes(self, context):
        return {'central_part_order': context.central_part.order}


class EdgePairCheck(BaseCheck):
    name = Checks.EDGE_PAIR

    def applies(self, context):
        return context.shape.tag == Shapes.TWO_EDGE

    def cases(self):
        return [
            ('p_group', lambda context: context.p_group_prime is not None),
            ('odd_p_group_times_central_z2', self._times_central_z2),
            ('frobenius_prime_complement', self._frobenius),
        ]

    def _times_central_z2(self, context):
        p = _the_other_prime(context, 2)
        if p is None or 2 not in context.primes or not _central_sylow_of_order(context, 2):
            return False
        if not context.has_normal_sylow(p):
            return False
        return _elementary_or_trivial(context.modulo_center(context.sylow_in_g(p)))

    def _frobenius(self, context):
        return _frobenius_with_prime_complement(context) and _frobenius_size_formula(context)


class ThreeOneEdgeCheck(BaseCheck):
    name = Checks.THREE_ONE_EDGE

    def applies(self, context):
        return context.shape.tag == Shapes.THREE_ONE_EDGE

    def requirements(self, context):
        return {'at_most_two_primes': len(context.primes) <= 2}

    def cases(self):
        return [
            ('p_group', lambda context: context.p_group_prime is not None),
            ('quasi_frobenius_abelian', self._quasi_frobenius),
        ]

    def _quasi_frobenius(self, context):
        return _quasi_frobenius_abelian(context) and context.central_part.order in (1, 2)


class SingleTriangleCheck(BaseCheck):
    name = Checks.SINGLE_TRIANGLE

    def applies(self, context):
        return context.shape.tag == Shapes.TRIANGLE

    def cases(self):
        return [
            ('p_group', lambda context: context.p_group_prime is not None),
            ('elementary_sylow_product', self._elementary_product),
            ('times_central_z3', self._times_central_z3),
            ('central_z2_exponent_p', self._central_z2),
            ('frobenius_or_pq_quotient', self._frobenius_like),
            ('alternating5', self._alternating5),
        ]

    def _elementary_product(self, context):
        return _elementary_sylow_factors(context) and context.central_part.is_trivial()

    def _times_central_z3(self, context):
        p = _the_other_prime(context, 3)
        if p is None or 3 not in context.primes or not _central_sylow_of_order(context, 3):
            return False
        return context.modulo_center(context.sylow_in_g(p)).exponent == p

    def _central_z2(self, context):
        p = _the_other_prime(context, 2)
        if p is None or 2 not in context.primes or context.central_part.order != 2:
            return False
        if subgroup_exponent(context.sylow_in_n(p)) != p:
            return False
        return _elementary_or_trivial(exponent_claims(context.sylow_in_g(2), context.central_part))

    def _frobenius_like(self, context):
        if not context.central_part.is_trivial():
            return False
        decomposition = context.frobenius
        if decomposition is not None and decomposition.complement_type != ComplementTypes.OTHER:
            return True
        return any(self._pq_quotient(context, p) for p in context.primes)

    def _pq_quotient(self, context, p):
        # N/O_p(N) Frobenius of order pq with O_p(N) of exponent p
        O = o_p(context.n_group, p)
        if O.is_whole() or subgroup_exponent(O) not in (1, p):
            return False
        index = context.N.order // O.order
        q = index // p if index % p == 0 else None
        if q is None or q == p or prime_power(q) is None or prime_power(q)[1] != 1:
            return False
        return frobenius_decompose(quotient(context.n_group, O)) is not None

    def _alternating5(self, context):
        if identify_small(context.n_group).tag != SmallIdentities.A5:
            return False
        C = centralizer_of_subgroup(context.G, context.N)
        return identify_small(quotient(context.G, C)).tag == SmallIdentities.S5


class ThreeLineCheck(BaseCheck):
    name = Checks.THREE_LINE

    def applies(self, context):
        return context.shape.tag == Shapes.THREE_LINE

    def requirements(self, context):
        return {'trivial_central_part': context.central_part.is_trivial()}

    def cases(self):
        return [
            ('two_group_exponent_at_most_4', lambda context: context.p_group_prime == 2 and 4 % subgroup_exponent(context.N) == 0),
            ('elementary_sylow_product', _elementary_sylow_factors),
            ('frobenius_bounded_kernel', _frobenius_bounded_kernel),
        ]


class TriangleFreeCheck(BaseCheck):
    name = Checks.TRIANGLE_FREE

    def applies(self, context):
        return not context.is_empty and context.shape.triangles == 0

    def requirements(self, context):
        return {
            'solvable': is_solvable(context.n_group),
            'at_most_two_primes': len(context.primes) <= 2,
        }

    def cases(self):
        return [
            ('p_group', lambda context: context.p_group_prime is not None),
            ('times_central_z2', self._times_central_z2),
            ('elementary_sylow_product', self._elementary_product),
            ('quasi_frobenius_central_z2', self._quasi_frobenius),
            ('frobenius_bounded_kernel', _frobenius_bounded_kernel),
        ]

    def notes(self, context):
        notes = {'primes': context.primes}
        if self._times_central_z2(context):
            notes['central_z2_with_prime'] = _the_other_prime(context, 2)
        if self._elementary_product(context):
            notes['odd_primes'] = 2 not in context.primes
        return notes

    def _times_central_z2(self, context):
        return len(context.primes) == 2 and _central_sylow_of_order(context, 2)

    def _elementary_product(self, context):
        return _elementary_sylow_factors(context) and context.central_part.is_trivial()

    def _quasi_frobenius(self, context):
        return _quasi_frobenius_abelian(context) and context.central_part.order == 2


class TriangleFreeSolvableCheck(BaseCheck):
    name = Checks.TRIANGLE_FREE_SOLVABLE

    def applies(self, context):
        return not context.is_empty and context.shape.triangles == 0

    def cases(self):
        return [('solvable', lambda context: is_solvable(context.n_group))]


class TriangleFreeCPCheck(BaseCheck):
    name = Checks.TRIANGLE_FREE_CP

    def applies(self, context):
        return not context.is_empty and context.shape.triangles == 0 and is_cp_group(context.n_group)

    def cases(self):
        return [
            ('p_group', lambda context: context.p_group_prime is not None),
            ('frobenius', lambda context: context.frobenius is not None),
        ]

    def requirements(self, context):
        if not is_solvable(context.n_group):
            return {'solvable': False}
        return {
            'solvable': True,
            'cp_case_matched': context.cp_case.case != HigmanCases.UNMATCHED,
            'no_pq_cyclic_sylow_quotient': context.cp_case.case != HigmanCases.PQ_CYCLIC_SYLOWS,
        }

    def notes(self, context):
        if not is_solvable(context.n_group):
            return {}
        return {'cp_case': context.cp_case.case, 'cp_frobenius_evidence': context.cp_case.frobenius_evidence}


class OddRealClassesCheck(BaseCheck):
    name = Checks.ODD_REAL_CLASSES

    def applies(self, context):
        return not context.N.is_trivial()

    def cases(self):
        return [('odd_real_classes_are_involutions', self._holds)]

    def _odd_real(self, context):
        return [c for c in context.gamma.classes if c.size % 2 and is_real_class(context.G, c)]

    def _holds(self, context):
        return all(c.rep_order <= 2 for c in self._odd_real(context))

    def notes(self, context):
        return {'odd_real_classes': len(self._odd_real(context))}



class PrimeOrderElementsCheck(BaseCheck):
    """
    A normal subgroup whose nontrivial elements all have prime order is one
    of the known shapes, with the Fitting and derived subgroup orders that
    go with it.
    """
    name = Checks.PRIME_ORDER_ELEMENTS

    def applies(self, context):
        return not context.N.is_trivial() and all_elements_prime_order(context.n_group)

    def cases(self):
        return [
            (case, lambda context, case=case: context.prime_order_case.case == case)
            for case in DeaconescuCases.MATCHED
        ]

    def requirements(self, context):
        return {'orders_hold': context.prime_order_case.equalities_hold}

    def notes(self, context):
        return {
            'fitting_order': context.prime_order_case.fitting_order,
            'derived_order': context.prime_order_case.derived_order,
        }


class OrdinaryTriangleCheck(BaseCheck):
    name = Checks.ORDINARY_TRIANGLE

    def applies(self, context):
        return context.shape.tag == Shapes.TRIANGLE

    def cases(self):
        return [
            ('quaternion8', lambda context: identify_small(context.G).tag == SmallIdentities.Q8),
            ('dihedral8', lambda context: identify_small(context.G).tag == SmallIdentities.D8),
        ]


class OrdinaryTriangleFreeCheck(BaseCheck):
    name = Checks.ORDINARY_TRIANGLE_FREE

    def applies(self, context):
        return not context.is_empty and context.shape.triangles == 0

    def cases(self):
        return [('listed_order', lambda context: context.G.order in TRIANGLE_FREE_ORDINARY_ORDERS and not is_abelian(context.G))]

    def notes(self, context):
        return {'order': context.G.order}


A4_SPECTRUM = {1: 1, 2: 3, 3: 8}
FORBIDDEN_ORDINARY_SHAPES = (Shapes.ONE_VERTEX, Shapes.TWO_EDGE, Shapes.THREE_LINE)


class OrdinarySmallShapesCheck(BaseCheck):
    name = Checks.ORDINARY_SMALL_SHAPES

    def applies(self, context):
        return not context.is_empty

    def cases(self):
        return [
            ('unrestricted_shape', lambda context: context.shape.tag not in FORBIDDEN_ORDINARY_SHAPES + (Shapes.THREE_ONE_EDGE,)),
            ('dihedral10', self._dihedral10),
            ('alternating4', self._alternating4),
        ]

    def _dihedral10(self, context):
        return context.shape.tag == Shapes.THREE_ONE_EDGE and context.G.order == 10 and not is_abelian(context.G)

    def _alternating4(self, context):
        G = context.G
        return (
            context.shape.tag == Shapes.THREE_ONE_EDGE
            and G.order == 12
            and center(G).is_trivial()
            and order_spectrum(G) == A4_SPECTRUM
        )

    def notes(self, context):
        return {'shape': context.shape.tag}


UNIVERSAL_CHECKS = (
    ComponentBoundCheck(),
    DisconnectedStructureCheck(),
    CompleteComponentsCheck(),
    OddRealClassesCheck(),
    PrimeOrderElementsCheck(),
)
ONE_VERTEX_CHECKS = (OneVertexCheck(),)
TWO_ISOLATED_CHECKS = (IsolatedPairCenterCheck(), IsolatedPairCheck())
TWO_EDGE_CHECKS = (EdgePairCheck(),)
THREE_VERTEX_CHECKS = (ThreeOneEdgeCheck(), SingleTriangleCheck(), ThreeLineCheck())
TRIANGLE_FREE_CHECKS = (TriangleFreeCenterCheck(), TriangleFreeCheck(), TriangleFreeSolvableCheck(), TriangleFreeCPCheck())
ORDINARY_CHECKS = (OrdinaryTriangleCheck(), OrdinaryTriangleFreeCheck(), OrdinarySmallShapesCheck())


def _counterexample(G, N):
    return {
        'group': group_to_dict(G),
        'normal_members': N.sorted_members(),
        'normal_generators': [list(G.elements[g]) for g in N.generators],
    }


def _report(context, checks):
    results = sorted((check.run(context) for check in checks), key=lambda result: _CHECK_ORDER[result.check])
    report = AuditReport(
        group_name=context.G.name,
        n_description=context.description,
        n_order=context.N.order,
        class_sizes=context.gamma.class_sizes,
        shape=context.shape,
        checks=results,
        distinct_class_sizes=has_distinct_class_sizes(context.gamma.classes),
    )
    if report.failed:
        report.counterexample = _counterexample(context.G, context.N)
    return report


_CHECK_ORDER = {name: position for position, name in enumerate(Checks.PAIR_CHECKS + Checks.ORDINARY_CHECKS)}


def _context(G, N, description=None, context=None):
    return context if context is not None else PairContext(G, N, description)


def audit_universal(G, N, description=None, context=None):
    return _report(_context(G, N, description, context), UNIVERSAL_CHECKS)


def audit_one_vertex(G, N, description=None, context=None):
    return _report(_context(G, N, description, context), ONE_VERTEX_CHECKS)


def audit_two_isolated(G, N, description=None, context=None):
    return _report(_context(G, N, description, context), TWO_ISOLATED_CHECKS)


def audit_two_edge(G, N, description=None, context=None):
    return _report(_context(G, N, description, context), TWO_EDGE_CHECKS)


def audit_three_vertices(G, N, description=None, context=None):
    return _report(_context(G, N, description, context), THREE_VERTEX_CHECKS)


def audit_triangle_free(G, N, description=None, context=None):
    return _report(_context(G, N, description, context), TRIANGLE_FREE_CHECKS)


PAIR_CHECK_SETS = (
    UNIVERSAL_CHECKS,
    ONE_VERTEX_CHECKS,
    TWO_ISOLATED_CHECKS,
    TWO_EDGE_CHECKS,
    THREE_VERTEX_CHECKS,
    TRIANGLE_FREE_CHECKS,
)


def announce(report):
    pair_audited.send(sender=AuditReport, report=report)
    for check in report.failed:
        check_failed.send(sender=AuditReport, report=report, check=check)


def audit_pair(G, N, description=None, send_signals=True):
    """
    Runs every pair check on (G, N); each one appears exactly once in the
    report, as not-applicable when its graph shape does not occur.
    """
    context = PairContext(G, N, description)
    report = _report(context, [check for checks in PAIR_CHECK_SETS for check in checks])
    if send_signals:
        announce(report)
    return report


def audit_ordinary_graph(G, send_signals=True):
    report = _report(PairContext(G, G.whole(), 'ordinary'), ORDINARY_CHECKS)
    if send_signals:
        announce(report)
    return report


def labelled_normal_subgroups(G, names=None):
    """
    (label, N) for every normal subgroup of G in lattice order; `names` maps
    labels to known normal subgroups, the rest are labelled by position.
    """
    labels = {}
    for name, H in sorted((names or {}).items()):
        labels.setdefault(H.members, name)
    return [
        (labels.get(N.members, 'normal:{}'.format(position)), N)
        for position, N in enumerate(normal_subgroups(G))
    ]


def audit_all(G, names=None, send_signals=True):
    """
    Audits G against each nontrivial normal subgroup, smallest first, and
    then audits Γ(G). `names` maps labels to known normal subgroups.
    """
    reports = []
    for description, N in labelled_normal_subgroups(G, names):
        if N.is_trivial():
            continue
        reports.append(audit_pair(G, N, description, send_signals=send_signals))
    reports.append(audit_ordinary_graph(G, send_signals=send_signals))
    return reports


def audit_built(built, provenance=None):
    logger.debug('Auditing %s (%s).', built.group.name, provenance or 'direct')
    return provenance, audit_all(built.group, built.normals, send_signals=False)


def audit_corpus(groups, jobs=1):
    """
    Audits (BuiltGroup, provenance) pairs, `jobs` at a time, and returns the
    (provenance, reports) list in input order. Signals are sent from the
    calling process once all audits are back.
    """
    results = Parallel(n_jobs=jobs)(delayed(audit_built)(built, provenance) for built, provenance in groups)
    for _, reports in results:
        for report in reports:
            announce(report)
    return results


def summarize(results):
    checks = {name: {Verdicts.PASS: 0, Verdicts.FAIL: 0, Verdicts.NOT_APPLICABLE: 0} for name in _CHECK_ORDER}
    shapes = {}
    pairs = distinct = 0
    failures = []
    for provenance, reports in results:
        for report in reports:
            pairs += 1
            distinct += int(report.distinct_class_sizes)
            shapes[report.shape.tag] = shapes.get(report.shape.tag, 0) + 1
            for check in report.checks:
                checks[check.check][check.verdict] += 1
            failures.extend(
                {'provenance': provenance, 'group': report.group_name, 'normal_subgroup': report.n_description, 'check': check.check}
                for check in report.failed
            )
    return {
        'groups': len(results),
        'reports': pairs,
        'distinct_class_size_reports': distinct,
        'shapes': dict(sorted(shapes.items())),
        'checks': checks,
        'failures': failures,
    }


SHAPE_CHECKS = {
    Shapes.ONE_VERTEX: Checks.ONE_VERTEX,
    Shapes.TWO_ISOLATED: Checks.ISOLATED_PAIR,
    Shapes.TWO_EDGE: Checks.EDGE_PAIR,
    Shapes.THREE_ONE_EDGE: Checks.THREE_ONE_EDGE,
    Shapes.TRIANGLE: Checks.SINGLE_TRIANGLE,
    Shapes.THREE_LINE: Checks.THREE_LINE,
}


@dataclass(frozen=True)
class CatalogRow(object):
    name: str
    expected: tuple
    computed: tuple
    shape: str
    case: str
    failed_checks: tuple
    verdicts: dict = field(default_factory=dict)

    @property
    def matches(self):
        return self.expected == self.computed and not self.failed_checks

    def to_dict(self):
        return {
            'name': self.name,
            'expected': list(self.expected),
            'computed': list(self.computed),
            'shape': self.shape,
            'case': self.case,
            'failed_checks': list(self.failed_checks),
            'verdicts': dict(self.verdicts),
            'match': self.matches,
        }


# The verdicts reported next to every catalog row: the triangle-free
# statement on N and the two statements about the shape of Γ(G).
CATALOG_VERDICTS = (Checks.TRIANGLE_FREE, Checks.SINGLE_TRIANGLE, Checks.ORDINARY_TRIANGLE)


def reproduce_entry(entry, fixtures_dir=None):
    built = build(entry.spec, fixtures_dir=fixtures_dir)
    report = audit_pair(built.group, built.normal(entry.normal), entry.normal)
    ordinary = audit_ordinary_graph(built.group)
    check = SHAPE_CHECKS.get(report.shape.tag)
    results = {result.check: result for result in report.checks + ordinary.checks}
    return CatalogRow(
        name=entry.name,
        expected=tuple(sorted(entry.expected_sizes)),
        computed=tuple(sorted(report.class_sizes)),
        shape=report.shape.tag,
        case=report.verdict_of(check).case if check else None,
        failed_checks=tuple(result.check for result in report.failed + ordinary.failed),
        verdicts={name: results[name].verdict for name in CATALOG_VERDICTS},
    )


def reproduce_catalog(fixtures_dir=None, names=None):
    entries = [entry for entry in example_catalog() if not names or entry.name in names]
    return [reproduce_entry(entry, fixtures_dir=fixtures_dir) for entry in entries]

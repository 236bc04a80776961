DEFAULT_ENUMERATION_CAP = 20000
DEFAULT_MAX_ORDER = 700
ORACLE_MAX_ORDER = 2000


class Shapes(object):
    EMPTY = 'Empty'
    ONE_VERTEX = 'OneVertex'
    TWO_ISOLATED = 'TwoIsolated'
    TWO_EDGE = 'TwoEdge'
    THREE_ONE_EDGE = 'ThreeOneEdge'
    THREE_LINE = 'ThreeLine'
    TRIANGLE = 'Triangle'
    OTHER = 'Other'


class Verdicts(object):
    PASS = 'pass'
    FAIL = 'fail'
    NOT_APPLICABLE = 'not-applicable'


class ComplementTypes(object):
    CYCLIC_Q = 'cyclic_q'
    CYCLIC_Q2 = 'cyclic_q2'
    QUATERNION8 = 'quaternion8'
    OTHER = 'other'


class HigmanCases(object):
    EQUAL_P = 'equal_P'
    CYCLIC_PRIME_POWER = 'cyclic_prime_power'
    GENERALIZED_QUATERNION = 'generalized_quaternion'
    PQ_CYCLIC_SYLOWS = 'pq_cyclic_sylows'
    UNMATCHED = 'unmatched'


class DeaconescuCases(object):
    EXPONENT_P = 'p_group_exponent_p'
    SMALL_P_LARGE_Q = 'p_power_q_small_p'
    SMALL_Q_LARGE_P = 'p_power_q_small_q'
    FROBENIUS_SMALL_P = 'p_power_q_frobenius'
    TWO_POWER_TIMES_P = 'two_power_p'
    TWICE_P_POWER = 'two_p_power'
    ALTERNATING5 = 'alternating5'
    UNMATCHED = 'unmatched'

    MATCHED = (
        EXPONENT_P,
        SMALL_P_LARGE_Q,
        SMALL_Q_LARGE_P,
        FROBENIUS_SMALL_P,
        TWO_POWER_TIMES_P,
        TWICE_P_POWER,
        ALTERNATING5,
    )


class SmallIdentities(object):
    Q8 = 'Q8'
    D8 = 'D8'
    A5 = 'A5'
    S5 = 'S5'
    NONE = 'none'


class Checks(object):
    """
    Names of the audited statements, in evaluation order.
    """
    COMPONENT_BOUND = 'component_bound'
    DISCONNECTED_STRUCTURE = 'disconnected_structure'
    COMPLETE_COMPONENTS = 'complete_components'
    ONE_VERTEX = 'one_vertex'
    ISOLATED_PAIR_CENTER = 'isolated_pair_center'
    ISOLATED_PAIR = 'isolated_pair'
    TRIANGLE_FREE_CENTER = 'triangle_free_center'
    EDGE_PAIR = 'edge_pair'
    THREE_ONE_EDGE = 'three_one_edge'
    SINGLE_TRIANGLE = 'single_triangle'
    THREE_LINE = 'three_line'
    TRIANGLE_FREE = 'triangle_free'
    TRIANGLE_FREE_SOLVABLE = 'triangle_free_solvable'
    TRIANGLE_FREE_CP = 'triangle_free_cp'
    ODD_REAL_CLASSES = 'odd_real_classes'
    PRIME_ORDER_ELEMENTS = 'prime_order_elements'

    PAIR_CHECKS = (
        COMPONENT_BOUND,
        DISCONNECTED_STRUCTURE,
        COMPLETE_COMPONENTS,
        ONE_VERTEX,
        ISOLATED_PAIR_CENTER,
        ISOLATED_PAIR,
        TRIANGLE_FREE_CENTER,
        EDGE_PAIR,
        THREE_ONE_EDGE,
        SINGLE_TRIANGLE,
        THREE_LINE,
        TRIANGLE_FREE,
        TRIANGLE_FREE_SOLVABLE,
        TRIANGLE_FREE_CP,
        ODD_REAL_CLASSES,
        PRIME_ORDER_ELEMENTS,
    )

    ORDINARY_TRIANGLE = 'ordinary_triangle'
    ORDINARY_TRIANGLE_FREE = 'ordinary_triangle_free'
    ORDINARY_SMALL_SHAPES = 'ordinary_small_shapes'

    ORDINARY_CHECKS = (
        ORDINARY_TRIANGLE,
        ORDINARY_TRIANGLE_FREE,
        ORDINARY_SMALL_SHAPES,
    )


# Orders of the groups whose ordinary graph is non-empty and triangle free.
TRIANGLE_FREE_ORDINARY_ORDERS = (6, 10, 12, 21)

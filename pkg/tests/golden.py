"""Worked instances shared by the test modules."""

from xm.crystal import make_path
from xm.rigged import make_rc
from xm.shapes import MultiplicityArray, TensorShape, multiplicity_of

# B = (B^{1,1})^2 (x) B^{1,4} (x) B^{2,1} (x) B^{2,3}, lambda = (6,4,3,1)
MAIN_SHAPE = TensorShape(4, ((1, 1), (1, 1), (1, 4), (2, 1), (2, 3)))
MAIN_L = multiplicity_of(MAIN_SHAPE)
MAIN_LAMBDA = (6, 4, 3, 1)
MAIN_PATH = make_path(4, [[3]], [[2]], [[1, 1, 3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])
MAIN_RC = make_rc(MAIN_L, [(3, 1), (1, 1)], [(3, 1), (1, 0)], [(1, 0)])
# vacancy numbers next to each string of MAIN_RC, per index
MAIN_VACANCIES = [[1, 1], [1, 1], [0]]

# delta of MAIN_RC: rank 3
DELTA_RC = make_rc(MAIN_L.add(1, 1, -1), [(3, 1)], [(2, 0), (1, 0)], [(1, 0)])

# the first thirteen states of the recursion: (strings per index, vacancies per index, path factors)
TABLE = [
    ([[(3, 1), (1, 1)], [(3, 1), (1, 0)], [(1, 0)]], [[1, 1], [1, 1], [0]],
     ([[3]], [[2]], [[1, 1, 3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(3, 1)], [(2, 0), (1, 0)], [(1, 0)]], [[1], [0, 0], [0]],
     ([[2]], [[1, 1, 3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(2, 1)], [(2, 0), (1, 0)], [(1, 0)]], [[1], [0, 0], [0]],
     ([[1, 1, 3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(2, 1)], [(2, 0), (1, 0)], [(1, 0)]], [[2], [0, 0], [0]],
     ([[1]], [[1, 3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(2, 1)], [(2, 0), (1, 0)], [(1, 0)]], [[1], [0, 0], [0]],
     ([[1, 3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(2, 1)], [(2, 0), (1, 0)], [(1, 0)]], [[2], [0, 0], [0]],
     ([[1]], [[3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(2, 1)], [(2, 0), (1, 0)], [(1, 0)]], [[1], [0, 0], [0]],
     ([[3, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(2, 1)], [(2, 0), (1, 0)], [(1, 0)]], [[1], [0, 0], [0]],
     ([[3]], [[4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(1, 1)], [(1, 0), (1, 0)], [(1, 0)]], [[1], [0, 0], [0]],
     ([[4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[], [(1, 0)], []], [[], [0], []],
     ([[1], [3]], [[1, 1, 1], [2, 2, 2]])),
    ([[(1, 1)], [(1, 0)], []], [[1], [0], []],
     ([[3]], [[1]], [[1, 1, 1], [2, 2, 2]])),
    ([[], [], []], [[], [], []],
     ([[1]], [[1, 1, 1], [2, 2, 2]])),
    ([[], [], []], [[], [], []],
     ([[1, 1, 1], [2, 2, 2]],)),
]

EVACUATED_PATH = make_path(4, [[1, 1, 2], [2, 3, 4]], [[2], [3]], [[1, 1, 1, 3]], [[2]], [[1]])
STAR_PATH = make_path(4, [[3, 3, 3], [4, 4, 4]], [[2], [4]], [[1, 2, 4, 4]], [[3]], [[2]])
THETA_RC = make_rc(MAIN_L, [(3, 0), (1, 0)], [(3, 0), (1, 1)], [(1, 0)])
R1_PATH = make_path(4, [[3]], [[2]], [[1, 1, 3, 4]], [[1, 1, 1], [2, 2, 3]], [[1], [2]])
TRANSPOSED_PATH = make_path(6, [[3]], [[4]], [[1], [2], [5], [6]], [[1, 4]], [[1, 1], [2, 2], [3, 3]])
TRANSPOSED_RC_STRINGS = ([(2, 1), (1, 0)], [(2, 0), (1, 0)], [(2, 0), (1, 0)], [(1, 0), (1, 0)], [(1, 0)])
MATRIX_M = {(1, 1): -2, (1, 2): -1, (1, 3): -1, (3, 1): 1, (3, 2): 1, (3, 3): 1, (4, 1): 1}
MATRIX_MT = {(1, 1): -2, (1, 2): -1, (4, 2): 1, (5, 1): 1, (6, 1): 1}
DUAL_PATH = make_path(4, [[1], [3], [4]], [[1], [2], [4]], [[1, 1, 1, 2], [2, 2, 3, 3], [3, 3, 4, 4]], [[1], [3]], [[1, 1, 1], [2, 2, 2]])
REV_RC_STRINGS = ([(1, 0)], [(3, 1), (1, 0)], [(3, 1), (1, 1)])

# unrestricted instance: B^{2,2} (x) B^{2,1}, lambda = (2,2,1,1)
UNRES_SHAPE = TensorShape(4, ((2, 2), (2, 1)))
UNRES_L = multiplicity_of(UNRES_SHAPE)
UNRES_LAMBDA = (2, 2, 1, 1)
UNRES_TABLE = [
    (([[1, 1], [2, 2]], [[3], [4]]), ([(1, 0)], [(1, -1), (1, -1)], [(1, 0)]), 0),
    (([[1, 1], [2, 4]], [[2], [3]]), ([(1, -1)], [(1, 0), (1, 0)], [(1, 0)]), 1),
    (([[1, 2], [2, 3]], [[1], [4]]), ([(1, 0)], [(1, 0), (1, 0)], [(1, -1)]), 1),
    (([[1, 2], [2, 4]], [[1], [3]]), ([(1, 0)], [(1, 0), (1, -1)], [(1, 0)]), 1),
    (([[1, 3], [2, 4]], [[1], [2]]), ([(1, 0)], [(1, 0), (1, 0)], [(1, 0)]), 2),
    (([[1, 1], [2, 3]], [[2], [4]]), ([(1, -1)], [(2, 0)], [(1, -1)]), 0),
    (([[1, 2], [3, 4]], [[1], [2]]), ([(1, -1)], [(2, 1)], [(1, -1)]), 1),
]

# level-restricted instance: n=3, level 2, L_1^{(1)}=4, L_2^{(1)}=1, lambda=(3,2,1)
LEVEL_L = MultiplicityArray.from_dict(3, {(1, 1): 4, (1, 2): 1})
LEVEL_SHAPE = TensorShape(3, ((1, 1),) * 4 + ((1, 2),))
LEVEL_LAMBDA = (3, 2, 1)
LEVEL_RCS = [
    make_rc(LEVEL_L, [(1, 0), (1, 0), (1, 0)], [(1, 0)]),
    make_rc(LEVEL_L, [(2, 0), (1, 0)], [(1, 0)]),
    make_rc(LEVEL_L, [(2, 0), (1, 1)], [(1, 0)]),
]

# crystal operators on RCs, type A_2
CRYSTAL_L = MultiplicityArray.from_dict(3, {(1, 1): 1, (1, 3): 1, (2, 2): 1})
CRYSTAL_RC = make_rc(CRYSTAL_L, [(2, -1), (1, -1)], [(3, -2)])
CRYSTAL_F1 = make_rc(CRYSTAL_L, [(3, -2), (1, -1)], [(3, -1)])
CRYSTAL_E1 = make_rc(CRYSTAL_L, [(2, 1)], [(3, -3)])
BIG_L = MultiplicityArray.from_dict(3, {(1, 1): 15})
BIG_RC = make_rc(BIG_L, [(3, -2), (2, 0), (2, -1), (1, 2), (1, 2), (1, 0), (1, 0)], [(3, -1), (2, -1), (1, 1)])
BIG_E1 = make_rc(BIG_L, [(2, 0), (2, -1), (2, -1), (1, 2), (1, 2), (1, 0), (1, 0)], [(3, -2), (2, -1), (1, 1)])
BIG_E2 = make_rc(BIG_L, [(3, -3), (2, -1), (2, -2), (1, 2), (1, 2), (1, 0), (1, 0)], [(3, 1), (1, 1), (1, 0)])

# the weight-(2,1) component inside (B^{1,1})^3 for n=3: path letters -> strings
COMPONENT_21 = {
    (1, 2, 1): ([(1, 0)], []),
    (2, 2, 1): ([(2, -1)], []),
    (2, 3, 1): ([(2, 0)], [(1, -1)]),
    (3, 3, 1): ([(2, 1)], [(2, -2)]),
    (3, 3, 2): ([(2, -1), (1, -1)], [(2, -1)]),
    (1, 3, 1): ([(1, 1)], [(1, -1)]),
    (1, 3, 2): ([(1, -1), (1, -1)], [(1, 0)]),
    (2, 3, 2): ([(2, -2), (1, -1)], [(1, 0)]),
}

# promotion on B^{2,2}, n=4
PROMO_L = MultiplicityArray.from_dict(4, {(2, 2): 1})
PROMO_RC = make_rc(PROMO_L, [(1, 0)], [(2, -1), (1, -1)], [(2, -1)])
PROMO_STEP1 = [[(2, -1)], [(2, 1), (1, 0)], [(2, -1), (1, -1)], [(2, -1)]]
PROMO_RESULT = make_rc(PROMO_L, [], [(1, 0)], [(1, -1)])
PROMO_PATH = make_path(4, [[1, 3], [4, 4]])
PROMO_PATH_IMAGE = make_path(4, [[1, 1], [2, 4]])

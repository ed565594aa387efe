"""Frozen reference values, derived independently of the package.

Affine values in the bound parameter c appear as (constant, coefficient)
integer pairs.  The characteristic-cycle table and the high-orbit index
entries were reconstructed by hand from the published tabulation and
cross-checked against the transcribed evaluation records before being
frozen here.
"""

# coefficient of the conormal to anchor in CC(IC(source)); zeros omitted
CC_TABLE = {
    ('S0', '(1)'): {'S0': (1, 0)},
    ('S1', '(1)'): {'S1': (1, 0), 'S0': (3, 0)},
    ('S10', '(1)'): {'S10': (1, 0), 'S8': (1, 0)},
    ('S10', '(1^2)'): {'S10': (1, 0), 'S9': (2, 0), 'S8': (1, 0), 'S7': (1, 0), 'S4': (1, 1)},
    ('S11', '(1^4)'): {'S11': (1, 0), 'S10': (1, 0), 'S9': (1, 0), 'S8': (1, 0), 'S7': (1, 0), 'S6': (1, 0), 'S5': (1, 0), 'S4': (0, 1), 'S3': (1, 0), 'S2': (1, 0), 'S1': (1, 0), 'S0': (1, 0)},
    ('S11', '(211)'): {'S11': (3, 0), 'S10': (2, 0), 'S9': (1, 0), 'S8': (1, 0), 'S6': (1, 0)},
    ('S11', '(22)'): {'S11': (2, 0), 'S10': (1, 0), 'S9': (1, 0)},
    ('S11', '(31)'): {'S11': (3, 0), 'S10': (1, 0)},
    ('S11', '(4)'): {'S11': (1, 0)},
    ('S2', '(1)'): {'S2': (1, 0), 'S1': (1, 0), 'S0': (2, 0)},
    ('S2', '(1^2)'): {'S2': (1, 0)},
    ('S3', '(1)'): {'S3': (1, 0), 'S1': (1, 0)},
    ('S4', '(1)'): {'S4': (1, 0)},
    ('S5', '(1)'): {'S5': (1, 0)},
    ('S5', '(1^2)'): {'S5': (1, 0), 'S3': (1, 0), 'S2': (1, 0), 'S1': (2, 0), 'S0': (3, 0)},
    ('S6', '(1)'): {'S6': (1, 0)},
    ('S7', '(1)'): {'S7': (1, 0), 'S4': (1, 1), 'S3': (1, 0), 'S2': (2, 0), 'S1': (1, 0)},
    ('S8', '(1)'): {'S8': (1, 0), 'S7': (1, 0), 'S6': (2, 0), 'S5': (2, 0), 'S4': (-2, 1), 'S3': (1, 0)},
    ('S9', '(1)'): {'S9': (1, 0)},
    ('S9', '(1^2)'): {'S9': (1, 0), 'S7': (1, 0), 'S4': (0, 1), 'S2': (1, 0)},
}

# high-orbit entries c(a, b) of the index matrix, keyed (row, column)
C_ENTRIES = {
    ('S10', 'S10'): (-1, 0),
    ('S10', 'S11'): (1, 0),
    ('S11', 'S11'): (1, 0),
    ('S4', 'S10'): (0, -3),
    ('S4', 'S11'): (0, 1),
    ('S4', 'S4'): (-1, 0),
    ('S4', 'S7'): (0, -1),
    ('S4', 'S8'): (0, 2),
    ('S4', 'S9'): (1, 1),
    ('S5', 'S10'): (-3, 0),
    ('S5', 'S11'): (1, 0),
    ('S5', 'S5'): (1, 0),
    ('S5', 'S7'): (-2, 0),
    ('S5', 'S8'): (3, 0),
    ('S5', 'S9'): (0, 0),
    ('S7', 'S10'): (-3, 0),
    ('S7', 'S11'): (1, 0),
    ('S7', 'S7'): (-1, 0),
    ('S7', 'S8'): (2, 0),
    ('S7', 'S9'): (1, 0),
    ('S8', 'S10'): (-2, 0),
    ('S8', 'S11'): (1, 0),
    ('S8', 'S8'): (1, 0),
    ('S9', 'S10'): (-2, 0),
    ('S9', 'S11'): (1, 0),
    ('S9', 'S9'): (1, 0),
}

# local evaluations chi^loc_target(IC(source)) on the computable cells
EULER = {
    (('S0', '(1)'), 'S0'): (1, 0),
    (('S0', '(1)'), 'S1'): (0, 0),
    (('S0', '(1)'), 'S10'): (0, 0),
    (('S0', '(1)'), 'S11'): (0, 0),
    (('S0', '(1)'), 'S2'): (0, 0),
    (('S0', '(1)'), 'S3'): (0, 0),
    (('S0', '(1)'), 'S4'): (0, 0),
    (('S0', '(1)'), 'S5'): (0, 0),
    (('S0', '(1)'), 'S6'): (0, 0),
    (('S0', '(1)'), 'S7'): (0, 0),
    (('S0', '(1)'), 'S8'): (0, 0),
    (('S0', '(1)'), 'S9'): (0, 0),
    (('S1', '(1)'), 'S1'): (1, 0),
    (('S1', '(1)'), 'S10'): (0, 0),
    (('S1', '(1)'), 'S11'): (0, 0),
    (('S1', '(1)'), 'S2'): (0, 0),
    (('S1', '(1)'), 'S3'): (0, 0),
    (('S1', '(1)'), 'S4'): (0, 0),
    (('S1', '(1)'), 'S5'): (0, 0),
    (('S1', '(1)'), 'S6'): (0, 0),
    (('S1', '(1)'), 'S7'): (0, 0),
    (('S1', '(1)'), 'S8'): (0, 0),
    (('S1', '(1)'), 'S9'): (0, 0),
    (('S10', '(1)'), 'S10'): (-1, 0),
    (('S10', '(1)'), 'S11'): (0, 0),
    (('S10', '(1)'), 'S4'): (-2, 0),
    (('S10', '(1)'), 'S5'): (-2, 0),
    (('S10', '(1)'), 'S7'): (-1, 0),
    (('S10', '(1)'), 'S8'): (-1, 0),
    (('S10', '(1)'), 'S9'): (-2, 0),
    (('S10', '(1^2)'), 'S10'): (-1, 0),
    (('S10', '(1^2)'), 'S11'): (0, 0),
    (('S10', '(1^2)'), 'S4'): (-1, 0),
    (('S10', '(1^2)'), 'S5'): (0, 0),
    (('S10', '(1^2)'), 'S7'): (0, 0),
    (('S10', '(1^2)'), 'S8'): (-1, 0),
    (('S10', '(1^2)'), 'S9'): (0, 0),
    (('S11', '(1^4)'), 'S10'): (0, 0),
    (('S11', '(1^4)'), 'S11'): (1, 0),
    (('S11', '(1^4)'), 'S4'): (0, 0),
    (('S11', '(1^4)'), 'S5'): (0, 0),
    (('S11', '(1^4)'), 'S7'): (0, 0),
    (('S11', '(1^4)'), 'S8'): (0, 0),
    (('S11', '(1^4)'), 'S9'): (0, 0),
    (('S11', '(211)'), 'S10'): (1, 0),
    (('S11', '(211)'), 'S11'): (3, 0),
    (('S11', '(211)'), 'S4'): (0, 0),
    (('S11', '(211)'), 'S5'): (0, 0),
    (('S11', '(211)'), 'S7'): (0, 0),
    (('S11', '(211)'), 'S8'): (0, 0),
    (('S11', '(211)'), 'S9'): (0, 0),
    (('S11', '(22)'), 'S10'): (1, 0),
    (('S11', '(22)'), 'S11'): (2, 0),
    (('S11', '(22)'), 'S4'): (1, 0),
    (('S11', '(22)'), 'S5'): (1, 0),
    (('S11', '(22)'), 'S7'): (0, 0),
    (('S11', '(22)'), 'S8'): (0, 0),
    (('S11', '(22)'), 'S9'): (1, 0),
    (('S11', '(31)'), 'S10'): (2, 0),
    (('S11', '(31)'), 'S11'): (3, 0),
    (('S11', '(31)'), 'S4'): (1, 0),
    (('S11', '(31)'), 'S5'): (0, 0),
    (('S11', '(31)'), 'S7'): (0, 0),
    (('S11', '(31)'), 'S8'): (1, 0),
    (('S11', '(31)'), 'S9'): (1, 0),
    (('S11', '(4)'), 'S10'): (1, 0),
    (('S11', '(4)'), 'S11'): (1, 0),
    (('S11', '(4)'), 'S4'): (1, 0),
    (('S11', '(4)'), 'S5'): (1, 0),
    (('S11', '(4)'), 'S7'): (1, 0),
    (('S11', '(4)'), 'S8'): (1, 0),
    (('S11', '(4)'), 'S9'): (1, 0),
    (('S2', '(1)'), 'S10'): (0, 0),
    (('S2', '(1)'), 'S11'): (0, 0),
    (('S2', '(1)'), 'S2'): (1, 0),
    (('S2', '(1)'), 'S3'): (0, 0),
    (('S2', '(1)'), 'S4'): (0, 0),
    (('S2', '(1)'), 'S5'): (0, 0),
    (('S2', '(1)'), 'S6'): (0, 0),
    (('S2', '(1)'), 'S7'): (0, 0),
    (('S2', '(1)'), 'S8'): (0, 0),
    (('S2', '(1)'), 'S9'): (0, 0),
    (('S2', '(1^2)'), 'S10'): (0, 0),
    (('S2', '(1^2)'), 'S11'): (0, 0),
    (('S2', '(1^2)'), 'S2'): (1, 0),
    (('S2', '(1^2)'), 'S3'): (0, 0),
    (('S2', '(1^2)'), 'S4'): (0, 0),
    (('S2', '(1^2)'), 'S5'): (0, 0),
    (('S2', '(1^2)'), 'S6'): (0, 0),
    (('S2', '(1^2)'), 'S7'): (0, 0),
    (('S2', '(1^2)'), 'S8'): (0, 0),
    (('S2', '(1^2)'), 'S9'): (0, 0),
    (('S3', '(1)'), 'S10'): (0, 0),
    (('S3', '(1)'), 'S11'): (0, 0),
    (('S3', '(1)'), 'S3'): (-1, 0),
    (('S3', '(1)'), 'S4'): (0, 0),
    (('S3', '(1)'), 'S5'): (0, 0),
    (('S3', '(1)'), 'S6'): (0, 0),
    (('S3', '(1)'), 'S7'): (0, 0),
    (('S3', '(1)'), 'S8'): (0, 0),
    (('S3', '(1)'), 'S9'): (0, 0),
    (('S4', '(1)'), 'S10'): (0, 0),
    (('S4', '(1)'), 'S11'): (0, 0),
    (('S4', '(1)'), 'S3'): (0, 0),
    (('S4', '(1)'), 'S4'): (-1, 0),
    (('S4', '(1)'), 'S5'): (0, 0),
    (('S4', '(1)'), 'S6'): (0, 0),
    (('S4', '(1)'), 'S7'): (0, 0),
    (('S4', '(1)'), 'S8'): (0, 0),
    (('S4', '(1)'), 'S9'): (0, 0),
    (('S5', '(1)'), 'S10'): (0, 0),
    (('S5', '(1)'), 'S11'): (0, 0),
    (('S5', '(1)'), 'S4'): (0, 0),
    (('S5', '(1)'), 'S5'): (1, 0),
    (('S5', '(1)'), 'S6'): (0, 0),
    (('S5', '(1)'), 'S7'): (0, 0),
    (('S5', '(1)'), 'S8'): (0, 0),
    (('S5', '(1)'), 'S9'): (0, 0),
    (('S5', '(1^2)'), 'S10'): (0, 0),
    (('S5', '(1^2)'), 'S11'): (0, 0),
    (('S5', '(1^2)'), 'S4'): (0, 0),
    (('S5', '(1^2)'), 'S5'): (1, 0),
    (('S5', '(1^2)'), 'S6'): (0, 0),
    (('S5', '(1^2)'), 'S7'): (0, 0),
    (('S5', '(1^2)'), 'S8'): (0, 0),
    (('S5', '(1^2)'), 'S9'): (0, 0),
    (('S6', '(1)'), 'S10'): (0, 0),
    (('S6', '(1)'), 'S11'): (0, 0),
    (('S6', '(1)'), 'S4'): (0, 0),
    (('S6', '(1)'), 'S5'): (0, 0),
    (('S6', '(1)'), 'S6'): (1, 0),
    (('S6', '(1)'), 'S7'): (0, 0),
    (('S6', '(1)'), 'S8'): (0, 0),
    (('S6', '(1)'), 'S9'): (0, 0),
    (('S7', '(1)'), 'S10'): (0, 0),
    (('S7', '(1)'), 'S11'): (0, 0),
    (('S7', '(1)'), 'S4'): (-1, 0),
    (('S7', '(1)'), 'S5'): (-2, 0),
    (('S7', '(1)'), 'S6'): (0, 0),
    (('S7', '(1)'), 'S7'): (-1, 0),
    (('S7', '(1)'), 'S8'): (0, 0),
    (('S7', '(1)'), 'S9'): (0, 0),
    (('S8', '(1)'), 'S10'): (0, 0),
    (('S8', '(1)'), 'S11'): (0, 0),
    (('S8', '(1)'), 'S4'): (2, 0),
    (('S8', '(1)'), 'S5'): (1, 0),
    (('S8', '(1)'), 'S7'): (1, 0),
    (('S8', '(1)'), 'S8'): (1, 0),
    (('S8', '(1)'), 'S9'): (0, 0),
    (('S9', '(1)'), 'S10'): (0, 0),
    (('S9', '(1)'), 'S11'): (0, 0),
    (('S9', '(1)'), 'S4'): (1, 0),
    (('S9', '(1)'), 'S5'): (2, 0),
    (('S9', '(1)'), 'S6'): (0, 0),
    (('S9', '(1)'), 'S7'): (1, 0),
    (('S9', '(1)'), 'S8'): (0, 0),
    (('S9', '(1)'), 'S9'): (1, 0),
    (('S9', '(1^2)'), 'S10'): (0, 0),
    (('S9', '(1^2)'), 'S11'): (0, 0),
    (('S9', '(1^2)'), 'S4'): (1, 0),
    (('S9', '(1^2)'), 'S5'): (0, 0),
    (('S9', '(1^2)'), 'S6'): (0, 0),
    (('S9', '(1^2)'), 'S7'): (0, 0),
    (('S9', '(1^2)'), 'S8'): (0, 0),
    (('S9', '(1^2)'), 'S9'): (1, 0),
}

# micro-packets by anchor orbit: (members, indeterminate)
PACKETS = {
    'S0': (('X13', 'X17', 'X19', 'X20', 'X5'), ()),
    'S1': (('X13', 'X15', 'X17', 'X19', 'X5', 'X9'), ()),
    'S10': (('X2', 'X3', 'X4', 'X5', 'X6', 'X7'), ()),
    'S11': (('X1', 'X2', 'X3', 'X4', 'X5'), ()),
    'S2': (('X11', 'X13', 'X17', 'X18', 'X5', 'X9'), ()),
    'S3': (('X13', 'X15', 'X5', 'X8', 'X9'), ()),
    'S4': (('X11', 'X16', 'X5', 'X7', 'X9'), ('X8',)),
    'S5': (('X12', 'X13', 'X5', 'X8'), ()),
    'S6': (('X14', 'X4', 'X5', 'X8'), ()),
    'S7': (('X11', 'X5', 'X7', 'X8', 'X9'), ()),
    'S8': (('X4', 'X5', 'X6', 'X7', 'X8'), ()),
    'S9': (('X10', 'X11', 'X3', 'X4', 'X5', 'X7'), ()),
}

"""Published reference values, keyed by n."""

ZDIM_T0 = {
    1: 1,
    2: 3,
    3: 16,
    4: 137,
    5: 1826,
    6: 37777,
    7: 1214256,
    8: 60075185,
    9: 4484316358,
    10: 493489876721,
    11: 78456654767756,
    12: 17735173202222665,
    13: 5630684018989523274,
    14: 2486496790249207894159,
    15: 1515191575312017424784521,
    16: 1265630395473933567972009297,
    17: 1440898175760773111084979329715,
    18: 2224880834303273680055277143713603,
    19: 4639372746385389556519264489422075597,
}

ZDIM = {
    1: 1,
    2: 4,
    3: 26,
    4: 255,
    5: 3642,
    6: 75606,
    7: 2316169,
    8: 106289210,
    9: 7321773414,
    10: 748425136289,
    11: 111576624613588,
    12: 23864968806932886,
    13: 7225895692327786931,
    14: 3064182503223081924546,
    15: 1803904252801640389011509,
    16: 1463405916763710531191264095,
    17: 1625522872429294854935797170055,
    18: 2458567514979832213529304852528157,
    19: 5038667231667979478308745583967234599,
}

# Codewords of the partitions of {1,2,3,4} in generation order.
CODEWORDS_4 = [
    (1, 1, 1, 1),
    (1, 1, 1, 2),
    (1, 1, 2, 1),
    (1, 1, 2, 2),
    (1, 1, 2, 3),
    (1, 2, 1, 1),
    (1, 2, 1, 2),
    (1, 2, 1, 3),
    (1, 2, 2, 1),
    (1, 2, 2, 2),
    (1, 2, 2, 3),
    (1, 2, 3, 1),
    (1, 2, 3, 2),
    (1, 2, 3, 3),
    (1, 2, 3, 4),
]

DVECTORS_4 = [
    (4, 0, 0, 0),
    (3, 1, 0, 0),
    (3, 1, 0, 0),
    (2, 2, 0, 0),
    (2, 1, 1, 0),
    (3, 1, 0, 0),
    (2, 2, 0, 0),
    (2, 1, 1, 0),
    (2, 2, 0, 0),
    (1, 3, 0, 0),
    (1, 2, 1, 0),
    (2, 1, 1, 0),
    (1, 2, 1, 0),
    (1, 1, 2, 0),
    (1, 1, 1, 1),
]

"""Labeled orbit quivers transcribed from the displays being reproduced."""


def _chain(*names):
    return list(zip(names, names[1:]))


A2_ORBIT_QUIVER = (
    _chain("P_{a2}", "X_{a1+a2}", "P_{a1}", "X_{-a1}", "P_{-a1}", "X_{a1}")
    + _chain("X_{a1}", "P_{a1+a2}", "X_{a2}", "P_{-a2}", "X_{-a2}", "P_{a2}")
    + [
        ("X_{a1}", "X_{a1+a2}"),
        ("X_{a1+a2}", "X_{a2}"),
        ("X_{a2}", "X_{-a1}"),
        ("X_{-a1}", "X_{-a2}"),
        ("X_{-a2}", "X_{a1}"),
    ]
)

# three rows; the last column repeats the first one upside down
A3_ORBIT_QUIVER = (
    _chain("X_{a1}", "P_{a1+a2}", "X_{a2+a3}", "P_{a3}", "X_{-a3}", "P_{-a3}", "X_{a3}")
    + _chain("P_{a2}", "X_{a1+a2+a3}", "P_{a1+a2+a3}", "X_{a2}", "P_{-a2}", "X_{-a2}", "P_{a2}")
    + _chain("X_{a3}", "P_{a2+a3}", "X_{a1+a2}", "P_{a1}", "X_{-a1}", "P_{-a1}", "X_{a1}")
    + [
        ("X_{a1}", "X_{a1+a2+a3}"),
        ("X_{a2+a3}", "X_{a2}"),
        ("X_{-a3}", "X_{-a2}"),
        ("X_{a1+a2+a3}", "X_{a1+a2}"),
        ("X_{a2}", "X_{-a1}"),
        ("X_{-a2}", "X_{a1}"),
        ("X_{a1+a2+a3}", "X_{a2+a3}"),
        ("X_{a2}", "X_{-a3}"),
        ("X_{-a2}", "X_{a3}"),
        ("X_{a3}", "X_{a1+a2+a3}"),
        ("X_{a1+a2}", "X_{a2}"),
        ("X_{-a1}", "X_{-a2}"),
    ]
)

# the ice quiver of the universal seed for 1 -> 2
A2_UNIVERSAL_ICE = [
    ("a1", "1"),
    ("a1+a2", "1"),
    ("1", "-a1"),
    ("1", "2"),
    ("2", "a2"),
    ("2", "a1+a2"),
    ("-a2", "2"),
]

A2_RELATIONS = [
    "x_{-a2}·x_{a2} = p_{-a2}·x_{-a1} + p_{a2}·p_{a1+a2}",
    "x_{-a1}·x_{a1+a2} = p_{a1}·x_{a2} + p_{-a1}·p_{a2}",
    "x_{a2}·x_{a1} = p_{a1+a2}·x_{a1+a2} + p_{-a1}·p_{-a2}",
    "x_{a1+a2}·x_{-a2} = p_{a2}·x_{a1} + p_{-a2}·p_{a1}",
    "x_{a1}·x_{-a1} = p_{-a1}·x_{-a2} + p_{a1}·p_{a1+a2}",
]

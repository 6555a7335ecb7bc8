"""Reference parameter sets and published spectra used by the verify command.

The four shipped parameter sets exercise both potential families and both
series branches. The reference eigenvalues are the published benchmark
values for these sets, one column per solver method.
"""

from .potentials import HyperbolicParams, TrigParams

HYPERBOLIC_SETS = {
    "S1": HyperbolicParams(V0=10.0, A=-20.0, B=-30.0, kappa=1.0),
    "S2": HyperbolicParams(V0=5.0, A=2.0, B=-60.0, kappa=1.0),
}

TRIG_SETS = {
    "S3": TrigParams(V0=5.0, C=-10.0, D=2.0, a=1.0),
    "S4": TrigParams(V0=5.0, C=-2.0, D=2.0, a=1.0),
}

# Complete bound spectrum of the hyperbolic sets (atomic units)
HYPERBOLIC_REFERENCE = {
    "S1": {
        "DVR": (-17.292792568552, -6.137201742096, -0.888027613576),
        "HOFD": (-17.292792568575, -6.137201742113, -0.888027616853),
    },
    "S2": {
        "DVR": (-15.992869980420, -6.101528843700, -1.000393053814),
        "HOFD": (-15.992869980437, -6.101528843717, -1.000393054957),
    },
}

# Lowest ten levels of the trigonometric sets (atomic units)
TRIG_REFERENCE = {
    "S3": {
        "DVR": (16.797026, 53.186883, 103.396936, 166.730521, 242.759201,
                331.187625, 431.796715, 544.415737, 668.906827, 805.155660),
        "HOFD": (16.797032, 53.186917, 103.397040, 166.730761, 242.759670,
                 331.188444, 431.798037, 544.417750, 668.909756, 805.159769),
    },
    "S4": {
        "DVR": (29.961374, 68.685118, 120.819954, 185.823763, 263.346993,
                353.139727, 455.011712, 568.811809, 694.416181, 831.720941),
        "HOFD": (29.961382, 68.685159, 120.820074, 185.824031, 263.347504,
                 353.140605, 455.013113, 568.813926, 694.419241, 831.725211),
    },
}

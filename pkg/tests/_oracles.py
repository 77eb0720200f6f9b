"""Frozen reference values and independent computation routes for the tests.

Two kinds of things live here.  The dictionaries of strings hold four-decimal
reference values the suite reproduces; they are compared at their printed
precision.  The dictionaries of floats were regenerated with a scipy-only
stack (beta.ppf / beta.isf endpoints, closed-form Beta weighting through
scipy.special, brentq root finding at xtol 1e-13) and then frozen; they act
as an independent second route at high precision.  The helper functions
compute quantities at test time through routes that share no code with the
package under test: scipy adaptive quadrature, seeded numpy Monte Carlo,
extended-precision mpmath arithmetic, and integer-exact binomial tail sums.
Nothing in this module imports the package under test.
"""

from __future__ import annotations

import math

import numpy as np

# --------------------------------------------------------------------------
# Four-decimal reference values for the Beta(1, 1) adjusted-level table,
# keyed by (n, alpha).  Values are strings so each comparison can honor the
# precision the value was printed at.

REFERENCE_LEVELS = {
    (5, 0.05): "0.1772", (5, 0.01): "0.0516",
    (10, 0.05): "0.1280", (10, 0.01): "0.0331",
    (15, 0.05): "0.1095", (15, 0.01): "0.0269",
    (20, 0.05): "0.0995", (20, 0.01): "0.0237",
    (25, 0.05): "0.0931", (25, 0.01): "0.0218",
    (30, 0.05): "0.0885", (30, 0.01): "0.0204",
    (35, 0.05): "0.0851", (35, 0.01): "0.0194",
    (40, 0.05): "0.0825", (40, 0.01): "0.0186",
    (45, 0.05): "0.0803", (45, 0.01): "0.0180",
    (50, 0.05): "0.0785", (50, 0.01): "0.0175",
    (55, 0.05): "0.0769", (55, 0.01): "0.0171",
    (60, 0.05): "0.0756", (60, 0.01): "0.0167",
    (65, 0.05): "0.0745", (65, 0.01): "0.0164",
    (70, 0.05): "0.0735", (70, 0.01): "0.0161",
    (75, 0.05): "0.0726", (75, 0.01): "0.0159",
    (80, 0.05): "0.0718", (80, 0.01): "0.0156",
    (85, 0.05): "0.0710", (85, 0.01): "0.0154",
    (90, 0.05): "0.0704", (90, 0.01): "0.0153",
    (95, 0.05): "0.0698", (95, 0.01): "0.0151",
    (100, 0.05): "0.0692", (100, 0.01): "0.0150",
    (110, 0.05): "0.0682", (110, 0.01): "0.0147",
    (120, 0.05): "0.0674", (120, 0.01): "0.0145",
    (130, 0.05): "0.0666", (130, 0.01): "0.0143",
    (140, 0.05): "0.0660", (140, 0.01): "0.0141",
    (150, 0.05): "0.0654", (150, 0.01): "0.0139",
    (160, 0.05): "0.0649", (160, 0.01): "0.0138",
    (170, 0.05): "0.0644", (170, 0.01): "0.0137",
    (180, 0.05): "0.0640", (180, 0.01): "0.0135",
    (190, 0.05): "0.0636", (190, 0.01): "0.0134",
    (200, 0.05): "0.0632", (200, 0.01): "0.0133",
}

# Reference interval endpoints, keyed by (n, x, correction, alpha) with
# correction in {"none", "prior", "posterior"} (prior Beta(1, 1), posterior
# Beta(1/2, 1/2)).  The (100, 50, "prior", 0.05) upper endpoint is stored as
# 0.5948: reflection symmetry forces upper = 1 - lower and the lower endpoint
# of that same cell is 0.4052.

REFERENCE_ENDPOINTS = {
    (20, 1, "none", 0.05): ("0.0012", "0.2487"),
    (20, 1, "none", 0.01): ("0.0003", "0.3171"),
    (20, 1, "prior", 0.05): ("0.0025", "0.2163"),
    (20, 1, "prior", 0.01): ("0.0006", "0.2815"),
    (20, 1, "posterior", 0.05): ("0.0042", "0.1925"),
    (20, 1, "posterior", 0.01): ("0.0010", "0.2591"),
    (20, 2, "none", 0.05): ("0.0123", "0.3170"),
    (20, 2, "none", 0.01): ("0.0053", "0.3871"),
    (20, 2, "prior", 0.05): ("0.0180", "0.2829"),
    (20, 2, "prior", 0.01): ("0.0083", "0.3509"),
    (20, 2, "posterior", 0.05): ("0.0207", "0.2697"),
    (20, 2, "posterior", 0.01): ("0.0099", "0.3364"),
    (20, 5, "none", 0.05): ("0.0866", "0.4910"),
    (20, 5, "none", 0.01): ("0.0583", "0.5598"),
    (20, 5, "prior", 0.05): ("0.1039", "0.4559"),
    (20, 5, "prior", 0.01): ("0.0718", "0.5248"),
    (20, 5, "posterior", 0.05): ("0.1013", "0.4608"),
    (20, 5, "posterior", 0.01): ("0.0705", "0.5281"),
    (20, 10, "none", 0.05): ("0.2720", "0.7280"),
    (20, 10, "none", 0.01): ("0.2177", "0.7823"),
    (20, 10, "prior", 0.05): ("0.3017", "0.6983"),
    (20, 10, "prior", 0.01): ("0.2447", "0.7553"),
    (20, 10, "posterior", 0.05): ("0.2929", "0.7071"),
    (20, 10, "posterior", 0.01): ("0.2369", "0.7631"),
    (50, 1, "none", 0.05): ("0.0005", "0.1065"),
    (50, 1, "none", 0.01): ("0.0001", "0.1394"),
    (50, 1, "prior", 0.05): ("0.0008", "0.0967"),
    (50, 1, "prior", 0.01): ("0.0002", "0.1282"),
    (50, 1, "posterior", 0.05): ("0.0016", "0.0812"),
    (50, 1, "posterior", 0.01): ("0.0004", "0.1122"),
    (50, 5, "none", 0.05): ("0.0333", "0.2181"),
    (50, 5, "none", 0.01): ("0.022", "0.2580"),
    (50, 5, "prior", 0.05): ("0.0376", "0.2058"),
    (50, 5, "prior", 0.01): ("0.0255", "0.2448"),
    (50, 5, "posterior", 0.05): ("0.0387", "0.2027"),
    (50, 5, "posterior", 0.01): ("0.0267", "0.2402"),
    (50, 12, "none", 0.05): ("0.1306", "0.3817"),
    (50, 12, "none", 0.01): ("0.1056", "0.4255"),
    (50, 12, "prior", 0.05): ("0.1395", "0.3676"),
    (50, 12, "prior", 0.01): ("0.1133", "0.4112"),
    (50, 12, "posterior", 0.05): ("0.1378", "0.3702"),
    (50, 12, "posterior", 0.01): ("0.1120", "0.4136"),
    (50, 25, "none", 0.05): ("0.3553", "0.6447"),
    (50, 25, "none", 0.01): ("0.3155", "0.6845"),
    (50, 25, "prior", 0.05): ("0.3686", "0.6314"),
    (50, 25, "prior", 0.01): ("0.3282", "0.6718"),
    (50, 25, "posterior", 0.05): ("0.3644", "0.6356"),
    (50, 25, "posterior", 0.01): ("0.3242", "0.6757"),
    (100, 1, "none", 0.05): ("0.0003", "0.0545"),
    (100, 1, "none", 0.01): ("0.0001", "0.0720"),
    (100, 1, "prior", 0.05): ("0.0004", "0.0508"),
    (100, 1, "prior", 0.01): ("0.0001", "0.0677"),
    (100, 1, "posterior", 0.05): ("0.0008", "0.0413"),
    (100, 1, "posterior", 0.01): ("0.0002", "0.0577"),
    (100, 10, "none", 0.05): ("0.0490", "0.1762"),
    (100, 10, "none", 0.01): ("0.0382", "0.2020"),
    (100, 10, "prior", 0.05): ("0.0518", "0.1705"),
    (100, 10, "prior", 0.01): ("0.0405", "0.1959"),
    (100, 10, "posterior", 0.05): ("0.0523", "0.1695"),
    (100, 10, "posterior", 0.01): ("0.0410", "0.1946"),
    (100, 25, "none", 0.05): ("0.1688", "0.3466"),
    (100, 25, "none", 0.01): ("0.1477", "0.3769"),
    (100, 25, "prior", 0.05): ("0.1739", "0.3396"),
    (100, 25, "prior", 0.01): ("0.1525", "0.3698"),
    (100, 25, "posterior", 0.05): ("0.1728", "0.3410"),
    (100, 25, "posterior", 0.01): ("0.1515", "0.3712"),
    (100, 50, "none", 0.05): ("0.3983", "0.6017"),
    (100, 50, "none", 0.01): ("0.3689", "0.6311"),
    (100, 50, "prior", 0.05): ("0.4052", "0.5948"),
    (100, 50, "prior", 0.01): ("0.3756", "0.6244"),
    (100, 50, "posterior", 0.05): ("0.4031", "0.5969"),
    (100, 50, "posterior", 0.01): ("0.3735", "0.6265"),
}

# The built-in worked scenario: 96 trials, 4 successes, alpha 0.05.
WORKED_N, WORKED_X, WORKED_ALPHA = 96, 4, 0.05
WORKED_CP_REF = ("0.012", "0.103")
WORKED_PRIOR_LEVEL_REF = "0.06967"
WORKED_PRIOR_REF = ("0.013", "0.098")
WORKED_POSTERIOR_LEVEL_REF = "0.09385"
WORKED_POSTERIOR_REF = ("0.014", "0.094")


def printed_tolerance(text: str) -> float:
    """One unit in the last printed decimal place of ``text``."""
    decimals = len(text.split(".")[1]) if "." in text else 0
    return 10.0 ** (-decimals)


# --------------------------------------------------------------------------
# High-precision values from the independent scipy stack, frozen at 9
# decimals.  PRIOR_LEVELS solves mean coverage = 1 - alpha under a Beta(1, 1)
# weight; POSTERIOR_LEVELS under the Beta(x + 1/2, n - x + 1/2) weight.

PRIOR_LEVELS = {
    (5, 0.01): 0.051688469, (5, 0.05): 0.177476655,
    (10, 0.01): 0.033149899, (10, 0.05): 0.128219341,
    (15, 0.01): 0.026946228, (15, 0.05): 0.109705116,
    (20, 0.01): 0.023760512, (20, 0.05): 0.099649438,
    (25, 0.01): 0.021786666, (25, 0.05): 0.093198839,
    (30, 0.01): 0.020426877, (30, 0.05): 0.088646229,
    (35, 0.01): 0.019424087, (35, 0.05): 0.085227698,
    (40, 0.01): 0.018648675, (40, 0.05): 0.082546717,
    (45, 0.01): 0.018027825, (45, 0.05): 0.080375476,
    (50, 0.01): 0.017517292, (50, 0.05): 0.078573040,
    (55, 0.01): 0.017088541, (55, 0.05): 0.077047151,
    (60, 0.01): 0.016722287, (60, 0.05): 0.075734661,
    (65, 0.01): 0.016404990, (65, 0.05): 0.074590762,
    (70, 0.01): 0.016126846, (70, 0.05): 0.073582692,
    (75, 0.01): 0.015880567, (75, 0.05): 0.072685893,
    (80, 0.01): 0.015660610, (80, 0.05): 0.071881558,
    (85, 0.01): 0.015462683, (85, 0.05): 0.071155015,
    (90, 0.01): 0.015283402, (90, 0.05): 0.070494633,
    (95, 0.01): 0.015120061, (95, 0.05): 0.069891062,
    (100, 0.01): 0.014970470, (100, 0.05): 0.069336691,
    (110, 0.01): 0.014705665, (110, 0.05): 0.068351537,
    (120, 0.01): 0.014477954, (120, 0.05): 0.067500462,
    (130, 0.01): 0.014279527, (130, 0.05): 0.066755837,
    (140, 0.01): 0.014104677, (140, 0.05): 0.066097359,
    (150, 0.01): 0.013949133, (150, 0.05): 0.065509736,
    (160, 0.01): 0.013809626, (160, 0.05): 0.064981209,
    (170, 0.01): 0.013683609, (170, 0.05): 0.064502566,
    (180, 0.01): 0.013569061, (180, 0.05): 0.064066480,
    (190, 0.01): 0.013464361, (190, 0.05): 0.063667041,
    (200, 0.01): 0.013368188, (200, 0.05): 0.063299423,
}

POSTERIOR_LEVELS = {
    (20, 1, 0.01): 0.039626649, (20, 1, 0.05): 0.160533856,
    (20, 2, 0.01): 0.032902066, (20, 2, 0.05): 0.127751611,
    (20, 5, 0.01): 0.022030494, (20, 5, 0.05): 0.090701755,
    (20, 10, 0.01): 0.018733776, (20, 10, 0.05): 0.082204906,
    (50, 1, 0.01): 0.038310032, (50, 1, 0.05): 0.157332088,
    (50, 5, 0.01): 0.021128001, (50, 5, 0.05): 0.087334462,
    (50, 12, 0.01): 0.015933679, (50, 12, 0.05): 0.072509772,
    (50, 25, 0.01): 0.014789953, (50, 25, 0.05): 0.068542140,
    (100, 1, 0.01): 0.037910419, (100, 1, 0.05): 0.156335800,
    (100, 10, 0.01): 0.016164004, (100, 10, 0.05): 0.073054538,
    (100, 25, 0.01): 0.013805518, (100, 25, 0.05): 0.064840100,
    (100, 50, 0.01): 0.013205813, (100, 50, 0.05): 0.062612915,
}

EXACT_ENDPOINTS = {
    (20, 1, "none", 0.05): (0.001265089, 0.248732763),
    (20, 1, "prior", 0.05): (0.002552178, 0.216277298),
    (20, 1, "posterior", 0.05): (0.004174850, 0.192420001),
    (20, 1, "none", 0.01): (0.000250596, 0.317141735),
    (20, 1, "prior", 0.01): (0.000597391, 0.281495483),
    (20, 1, "posterior", 0.01): (0.001000112, 0.259203575),
    (20, 2, "none", 0.05): (0.012348527, 0.316982714),
    (20, 2, "prior", 0.05): (0.018029729, 0.282800584),
    (20, 2, "posterior", 0.05): (0.020744102, 0.269695984),
    (20, 2, "none", 0.01): (0.005295149, 0.387125257),
    (20, 2, "prior", 0.01): (0.008310394, 0.350866417),
    (20, 2, "posterior", 0.01): (0.009870557, 0.336382375),
    (20, 5, "none", 0.05): (0.086571469, 0.491045872),
    (20, 5, "prior", 0.05): (0.103980541, 0.455773798),
    (20, 5, "posterior", 0.05): (0.101342513, 0.460852918),
    (20, 5, "none", 0.01): (0.058333936, 0.559760908),
    (20, 5, "prior", 0.01): (0.071804844, 0.524811239),
    (20, 5, "posterior", 0.01): (0.070487294, 0.528034391),
    (20, 10, "none", 0.05): (0.271957850, 0.728042150),
    (20, 10, "prior", 0.05): (0.301788187, 0.698211813),
    (20, 10, "posterior", 0.05): (0.292938135, 0.707061865),
    (20, 10, "none", 0.01): (0.217747485, 0.782252515),
    (20, 10, "prior", 0.01): (0.244689897, 0.755310103),
    (20, 10, "posterior", 0.01): (0.236835397, 0.763164603),
    (50, 1, "none", 0.05): (0.000506228, 0.106469546),
    (50, 1, "prior", 0.05): (0.000801260, 0.096715526),
    (50, 1, "posterior", 0.05): (0.001637312, 0.081155824),
    (50, 1, "none", 0.01): (0.000100246, 0.139404125),
    (50, 1, "prior", 0.01): (0.000175929, 0.128210618),
    (50, 1, "posterior", 0.01): (0.000386742, 0.112099755),
    (50, 5, "none", 0.05): (0.033275094, 0.218135366),
    (50, 5, "prior", 0.05): (0.037606861, 0.205733147),
    (50, 5, "posterior", 0.05): (0.038729431, 0.202734486),
    (50, 5, "none", 0.01): (0.022217815, 0.258049729),
    (50, 5, "prior", 0.01): (0.025460395, 0.244779858),
    (50, 5, "posterior", 0.01): (0.026671650, 0.240205944),
    (50, 12, "none", 0.05): (0.130609916, 0.381690748),
    (50, 12, "prior", 0.05): (0.139506432, 0.367603275),
    (50, 12, "posterior", 0.05): (0.137847260, 0.370179486),
    (50, 12, "none", 0.01): (0.105550132, 0.425492219),
    (50, 12, "prior", 0.01): (0.113328903, 0.411172094),
    (50, 12, "posterior", 0.01): (0.111952589, 0.413654396),
    (50, 25, "none", 0.05): (0.355272997, 0.644727003),
    (50, 25, "prior", 0.05): (0.368603137, 0.631396863),
    (50, 25, "posterior", 0.05): (0.364446635, 0.635553365),
    (50, 25, "none", 0.01): (0.315510421, 0.684489579),
    (50, 25, "prior", 0.01): (0.328238530, 0.671761470),
    (50, 25, "posterior", 0.01): (0.324286608, 0.675713392),
    (100, 1, "none", 0.05): (0.000253146, 0.054459385),
    (100, 1, "prior", 0.05): (0.000352773, 0.050767030),
    (100, 1, "posterior", 0.05): (0.000813591, 0.041304627),
    (100, 1, "none", 0.01): (0.000050124, 0.071957682),
    (100, 1, "prior", 0.01): (0.000075131, 0.067661210),
    (100, 1, "posterior", 0.01): (0.000191353, 0.057543736),
    (100, 10, "none", 0.05): (0.049004689, 0.176222598),
    (100, 10, "prior", 0.05): (0.051797221, 0.170461038),
    (100, 10, "posterior", 0.05): (0.052268258, 0.169519071),
    (100, 10, "none", 0.01): (0.038195653, 0.201953521),
    (100, 10, "prior", 0.01): (0.040537242, 0.195843019),
    (100, 10, "posterior", 0.01): (0.041006320, 0.194658717),
    (100, 25, "none", 0.05): (0.168779738, 0.346552496),
    (100, 25, "prior", 0.05): (0.173918951, 0.339579188),
    (100, 25, "posterior", 0.05): (0.172834303, 0.341037861),
    (100, 25, "none", 0.01): (0.147743708, 0.376857270),
    (100, 25, "prior", 0.01): (0.152475783, 0.369777125),
    (100, 25, "posterior", 0.01): (0.151500917, 0.371222553),
    (100, 50, "none", 0.05): (0.398321130, 0.601678870),
    (100, 50, "prior", 0.05): (0.405283846, 0.594716154),
    (100, 50, "posterior", 0.05): (0.403066503, 0.596933497),
    (100, 50, "none", 0.01): (0.368861437, 0.631138563),
    (100, 50, "prior", 0.01): (0.375630905, 0.624369095),
    (100, 50, "posterior", 0.01): (0.373488995, 0.626511005),
}

WORKED_CP_EXACT = (0.011467689, 0.103257444)
WORKED_PRIOR_LEVEL_EXACT = 0.069776470
WORKED_PRIOR_EXACT = (0.012752758, 0.098320745)
WORKED_POSTERIOR_LEVEL_EXACT = 0.093855062
WORKED_POSTERIOR_EXACT = (0.014054808, 0.093797637)


# --------------------------------------------------------------------------
# Independent computation routes used live at test time.

def binom_tail_at_most(n: int, x: int, p: float) -> float:
    """P(X <= x) for X ~ Bin(n, p), summed from exact integer coefficients."""
    return sum(math.comb(n, k) * p ** k * (1.0 - p) ** (n - k) for k in range(x + 1))


def binom_tail_at_least(n: int, x: int, p: float) -> float:
    """P(X >= x) for X ~ Bin(n, p)."""
    return sum(math.comb(n, k) * p ** k * (1.0 - p) ** (n - k) for k in range(x, n + 1))


def beta_quantile_oracle(q: float, a: float, b: float) -> float:
    from scipy.stats import beta as beta_dist

    return float(beta_dist.ppf(q, a, b))


def reg_inc_beta_oracle(x: float, a: float, b: float) -> float:
    from scipy.special import betainc

    return float(betainc(a, b, x))


def cp_oracle(n: int, x: int, level: float) -> tuple[float, float]:
    """Equal-tailed exact interval endpoints through scipy's beta quantiles."""
    from scipy.stats import beta as beta_dist

    lower = 0.0 if x == 0 else float(beta_dist.ppf(level / 2, x, n - x + 1))
    upper = 1.0 if x == n else float(beta_dist.isf(level / 2, x + 1, n - x))
    return lower, upper


def bayes_oracle(n: int, x: int, alpha: float, r: float, s: float) -> tuple[float, float]:
    from scipy.stats import beta as beta_dist

    return (float(beta_dist.ppf(alpha / 2, x + r, n - x + s)),
            float(beta_dist.isf(alpha / 2, x + r, n - x + s)))


def log_beta_mp(a: float, b: float, dps: int = 40) -> float:
    import mpmath as mp

    with mp.workdps(dps):
        return float(mp.log(mp.beta(a, b)))


def reg_inc_beta_mp(x: float, a: float, b: float, dps: int = 50) -> float:
    """Regularized incomplete beta in extended precision.  The complement
    flip keeps mpmath's hypergeometric series convergent for extreme inputs."""
    import mpmath as mp

    with mp.workdps(dps):
        if x > a / (a + b):
            value = 1 - mp.betainc(b, a, 0, 1 - x, regularized=True)
        else:
            value = mp.betainc(a, b, 0, x, regularized=True)
        return float(value)


def normal_quantile_mp(q: float, dps: int = 50) -> float:
    import mpmath as mp

    with mp.workdps(dps):
        return float(mp.sqrt(2) * mp.erfinv(2 * mp.mpf(q) - 1))


def wald_oracle(n: int, x: int, alpha: float, dps: int = 50) -> tuple[float, float]:
    """The normal-approximation interval in extended precision, clamped to
    [0, 1] like the implementation under test."""
    import mpmath as mp

    with mp.workdps(dps):
        z = mp.sqrt(2) * mp.erfinv(1 - mp.mpf(alpha))
        p_hat = mp.mpf(x) / n
        half = z * mp.sqrt(p_hat * (1 - p_hat) / n)
        return (float(max(mp.mpf(0), p_hat - half)),
                float(min(mp.mpf(1), p_hat + half)))


def wilson_oracle(n: int, x: int, alpha: float, dps: int = 50) -> tuple[float, float]:
    """The score interval in extended precision, with the edge conventions of
    the implementation under test (exact 0 at x = 0, exact 1 at x = n)."""
    import mpmath as mp

    with mp.workdps(dps):
        z = mp.sqrt(2) * mp.erfinv(1 - mp.mpf(alpha))
        z2 = z * z
        p_hat = mp.mpf(x) / n
        center = (x + z2 / 2) / (n + z2)
        half = z / (n + z2) * mp.sqrt(p_hat * (1 - p_hat) * n + z2 / 4)
        lower = 0.0 if x == 0 else float(max(mp.mpf(0), center - half))
        upper = 1.0 if x == n else float(min(mp.mpf(1), center + half))
        return lower, upper


def quad_mean_coverage(level: float, n: int, w1: float, w2: float) -> float:
    """Mean coverage by adaptive quadrature: integrate the exact pointwise
    coverage times the Beta(w1, w2) density, split at every endpoint so each
    piece has a smooth integrand."""
    from scipy.integrate import quad
    from scipy.stats import beta as beta_dist, binom as binom_dist

    bounds = [cp_oracle(n, y, level) for y in range(n + 1)]
    lows = np.array([b[0] for b in bounds])
    highs = np.array([b[1] for b in bounds])
    ys = np.arange(n + 1)
    knots = sorted({0.0, 1.0, *lows.tolist(), *highs.tolist()})

    def integrand(p):
        pmf = binom_dist.pmf(ys, n, p)
        cover = float(pmf[(lows <= p) & (p <= highs)].sum())
        return cover * beta_dist.pdf(p, w1, w2)

    total = 0.0
    for a, b in zip(knots[:-1], knots[1:]):
        if b - a > 1e-15:
            piece = quad(integrand, a, b, epsabs=1e-13, epsrel=1e-11,
                         limit=200, full_output=1)
            total += piece[0]
    return total


def mc_interval_metrics(bounds, n: int, p: float, replicates: int = 1_000_000,
                        seed: int = 0) -> tuple[float, float, float, float]:
    """Monte Carlo coverage and expected length of per-outcome intervals.

    ``bounds`` is a sequence of (lower, upper) pairs indexed by the outcome.
    Returns (coverage, coverage standard error, length, length standard error).
    """
    rng = np.random.default_rng(seed)
    lower = np.array([b[0] for b in bounds])
    upper = np.array([b[1] for b in bounds])
    draws = rng.binomial(n, p, size=replicates)
    inside = (lower[draws] <= p) & (p <= upper[draws])
    widths = (upper - lower)[draws]
    coverage = float(inside.mean())
    coverage_se = math.sqrt(max(coverage * (1.0 - coverage), 1e-12) / replicates)
    length = float(widths.mean())
    length_se = float(widths.std(ddof=1)) / math.sqrt(replicates)
    return coverage, coverage_se, length, length_se

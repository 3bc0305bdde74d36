"""Independent reference values frozen into the unit tests.

Plain enumeration in Python floats/mpmath plus scipy quadrature; nothing here
imports the C++ library.
"""

import itertools
import math

import mpmath as mp
import numpy as np
from scipy import integrate, stats

mp.mp.dps = 40


def three(a, p):
    return [(-a, p), (0.0, 1 - 2 * p), (a, p)]


def dilate(base, s):
    out = {}
    for x, p in base:
        for y in (1 - s, 1 + s):
            out[x * y] = out.get(x * y, 0.0) + p / 2
    return sorted(out.items())


def garch_m2_paths(a0, a1, b1, s0sq, laws):
    """Yields (prob, xs, sigma_sq_next) over all innovation paths."""
    for combo in itertools.product(*laws):
        prob = 1.0
        s2 = mp.mpf(s0sq)
        xs = []
        for e, p in combo:
            prob *= p
            xs.append(mp.sqrt(s2) * e)
            s2 = a0 + (a1 * e * e + b1) * s2
        yield prob, xs, s2


def main():
    r2 = math.sqrt(2.0)
    base = three(r2, 0.25)
    n = 2
    laws = [base] * (n + 1)
    e_x2sq = sum(p * xs[2] ** 2 for p, xs, _ in garch_m2_paths(0.1, 0.3, 0.5, 1.0, laws))
    sl_sig = sum(p * max(s - mp.mpf("0.5"), 0) for p, _, s in garch_m2_paths(0.1, 0.3, 0.5, 1.0, laws))
    e_abs_s = sum(p * abs(sum(xs)) for p, xs, _ in garch_m2_paths(0.1, 0.3, 0.5, 1.0, laws))
    e_pos_s_sq = sum(p * max(sum(xs), 0) ** 2 for p, xs, _ in garch_m2_paths(0.1, 0.3, 0.5, 1.0, laws))
    pert = [base, dilate(base, 0.3), base]
    e_abs_s_pert = sum(p * abs(sum(xs)) for p, xs, _ in garch_m2_paths(0.1, 0.3, 0.5, 1.0, pert))
    print("m2 three-point n=2: E[X_2^2] =", mp.nstr(e_x2sq, 17))
    print("m2 three-point n=2: E[(sigma^2_3 - 0.5)^+] =", mp.nstr(sl_sig, 17))
    print("m2 three-point n=2: E|S_2| =", mp.nstr(e_abs_s, 17))
    print("m2 three-point n=2: E[(S_2^+)^2] =", mp.nstr(e_pos_s_sq, 17))
    print("m2 three-point n=2, dilated e_1 (0.3): E|S_2| =", mp.nstr(e_abs_s_pert, 17))

    # avgarch m1: sigma' = a0 + (a1 |e| + b1) sigma, two-point e, sigma_0 = 1
    sig = 1.0
    for _ in range(4):
        sig = 0.2 + (0.2 * 1.0 + 0.2) * sig
    print("avgarch m1 two-point: sigma_4 =", repr(sig))

    # closed form vs iteration
    s2 = 1.0
    for v in (0.5, 2.0, 1.5):
        s2 = 0.1 + (0.3 * v + 0.5) * s2
    print("garch11 eps^2 = (0.5, 2, 1.5): sigma^2_3 =", repr(s2))

    sample = [float(i) for i in range(1, 11)]
    sd = stats.tstd(sample)
    iqr = np.quantile(sample, 0.75) - np.quantile(sample, 0.25)
    h = 0.9 * min(sd, iqr / 1.34) * len(sample) ** -0.2
    f5 = sum(stats.norm.pdf((5.0 - x) / h) for x in sample) / (len(sample) * h)
    print("silverman 1..10 =", repr(float(h)), " kde(5) =", repr(float(f5)))

    print("gaussian q(0.975) =", repr(stats.norm.ppf(0.975)))
    print("t5 normalized q(0.975) =", repr(stats.t.ppf(0.975, 5) * math.sqrt(3 / 5)))
    print("laplace normalized q(0.9) =", repr(stats.laplace.ppf(0.9, scale=1 / math.sqrt(2))))

    c = math.sqrt(3 / 5)
    m2 = integrate.quad(lambda x: x**2 * stats.t.pdf(x / c, 5) / c, -math.inf, math.inf)[0]
    m4 = integrate.quad(lambda x: x**4 * stats.t.pdf(x / c, 5) / c, -math.inf, math.inf)[0]
    print("t5 normalized: E e^2 =", repr(m2), " beta2 =", repr(m4 / m2**2))
    b = 1 / math.sqrt(2)
    m2 = integrate.quad(lambda x: x**2 * stats.laplace.pdf(x, scale=b), -math.inf, math.inf)[0]
    m4 = integrate.quad(lambda x: x**4 * stats.laplace.pdf(x, scale=b), -math.inf, math.inf)[0]
    print("laplace normalized: beta2 =", repr(m4 / m2**2))
    m2 = integrate.quad(lambda x: x**2 * stats.norm.pdf(x), -math.inf, math.inf)[0]
    m4 = integrate.quad(lambda x: x**4 * stats.norm.pdf(x), -math.inf, math.inf)[0]
    print("gaussian: beta2 =", repr(m4 / m2**2))

    # E[(e^2 - k)^+] for the Gaussian and normalized t5 at a few k
    for k in (0.5, 1.0, 2.0, 4.0):
        g = integrate.quad(lambda x: max(x * x - k, 0) * stats.norm.pdf(x), -math.inf, math.inf, limit=200)[0]
        t = integrate.quad(lambda x: max(x * x - k, 0) * stats.t.pdf(x / c, 5) / c, -math.inf, math.inf,
                           limit=200)[0]
        print(f"stop-loss of e^2 at {k}: gaussian {g!r} t5 {t!r}")

    d = dilate([(-1.0, 0.5), (1.0, 0.5)], 0.5)
    print("dilated two-point (0.5):", d, " SL(1) =", sum(p * max(x - 1, 0) for x, p in d))


def two_point_sum_stop_loss():
    """E[(S_3 - 0.5)^+] for garch11 (0.1, 0.3, 0.5), sigma_0^2 = 1, e = +-1.

    e^2 = 1, so sigma_k is deterministic and S_3 has 16 equally likely values.
    """
    s2 = [1.0]
    for _ in range(3):
        s2.append(0.1 + 0.8 * s2[-1])
    sig = [math.sqrt(v) for v in s2]
    total = 0.0
    for signs in itertools.product((-1, 1), repeat=4):
        s = sum(e * v for e, v in zip(signs, sig))
        total += max(s - 0.5, 0.0) / 16
    return total


if __name__ == "__main__":
    main()
    print("two-point n=3: E[(S_3 - 0.5)^+] =", repr(two_point_sum_stop_loss()))

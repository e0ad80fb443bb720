#!/usr/bin/env python3
"""Independent reference values frozen into the C++ test suites.

Every number here is produced without the C++ library: brute-force midpoint
rules, exact rational series, closed forms, or mpmath at 30+ digits.
Run: python3 tests/oracles/compute_oracles.py
"""
from fractions import Fraction

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def midpoint(f, panels=10_000_000, chunk=1_000_000):
    h = 1.0 / panels
    total = 0.0
    for start in range(0, panels, chunk):
        t = (np.arange(start, min(start + chunk, panels), dtype=np.float64) + 0.5) * h
        total += np.sum(f(t))
    return total * h


def report(name, value):
    print(f"{name:48s} {mp.nstr(mp.mpf(value), 20)}")


# integrate_finite: exp(-1/t - 1/(1-t)) on (0,1)
mid = midpoint(lambda t: np.exp(-1.0 / t - 1.0 / (1.0 - t)))
ref = mp.quad(lambda t: mp.exp(-1 / t - 1 / (1 - t)), [0, 0.5, 1])
report("damped_unit_midpoint_1e7", mid)
report("damped_unit_mpmath", ref)

# extended_beta(1,1;0.5,0.5)
mid = midpoint(lambda t: np.exp(-0.5 / t - 0.5 / (1.0 - t)))
ref = mp.quad(lambda t: mp.exp(-mp.mpf(1) / 2 / t - mp.mpf(1) / 2 / (1 - t)), [0, 0.5, 1])
report("ext_beta_1_1_half_half_midpoint_1e7", mid)
report("ext_beta_1_1_half_half_mpmath", ref)

# integrate_to_infinity: 1/(x(x+1)^2) on [1,inf) -> ln2 - 1/2 (partial fractions)
report("inv_x_xp1_sq_closed", mp.log(2) - mp.mpf(1) / 2)
report("inv_x_xp1_sq_mpmath", mp.quad(lambda x: 1 / (x * (x + 1) ** 2), [1, mp.inf]))

# kummer 1F1(0.5;1.5;-2): 200-term exact rational series
b, c, z = Fraction(1, 2), Fraction(3, 2), Fraction(-2)
term, acc = Fraction(1), Fraction(0)
for n in range(200):
    acc += term
    term = term * (b + n) / ((c + n) * (n + 1)) * z
report("kummer_half_threehalf_m2_rational200", mp.mpf(acc.numerator) / acc.denominator)
report("kummer_half_threehalf_m2_mpmath", mp.hyp1f1(0.5, 1.5, -2))


def ext_beta(x, y, p, q):
    f = lambda t: t ** (x - 1) * (1 - t) ** (y - 1) * mp.exp(-p / t - q / (1 - t))
    return mp.quad(f, [0, mp.mpf(1) / 4, mp.mpf(1) / 2, mp.mpf(3) / 4, 1])


# extended kummer Phi_{0.1,0.1}(1;2;-1): series with high-precision coefficients
p = q = mp.mpf(1) / 10
bb, cc, zz = mp.mpf(1), mp.mpf(2), mp.mpf(-1)
norm = mp.beta(bb, cc - bb)
s = mp.mpf(0)
for n in range(60):
    s += ext_beta(bb + n, cc - bb, p, q) / norm * zz ** n / mp.factorial(n)
report("ext_kummer_1_2_m1_pq01_series", s)
phi_int = mp.quad(lambda t: (1 - t) ** 0 * mp.exp(zz * t - p / t - q / (1 - t)), [0, 0.5, 1]) / norm
report("ext_kummer_1_2_m1_pq01_integral", phi_int)

# extended gauss F_{0.25,0.25}(1,1;2;-0.5)
p = q = mp.mpf(1) / 4
a, bb, cc, zz = mp.mpf(1), mp.mpf(1), mp.mpf(2), mp.mpf(-0.5)
norm = mp.beta(bb, cc - bb)
fint = mp.quad(lambda t: t ** (bb - 1) * (1 - t) ** (cc - bb - 1) * (1 - zz * t) ** (-a)
               * mp.exp(-p / t - q / (1 - t)), [0, 0.5, 1]) / norm
report("ext_gauss_1_1_2_mhalf_pq025_integral", fint)
s = mp.mpf(0)
for n in range(80):
    s += mp.rf(a, n) * ext_beta(bb + n, cc - bb, p, q) / norm * zz ** n / mp.factorial(n)
report("ext_gauss_1_1_2_mhalf_pq025_series80", s)

# Mathieu series, lambda=eta=1, b=1, c=2, p=q=0, a_n=n, r=1:
# term = 2F1(1,1;2;-1/n) / (n (n+1)) = ln(1+1/n)/(n+1)
term = lambda n: mp.log(1 + 1 / mp.mpf(n)) / (n + 1)
ref = mp.nsum(term, [1, mp.inf])
report("mathieu_l1_e1_b1_c2_r1_nsum", ref)
n = np.arange(1, 1_000_001, dtype=np.float64)
partial = float(np.sum(np.log1p(1.0 / n)[::-1] / (n + 1.0)[::-1]))
# terms decrease: sum_{n>N} t(n) in [int_{N+1}^inf t, int_N^inf t], t(x) ~ x^-2
lo_tail = mp.quad(term, [1_000_001, mp.inf])
hi_tail = mp.quad(term, [1_000_000, mp.inf])
report("  brute partial + lower tail", partial + lo_tail)
report("  brute partial + upper tail", partial + hi_tail)
assert partial + lo_tail - 1e-12 <= ref <= partial + hi_tail + 1e-12

ref_alt = mp.nsum(lambda k: (-1) ** (k - 1) * term(k), [1, mp.inf])
report("mathieu_alt_l1_e1_b1_c2_r1_nsum", ref_alt)
signs = np.where(n % 2 == 1, 1.0, -1.0)
partial_alt = float(np.sum((signs * np.log1p(1.0 / n) / (n + 1.0))[::-1]))
leibniz = float(term(1_000_001))
report("  brute alt partial (Leibniz bound)", partial_alt)
assert abs(ref_alt - partial_alt) <= leibniz

# Cahen integral alpha=2, beta=1, b=1, c=2, p=q=0, a_n=n, r=1:
# 2F1(2,1;2;-1/x) = (1+1/x)^-1, integrand x^-1 (x+1)^-2 with weight floor(x)
G = lambda x: mp.log(mp.mpf(x) / (x + 1)) + 1 / (mp.mpf(x) + 1)
cahen = mp.nsum(lambda k: k * (G(k + 1) - G(k)), [1, mp.inf])
report("cahen_a2_b1_seq_n_r1", cahen)
brute = sum(k * (G(k + 1) - G(k)) for k in range(1, 2001))
report("  2000-interval partial", brute)

# U integral, a_n=n, lambda=2, eta=2, r=1: sum_N N int_N^{N+1} x^-2 (x+1)^-2 dx
H = lambda x: -1 / mp.mpf(x) - 1 / (mp.mpf(x) + 1) + 2 * mp.log((mp.mpf(x) + 1) / x)
# check antiderivative against quadrature
assert abs((H(3) - H(2)) - mp.quad(lambda x: x ** -2 * (x + 1) ** -2, [2, 3])) < 1e-30
u22 = mp.nsum(lambda k: k * (H(k + 1) - H(k)), [1, mp.inf])
report("u_integral_l2_e2_seq_n_r1", u22)

# closed_tail_2f1 quadrature cross-checks
for (a1, lam, eta, r) in [(2, 1, 1, 1), (1, 0.5, 1, 0.5)]:
    v = mp.quad(lambda x: x ** (-lam) * (x + r * r) ** (-eta), [a1, mp.inf])
    report(f"closed_tail a1={a1} lam={lam} eta={eta} r={r}", v)

# Laplace identity spot check with p=q=0 (classical kernels)
lam, b_, c_, zlap, r = mp.mpf(0.75), mp.mpf(0.5), mp.mpf(1.5), mp.mpf(2), mp.mpf(1)
lhs = mp.hyp2f1(lam, b_, c_, -r * r / zlap)
rhs = zlap ** lam / mp.gamma(lam) * mp.quad(
    lambda t: mp.exp(-zlap * t) * t ** (lam - 1) * mp.hyp1f1(b_, c_, -r * r * t), [0, 1, mp.inf])
report("laplace classical lhs", lhs)
report("laplace classical rhs", rhs)

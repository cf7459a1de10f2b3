"""Regenerates the frozen high-precision reference values used by the Rust tests.

Run with: python3 mpmath_values.py
"""
import mpmath as mp

mp.mp.dps = 40


def dd(v):
    hi = float(v)
    lo = float(v - mp.mpf(hi))
    return f"({hi!r}, {lo!r})"


def c(v):
    return f"({mp.nstr(mp.re(v), 25)}, {mp.nstr(mp.im(v), 25)})"


def chi(s):
    return (2 * mp.pi) ** s * mp.gamma(1 - s) * mp.sin(mp.pi * s / 2) / mp.pi


print("# double-double constants")
for name, v in [("PI", mp.pi), ("TWO_PI", 2 * mp.pi), ("HALF_PI", mp.pi / 2),
                ("LN2", mp.log(2)), ("LN_TWO_PI", mp.log(2 * mp.pi)), ("LN_PI", mp.log(mp.pi))]:
    print(name, dd(v))

print("# loggamma")
for z in [mp.mpc(0.5, 50), mp.mpc(0.25, -1e5), mp.mpc(1e-3, 1e6), mp.mpc(2.75, 0.5), mp.mpc(0.0, 7.0)]:
    print(z, c(mp.loggamma(z)))

print("# chi")
for s in [mp.mpc(0.5, 1000), mp.mpc(0.3, 1e6), mp.mpc(0.9, 12.5), mp.mpc(1.0, 3.0)]:
    print(s, c(chi(s)))

print("# hurwitz zeta1(x, s) = zeta(s, x + 1)")
for x, s in [(0.0, mp.mpc(0.5, 50)), (1.3, mp.mpc(0.5, 2000)), (0.3, mp.mpc(0.6, 10)),
             (2.7, mp.mpc(1.0, 20)), (0.5, mp.mpc(0.6, 2000)), (0.1, mp.mpc(0.5, 100)),
             (0.0, mp.mpc(0.5, 300)), (1.3, mp.mpc(0.5, 1e4))]:
    print(x, s, c(mp.zeta(s, x + 1)))

print("# riemann zeta at large height")
s = mp.mpc(0.5, 1e6)
print(s, c(mp.zeta(s)))

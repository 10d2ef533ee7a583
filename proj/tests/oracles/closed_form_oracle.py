"""Reference values for the closed-form unit tests, computed at 40 digits.

Run with `python3 closed_form_oracle.py`; the printed numbers are frozen in
tests/unit/test_core.cpp. Nothing here imports the C++ library.
"""
from mpmath import mp, mpf, mpc, exp, log, pi, sqrt, fabs, acos

mp.dps = 40


def t(r, a, th):
    e = exp(mpc(0, 1) * th)
    return (r - a * e) / (1 - r * a * e)


def bracket(T):
    x = 1 - T
    return (1 + 2 * x**2 + 2 * x**4) ** mpf(-0.5)


def coincidence(tt):
    T = fabs(tt) ** 2
    u = T * bracket(T) / tt.conjugate() ** 2
    return fabs(u + 1) ** 2 / 4


def show(name, v):
    print(f"{name:12s} {mp.nstr(v, 17)}")


r, a = mpf("0.9996"), mpf("0.9997")
t0 = t(r, a, 0)
show("t(0)", t0.real)
show("I1(0)", fabs(t0) ** 2)
show("I7(0)", fabs(1 + t0) ** 2 / 4)
show("I8(0)", fabs(1 - t0) ** 2 / 4)
show("A(T=0.5)", mpf("0.5") * bracket(mpf("0.5")))
show("1/sqrt5", 1 / sqrt(5))
show("P real lim", (1 + 1 / sqrt(5)) ** 2 / 4)
show("P crit lim", (1 - 1 / sqrt(5)) ** 2 / 4)
show("P(0)", coincidence(t0))
show("t(pi)", t(r, a, pi).real)
tt = t(r, a, mpf("1e-3"))
show("Re t(1e-3)", tt.real)
show("Im t(1e-3)", tt.imag)
show("P(1e-3)", coincidence(tt))
show("A(1e-3)", fabs(tt) ** 2 * bracket(fabs(tt) ** 2))

lam, R = mpf("780e-9"), mpf("40e-6")
dl = -(lam**2) * log(a * r) / (4 * pi**2 * R)
show("dlambda", dl)
show("Q", lam / dl)
x = r * a
show("FWHM/gamma", 2 * acos(2 - (1 + x * x) / (2 * x)) / (-log(x)))

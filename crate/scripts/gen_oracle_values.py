#!/usr/bin/env python3
"""High-precision reference values for the special-function test suite.

Run:  python3 scripts/gen_oracle_values.py > /tmp/oracle_values.txt
"""
import mpmath as mp

mp.mp.dps = 30


def xi(s):
    return 0.5 * s * (s - 1) * mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def Xi(t):
    return mp.re(xi(mp.mpf(0.5) + 1j * mp.mpf(t)))


def Xi_prime(t):
    return mp.diff(Xi, mp.mpf(t))


def envelope(t):
    t = mp.mpf(t)
    return 0.5 * (t * t + mp.mpf(1) / 4) * mp.pi ** mp.mpf(-0.25) * abs(mp.gamma(mp.mpf(0.25) + 0.5j * t))


def L(s):
    s = mp.mpc(s)
    return 1 / s + 1 / (s - 1) - mp.log(mp.pi) / 2 + mp.digamma(s / 2) / 2


def Lp(s):
    s = mp.mpc(s)
    return -1 / s ** 2 - 1 / (s - 1) ** 2 + mp.polygamma(1, s / 2) / 4


def show(name, v):
    if isinstance(v, mp.mpc) or (hasattr(v, "imag") and v.imag != 0):
        print(f"{name} = {mp.nstr(v.real, 20)} + {mp.nstr(v.imag, 20)}i")
    else:
        print(f"{name} = {mp.nstr(mp.mpf(v), 20)}")


print("# scalar constants")
show("zeta(1/2)", mp.zeta(0.5))
show("Xi(0)", Xi(0))
show("xi(1/2) closed", -mp.mpf(1) / 8 * mp.pi ** mp.mpf(-0.25) * mp.gamma(mp.mpf(0.25)) * mp.zeta(0.5))
show("sum_{k>=1} (k-1)!/(2k)!", mp.nsum(lambda k: mp.factorial(k - 1) / mp.factorial(2 * k), [1, mp.inf]))

print("\n# Z(t) = siegelz")
for t in [0, 0.5, 1, 2, 5, 10, 14.134725141734694, 18, 30, 50, 100, 150, 250, 400, 500, 600, 800, 1000, 5000, 10000, 100000, 1000000]:
    show(f"Z({t})", mp.siegelz(t))

print("\n# Z'(t)")
for t in [5, 18, 30, 100, 250, 600, 1000, 10000, 100000]:
    show(f"Zp({t})", mp.diff(mp.siegelz, mp.mpf(t)))

print("\n# theta(t) = siegeltheta")
for t in [0.5, 2, 5, 16, 30, 100, 1000, 100000]:
    show(f"theta({t})", mp.siegeltheta(t))

print("\n# |zeta(1/2+it)|")
for t in [0.5, 3, 25, 80, 100]:
    show(f"abszeta({t})", abs(mp.zeta(0.5 + 1j * mp.mpf(t))))

print("\n# zeta(s), zeta'(s) off the line")
for s in [mp.mpc(1.5, 20), mp.mpc(-0.5, 37.5), mp.mpc(0.5, 3)]:
    show(f"zeta({s})", mp.zeta(s))
    show(f"zetap({s})", mp.zeta(s, derivative=1))

print("\n# lngamma / digamma / trigamma (complex)")
for z in [mp.mpc(0.25, 0.5), mp.mpc(0.25, 25), mp.mpc(0.25, 5000), mp.mpc(3, -4), mp.mpc(-1.25, 0.25), mp.mpc(12, 0)]:
    show(f"lngamma({z})", mp.loggamma(z))
    show(f"digamma({z})", mp.digamma(z))
    show(f"trigamma({z})", mp.polygamma(1, z))

print("\n# L(s), L'(s)")
for s in [mp.mpc(2, 0), mp.mpc(1.5, 0), mp.mpc(-0.5, 0), mp.mpc(1.5, 50), mp.mpc(-0.5, 100), mp.mpc(0.5, 14), mp.mpc(3.5, 0.25)]:
    show(f"L({s})", L(s))
    show(f"Lp({s})", Lp(s))

print("\n# unscaled Xi(t) and Xi'(t)")
for t in [0, 1, 5, 10, 14, 20, 30, 45]:
    show(f"Xi({t})", Xi(t))
    show(f"Xip({t})", Xi_prime(t))

print("\n# envelope E(t) and scaled Xi = Xi/E (should equal -Z)")
for t in [0, 10, 100, 1000]:
    show(f"E({t})", envelope(t))
    show(f"XiovE({t})", Xi(t) / envelope(t))

print("\n# first zeta zeros (for data file)")
zeros = [mp.zetazero(k).imag for k in range(1, 101)]
with open("/tmp/zeta_zeros_100.txt", "w") as f:
    for z in zeros:
        f.write(mp.nstr(z, 15) + "\n")
print("wrote /tmp/zeta_zeros_100.txt; N(100) =", sum(1 for z in zeros if z <= 100))

print("\n# first zeros of Xi' (scan + bisect on Xi')")
xip_zeros = []
t = mp.mpf(1.0)
step = mp.mpf(0.05)
prev = Xi_prime(t)
while len(xip_zeros) < 16 and t < 70:
    t2 = t + step
    cur = Xi_prime(t2)
    if mp.sign(prev) != mp.sign(cur):
        r = mp.findroot(Xi_prime, (t, t2), solver="bisect", tol=mp.mpf(10) ** (-24))
        xip_zeros.append(r)
    t, prev = t2, cur
for i, r in enumerate(xip_zeros):
    print(f"xip_zero[{i}] = {mp.nstr(r, 17)}")

print("\n# first zeros of Z'")
zp_zeros = []
t = mp.mpf(3.0)
prev = mp.diff(mp.siegelz, t)
while len(zp_zeros) < 16 and t < 70:
    t2 = t + step
    cur = mp.diff(mp.siegelz, t2)
    if mp.sign(prev) != mp.sign(cur):
        r = mp.findroot(lambda u: mp.diff(mp.siegelz, u), (t, t2), solver="bisect", tol=mp.mpf(10) ** (-24))
        zp_zeros.append(r)
    t, prev = t2, cur
for i, r in enumerate(zp_zeros):
    print(f"zp_zero[{i}] = {mp.nstr(r, 17)}")

"""Orbit merging and hyperbolic step for phi(z) = ((z + 1/3)/(1 + z/3))^2 at 60 digits."""
import mpmath as mp

mp.mp.dps = 60
alpha = mp.mpf(1) / 3


def phi(z):
    b = (z + alpha) / (1 + alpha * z)
    return b * b


def rho(z, w):
    return abs((z - w) / (1 - mp.conj(z) * w))


z, w = mp.mpc(0), mp.mpc(0, 0.5)
first_below = None
checkpoints = {1, 10, 100, 1000, 10000, 100000}
for n in range(0, 100001):
    r = rho(z, w)
    if first_below is None and r < 1e-3:
        first_below = n
    if n in checkpoints:
        print("merge n=%d rho=%s" % (n, mp.nstr(r, 12)))
    z, w = phi(z), phi(w)
print("first n with rho < 1e-3:", first_below)

z = mp.mpc(0)
steps = []
for n in range(10001):
    fz = phi(z)
    steps.append(rho(z, fz))
    z = fz
for n in (1, 10, 100, 1000, 5000, 10000):
    print("step n=%d s=%s" % (n, mp.nstr(steps[n], 15)))
print("ratio", mp.nstr(steps[10000] / steps[5000], 12))

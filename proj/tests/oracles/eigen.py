"""Depth sweep for the truncated grand-orbit product of
phi(z) = ((z + 1/2)/(1 + z/2))^2 from z_0 = 0, forward 12, on the ring
|z| = 0.4 (64 points at angles 2 pi (k + 1/2)/64). Preimages are taken in
closed form, b^{-1}(+-sqrt(w)); evaluation in 50-digit arithmetic. The tau
estimate uses only ring points z with z and phi(z) at pseudo-hyperbolic
distance > 0.05 from every zero."""
import mpmath as mp

mp.mp.dps = 50
al = mp.mpf(1) / 2


def b(z):
    return (z + al) / (1 + al * z)


def binv(u):
    return (u - al) / (1 - al * u)


def phi(z):
    return b(z) ** 2


def pre(w):
    s = mp.sqrt(mp.mpc(w))
    r1, r2 = binv(s), binv(-s)
    if abs(r1 - r2) < mp.mpf(10) ** -30:
        return [(r1, 2)]
    return [(r1, 1), (r2, 1)]


def grand(fn, depth):
    zs = [mp.mpc(0)]
    for _ in range(fn):
        zs.append(phi(zs[-1]))
    nodes = [(z, 1) for z in zs]
    for z in zs:
        front = [(z, 1)]
        for _ in range(depth):
            nxt = []
            for p, mu in front:
                for c, lm in pre(p):
                    if any(abs(c - q) < 1e-9 for q in zs):
                        continue
                    nxt.append((c, mu * lm))
                    nodes.append((c, mu * lm))
            front = nxt
    return nodes


def mfac(a, z):
    if a == 0:
        return z
    return -(mp.conj(a) / abs(a)) * (z - a) / (1 - mp.conj(a) * z)


def B(nodes, z):
    v = mp.mpc(1)
    for a, mu in nodes:
        v *= mfac(a, z) ** mu
    return v


def weiszfeld(pts, iters=200):
    m = sum(pts) / len(pts)
    for _ in range(iters):
        w = [1 / max(abs(p - m), mp.mpf(10) ** -40) for p in pts]
        m = sum(p * wi for p, wi in zip(pts, w)) / sum(w)
    return m


ring = [mp.mpf(0.4) * mp.expjpi(mp.mpf(2 * k + 1) / 64) for k in range(64)]
for depth in (4, 6, 8):
    nd = grand(12, depth)
    bz = [B(nd, z) for z in ring]
    bf = [B(nd, phi(z)) for z in ring]
    def admissible(z):
        return all(abs((z - a) / (1 - mp.conj(a) * z)) > 0.05 for a, _ in nd)

    keep = [k for k, z in enumerate(ring) if admissible(z) and admissible(phi(z))]
    tau = weiszfeld([bf[k] / bz[k] for k in keep])
    res = max(abs(q + p) for p, q in zip(bz, bf))
    sq = max(abs(q * q - p * p) for p, q in zip(bz, bf))
    print(depth, len(nd), len(keep), mp.nstr(tau.real, 8), mp.nstr(tau.imag, 3), mp.nstr(res, 6), mp.nstr(sq, 6))

"""Regenerates the reference constants in ../frozen.rs.

Everything here is computed from the defining sums with mpmath at 40
digits, without reusing any of the Rust code paths: zeros come from
mpmath.polyroots on exact rational coefficients, derivatives from
mpmath.diff, and Jacobi nodes are cross-checked against scipy.
"""

from fractions import Fraction

import mpmath as mp
from scipy.special import roots_jacobi

mp.mp.dps = 40


def poch(a, m):
    out = 1
    for i in range(m):
        out *= a + i
    return out


def gammas(n, alphas, betas):
    """Exact monic coefficients from Fractions."""
    out = []
    for m in range(n + 1):
        num = poch(Fraction(-n), m)
        den = Fraction(1)
        for a in alphas:
            num *= poch(a, m)
        for b in betas:
            den *= poch(b, m)
        fact = 1
        for i in range(1, m + 1):
            fact *= i
        out.append(num / (den * fact))
    return out


def zeros(n, alphas, betas):
    g = gammas(n, alphas, betas)
    roots = mp.polyroots([mp.mpf(c.numerator) / c.denominator for c in g], maxsteps=400, extraprec=400)
    roots = [mp.mpc(r) for r in roots]
    return sorted(roots, key=lambda z: (float(z.real), float(z.imag)))


def f_seq(z, jmax):
    n = len(z)
    fs = [None, list(z)]
    for _ in range(1, jmax):
        f = fs[-1]
        fs.append([-f[i] + sum((z[i] * f[l] + z[l] * f[i]) / (z[i] - z[l]) for l in range(n) if l != i) for i in range(n)])
    return fs


def g_of(z, f):
    n = len(z)
    return [sum((f[i] + f[l]) / (z[i] - z[l]) for l in range(n) if l != i) for i in range(n)]


def expand(roots):
    coeffs = [mp.mpf(1)]
    for c in roots:
        nxt = [mp.mpf(0)] * (len(coeffs) + 1)
        for i, v in enumerate(coeffs):
            nxt[i] += c * v
            nxt[i + 1] -= v
        coeffs = nxt
    return coeffs


def residual(z, alphas, betas):
    a = expand([mp.mpf(x) for x in alphas])
    b = expand([mp.mpf(x) - 1 for x in betas])
    p, q = len(alphas), len(betas)
    fs = f_seq(z, max(q + 1, p, 1))
    gs = [[mp.mpf(1)] * len(z)] + [g_of(z, fs[j]) for j in range(1, p + 1)]
    return [sum(b[k - 1] * fs[k][i] for k in range(1, q + 2)) - sum(a[j] * gs[j][i] for j in range(p + 1)) for i in range(len(z))]


def jacobian(fun, z):
    n = len(z)
    cols = []
    for m in range(n):
        def along(t, m=m):
            w = list(z)
            w[m] = w[m] + t
            return fun(w)
        cols.append([mp.diff(lambda t: along(t)[i], 0) for i in range(n)])
    return [[cols[m][i] for m in range(n)] for i in range(n)]


def show(name, values):
    print(f"const {name}: &[[f64; 2]] = &[")
    for v in values:
        v = mp.mpc(v)
        print(f"    [{mp.nstr(v.real, 17)}, {mp.nstr(v.imag, 17)}],")
    print("];")


def show_matrix(name, rows):
    print(f"const {name}: &[&[[f64; 2]]] = &[")
    for r in rows:
        print("    &[" + ", ".join(f"[{mp.nstr(mp.mpc(v).real, 17)}, {mp.nstr(mp.mpc(v).imag, 17)}]" for v in r) + "],")
    print("];")


F = Fraction
print("// p=q=1, N=3, alpha=1.7, beta=2.3")
show("ZEROS_P1Q1", zeros(3, [F(17, 10)], [F(23, 10)]))
print("// p=q=2, N=5, alpha=(1.3, 2.2), beta=(0.8, 2.9)")
show("ZEROS_P2Q2", zeros(5, [F(13, 10), F(22, 10)], [F(8, 10), F(29, 10)]))

print("// L for p=q=1, N=3, alpha=1.2, beta=0.7, as the derivative of the residual")
z = zeros(3, [F(12, 10)], [F(7, 10)])
show("ZEROS_L_CASE", z)
show_matrix("L_P1Q1", jacobian(lambda w: residual(w, ["1.2"], ["0.7"]), z))
print("// same for p=2, q=3, N=4, alpha=(1.1, 2.4), beta=(0.9, 1.6, 2.2)")
z = zeros(4, [F(11, 10), F(24, 10)], [F(9, 10), F(16, 10), F(22, 10)])
show("ZEROS_L_CASE2", z)
show_matrix("L_P2Q3", jacobian(lambda w: residual(w, ["1.1", "2.4"], ["0.9", "1.6", "2.2"]), z))

print("// arbitrary points")
pts = [mp.mpc("0.7", "0.4"), mp.mpc("-1.1", "0.9"), mp.mpc("2.2", "-0.3"), mp.mpc("0.1", "-1.6"), mp.mpc("-0.5", "-0.2")]
fs = f_seq(pts, 4)
show("F4_POINTS", fs[4])
show("G3_POINTS", g_of(pts, fs[3]))
show_matrix("G3_JACOBIAN_POINTS", jacobian(lambda w: g_of(w, f_seq(w, 3)[3]), pts))

print("// Jacobi nodes N=3, alpha=0.5, beta=-0.3")
x_sp, _ = roots_jacobi(3, 0.5, -0.3)
nodes = [mp.findroot(lambda x: mp.jacobi(3, mp.mpf("0.5"), mp.mpf("-0.3"), x), mp.mpf(float(x0))) for x0 in x_sp]
assert max(abs(float(a) - b) for a, b in zip(nodes, x_sp)) < 1e-13
print("const JACOBI_NODES: &[f64] = &[" + ", ".join(mp.nstr(x, 17) for x in sorted(nodes)) + "];")

print("// exact gammas, N=4, alpha=3/2, beta=5/2")
print("// " + ", ".join(str(c) for c in gammas(4, [F(3, 2)], [F(5, 2)])))

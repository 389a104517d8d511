"""Independent high-precision reference values for the frozen test constants.

Evaluates each closed form with mpmath at 40 digits, plus brute-force
checks (numeric root finding, direct series summation) that do not share
code with the C++ implementation.
"""
import mpmath as mp

mp.mp.dps = 40


def psi_frechet(x, alpha=1):
    return mp.mpf(x) ** (-alpha)


def show(name, value):
    print(f"{name:55s} {mp.nstr(value, 17)}")


# law cdfs, Frechet(1) at x = 1
show("base cdf x=1", mp.e ** -1)
show("gamma-mid(2) cdf x=1", (1 + psi_frechet(1)) ** -2)
show("ggamma-mid(1) cdf x=1", 1 / (1 + mp.log(2)))
show("gamma-mid(2) neg log cdf x=1", 2 * mp.log(2))

# quantiles by numeric root finding on the cdf
ggm = lambda x: 1 / (1 + mp.log(1 + psi_frechet(x)))
show("ggamma-mid(1) quantile u=0.5", mp.findroot(lambda x: ggm(x) - mp.mpf("0.5"), 0.6))
show("1/(e-1)", 1 / (mp.e - 1))
gm2 = lambda x: (1 + psi_frechet(x)) ** -2
show("gamma-mid(2) quantile u=0.25", mp.findroot(lambda x: gm2(x) - mp.mpf("0.25"), 0.9))

# G-gamma Laplace transform
show("lt ggamma beta=1 lam=1", 1 / (1 + mp.log(2)))
show("lt ggamma beta=2 lam=1", 1 / (1 + 2 * mp.log(2)))

# G-gamma LT by quadrature of the two-stage mixture: E ~ exp(1), T | E ~ gamma(beta E)
for beta in (1, 2):
    lt = mp.quad(lambda e: mp.e ** -e * (1 + 1) ** (-beta * e), [0, mp.inf])
    show(f"lt ggamma beta={beta} via mixture quadrature", lt)

# geometric max by direct series sum_k p (1-p)^(k-1) H^k
def geo_series(h, p, terms=4000):
    return mp.fsum(p * (1 - p) ** (k - 1) * h ** k for k in range(1, terms))

h = 1 / (1 + psi_frechet(2))
show("geo-max gmid p=0.5 x=2 (series)", geo_series(h, mp.mpf("0.5")))
show("geo-max ggamma-mid(1) p=0.5 x=1 (series)", geo_series(1 / (1 + mp.log(2)), mp.mpf("0.5")))
show("1/(1+2 ln 2)", 1 / (1 + 2 * mp.log(2)))

# n-max and the geometric-gamma limit sequence
show("n-max ggamma-mid(0.01) n=100 x=1", (1 + mp.mpf("0.01") * mp.log(2)) ** -100)
show("limit seq n=100 x=1", 1 / (1 + 100 * (mp.mpf(2) ** mp.mpf("0.01") - 1)))


# sup distance on the quantile-spaced grid u = 0.001..0.999 (1000 points)
def grid_from_quantile(qfun, count=1000):
    return [qfun(mp.mpf("0.001") + (mp.mpf("0.998") * i) / (count - 1)) for i in range(count)]


def ggm_quantile(u, beta=1):
    s = mp.e ** ((1 / u - 1) / beta) - 1
    return 1 / s


grid = grid_from_quantile(ggm_quantile)
for n in (10, 100, 1000, 10000):
    d = max(abs(1 / (1 + n * ((1 + 1 / x) ** (mp.mpf(1) / n) - 1)) - ggm(x)) for x in grid)
    show(f"geo-gamma sup dist n={n}", d)


def gm_quantile(u, beta=1):
    return 1 / (u ** (-mp.mpf(1) / beta) - 1)


grid4 = grid_from_quantile(gm_quantile)
for n in (10, 100, 1000, 10000):
    d = max(abs((1 + mp.log(1 + 1 / x) / n) ** -n - (1 + 1 / x) ** -1) for x in grid4)
    show(f"n-max sup dist n={n}", d)

# extremal marginal: solve exp(-t psi(x)) = u numerically
show("ep quantile t=0.5 u=0.36788", mp.findroot(lambda x: mp.e ** (-mp.mpf("0.5") / x) - mp.mpf("0.36788"), 0.4))
show("ep quantile t=2 u=e^-2", mp.findroot(lambda x: mp.e ** (-2 / x) - mp.e ** -2, 1.5))

# gamma-clock compound by quadrature: int_0^inf exp(-t beta log(1+psi)) e^{-t} dt
show("gamma-clock quadrature x=1", mp.quad(lambda t: mp.e ** (-t * mp.log(2)) * mp.e ** -t, [0, mp.inf]))
# G-gamma clock: base law e^{-psi}, T ~ G-gamma(1) -> E[e^{-T psi}] with psi(1)=1
show("ggamma-clock mixture quadrature x=1",
     mp.quad(lambda e: mp.e ** -e * (1 + 1) ** (-e), [0, mp.inf]))

# max-AR(1)
show("innovation cdf F=0.5 p=0.5", mp.mpf("0.5") / mp.mpf("0.75"))

"""Independent oracles used to freeze expected values in the C++ unit tests.

Run with `python3 tests/oracles/oracles.py`. Nothing here imports project code.
"""
import itertools
import math

import numpy as np
from scipy import optimize


def cyclic_sum_elements(orders):
    return list(itertools.product(*[range(n) for n in orders]))


def indicator_spectrum_orders_22():
    # K_1 = C_2 x {0}, K_2 = C_2 x C_2, normalized Haar m = 1/2.
    orders = (2, 2)
    elems = cyclic_sum_elements(orders)
    m = 0.5
    f = {e: (1.0 if e[1] == 0 else 0.0) for e in elems}
    idx = {e: i for i, e in enumerate(elems)}
    mat = np.zeros((4, 4))
    for x in elems:
        for y in elems:
            d = tuple((a - b) % n for a, b, n in zip(x, y, orders))
            mat[idx[x], idx[y]] = m * f[d]
    return sorted(np.linalg.eigvalsh(mat))


def lq_geometric_limit():
    # indices == 2, a_i = 2^i, q = 2, normalized Haar.
    total = 1.0 / 4.0  # mu(K_1) / a_1^2
    for i in range(2, 200):
        shell = 2.0 ** (i - 1) - 2.0 ** (i - 2)
        total += shell / (2.0 ** i) ** 2
    return total


def cosh_ratio_factor():
    r = lambda x: (math.cosh(2 * x) - 1) / (math.cosh(x) - 1)
    return r(10) / r(5)


def xlog_grid_sup():
    xs = np.logspace(-6, 6, 400)
    phi = lambda x: x * np.log1p(x)
    return float(np.max(phi(2 * xs) / phi(xs)))


def xlog_complement(y):
    res = optimize.minimize_scalar(lambda x: -(x * y - x * math.log1p(x)),
                                   bounds=(0, 1e3), method="bounded",
                                   options={"xatol": 1e-14})
    return -res.fun


def witness(n):
    return (2 * n) ** n * (4 * n) ** (2 * n) / ((2 * n) ** n + (4 * n) ** (2 * n))


if __name__ == "__main__":
    print("indicator spectrum (2,2):", indicator_spectrum_orders_22())
    print("lq geometric limit:", repr(lq_geometric_limit()))
    print("cosh ratio factor r(10)/r(5):", cosh_ratio_factor())
    print("xlog grid sup:", xlog_grid_sup())
    print("xlog complement at 1, 2:", repr(xlog_complement(1.0)), repr(xlog_complement(2.0)))
    print("witness:", [repr(witness(n)) for n in range(1, 6)])
    print("3^(-1/3):", repr(3 ** (-1 / 3)), "1/sqrt2:", repr(1 / math.sqrt(2)))

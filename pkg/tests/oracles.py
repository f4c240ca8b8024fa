"""Independent reference computations for the test suite.

Plain Python lists and loops only; nothing here imports k3curves.
"""

from math import comb


def naive_mul(a, b, n=None):
    if n is None:
        n = min(len(a), len(b)) - 1
    out = [0] * (n + 1)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def naive_inverse(a, n=None):
    """Long division 1 / a for a[0] = +-1."""
    if n is None:
        n = len(a) - 1
    assert a[0] in (1, -1)
    b = [0] * (n + 1)
    b[0] = a[0]
    for k in range(1, n + 1):
        s = sum(a[i] * b[k - i] for i in range(1, min(k, len(a) - 1) + 1))
        b[k] = -a[0] * s
    return b


def naive_factor_product(step, sign, exponent, n):
    """prod (1 + sign q^(step s))^exponent by repeated 2-term multiplication."""
    f = [1] + [0] * n
    base = [1] + [0] * n
    for k in range(step, n + 1, step):
        for _ in range(abs(exponent)):
            factor = base[:]
            factor[k] += sign
            if exponent < 0:
                factor = naive_inverse(factor, n)
            f = naive_mul(f, factor, n)
    return f


def partitions(n, largest=None):
    """Yield every partition of n as a non-increasing tuple."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


def brute_P(n):
    return sum(1 for _ in partitions(n))


def brute_Q(n):
    return sum(1 for p in partitions(n) if len(set(p)) == len(p))


def divisor_sigma3(n):
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


def geometric_power_coeffs(e, n):
    """Coefficients of (1 - q)^(-e): C(k + e - 1, e - 1)."""
    return [comb(k + e - 1, e - 1) for k in range(n + 1)]


def naive_j_series(n):
    """q*j(q) to order n: E4^3 times prod (1 - q^k)^(-24), all by loops."""
    e4 = [1] + [240 * divisor_sigma3(k) for k in range(1, n + 1)]
    cube = naive_mul(naive_mul(e4, e4, n), e4, n)
    return naive_mul(cube, naive_factor_product(1, -1, -24, n), n)

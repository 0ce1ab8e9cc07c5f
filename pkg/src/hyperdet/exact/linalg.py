"""Small exact linear algebra over arbitrary commutative rings."""

from fractions import Fraction


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def det(matrix):
    """Determinant of a square matrix (list of rows).

    Rational matrices use Gaussian elimination; anything else goes through a
    division-free Laplace expansion memoized on column subsets, which only
    needs ring operations and is fine up to size ~12.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("det needs a square matrix")
    if all(_is_rational(x) for row in matrix for x in row):
        return _det_gauss([[Fraction(x) for x in row] for row in matrix])
    return _det_subsets(matrix)


def _det_gauss(a):
    n = len(a)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                row, prow = a[r], a[col]
                for c in range(col, n):
                    row[c] -= f * prow[c]
    return sign * result


def _det_subsets(m):
    # expand row by row; state = set of used columns (bitmask)
    n = len(m)
    layer = {0: 1}
    for r in range(n):
        nxt = {}
        for mask, val in layer.items():
            higher = 0
            for c in range(n - 1, -1, -1):
                bit = 1 << c
                if mask & bit:
                    higher += 1
                    continue
                entry = m[r][c]
                if entry == 0:
                    continue
                term = val * entry
                if higher % 2:
                    term = -term
                key = mask | bit
                nxt[key] = term if key not in nxt else nxt[key] + term
        layer = nxt
    return layer.get((1 << n) - 1, Fraction(0))


def solve(a, b):
    """Solve ``a x = b`` over a field (Fractions or other exact field elements)."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / p
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]

import math
from fractions import Fraction

from src.utils import IndexRangeError


def _check_positive(**indices: int) -> None:
    for name, value in indices.items():
        if value < 1:
            raise IndexRangeError(f"Index {name} must be at least 1, got {value}")


#########################################
# Insertion sort
#########################################
def b_k(k: int) -> Fraction:
    """Expected backward edges between the vertex inserted at stage k and the vertices
    inserted before it, on a uniformly random tournament:
    B(1) = B(2) = 0 and B(k) = k/2 - 3/2 + 2^(1-k)."""
    _check_positive(k=k)
    if k <= 2:
        return Fraction(0)
    return Fraction(k, 2) - Fraction(3, 2) + Fraction(1, 2 ** (k - 1))


def b_k_by_recurrence(k: int) -> Fraction:
    """B(k) from B(k) = B(k-1)/2 + (k-2)/4, starting at B(2) = 0"""
    _check_positive(k=k)
    value = Fraction(0)
    for stage in range(3, k + 1):
        value = value / 2 + Fraction(stage - 2, 4)
    return value


def expected_total_backward(n: int) -> Fraction:
    """Expected cost of insertion sort on a uniformly random tournament on n vertices:
    (n^2 - 5n + 8)/4 - 2^(1-n)"""
    if n < 2:
        raise IndexRangeError(f"The expected cost needs n >= 2, got {n}")
    return Fraction(n * n - 5 * n + 8, 4) - Fraction(1, 2 ** (n - 1))


def b_k_float(k: int) -> float:
    _check_positive(k=k)
    if k <= 2:
        return 0.0
    return k / 2 - 1.5 + math.ldexp(1.0, 1 - k)


def expected_total_backward_float(n: int) -> float:
    if n < 2:
        raise IndexRangeError(f"The expected cost needs n >= 2, got {n}")
    return (n * n - 5 * n + 8) / 4 - math.ldexp(1.0, 1 - n)


#########################################
# Merge sort
#########################################
def h_prob(i: int, j: int) -> Fraction:
    """Probability that the i-th vertex of the first group is compared with the j-th vertex
    of the second group while merging, when every comparison is a fair coin:
    C(i+j-2, i-1) / 2^(i+j-2)"""
    _check_positive(i=i, j=j)
    return Fraction(math.comb(i + j - 2, i - 1), 2 ** (i + j - 2))


def h_prob_product(i: int, j: int) -> Fraction:
    """H(i, j) written as the rising product i(i+1)...(i+j-2) / ((j-1)! 2^(i+j-2))"""
    _check_positive(i=i, j=j)
    return Fraction(
        math.prod(range(i, i + j - 1)), math.factorial(j - 1) * 2 ** (i + j - 2)
    )


def h_prob_by_recurrence(i: int, j: int) -> Fraction:
    """H(i, j) from H(i, j) = H(i, j-1)/2 + H(i-1, j)/2 with H(1, m) = H(m, 1) = 2^(1-m)"""
    _check_positive(i=i, j=j)
    table = [[Fraction(0)] * (j + 1) for _ in range(i + 1)]
    for a in range(1, i + 1):
        for b in range(1, j + 1):
            if a == 1:
                table[a][b] = Fraction(1, 2 ** (b - 1))
            elif b == 1:
                table[a][b] = Fraction(1, 2 ** (a - 1))
            else:
                table[a][b] = table[a][b - 1] / 2 + table[a - 1][b] / 2
    return table[i][j]


def backward_prob(i: int, j: int) -> Fraction:
    """Probability that the edge between the i-th vertex of the first group and the j-th
    vertex of the second group is backward after one merge:
    1/4 [sum_{k<j} C(k+i-2, i-1)/2^(k+i-2) + sum_{k<i} C(k+j-2, j-1)/2^(k+j-2)]"""
    _check_positive(i=i, j=j)
    first = sum(
        (Fraction(math.comb(k + i - 2, i - 1), 2 ** (k + i - 2)) for k in range(1, j)),
        Fraction(0),
    )
    second = sum(
        (Fraction(math.comb(k + j - 2, j - 1), 2 ** (k + j - 2)) for k in range(1, i)),
        Fraction(0),
    )
    return Fraction(1, 4) * (first + second)


def h_prob_float(i: int, j: int) -> float:
    """Float H(i, j). The binomial is built by its multiplicative recurrence and halved as it
    grows, so large indices neither overflow nor lose precision to cancellation."""
    _check_positive(i=i, j=j)
    small, large = sorted((i - 1, j - 1))
    pending = small + large
    value = 1.0
    for m in range(1, small + 1):
        value = value * (large + m) / m
        while value >= 2.0 and pending > 0:
            value /= 2.0
            pending -= 1
    return math.ldexp(value, -pending)


def backward_prob_float(i: int, j: int) -> float:
    _check_positive(i=i, j=j)
    first = math.fsum(h_prob_float(i, k) for k in range(1, j))
    second = math.fsum(h_prob_float(j, k) for k in range(1, i))
    return (first + second) / 4


FORMULA_TABLES = ("bk", "total", "h", "p")


def formula_table(name: str, max_index: int) -> tuple[list[str], list[list[str]]]:
    """Header and rows of a formula table: B(k) for k <= max, the expected total for
    2 <= n <= max, or H / P for all 1 <= i, j <= max"""
    if max_index < 1:
        raise IndexRangeError(f"Table size must be at least 1, got {max_index}")
    rows: list[list[str]] = []
    match name:
        case "bk":
            header = ["k", "exact", "float"]
            for k in range(1, max_index + 1):
                rows.append([str(k), str(b_k(k)), repr(b_k_float(k))])
        case "total":
            header = ["n", "exact", "float"]
            for n in range(2, max_index + 1):
                rows.append(
                    [
                        str(n),
                        str(expected_total_backward(n)),
                        repr(expected_total_backward_float(n)),
                    ]
                )
        case "h" | "p":
            exact, approx = (
                (h_prob, h_prob_float) if name == "h" else (backward_prob, backward_prob_float)
            )
            header = ["i", "j", "exact", "float"]
            for i in range(1, max_index + 1):
                for j in range(1, max_index + 1):
                    rows.append([str(i), str(j), str(exact(i, j)), repr(approx(i, j))])
        case _:
            raise IndexRangeError(
                f"Unknown formula table {name!r}, expected one of {list(FORMULA_TABLES)}"
            )
    return header, rows

"""The faithful unitriangular representation of K_2.

K_2 is the free 2-step nilpotent group of rank 2 (the discrete Heisenberg
group), so for any nonzero integers a, b the assignment

    x_1 -> A = [[1,a,0],[0,1,0],[0,0,1]]
    x_2 -> B = [[1,0,0],[0,1,b],[0,0,1]]

is a faithful representation K_2 -> UT_3(Z), with [x_1, x_2] -> [A, B] the
elementary matrix with ab in the corner.  This gives a brute-force equality
oracle for K_2 words that is entirely independent of the collection engine.

No such unitriangular model is provided for K_n with n > 2.
"""

from __future__ import annotations

from typing import Iterable

IntMatrix3 = tuple[tuple[int, int, int], ...]

IDENTITY3: IntMatrix3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat_mul(m1: IntMatrix3, m2: IntMatrix3) -> IntMatrix3:
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def unitriangular(p: int, q: int, r: int) -> IntMatrix3:
    """[[1,p,r],[0,1,q],[0,0,1]]."""
    return ((1, p, r), (0, 1, q), (0, 0, 1))


def is_unitriangular(m: IntMatrix3) -> bool:
    return (
        m[0][0] == m[1][1] == m[2][2] == 1
        and m[1][0] == m[2][0] == m[2][1] == 0
    )


def k2_rep(a: int, b: int, exponents: tuple[int, int, int]) -> IntMatrix3:
    """Image of x_1^alpha x_2^beta [x_1,x_2]^gamma, in closed form.

    A^alpha B^beta C^gamma = [[1, a*alpha, ab*(alpha*beta + gamma)],
                              [0, 1,       b*beta],
                              [0, 0,       1]].
    """
    if a == 0 or b == 0:
        raise ValueError("the representation is faithful only for nonzero a, b")
    alpha, beta, gamma = exponents
    return unitriangular(a * alpha, b * beta, a * b * (alpha * beta + gamma))


def k2_recover(a: int, b: int, m: IntMatrix3) -> tuple[int, int, int]:
    """Invert k2_rep: read (alpha, beta, gamma) off a matrix in its image."""
    if a == 0 or b == 0:
        raise ValueError("the representation is faithful only for nonzero a, b")
    if not is_unitriangular(m):
        raise ValueError("matrix is not unitriangular")
    alpha, rem_a = divmod(m[0][1], a)
    beta, rem_b = divmod(m[1][2], b)
    gamma, rem_c = divmod(m[0][2] - a * b * alpha * beta, a * b)
    if rem_a or rem_b or rem_c:
        raise ValueError("matrix is not in the image of the representation")
    return (alpha, beta, gamma)


def k2_eval_word(word: Iterable[int], a: int = 1, b: int = 1) -> IntMatrix3:
    """Evaluate a word over x_1^{+-1}, x_2^{+-1} (letters +-1, +-2) in UT_3(Z)."""
    if a == 0 or b == 0:
        raise ValueError("the representation is faithful only for nonzero a, b")
    gens = {
        1: unitriangular(a, 0, 0),
        -1: unitriangular(-a, 0, 0),
        2: unitriangular(0, b, 0),
        -2: unitriangular(0, -b, 0),
    }
    result = IDENTITY3
    for k in word:
        if k not in gens:
            raise ValueError(f"letter {k} is not one of +-1, +-2")
        result = mat_mul(result, gens[k])
    return result


def k2_oracle_equals(
    w1: Iterable[int], w2: Iterable[int], a: int = 1, b: int = 1
) -> bool:
    """Decide equality of two K_2 words by comparing their matrix images."""
    return k2_eval_word(w1, a, b) == k2_eval_word(w2, a, b)

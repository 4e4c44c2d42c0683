from typing import Sequence

from bmkit.exceptions import ArgumentError, InvariantViolationError

type IntMatrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> IntMatrix:
  return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
  if a and len(a[0]) != len(b):
    raise ArgumentError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0]) if b else 0}")
  columns = list(zip(*b, strict=True)) if b else []
  return tuple(tuple(sum(x * y for x, y in zip(row, col, strict=True)) for col in columns) for row in a)


def is_upper_unitriangular(m: Sequence[Sequence[int]]) -> bool:
  n = len(m)
  if any(len(row) != n for row in m):
    return False
  return all(m[i][i] == 1 for i in range(n)) and all(m[i][j] == 0 for i in range(n) for j in range(i))


def unitriangular_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
  """Exact integer inverse of an upper unitriangular matrix by back substitution."""
  n = len(m)
  if not is_upper_unitriangular(m):
    raise InvariantViolationError("upper unitriangular", "matrix has a non-unit diagonal or a nonzero sub-diagonal entry")
  inv = [[0] * n for _ in range(n)]
  for i in range(n - 1, -1, -1):
    for j in range(n):
      acc = int(i == j)
      for k in range(i + 1, n):
        if m[i][k]:
          acc -= m[i][k] * inv[k][j]
      inv[i][j] = acc
  result = tuple(tuple(row) for row in inv)
  if matmul(m, result) != identity(n):
    raise InvariantViolationError("M * M^-1 = I")
  return result

class BmkitError(Exception):
  def __init__(self, message: str = "bmkit computation failed") -> None:
    super().__init__(message)
    self.message = message


class ArgumentError(BmkitError, ValueError):
  def __init__(self, message: str = "invalid argument") -> None:
    super().__init__(message)


class DegreeMismatchError(ArgumentError):
  def __init__(self, what: str, left: int, right: int) -> None:
    super().__init__(f"{what}: degree mismatch ({left} != {right})")
    self.what = what
    self.left = left
    self.right = right


class ResourceBoundError(BmkitError):
  def __init__(self, what: str, requested: int, bound: int) -> None:
    super().__init__(f"Refusing {what}: requested {requested} exceeds configured bound {bound}")
    self.what = what
    self.requested = requested
    self.bound = bound


class InvariantViolationError(BmkitError, AssertionError):
  def __init__(self, invariant: str, detail: str = "") -> None:
    super().__init__(f"Invariant violated: {invariant}" + (f" ({detail})" if detail else ""))
    self.invariant = invariant
    self.detail = detail


class CounterexampleError(BmkitError):
  def __init__(self, check: str, case: str) -> None:
    super().__init__(f"{check} failed for {case}")
    self.check = check
    self.case = case

"""Exact computations around Frobenius push-forwards on smooth quadrics.

Subpackages and modules:

- `combinat`, `polynomial`, `linalg`: exact arithmetic (binomials over Z,
  sparse multivariate polynomials, dense F_p matrices) over the `_kernel`
  row-reduction backends (compiled + numpy fallback).
- `graded_pieces`: Macaulay-matrix slices of ideals, quotients and colon
  ideals; the two colon-containment verifiers.
- `hilbert`: closed-form Hilbert functions of the three graded algebras, the
  normalized alternating sums with their closed forms, and the binomial
  determinant of the elimination step.
- `matfac`: the recursive matrix factorizations of the quadric forms.
- `pushforward`: summand decompositions of push-forwards of line bundles and
  the certain/possible summand closures across iterated Frobenius.
- `cohomology`: cohomology tables for line and spinor bundles, Ext dimensions,
  quasi-exceptionality and the tilting decision.
- `verify`: the named verification suites; `cli`: the `qfrob` command.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]

"""Double affine Weyl groups, their Coxeter-type presentations, and the
congruence-group machinery acting on them, all in exact arithmetic."""

__version__ = "0.1.0"

"""Reference implementations used only by the tests.

Everything in this package recomputes model quantities straight from their
definitions with simple quadratic or exhaustive algorithms, independent of
the library internals, so library output can be checked against a second
opinion.
"""

"""Exact computations in extended Khovanov arc algebras and their
Dyck-presentation counterparts."""

from _arcdyck import *  # noqa: F401,F403

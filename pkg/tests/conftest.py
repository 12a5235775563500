"""
Shared fixtures: polynomial and ideal builders from expression text
"""

import pytest
from hypothesis import HealthCheck, settings

from src.core.fields import QQ, FieldSpec
from src.core.ideal import Ideal
from src.utils.expression_parser import make_context, parse_poly, parse_poly_list

settings.register_profile(
    "kflat",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kflat")


@pytest.fixture
def poly():
    """poly("x^2 - y", "x,y", field) -> Poly"""

    def build(text: str, variables: str = "x,y", field: FieldSpec = QQ):
        return parse_poly(text, make_context(variables, field))

    return build


@pytest.fixture
def ideal():
    """ideal("x^2, x*y", "x,y", field) -> Ideal"""

    def build(text: str, variables: str = "x,y", field: FieldSpec = QQ) -> Ideal:
        ctx = make_context(variables, field)
        return Ideal(ctx.ring, parse_poly_list(text, ctx))

    return build

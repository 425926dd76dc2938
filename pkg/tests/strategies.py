"""Hypothesis strategies for valid parameter draws."""

from hypothesis import assume
from hypothesis import strategies as st

from uncertainty_cost.model import EconomyKind, ModelParameters


@st.composite
def valid_params(draw, max_eta=0.3):
    p = ModelParameters(
        gamma=draw(st.floats(1.01, 1.3)),
        lambda_=draw(st.floats(0.5, 1.0)),
        alpha=draw(st.floats(0.2, 0.6)),
        sigma=draw(st.floats(0.3, 0.7)),
        eta=draw(st.floats(0.0, max_eta)),
        kind=draw(st.sampled_from(list(EconomyKind))),
        delta=draw(st.floats(0.0, 0.1)),
        g_n=draw(st.floats(0.0, 0.03)),
        s_bar=draw(st.floats(0.1, 0.4)),
    )
    assume(1.0 - p.alpha - p.eta_signed > 0.05)
    assume(p.delta + p.g_n > 0.01)
    return p

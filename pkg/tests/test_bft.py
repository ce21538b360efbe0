"""Universal-family identity and the joint j-invariant rank probe."""

from fractions import Fraction as F

import pytest

from g2cover.bft import (
    jacobian_rank_probe,
    joint_j,
    universal_family_check,
)
from g2cover.errors import DomainError

# frozen at build time at the sample (r, s, t) = (2, 1, 3), step 1e-6
FROZEN_DET_2_1_3 = 1.08974890234487e14


def test_identity_exact():
    res = universal_family_check()
    assert res.ok and res.identity_12 and res.identity_13


def test_single_coefficient_mutation_detected():
    res = universal_family_check(mutate=((3, 0, 0, 3), F(1)))
    assert not res.ok


def test_joint_j_distinct_at_sample():
    js = joint_j(2, 1, 3)
    vals = [round(j.real, 3) for j in js]
    assert len(set(vals)) == 3


def test_pole_locus_rejected():
    with pytest.raises(DomainError):
        joint_j(1, 1, -1)  # st + 1 = 0
    with pytest.raises(DomainError):
        jacobian_rank_probe((2, 0, 3))  # s = 0


def test_probe_conclusive_and_frozen():
    res = jacobian_rank_probe((2, 1, 3), step=F(1, 10**6), precision=60)
    assert res.conclusive
    assert abs(res.determinant) > 10 * res.error_estimate
    rel = abs(abs(res.determinant) - FROZEN_DET_2_1_3) / FROZEN_DET_2_1_3
    assert rel < 1e-3

import pytest
from hypothesis import given, strategies as st

from trigonal5 import fq_oracle as fq

primes = st.sampled_from(fq.PRIMES)


@given(primes, st.integers(-50, 50), st.integers(-50, 50))
def test_field_axioms(q, a, b):
    x, y = fq.Fq(q, a), fq.Fq(q, b)
    assert x + y == (a + b) % q
    assert x * y == y * x
    assert x - y + y == x
    if y:
        assert (x / y) * y == x


def test_field_rejects_composite():
    with pytest.raises(fq.OracleError):
        fq.Fq(4, 1)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        fq.Fq(5, 0).inverse()


@pytest.mark.parametrize("q", fq.PRIMES)
def test_projective_plane_size(q):
    assert len(fq.projective_points(q)) == q * q + q + 1


@pytest.mark.parametrize("q", fq.PRIMES)
def test_pgl3_against_group_order(q):
    gl = (q**3 - 1) * (q**3 - q) * (q**3 - q**2)
    assert fq.count_pgl3(q) == gl // (q - 1)


def _gauss(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("k,n,q", [(1, 3, 2), (2, 4, 2), (2, 3, 5), (1, 4, 3)])
def test_grassmannian_against_product_formula(k, n, q):
    assert fq.count_grassmannian(k, n, q) == _gauss(n, k, q)


def test_grassmannian_size_guard():
    with pytest.raises(fq.OracleError):
        fq.count_grassmannian(3, 6, 7)


def test_ztilde_needs_odd_q():
    with pytest.raises(fq.OracleError):
        fq.count_ztilde(2)
    assert not fq.admissible("Ztilde", 2)


def test_m05_equals_yl():
    for q in fq.PRIMES:
        assert fq.count_m05(q) == fq.count_yl(q)


def test_unknown_space():
    with pytest.raises(fq.OracleError):
        fq.resolve_space("Foo")


@pytest.mark.parametrize("name", ["Ftilde2", "Ftilde3", "M05", "YL", "Ztilde"])
@pytest.mark.parametrize("q", [3, 5])
def test_counts_match_symbolic_side(name, q):
    r = fq.count_space(name, q)
    assert r.match, r.to_json()


def test_count_is_deterministic():
    assert fq.count_ftilde3(5) == fq.count_ftilde3(5)


def test_result_json():
    js = fq.count_space("Grass(1,3)", 2).to_json()
    assert js == {"space": "Grass(1,3)", "q": 2, "count": 7, "predicted": 7,
                  "polynomial": "q^2 + q + 1", "verdict": "match"}

import json

import pytest

from ordex import engine
from ordex.certificate import (
    CertificateFormatError,
    certificate_from_json,
    load_certificate,
    save_certificate,
    verify_certificate,
)
from ordex.families import Family

EQ = Family("eq-count").oracle()


@pytest.fixture
def cert():
    c = engine.certify_nonregular(EQ, 5, 1, 10, 12)
    assert isinstance(c, engine.Certificate)
    return c


def test_round_trip(cert, tmp_path):
    assert verify_certificate(EQ, cert)
    path = tmp_path / "c.json"
    save_certificate(cert, path)
    again = load_certificate(path)
    assert again.entries == cert.entries and again.j == cert.j
    assert verify_certificate(EQ, again)


def test_order_insensitive(cert):
    swapped = engine.Certificate(cert.j, (cert.entries[1], cert.entries[0], *cert.entries[2:]),
                                 cert.ext_search_bound)
    assert verify_certificate(EQ, swapped)


def test_tampered_entry_is_named(cert):
    entries = list(cert.entries)
    i = entries.index(("000", "111"))
    entries[i] = ("000", "110")
    check = verify_certificate(EQ, engine.Certificate(cert.j, tuple(entries), cert.ext_search_bound))
    assert not check
    assert any(f"entry {i}" in p for p in check.problems)


def test_duplicate_extensions_rejected():
    c = engine.Certificate(1, (("0", "1"), ("0", "1")), 4)
    check = verify_certificate(EQ, c)
    assert not check.ok and "distinct" in check.problems[0]


def test_wrong_ordinal_rejected():
    c = engine.Certificate(2, (("0", "1"),), 4)
    assert not verify_certificate(EQ, c)


def test_bound_enforced():
    c = engine.Certificate(1, (("000", "111"),), 2)
    assert not verify_certificate(EQ, c)


@pytest.mark.parametrize("data", [
    [],
    {"j": 1, "entries": []},
    {"j": 0, "ext_search_bound": 3, "entries": []},
    {"j": 1, "ext_search_bound": -1, "entries": []},
    {"j": 1, "ext_search_bound": 3, "entries": [{"prefix": "0"}]},
])
def test_malformed_json(data):
    with pytest.raises(CertificateFormatError):
        certificate_from_json(data)


def test_malformed_distinct_from_invalid(tmp_path):
    with pytest.raises(CertificateFormatError):
        verify_certificate(EQ, engine.Certificate(1, (("2", "1"),), 3))
    with pytest.raises(CertificateFormatError):
        verify_certificate(EQ, engine.Certificate(1, (), 3))
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(CertificateFormatError):
        load_certificate(path)


def test_file_layout(cert, tmp_path):
    path = tmp_path / "c.json"
    save_certificate(cert, path)
    data = json.loads(path.read_text())
    assert set(data) == {"language", "j", "ext_search_bound", "entries"}
    assert data["entries"][1] == {"prefix": "0", "extension": "1"}

"""Smoke tests for the python bindings."""

import json

import paradec


def test_field_data():
    ring = paradec.make_field("q2")
    assert ring["uniformizer"] == "2"
    assert ring["residue_cardinality"] == "2"
    assert paradec.make_field("f2s-q")["residue_cardinality"] == "4"


def test_magnitude_and_arith():
    assert paradec.magnitude("q2", "12") == (2, 2)
    assert paradec.magnitude("q2", "0") is None
    assert paradec.arith("q2", "add", "1/2", "1/3") == "5/6"
    assert paradec.arith("f2s", "div", "s^2+s", "s+1") == "s"


def test_words():
    assert paradec.reduce_concat("ab", "Ba") == "aa"
    cls = paradec.canonical_class("ba")
    assert cls["rep"] == "ab"
    assert cls["la"] == 1 and cls["lb"] == 1
    assert len(paradec.enumerate_reduced(3)) == 53


def test_trace_polynomials():
    assert paradec.phi("ab") == "Z"
    assert paradec.phi("abAB") == "-X*Y*Z + X^2 + Y^2 + Z^2 - 2"
    a0 = paradec.magnus(0)
    a1 = paradec.magnus(1)
    rep = paradec.verify_fricke("q2", "aaBab", a0, a1)
    assert rep["equal"]
    psi = paradec.psi_magnitude(2, "aab")
    assert psi["equal"]
    assert psi["actual"] == "2^3"  # value 8


def test_cover_ball():
    assert paradec.cover_ball("q2", 2, 0, 1) == [
        "(0, 0)",
        "(0, 1)",
        "(1, 0)",
        "(1, 1)",
    ]


def test_certificate_round_trip():
    cert = paradec.build_certificate("q2", 2, "sphere0")
    data = json.loads(cert)
    assert data["pieces"] == 4
    report = json.loads(paradec.verify_certificate(cert, depth=3))
    assert report["summary"]["exit"] == 0

    whole = paradec.build_certificate("f2s", 2, "whole-space")
    assert json.loads(whole)["pieces"] == 5
    report = json.loads(paradec.verify_certificate(whole, depth=2))
    assert report["summary"]["exit"] == 0

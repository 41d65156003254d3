"""Serialization: canonical bytes, round trips, parse errors, DOT export."""

import random

import pytest

from fuzzybig import (
    ModelDocument,
    Signature,
    TWO_POINT,
    UNIT_INTERVAL,
    chain,
    export_dot,
    fuzzify,
    load_document,
    parse,
    serialize,
    validate_document,
)
from fuzzybig.errors import ParseError
from fuzzybig.generators import (
    random_fuzzy_chain,
    random_interface,
    random_type2_bigraph,
)
from fuzzybig.type2 import embed_bigraph

from helpers import H_SIGNATURE, make_h, random_crisp_bigraph

U = UNIT_INTERVAL


def h_document():
    return ModelDocument(U, H_SIGNATURE, {"h": make_h()})


def test_h_model_file_parses_and_validates():
    doc = load_document("models/h_bigraph.fbg.json")
    assert doc == h_document()
    assert all(r.ok for r in validate_document(doc))


def test_round_trip_is_the_identity_on_documents():
    doc = h_document()
    assert parse(serialize(doc)) == doc


def test_serialize_is_canonical_on_parsed_text():
    text = serialize(h_document())
    assert serialize(parse(text)) == text
    assert text.endswith("\n") and "\r" not in text


def test_equal_documents_print_identical_bytes():
    a = serialize(h_document())
    b = serialize(ModelDocument(U, Signature({"M": 0, "L": 1, "K": 2}),
                                {"h": make_h()}))
    assert a == b


def test_round_trip_over_generated_models():
    rng = random.Random(31)
    graphs = {}
    for i, g in enumerate(random_fuzzy_chain(rng, U, H_SIGNATURE, 3)):
        graphs[f"f{i}"] = g
        graphs[f"p{i}"] = g.place
        graphs[f"l{i}"] = g.link
    t2 = random_type2_bigraph(rng, U, H_SIGNATURE, random_interface(rng, 2, 2),
                              random_interface(rng, 2, 2), prefix="t_")
    graphs["t"] = t2
    graphs["tp"] = t2.place
    graphs["tl"] = t2.link
    crisp = random_crisp_bigraph(rng, H_SIGNATURE, random_interface(rng, 2, 2),
                                 random_interface(rng, 2, 2), prefix="c_")
    graphs["c"] = crisp
    graphs["cp"] = crisp.place
    graphs["cl"] = crisp.link
    doc = ModelDocument(U, H_SIGNATURE, graphs)
    assert parse(serialize(doc)) == doc
    # and over the other frames
    for frame in (TWO_POINT, chain(5)):
        doc2 = ModelDocument(
            frame, H_SIGNATURE,
            {"f": random_fuzzy_chain(rng, frame, H_SIGNATURE, 1)[0]},
        )
        assert parse(serialize(doc2)) == doc2


def test_empty_document_is_minimal_and_stable():
    doc = ModelDocument(U, Signature({}), {})
    text = serialize(doc)
    assert parse(text) == doc
    assert serialize(parse(text)) == text


def test_embedded_type2_round_trips():
    doc = ModelDocument(U, H_SIGNATURE, {"e": embed_bigraph(fuzzify(make_h(), U))})
    assert parse(serialize(doc)) == doc


# --- parse errors ------------------------------------------------------------


def _h_text():
    return serialize(h_document())


def test_degree_out_of_range_is_a_parse_error():
    text = _h_text().replace('"crisp-bigraph"', '"crisp-bigraph"')
    bad = """{
  "frame": "unit-interval",
  "signature": {"controls": {"K": 1}},
  "graphs": {
    "g": {
      "kind": "fuzzy-place", "inner": 0, "outer": 1,
      "nodes": ["v"],
      "ctrl": [["v", "K", "1.2"]],
      "prnt": [["v", 0, "1"]]
    }
  }
}"""
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert "ctrl" in str(err.value)


def test_dangling_identifier_is_a_parse_error():
    bad = """{
  "frame": "unit-interval",
  "signature": {"controls": {"K": 1}},
  "graphs": {
    "g": {
      "kind": "fuzzy-place", "inner": 0, "outer": 1,
      "nodes": ["v"],
      "ctrl": [["ghost", "K", "1/2"]],
      "prnt": [["v", 0, "1"]]
    }
  }
}"""
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert "ghost" in str(err.value)


def test_unknown_field_is_rejected():
    text = _h_text().replace('"kind": "crisp-bigraph"',
                             '"kind": "crisp-bigraph", "mystery": 1')
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "mystery" in str(err.value)


def test_unknown_frame_is_rejected():
    text = _h_text().replace('"unit-interval"', '"octagon"')
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "octagon" in str(err.value)


def test_syntax_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse("{\n  broken\n}")
    assert "line 2" in str(err.value)


def test_numeric_degrees_are_rejected():
    bad = """{
  "frame": "unit-interval",
  "signature": {"controls": {}},
  "graphs": {
    "g": {
      "kind": "type2-place", "inner": 0, "outer": 0,
      "nodes": [["v", 0.5]], "ctrl": [], "prnt": [], "beta": "1"
    }
  }
}"""
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert "string" in str(err.value)


def test_gamma_must_be_the_meet():
    rng = random.Random(5)
    t2 = random_type2_bigraph(rng, U, H_SIGNATURE, random_interface(rng, 2, 2),
                              random_interface(rng, 2, 2), prefix="t_")
    text = serialize(ModelDocument(U, H_SIGNATURE, {"t": t2}))
    gamma = U.format_degree(t2.degree)
    wrong = "1" if gamma != "1" else "1/2"
    with pytest.raises(ParseError) as err:
        parse(text.replace(f'"gamma": "{gamma}"', f'"gamma": "{wrong}"'))
    assert "gamma" in str(err.value)


# --- DOT export -----------------------------------------------------------------


def test_place_view_renders_two_disconnected_trees():
    text = export_dot(h_document(), "h", "place")
    assert text.count("cluster_root_") == 2
    assert "site 0" in text and "site 2" in text
    assert "style=dashed" in text


def test_link_view_shows_names_as_terminals():
    text = export_dot(h_document(), "h", "link")
    for name in ("x1", "x2", "y"):
        assert f'label="{name}"' in text
    assert "shape=diamond" in text  # hyperedges e0, e1
    assert "shape=point" in text  # ports


def test_fuzzy_degrees_annotate_edges():
    doc = ModelDocument(U, H_SIGNATURE, {"hf": fuzzify(make_h(), U)})
    place_view = export_dot(doc, "hf", "place")
    link_view = export_dot(doc, "hf", "link")
    assert 'label="1"' in place_view
    assert 'label="1"' in link_view


def test_empty_graph_renders_header_only():
    from fuzzybig import identity_bigraph, Interface

    doc = ModelDocument(
        U, H_SIGNATURE,
        {"u": identity_bigraph(Interface(0, frozenset()), U, H_SIGNATURE)},
    )
    assert export_dot(doc, "u", "place") == "digraph place {\n}\n"
    assert export_dot(doc, "u", "link") == "graph link {\n}\n"


def test_dot_output_is_deterministic():
    doc = h_document()
    assert export_dot(doc, "h", "place") == export_dot(doc, "h", "place")
    assert export_dot(doc, "h", "link") == export_dot(doc, "h", "link")


def test_unknown_graph_name_is_an_error():
    from fuzzybig.errors import ModelError

    with pytest.raises(ModelError):
        export_dot(h_document(), "nope", "place")
    with pytest.raises(ModelError):
        export_dot(h_document(), "h", "sideways")

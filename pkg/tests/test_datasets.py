"""Embedded measurement tables: parsing, round trips, and overrides."""

import pytest

from ks18 import (
    ENV_FIXTURES_DIR,
    FIXTURE_FILES,
    dedupe_records,
    dump_fixtures,
    duplicate_keys,
    export_table,
    fixture_text,
    load_table,
    parse_table_text,
)


class TestEmbeddedFixtures:
    def test_row_counts(self):
        assert len(load_table("sigma15")) == 15
        assert len(load_table("xi15")) == 15
        assert len(load_table("sigma28")) == 28
        assert len(load_table("edges")) == 126
        assert len(load_table("terms")) == 270

    def test_quantities_are_typed(self):
        assert {r.quantity for r in load_table("sigma15")} == {"sigma"}
        assert {r.quantity for r in load_table("xi15")} == {"xi"}
        assert {r.quantity for r in load_table("edges")} == {"edge-probability"}
        assert {r.quantity for r in load_table("terms")} == {"term-probability"}

    def test_spot_values(self):
        sigma15 = {r.state_code: r for r in load_table("sigma15")}
        assert sigma15["v1"].value == pytest.approx(4.60)
        assert sigma15["v1"].uncertainty == pytest.approx(0.02)
        xi15 = {r.state_code: r for r in load_table("xi15")}
        assert xi15["v1"].value == pytest.approx(4.1953)

    def test_sigma28_covers_the_catalog(self):
        codes = [r.state_code for r in load_table("sigma28")]
        assert codes == [f"v{i}" for i in range(1, 25)] + [
            "rho25", "rho26", "rho27", "rho28",
        ]
        assert all(r.uncertainty is None for r in load_table("sigma28"))

    def test_duplicate_edge_key_is_preserved(self):
        records = load_table("edges")
        dupes = duplicate_keys(records)
        assert dupes == [("edge", (8, 7))]
        pair_rows = [r for r in records if r.edge == (8, 7)]
        assert len(pair_rows) == 2
        assert sorted(r.value for r in pair_rows) == [0.0, 0.035]

    def test_dedupe_keep_all_is_a_noop_copy(self):
        records = load_table("edges")
        same = dedupe_records(records)
        assert same == records
        assert same is not records

    def test_dedupe_keep_first_drops_second_duplicate_row(self):
        records = load_table("edges")
        kept = dedupe_records(records, "keep-first")
        assert len(kept) == len(records) - 1
        assert duplicate_keys(kept) == []
        survivors = [r for r in kept if r.edge == (8, 7)]
        assert [r.value for r in survivors] == [0.035]
        # all other rows survive in original order
        assert [r.key for r in kept] == [
            r.key for r in records
            if not (r.edge == (8, 7) and r.value == 0.0)
        ]

    def test_dedupe_without_duplicates_is_identity(self):
        records = load_table("sigma15")
        assert dedupe_records(records, "keep-first") == records

    def test_dedupe_rejects_unknown_mode(self):
        with pytest.raises(ValueError, match="unknown dedupe mode"):
            dedupe_records([], "drop-all")

    def test_terms_cover_15_states_18_each(self):
        records = load_table("terms")
        per_state: dict = {}
        for r in records:
            per_state.setdefault(r.state_code, []).append(r.term)
        assert len(per_state) == 15
        assert all(len(terms) == 18 for terms in per_state.values())

    def test_unknown_fixture_id(self):
        with pytest.raises(KeyError, match="unknown fixture id"):
            fixture_text("nope")


class TestParsing:
    def test_quantity_override(self):
        text = "state_code,value,uncertainty\nv1,4.50,0.01\n"
        (record,) = parse_table_text(text, quantity="xi")
        assert record.quantity == "xi"

    def test_unrecognized_header(self):
        with pytest.raises(ValueError, match="unrecognized header"):
            parse_table_text("a,b\n1,2\n")

    def test_empty_input(self):
        with pytest.raises(ValueError, match="empty table"):
            parse_table_text("\n\n")

    def test_bad_value_names_line(self):
        text = "state_code,value,uncertainty\nv1,abc,0.01\n"
        with pytest.raises(ValueError, match="line 2: bad value"):
            parse_table_text(text)

    def test_state_value_range(self):
        text = "state_code,value,uncertainty\nv1,19.0,0.01\n"
        with pytest.raises(ValueError, match=r"outside \[0, 18\]"):
            parse_table_text(text)

    def test_edge_probability_range(self):
        text = "i,j,value\n1,2,1.5\n"
        with pytest.raises(ValueError, match=r"outside \[0, 1\]"):
            parse_table_text(text)

    def test_edge_bad_vertex_pair(self):
        text = "i,j,value\none,2,0.5\n"
        with pytest.raises(ValueError, match="bad vertex pair"):
            parse_table_text(text)

    def test_term_bad_key(self):
        text = "state_code,context,outcomes,value,uncertainty\nv1,01,001,0.2,0.01\n"
        with pytest.raises(ValueError, match="bad term key"):
            parse_table_text(text)

    def test_wrong_field_count(self):
        text = "i,j,value\n1,2\n"
        with pytest.raises(ValueError, match="expected 3 fields"):
            parse_table_text(text)

    def test_negative_uncertainty(self):
        text = "state_code,value,uncertainty\nv1,4.5,-0.01\n"
        with pytest.raises(ValueError, match="negative uncertainty"):
            parse_table_text(text)

    def test_origin_appears_in_errors(self, tmp_path):
        bad = tmp_path / "table.csv"
        bad.write_text("state_code,value,uncertainty\nv1,99,0.01\n")
        with pytest.raises(ValueError, match="table.csv: line 2"):
            load_table(bad)


class TestRoundTrips:
    @pytest.mark.parametrize("fixture_id", sorted(FIXTURE_FILES))
    def test_export_reproduces_fixture_bytes(self, fixture_id):
        records = load_table(fixture_id)
        assert export_table(records) == fixture_text(fixture_id)

    def test_export_rejects_mixed_quantities(self):
        records = load_table("sigma15") + load_table("edges")
        with pytest.raises(ValueError, match="mixed quantities"):
            export_table(records)

    def test_dump_then_load_from_path(self, tmp_path):
        paths = dump_fixtures(tmp_path)
        assert [p.name for p in paths] == sorted(FIXTURE_FILES[f] for f in FIXTURE_FILES)
        by_path = load_table(tmp_path / "edges.csv")
        assert len(by_path) == 126

    def test_env_override_directory(self, tmp_path, monkeypatch):
        dump_fixtures(tmp_path)
        target = tmp_path / "sigma15.csv"
        target.write_text("state_code,value,uncertainty\nv1,4.00,0.01\n")
        monkeypatch.setenv(ENV_FIXTURES_DIR, str(tmp_path))
        records = load_table("sigma15")
        assert len(records) == 1
        assert records[0].value == pytest.approx(4.0)

    def test_without_override_full_table_returns(self, monkeypatch):
        monkeypatch.delenv(ENV_FIXTURES_DIR, raising=False)
        assert len(load_table("sigma15")) == 15

from __future__ import annotations

import json

import pytest

from fpoly.harness import (
    CAMPAIGNS,
    CorpusSpec,
    evaluate,
    generate_corpus,
    load_config,
    run_campaign,
)
from fpoly.polynomials import is_real_rooted

SMALL = CorpusSpec(max_degree=3, max_coeff=8)


class TestCorpus:
    def test_grid_filter(self):
        got = {p.coeffs for p in generate_corpus(CorpusSpec(2, 3))}
        assert (1, 2, 1) in got and (1, 3, 2) in got
        assert (1, 1, 1) not in got

    def test_grid_is_complete(self):
        from itertools import product
        want = {
            (1,) + rest
            for d in range(1, 4)
            for rest in product(range(1, 9), repeat=d)
            if is_real_rooted((1,) + rest)
        }
        assert {p.coeffs for p in generate_corpus(SMALL)} == want

    def test_root_product(self):
        got = {p.coeffs for p in generate_corpus(CorpusSpec(2, 2, "root-product")) if p.degree == 2}
        assert got == {(1, 2, 1), (1, 3, 2), (1, 4, 4)}

    def test_deterministic(self):
        assert generate_corpus(SMALL) == generate_corpus(SMALL)
        assert generate_corpus(CorpusSpec(3, 8, seed=5)) == generate_corpus(SMALL)

    def test_parallel_same(self):
        spec = CorpusSpec(3, 6, "both")
        assert generate_corpus(spec, jobs=2) == generate_corpus(spec, jobs=1)

    def test_caps(self):
        with pytest.raises(ValueError, match="cap"):
            generate_corpus(CorpusSpec(9, 2))
        with pytest.raises(ValueError, match="cap"):
            generate_corpus(CorpusSpec(4, 20), caps={"grid_candidates": 1000})

    @pytest.mark.parametrize("kw", [{"max_degree": 0}, {"max_coeff": 0}, {"generator": "nope"}])
    def test_bad_spec(self, kw):
        with pytest.raises(ValueError):
            CorpusSpec(**kw)


class TestCampaigns:
    @pytest.mark.parametrize("name", ["question-bs", "thm-monotone", "cor-hvector", "thm-ceiling-implies-kk"])
    def test_small_corpus_clean(self, name):
        rep = run_campaign(name, generate_corpus(SMALL))
        assert rep.findings == [] and rep.tested > 0

    def test_unknown(self):
        with pytest.raises(ValueError):
            run_campaign("nope", [])

    def test_soft_findings(self):
        (f,) = evaluate("que-second", (1, 6, 10, 6, 1))
        assert f.predicate == "h real-rooted" and not f.hard
        assert evaluate("conj-second", (1, 3, 3, 2))[0].hard is False

    def test_hard_findings(self):
        # outside the theorem's hypothesis so the check genuinely fires
        (f,) = evaluate("thm-monotone", (1, 1, 1))
        assert f.hard
        (f,) = evaluate("cor-hvector", (1, 2, 4))
        assert f.hard

    def test_parallel_findings_identical(self):
        corpus = generate_corpus(CorpusSpec(4, 12))
        one = run_campaign("que-second", corpus, jobs=1, chunk_size=50)
        two = run_campaign("que-second", corpus, jobs=2, chunk_size=50, seed=3)
        assert one.findings == two.findings and one.findings

    def test_report_format(self):
        corpus = generate_corpus(SMALL)
        rep = run_campaign("question-bs", corpus, corpus_spec=SMALL)
        lines = rep.render().splitlines()
        head = json.loads(lines[0])
        assert list(head) == [
            "campaign", "max_degree", "max_coeff", "generator", "seed",
            "tested", "tested_by_degree", "findings", "hard_failures", "wall_time",
        ]
        assert head["tested"] == len(corpus)

    def test_finding_fields(self):
        rep = run_campaign("que-second", [(1, 6, 10, 6, 1)])
        rec = json.loads(rep.to_lines()[1])
        assert list(rec) == ["campaign", "input", "predicate", "detail", "hard"]
        assert rec["input"] == "1,6,10,6,1"

    def test_all_names_registered(self):
        assert set(CAMPAIGNS) == {
            "question-bs", "conj-second", "que-second",
            "thm-monotone", "thm-ceiling-implies-kk", "cor-hvector",
        }


class TestConfig:
    def test_load(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text(json.dumps({"caps": {"max_degree": 3}, "corpus": {"max_coeff": 5}}))
        assert load_config(str(p))["caps"]["max_degree"] == 3

    def test_unknown_key(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text(json.dumps({"speed": 1}))
        with pytest.raises(ValueError):
            load_config(str(p))

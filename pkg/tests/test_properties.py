"""Property tests; hypothesis drives the shared random builders."""

import itertools
import random

from hypothesis import HealthCheck, given, settings, strategies as st

import generators as gen
from lexmodel import (
    LENIENT, Lexicon, MalformedXml, TeiDocument, accidental_polysemy, canonical_termbase,
    equivalents, lemma_of, lmf_conformance, merge, onoma_projection, parse_tbx, parse_tei,
    sema_projection, sense_stats, synonyms, usage_index, validate_onoma, validate_sema,
    worst_severity, write_tbx, write_tei,
)
from lexmodel.onoma import entry_ids
from lexmodel.sema import Sense, lexicon_ids
from test_report import random_report

SETTINGS = settings(max_examples=60, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])
randoms = st.randoms(use_true_random=False)


def langs_of(base):
    return list(dict.fromkeys(ls.lang for e in base.entries for ls in e.languages))


@SETTINGS
@given(randoms)
def test_tbx_round_trip(rng):
    base = gen.termbase(rng)
    out = write_tbx(base)
    again, report = parse_tbx(out)
    assert again == base and not report
    assert write_tbx(again) == out


@SETTINGS
@given(randoms)
def test_tei_round_trip(rng):
    doc = TeiDocument(Lexicon(rng.choice(gen.LANGS), (gen.lexical_entry(rng, ident='a'),
                                                      gen.lexical_entry(rng))))
    out = write_tei(doc)
    again, _ = parse_tei(out)
    assert again == doc
    assert write_tei(again) == out


@SETTINGS
@given(randoms)
def test_cartesian_product_law(rng):
    base = gen.termbase(rng)
    for entry in base.entries:
        for a, b in itertools.permutations(entry.langs, 2):
            pairs = equivalents(entry, a, b)
            assert len(pairs) == len(synonyms(entry, a)) * len(synonyms(entry, b))
            assert all((x, y) in pairs for x in synonyms(entry, a) for y in synonyms(entry, b))


def brute_polysemy(base):
    found = {}
    for eid, entry in zip(entry_ids(base), base.entries):
        for ls in entry.languages:
            for ts in ls.terms:
                ids = found.setdefault((ls.lang, ts.term), [])
                if eid not in ids:
                    ids.append(eid)
    return {k: v for k, v in found.items() if len(v) >= 2}


@SETTINGS
@given(randoms)
def test_polysemy_matches_brute_force(rng):
    base = gen.shared_termbase(rng) if rng.random() < 0.7 else gen.termbase(rng)
    assert accidental_polysemy(base) == brute_polysemy(base)


@SETTINGS
@given(randoms)
def test_minimal_profile_oracle(rng):
    base = gen.termbase(rng)
    for entry in base.entries:
        ok = bool(entry.languages) and all(ls.terms for ls in entry.languages) and \
            len(set(entry.langs)) == len(entry.langs) and \
            all(ts.term.strip() for ls in entry.languages for ts in ls.terms)
        assert ok == (not validate_onoma(entry, 'minimal').errors)
        assert set(validate_onoma(entry).findings) <= \
            set(validate_onoma(entry, 'recommended').findings)


def dfs(senses, depth=1):
    total, deepest = 0, 0
    for s in senses:
        t, d = dfs(s.subsenses, depth + 1)
        total += 1 + t
        deepest = max(deepest, depth, d)
    return total, deepest


@SETTINGS
@given(randoms)
def test_sense_stats_matches_dfs(rng):
    entry = gen.lexical_entry(rng)
    total, deepest = dfs(entry.senses)
    assert sense_stats(entry) == (total, deepest, len(entry.senses))


@SETTINGS
@given(randoms)
def test_lemma_invariant_under_permutation(rng):
    entry = gen.lexical_entry(rng)
    lemma = gen.form(rng, form_type='lemma')
    others = [f for f in entry.forms if f.form_type != 'lemma']
    expected = lemma.values('orthography')[0]
    for _ in range(4):
        rng.shuffle(others)
        forms = list(others)
        forms.insert(rng.randint(0, len(forms)), lemma)
        assert lemma_of(entry.__class__(tuple(forms))) == expected


def all_senses(senses):
    for s in senses:
        yield s
        yield from all_senses(s.subsenses)


@SETTINGS
@given(randoms)
def test_usage_index_brute_force(rng):
    lex = Lexicon('fr', tuple(gen.lexical_entry(rng) for _ in range(rng.randint(0, 4))))
    for usg_type in ('dom', 'register', 'hint', ''):
        expected = {}
        for eid, entry in zip(lexicon_ids(lex), lex.entries):
            for s in all_senses(entry.senses):
                for u in s.usages:
                    if u.usg_type == usg_type:
                        ids = expected.setdefault(u.value, [])
                        if eid not in ids:
                            ids.append(eid)
        assert usage_index(lex, usg_type) == expected


@SETTINGS
@given(randoms)
def test_sema_profiles_nested(rng):
    entry = gen.lexical_entry(rng)
    reports = [set(validate_sema(entry, p).findings) for p in ('lenient', 'lmf-core', 'lmf-mrd')]
    assert reports[0] <= reports[1] <= reports[2]
    assert reports[2] <= set(lmf_conformance(entry).findings)


@SETTINGS
@given(randoms)
def test_conformance_monotone(rng):
    entry = gen.lexical_entry(rng)
    extra = Sense(None, ('d',), (gen.UsageMarker('register', 'Fam.'),))
    richer = entry.__class__(entry.forms, entry.gram or gen.gram(rng), entry.senses + (extra,),
                             entry.id)
    assert set(lmf_conformance(entry).findings) <= set(lmf_conformance(richer).findings)


@SETTINGS
@given(randoms)
def test_merge_laws(rng):
    a, b, c = (random_report(rng) for _ in range(3))
    assert merge([merge([a, b]), c]) == merge([a, merge([b, c])]) == merge([a, b, c])
    assert merge([a, merge([])]) == a == merge([merge([]), a])
    ws = [s for s in (worst_severity(a), worst_severity(b)) if s is not None]
    assert worst_severity(merge([a, b])) == (max(ws) if ws else None)


@SETTINGS
@given(randoms)
def test_duality(rng):
    base = gen.restricted_termbase(rng)
    lexica = [sema_projection(base, lang)[0] for lang in langs_of(base)]
    rebuilt, _ = onoma_projection(lexica)
    assert canonical_termbase(rebuilt) == canonical_termbase(base)


@SETTINGS
@given(randoms)
def test_incidence_conservation(rng):
    base = gen.termbase(rng)
    for lang in langs_of(base):
        lex, _ = sema_projection(base, lang)
        incidences = sum(len(ls.terms) for e in base.entries for ls in e.languages
                         if ls.lang == lang)
        assert sum(len(e.senses) for e in lex.entries) == incidences


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=300))
def test_arbitrary_bytes_never_crash(data):
    for parse in (parse_tbx, parse_tei):
        try:
            parse(data, LENIENT)
        except MalformedXml:
            pass


def test_generators_are_seed_stable():
    assert gen.termbase(random.Random(3)) == gen.termbase(random.Random(3))

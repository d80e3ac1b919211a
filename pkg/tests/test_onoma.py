import pytest

from lexmodel import (
    DataCategory, LangCode, LanguageSection, ModelError, SameLanguage, TermBase,
    TerminologicalEntry, TermSection, accidental_polysemy, equivalents, index_by_term,
    synonyms, validate_onoma, validate_termbase,
)
from lexmodel.onoma import entry_ids


def entry(sections, cats=(), ident=None):
    return TerminologicalEntry(ident, cats, tuple(
        LanguageSection(lang, tuple(TermSection(t) for t in terms)) for lang, terms in sections))


EMAIL = entry([('en', ['e-mail']), ('fr', ['courriel'])], ident='c5')


@pytest.mark.parametrize('raw,norm', [('fr', 'fr'), ('FR-ca', 'fr-CA'), ('zh_hant', 'zh-Hant'),
                                      ('de-1996', 'de-1996')])
def test_langcode_normalizes(raw, norm):
    assert LangCode(raw) == norm


@pytest.mark.parametrize('bad', ['', 'f', 'french!', '12', 'fr--CA'])
def test_langcode_rejects(bad):
    with pytest.raises(ModelError):
        LangCode(bad)


def test_data_category_checks():
    with pytest.raises(ModelError):
        DataCategory('', 'x')
    with pytest.raises(ModelError):
        DataCategory('note', '')
    with pytest.raises(ModelError):
        DataCategory('administrativeStatus', 'bestTerm')
    assert DataCategory('administrativeStatus', 'preferredTerm').value == 'preferredTerm'


def test_structural_keys_not_categories():
    with pytest.raises(ModelError):
        TermSection('x', (DataCategory('term', 'y'),))


def test_term_is_nfc():
    assert TermSection('élan').term == 'élan'


def test_duplicate_entry_ids():
    with pytest.raises(ModelError):
        TermBase((entry([('en', ['a'])], ident='x'), entry([('en', ['b'])], ident='x')))
    assert entry_ids(TermBase((entry([('en', ['a'])]), EMAIL))) == ['entry-1', 'c5']


def test_minimal_profile_findings():
    assert not validate_onoma(EMAIL)
    assert validate_onoma(TerminologicalEntry()).codes == ('MISSING_LANG_SECTION',)
    bad = TerminologicalEntry(None, (), (LanguageSection('en', ()),
                                         LanguageSection('fr', (TermSection(' '),)),
                                         LanguageSection('EN', (TermSection('x'),))))
    assert validate_onoma(bad).codes == ('MISSING_TERM_SECTION', 'EMPTY_TERM', 'DUPLICATE_LANG')
    assert validate_onoma(bad).findings[1].path == 'termEntry[1]/langSet[2]/tig[1]'


def test_recommended_profile_on_bare_entry():
    report = validate_onoma(EMAIL, 'recommended')
    assert report.codes == ('MISSING_DEFINITION', 'MISSING_PART_OF_SPEECH',
                            'MISSING_SUBJECT_FIELD')
    assert all(f.severity == 1 for f in report)


def test_recommended_satisfied():
    full = TerminologicalEntry(
        'c1', (DataCategory('subjectField', 'IT'), DataCategory('definition', 'mail')),
        (LanguageSection('en', (TermSection('e-mail', (DataCategory('partOfSpeech', 'noun'),)),)),))
    assert not validate_onoma(full, 'recommended')
    lang_def = TerminologicalEntry(None, (DataCategory('subjectField', 'IT'),), (
        LanguageSection('en', (TermSection('x', (DataCategory('partOfSpeech', 'noun'),)),),
                        (DataCategory('definition', 'y'),)),))
    assert not validate_onoma(lang_def, 'recommended')


def test_validation_monotone_in_profile():
    base = TermBase((EMAIL, TerminologicalEntry()))
    minimal = set(validate_termbase(base, 'minimal').findings)
    assert minimal <= set(validate_termbase(base, 'recommended').findings)


def test_unknown_profile():
    with pytest.raises(ValueError):
        validate_onoma(EMAIL, 'strict')


def test_synonyms_and_equivalents():
    e = entry([('fr', ['a', 'b']), ('en', ['x', 'y', 'z'])])
    assert synonyms(e, 'fr') == ['a', 'b']
    assert synonyms(e, 'de') == []
    assert len(equivalents(e, 'fr', 'en')) == 6
    assert equivalents(EMAIL, 'en', 'fr') == [('e-mail', 'courriel')]
    assert equivalents(e, 'fr', 'de') == []
    with pytest.raises(SameLanguage):
        equivalents(e, 'fr', 'FR')


def test_polysemy_and_index():
    base = TermBase(tuple(entry([('de', ['Absatz'])], ident=f'e{i}') for i in range(1, 5))
                    + (entry([('de', ['Satz', 'satz'])], ident='e5'),))
    assert accidental_polysemy(base) == {(LangCode('de'), 'Absatz'): ['e1', 'e2', 'e3', 'e4']}
    assert index_by_term(base, 'de', casefold=True)['Satz'] == ['e5']
    assert accidental_polysemy(TermBase()) == {}
    single = TermBase((entry([('de', ['Absatz', 'Absatz'])]),))
    assert accidental_polysemy(single) == {}


def test_casefold_polysemy():
    base = TermBase((entry([('en', ['Bank'])]), entry([('en', ['bank'])])))
    assert accidental_polysemy(base) == {}
    assert list(accidental_polysemy(base, casefold=True).values()) == [['entry-1', 'entry-2']]


def test_models_are_immutable():
    with pytest.raises(Exception):
        EMAIL.id = 'other'

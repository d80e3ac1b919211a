import pytest

from conftest import fixture_bytes
from lexmodel import (
    LENIENT, DataCategory, EmptyTerm, InvalidModel, LanguageSection, MalformedXml, MissingLang,
    ParseOptions, TermBase, TerminologicalEntry, TermSection, UnknownElement, parse_tbx,
    write_tbx,
)
from lexmodel.errors import ParseError
from lexmodel.onoma import first_value
from lexmodel.tbx import EXTENSION_KEY


def doc(inner: str) -> bytes:
    return f'<martif><text><body>{inner}</body></text></martif>'.encode()


def test_email_fixture():
    base, report = parse_tbx(fixture_bytes('email.tbx'))
    assert not report
    (entry,) = base.entries
    assert entry.id == 'c5'
    assert [(ls.lang, [t.term for t in ls.terms]) for ls in entry.languages] == [
        ('en', ['e-mail']), ('fr', ['courriel'])]


def test_pascal_fixture_categories():
    base, report = parse_tbx(fixture_bytes('pascal.tbx'))
    assert not report
    (entry,) = base.entries
    assert first_value(entry.categories, 'subjectField') == 'Biomédical'
    assert entry.categories[1].lang == 'fr'
    ids = [first_value(ts.categories, 'termIdentifier') for ls in entry.languages for ts in ls.terms]
    assert ids == [f'BV.122497.{i}' for i in range(1, 6)]


def test_strict_errors_are_typed():
    with pytest.raises(MissingLang):
        parse_tbx(doc('<termEntry><langSet><tig><term>a</term></tig></langSet></termEntry>'))
    with pytest.raises(EmptyTerm):
        parse_tbx(doc('<termEntry><langSet xml:lang="en"><tig><term/></tig></langSet>'
                      '</termEntry>'))
    with pytest.raises(UnknownElement):
        parse_tbx(doc('<termEntry><foo/><langSet xml:lang="en"><tig><term>a</term></tig>'
                      '</langSet></termEntry>'))
    with pytest.raises(ParseError) as info:
        parse_tbx(doc('<termEntry/>'))
    assert info.value.finding.code == 'MISSING_LANG_SECTION'


@pytest.mark.parametrize('data', [b'', b'<a>', b'<a></b>', b'not xml',
                                  b'<!DOCTYPE a [<!ENTITY x "y">]><a>&x;</a>', b'<a>&nope;</a>'])
def test_malformed_xml(data):
    with pytest.raises(MalformedXml):
        parse_tbx(data)
    with pytest.raises(MalformedXml):
        parse_tbx(data, LENIENT)


def test_lenient_recovers():
    data = doc('<termEntry xml:id="a"><foo>bar</foo>'
               '<langSec xml:lang="en"><tig><term>x <hi>y</hi></term></tig>'
               '<tig><term/></tig></langSec>'
               '<langSet xml:lang="en"><tig><term>z</term></tig></langSet></termEntry>'
               '<termEntry xml:id="a"><langSet xml:lang="fr"><tig><term>w</term></tig>'
               '</langSet></termEntry>')
    base, report = parse_tbx(data, LENIENT)
    assert set(report.codes) == {'UNKNOWN_ELEMENT', 'LANGSEC_ALIAS', 'INLINE_MARKUP',
                                 'EMPTY_TERM', 'DUPLICATE_LANG', 'DUPLICATE_ID'}
    first, second = base.entries
    assert first.categories == (DataCategory(EXTENSION_KEY, '<foo>bar</foo>'),)
    assert [t.term for t in first.languages[0].terms] == ['x y', 'z']
    assert second.id is None


def test_namespace_option():
    data = fixture_bytes('email.tbx')
    parse_tbx(data, ParseOptions(namespace='http://www.tbx.org'))
    with pytest.raises(ParseError):
        parse_tbx(data, ParseOptions(namespace='urn:other'))


def test_writer_canonical_and_idempotent():
    base, _ = parse_tbx(fixture_bytes('pascal.tbx'))
    out = write_tbx(base)
    assert out.startswith(b'<?xml version="1.0" encoding="UTF-8"?>\n<martif>')
    assert b'<termNote type="administrativeStatus">deprecatedTerm</termNote>' in out
    assert b'<admin type="conceptIdentifier">BV.122497</admin>' in out
    again, _ = parse_tbx(out)
    assert again == base
    assert write_tbx(again) == out


def test_writer_keeps_extensions_verbatim():
    base, _ = parse_tbx(doc('<termEntry><x a="1">t&amp;u</x><langSet xml:lang="en"><tig>'
                            '<term>a</term></tig></langSet></termEntry>'), LENIENT)
    out = write_tbx(base)
    assert b'<x a="1">t&amp;u</x>' in out
    assert parse_tbx(out, LENIENT)[0] == base


def test_writer_rejects_invalid():
    bad = TermBase((TerminologicalEntry(None, (), (LanguageSection('en', ()),)),))
    with pytest.raises(InvalidModel) as info:
        write_tbx(bad)
    assert info.value.report.codes == ('MISSING_TERM_SECTION',)


def test_escaping():
    base = TermBase((TerminologicalEntry('a', (), (LanguageSection('en', (
        TermSection('<&>"\''),)),)),))
    assert parse_tbx(write_tbx(base))[0] == base


def test_metadata_round_trip():
    base = TermBase((TerminologicalEntry(None, (), (LanguageSection('en', (TermSection('a'),)),)),),
                    (DataCategory('sourceDesc', 'test'),))
    assert parse_tbx(write_tbx(base))[0] == base

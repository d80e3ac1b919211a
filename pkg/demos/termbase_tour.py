"""
Reading and querying a termbase
===============================

Parse the PASCAL concept entry, look at its synonyms and translation pairs,
then check it against both validation profiles.
"""

import pathlib

from lexmodel import equivalents, parse_tbx, synonyms, validate_termbase, write_tbx

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / 'tests' / 'fixtures'

base, report = parse_tbx((FIXTURES / 'pascal.tbx').read_bytes())
entry = base.entries[0]
print('languages:', ', '.join(entry.langs))

# every term in one language section is a synonym of the others
for term in synonyms(entry, 'fr'):
    print('  fr:', term)

# translation pairs are the cartesian product of two sections
for fr, en in equivalents(entry, 'fr', 'en'):
    print(f'  {fr}  <->  {en}')

# descriptive categories live at the level they describe
for cat in entry.categories:
    print(f'  concept {cat.key} = {cat.value}')

# minimal is silent here; recommended wants a definition and parts of speech
print(validate_termbase(base, 'minimal').to_text() or 'minimal: no findings')
print(validate_termbase(base, 'recommended').to_text())

# the canonical writer output reads back to the same model
out = write_tbx(base)
assert parse_tbx(out).base == base
print(out.decode()[:400], '...')

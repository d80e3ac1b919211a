"""
Between termbase and dictionary
===============================

One concept with four French terms becomes four dictionary entries; a
dictionary entry with five defined senses becomes five concepts.
"""

import pathlib

from lexmodel import (
    ParseOptions, canonical_termbase, onoma_projection, parse_tbx, parse_tei, sema_projection,
)

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / 'tests' / 'fixtures'

base, _ = parse_tbx((FIXTURES / 'pascal.tbx').read_bytes())
french, loss = sema_projection(base, 'fr')
for e in french.entries:
    sense = e.senses[0]
    print(e.id, e.forms[0].representations[0].value, '->',
          [f'{lang}:{text}' for lang, text in sense.equivalents],
          [f'{u.usg_type}:{u.value}' for u in sense.usages])
print(f'{len(loss)} categories had nowhere to go')

# going back needs every language as its own dictionary
english, _ = sema_projection(base, 'en')
rebuilt, _ = onoma_projection([french, english])
print('same concept back:', [str(ls.lang) for ls in rebuilt.entries[0].languages],
      len(rebuilt.entries))

# the Absatz homograph: four concepts, one headword
absatz, _ = parse_tbx((FIXTURES / 'absatz.tbx').read_bytes())
german, _ = sema_projection(absatz, 'de')
print('Absatz senses:', [s.attr('corresp') for s in german.entries[0].senses])
again, _ = onoma_projection([german])
print('round trip equal (ids and order ignored):',
      canonical_termbase(again) == canonical_termbase(absatz))

doc, _ = parse_tei((FIXTURES / 'poussin.xml').read_bytes(), ParseOptions(lang='fr'))
concepts, loss = onoma_projection([doc.lexicon])
print(len(concepts.entries), 'concepts from poussin')
print(loss.to_text())

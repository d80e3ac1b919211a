"""
A dictionary entry with nested senses
=====================================

The French entry "poussin": lemma, grammar, sense tree, and how much of it
fits the LMF subset.
"""

import pathlib

from lexmodel import (
    ParseOptions, iter_senses, lemma_info, lmf_conformance, parse_tei, sense_stats, write_tei,
)

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / 'tests' / 'fixtures'

doc, report = parse_tei((FIXTURES / 'poussin.xml').read_bytes(), ParseOptions(lang='fr'))
entry = doc.lexicon.entries[0]

# the form has no type="lemma", so the lemma is a fallback
print(lemma_info(entry))
print('gram:', entry.gram.pos, entry.gram.gender)
print('senses (total, deepest, top level):', tuple(sense_stats(entry)))

for node in iter_senses(entry):
    s = node.sense
    marks = ', '.join(f'{u.usg_type}:{u.value}' for u in s.usages)
    text = s.definitions[0].text if s.definitions else '(no definition)'
    print('  ' * node.depth + f'{s.label or "-"} [{marks}] {text}')

# what a strict LMF reading would lose
print(lmf_conformance(entry).to_text())

print(write_tei(doc).decode())

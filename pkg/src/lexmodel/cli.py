"""lexmodel command line: validate, convert, query, stats.

Exit status: 0 when the worst finding is at most a warning, 1 when an error
finding was reported (or a projection precondition failed), 2 on usage
errors, unreadable input, or a fatal parse failure.
"""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys
from collections import Counter
from typing import List, Optional

from . import jsonform
from .crosswalk import ProjectionOptions, lmf_conformance, onoma_projection, sema_projection
from .errors import DuplicateObjectLanguage, InvalidModel, LexModelError, ParseError
from .onoma import (
    LangCode, TermBase, accidental_polysemy, entry_ids, equivalents, synonyms,
    validate_termbase,
)
from .parsing import ParseOptions
from .report import ERROR, Finding, ValidationReport, merge, worst_severity
from .sema import Lexicon, lemma_info, lexicon_ids, sense_stats, usage_index, validate_sema
from .tbx import parse_tbx, write_tbx
from .tei import TeiDocument, parse_tei, write_tei

FORMATS = ('tbx', 'tei', 'json')
QUERY_KINDS = ('lemma', 'synonyms', 'equivalents', 'polysemy', 'usage')
TBX_PROFILES = ('minimal', 'recommended')
TEI_PROFILES = ('lenient', 'lmf-core', 'lmf-mrd', 'conformance')
EXTENSIONS = {'.tbx': 'tbx', '.tei': 'tei', '.json': 'json'}


class UsageError(Exception):
    """Bad command line; exit status 2."""


class Fatal(Exception):
    """Input could not be read or parsed; exit status 2."""


def _record(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def sniff(data: bytes) -> str:
    head = data.lstrip()[:1]
    if head in (b'{', b'['):
        return 'json'
    if b'termEntry' in data or b'<martif' in data:
        return 'tbx'
    return 'tei'


def input_format(path: str, data: bytes, forced: Optional[str]) -> str:
    if forced:
        return forced
    ext = os.path.splitext(path)[1].lower()
    return EXTENSIONS.get(ext) or sniff(data)


def expand_inputs(inputs: List[str]) -> List[str]:
    """Directories become their sorted files; glob patterns are expanded."""
    out = []
    for item in inputs:
        if os.path.isdir(item):
            out.extend(sorted(os.path.join(item, n) for n in os.listdir(item)
                              if os.path.isfile(os.path.join(item, n))))
        elif glob.has_magic(item):
            out.extend(p for p in sorted(glob.glob(item)) if os.path.isfile(p))
        else:
            out.append(item)
    return out


def read_bytes(path: str) -> bytes:
    try:
        if path == '-':
            return sys.stdin.buffer.read()
        with open(path, 'rb') as fh:
            return fh.read()
    except OSError as exc:
        raise Fatal(f'{path}: {exc.strerror or exc}') from None


def load(path: str, args, mode: Optional[str] = None):
    """Parse one input; returns (format, model, parse report)."""
    data = read_bytes(path)
    fmt = input_format(path, data, getattr(args, 'format', None) or getattr(args, 'src', None))
    opts = ParseOptions(mode or args.mode, args.namespace,
                        args.lang if fmt == 'tei' else None)
    try:
        if fmt == 'tbx':
            base, report = parse_tbx(data, opts)
            return fmt, base, report
        if fmt == 'tei':
            doc, report = parse_tei(data, opts)
            return fmt, doc, report
        model = jsonform.loads(data.decode('utf-8'))
    except ParseError as exc:
        raise Fatal(f'{path}: {type(exc).__name__}: {exc}') from None
    except (LexModelError, UnicodeDecodeError) as exc:
        raise Fatal(f'{path}: {exc}') from None
    if isinstance(model, Lexicon):
        model = TeiDocument(model)
    return ('tbx' if isinstance(model, TermBase) else 'tei'), model, ValidationReport()


def _extra(full: ValidationReport, base: ValidationReport) -> List[Finding]:
    """Findings of ``full`` not already in ``base`` (multiset difference)."""
    seen = Counter((f.code, f.path, f.message) for f in base)
    out = []
    for f in full:
        key = (f.code, f.path, f.message)
        if seen[key]:
            seen[key] -= 1
        else:
            out.append(f)
    return out


def profile_findings(fmt: str, model, profile: str) -> List[Finding]:
    """Profile checks beyond those the reader already reports."""
    if fmt == 'tbx':
        if profile not in TBX_PROFILES:
            raise UsageError(f'profile {profile!r} does not apply to tbx input')
        return _extra(validate_termbase(model, profile), validate_termbase(model, 'minimal'))
    if profile not in TEI_PROFILES:
        raise UsageError(f'profile {profile!r} does not apply to tei input')
    out = []
    for i, entry in enumerate(model.lexicon.entries, 1):
        path, pos = f'entry[{i}]', (i - 1,)
        full = (lmf_conformance(entry, path, pos) if profile == 'conformance'
                else validate_sema(entry, profile, path, pos))
        out.extend(_extra(full, validate_sema(entry, 'lenient', path, pos)))
    return out


def emit(text: str, args):
    if args.output:
        with open(args.output, 'a' if getattr(args, '_appending', False) else 'w',
                  encoding='utf-8') as fh:
            fh.write(text)
        args._appending = True
    else:
        sys.stdout.write(text)


def emit_bytes(data: bytes, args):
    if args.output:
        with open(args.output, 'wb') as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_validate(args) -> int:
    status = 0
    lines = []
    for path in expand_inputs(args.inputs):
        try:
            fmt, model, report = load(path, args)
            profile = args.profile or ('minimal' if fmt == 'tbx' else 'lenient')
            report = merge([report, ValidationReport(tuple(profile_findings(fmt, model, profile)))])
        except Fatal as exc:
            print(exc, file=sys.stderr)
            status = 2
            continue
        for f in report:
            if args.json:
                lines.append(_record(dict(f.to_dict(), file=path)) + '\n')
            else:
                lines.append(f'{path}\t{f.to_line()}\n')
        if worst_severity(report) == ERROR:
            status = max(status, 1)
    emit(''.join(lines), args)
    return status


def _print_loss(report: ValidationReport):
    for f in report:
        print(f'loss\t{f.to_line()}', file=sys.stderr)


def cmd_convert(args) -> int:
    src, dst = args.src, args.to
    inputs = expand_inputs(args.inputs)
    if not inputs:
        raise UsageError('no input files')
    direction = (src, dst)
    if dst == 'json' or src == 'json':
        if src == dst:
            raise UsageError(f'unsupported conversion {src} -> {dst}')
    elif direction not in (('tbx', 'tei'), ('tei', 'tbx')):
        raise UsageError(f'unsupported conversion {src} -> {dst}')
    if dst == 'tei' and src == 'tbx' and not args.lang:
        raise UsageError('--lang is required for tbx -> tei')
    if not (src == 'tei' and dst == 'tbx') and len(inputs) > 1:
        raise UsageError(f'{src} -> {dst} takes one input file')

    loaded = []
    for path in inputs:
        fmt, model, report = load(path, args)
        if src != 'json' and fmt != src:
            raise UsageError(f'{path} is {fmt}, not {src}')
        _print_loss(ValidationReport(tuple(f for f in report if f.severity > 0)))
        loaded.append((fmt, model))

    popts = ProjectionOptions(definition_placement=args.placement, split_by_pos=args.split_by_pos)
    fmt, model = loaded[0]
    try:
        if dst == 'json':
            emit(jsonform.dumps(model), args)
            return 0
        if src == 'json':
            if dst != fmt:
                raise UsageError(f'json input holds a {fmt} model, not {dst}')
            emit_bytes(write_tbx(model) if fmt == 'tbx' else write_tei(model, args.wrap), args)
            return 0
        if direction == ('tbx', 'tei'):
            lex, loss = sema_projection(model, args.lang, popts)
            _print_loss(loss)
            emit_bytes(write_tei(TeiDocument(lex), args.wrap), args)
            return 0
        base, loss = onoma_projection([m.lexicon for _, m in loaded], popts)
        _print_loss(loss)
        emit_bytes(write_tbx(base), args)
        return 0
    except InvalidModel as exc:
        for f in exc.report:
            print(f'error\t{f.to_line()}', file=sys.stderr)
        return 1
    except DuplicateObjectLanguage as exc:
        print(f'error\t{exc}', file=sys.stderr)
        return 1


def _need(args, *names):
    for name in names:
        if not getattr(args, name):
            raise UsageError(f'--{name} is required for query {args.query}')


def _query_one(kind, fmt, model, args, path):
    if kind in ('synonyms', 'equivalents', 'polysemy') and fmt != 'tbx':
        raise UsageError(f'query {kind} needs tbx input')
    if kind in ('lemma', 'usage') and fmt != 'tei':
        raise UsageError(f'query {kind} needs tei input')
    if kind == 'synonyms':
        _need(args, 'lang')
        lang = LangCode(args.lang)
        for eid, entry in zip(entry_ids(model), model.entries):
            for term in synonyms(entry, lang):
                yield {'file': path, 'entry': eid, 'lang': lang, 'term': term}
    elif kind == 'equivalents':
        _need(args, 'lang', 'langB')
        a, b = LangCode(args.lang), LangCode(args.langB)
        if a == b:
            raise UsageError('--lang and --langB must differ')
        for eid, entry in zip(entry_ids(model), model.entries):
            for ta, tb in equivalents(entry, a, b):
                yield {'file': path, 'entry': eid, 'langA': a, 'termA': ta,
                       'langB': b, 'termB': tb}
    elif kind == 'polysemy':
        for (lang, term), ids in accidental_polysemy(model, args.casefold).items():
            yield {'file': path, 'lang': lang, 'term': term, 'entries': ids}
    elif kind == 'lemma':
        for eid, entry in zip(lexicon_ids(model.lexicon), model.lexicon.entries):
            info = lemma_info(entry)
            yield {'file': path, 'entry': eid, 'lemma': info.text, 'explicit': info.explicit}
    else:
        for value, ids in usage_index(model.lexicon, args.usage_type).items():
            yield {'file': path, 'type': args.usage_type, 'value': value, 'entries': ids}


def cmd_query(args) -> int:
    positional = list(args.inputs)
    if args.query is None:
        if not positional:
            raise UsageError('query kind missing')
        args.query = positional.pop(0)
    if args.query not in QUERY_KINDS:
        raise UsageError(f'unknown query kind {args.query!r}; choose from {", ".join(QUERY_KINDS)}')
    inputs = expand_inputs(positional)
    if not inputs:
        raise UsageError('no input files')
    lines = []
    status = 0
    for path in inputs:
        try:
            fmt, model, _ = load(path, args)
        except Fatal as exc:
            print(exc, file=sys.stderr)
            status = 2
            continue
        lines.extend(_record(r) + '\n' for r in _query_one(args.query, fmt, model, args, path))
    emit(''.join(lines), args)
    return status


def _zero():
    return {'entries': 0, 'languages': 0, 'terms': 0, 'senses': 0, 'maxDepth': 0,
            'findings': 0}


def file_stats(fmt, model, report):
    rec = _zero()
    rec['findings'] = len(report)
    langs = set()
    if fmt == 'tbx':
        rec['entries'] = len(model.entries)
        for entry in model.entries:
            for ls in entry.languages:
                langs.add(str(ls.lang))
                rec['terms'] += len(ls.terms)
    else:
        lex = model.lexicon
        rec['entries'] = len(lex.entries)
        if lex.entries:
            langs.add(str(lex.lang))
        for entry in lex.entries:
            st = sense_stats(entry)
            rec['senses'] += st.total
            rec['maxDepth'] = max(rec['maxDepth'], st.max_depth)
            if lemma_info(entry).text is not None:
                rec['terms'] += 1
    rec['languages'] = len(langs)
    return rec, langs


def cmd_stats(args) -> int:
    status = 0
    files = []
    total = _zero()
    all_langs = set()
    for path in expand_inputs(args.inputs):
        try:
            fmt, model, report = load(path, args)
        except Fatal as exc:
            print(exc, file=sys.stderr)
            status = 2
            continue
        rec, langs = file_stats(fmt, model, report)
        all_langs |= langs
        for key in ('entries', 'terms', 'senses', 'findings'):
            total[key] += rec[key]
        total['maxDepth'] = max(total['maxDepth'], rec['maxDepth'])
        files.append(dict(rec, file=path, format=fmt))
    total['languages'] = len(all_langs)
    emit(json.dumps({'files': files, 'total': total}, ensure_ascii=False, sort_keys=True,
                    indent=2) + '\n', args)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog='lexmodel', description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest='command', required=True)

    def common(sp, mode_default):
        sp.add_argument('inputs', nargs='*', help='files, directories or glob patterns')
        sp.add_argument('--mode', choices=('strict', 'lenient'), default=mode_default)
        sp.add_argument('--namespace', help='require every element in this namespace URI')
        sp.add_argument('--lang', help='language code (object language for TEI input)')
        sp.add_argument('--output', '-o', help='write here instead of standard output')

    v = sub.add_parser('validate', help='parse and check against a profile')
    common(v, 'lenient')
    v.add_argument('--format', choices=FORMATS)
    v.add_argument('--profile', help=f'tbx: {"/".join(TBX_PROFILES)}; '
                                     f'tei: {"/".join(TEI_PROFILES)}')
    v.add_argument('--json', action='store_true', help='one JSON record per finding')

    c = sub.add_parser('convert', help='convert between tbx, tei and json')
    common(c, 'strict')
    c.add_argument('--from', dest='src', choices=FORMATS, required=True)
    c.add_argument('--to', choices=FORMATS, required=True)
    c.add_argument('--wrap', action='store_true', help='wrap TEI output in a TEI skeleton')
    c.add_argument('--placement', choices=('conceptLevel', 'languageLevel'),
                   default='conceptLevel', help='where tei -> tbx puts definitions')
    c.add_argument('--split-by-pos', action='store_true',
                   help='tbx -> tei: separate entries per part of speech')

    q = sub.add_parser('query', help='run a model query; one JSON record per line')
    common(q, 'strict')
    q.add_argument('--format', choices=FORMATS)
    q.add_argument('--query', help=f'one of {", ".join(QUERY_KINDS)} '
                                   '(or give it as the first positional argument)')
    q.add_argument('--langB')
    q.add_argument('--usage-type', default='dom')
    q.add_argument('--casefold', action='store_true', help='polysemy: ignore case')

    s = sub.add_parser('stats', help='entry, language, term and sense counts')
    common(s, 'strict')
    s.add_argument('--format', choices=FORMATS)
    return p


COMMANDS = {'validate': cmd_validate, 'convert': cmd_convert, 'query': cmd_query,
            'stats': cmd_stats}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        # positionals may follow options (query synonyms --lang fr a.tbx)
        args, extra = parser.parse_known_args(argv)
        unknown = [a for a in extra if a.startswith('-') and a != '-']
        if unknown:
            parser.error(f'unrecognized arguments: {" ".join(unknown)}')
    except SystemExit as exc:
        return 2 if exc.code else 0
    args.inputs = list(args.inputs) + extra
    if args.lang:
        try:
            LangCode(args.lang)
        except LexModelError as exc:
            print(f'lexmodel: {exc}', file=sys.stderr)
            return 2
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f'lexmodel {args.command}: {exc}', file=sys.stderr)
        return 2
    except Fatal as exc:
        print(exc, file=sys.stderr)
        return 2
    except (OSError, LexModelError) as exc:
        print(f'lexmodel: {exc}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())

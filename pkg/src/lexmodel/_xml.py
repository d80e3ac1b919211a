"""Thin XML layer shared by the TBX and TEI readers and writers.

Parsing goes through expat directly so that entity declarations can be
refused and the raw source text of any element can be sliced back out
(needed to pass opaque blocks through verbatim).
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
import xml.parsers.expat as expat
from typing import Dict, List, Optional, Tuple

from .errors import MalformedXml
from .report import ERROR, Finding

XML_NS = 'http://www.w3.org/XML/1998/namespace'
XML_LANG = f'{{{XML_NS}}}lang'
XML_ID = f'{{{XML_NS}}}id'


class _Reject(Exception):
    pass


def _tag_end(data: bytes, start: int) -> int:
    """Index just past the ``>`` closing the tag that starts at ``start``."""
    quote = None
    i = start
    n = len(data)
    while i < n:
        c = data[i]
        if quote is not None:
            if c == quote:
                quote = None
        elif c in (0x22, 0x27):
            quote = c
        elif c == 0x3E:
            return i + 1
        i += 1
    return n


class XmlDocument:
    def __init__(self, root: ET.Element, source: bytes, spans: Dict[int, Tuple[int, int]]):
        self.root = root
        self.source = source
        self._spans = spans

    def raw(self, elem: ET.Element) -> str:
        span = self._spans.get(id(elem))
        if span is not None:
            try:
                return self.source[span[0]:span[1]].decode('utf-8')
            except UnicodeDecodeError:
                pass
        return ET.tostring(elem, encoding='unicode')


def parse_document(data) -> XmlDocument:
    """Parse bytes into an ElementTree, raising MalformedXml on any failure."""
    if isinstance(data, str):
        data = data.encode('utf-8')
    if not isinstance(data, (bytes, bytearray)):
        raise TypeError('document must be bytes')
    data = bytes(data)
    builder = ET.TreeBuilder()
    spans: Dict[int, Tuple[int, int]] = {}
    open_stack: List[Tuple[ET.Element, int, int]] = []
    p = expat.ParserCreate(namespace_separator='}')
    p.ordered_attributes = True

    def qname(name):
        return '{' + name if '}' in name else name

    def start(name, attrs):
        attrib = {qname(attrs[i]): attrs[i + 1] for i in range(0, len(attrs), 2)}
        elem = builder.start(qname(name), attrib)
        begin = p.CurrentByteIndex
        open_stack.append((elem, begin, _tag_end(data, begin)))

    def end(name):
        elem = builder.end(qname(name))
        _, begin, tag_end = open_stack.pop()
        idx = p.CurrentByteIndex
        if idx == tag_end and data[tag_end - 2:tag_end] == b'/>':
            stop = idx
        else:
            stop = _tag_end(data, idx)
        spans[id(elem)] = (begin, stop)

    def refuse_entity(*args):
        raise _Reject('entity declarations are not supported')

    def skipped(name, is_param):
        raise _Reject(f'undefined entity {name!r}')

    p.StartElementHandler = start
    p.EndElementHandler = end
    p.CharacterDataHandler = builder.data
    p.EntityDeclHandler = refuse_entity
    p.UnparsedEntityDeclHandler = refuse_entity
    p.SkippedEntityHandler = skipped
    try:
        p.Parse(data, True)
    except expat.ExpatError as exc:
        raise MalformedXml(Finding(ERROR, 'MALFORMED_XML', 'document[1]',
                                   f'line {exc.lineno}, column {exc.offset}: '
                                   f'{expat.ErrorString(exc.code)}')) from None
    except (_Reject, ValueError, UnicodeError, LookupError) as exc:  # LookupError: bad encoding name
        raise MalformedXml(Finding(ERROR, 'MALFORMED_XML', 'document[1]', str(exc))) from None
    root = builder.close()
    return XmlDocument(root, data, spans)


def local(tag) -> str:
    if not isinstance(tag, str):
        return ''
    return tag.rsplit('}', 1)[-1] if tag.startswith('{') else tag


def namespace(tag) -> Optional[str]:
    if isinstance(tag, str) and tag.startswith('{'):
        return tag[1:].split('}', 1)[0]
    return None


def attr_name(key: str) -> str:
    """Clark-notation attribute name to the ``xml:``-prefixed form."""
    if key.startswith('{' + XML_NS + '}'):
        return 'xml:' + key.rsplit('}', 1)[1]
    return key


def clark_name(name: str) -> str:
    if name.startswith('xml:'):
        return f'{{{XML_NS}}}{name[4:]}'
    return name


def attrs_by_local(elem: ET.Element) -> Dict[str, str]:
    """Attributes keyed by ``xml:x`` or local name, ignoring other namespaces."""
    out = {}
    for k, v in elem.attrib.items():
        name = attr_name(k)
        if name.startswith('{'):
            name = name.rsplit('}', 1)[1]
        out[name] = v
    return out


def element_path(parent_path: str, counts: Dict[str, int], elem: ET.Element) -> str:
    name = local(elem.tag) or 'node'
    counts[name] = counts.get(name, 0) + 1
    step = f'{name}[{counts[name]}]'
    return f'{parent_path}/{step}' if parent_path else step


def children(elem: ET.Element, path: str, position):
    """Yield (child, path, position) for each element child."""
    counts: Dict[str, int] = {}
    for i, child in enumerate(elem):
        if not isinstance(child.tag, str):
            continue
        yield child, element_path(path, counts, child), tuple(position) + (i,)


def has_element_children(elem: ET.Element) -> bool:
    return any(isinstance(c.tag, str) for c in elem)


def flat_text(elem: ET.Element) -> str:
    return ''.join(elem.itertext())


_PLACEHOLDER = '__lexmodel_opaque__'


def placeholder(parent: ET.Element, index: int) -> ET.Element:
    return ET.SubElement(parent, _PLACEHOLDER, {'i': str(index)})


def serialize(root: ET.Element, opaque: List[str] = ()) -> bytes:
    """Canonical output: declaration, two-space indent, UTF-8.

    Placeholders created with :func:`placeholder` are replaced by the
    matching raw text from ``opaque``.
    """
    ET.indent(root, space='  ')
    text = ET.tostring(root, encoding='unicode', short_empty_elements=True)
    for i, raw in enumerate(opaque):
        text = text.replace(f'<{_PLACEHOLDER} i="{i}" />', raw, 1)
    return ('<?xml version="1.0" encoding="UTF-8"?>\n' + text + '\n').encode('utf-8')

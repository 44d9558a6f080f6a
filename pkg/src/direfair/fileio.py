"""Election file format (v1) and result serialization.

The format is a line-oriented text document:

    dire-election v1
    [meta]
    candidates = 8
    voters = 19
    k = 4
    [candidate-attributes]
    gender: M = 0,1,4,5; F = 2,3,6,7
    [voter-attributes]
    state: CA = 0-9; IL = 10-18
    [rankings]
    0: 0,1,2,3,5,4,7,6
    [diversity]
    gender/M >= 2
    [representation]
    state/CA >= 2
    [population-committees]
    state/CA = 0,1,2,3

Ids are 0-based integers; "a-b" denotes the inclusive range. The
[population-committees] section is optional and overrides computed winning
committees. parse_election round-trips serialize_election losslessly.
"""

from __future__ import annotations

from fractions import Fraction

from .constraints import ConstraintSet
from .core import Attribute, Election, validate_election


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_id_list(text: str, line_no: int) -> list[int]:
    ids = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(line_no, "empty id entry")
        if "-" in chunk:
            lo, _, hi = chunk.partition("-")
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise ParseError(line_no, f"bad id range {chunk!r}")
            if hi < lo:
                raise ParseError(line_no, f"descending id range {chunk!r}")
            ids.extend(range(lo, hi + 1))
        else:
            try:
                ids.append(int(chunk))
            except ValueError:
                raise ParseError(line_no, f"bad id {chunk!r}")
    return ids


def _parse_attribute_line(line: str, line_no: int) -> Attribute:
    name, sep, rest = line.partition(":")
    if not sep:
        raise ParseError(line_no, "expected 'name: label = ids; ...'")
    parts = []
    for piece in rest.split(";"):
        label, sep, ids = piece.partition("=")
        if not sep:
            raise ParseError(line_no, f"expected 'label = ids' in {piece.strip()!r}")
        parts.append((label.strip(), frozenset(_parse_id_list(ids, line_no))))
    return Attribute(name.strip(), tuple(parts))


def _parse_constraint_line(line: str, line_no: int):
    lhs, sep, bound = line.partition(">=")
    if not sep:
        raise ParseError(line_no, "expected 'attr/label >= bound'")
    attr, sep, label = lhs.partition("/")
    if not sep:
        raise ParseError(line_no, "expected 'attr/label' on the left-hand side")
    try:
        bound = int(bound)
    except ValueError:
        raise ParseError(line_no, f"bad bound {bound.strip()!r}")
    return (attr.strip(), label.strip()), bound


def parse_election(text: str, validate: bool = True):
    """Parse a v1 election document into (Election, ConstraintSet, meta dict).

    Raises ParseError with a line number for malformed input; when
    ``validate`` is set, invariant violations raise ValueError listing them.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != "dire-election v1":
        raise ParseError(1, "missing 'dire-election v1' header (empty file or wrong format)")

    section = None
    meta = {}
    candidate_attrs, voter_attrs = [], []
    rankings = {}
    diversity, representation, committees = {}, {}, {}

    for line_no, raw in enumerate(lines[1:], start=2):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            if section not in ("meta", "candidate-attributes", "voter-attributes",
                               "rankings", "diversity", "representation",
                               "population-committees"):
                raise ParseError(line_no, f"unknown section {section!r}")
            continue
        if section is None:
            raise ParseError(line_no, "content before the first section")
        if section == "meta":
            key, sep, value = line.partition("=")
            if not sep:
                raise ParseError(line_no, "expected 'key = value'")
            try:
                meta[key.strip()] = int(value)
            except ValueError:
                raise ParseError(line_no, f"bad meta value {value.strip()!r}")
        elif section == "candidate-attributes":
            candidate_attrs.append(_parse_attribute_line(line, line_no))
        elif section == "voter-attributes":
            voter_attrs.append(_parse_attribute_line(line, line_no))
        elif section == "rankings":
            voter, sep, ranking = line.partition(":")
            if not sep:
                raise ParseError(line_no, "expected 'voter: ranking'")
            try:
                voter = int(voter)
            except ValueError:
                raise ParseError(line_no, f"bad voter id {voter.strip()!r}")
            ids = _parse_id_list(ranking, line_no)
            dupes = {c for c in ids if ids.count(c) > 1}
            if dupes:
                raise ParseError(
                    line_no, f"voter {voter}: duplicate candidate(s) {sorted(dupes)} in ranking")
            if voter in rankings:
                raise ParseError(line_no, f"voter {voter} ranked twice")
            rankings[voter] = tuple(ids)
        elif section in ("diversity", "representation"):
            key, bound = _parse_constraint_line(line, line_no)
            (diversity if section == "diversity" else representation)[key] = bound
        else:  # population-committees
            lhs, sep, ids = line.partition("=")
            if not sep:
                raise ParseError(line_no, "expected 'attr/label = ids'")
            attr, sep, label = lhs.partition("/")
            if not sep:
                raise ParseError(line_no, "expected 'attr/label' on the left-hand side")
            committees[(attr.strip(), label.strip())] = frozenset(_parse_id_list(ids, line_no))

    # k is optional in the file; callers may supply the committee size
    for key in ("candidates", "voters"):
        if key not in meta:
            raise ParseError(len(lines), f"missing meta entry {key!r} (or missing meta section)")
    n = meta["voters"]
    if sorted(rankings) != list(range(n)):
        raise ParseError(len(lines), f"expected rankings for voters 0..{n - 1}")

    election = Election(meta["candidates"], [rankings[v] for v in range(n)],
                        tuple(candidate_attrs), tuple(voter_attrs))
    if validate:
        problems = validate_election(election)
        if problems:
            raise ValueError("invalid election: " + "; ".join(problems))
    cs = ConstraintSet(diversity, representation, committees)
    return election, cs, meta


def serialize_election(election: Election, cs: ConstraintSet | None = None,
                       k: int | None = None) -> str:
    out = ["dire-election v1", "[meta]",
           f"candidates = {election.num_candidates}",
           f"voters = {election.num_voters}"]
    if k is not None:
        out.append(f"k = {k}")
    if election.candidate_attributes:
        out.append("[candidate-attributes]")
        for attr in election.candidate_attributes:
            parts = "; ".join(f"{label} = {_format_ids(ids)}" for label, ids in attr.parts)
            out.append(f"{attr.name}: {parts}")
    if election.voter_attributes:
        out.append("[voter-attributes]")
        for attr in election.voter_attributes:
            parts = "; ".join(f"{label} = {_format_ids(ids)}" for label, ids in attr.parts)
            out.append(f"{attr.name}: {parts}")
    out.append("[rankings]")
    for v, ranking in enumerate(election.rankings):
        out.append(f"{v}: " + ",".join(map(str, ranking)))
    if cs is not None:
        if cs.diversity:
            out.append("[diversity]")
            for (attr, label), bound in sorted(cs.diversity.items()):
                out.append(f"{attr}/{label} >= {bound}")
        if cs.representation:
            out.append("[representation]")
            for (attr, label), bound in sorted(cs.representation.items()):
                out.append(f"{attr}/{label} >= {bound}")
        if cs.population_committees:
            out.append("[population-committees]")
            for (attr, label), members in sorted(cs.population_committees.items()):
                out.append(f"{attr}/{label} = " + ",".join(map(str, sorted(members))))
    return "\n".join(out) + "\n"


def _format_ids(ids) -> str:
    """Compact id list: collapses runs of consecutive ids into 'a-b'."""
    ids = sorted(ids)
    chunks = []
    start = prev = ids[0]
    for c in ids[1:] + [None]:
        if c is not None and c == prev + 1:
            prev = c
            continue
        chunks.append(str(start) if start == prev else f"{start}-{prev}")
        if c is not None:
            start = prev = c
    return ",".join(chunks)


def format_fraction(value: Fraction) -> str:
    """Exact 'p/q' plus a 6-decimal rendering."""
    return f"{value.numerator}/{value.denominator} ({float(value):.6f})"


CSV_HEADER = ("value,instance,feasible,ef_exists,score_ef,score_dire,"
              "ratio_num,ratio_den,prop_envious_num,prop_envious_den,simpsons_flag")


def experiment_rows_to_csv(rows) -> str:
    """Fixed-schema CSV for experiment rows; exact rationals as two columns."""
    lines = [CSV_HEADER]
    for r in rows:
        ratio = r.utility_ratio
        envy = r.proportion_envious
        lines.append(",".join([
            str(r.value), str(r.instance),
            str(int(r.feasible)), str(int(r.envyfree_exists)),
            "" if r.envyfree_score is None else str(r.envyfree_score),
            "" if r.dire_score is None else str(r.dire_score),
            "" if ratio is None else str(ratio.numerator),
            "" if ratio is None else str(ratio.denominator),
            "" if envy is None else str(envy.numerator),
            "" if envy is None else str(envy.denominator),
            str(int(r.simpsons_flag)),
        ]))
    return "\n".join(lines) + "\n"

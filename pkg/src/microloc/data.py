"""Dataset model and loader.

A dataset is one JSON document carrying the whole case study: the orbit poset
with component groups, the two duality maps, pinned Kazhdan-Lusztig
evaluations, the representation catalog, and the small amount of side data
the verification procedures need (special piece, parameter list, b-function
roots).  Loading is schema-shape checking only; semantic invariants live in
validate_dataset so that broken data can be reported rather than thrown.

Local systems are plain (orbit_id, irrep_label) tuples throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .poset import OrbitPoset, Violation, validate_poset

SCHEMA_VERSION = 1


class SchemaError(Exception):
    """The file does not have the documented shape."""


@dataclass(frozen=True)
class ComponentGroup:
    name: str
    irreps: tuple          # of (label, dim) pairs, in declared order

    def labels(self):
        return [lab for lab, _ in self.irreps]

    def irrep_dim(self, label):
        for lab, d in self.irreps:
            if lab == label:
                return d
        raise KeyError(f"no irrep {label!r} in group {self.name}")


@dataclass(frozen=True)
class Orbit:
    id: str
    dim: int
    group: ComponentGroup


@dataclass(frozen=True)
class Representation:
    id: str
    param: tuple           # LocalSystem
    az_partner: str
    iwahori_spherical: bool
    unitary: bool


@dataclass(frozen=True)
class ArthurParameter:
    label: str
    langlands: str         # orbit id; the dual orbit is hat(langlands)


@dataclass(frozen=True)
class KLRecord:
    """One pinned evaluation P(1).

    target_irrep None means the record pins the dimension-weighted sum over
    the target orbit's irreps instead of a single entry.  value 0 with
    target_irrep None pins every per-irrep entry to 0, values being
    nonnegative.
    """
    target_orbit: str
    target_irrep: str | None
    source: tuple
    value: int
    provenance: str        # "transcribed" | "reconstructed"
    note: str = ""


@dataclass
class KLTable:
    records: list

    def __post_init__(self):
        self._per = {}
        self._sum = {}
        for r in self.records:
            if r.target_irrep is None:
                self._sum[(r.target_orbit, r.source)] = r
            else:
                self._per[(r.target_orbit, r.target_irrep, r.source)] = r

    def per_irrep_record(self, target_ls, source):
        return self._per.get((target_ls[0], target_ls[1], source))

    def sum_record(self, target_orbit, source):
        return self._sum.get((target_orbit, source))


@dataclass
class DualityData:
    hat_pairs: list        # of (orbit, orbit)
    fourier_pairs: list    # of (LocalSystem, LocalSystem)

    def __post_init__(self):
        self.hat_map = {}
        for a, b in self.hat_pairs:
            self.hat_map[a] = b
            self.hat_map[b] = a
        self.fourier_map = {}
        for a, b in self.fourier_pairs:
            self.fourier_map[tuple(a)] = tuple(b)
            self.fourier_map[tuple(b)] = tuple(a)


@dataclass
class Dataset:
    name: str
    schema_version: int
    ambient_dim: int
    orbits: list
    poset: OrbitPoset
    duality: DualityData
    kl: KLTable
    catalog: list
    special_piece: list
    arthur_type: list
    conormal_dense_exceptions: list
    b_function: list
    notes: list = field(default_factory=list)
    # the diagonal normalization c(S,S) = (-1)^dim(S); switchable per dataset
    diagonal_rule: bool = True

    def __post_init__(self):
        self._orbit = {o.id: o for o in self.orbits}
        self._rep = {r.id: r for r in self.catalog}
        self._rep_by_param = {r.param: r for r in self.catalog}

    def orbit(self, oid):
        try:
            return self._orbit[oid]
        except KeyError:
            raise KeyError(f"unknown orbit id {oid!r}") from None

    def local_systems(self):
        """All (orbit, irrep) pairs, orbit order then declared irrep order."""
        out = []
        for o in self.orbits:
            for lab, _ in o.group.irreps:
                out.append((o.id, lab))
        return out

    def ls_dim(self, ls):
        return self.orbit(ls[0]).group.irrep_dim(ls[1])

    def representation(self, rid):
        try:
            return self._rep[rid]
        except KeyError:
            raise KeyError(f"unknown representation id {rid!r}") from None

    def representation_of(self, ls):
        try:
            return self._rep_by_param[tuple(ls)]
        except KeyError:
            raise KeyError(f"no representation with parameter {ls}") from None


# ---------------------------------------------------------------- loading

def _need(obj, key, where):
    if key not in obj:
        raise SchemaError(f"missing key {key!r} in {where}")
    return obj[key]


def _ls(raw, where):
    if not (isinstance(raw, (list, tuple)) and len(raw) == 2
            and all(isinstance(x, str) for x in raw)):
        raise SchemaError(f"{where}: local system must be [orbit, irrep], got {raw!r}")
    return (raw[0], raw[1])


def loads_dataset(doc):
    """Build a Dataset from a parsed JSON document (shape checks only)."""
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    version = _need(doc, "schema_version", "document")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema_version {version!r} unsupported (expected {SCHEMA_VERSION})")

    orbits = []
    for raw in _need(doc, "orbits", "document"):
        gr = _need(raw, "group", f"orbit {raw.get('id')}")
        irreps = []
        for item in _need(gr, "irreps", "group"):
            lab, dim = item[0], item[1]
            if not isinstance(lab, str) or not isinstance(dim, int) or dim < 1:
                raise SchemaError(f"bad irrep entry {item!r} on orbit {raw.get('id')}")
            irreps.append((lab, dim))
        if len({lab for lab, _ in irreps}) != len(irreps):
            raise SchemaError(f"duplicate irrep label on orbit {raw.get('id')}")
        orbits.append(Orbit(
            id=_need(raw, "id", "orbit"),
            dim=_need(raw, "dim", "orbit"),
            group=ComponentGroup(_need(gr, "name", "group"), tuple(irreps)),
        ))
    orbit_ids = {o.id for o in orbits}
    if len(orbit_ids) != len(orbits):
        raise SchemaError("duplicate orbit ids")

    covers = []
    for raw in _need(doc, "covers", "document"):
        a, b = raw[0], raw[1]
        for x in (a, b):
            if x not in orbit_ids:
                raise SchemaError(f"cover references unknown orbit {x!r}")
        covers.append((a, b))

    poset = OrbitPoset(
        [o.id for o in orbits], {o.id: o.dim for o in orbits}, covers,
        ambient_dim=_need(doc, "ambient_dim", "document"))

    groups = {o.id: o.group for o in orbits}

    def check_ls(ls, where):
        if ls[0] not in orbit_ids:
            raise SchemaError(f"{where}: unknown orbit {ls[0]!r}")
        if ls[1] not in groups[ls[0]].labels():
            raise SchemaError(f"{where}: unknown irrep {ls[1]!r} on orbit {ls[0]}")
        return ls

    dual = _need(doc, "duality", "document")
    hat_pairs = [(p[0], p[1]) for p in _need(dual, "hat", "duality")]
    for a, b in hat_pairs:
        for x in (a, b):
            if x not in orbit_ids:
                raise SchemaError(f"hat pair references unknown orbit {x!r}")
    fourier_pairs = []
    for p in _need(dual, "fourier", "duality"):
        fourier_pairs.append((
            check_ls(_ls(p[0], "fourier"), "fourier"),
            check_ls(_ls(p[1], "fourier"), "fourier")))

    records = []
    for raw in _need(doc, "kl", "document"):
        tgt = _need(raw, "target", "kl record")
        if not (isinstance(tgt, (list, tuple)) and len(tgt) == 2):
            raise SchemaError(f"kl target must be [orbit, irrep-or-null], got {tgt!r}")
        torb, tirr = tgt[0], tgt[1]
        if torb not in orbit_ids:
            raise SchemaError(f"kl target orbit {torb!r} unknown")
        if tirr is not None and tirr not in groups[torb].labels():
            raise SchemaError(f"kl target irrep {tirr!r} unknown on {torb}")
        source = check_ls(_ls(_need(raw, "source", "kl record"), "kl source"), "kl source")
        value = _need(raw, "value", "kl record")
        if not isinstance(value, int) or value < 0:
            raise SchemaError(f"kl value must be a nonnegative integer, got {value!r}")
        prov = _need(raw, "provenance", "kl record")
        if prov not in ("transcribed", "reconstructed"):
            raise SchemaError(f"unknown provenance {prov!r}")
        records.append(KLRecord(torb, tirr, source, value, prov, raw.get("note", "")))

    catalog = []
    for raw in _need(doc, "catalog", "document"):
        catalog.append(Representation(
            id=_need(raw, "id", "catalog entry"),
            param=check_ls(_ls(_need(raw, "param", "catalog entry"), "catalog"), "catalog"),
            az_partner=_need(raw, "az", "catalog entry"),
            iwahori_spherical=bool(_need(raw, "iwahori_spherical", "catalog entry")),
            unitary=bool(_need(raw, "unitary", "catalog entry")),
        ))

    special = list(_need(doc, "special_piece", "document"))
    for x in special:
        if x not in orbit_ids:
            raise SchemaError(f"special_piece references unknown orbit {x!r}")

    arthur = []
    for raw in _need(doc, "arthur_type", "document"):
        lang = _need(raw, "langlands", "arthur_type entry")
        if lang not in orbit_ids:
            raise SchemaError(f"arthur_type references unknown orbit {lang!r}")
        arthur.append(ArthurParameter(_need(raw, "label", "arthur_type entry"), lang))

    exceptions = list(doc.get("conormal_dense_exceptions", []))
    for x in exceptions:
        if x not in orbit_ids:
            raise SchemaError(f"conormal_dense_exceptions references unknown orbit {x!r}")

    roots = []
    for raw in _need(doc, "b_function", "document"):
        try:
            roots.append(Fraction(raw))
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"bad b-function root {raw!r}: {e}") from None

    return Dataset(
        name=_need(doc, "name", "document"),
        schema_version=version,
        ambient_dim=doc["ambient_dim"],
        orbits=orbits,
        poset=poset,
        duality=DualityData(hat_pairs, fourier_pairs),
        kl=KLTable(records),
        catalog=catalog,
        special_piece=special,
        arthur_type=arthur,
        conormal_dense_exceptions=exceptions,
        b_function=roots,
        notes=list(doc.get("notes", [])),
        diagonal_rule=bool(doc.get("diagonal_rule", True)),
    )


def load_dataset(path):
    """Parse a dataset file.

    Raises SchemaError for malformed documents and OSError for unreadable
    paths.  No semantic validation happens here; run validate_dataset on the
    result.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError(f"not valid JSON: {e}") from None
    return loads_dataset(doc)


def bundled_dataset_path():
    """Filesystem path of the F4(a3) case data shipped with the package."""
    return resources.files(__package__).joinpath("data", "f4a3.json")


def load_bundled_dataset():
    with resources.as_file(bundled_dataset_path()) as p:
        return load_dataset(p)


# ---------------------------------------------------------------- validation

def validate_dataset(ds):
    """Collect structural violations; empty list means the dataset is sound.

    Pure and idempotent.  Covers the poset axioms, the catalog bijections,
    KL normalization and support, and delegates the duality laws to
    validate_duality.
    """
    from .duality import validate_duality

    out = list(validate_poset(ds.poset))

    all_ls = ds.local_systems()
    params = [r.param for r in ds.catalog]
    if len(set(params)) != len(params):
        out.append(Violation("param-not-injective", "two catalog entries share a parameter"))
    missing = set(all_ls) - set(params)
    if missing:
        out.append(Violation(
            "param-not-onto",
            f"local systems without a representation: {sorted(missing)}"))
    ids = {r.id for r in ds.catalog}
    for r in ds.catalog:
        if r.az_partner not in ids:
            out.append(Violation(
                "az-unknown-id", f"az partner {r.az_partner} of {r.id} not in catalog",
                (r.id,)))
        elif ds.representation(r.az_partner).az_partner != r.id:
            out.append(Violation(
                "az-not-involutive",
                f"az not involutive / not bijective at {r.id} "
                f"(az(az({r.id})) = {ds.representation(r.az_partner).az_partner})",
                (r.id,)))

    for rec in ds.kl.records:
        src_orb = rec.source[0]
        if rec.target_orbit == src_orb:
            out.append(Violation(
                "kl-same-orbit",
                f"kl record with target orbit equal to source orbit {src_orb}; "
                "same-orbit values are fixed by normalization and must not be stored",
                (src_orb,)))
        elif not ds.poset.leq(rec.target_orbit, src_orb):
            out.append(Violation(
                "kl-support",
                f"kl record at target {rec.target_orbit} outside the closure "
                f"of source orbit {src_orb}", (rec.target_orbit, src_orb)))
    # stored per-irrep values must fit under any stored orbit-level sum,
    # and a complete per-irrep set must reproduce the sum exactly
    for (torb, source), sum_rec in ds.kl._sum.items():
        group = ds.orbit(torb).group
        vals = [ds.kl.per_irrep_record((torb, lab), source) for lab in group.labels()]
        for lab, v in zip(group.labels(), vals):
            if v is not None and group.irrep_dim(lab) * v.value > sum_rec.value:
                out.append(Violation(
                    "kl-exceeds-sum",
                    f"per-irrep value {v.value} at ({torb},{lab}) <- {source} "
                    f"exceeds the stored orbit sum {sum_rec.value}",
                    (torb, lab) + source))
        if all(v is not None for v in vals):
            total = sum(group.irrep_dim(lab) * v.value
                        for lab, v in zip(group.labels(), vals))
            if total != sum_rec.value:
                out.append(Violation(
                    "kl-sum-mismatch",
                    f"stored sum {sum_rec.value} at ({torb} <- {source}) "
                    f"disagrees with per-irrep total {total}", (torb,) + source))

    for x in ds.special_piece:
        if x not in ds.poset:
            out.append(Violation("special-unknown", f"unknown orbit {x} in special_piece"))
    hats = ds.duality.hat_map
    for p in ds.arthur_type:
        if p.langlands not in hats:
            out.append(Violation(
                "arthur-no-hat", f"parameter {p.label}: orbit {p.langlands} has no hat image",
                (p.label,)))

    out.extend(validate_duality(ds))
    return out

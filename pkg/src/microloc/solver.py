"""Exact parametric solver for index coefficients and characteristic cycles.

The pipeline runs in three stages.  build_constraints assembles one sparse
linear system over two families of unknowns:

  ("m", source, anchor)   cycle multiplicity of the anchor conormal in the
                          cycle of the source's sheaf,
  ("c", a, b)             index-matrix entries, one per comparable orbit pair.

The generating rules, tagged on every equation:

  expansion   m[src, anchor] = sum over U in [anchor, src-orbit] of
              c(anchor, U) * chi_loc(src, U); skipped (and reported) when a
              chi_loc cell is UNKNOWN, never guessed.
  support     m[src, anchor] = 0 when the anchor is not below the source.
  leading     m[src, src-orbit] = rank of the source local system.
  symmetry    m[src, anchor] = m[fourier(src), hat(anchor)].
  diagonal    c(S, S) = (-1)^dim(S)  (dataset can switch this rule off).

solve runs deterministic exact Gaussian elimination over the rationals with a
fixed variable order (m-variables first, then c-variables by falling row
dimension), so the same dataset always yields the same pivots, the same free
parameters, and the same names.  Whatever stays free becomes a named
parameter; every downstream quantity is an AffineInt over those names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .affine import AffineInt, ZERO
from .duality import fourier_partner, hat
from .euler import UNKNOWN, InsufficientKLData, geometric_multiplicity_matrix, \
    composition_multiplicity, composition_terms


class InconsistentSystem(Exception):
    def __init__(self, tags):
        self.tags = list(tags)
        lines = ", ".join(_tag_text(t) for t in self.tags)
        super().__init__(f"inconsistent system; minimal conflicting subset: {lines}")


class MultiParameterMultiplicity(Exception):
    """Bound derivation is limited to single-parameter affine forms."""

    def __init__(self, entries):
        self.entries = entries
        super().__init__(f"multi-parameter multiplicity at {entries}")


class ComputationError(Exception):
    pass


def _tag_text(tag):
    kind, *rest = tag
    return f"{kind}({', '.join(str(x) for x in rest)})"


@dataclass(frozen=True)
class Equation:
    coeffs: tuple          # of (var, Fraction), deterministic order
    rhs: Fraction
    tag: tuple


@dataclass(frozen=True)
class SkippedExpansion:
    anchor: str
    source: tuple
    missing: tuple         # of (target_orbit, source) chi_loc cells


@dataclass
class ConstraintSystem:
    dataset: object
    unknowns: list
    equations: list
    skipped: list


@dataclass
class CMatrix:
    entries: dict          # (a, b) -> AffineInt, comparable pairs only

    def entry(self, a, b):
        return self.entries.get((a, b), ZERO)


@dataclass
class CharacteristicCycle:
    source: tuple
    mult: dict             # orbit -> AffineInt, nonzero entries only

    def at(self, orbit):
        return self.mult.get(orbit, ZERO)


@dataclass
class Bound:
    parameter: str
    lower: int | None
    upper: int | None
    tight_lower_witnesses: list = field(default_factory=list)
    tight_upper_witnesses: list = field(default_factory=list)

    @property
    def feasible(self):
        return self.lower is None or self.upper is None or self.lower <= self.upper


@dataclass
class SolveReport:
    dataset: object
    cmatrix: CMatrix
    cc_table: dict         # source ls -> CharacteristicCycle, theorem row order
    free_parameters: list
    residual_unknowns: list
    skipped: list
    bounds: list | None
    bound_note: str = ""
    equation_count: int = 0


# ---------------------------------------------------------------- stage 1

def _cvar_key(pair, dims):
    a, b = pair
    return (-dims[a], a, dims[b], b)


def build_constraints(ds, em):
    """Assemble the full rule system against a (possibly partial) chi_loc matrix."""
    poset = ds.poset
    sources = ds.local_systems()
    anchors = [o.id for o in ds.orbits]
    dims = {o.id: o.dim for o in ds.orbits}

    mvars = [("m", src, t) for src in sources for t in anchors]
    cpairs = sorted(
        ((a, b) for a in anchors for b in anchors if poset.leq(a, b)),
        key=lambda p: _cvar_key(p, dims))
    cvars = [("c",) + p for p in cpairs]

    eqs = []
    skipped = []
    for src in sources:
        s_orb = src[0]
        for t in anchors:
            mv = ("m", src, t)
            if not poset.leq(t, s_orb):
                eqs.append(Equation(((mv, Fraction(1)),), Fraction(0), ("support", src, t)))
                continue
            if t == s_orb:
                eqs.append(Equation(
                    ((mv, Fraction(1)),), Fraction(ds.ls_dim(src)), ("leading", src)))
            interval = poset.interval(t, s_orb)
            evals = {u: em.value(src, u) for u in interval}
            if any(v is UNKNOWN for v in evals.values()):
                missing = tuple((u, src) for u in interval if evals[u] is UNKNOWN)
                skipped.append(SkippedExpansion(t, src, missing))
                continue
            coeffs = [(mv, Fraction(-1))]
            for u in interval:
                if evals[u]:
                    coeffs.append((("c", t, u), Fraction(evals[u])))
            eqs.append(Equation(tuple(coeffs), Fraction(0), ("expansion", src, t)))

    for src in sources:
        fsrc = fourier_partner(ds.duality, src)
        for t in anchors:
            a = ("m", src, t)
            b = ("m", fsrc, hat(ds.duality, t))
            if a == b:
                continue
            eqs.append(Equation(
                ((a, Fraction(1)), (b, Fraction(-1))), Fraction(0), ("symmetry", src, t)))

    if getattr(ds, "diagonal_rule", True):
        for o in ds.orbits:
            eqs.append(Equation(
                ((("c", o.id, o.id), Fraction(1)),), Fraction((-1) ** o.dim),
                ("diagonal", o.id)))

    return ConstraintSystem(ds, mvars + cvars, eqs, skipped)


# ---------------------------------------------------------------- stage 2

def _eliminate(equations, var_order):
    """Sparse RREF.  Returns (pivots, rows, rhss, conflict_row_or_None, comb).

    pivots maps variable -> row index; each returned row is fully reduced
    (no pivot variable of another row appears in it).  comb[i] is the set of
    input equation indices combined into working row i.
    """
    rows = [dict(eq.coeffs) for eq in equations]
    rhss = [eq.rhs for eq in equations]
    comb = [{i} for i in range(len(rows))]
    pivots = {}
    used = set()
    for v in var_order:
        cand = [i for i in range(len(rows)) if i not in used and rows[i].get(v)]
        if not cand:
            continue
        i = min(cand, key=lambda j: (len(rows[j]), j))
        piv = rows[i][v]
        rows[i] = {k: val / piv for k, val in rows[i].items()}
        rhss[i] /= piv
        for j in range(len(rows)):
            if j == i:
                continue
            f = rows[j].get(v)
            if not f:
                continue
            for k, val in rows[i].items():
                nv = rows[j].get(k, Fraction(0)) - f * val
                if nv:
                    rows[j][k] = nv
                else:
                    rows[j].pop(k, None)
            rhss[j] -= f * rhss[i]
            comb[j] |= comb[i]
        pivots[v] = i
        used.add(i)
    conflict = None
    for i in range(len(rows)):
        if i not in used and not rows[i] and rhss[i] != 0:
            conflict = i
            break
    return pivots, rows, rhss, conflict, comb


def _minimal_conflict(equations, suspects, var_order):
    """Greedy drop-one reduction of a conflicting equation subset."""
    current = sorted(suspects)
    for i in list(current):
        trial = [j for j in current if j != i]
        _, _, _, conflict, _ = _eliminate([equations[j] for j in trial], var_order)
        if conflict is not None:
            current = trial
    return current


def solve(cs):
    """Eliminate, name whatever stays free, and assemble the report.

    Free c-variables are named p_<row>_<col>.  One of them gets the short
    name "c": the pair (E, top) where E is the dataset's single orbit whose
    conormal carries no dense orbit, matching the designation the bundled
    case fixes.  Free m-variables (possible with sparse duality data) are
    named q_<anchor>_<orbit>_<irrep>.
    """
    ds = cs.dataset
    pivots, rows, rhss, conflict, comb = _eliminate(cs.equations, cs.unknowns)
    if conflict is not None:
        subset = _minimal_conflict(cs.equations, comb[conflict], cs.unknowns)
        raise InconsistentSystem([cs.equations[i].tag for i in subset])

    top = ds.poset.top()
    short_pair = None
    if len(ds.conormal_dense_exceptions) == 1:
        short_pair = ("c", ds.conormal_dense_exceptions[0], top)

    names = {}
    for v in cs.unknowns:
        if v in pivots:
            continue
        if v[0] == "c":
            names[v] = "c" if v == short_pair else f"p_{v[1]}_{v[2]}"
        else:
            names[v] = f"q_{v[2]}_{v[1][0]}_{v[1][1]}"

    def expression(v):
        if v not in pivots:
            return AffineInt.parameter(names[v])
        i = pivots[v]
        out = AffineInt(rhss[i])
        for k, val in rows[i].items():
            if k == v:
                continue
            # fully reduced rows only mention free variables besides the pivot
            out = out + AffineInt.parameter(names[k], -val)
        return out

    dims = {o.id: o.dim for o in ds.orbits}
    centries = {}
    residual = []
    for v in cs.unknowns:
        if v[0] == "c":
            pair = (v[1], v[2])
            e = expression(v)
            centries[pair] = e
            if not e.is_constant():
                residual.append(pair)
    residual.sort(key=lambda p: _cvar_key(p, dims))

    cc_table = {}
    for src in ds.local_systems():
        mult = {}
        for o in ds.orbits:
            e = expression(("m", src, o.id))
            if e:
                mult[o.id] = e
        cc_table[src] = CharacteristicCycle(src, mult)

    params = sorted({n for v, n in names.items()},
                    key=lambda n: (n != "c", n.startswith("q_"), n))
    report = SolveReport(
        dataset=ds,
        cmatrix=CMatrix(centries),
        cc_table=cc_table,
        free_parameters=params,
        residual_unknowns=residual,
        skipped=list(cs.skipped),
        bounds=None,
        equation_count=len(cs.equations),
    )
    try:
        report.bounds = parameter_bounds(report)
    except MultiParameterMultiplicity as e:
        report.bounds = None
        report.bound_note = str(e)
    return report


# ---------------------------------------------------------------- stage 3

def characteristic_cycle(sr, ls):
    ls = tuple(ls)
    try:
        return sr.cc_table[ls]
    except KeyError:
        raise KeyError(f"unknown local system {ls}") from None


def parameter_bounds(sr):
    """Tightest integer bounds forced by nonnegativity of cycle multiplicities.

    Every multiplicity a + b*p with b != 0 forces p >= ceil(-a/b) or
    p <= floor(-a/b) depending on the sign of b.  Multiplicities involving
    two or more parameters are outside this rule and raise.
    """
    multi = []
    per_param = {}
    for src, cc in sr.cc_table.items():
        for orbit, v in cc.mult.items():
            if not v.coeffs:
                continue
            if len(v.coeffs) > 1:
                multi.append((src, orbit, sorted(v.coeffs)))
                continue
            (name, b), = v.coeffs.items()
            a = v.constant
            root = -a / b
            box = per_param.setdefault(name, {"lo": [], "hi": []})
            if b > 0:
                lo = -(-root.numerator // root.denominator)  # ceil
                box["lo"].append((lo, (src, orbit)))
            else:
                hi = root.numerator // root.denominator      # floor
                box["hi"].append((hi, (src, orbit)))
    if multi:
        raise MultiParameterMultiplicity(multi)
    out = []
    for name in sorted(per_param, key=lambda n: (n != "c", n)):
        box = per_param[name]
        lower = max((x for x, _ in box["lo"]), default=None)
        upper = min((x for x, _ in box["hi"]), default=None)
        out.append(Bound(
            parameter=name, lower=lower, upper=upper,
            tight_lower_witnesses=sorted(w for x, w in box["lo"] if x == lower),
            tight_upper_witnesses=sorted(w for x, w in box["hi"] if x == upper),
        ))
    return out


def admissible_assignment(sr, assignment):
    """Check an integer parameter assignment against the derived bounds.

    Returns a list of complaint strings; empty means admissible.  Parameters
    without bounds accept any integer.
    """
    out = []
    known = set(sr.free_parameters)
    for name, value in assignment.items():
        if name not in known:
            out.append(f"unknown parameter {name!r}")
    for b in sr.bounds or []:
        v = assignment.get(b.parameter)
        if v is None:
            continue
        if b.lower is not None and v < b.lower:
            out.append(f"{b.parameter} = {v} violates {b.parameter} >= {b.lower}")
        if b.upper is not None and v > b.upper:
            out.append(f"{b.parameter} = {v} violates {b.parameter} <= {b.upper}")
    return out


def reconstruct_local_euler(sr, published_cc):
    """Invert the index matrix against a cycle table, column by column.

    The inversion runs top-down inside each source's closure: the value at a
    target is the target's cycle multiplicity minus contributions of the
    strictly higher targets, divided by the diagonal entry.  Entries where a
    free parameter survives come back UNKNOWN and are listed in the result's
    failures mapping; this is the oracle that pins evaluation values no
    quoted source covers.
    """
    from .euler import EulerMatrix

    ds = sr.dataset
    dims = {o.id: o.dim for o in ds.orbits}
    all_orbits = [o.id for o in ds.orbits]
    entries = {}
    failures = {}
    sources = []
    for cc in published_cc:
        src = tuple(cc.source)
        sources.append(src)
        s_orb = src[0]
        below = sorted(ds.poset.down_set(s_orb), key=lambda o: (-dims[o], o))
        internal = {}
        for t in all_orbits:
            if not ds.poset.leq(t, s_orb):
                entries[(src, t)] = 0
        for t in below:
            diag = sr.cmatrix.entry(t, t)
            try:
                if not diag.is_constant() or diag.constant == 0:
                    raise ComputationError(
                        f"diagonal entry at {t} is {diag}, cannot invert")
                acc = ZERO + cc.at(t)
                for u in ds.poset.interval(t, s_orb):
                    if u == t:
                        continue
                    ev = internal.get(u)
                    if ev is None:
                        raise ComputationError(f"upstream failure at {u}")
                    acc = acc - sr.cmatrix.entry(t, u) * ev
                val = acc / diag.constant
            except (ComputationError, ValueError) as e:
                entries[(src, t)] = UNKNOWN
                failures[(src, t)] = str(e)
                internal[t] = None
                continue
            internal[t] = val
            if val.is_constant():
                entries[(src, t)] = int(val.constant)
            else:
                entries[(src, t)] = UNKNOWN
                failures[(src, t)] = \
                    f"parameter does not cancel: {', '.join(sorted(val.coeffs))}"
    return EulerMatrix(sources, all_orbits, entries, failures=failures)


def special_cc_localization(ds, sr):
    """Cycle of the open-orbit sign sheaf via the localization recipe.

    Multiplicity 1 on every conormal carrying a dense orbit; on each listed
    exception orbit the multiplicity starts as an unknown and is pinned by
    matching the cycle's decomposition against the multiplicity column of
    the standard sheaf attached to the open orbit's trivial local system.
    Coefficients at orbits outside the exceptions' up-sets cannot be
    cross-checked from a partial evaluation table and are not.
    """
    poset = ds.poset
    top = poset.top()
    exceptions = list(ds.conormal_dense_exceptions)
    top_group = ds.orbit(top).group
    triv = top_group.labels()[0]
    sign = top_group.labels()[-1]
    col = (top, triv)

    mm = geometric_multiplicity_matrix(ds)
    for e in exceptions:
        labels = ds.orbit(e).group.labels()
        if len(labels) != 1:
            raise ComputationError(
                f"exception orbit {e} carries {len(labels)} local systems; "
                "the pinning step needs exactly one")
        check = composition_multiplicity(mm, (e, labels[0]), col)
        if check != 0:
            raise ComputationError(
                f"composition check nonzero at ({e},{labels[0]}): {check}")

    aname = {e: ("a" if len(exceptions) == 1 else f"a_{e}") for e in exceptions}
    target = {}
    for o in ds.orbits:
        target[o.id] = AffineInt.parameter(aname[o.id]) if o.id in aname \
            else AffineInt(1)

    region = set()
    for e in exceptions:
        region |= poset.up_set(e)
    region.add(top)
    remainder = dict(target)
    try:
        for orb in sorted(region, key=lambda o: (-ds.orbit(o).dim, o)):
            for lab in ds.orbit(orb).group.labels():
                m = mm.mg((orb, lab), col)
                if m == 0:
                    continue
                for o2, v in sr.cc_table[(orb, lab)].mult.items():
                    remainder[o2] = remainder[o2] - m * v
    except InsufficientKLData as e:
        raise ComputationError(
            f"insufficient KL data for the localization check: {e.pairs}") from None

    solved = {}
    for e in exceptions:
        r = remainder[e]
        co = r.coeffs.get(aname[e])
        if co != 1:
            raise ComputationError(
                f"unexpected decomposition at exception orbit {e}: {r}")
        solved[e] = -(r - AffineInt.parameter(aname[e]))
    for orb in region:
        if orb in exceptions:
            continue
        if remainder[orb]:
            raise ComputationError(
                f"localization decomposition does not close at {orb}: "
                f"remainder {remainder[orb]}")

    mult = {}
    for o in ds.orbits:
        v = solved.get(o.id, target[o.id])
        if v:
            mult[o.id] = v
    result = CharacteristicCycle((top, sign), mult)

    table_row = sr.cc_table.get((top, sign))
    if table_row is not None and table_row.mult != result.mult:
        raise ComputationError(
            "localization cycle disagrees with the solved table row for "
            f"({top},{sign})")
    return result


def localization_check_terms(ds):
    """The term breakdown behind the localization pinning, for reports."""
    top = ds.poset.top()
    triv = ds.orbit(top).group.labels()[0]
    mm = geometric_multiplicity_matrix(ds)
    out = {}
    for e in ds.conormal_dense_exceptions:
        lab = ds.orbit(e).group.labels()[0]
        out[(e, lab)] = composition_terms(mm, (e, lab), (top, triv))
    return out


def check_halfinteger_roots(roots):
    """True iff no root lies in Z + 1/2."""
    rs = [Fraction(r) for r in roots]
    if not rs:
        raise ValueError("empty root list")
    return not any(r.denominator == 2 for r in rs)


def verify_fourier_symmetry(sr):
    """All pairwise symmetry identities on solver output; returns mismatches."""
    ds = sr.dataset
    out = []
    for src in ds.local_systems():
        fsrc = fourier_partner(ds.duality, src)
        for o in ds.orbits:
            lhs = sr.cc_table[src].at(o.id)
            rhs = sr.cc_table[fsrc].at(hat(ds.duality, o.id))
            if lhs != rhs:
                out.append((src, o.id, lhs, rhs))
    return out

"""Local Euler characteristics and the geometric multiplicity matrix.

Conventions, fixed once here and used everywhere:

 * chi_loc at target orbit T of the sheaf attached to source (S, L) is
   (-1)^dim(S) * sum over irreps L'' of T's group of dim(L'') * P((T,L''),(S,L))
   where P(..) is the pinned evaluation at 1.
 * Same-orbit evaluations are normalized away: P((S,L''),(S,L)) = delta(L'',L).
 * Evaluations vanish unless the target orbit lies in the source's closure.
 * Anything the table does not pin is UNKNOWN, an explicit sentinel.  Missing
   data never silently becomes 0; only support and normalization fill cells.

The signed transition matrix cg(d,g) = (-1)^(dim d + dim g) * P(d,g) writes
simple objects in terms of standard ones; its inverse mg gives composition
multiplicities of standards.  mg columns are computed by back-substitution,
fetching cg entries only where the running column is nonzero, so partially
pinned tables still resolve the columns whose support avoids the gaps.
"""

from __future__ import annotations


class _Unknown:
    __slots__ = ()

    def __repr__(self):
        return "unknown"

    def __bool__(self):
        raise TypeError("unknown euler value has no truth value")


UNKNOWN = _Unknown()


class InsufficientKLData(Exception):
    """A computation needed evaluation pairs the table does not pin."""

    def __init__(self, pairs):
        self.pairs = list(pairs)
        super().__init__(f"unpinned KL pairs: {self.pairs}")


def kl_value(ds, target_ls, source):
    """Pinned evaluation P(target_ls, source) or UNKNOWN.

    Applies normalization (same orbit), support (incomparable orbits), and
    the zero-sum shortcut: a pinned orbit-level sum of 0 forces every
    per-irrep value to 0 since evaluations are nonnegative.
    """
    t_orb = target_ls[0]
    s_orb = source[0]
    if t_orb == s_orb:
        return 1 if target_ls[1] == source[1] else 0
    if not ds.poset.leq(t_orb, s_orb):
        return 0
    rec = ds.kl.per_irrep_record(target_ls, source)
    if rec is not None:
        return rec.value
    srec = ds.kl.sum_record(t_orb, source)
    if srec is not None:
        if srec.value == 0:
            return 0
        group = ds.orbit(t_orb).group
        if len(group.irreps) == 1:
            d = group.irreps[0][1]
            if srec.value % d == 0:
                return srec.value // d
    return UNKNOWN


def local_euler(kl, ds, source, target):
    """chi_loc of IC(source) along the target orbit, or UNKNOWN.

    kl is passed separately so a candidate table can be evaluated against a
    dataset it is not installed in; pass ds.kl for the ordinary case.
    """
    ds.orbit(target)
    s_orb, s_irr = source
    group = ds.orbit(s_orb).group
    if s_irr not in group.labels():
        raise KeyError(f"unknown irrep {s_irr!r} on orbit {s_orb}")
    sign = (-1) ** ds.orbit(s_orb).dim
    if target == s_orb:
        return sign * ds.ls_dim(source)
    if not ds.poset.leq(target, s_orb):
        return 0
    if kl is not ds.kl:
        probe = lambda t_ls: _kl_value_in(ds, kl, t_ls, source)
    else:
        probe = lambda t_ls: kl_value(ds, t_ls, source)
    tgroup = ds.orbit(target).group
    # try per-irrep first, fall back to a pinned orbit-level sum
    per = [probe((target, lab)) for lab in tgroup.labels()]
    if not any(v is UNKNOWN for v in per):
        total = sum(tgroup.irrep_dim(lab) * v for lab, v in zip(tgroup.labels(), per))
        return sign * total
    srec = kl.sum_record(target, source)
    if srec is not None:
        return sign * srec.value
    return UNKNOWN


def _kl_value_in(ds, kl, target_ls, source):
    t_orb = target_ls[0]
    if t_orb == source[0]:
        return 1 if target_ls[1] == source[1] else 0
    if not ds.poset.leq(t_orb, source[0]):
        return 0
    rec = kl.per_irrep_record(target_ls, source)
    if rec is not None:
        return rec.value
    srec = kl.sum_record(t_orb, source)
    if srec is not None and srec.value == 0:
        return 0
    return UNKNOWN


class EulerMatrix:
    """chi_loc values for every (source local system, target orbit) pair."""

    def __init__(self, sources, targets, entries, failures=None):
        self.sources = list(sources)
        self.targets = list(targets)
        self.entries = dict(entries)
        # populated by reconstruction: cell -> reason the value stayed UNKNOWN
        self.failures = dict(failures or {})

    def value(self, source, target):
        try:
            return self.entries[(tuple(source), target)]
        except KeyError:
            raise KeyError(f"no cell ({source}, {target})") from None

    def known_items(self):
        return [(k, v) for k, v in self.entries.items() if v is not UNKNOWN]

    def unknown_cells(self):
        return [k for k, v in self.entries.items() if v is UNKNOWN]


def euler_matrix(ds):
    """The full matrix over the dataset; cells may be UNKNOWN."""
    sources = ds.local_systems()
    targets = [o.id for o in ds.orbits]
    entries = {}
    for src in sources:
        for t in targets:
            entries[(src, t)] = local_euler(ds.kl, ds, src, t)
    return EulerMatrix(sources, targets, entries)


class MultiplicityMatrices:
    """Lazy view of the signed transition matrix cg and its inverse mg.

    Entries are materialized on demand.  cg comes straight from pinned
    evaluations; mg columns are solved top-down.  Requests that hit unpinned
    pairs raise InsufficientKLData naming them.
    """

    def __init__(self, ds):
        self.ds = ds
        self._mg = {}

    def cg(self, d, g):
        d, g = tuple(d), tuple(g)
        if d == g:
            return 1
        if d[0] == g[0] or not self.ds.poset.leq(d[0], g[0]):
            return 0
        v = kl_value(self.ds, d, g)
        if v is UNKNOWN:
            raise InsufficientKLData([(d, g)])
        sd = self.ds.orbit(d[0]).dim
        sg = self.ds.orbit(g[0]).dim
        return (-1) ** (sd + sg) * v

    def mg(self, d, col):
        d, col = tuple(d), tuple(col)
        if d[0] == col[0]:
            return 1 if d == col else 0
        if not self.ds.poset.leq(d[0], col[0]):
            return 0
        key = (d, col)
        if key not in self._mg:
            total = 0
            for orb in self.ds.poset.interval(d[0], col[0]):
                if orb == d[0]:
                    continue
                for lab in self.ds.orbit(orb).group.labels():
                    g = (orb, lab)
                    m = self.mg(g, col)
                    if m == 0:
                        continue       # zero entries never demand a cg fetch
                    total -= self.cg(d, g) * m
            self._mg[key] = total
        return self._mg[key]


def geometric_multiplicity_matrix(ds):
    return MultiplicityMatrices(ds)


def composition_multiplicity(mm, probe, column):
    """The bilinear pairing  sum over g of cg(probe,g) * mg(g,column).

    Equals 1 when probe == column and 0 otherwise; evaluating it exercises
    exactly the evaluation entries the identity needs, so it doubles as a
    consistency probe of partially pinned tables.
    """
    return sum(t["product"] for t in composition_terms(mm, probe, column))


def composition_terms(mm, probe, column):
    """Term breakdown of composition_multiplicity, diagonal term first."""
    probe, column = tuple(probe), tuple(column)
    ds = mm.ds
    terms = [{
        "gamma": probe, "cg": 1, "mg": mm.mg(probe, column),
        "product": mm.mg(probe, column),
    }]
    if probe[0] == column[0] or not ds.poset.leq(probe[0], column[0]):
        return terms
    for orb in ds.poset.interval(probe[0], column[0]):
        if orb == probe[0]:
            continue
        for lab in ds.orbit(orb).group.labels():
            g = (orb, lab)
            m = mm.mg(g, column)
            if m == 0:
                continue
            cgv = mm.cg(probe, g)
            terms.append({"gamma": g, "cg": cgv, "mg": m, "product": cgv * m})
    return terms

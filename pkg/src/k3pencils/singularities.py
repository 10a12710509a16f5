"""A-D-E classification of the quotient singularities and curve counts.

Three sources of rational curves on the resolved quotient need
bookkeeping beyond the base-locus orbits: stabilizers of points where
base lines meet other fix-lines on the quadric, stabilizers of
off-quadric points on fix-lines, and binary quotients C^2/F~ at the
images of nodes of the singular pencil members.  Node positions depend
on the invariant forms cutting the pencil, so node counts, fix-group
names, and node-line incidences enter as a built-in dataset; everything
downstream of them is recomputed and cross-checked.
"""

from .geometry import (
    fixlines_table,
    nu1,
    nu2,
    nu3_smooth,
    offquadric_rows,
    points_off_quadric,
    quadric_point_rows,
)
from .groups import pgroup

_VALID_E = (6, 7, 8)


class ADEType:
    """One irreducible root-lattice symbol: A_n, D_n or E_n."""

    __slots__ = ("kind", "index")

    def __init__(self, kind, index):
        if kind == "A":
            if index < 1:
                raise ValueError("A_n needs n >= 1")
        elif kind == "D":
            if index < 4:
                raise ValueError("D_n needs n >= 4")
        elif kind == "E":
            if index not in _VALID_E:
                raise ValueError("E_n needs n in {6, 7, 8}")
        else:
            raise ValueError("unknown Dynkin kind %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "index", int(index))

    def __setattr__(self, name, value):
        raise AttributeError("ADEType is immutable")

    @classmethod
    def parse(cls, text):
        s = text.strip().replace("_", "")
        if not s or s[0] not in "ADE":
            raise ValueError("cannot parse Dynkin symbol %r" % (text,))
        try:
            n = int(s[1:])
        except ValueError:
            raise ValueError("cannot parse Dynkin symbol %r" % (text,))
        return cls(s[0], n)

    @property
    def rank(self):
        return self.index

    def __eq__(self, other):
        if not isinstance(other, ADEType):
            return NotImplemented
        return self.kind == other.kind and self.index == other.index

    def __hash__(self):
        return hash((self.kind, self.index))

    def __lt__(self, other):
        return (self.kind, self.index) < (other.kind, other.index)

    def __str__(self):
        return "%s%d" % (self.kind, self.index)

    def __repr__(self):
        return "ADEType(%r, %d)" % (self.kind, self.index)


_POLYHEDRAL = {"T": 12, "O": 24, "I": 60}


class BinaryGroupClass:
    """Conjugacy class of a finite rotation group, by its usual name.

    kind is one of "id", "Z", "D", "T", "O", "I"; n carries the cyclic
    or dihedral parameter and is 0 otherwise.  D_2 and Z_2 x Z_2 name
    the same class and compare equal.
    """

    __slots__ = ("kind", "n")

    def __init__(self, kind, n=0):
        if kind in ("id",) + tuple(_POLYHEDRAL):
            if n:
                raise ValueError("%s takes no parameter" % kind)
        elif kind == "Z":
            if n < 2:
                raise ValueError("cyclic class needs n >= 2")
        elif kind == "D":
            if n < 2:
                raise ValueError("dihedral class needs n >= 2")
        else:
            raise ValueError("unknown rotation-group kind %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", int(n))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryGroupClass is immutable")

    @classmethod
    def parse(cls, label):
        s = label.strip()
        if s in ("id", "1"):
            return cls("id")
        if s in _POLYHEDRAL:
            return cls(s)
        if s == "Z2xZ2":
            return cls("D", 2)
        for kind in ("Z", "D"):
            if s.startswith(kind):
                try:
                    return cls(kind, int(s[1:]))
                except ValueError:
                    break
        raise ValueError("unknown rotation-group label %r" % (label,))

    @property
    def so3_order(self):
        if self.kind == "id":
            return 1
        if self.kind == "Z":
            return self.n
        if self.kind == "D":
            return 2 * self.n
        return _POLYHEDRAL[self.kind]

    @property
    def label(self):
        if self.kind == "id":
            return "id"
        if self.kind == "Z":
            return "Z%d" % self.n
        if self.kind == "D":
            return "Z2xZ2" if self.n == 2 else "D%d" % self.n
        return self.kind

    def __eq__(self, other):
        if not isinstance(other, BinaryGroupClass):
            return NotImplemented
        return self.kind == other.kind and self.n == other.n

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        return "BinaryGroupClass.parse(%r)" % self.label


def binary_quotient_type(f):
    """C^2 modulo the binary cover of f, as a Dynkin symbol.

    A node with trivial stabilizer stays an ordinary double point, so
    the trivial class maps to A1.
    """
    if f.kind == "id":
        return ADEType("A", 1)
    if f.kind == "Z":
        return ADEType("A", 2 * f.n - 1)
    if f.kind == "D":
        return ADEType("D", f.n + 2)
    return ADEType("E", {"T": 6, "O": 7, "I": 8}[f.kind])


def quadric_point_singularity(stab):
    """Quotient type at a base-line point with stabilizer Z_a x Z_b.

    The pair is ordered (transversal factor, factor fixing the base
    line pointwise); only the transversal factor acts on a disc
    normal to the branch curve, so the image point is an A_{a-1}.
    """
    a, _ = stab
    if a < 2:
        raise ValueError("transversal factor must act nontrivially")
    return ADEType("A", a - 1)


def off_quadric_singularities(line_data):
    """Singularity report for one fix-line orbit off the quadric.

    line_data is (o(L), number of point orbits); each orbit maps to one
    A_{o-1} point in the quotient.
    """
    o, count = line_data
    assert o in (2, 3, 4), o
    if count == 0:
        return []
    return [(count, ADEType("A", o - 1))]


class NodeOrbitRecord:
    """Ingested invariants of the nodes of one singular pencil member.

    node_count and fix_group come from the classical description of the
    pencils; line_incidences holds (type tag, fix-line orbit length,
    lines of that class through each node) triples that structure the
    free-text meeting_lines annotation.
    """

    __slots__ = ("group", "fiber", "node_count", "orbit_count",
                 "fix_group", "meeting_lines", "line_incidences")

    def __init__(self, group, fiber, node_count, orbit_count, fix_group,
                 meeting_lines="", line_incidences=()):
        assert fiber in (1, 2, 3, 4), fiber
        if node_count % orbit_count:
            raise ValueError("orbit count must divide node count")
        self.group = group
        self.fiber = fiber
        self.node_count = node_count
        self.orbit_count = orbit_count
        self.fix_group = (fix_group if isinstance(fix_group, BinaryGroupClass)
                          else BinaryGroupClass.parse(fix_group))
        self.meeting_lines = meeting_lines
        self.line_incidences = tuple(line_incidences)

    def __repr__(self):
        return "NodeOrbitRecord(%r, %d, ns=%d, orbits=%d, F=%s)" % (
            self.group, self.fiber, self.node_count, self.orbit_count,
            self.fix_group.label)


_NS = {6: (12, 48, 48, 12), 8: (24, 72, 144, 96)}

# group, fiber, orbit count, fix group, annotation, incidences
_NODE_TABLE = (
    ("TxV", 1, 1, "Z2xZ2", "1M1+1M2+1M3", (("M", 6, 3),)),
    ("TxV", 2, 1, "id", "", ()),
    ("TxV", 3, 1, "id", "", ()),
    ("TxV", 4, 1, "Z2xZ2", "1M1+1M2+1M3", (("M", 6, 3),)),
    ("TT1", 1, 3, "T", "3Mi+4N", (("M", 6, 3), ("N", 16, 4))),
    ("TT1", 2, 3, "Z3", "1N", (("N", 16, 1),)),
    ("TT1", 3, 1, "id", "", ()),
    ("TT1", 4, 1, "Z2xZ2", "1M1+1M2+1M3", (("M", 6, 3),)),
    ("VxV", 1, 3, "Z2xZ2", "3Mij", (("M", 2, 3),)),
    ("VxV", 2, 3, "id", "", ()),
    ("VxV", 3, 3, "id", "", ()),
    ("VxV", 4, 3, "Z2xZ2", "3Mij", (("M", 2, 3),)),
    ("OxT", 1, 1, "T", "3M+4N", (("M", 18, 3), ("N", 32, 4))),
    ("OxT", 2, 1, "Z2xZ2", "1M+2M'", (("M", 18, 1), ("M", 36, 2))),
    ("OxT", 3, 1, "Z2", "1M'", (("M", 36, 1),)),
    ("OxT", 4, 1, "Z3", "1N", (("N", 32, 1),)),
    ("OO2", 1, 2, "O", "3R+4N(N')+6M",
     (("R", 18, 3), ("N", 16, 4), ("M", 72, 6))),
    ("OO2", 2, 1, "Z4", "1R", (("R", 18, 1),)),
    ("OO2", 3, 1, "Z2", "1M", (("M", 72, 1),)),
    ("OO2", 4, 2, "D3", "1N(N')+3M", (("N", 16, 1), ("M", 72, 3))),
    ("TxT", 1, 2, "T", "3M+4N(N')", (("M", 18, 3), ("N", 16, 4))),
    ("TxT", 2, 1, "Z2", "1M", (("M", 18, 1),)),
    ("TxT", 3, 1, "id", "", ()),
    ("TxT", 4, 2, "Z3", "1N(N')", (("N", 16, 1),)),
)

_DEGREES = {"TxV": 6, "TT1": 6, "VxV": 6, "OxT": 8, "OO2": 8, "TxT": 8}


def node_records(label):
    """The built-in node dataset for one group, all four fibers."""
    deg = _DEGREES[label]
    out = []
    for grp, fiber, orbits, fix, text, inc in _NODE_TABLE:
        if grp == label:
            out.append(NodeOrbitRecord(grp, fiber, _NS[deg][fiber - 1],
                                       orbits, fix, text, inc))
    assert len(out) == 4
    return out


def node_singularities(record):
    """Singularity report at the images of one fiber's nodes."""
    return [(record.orbit_count, binary_quotient_type(record.fix_group))]


def quadric_reports(label, degree):
    """(count, type) pairs for the on-quadric point orbits."""
    return [
        (row.number,
         quadric_point_singularity((row.transversal_order,
                                    row.fix[0] if row.fix[1] ==
                                    row.transversal_order else row.fix[1])))
        for row in quadric_point_rows(label, degree)
    ]


def offquadric_reports(label, degree):
    """(count, type) pairs for the off-quadric orbits, one per line row."""
    out = []
    for row in offquadric_rows(label, degree):
        out.extend(off_quadric_singularities((row.order, row.number)))
    return out


def _nu3_at_fiber(label, degree, record):
    """Off-quadric curve count after nodes swallow points of fix-lines.

    On a line L with m off-quadric special points, each node lying on L
    is a double point of the intersection with the pencil member, so k
    nodes leave m - 2k simple points falling into (m - 2k)/hbar orbits.
    k is reconstructed from the per-node line counts: incidences pool
    the orbit rows sharing (tag, orbit length), which also absorbs the
    alternating N/N' annotations.
    """
    rows = fixlines_table(label)
    pooled = {}
    for row in rows:
        pooled.setdefault((row.type_tag, row.length), 0)
    for key in list(pooled):
        pooled[key] = sum(r.length for r in rows
                          if (r.type_tag, r.length) == key)
    k_of = {}
    for tag, length, per_node in record.line_incidences:
        total = pooled[(tag, length)]
        hits = record.node_count * per_node
        assert hits % total == 0, (label, record.fiber, tag)
        k_of[(tag, length)] = hits // total
    nu3 = 0
    for row in rows:
        m = points_off_quadric(row.rep, degree)
        k = k_of.get((row.type_tag, row.length), 0)
        left = m - 2 * k
        assert left >= 0, (label, record.fiber, row.type_tag)
        assert left % row.ratio == 0, (label, record.fiber, row.type_tag)
        nu3 += (left // row.ratio) * (row.order - 1)
    return nu3


def nu_totals(label, degree, fiber, node_data=None):
    """The curve-count vector (nu1, nu2, nu3, nu4, nu) for one fiber.

    fiber is "smooth" or a lambda index 1..4; node_data must supply the
    NodeOrbitRecord of any singular fiber requested.
    """
    n1 = nu1(label, degree)
    n2 = nu2(label, degree)
    if fiber == "smooth":
        n3 = nu3_smooth(label, degree)
        return (n1, n2, n3, 0, n1 + n2 + n3)
    assert fiber in (1, 2, 3, 4), fiber
    record = None
    for rec in node_data or ():
        if rec.group == label and rec.fiber == fiber:
            record = rec
    if record is None:
        raise ValueError("missing node data for singular fiber")
    if record.node_count != _NS[degree][fiber - 1]:
        raise ValueError("node count does not match the pencil degree")
    ph = pgroup(label)
    assert (record.orbit_count * ph.order()
            == record.node_count * record.fix_group.so3_order), label
    n3 = _nu3_at_fiber(label, degree, record)
    n4 = record.orbit_count * binary_quotient_type(record.fix_group).rank
    return (n1, n2, n3, n4, n1 + n2 + n3 + n4)

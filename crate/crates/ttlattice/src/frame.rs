//! Finite frames, finite topological spaces, and the duality between them.
//!
//! A finite frame is a bounded distributive lattice; its points are the
//! meet-irreducible elements below the top, and the space of points carries
//! the opens `U_f = { p : p(f) = 1 }`. Going the other way, the opens of a
//! finite space form a frame under inclusion. The unit and counit of this
//! adjunction are materialised as explicit maps so that injectivity,
//! surjectivity, continuity and the triangle identities are all decided by
//! scans rather than assumed.
//!
//! Spaces here are explicit families of open subsets closed under union and
//! intersection; the specialization order uses the convention that the
//! minimal open neighbourhood of `y` is its down-set, so opens are exactly
//! the downsets in the Alexandrov correspondence.

use crate::bits::{self, Row, MAX_ELEMENTS};
use crate::poset::{self, DistributivityVerdict, FiniteLattice, FinitePoset, PosetError};
use std::collections::BTreeSet;
use std::fmt;

/// Errors raised while building spaces and frames.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceError {
    /// More points than a bit row can index.
    TooManyPoints(usize),
    /// The open family outgrew the lattice element bound.
    TooManyOpens(usize),
    /// Two points share a label.
    DuplicateLabel(String),
    /// A point label that was never declared.
    UnknownLabel(String),
    /// A subset mentions a point index outside the carrier.
    PointOutOfRange(usize),
    /// The space fails one of the coherence conditions; the reason names it.
    NotCoherent(String),
    /// Two points with identical open neighbourhoods block the
    /// specialization order.
    NotT0(String, String),
    /// A text description that failed to parse, with its line number.
    Parse(usize, String),
}

impl fmt::Display for SpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceError::TooManyPoints(n) => {
                write!(f, "{} points exceeds the supported maximum {}", n, MAX_ELEMENTS)
            }
            SpaceError::TooManyOpens(n) => {
                write!(f, "{} open sets exceeds the supported maximum {}", n, MAX_ELEMENTS)
            }
            SpaceError::DuplicateLabel(l) => write!(f, "duplicate point label {:?}", l),
            SpaceError::UnknownLabel(l) => write!(f, "unknown point label {:?}", l),
            SpaceError::PointOutOfRange(i) => write!(f, "point index {} out of range", i),
            SpaceError::NotCoherent(why) => write!(f, "space is not coherent: {}", why),
            SpaceError::NotT0(a, b) => {
                write!(f, "points {:?} and {:?} share all open neighbourhoods", a, b)
            }
            SpaceError::Parse(line, msg) => write!(f, "line {}: {}", line, msg),
        }
    }
}

impl std::error::Error for SpaceError {}

/// A finite topological space: labelled points and the full family of open
/// sets, sorted by size then lexicographically. The family always contains
/// the empty set and the whole carrier and is closed under union and
/// intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    opens: Vec<Row>,
}

impl FiniteSpace {
    /// Builds a space from a base of opens: the family is closed under
    /// pairwise unions and intersections, and the empty and full sets are
    /// added.
    pub fn new<S: Into<String>>(labels: Vec<S>, base: &[Row]) -> Result<Self, SpaceError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(SpaceError::TooManyPoints(n));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(SpaceError::DuplicateLabel(l.clone()));
            }
        }
        let all = bits::full(n);
        for b in base {
            if !bits::is_subset(*b, all) {
                let stray = bits::members(bits::diff(*b, all))[0];
                return Err(SpaceError::PointOutOfRange(stray));
            }
        }
        let mut family: BTreeSet<Row> = base.iter().copied().collect();
        family.insert(bits::EMPTY);
        family.insert(all);
        loop {
            let snapshot: Vec<Row> = family.iter().copied().collect();
            let before = family.len();
            for (i, &a) in snapshot.iter().enumerate() {
                for &b in &snapshot[i + 1..] {
                    family.insert(bits::union(a, b));
                    family.insert(bits::inter(a, b));
                }
            }
            if family.len() == before {
                break;
            }
        }
        let mut opens: Vec<Row> = family.into_iter().collect();
        opens.sort_by_key(|r| bits::size_lex_key(*r));
        Ok(FiniteSpace { labels, opens })
    }

    /// Wraps a family already closed under union and intersection and
    /// containing the bounds. Debug builds verify the invariant.
    pub(crate) fn from_closed_family(labels: Vec<String>, mut opens: Vec<Row>) -> Self {
        opens.sort_by_key(|r| bits::size_lex_key(*r));
        opens.dedup();
        let space = FiniteSpace { labels, opens };
        debug_assert!(space.family_is_closed());
        space
    }

    fn family_is_closed(&self) -> bool {
        let n = self.labels.len();
        if !self.is_open(bits::EMPTY) || !self.is_open(bits::full(n)) {
            return false;
        }
        for (i, &a) in self.opens.iter().enumerate() {
            for &b in &self.opens[i + 1..] {
                if !self.is_open(bits::union(a, b)) || !self.is_open(bits::inter(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Number of points.
    pub fn points_len(&self) -> usize {
        self.labels.len()
    }

    /// Point labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of point `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the point with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The open sets, sorted by size then lexicographically.
    pub fn opens(&self) -> &[Row] {
        &self.opens
    }

    /// Membership of a subset in the open family.
    pub fn is_open(&self, r: Row) -> bool {
        self.opens.binary_search_by_key(&bits::size_lex_key(r), |o| bits::size_lex_key(*o)).is_ok()
    }

    /// Position of an open subset inside the family.
    pub fn open_index(&self, r: Row) -> Option<usize> {
        self.opens.binary_search_by_key(&bits::size_lex_key(r), |o| bits::size_lex_key(*o)).ok()
    }

    /// True when the complement of `r` is open.
    pub fn is_closed(&self, r: Row) -> bool {
        self.is_open(bits::complement(r, self.points_len()))
    }

    /// All closed sets, sorted by size then lexicographically.
    pub fn closed_sets(&self) -> Vec<Row> {
        let n = self.points_len();
        let mut closed: Vec<Row> = self.opens.iter().map(|o| bits::complement(*o, n)).collect();
        closed.sort_by_key(|r| bits::size_lex_key(*r));
        closed
    }

    /// Smallest closed set containing `r`.
    pub fn closure(&self, r: Row) -> Row {
        let n = self.points_len();
        let mut acc = bits::full(n);
        for c in self.closed_sets() {
            if bits::is_subset(r, c) {
                acc = bits::inter(acc, c);
            }
        }
        acc
    }

    /// Smallest open set containing point `i`; exists because the family is
    /// closed under intersections.
    pub fn min_open(&self, i: usize) -> Row {
        let mut acc = bits::full(self.points_len());
        for &o in &self.opens {
            if bits::get(o, i) {
                acc = bits::inter(acc, o);
            }
        }
        acc
    }

    /// Every open cover drawn from a finite family of opens is already
    /// finite, so every subset of a finite space is quasi-compact. The
    /// coherence checker still routes each of its conditions through this
    /// predicate so the walk stays explicit.
    pub fn is_quasi_compact(&self, _subset: Row) -> bool {
        true
    }

    /// The subspace on `members`, with points reindexed in ascending order.
    pub fn subspace(&self, members: Row) -> FiniteSpace {
        let kept = bits::members(members);
        let labels: Vec<String> = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let restrict = |r: Row| -> Row {
            let mut out = bits::EMPTY;
            for (new, &old) in kept.iter().enumerate() {
                if bits::get(r, old) {
                    bits::set(&mut out, new);
                }
            }
            out
        };
        let opens: Vec<Row> = self.opens.iter().map(|o| restrict(*o)).collect();
        // Restriction preserves closure under union and intersection.
        FiniteSpace::from_closed_family(labels, opens)
    }
}

/// Parses the space text format:
///
/// ```text
/// # comment
/// points: a b c
/// open: a
/// open: a b
/// ```
///
/// A line `open:` with no labels declares the empty set explicitly; the
/// empty set and full carrier are always added, and the family is closed
/// under union and intersection.
pub fn parse_space(text: &str) -> Result<FiniteSpace, SpaceError> {
    let mut labels: Option<Vec<String>> = None;
    let mut base: Vec<Vec<String>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("points:") {
            if labels.is_some() {
                return Err(SpaceError::Parse(lineno, "duplicate points line".into()));
            }
            labels = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some(rest) = line.strip_prefix("open:") {
            base.push(rest.split_whitespace().map(String::from).collect());
        } else {
            return Err(SpaceError::Parse(lineno, format!("unrecognised line {:?}", line)));
        }
    }
    let labels = labels.ok_or_else(|| SpaceError::Parse(0, "missing points line".into()))?;
    let mut rows = Vec::with_capacity(base.len());
    for open in base {
        let mut row = bits::EMPTY;
        for name in open {
            let i = labels
                .iter()
                .position(|l| *l == name)
                .ok_or(SpaceError::UnknownLabel(name))?;
            bits::set(&mut row, i);
        }
        rows.push(row);
    }
    FiniteSpace::new(labels, &rows)
}

/// The Alexandrov space of a poset: points are the elements, opens are all
/// downsets.
pub fn alexandrov_space(p: &FinitePoset) -> FiniteSpace {
    FiniteSpace::from_closed_family(p.labels().to_vec(), p.downsets())
}

/// The specialization order of a space: `x <= y` exactly when every open
/// set containing `y` contains `x`, i.e. `x` lies in the minimal open
/// neighbourhood of `y`. Fails when the space is not T0.
pub fn specialization_order(x: &FiniteSpace) -> Result<FinitePoset, SpaceError> {
    let n = x.points_len();
    let mut pairs = Vec::new();
    for j in 0..n {
        let m = x.min_open(j);
        for i in bits::members(m) {
            pairs.push((i, j));
        }
    }
    FinitePoset::new(x.labels().to_vec(), &pairs).map_err(|e| match e {
        PosetError::CycleBetween(a, b) => SpaceError::NotT0(a, b),
        PosetError::Empty => SpaceError::TooManyPoints(0),
        other => SpaceError::Parse(0, other.to_string()),
    })
}

/// Separation and coherence diagnostics for a finite space.
#[derive(Debug, Clone)]
pub struct SpaceProperties {
    /// Distinct points have distinct open neighbourhood collections.
    pub t0: bool,
    /// Every irreducible closed set has exactly one generic point.
    pub sober: bool,
    /// Every point can be cut out of its closure by an open set.
    pub td: bool,
    /// Quasi-compact, sober, with a quasi-compact basis stable under
    /// intersection.
    pub coherent: bool,
    /// Irreducible closed sets, sorted by size then lexicographically.
    pub irreducible_closed: Vec<Row>,
    /// Generic points of each irreducible closed set, aligned with
    /// `irreducible_closed`.
    pub generic_points: Vec<Vec<usize>>,
}

/// Computes separation and coherence diagnostics by direct enumeration.
pub fn space_properties(x: &FiniteSpace) -> SpaceProperties {
    let n = x.points_len();
    let closed = x.closed_sets();
    let point_closures: Vec<Row> = (0..n).map(|i| x.closure(bits::singleton(i))).collect();

    let mut t0 = true;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            // Same closure forces the same open neighbourhoods and back.
            if point_closures[i] == point_closures[j] {
                t0 = false;
                break 'outer;
            }
        }
    }

    let mut irreducible_closed = Vec::new();
    let mut generic_points = Vec::new();
    for &c in &closed {
        if bits::is_empty(c) {
            continue;
        }
        let proper: Vec<Row> = closed
            .iter()
            .copied()
            .filter(|&a| bits::is_subset(a, c) && a != c)
            .collect();
        let mut reducible = false;
        'decomp: for (i, &a) in proper.iter().enumerate() {
            for &b in &proper[i..] {
                if bits::union(a, b) == c {
                    reducible = true;
                    break 'decomp;
                }
            }
        }
        if !reducible {
            let generics: Vec<usize> =
                bits::members(c).into_iter().filter(|&y| point_closures[y] == c).collect();
            irreducible_closed.push(c);
            generic_points.push(generics);
        }
    }
    let sober = generic_points.iter().all(|g| g.len() == 1);

    // T_D via the minimal open neighbourhood: if any open cuts the point out
    // of its closure, the smallest one does.
    let td = (0..n).all(|p| {
        bits::inter(x.min_open(p), point_closures[p]) == bits::singleton(p)
    });

    // The four coherence conditions, walked literally even though finite
    // spaces make each quasi-compactness test trivial.
    let qc_whole = x.is_quasi_compact(bits::full(n));
    let qc_opens: Vec<Row> =
        x.opens().iter().copied().filter(|&o| x.is_quasi_compact(o)).collect();
    let qc_basis = x.opens().iter().all(|&u| {
        let mut acc = bits::EMPTY;
        for &v in &qc_opens {
            if bits::is_subset(v, u) {
                acc = bits::union(acc, v);
            }
        }
        acc == u
    });
    let qc_intersections = qc_opens.iter().enumerate().all(|(i, &u)| {
        qc_opens[i..].iter().all(|&v| {
            let w = bits::inter(u, v);
            x.is_open(w) && x.is_quasi_compact(w)
        })
    });
    let coherent = qc_whole && sober && qc_basis && qc_intersections;

    SpaceProperties { t0, sober, td, coherent, irreducible_closed, generic_points }
}

/// Why a lattice fails to be a frame.
#[derive(Debug, Clone)]
pub enum FrameError {
    /// Not distributive; carries the witness and forbidden sublattice.
    NotDistributive(DistributivityVerdict),
}

impl fmt::Display for FrameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameError::NotDistributive(v) => {
                write!(f, "lattice is not distributive")?;
                if let Some(w) = v.witness {
                    write!(f, " (witness triple {:?})", w)?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for FrameError {}

/// A finite frame: a bounded distributive lattice. At finite scale the
/// infinite distributive law follows from the binary one, which the
/// constructor verifies by full scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFrame {
    lattice: FiniteLattice,
}

impl FiniteFrame {
    /// Validates distributivity and wraps the lattice.
    pub fn new(lattice: FiniteLattice) -> Result<Self, FrameError> {
        let verdict = poset::is_distributive(&lattice);
        if !verdict.distributive {
            return Err(FrameError::NotDistributive(verdict));
        }
        Ok(FiniteFrame { lattice })
    }

    /// Underlying lattice.
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    /// Never true.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Label of element `i`.
    pub fn label(&self, i: usize) -> &str {
        self.lattice.label(i)
    }

    /// Order relation.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.lattice.leq(i, j)
    }

    /// Meet.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.lattice.meet(i, j)
    }

    /// Join.
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.lattice.join(i, j)
    }

    /// Least element.
    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    /// Greatest element.
    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// Verifies the frame distribution law `x /\ \/S = \/ { x /\ s }` over
    /// every subset of a small frame. Exponential; guarded to 16 elements.
    pub fn verify_full_distribution(&self) -> Result<(), [usize; 3]> {
        let n = self.len();
        assert!(n <= 16, "full distribution scan is meant for small frames");
        for x in 0..n {
            for mask in 0u32..(1 << n) {
                let subset = (0..n).filter(|i| mask >> i & 1 == 1);
                let joined = self.lattice.join_all(subset);
                let lhs = self.meet(x, joined);
                let rhs = self
                    .lattice
                    .join_all((0..n).filter(|i| mask >> i & 1 == 1).map(|s| self.meet(x, s)));
                if lhs != rhs {
                    return Err([x, joined, rhs]);
                }
            }
        }
        Ok(())
    }
}

/// A point of a frame: a meet-irreducible element below the top. The
/// associated two-valued assignment sends `f` to 1 exactly when `f` is not
/// below the prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FramePoint {
    /// The meet-irreducible element.
    pub prime: usize,
}

impl FramePoint {
    /// The two-valued assignment at `f`.
    pub fn evaluate(&self, frame: &FiniteFrame, f: usize) -> bool {
        !frame.leq(f, self.prime)
    }
}

/// All points of the frame, in ascending order of their prime element.
/// Each candidate's assignment is verified to preserve bounds, binary
/// meets and binary joins; in a distributive lattice the meet-irreducible
/// elements always pass.
pub fn points(frame: &FiniteFrame) -> Vec<FramePoint> {
    let n = frame.len();
    let top = frame.top();
    let mut out = Vec::new();
    for m in 0..n {
        if m == top {
            continue;
        }
        let irreducible = !(0..n).any(|a| {
            (0..n).any(|b| a != m && b != m && frame.meet(a, b) == m)
        });
        if !irreducible {
            continue;
        }
        let p = FramePoint { prime: m };
        assert!(p.evaluate(frame, top));
        assert!(!p.evaluate(frame, frame.bottom()));
        for a in 0..n {
            for b in 0..n {
                let meets = p.evaluate(frame, frame.meet(a, b))
                    == (p.evaluate(frame, a) && p.evaluate(frame, b));
                let joins = p.evaluate(frame, frame.join(a, b))
                    == (p.evaluate(frame, a) || p.evaluate(frame, b));
                assert!(meets && joins, "prime {} fails the lattice homomorphism laws", m);
            }
        }
        out.push(p);
    }
    out
}

/// The space of points of a frame: one point per meet-irreducible element,
/// with opens `U_f = { p : p(f) = 1 }`.
pub fn pt_space(frame: &FiniteFrame) -> FiniteSpace {
    let pts = points(frame);
    let labels: Vec<String> = pts.iter().map(|p| frame.label(p.prime).to_string()).collect();
    let opens: Vec<Row> = (0..frame.len())
        .map(|f| {
            let mut row = bits::EMPTY;
            for (k, p) in pts.iter().enumerate() {
                if p.evaluate(frame, f) {
                    bits::set(&mut row, k);
                }
            }
            row
        })
        .collect();
    // U commutes with meet and join pointwise, so the image family is
    // closed under union and intersection.
    FiniteSpace::from_closed_family(labels, opens)
}

/// A frame presented by a family of subsets: element `i` of the frame is
/// the subset `opens[i]` of the space it came from.
#[derive(Debug, Clone)]
pub struct SpatialFrame {
    /// The frame of the family under inclusion.
    pub frame: FiniteFrame,
    /// `opens[i]` is the subset represented by frame element `i`.
    pub opens: Vec<Row>,
}

/// The frame of open sets of a space, ordered by inclusion. Element order
/// matches `x.opens()`.
pub fn omega(x: &FiniteSpace) -> Result<SpatialFrame, SpaceError> {
    let family = x.opens().to_vec();
    let lattice = poset::lattice_of_set_family(&family, x.labels()).map_err(|e| match e {
        PosetError::TooLarge(n) => SpaceError::TooManyOpens(n),
        other => SpaceError::Parse(0, other.to_string()),
    })?;
    let frame = FiniteFrame::new(lattice)
        .expect("a lattice of sets under union and intersection is distributive");
    Ok(SpatialFrame { frame, opens: family })
}

/// The counit comparison of a frame with the opens of its point space.
#[derive(Debug, Clone)]
pub struct StoneCounit {
    /// The point space of the frame.
    pub space: FiniteSpace,
    /// The opens of that space as a frame.
    pub target: SpatialFrame,
    /// `map[f]` is the index of `U_f` in the target frame.
    pub map: Vec<usize>,
    /// The map preserves bounds, meets and joins.
    pub preserves_structure: bool,
    /// The map is injective.
    pub injective: bool,
    /// The map is surjective.
    pub surjective: bool,
}

impl StoneCounit {
    /// Frame isomorphism; for finite distributive lattices this always
    /// holds (spatiality).
    pub fn is_isomorphism(&self) -> bool {
        self.preserves_structure && self.injective && self.surjective
    }
}

/// Computes the counit `f -> U_f` of a frame and checks its structure by
/// scan.
pub fn stone_counit(frame: &FiniteFrame) -> StoneCounit {
    let pts = points(frame);
    let space = pt_space(frame);
    let target = omega(&space).expect("point space has at most as many opens as frame elements");
    let n = frame.len();
    let u_row = |f: usize| -> Row {
        let mut row = bits::EMPTY;
        for (k, p) in pts.iter().enumerate() {
            if p.evaluate(frame, f) {
                bits::set(&mut row, k);
            }
        }
        row
    };
    let map: Vec<usize> = (0..n)
        .map(|f| space.open_index(u_row(f)).expect("U_f is an open of the point space"))
        .collect();
    let tf = &target.frame;
    let mut preserves = map[frame.bottom()] == tf.bottom() && map[frame.top()] == tf.top();
    for a in 0..n {
        for b in 0..n {
            if map[frame.meet(a, b)] != tf.meet(map[a], map[b])
                || map[frame.join(a, b)] != tf.join(map[a], map[b])
            {
                preserves = false;
            }
        }
    }
    let mut seen = vec![false; tf.len()];
    let mut injective = true;
    for &m in &map {
        if seen[m] {
            injective = false;
        }
        seen[m] = true;
    }
    let surjective = seen.iter().all(|&s| s);
    StoneCounit { space, target, map, preserves_structure: preserves, injective, surjective }
}

/// The unit comparison of a space with the points of its open-set frame.
#[derive(Debug, Clone)]
pub struct StoneUnit {
    /// The opens of the space as a frame.
    pub frame: SpatialFrame,
    /// The point space of that frame.
    pub target: FiniteSpace,
    /// `map[p]` is the index of the point `x -> [x in U]` in the target.
    pub map: Vec<usize>,
    /// Preimages of target opens are open.
    pub continuous: bool,
    /// The map is injective (equivalent to T0).
    pub injective: bool,
    /// The map is surjective.
    pub surjective: bool,
    /// Bijective with matching open families (equivalent to sobriety).
    pub homeomorphism: bool,
}

/// Computes the unit `x -> p_x` of a space and checks continuity and the
/// homeomorphism conditions by scan. The prime of `p_x` is the largest
/// open missing `x`, which is always meet-irreducible.
pub fn stone_unit(x: &FiniteSpace) -> Result<StoneUnit, SpaceError> {
    let frame = omega(x)?;
    let pts = points(&frame.frame);
    let target = pt_space(&frame.frame);
    let n = x.points_len();
    let mut map = Vec::with_capacity(n);
    for p in 0..n {
        let mut largest = bits::EMPTY;
        for &o in x.opens() {
            if !bits::get(o, p) {
                largest = bits::union(largest, o);
            }
        }
        let prime = x.open_index(largest).expect("union of opens is open");
        let k = pts
            .iter()
            .position(|q| q.prime == prime)
            .expect("largest open missing a point is meet-irreducible");
        map.push(k);
    }
    // Continuity: the preimage of U_f is exactly the open f.
    let mut continuous = true;
    for f in 0..frame.frame.len() {
        let mut preimage = bits::EMPTY;
        for p in 0..n {
            if pts[map[p]].evaluate(&frame.frame, f) {
                bits::set(&mut preimage, p);
            }
        }
        if preimage != frame.opens[f] {
            continuous = false;
        }
    }
    let mut seen = vec![false; target.points_len()];
    let mut injective = true;
    for &m in &map {
        if seen[m] {
            injective = false;
        }
        seen[m] = true;
    }
    let surjective = seen.iter().all(|&s| s);
    // A continuous bijection is a homeomorphism when images of opens are
    // open and every target open arises this way.
    let mut image_family: Vec<Row> = x
        .opens()
        .iter()
        .map(|o| {
            let mut img = bits::EMPTY;
            for p in bits::members(*o) {
                bits::set(&mut img, map[p]);
            }
            img
        })
        .collect();
    image_family.sort_by_key(|r| bits::size_lex_key(*r));
    image_family.dedup();
    let homeomorphism =
        continuous && injective && surjective && image_family == target.opens();
    Ok(StoneUnit { frame, target, map, continuous, injective, surjective, homeomorphism })
}

/// Triangle identity on the frame side: passing a frame to its point space
/// and back, the composite of the counit with the points functor is the
/// identity on points.
pub fn triangle_identity_frame(frame: &FiniteFrame) -> bool {
    let counit = stone_counit(frame);
    let pts = points(frame);
    let space = &counit.space;
    let unit = match stone_unit(space) {
        Ok(u) => u,
        Err(_) => return false,
    };
    // For each point p of the frame (index k in the point space): push it
    // through the unit of pt(frame), then pull the resulting point of
    // omega(pt frame) back along the counit. The composite assignment must
    // agree with p on every frame element.
    (0..pts.len()).all(|k| {
        let q = unit.map[k];
        let qpoint = points(&unit.frame.frame)[q];
        (0..frame.len()).all(|f| {
            let through = qpoint.evaluate(&unit.frame.frame, counit.map[f]);
            through == pts[k].evaluate(frame, f)
        })
    })
}

/// Triangle identity on the space side: each open of `x`, pushed through
/// the counit of `omega(x)` and pulled back along the unit of `x`, returns
/// to itself.
pub fn triangle_identity_space(x: &FiniteSpace) -> Result<bool, SpaceError> {
    let unit = stone_unit(x)?;
    let omega_pts = points(&unit.frame.frame);
    let n = x.points_len();
    Ok((0..unit.frame.frame.len()).all(|u| {
        let mut pulled = bits::EMPTY;
        for p in 0..n {
            if omega_pts[unit.map[p]].evaluate(&unit.frame.frame, u) {
                bits::set(&mut pulled, p);
            }
        }
        pulled == unit.frame.opens[u]
    }))
}

/// The Hochster dual of a coherent space: same points, opens generated by
/// the closed sets with quasi-compact complement. For finite spaces every
/// complement is quasi-compact, so the dual opens are exactly the closed
/// sets; the quasi-compactness condition is still walked literally.
pub fn hochster_dual(x: &FiniteSpace) -> Result<FiniteSpace, SpaceError> {
    let props = space_properties(x);
    if !props.coherent {
        let mut reasons = Vec::new();
        if !props.sober {
            reasons.push("not sober");
        }
        if !x.is_quasi_compact(bits::full(x.points_len())) {
            reasons.push("carrier not quasi-compact");
        }
        if reasons.is_empty() {
            reasons.push("quasi-compact opens fail basis or intersection stability");
        }
        return Err(SpaceError::NotCoherent(reasons.join(", ")));
    }
    let n = x.points_len();
    let dual_base: Vec<Row> = x
        .closed_sets()
        .into_iter()
        .filter(|&c| x.is_quasi_compact(bits::complement(c, n)))
        .collect();
    // Complements of a union/intersection closed family stay closed under
    // both operations.
    Ok(FiniteSpace::from_closed_family(x.labels().to_vec(), dual_base))
}

/// The frame of Thomason subsets of a coherent space: the opens of its
/// Hochster dual, i.e. the closed-set lattice of the original space.
pub fn thomason_frame(x: &FiniteSpace) -> Result<SpatialFrame, SpaceError> {
    omega(&hochster_dual(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::is_lattice;

    fn sierpinski() -> FiniteSpace {
        // Two points; {c} open, {o} not. Specialization: o below c.
        FiniteSpace::new(vec!["o", "c"], &[bits::singleton(1)]).unwrap()
    }

    fn discrete(n: usize) -> FiniteSpace {
        let labels: Vec<String> = (0..n).map(|i| format!("d{}", i)).collect();
        let base: Vec<Row> = (0..n).map(bits::singleton).collect();
        FiniteSpace::new(labels, &base).unwrap()
    }

    fn indiscrete2() -> FiniteSpace {
        FiniteSpace::new(vec!["a", "b"], &[]).unwrap()
    }

    #[test]
    fn closure_of_base_families() {
        let x = FiniteSpace::new(
            vec!["a", "b", "c"],
            &[bits::singleton(0), bits::singleton(1)],
        )
        .unwrap();
        // {}, {a}, {b}, {a b}, {a b c}
        assert_eq!(x.opens().len(), 5);
        assert!(x.is_open(bits::union(bits::singleton(0), bits::singleton(1))));
        assert!(!x.is_open(bits::singleton(2)));
    }

    #[test]
    fn sierpinski_properties() {
        let s = sierpinski();
        let props = space_properties(&s);
        assert!(props.t0 && props.sober && props.td && props.coherent);
        assert_eq!(props.irreducible_closed.len(), 2);
        // Closure of the open point is the whole space; the other point is
        // closed.
        assert_eq!(s.closure(bits::singleton(1)), bits::full(2));
        assert_eq!(s.closure(bits::singleton(0)), bits::singleton(0));
    }

    #[test]
    fn indiscrete_pair_is_neither_t0_nor_sober() {
        let props = space_properties(&indiscrete2());
        assert!(!props.t0);
        assert!(!props.sober);
        assert!(!props.td);
        assert!(!props.coherent);
        assert_eq!(props.generic_points, vec![vec![0, 1]]);
    }

    #[test]
    fn discrete_spaces_are_everything() {
        let props = space_properties(&discrete(3));
        assert!(props.t0 && props.sober && props.td && props.coherent);
        assert_eq!(props.irreducible_closed.len(), 3);
    }

    #[test]
    fn alexandrov_round_trip() {
        let v = FinitePoset::new(vec!["a", "b", "c"], &[(0, 1), (0, 2)]).unwrap();
        let x = alexandrov_space(&v);
        assert_eq!(x.opens().len(), 5);
        let back = specialization_order(&x).unwrap();
        assert_eq!(back, v);
        assert!(specialization_order(&indiscrete2()).is_err());
    }

    #[test]
    fn frame_points_of_downset_lattice_match_elements() {
        // Downset lattice of the V poset has 5 elements; its points
        // correspond to the 3 original elements.
        let v = FinitePoset::new(vec!["a", "b", "c"], &[(0, 1), (0, 2)]).unwrap();
        let dl = crate::poset::downset_lattice(&v).unwrap();
        let frame = FiniteFrame::new(dl.lattice).unwrap();
        assert_eq!(points(&frame).len(), 3);
        frame.verify_full_distribution().unwrap();
    }

    #[test]
    fn m3_is_not_a_frame() {
        let p = FinitePoset::new(
            vec!["bot", "x", "y", "z", "top"],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        let l = is_lattice(&p).unwrap();
        assert!(matches!(FiniteFrame::new(l), Err(FrameError::NotDistributive(_))));
    }

    #[test]
    fn counit_and_unit_are_isomorphisms_for_sierpinski() {
        let s = sierpinski();
        let unit = stone_unit(&s).unwrap();
        assert!(unit.continuous && unit.homeomorphism);
        let counit = stone_counit(&unit.frame.frame);
        assert!(counit.is_isomorphism());
        assert!(triangle_identity_frame(&unit.frame.frame));
        assert!(triangle_identity_space(&s).unwrap());
    }

    #[test]
    fn unit_detects_failures_off_t0_and_sober() {
        let unit = stone_unit(&indiscrete2()).unwrap();
        assert!(unit.continuous);
        assert!(!unit.injective);
        assert!(!unit.homeomorphism);
    }

    #[test]
    fn hochster_dual_swaps_open_and_closed() {
        let s = sierpinski();
        let d = hochster_dual(&s).unwrap();
        // The dual of Sierpinski swaps which singleton is open.
        assert!(d.is_open(bits::singleton(0)));
        assert!(!d.is_open(bits::singleton(1)));
        let dd = hochster_dual(&d).unwrap();
        assert_eq!(dd, s);
        assert!(hochster_dual(&indiscrete2()).is_err());
    }

    #[test]
    fn dual_reverses_specialization() {
        let v = FinitePoset::new(vec!["a", "b", "c"], &[(0, 1), (0, 2)]).unwrap();
        let x = alexandrov_space(&v);
        let d = hochster_dual(&x).unwrap();
        let rev = specialization_order(&d).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(v.leq(i, j), rev.leq(j, i));
            }
        }
    }

    #[test]
    fn thomason_frame_of_discrete_space_is_powerset() {
        let t = thomason_frame(&discrete(3)).unwrap();
        assert_eq!(t.frame.len(), 8);
    }

    #[test]
    fn parse_space_format() {
        let text = "# sierpinski\npoints: o c\nopen: c\n";
        let s = parse_space(text).unwrap();
        assert_eq!(s, sierpinski());
        assert!(parse_space("open: a\n").is_err());
        assert!(parse_space("points: a\nopen: b\n").is_err());
    }
}

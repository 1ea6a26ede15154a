//! Finite posets and lattices with explicit order tables.
//!
//! A poset stores one bit row per element for its up-set and down-set, so
//! comparisons, bound searches and closure arguments are word-parallel
//! scans. Lattices carry fully materialised meet/join tables; nothing in
//! the crate recomputes bounds on the fly, which keeps every law checkable
//! by direct enumeration.

use crate::bits::{self, Row, MAX_ELEMENTS};
use std::fmt;

/// Errors raised while building or combining posets and lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    /// The empty carrier is rejected; bounds would be undefined.
    Empty,
    /// More elements than a bit row can index.
    TooLarge(usize),
    /// Two elements share a label.
    DuplicateLabel(String),
    /// A relation references a label that was never declared.
    UnknownLabel(String),
    /// A relation references an element index outside the carrier.
    IndexOutOfRange(usize),
    /// Transitive closure produced `a <= b <= a` for distinct `a`, `b`.
    CycleBetween(String, String),
    /// A text description that failed to parse, with its line number.
    Parse(usize, String),
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::Empty => write!(f, "poset must have at least one element"),
            PosetError::TooLarge(n) => {
                write!(f, "{} elements exceeds the supported maximum {}", n, MAX_ELEMENTS)
            }
            PosetError::DuplicateLabel(l) => write!(f, "duplicate label {:?}", l),
            PosetError::UnknownLabel(l) => write!(f, "unknown label {:?}", l),
            PosetError::IndexOutOfRange(i) => write!(f, "element index {} out of range", i),
            PosetError::CycleBetween(a, b) => {
                write!(f, "order cycle between {:?} and {:?}", a, b)
            }
            PosetError::Parse(line, msg) => write!(f, "line {}: {}", line, msg),
        }
    }
}

impl std::error::Error for PosetError {}

/// A finite poset on labelled elements `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<Row>,
    down: Vec<Row>,
}

impl FinitePoset {
    /// Builds a poset from generating relations `a <= b` given as index
    /// pairs. The reflexive-transitive closure is taken; a cycle between
    /// distinct elements is an error.
    pub fn new<S: Into<String>>(
        labels: Vec<S>,
        relations: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut up: Vec<Row> = (0..n).map(bits::singleton).collect();
        for &(a, b) in relations {
            if a >= n {
                return Err(PosetError::IndexOutOfRange(a));
            }
            if b >= n {
                return Err(PosetError::IndexOutOfRange(b));
            }
            bits::set(&mut up[a], b);
        }
        // Warshall closure over bit rows.
        for k in 0..n {
            for i in 0..n {
                if bits::get(up[i], k) {
                    up[i] = bits::union(up[i], up[k]);
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if bits::get(up[i], j) && bits::get(up[j], i) {
                    return Err(PosetError::CycleBetween(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        let down = transpose(&up, n);
        Ok(FinitePoset { labels, up, down })
    }

    /// Builds a poset from rows already known to be a reflexive, transitive,
    /// antisymmetric relation. Used by enumerators that maintain the closure
    /// invariant themselves; debug builds re-verify it.
    pub(crate) fn from_closed_rows(labels: Vec<String>, up: Vec<Row>) -> Self {
        let n = labels.len();
        debug_assert!(n > 0 && n <= MAX_ELEMENTS);
        debug_assert!((0..n).all(|i| bits::get(up[i], i)));
        // Transitivity: i <= j forces up(j) to sit inside up(i).
        debug_assert!((0..n)
            .all(|i| bits::members(up[i]).into_iter().all(|j| bits::is_subset(up[j], up[i]))));
        let down = transpose(&up, n);
        FinitePoset { labels, up, down }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True when the poset has exactly one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Element labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of element `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Order relation.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        bits::get(self.up[i], j)
    }

    /// Strict order.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Up-set of `i` as a bit row (includes `i`).
    pub fn up_row(&self, i: usize) -> Row {
        self.up[i]
    }

    /// Down-set of `i` as a bit row (includes `i`).
    pub fn down_row(&self, i: usize) -> Row {
        self.down[i]
    }

    /// Upper covers of `i`: minimal elements strictly above it.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let strict = bits::diff(self.up[i], bits::singleton(i));
        bits::members(strict)
            .into_iter()
            .filter(|&j| {
                let between = bits::inter(strict, self.down[j]);
                between == bits::singleton(j)
            })
            .collect()
    }

    /// Lower covers of `i`: maximal elements strictly below it.
    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        let strict = bits::diff(self.down[i], bits::singleton(i));
        bits::members(strict)
            .into_iter()
            .filter(|&j| {
                let between = bits::inter(strict, self.up[j]);
                between == bits::singleton(j)
            })
            .collect()
    }

    /// Elements with nothing strictly below them.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i] == bits::singleton(i)).collect()
    }

    /// Elements with nothing strictly above them.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i] == bits::singleton(i)).collect()
    }

    /// Global least and greatest elements, when present.
    pub fn bounds(&self) -> (Option<usize>, Option<usize>) {
        let n = self.len();
        let all = bits::full(n);
        let bottom = (0..n).find(|&i| self.up[i] == all);
        let top = (0..n).find(|&i| self.down[i] == all);
        (bottom, top)
    }

    /// True when `r` is downward closed.
    pub fn is_downset(&self, r: Row) -> bool {
        bits::members(r).into_iter().all(|i| bits::is_subset(self.down[i], r))
    }

    /// True when `r` is upward closed.
    pub fn is_upset(&self, r: Row) -> bool {
        bits::members(r).into_iter().all(|i| bits::is_subset(self.up[i], r))
    }

    /// All downward closed subsets, sorted by size then lexicographically.
    /// Intended for desk-scale posets; the count is exponential in the
    /// width of the poset.
    pub fn downsets(&self) -> Vec<Row> {
        let n = self.len();
        // Grow downsets one element at a time in a fixed linear extension:
        // visiting elements in an order compatible with the poset lets each
        // downset be extended by `i` exactly when down(i) minus i is present.
        let order = self.linear_extension();
        let mut family: Vec<Row> = vec![bits::EMPTY];
        for &i in &order {
            let need = bits::diff(self.down[i], bits::singleton(i));
            let mut grown: Vec<Row> = family
                .iter()
                .filter(|d| bits::is_subset(need, **d))
                .map(|d| bits::union(*d, bits::singleton(i)))
                .collect();
            family.append(&mut grown);
        }
        debug_assert!(family.contains(&bits::full(n)));
        family.sort_by_key(|r| bits::size_lex_key(*r));
        family
    }

    /// Indices in an order compatible with the partial order (smaller first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (bits::count(self.down[i]), i));
        order
    }

    /// The induced subposet on the given members, in the order listed.
    pub fn induced_subposet(&self, members: &[usize]) -> Result<FinitePoset, PosetError> {
        if members.is_empty() {
            return Err(PosetError::Empty);
        }
        let mut labels = Vec::with_capacity(members.len());
        for &m in members {
            if m >= self.len() {
                return Err(PosetError::IndexOutOfRange(m));
            }
            labels.push(self.labels[m].clone());
        }
        let mut up = vec![bits::EMPTY; members.len()];
        for (a, &ma) in members.iter().enumerate() {
            for (b, &mb) in members.iter().enumerate() {
                if self.leq(ma, mb) {
                    bits::set(&mut up[a], b);
                }
            }
        }
        Ok(FinitePoset::from_closed_rows(labels, up))
    }

    /// Longest-chain height of each element (minimal elements have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut h = vec![0usize; n];
        for &i in &self.linear_extension() {
            let below = bits::diff(self.down[i], bits::singleton(i));
            h[i] = bits::members(below).into_iter().map(|j| h[j] + 1).max().unwrap_or(0);
        }
        h
    }

    /// A canonical certificate: the order matrix rewritten under a canonical
    /// relabelling. Two posets are isomorphic exactly when their
    /// certificates agree.
    pub fn canonical_cert(&self) -> Vec<Row> {
        let perm = self.canonical_permutation();
        let n = self.len();
        let mut cert = vec![bits::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                if self.leq(perm[i], perm[j]) {
                    bits::set(&mut cert[i], j);
                }
            }
        }
        cert
    }

    /// True when the two posets are isomorphic (labels ignored).
    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        self.len() == other.len() && self.canonical_cert() == other.canonical_cert()
    }

    /// Canonical relabelling: a permutation `perm` such that reading the
    /// order matrix along `perm` yields the lexicographically least matrix
    /// among all relabellings compatible with the invariant partition.
    fn canonical_permutation(&self) -> Vec<usize> {
        let n = self.len();
        let class_of = self.refinement_classes();
        let nclasses = class_of.iter().max().map(|m| m + 1).unwrap_or(0);
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); nclasses];
        for (i, &c) in class_of.iter().enumerate() {
            classes[c].push(i);
        }
        // Fast path: the invariant partition is discrete.
        if classes.iter().all(|c| c.len() == 1) {
            return classes.into_iter().map(|c| c[0]).collect();
        }
        // Which class occupies each position of the canonical order.
        let mut slot_class = Vec::with_capacity(n);
        for (c, members) in classes.iter().enumerate() {
            slot_class.extend(std::iter::repeat(c).take(members.len()));
        }
        let mut search = CanonSearch {
            poset: self,
            classes: &classes,
            slot_class: &slot_class,
            perm: Vec::with_capacity(n),
            used: vec![false; n],
            current: Vec::with_capacity(n * n),
            best: None,
            best_perm: None,
        };
        search.run(0);
        search.best_perm.expect("canonical search visits at least one leaf")
    }

    /// Iteratively refined invariant classes; class ids are ordered by the
    /// invariant key, so they are themselves isomorphism-invariant.
    fn refinement_classes(&self) -> Vec<usize> {
        let n = self.len();
        let heights = self.heights();
        let mut key: Vec<Vec<usize>> = (0..n)
            .map(|i| vec![heights[i], bits::count(self.down[i]), bits::count(self.up[i])])
            .collect();
        let mut class_of = assign_classes(&key);
        loop {
            for i in 0..n {
                let mut lower: Vec<usize> =
                    bits::members(bits::diff(self.down[i], bits::singleton(i)))
                        .into_iter()
                        .map(|j| class_of[j])
                        .collect();
                let mut upper: Vec<usize> =
                    bits::members(bits::diff(self.up[i], bits::singleton(i)))
                        .into_iter()
                        .map(|j| class_of[j])
                        .collect();
                lower.sort_unstable();
                upper.sort_unstable();
                key[i] = Vec::with_capacity(2 + lower.len() + upper.len() + 1);
                key[i].push(class_of[i]);
                key[i].push(lower.len());
                key[i].extend(lower);
                key[i].push(upper.len());
                key[i].extend(upper);
            }
            let refined = assign_classes(&key);
            if refined == class_of {
                return class_of;
            }
            class_of = refined;
        }
    }
}

fn transpose(up: &[Row], n: usize) -> Vec<Row> {
    let mut down = vec![bits::EMPTY; n];
    for i in 0..n {
        for j in bits::members(up[i]) {
            bits::set(&mut down[j], i);
        }
    }
    down
}

fn assign_classes(keys: &[Vec<usize>]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<usize>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("own key present"))
        .collect()
}

/// Depth-first search for the lexicographically least order matrix over all
/// class-respecting relabellings. The matrix is compared as a growing bit
/// string: placing element `k` appends its relations to the already placed
/// elements (row then column), so prefixes prune most branches.
struct CanonSearch<'a> {
    poset: &'a FinitePoset,
    classes: &'a [Vec<usize>],
    slot_class: &'a [usize],
    perm: Vec<usize>,
    used: Vec<bool>,
    current: Vec<bool>,
    best: Option<Vec<bool>>,
    best_perm: Option<Vec<usize>>,
}

impl<'a> CanonSearch<'a> {
    fn run(&mut self, pos: usize) {
        let n = self.poset.len();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some(b) => self.current < *b,
            };
            if better {
                self.best = Some(self.current.clone());
                self.best_perm = Some(self.perm.clone());
            }
            return;
        }
        let candidates: Vec<usize> = self.classes[self.slot_class[pos]]
            .iter()
            .copied()
            .filter(|&e| !self.used[e])
            .collect();
        for e in candidates {
            let mark = self.current.len();
            for &q in self.perm.iter() {
                self.current.push(self.poset.leq(e, q));
            }
            for &q in self.perm.iter() {
                self.current.push(self.poset.leq(q, e));
            }
            let prune = match &self.best {
                Some(b) => self.current.as_slice() > &b[..self.current.len()],
                None => false,
            };
            if !prune {
                self.used[e] = true;
                self.perm.push(e);
                self.run(pos + 1);
                self.perm.pop();
                self.used[e] = false;
            }
            self.current.truncate(mark);
        }
    }
}

/// Parses the poset text format:
///
/// ```text
/// # comment
/// elements: a b c
/// a < b
/// b < c
/// ```
pub fn parse_poset(text: &str) -> Result<FinitePoset, PosetError> {
    let mut labels: Option<Vec<String>> = None;
    let mut relations: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("elements:") {
            if labels.is_some() {
                return Err(PosetError::Parse(lineno, "duplicate elements line".into()));
            }
            labels = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some((a, b)) = line.split_once('<') {
            let a = a.trim();
            let b = b.trim();
            if a.is_empty()
                || b.is_empty()
                || a.contains(char::is_whitespace)
                || b.contains(char::is_whitespace)
            {
                return Err(PosetError::Parse(lineno, format!("malformed relation {:?}", line)));
            }
            relations.push((a.to_string(), b.to_string()));
        } else {
            return Err(PosetError::Parse(lineno, format!("unrecognised line {:?}", line)));
        }
    }
    let labels = labels.ok_or_else(|| PosetError::Parse(0, "missing elements line".into()))?;
    let poset_labels = labels.clone();
    let mut pairs = Vec::with_capacity(relations.len());
    for (a, b) in relations {
        let ia = labels.iter().position(|l| *l == a).ok_or(PosetError::UnknownLabel(a))?;
        let ib = labels.iter().position(|l| *l == b).ok_or(PosetError::UnknownLabel(b))?;
        pairs.push((ia, ib));
    }
    FinitePoset::new(poset_labels, &pairs)
}

/// All posets on `n` labelled elements `p0..p{n-1}`.
///
/// Works by extending each poset on the first `k` elements with a new
/// element whose strict down-set `D` and strict up-set `U` are chosen among
/// the downsets/upsets of the smaller poset with `D x U` already related.
/// Every labelled poset arises exactly once this way.
pub fn all_posets(n: usize) -> Vec<FinitePoset> {
    assert!(n >= 1 && n <= 8, "labelled poset enumeration is meant for small n");
    let labels: Vec<String> = (0..n).map(|i| format!("p{}", i)).collect();
    let mut current: Vec<Vec<Row>> = vec![vec![bits::singleton(0)]];
    for k in 1..n {
        let mut next = Vec::new();
        for rows in &current {
            let base = FinitePoset::from_closed_rows(
                labels[..k].iter().cloned().collect(),
                rows.clone(),
            );
            let downsets = base.downsets();
            for d in &downsets {
                for dc in &downsets {
                    let u = bits::complement(*dc, k);
                    if !bits::is_subset(*d, *dc) {
                        continue; // D and U must be disjoint
                    }
                    // every element of D must lie below every element of U
                    if !bits::members(*d).into_iter().all(|i| bits::is_subset(u, base.up_row(i))) {
                        continue;
                    }
                    let mut rows2 = rows.clone();
                    let mut newrow = bits::singleton(k);
                    newrow = bits::union(newrow, u);
                    for i in bits::members(*d) {
                        bits::set(&mut rows2[i], k);
                    }
                    rows2.push(newrow);
                    next.push(rows2);
                }
            }
        }
        current = next;
    }
    current
        .into_iter()
        .map(|rows| FinitePoset::from_closed_rows(labels.clone(), rows))
        .collect()
}

/// A finite lattice: a poset together with total meet/join tables and its
/// bounds. Tables are indexed `i * len + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<u16>,
    join: Vec<u16>,
    bottom: usize,
    top: usize,
}

/// Why a poset fails to be a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFailure {
    /// The offending pair.
    pub pair: (usize, usize),
    /// True when the pair lacks a meet, false when it lacks a join.
    pub missing_meet: bool,
}

/// Outcome of the lattice check, with bound diagnostics either way.
#[derive(Debug, Clone)]
pub enum LatticeCheck {
    /// The poset is a lattice.
    Lattice(FiniteLattice),
    /// The poset is not a lattice; reports the first failing pair and
    /// whatever global bounds exist.
    NotLattice { failure: LatticeFailure, bottom: Option<usize>, top: Option<usize> },
}

/// Decides whether the poset is a lattice by searching greatest lower and
/// least upper bounds for every pair.
pub fn check_lattice(poset: &FinitePoset) -> LatticeCheck {
    let n = poset.len();
    let mut meet = vec![0u16; n * n];
    let mut join = vec![0u16; n * n];
    for i in 0..n {
        for j in i..n {
            let lower = bits::inter(poset.down_row(i), poset.down_row(j));
            match bound_of(poset, lower, true) {
                Some(m) => {
                    meet[i * n + j] = m as u16;
                    meet[j * n + i] = m as u16;
                }
                None => {
                    let (bottom, top) = poset.bounds();
                    return LatticeCheck::NotLattice {
                        failure: LatticeFailure { pair: (i, j), missing_meet: true },
                        bottom,
                        top,
                    };
                }
            }
            let upper = bits::inter(poset.up_row(i), poset.up_row(j));
            match bound_of(poset, upper, false) {
                Some(m) => {
                    join[i * n + j] = m as u16;
                    join[j * n + i] = m as u16;
                }
                None => {
                    let (bottom, top) = poset.bounds();
                    return LatticeCheck::NotLattice {
                        failure: LatticeFailure { pair: (i, j), missing_meet: false },
                        bottom,
                        top,
                    };
                }
            }
        }
    }
    let (bottom, top) = poset.bounds();
    match (bottom, top) {
        (Some(b), Some(t)) => LatticeCheck::Lattice(FiniteLattice {
            poset: poset.clone(),
            meet,
            join,
            bottom: b,
            top: t,
        }),
        _ => unreachable!("a poset with all pairwise meets and joins is bounded"),
    }
}

/// The greatest element of `candidates` when `greatest`, else the least,
/// provided it exists inside `candidates`.
fn bound_of(poset: &FinitePoset, candidates: Row, greatest: bool) -> Option<usize> {
    bits::members(candidates).into_iter().find(|&m| {
        if greatest {
            bits::is_subset(candidates, poset.down_row(m))
        } else {
            bits::is_subset(candidates, poset.up_row(m))
        }
    })
}

/// Convenience wrapper returning the lattice when the poset is one.
pub fn is_lattice(poset: &FinitePoset) -> Option<FiniteLattice> {
    match check_lattice(poset) {
        LatticeCheck::Lattice(l) => Some(l),
        LatticeCheck::NotLattice { .. } => None,
    }
}

impl FiniteLattice {
    /// Builds a lattice directly from tables known to be correct by
    /// construction (set families under intersection/union). Debug builds
    /// verify the tables against the order.
    pub(crate) fn from_tables_unchecked(
        poset: FinitePoset,
        meet: Vec<u16>,
        join: Vec<u16>,
        bottom: usize,
        top: usize,
    ) -> Self {
        let lattice = FiniteLattice { poset, meet, join, bottom, top };
        debug_assert!(lattice.verify_tables().is_ok());
        lattice
    }

    /// Underlying poset.
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    /// Never true; lattices are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Label of element `i`.
    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    /// Order relation.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    /// Meet (greatest lower bound).
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j] as usize
    }

    /// Join (least upper bound).
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j] as usize
    }

    /// Least element.
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Greatest element.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Meet of an arbitrary list (empty list gives the top).
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |a, b| self.meet(a, b))
    }

    /// Join of an arbitrary list (empty list gives the bottom).
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    /// Re-verifies the meet/join tables against the order by scan:
    /// each entry must be a bound and the best such.
    pub fn verify_tables(&self) -> Result<(), LatticeFailure> {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                let m = self.meet(i, j);
                let lower = bits::inter(self.poset.down_row(i), self.poset.down_row(j));
                if !bits::get(lower, m) || !bits::is_subset(lower, self.poset.down_row(m)) {
                    return Err(LatticeFailure { pair: (i, j), missing_meet: true });
                }
                let v = self.join(i, j);
                let upper = bits::inter(self.poset.up_row(i), self.poset.up_row(j));
                if !bits::get(upper, v) || !bits::is_subset(upper, self.poset.up_row(v)) {
                    return Err(LatticeFailure { pair: (i, j), missing_meet: false });
                }
            }
        }
        Ok(())
    }

    /// Elements that are not the bottom and cannot be written as a join of
    /// two strictly smaller elements.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| {
                x != self.bottom
                    && !(0..n).any(|a| {
                        (0..n).any(|b| a != x && b != x && self.join(a, b) == x)
                    })
            })
            .collect()
    }

    /// Elements that are not the top and cannot be written as a meet of two
    /// strictly larger elements.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| {
                x != self.top
                    && !(0..n).any(|a| {
                        (0..n).any(|b| a != x && b != x && self.meet(a, b) == x)
                    })
            })
            .collect()
    }

    /// True when the two lattices are isomorphic as posets (equivalently as
    /// lattices, since order isomorphisms preserve bounds).
    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.poset.is_isomorphic(&other.poset)
    }
}

/// The kind of forbidden sublattice found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenKind {
    /// Diamond: three pairwise incomparable middles.
    M3,
    /// Pentagon: exactly one comparable pair among the middles.
    N5,
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenKind::M3 => write!(f, "M3"),
            ForbiddenKind::N5 => write!(f, "N5"),
        }
    }
}

/// A five-element sublattice isomorphic to M3 or N5, listed as
/// `[bottom, middles.., top]` with the middles in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSublattice {
    /// Diamond or pentagon.
    pub kind: ForbiddenKind,
    /// Elements of the sublattice.
    pub elements: [usize; 5],
}

/// Outcome of the distributivity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributivityVerdict {
    /// True when `a /\ (b \/ c) = (a /\ b) \/ (a /\ c)` for all triples.
    pub distributive: bool,
    /// Lexicographically least failing triple, when not distributive.
    pub witness: Option<[usize; 3]>,
    /// A forbidden sublattice found by independent subset search, when not
    /// distributive.
    pub forbidden: Option<ForbiddenSublattice>,
}

/// Scans all triples for the distributive law; on failure also locates an
/// M3 or N5 sublattice by the independent subset search.
pub fn is_distributive(l: &FiniteLattice) -> DistributivityVerdict {
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = l.meet(a, l.join(b, c));
                let rhs = l.join(l.meet(a, b), l.meet(a, c));
                if lhs != rhs {
                    let forbidden = find_forbidden_sublattice(l);
                    return DistributivityVerdict {
                        distributive: false,
                        witness: Some([a, b, c]),
                        forbidden,
                    };
                }
            }
        }
    }
    DistributivityVerdict { distributive: true, witness: None, forbidden: None }
}

/// Searches five-element subsets closed under meet and join for a copy of
/// M3 or N5. Runs independently of the distributivity scan so the two
/// routes can cross-check each other.
pub fn find_forbidden_sublattice(l: &FiniteLattice) -> Option<ForbiddenSublattice> {
    let n = l.len();
    // Subsets are generated as (bottom b, top t, middles x < y < z) with
    // b = x /\ y = x /\ z = y /\ z patterns checked afterwards; closure under
    // meet/join inside the subset is what makes it a sublattice.
    for x in 0..n {
        for y in (x + 1)..n {
            for z in (y + 1)..n {
                let candidates = [
                    (l.meet(l.meet(x, y), z), l.join(l.join(x, y), z)),
                ];
                for &(b, t) in &candidates {
                    let set = [b, x, y, z, t];
                    if has_duplicates(&set) {
                        continue;
                    }
                    if let Some(kind) = classify_five(l, b, [x, y, z], t) {
                        return Some(ForbiddenSublattice { kind, elements: set });
                    }
                }
            }
        }
    }
    None
}

fn has_duplicates(set: &[usize; 5]) -> bool {
    for i in 0..5 {
        for j in (i + 1)..5 {
            if set[i] == set[j] {
                return true;
            }
        }
    }
    false
}

/// Decides whether `{b, m1, m2, m3, t}` is a sublattice isomorphic to M3 or
/// N5. The middles arrive in ascending index order.
fn classify_five(l: &FiniteLattice, b: usize, mids: [usize; 3], t: usize) -> Option<ForbiddenKind> {
    // b must be below and t above every middle.
    for &m in &mids {
        if !l.leq(b, m) || !l.leq(m, t) {
            return None;
        }
    }
    let comparable: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .filter(|&(i, j)| l.leq(mids[i], mids[j]) || l.leq(mids[j], mids[i]))
        .collect();
    match comparable.len() {
        0 => {
            // M3: every distinct pair of middles meets at b and joins at t.
            for &(i, j) in &[(0, 1), (0, 2), (1, 2)] {
                if l.meet(mids[i], mids[j]) != b || l.join(mids[i], mids[j]) != t {
                    return None;
                }
            }
            Some(ForbiddenKind::M3)
        }
        1 => {
            // N5: the comparable pair (u < v) and the outlier w satisfy
            // u /\ w = v /\ w = b and u \/ w = v \/ w = t.
            let (i, j) = comparable[0];
            let k = 3 - i - j;
            let w = mids[k];
            let (u, v) = if l.leq(mids[i], mids[j]) {
                (mids[i], mids[j])
            } else {
                (mids[j], mids[i])
            };
            if u == v || l.meet(u, w) != b || l.meet(v, w) != b {
                return None;
            }
            if l.join(u, w) != t || l.join(v, w) != t {
                return None;
            }
            Some(ForbiddenKind::N5)
        }
        _ => None,
    }
}

/// The lattice of downsets of a poset, with each element's member set.
#[derive(Debug, Clone)]
pub struct DownsetLattice {
    /// The downsets ordered by inclusion.
    pub lattice: FiniteLattice,
    /// `members[i]` is the downset represented by lattice element `i`.
    pub members: Vec<Row>,
}

/// Builds the lattice of all downsets of `poset`, ordered by inclusion.
/// Meets are intersections, joins are unions; both stay downsets, so the
/// tables come straight from the set algebra.
pub fn downset_lattice(poset: &FinitePoset) -> Result<DownsetLattice, PosetError> {
    let family = poset.downsets();
    let lattice = lattice_of_set_family(&family, poset.labels())?;
    Ok(DownsetLattice { lattice, members: family })
}

/// Builds a lattice from a family of subsets closed under union and
/// intersection, sorted by `size_lex_key`. Label of each element is the
/// braced list of member labels.
pub(crate) fn lattice_of_set_family(
    family: &[Row],
    point_labels: &[String],
) -> Result<FiniteLattice, PosetError> {
    let n = family.len();
    if n == 0 {
        return Err(PosetError::Empty);
    }
    if n > MAX_ELEMENTS {
        return Err(PosetError::TooLarge(n));
    }
    debug_assert!(family.windows(2).all(|w| bits::size_lex_key(w[0]) < bits::size_lex_key(w[1])));
    let labels: Vec<String> = family.iter().map(|r| set_label(*r, point_labels)).collect();
    let mut up = vec![bits::EMPTY; n];
    for i in 0..n {
        for j in 0..n {
            if bits::is_subset(family[i], family[j]) {
                bits::set(&mut up[i], j);
            }
        }
    }
    let poset = FinitePoset::from_closed_rows(labels, up);
    let index_of = |r: Row| -> usize {
        family
            .binary_search_by_key(&bits::size_lex_key(r), |f| bits::size_lex_key(*f))
            .expect("family closed under the set operation")
    };
    let mut meet = vec![0u16; n * n];
    let mut join = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            meet[i * n + j] = index_of(bits::inter(family[i], family[j])) as u16;
            join[i * n + j] = index_of(bits::union(family[i], family[j])) as u16;
        }
    }
    let bottom = index_of(family[0]);
    let top = index_of(family[n - 1]);
    debug_assert_eq!(bottom, 0);
    debug_assert_eq!(top, n - 1);
    Ok(FiniteLattice::from_tables_unchecked(poset, meet, join, bottom, top))
}

/// Braced label for a subset, e.g. `{a b}`.
pub(crate) fn set_label(r: Row, point_labels: &[String]) -> String {
    let names: Vec<&str> =
        bits::members(r).into_iter().map(|i| point_labels[i].as_str()).collect();
    format!("{{{}}}", names.join(" "))
}

/// Errors raised when a member set fails the lattice-ideal axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    /// Ideals are nonempty.
    Empty,
    /// `witness` is in the set but `below` (smaller) is not.
    NotDownwardClosed { witness: usize, below: usize },
    /// Both elements are in the set but their join is not.
    NotJoinClosed { left: usize, right: usize },
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::Empty => write!(f, "ideal must be nonempty"),
            IdealError::NotDownwardClosed { witness, below } => {
                write!(f, "element {} is present but smaller element {} is not", witness, below)
            }
            IdealError::NotJoinClosed { left, right } => {
                write!(f, "elements {} and {} are present but their join is not", left, right)
            }
        }
    }
}

impl std::error::Error for IdealError {}

/// A lattice ideal: a nonempty, downward closed, join closed subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeIdeal<'a> {
    lattice: &'a FiniteLattice,
    members: Row,
}

impl<'a> LatticeIdeal<'a> {
    /// Validates the axioms and wraps the member set.
    pub fn new(lattice: &'a FiniteLattice, members: Row) -> Result<Self, IdealError> {
        if bits::is_empty(members) {
            return Err(IdealError::Empty);
        }
        for i in bits::members(members) {
            for j in bits::members(lattice.poset().down_row(i)) {
                if !bits::get(members, j) {
                    return Err(IdealError::NotDownwardClosed { witness: i, below: j });
                }
            }
        }
        let elems = bits::members(members);
        for &i in &elems {
            for &j in &elems {
                if !bits::get(members, lattice.join(i, j)) {
                    return Err(IdealError::NotJoinClosed { left: i, right: j });
                }
            }
        }
        Ok(LatticeIdeal { lattice, members })
    }

    /// The principal ideal below `g`.
    pub fn principal(lattice: &'a FiniteLattice, g: usize) -> Self {
        LatticeIdeal { lattice, members: lattice.poset().down_row(g) }
    }

    /// Member set.
    pub fn members(&self) -> Row {
        self.members
    }

    /// In a finite lattice every ideal is principal: the join of all
    /// members belongs to the ideal and generates it.
    pub fn generator(&self) -> usize {
        self.lattice.join_all(bits::members(self.members))
    }

    /// True when the ideal omits at least one element.
    pub fn is_proper(&self) -> bool {
        !bits::get(self.members, self.lattice.top())
    }

    /// Prime: proper, and whenever a meet lands in the ideal one of the two
    /// factors already does.
    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let n = self.lattice.len();
        for a in 0..n {
            for b in 0..n {
                if bits::get(self.members, self.lattice.meet(a, b))
                    && !bits::get(self.members, a)
                    && !bits::get(self.members, b)
                {
                    return false;
                }
            }
        }
        true
    }
}

/// The lattice of all ideals of a distributive lattice, with the ideal
/// member sets and their principal generators.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    /// Ideals ordered by inclusion.
    pub lattice: FiniteLattice,
    /// `ideal_members[i]` is the member set of ideal `i`.
    pub ideal_members: Vec<Row>,
    /// `generators[i]` is the generator of ideal `i`; the map `i -> g` is
    /// the isomorphism back to the original lattice.
    pub generators: Vec<usize>,
}

/// Enumerates all ideals of `l` (downsets closed under join) and returns
/// them as a lattice under inclusion. Requires distributivity so that the
/// ideal lattice is again distributive; the verdict is returned on failure.
pub fn ideal_lattice(l: &FiniteLattice) -> Result<IdealLattice, DistributivityVerdict> {
    let verdict = is_distributive(l);
    if !verdict.distributive {
        return Err(verdict);
    }
    let family: Vec<Row> = l
        .poset()
        .downsets()
        .into_iter()
        .filter(|d| !bits::is_empty(*d))
        .filter(|d| {
            let elems = bits::members(*d);
            elems.iter().all(|&i| elems.iter().all(|&j| bits::get(*d, l.join(i, j))))
        })
        .collect();
    let lattice = lattice_of_set_family(&family, l.poset().labels())
        .expect("ideal family is a valid set family");
    let generators: Vec<usize> =
        family.iter().map(|d| l.join_all(bits::members(*d))).collect();
    // The generator always lies in its ideal: joins of members stay members.
    for (d, &g) in family.iter().zip(&generators) {
        assert!(bits::get(*d, g), "finite lattice ideal must contain its join");
    }
    Ok(IdealLattice { lattice, ideal_members: family, generators })
}

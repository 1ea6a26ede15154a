//! A decomposition model of perfect complexes over k[x].
//!
//! Over a principal ideal domain every perfect complex splits as a finite
//! direct sum of shifted copies of `k[x]` and `k[x]/(f^n)` with `f` monic
//! irreducible. Objects here are exactly those formal sums in a canonical
//! order; there are no morphisms, but tensor products, supports and the
//! ideal-theoretic structure of the category are all computable, and the
//! derived tensor rule is pinned against an independent cohomology oracle
//! in the test suite.

use crate::poly::{
    self, factor, is_irreducible, FieldSpec, Irreducibility, Poly, PolyError, PrimeIdealKx,
};
use std::cmp::Ordering;
use std::fmt;

/// Errors raised by the perfect-complex model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfError {
    /// Operands live over different fields.
    FieldMismatch,
    /// A torsion generator must be monic irreducible with positive power.
    BadTorsionSummand(String),
    /// A quotient in the object syntax must be a prime power.
    NotPrimePower(String),
    /// The object syntax carried no field and no default was available.
    MissingField,
    /// A family operation found a zero object where none is allowed.
    ZeroMember,
    /// A multiplicative family must contain the unit.
    MissingUnit,
    /// A family is not closed under tensor at the level of supports.
    NotSupportClosed(String),
    /// The requested support has no single compact realisation.
    NoRealization(String),
    /// The ideal is not proper.
    NotProper,
    /// The sample family is empty.
    EmptyFamily,
    /// An underlying polynomial error.
    Poly(PolyError),
}

impl fmt::Display for PerfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerfError::FieldMismatch => write!(f, "objects live over different fields"),
            PerfError::BadTorsionSummand(s) => {
                write!(f, "bad torsion summand {}", s)
            }
            PerfError::NotPrimePower(s) => {
                write!(f, "quotient modulus {} is not a prime power", s)
            }
            PerfError::MissingField => {
                write!(f, "no coefficient field given and no default configured")
            }
            PerfError::ZeroMember => write!(f, "family contains the zero object"),
            PerfError::MissingUnit => write!(f, "family does not contain the unit object"),
            PerfError::NotSupportClosed(s) => {
                write!(f, "family is not tensor closed at the level of supports: {}", s)
            }
            PerfError::NoRealization(s) => {
                write!(f, "no single perfect complex has support {}", s)
            }
            PerfError::NotProper => write!(f, "ideal is not proper"),
            PerfError::EmptyFamily => write!(f, "family is empty"),
            PerfError::Poly(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for PerfError {}

impl From<PolyError> for PerfError {
    fn from(e: PolyError) -> Self {
        PerfError::Poly(e)
    }
}

/// An indecomposable perfect complex concentrated in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Indecomposable {
    /// A shifted copy of `k[x]`.
    Free,
    /// A shifted copy of `k[x]/(generator^power)`.
    Torsion {
        /// Monic irreducible generator.
        generator: Poly,
        /// Power, at least one.
        power: u32,
    },
}

impl Indecomposable {
    fn order_key(&self) -> (u8, Option<(&Poly, u32)>) {
        match self {
            Indecomposable::Free => (0, None),
            Indecomposable::Torsion { generator, power } => (1, Some((generator, *power))),
        }
    }
}

fn cmp_summands(a: &(i64, Indecomposable), b: &(i64, Indecomposable)) -> Ordering {
    a.0.cmp(&b.0).then_with(|| {
        let (ka, ta) = a.1.order_key();
        let (kb, tb) = b.1.order_key();
        ka.cmp(&kb).then_with(|| match (ta, tb) {
            (Some((fa, pa)), Some((fb, pb))) => fa.cmp(fb).then(pa.cmp(&pb)),
            _ => Ordering::Equal,
        })
    })
}

/// A perfect complex over k[x] as a canonical multiset of shifted
/// indecomposable summands, sorted by shift, then kind, then generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfObject {
    field: FieldSpec,
    summands: Vec<(i64, Indecomposable)>,
}

impl PerfObject {
    /// The zero object.
    pub fn zero(field: FieldSpec) -> PerfObject {
        PerfObject { field, summands: Vec::new() }
    }

    /// The tensor unit: `k[x]` in degree zero.
    pub fn unit(field: FieldSpec) -> PerfObject {
        PerfObject { field, summands: vec![(0, Indecomposable::Free)] }
    }

    /// A shifted free module.
    pub fn free(field: FieldSpec, shift: i64) -> PerfObject {
        PerfObject { field, summands: vec![(shift, Indecomposable::Free)] }
    }

    /// A shifted torsion module on a monic irreducible generator.
    pub fn torsion(generator: &Poly, power: u32, shift: i64) -> Result<PerfObject, PerfError> {
        PerfObject::from_summands(
            generator.field(),
            vec![(shift, Indecomposable::Torsion { generator: generator.clone(), power })],
        )
    }

    /// Builds an object from summands, validating torsion generators and
    /// sorting into canonical order.
    pub fn from_summands(
        field: FieldSpec,
        mut summands: Vec<(i64, Indecomposable)>,
    ) -> Result<PerfObject, PerfError> {
        for (_, s) in &summands {
            if let Indecomposable::Torsion { generator, power } = s {
                let ok = generator.field() == field
                    && *power >= 1
                    && *generator == generator.monic()
                    && matches!(is_irreducible(generator), Irreducibility::Irreducible);
                if !ok {
                    return Err(PerfError::BadTorsionSummand(format!(
                        "({})^{}",
                        generator, power
                    )));
                }
            }
        }
        summands.sort_by(cmp_summands);
        Ok(PerfObject { field, summands })
    }

    /// Coefficient field.
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Summands in canonical order.
    pub fn summands(&self) -> &[(i64, Indecomposable)] {
        &self.summands
    }

    /// True for the zero object.
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &PerfObject) -> Result<PerfObject, PerfError> {
        if self.field != other.field {
            return Err(PerfError::FieldMismatch);
        }
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        summands.sort_by(cmp_summands);
        Ok(PerfObject { field: self.field, summands })
    }

    /// Suspension by `k`.
    pub fn shift(&self, k: i64) -> PerfObject {
        PerfObject {
            field: self.field,
            summands: self.summands.iter().map(|(s, m)| (s + k, m.clone())).collect(),
        }
    }
}

impl fmt::Display for PerfObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (shift, m) in &self.summands {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *shift != 0 {
                write!(f, "S^{} ", shift)?;
            }
            match m {
                Indecomposable::Free => write!(f, "k[x]")?,
                Indecomposable::Torsion { generator, power } => {
                    // Print the expanded modulus so the output re-parses.
                    write!(f, "k[x]/({})", generator.pow(*power))?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the object syntax, e.g. `S^0 k[x] + S^1 k[x]/(x^2) mod 2` or
/// `k[x]/(x^2-1) over Q`. A trailing `mod p` / `over Q` names the field;
/// otherwise `default_field` is used. Quotient moduli are factored and
/// must be prime powers, except that a reducible squarefree-free modulus
/// splits by the Chinese remainder theorem only when given as a prime
/// power, so `k[x]/(x^2+x)` is rejected rather than silently split.
pub fn parse_object(
    text: &str,
    default_field: Option<FieldSpec>,
) -> Result<PerfObject, PerfError> {
    let (body, suffix_field) = poly::parse_poly_spec(text).map_err(PerfError::Poly)?;
    let field = suffix_field.or(default_field).ok_or(PerfError::MissingField)?;
    // Split on '+' at zero parenthesis depth.
    let mut terms: Vec<String> = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in body.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| PerfError::Poly(PolyError::Parse("unbalanced )".into())))?;
                current.push(ch);
            }
            '+' if depth == 0 => terms.push(std::mem::take(&mut current)),
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(PerfError::Poly(PolyError::Parse("unbalanced (".into())));
    }
    terms.push(current);
    let mut summands = Vec::new();
    for raw in terms {
        let term = raw.trim();
        if term.is_empty() {
            return Err(PerfError::Poly(PolyError::Parse("empty summand".into())));
        }
        if term == "0" {
            continue;
        }
        let (shift, atom) = match term.strip_prefix("S^") {
            Some(rest) => {
                let (num, atom) = rest.split_once(char::is_whitespace).ok_or_else(|| {
                    PerfError::Poly(PolyError::Parse(format!("bad shift in {:?}", term)))
                })?;
                let shift: i64 = num.parse().map_err(|_| {
                    PerfError::Poly(PolyError::Parse(format!("bad shift {:?}", num)))
                })?;
                (shift, atom.trim())
            }
            None => (0, term),
        };
        if atom == "k[x]" {
            summands.push((shift, Indecomposable::Free));
            continue;
        }
        let inner = atom
            .strip_prefix("k[x]/(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| {
                PerfError::Poly(PolyError::Parse(format!("unrecognised summand {:?}", atom)))
            })?;
        let modulus = poly::parse_poly(inner, field).map_err(PerfError::Poly)?;
        if modulus.is_constant() {
            return Err(PerfError::NotPrimePower(modulus.to_string()));
        }
        let factors = factor(&modulus).map_err(PerfError::Poly)?;
        if factors.len() != 1 {
            return Err(PerfError::NotPrimePower(modulus.to_string()));
        }
        let (generator, power) = factors.into_iter().next().unwrap();
        summands.push((shift, Indecomposable::Torsion { generator, power }));
    }
    PerfObject::from_summands(field, summands)
}

/// Derived tensor product over k[x]. Free summands act as shifted units;
/// torsion summands on distinct irreducibles annihilate; equal generators
/// contribute the underived product and a Tor term one degree up, both
/// with the minimum power.
pub fn tensor(a: &PerfObject, b: &PerfObject) -> Result<PerfObject, PerfError> {
    if a.field() != b.field() {
        return Err(PerfError::FieldMismatch);
    }
    let mut summands: Vec<(i64, Indecomposable)> = Vec::new();
    for (s1, m1) in a.summands() {
        for (s2, m2) in b.summands() {
            let shift = s1 + s2;
            match (m1, m2) {
                (Indecomposable::Free, other) | (other, Indecomposable::Free) => {
                    summands.push((shift, other.clone()));
                }
                (
                    Indecomposable::Torsion { generator: f, power: n },
                    Indecomposable::Torsion { generator: g, power: m },
                ) => {
                    if f == g {
                        let k = (*n).min(*m);
                        let t = Indecomposable::Torsion { generator: f.clone(), power: k };
                        summands.push((shift, t.clone()));
                        summands.push((shift + 1, t));
                    }
                    // Distinct irreducibles are coprime: the derived tensor
                    // vanishes.
                }
            }
        }
    }
    summands.sort_by(cmp_summands);
    Ok(PerfObject { field: a.field(), summands })
}

/// Iterated tensor power; the zeroth power is the unit.
pub fn tensor_power(a: &PerfObject, n: u32) -> Result<PerfObject, PerfError> {
    let mut acc = PerfObject::unit(a.field());
    for _ in 0..n {
        acc = tensor(&acc, a)?;
    }
    Ok(acc)
}

/// The support of an object inside the spectrum: either everything (a free
/// summand is supported everywhere) or a finite set of closed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportSet {
    /// The whole spectrum.
    Whole,
    /// Finitely many closed points, named by monic irreducible generators,
    /// sorted and deduplicated.
    ClosedPoints(Vec<Poly>),
}

impl SupportSet {
    /// The empty support.
    pub fn empty() -> SupportSet {
        SupportSet::ClosedPoints(Vec::new())
    }

    /// True for the empty support.
    pub fn is_empty(&self) -> bool {
        matches!(self, SupportSet::ClosedPoints(v) if v.is_empty())
    }

    /// Union.
    pub fn union(&self, other: &SupportSet) -> SupportSet {
        match (self, other) {
            (SupportSet::Whole, _) | (_, SupportSet::Whole) => SupportSet::Whole,
            (SupportSet::ClosedPoints(a), SupportSet::ClosedPoints(b)) => {
                let mut v = a.clone();
                v.extend(b.iter().cloned());
                v.sort();
                v.dedup();
                SupportSet::ClosedPoints(v)
            }
        }
    }

    /// Intersection.
    pub fn inter(&self, other: &SupportSet) -> SupportSet {
        match (self, other) {
            (SupportSet::Whole, x) | (x, SupportSet::Whole) => x.clone(),
            (SupportSet::ClosedPoints(a), SupportSet::ClosedPoints(b)) => {
                SupportSet::ClosedPoints(
                    a.iter().filter(|f| b.contains(f)).cloned().collect(),
                )
            }
        }
    }

    /// Containment.
    pub fn is_subset(&self, other: &SupportSet) -> bool {
        match (self, other) {
            (_, SupportSet::Whole) => true,
            (SupportSet::Whole, SupportSet::ClosedPoints(_)) => false,
            (SupportSet::ClosedPoints(a), SupportSet::ClosedPoints(b)) => {
                a.iter().all(|f| b.contains(f))
            }
        }
    }

    /// Whether a prime of k[x] lies in the support. The generic point lies
    /// only in the whole spectrum.
    pub fn contains_prime(&self, p: &PrimeIdealKx) -> bool {
        match (self, p) {
            (SupportSet::Whole, _) => true,
            (SupportSet::ClosedPoints(_), PrimeIdealKx::Zero) => false,
            (SupportSet::ClosedPoints(v), PrimeIdealKx::Closed(f)) => v.contains(f),
        }
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportSet::Whole => write!(f, "whole spectrum"),
            SupportSet::ClosedPoints(v) if v.is_empty() => write!(f, "empty"),
            SupportSet::ClosedPoints(v) => {
                let names: Vec<String> = v.iter().map(|g| format!("({})", g)).collect();
                write!(f, "{{{}}}", names.join(", "))
            }
        }
    }
}

/// The support of an object: the whole spectrum when a free summand is
/// present, otherwise the set of torsion generators.
pub fn support(e: &PerfObject) -> SupportSet {
    let mut gens: Vec<Poly> = Vec::new();
    for (_, m) in e.summands() {
        match m {
            Indecomposable::Free => return SupportSet::Whole,
            Indecomposable::Torsion { generator, .. } => gens.push(generator.clone()),
        }
    }
    gens.sort();
    gens.dedup();
    SupportSet::ClosedPoints(gens)
}

/// One verified support-datum axiom.
#[derive(Debug, Clone)]
pub struct SupportAxiom {
    /// Short axiom name.
    pub name: &'static str,
    /// True when no counterexample was found.
    pub holds: bool,
    /// Description of the first counterexample, if any.
    pub counterexample: Option<String>,
}

/// Report of the support-datum check over a sample family.
#[derive(Debug, Clone)]
pub struct SupportDatumReport {
    /// Axioms in a fixed order: zero and unit, suspension, sums, tensors,
    /// split triangles.
    pub axioms: Vec<SupportAxiom>,
    /// Number of ordered pairs inspected.
    pub pairs_checked: usize,
}

impl SupportDatumReport {
    /// True when every axiom holds.
    pub fn pass(&self) -> bool {
        self.axioms.iter().all(|a| a.holds)
    }
}

/// Verifies the support-datum axioms over a sample: normalisation on the
/// zero and unit objects, suspension invariance, additivity over direct
/// sums, the tensor formula, and the two-out-of-three containment for the
/// split triangles built from direct sums.
pub fn support_datum_check(sample: &[PerfObject]) -> Result<SupportDatumReport, PerfError> {
    let field = sample.first().ok_or(PerfError::EmptyFamily)?.field();
    if sample.iter().any(|e| e.field() != field) {
        return Err(PerfError::FieldMismatch);
    }
    let mut axioms = Vec::new();
    let mut record = |name: &'static str, counterexample: Option<String>| {
        axioms.push(SupportAxiom { name, holds: counterexample.is_none(), counterexample });
    };

    let zero_unit = if !support(&PerfObject::zero(field)).is_empty() {
        Some("supp(0) is nonempty".to_string())
    } else if support(&PerfObject::unit(field)) != SupportSet::Whole {
        Some("supp(unit) is not the whole spectrum".to_string())
    } else {
        None
    };
    record("zero and unit", zero_unit);

    let suspension = sample.iter().find_map(|e| {
        (support(&e.shift(1)) != support(e) || support(&e.shift(-1)) != support(e))
            .then(|| format!("suspension moved the support of {}", e))
    });
    record("suspension invariance", suspension);

    let mut pairs_checked = 0usize;
    let mut sums = None;
    let mut tensors = None;
    let mut triangles = None;
    for a in sample {
        for b in sample {
            pairs_checked += 1;
            let sum = a.direct_sum(b)?;
            if sums.is_none() && support(&sum) != support(a).union(&support(b)) {
                sums = Some(format!("supp mismatch on ({}) + ({})", a, b));
            }
            let prod = tensor(a, b)?;
            if tensors.is_none() && support(&prod) != support(a).inter(&support(b)) {
                tensors = Some(format!("supp mismatch on ({}) tensor ({})", a, b));
            }
            // Split triangle a -> a + b -> b: each vertex is supported in
            // the union of the other two.
            if triangles.is_none() {
                let sa = support(a);
                let sb = support(b);
                let ss = support(&sum);
                let ok = ss.is_subset(&sa.union(&sb))
                    && sa.is_subset(&ss.union(&sb))
                    && sb.is_subset(&sa.union(&ss));
                if !ok {
                    triangles = Some(format!("triangle failure on ({}) and ({})", a, b));
                }
            }
        }
    }
    record("direct sums", sums);
    record("tensor products", tensors);
    record("split triangles", triangles);
    Ok(SupportDatumReport { axioms, pairs_checked })
}

/// Membership of an object in the prime tensor ideal attached to a prime
/// of k[x]: the objects that die after localising there. At the generic
/// point these are the torsion objects; at a closed point `(f)`, the
/// torsion objects with no `f`-primary summand.
pub fn in_prime(e: &PerfObject, p: &PrimeIdealKx) -> bool {
    !support(e).contains_prime(p)
}

/// The Koszul object of `r`: the cone of multiplication by `r` on the
/// unit. Zero gives `k[x] + S^1 k[x]`, units give the zero object, and
/// otherwise the quotient `k[x]/(r)` splits by the Chinese remainder
/// theorem into primary torsion summands.
pub fn koszul(field: FieldSpec, r: &Poly) -> Result<PerfObject, PerfError> {
    if r.field() != field {
        return Err(PerfError::FieldMismatch);
    }
    if r.is_zero() {
        return PerfObject::unit(field).direct_sum(&PerfObject::free(field, 1));
    }
    if r.is_constant() {
        return Ok(PerfObject::zero(field));
    }
    let summands = factor(r)?
        .into_iter()
        .map(|(generator, power)| (0, Indecomposable::Torsion { generator, power }))
        .collect();
    PerfObject::from_summands(field, summands)
}

/// Whether `r` lies in the comparison ideal of the prime tensor ideal at
/// `p`: membership is decided by the Koszul object of `r` escaping the
/// ideal.
pub fn rho_contains(field: FieldSpec, p: &PrimeIdealKx, r: &Poly) -> Result<bool, PerfError> {
    let k = koszul(field, r)?;
    Ok(!in_prime(&k, p))
}

/// The comparison map on primes: sends the prime tensor ideal at `p` back
/// to a prime of k[x]. Structurally this is the identity on the name `p`;
/// the implementation probes the defining membership on the zero
/// polynomial, the unit, and the generator to pin the answer.
pub fn rho(field: FieldSpec, p: &PrimeIdealKx) -> Result<PrimeIdealKx, PerfError> {
    assert!(rho_contains(field, p, &Poly::zero(field))?, "0 lies in every comparison ideal");
    assert!(!rho_contains(field, p, &Poly::one(field))?, "units escape every comparison ideal");
    if let PrimeIdealKx::Closed(g) = p {
        assert!(rho_contains(field, p, g)?, "the generator lies in its own comparison ideal");
    }
    Ok(p.clone())
}

/// The comparison ideal computed by brute membership scan over all monic
/// polynomials of degree up to `max_degree` (finite fields only). Returns
/// the generic point when no nonzero member appears, else the closed point
/// on the gcd of all members found.
pub fn rho_by_scan(
    field: FieldSpec,
    p: &PrimeIdealKx,
    max_degree: usize,
) -> Result<PrimeIdealKx, PerfError> {
    let q = match field {
        FieldSpec::Modular(q) => q,
        FieldSpec::Rationals => {
            return Err(PerfError::Poly(PolyError::RationalsRejected(
                "comparison-ideal membership scan",
            )))
        }
    };
    assert!(rho_contains(field, p, &Poly::zero(field))?);
    let mut running: Option<Poly> = None;
    for d in 1..=max_degree {
        let mut counter = vec![0u64; d];
        loop {
            let mut coeffs: Vec<poly::Scalar> =
                counter.iter().map(|&c| poly::Scalar::Mod(c)).collect();
            coeffs.push(field.one());
            let candidate = Poly::new(field, coeffs);
            if rho_contains(field, p, &candidate)? {
                running = Some(match running {
                    None => candidate,
                    Some(g) => g.gcd(&candidate),
                });
            }
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                counter[i] += 1;
                if counter[i] < q {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    match running {
        None => Ok(PrimeIdealKx::Zero),
        Some(g) => Ok(PrimeIdealKx::closed(&g)?),
    }
}

/// Containment of primes of the spectrum as tensor ideals: the ideal at
/// `a` sits inside the ideal at `b` exactly when they agree or `b` is the
/// generic point, whose ideal contains all torsion objects.
pub fn prime_subseteq(a: &PrimeIdealKx, b: &PrimeIdealKx) -> bool {
    a == b || *b == PrimeIdealKx::Zero
}

/// A Thomason subset of the spectrum of k[x]: a finite set of closed
/// points, the set of all closed points, or everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThomasonKx {
    /// Finitely many closed points on monic irreducible generators,
    /// sorted and deduplicated.
    Finite(Vec<Poly>),
    /// All closed points; misses only the generic point.
    AllClosed,
    /// The whole spectrum.
    Whole,
}

impl ThomasonKx {
    /// Builds a finite Thomason subset, normalising and validating the
    /// generators.
    pub fn finite(mut gens: Vec<Poly>) -> Result<ThomasonKx, PerfError> {
        for g in &mut gens {
            *g = g.monic();
            if !matches!(is_irreducible(g), Irreducibility::Irreducible) {
                return Err(PerfError::BadTorsionSummand(g.to_string()));
            }
        }
        gens.sort();
        gens.dedup();
        Ok(ThomasonKx::Finite(gens))
    }
}

impl fmt::Display for ThomasonKx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThomasonKx::Finite(v) if v.is_empty() => write!(f, "empty"),
            ThomasonKx::Finite(v) => {
                let names: Vec<String> = v.iter().map(|g| format!("({})", g)).collect();
                write!(f, "{{{}}}", names.join(", "))
            }
            ThomasonKx::AllClosed => write!(f, "all closed points"),
            ThomasonKx::Whole => write!(f, "whole spectrum"),
        }
    }
}

/// A thick tensor ideal of the perfect complexes over k[x], in the shape
/// the classification gives: everything, or the torsion objects supported
/// on a Thomason set of closed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorIdealHandle {
    /// The whole category.
    Everything,
    /// Torsion objects supported inside the given closed-point set.
    TorsionOn(ClosedPointSpec),
}

/// Which closed points a torsion ideal allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedPointSpec {
    /// A finite set of monic irreducible generators, sorted.
    Finite(Vec<Poly>),
    /// All closed points.
    AllClosed,
}

impl fmt::Display for TensorIdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorIdealHandle::Everything => write!(f, "everything"),
            TensorIdealHandle::TorsionOn(ClosedPointSpec::AllClosed) => {
                write!(f, "torsion objects")
            }
            TensorIdealHandle::TorsionOn(ClosedPointSpec::Finite(v)) => {
                let names: Vec<String> = v.iter().map(|g| format!("({})", g)).collect();
                write!(f, "torsion objects on {{{}}}", names.join(", "))
            }
        }
    }
}

/// The support side of the classification: reads off the Thomason subset
/// of a tensor ideal.
pub fn phi(j: &TensorIdealHandle) -> ThomasonKx {
    match j {
        TensorIdealHandle::Everything => ThomasonKx::Whole,
        TensorIdealHandle::TorsionOn(ClosedPointSpec::AllClosed) => ThomasonKx::AllClosed,
        TensorIdealHandle::TorsionOn(ClosedPointSpec::Finite(v)) => ThomasonKx::Finite(v.clone()),
    }
}

/// The ideal side of the classification: the objects supported inside a
/// Thomason subset.
pub fn psi(v: &ThomasonKx) -> TensorIdealHandle {
    match v {
        ThomasonKx::Whole => TensorIdealHandle::Everything,
        ThomasonKx::AllClosed => TensorIdealHandle::TorsionOn(ClosedPointSpec::AllClosed),
        ThomasonKx::Finite(gens) => {
            TensorIdealHandle::TorsionOn(ClosedPointSpec::Finite(gens.clone()))
        }
    }
}

/// Membership of an object in a classified tensor ideal, decided through
/// its support.
pub fn ideal_member(e: &PerfObject, j: &TensorIdealHandle) -> bool {
    match j {
        TensorIdealHandle::Everything => true,
        TensorIdealHandle::TorsionOn(spec) => match support(e) {
            SupportSet::Whole => false,
            SupportSet::ClosedPoints(gens) => match spec {
                ClosedPointSpec::AllClosed => true,
                ClosedPointSpec::Finite(allowed) => gens.iter().all(|g| allowed.contains(g)),
            },
        },
    }
}

/// A perfect complex whose support is exactly the given Thomason subset.
/// The whole spectrum is realised by the unit and a finite set by the sum
/// of its residue objects; the set of all closed points is not the support
/// of any single perfect complex.
pub fn object_with_support(field: FieldSpec, v: &ThomasonKx) -> Result<PerfObject, PerfError> {
    match v {
        ThomasonKx::Whole => Ok(PerfObject::unit(field)),
        ThomasonKx::AllClosed => Err(PerfError::NoRealization(v.to_string())),
        ThomasonKx::Finite(gens) => {
            let summands = gens
                .iter()
                .map(|g| (0, Indecomposable::Torsion { generator: g.clone(), power: 1 }))
                .collect();
            PerfObject::from_summands(field, summands)
        }
    }
}

/// Finds a prime tensor ideal disjoint from a multiplicative family of
/// nonzero objects. The family must contain the unit and be tensor closed
/// at the level of supports; the supports then have the finite
/// intersection property, and the prime at any point of the common
/// intersection works. Preference order: the generic point first, then
/// closed points by generator order.
pub fn find_prime_avoiding(objs: &[PerfObject]) -> Result<PrimeIdealKx, PerfError> {
    if objs.is_empty() {
        return Err(PerfError::EmptyFamily);
    }
    let field = objs[0].field();
    if objs.iter().any(|e| e.field() != field) {
        return Err(PerfError::FieldMismatch);
    }
    if objs.iter().any(|e| e.is_zero()) {
        return Err(PerfError::ZeroMember);
    }
    if !objs.contains(&PerfObject::unit(field)) {
        return Err(PerfError::MissingUnit);
    }
    let supports: Vec<SupportSet> = objs.iter().map(support).collect();
    for (i, a) in objs.iter().enumerate() {
        for b in objs {
            let prod_supp = support(&tensor(a, b)?);
            if !supports.contains(&prod_supp) {
                return Err(PerfError::NotSupportClosed(format!(
                    "support of ({}) tensor ({}) is missing",
                    a, b
                )));
            }
            let _ = i;
        }
    }
    let common = supports
        .iter()
        .fold(SupportSet::Whole, |acc, s| acc.inter(s));
    match common {
        SupportSet::Whole => Ok(PrimeIdealKx::Zero),
        SupportSet::ClosedPoints(gens) => {
            // Support-level closure gives the finite intersection property,
            // so the common intersection of finitely many member supports
            // cannot be empty unless some member support already is.
            let g = gens.first().ok_or(PerfError::ZeroMember)?;
            Ok(PrimeIdealKx::Closed(g.clone()))
        }
    }
}

/// The unique maximal proper tensor ideal above a proper one: the full
/// torsion ideal.
pub fn maximal_above(j: &TensorIdealHandle) -> Result<TensorIdealHandle, PerfError> {
    match j {
        TensorIdealHandle::Everything => Err(PerfError::NotProper),
        TensorIdealHandle::TorsionOn(_) => {
            Ok(TensorIdealHandle::TorsionOn(ClosedPointSpec::AllClosed))
        }
    }
}

//! Exact univariate polynomial arithmetic over Q and prime fields, and the
//! lattice of radical ideals of k[x].
//!
//! Coefficients are exact: arbitrary-precision rationals over Q, residues
//! with 128-bit intermediates over F_p. The squarefree part runs the full
//! positive-characteristic algorithm (the naive `f / gcd(f, f')` loses
//! factors whose multiplicity is divisible by p). Irreducibility over F_p
//! is decided by trial division against a sieve; over Q only degrees up to
//! three are decided, via the rational root test, and higher degrees
//! return an explicit undecided verdict rather than a guess.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

type BigRational = Ratio<BigInt>;

/// Errors raised by polynomial and ideal operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// The modulus of a prime field must be prime.
    NotPrimeModulus(u64),
    /// The zero polynomial has no squarefree part or factorisation.
    ZeroPolynomial,
    /// Division by the zero polynomial or scalar.
    DivisionByZero,
    /// Operands live over different fields.
    FieldMismatch,
    /// A radical ideal generator must be squarefree.
    NotSquarefree(String),
    /// A closed point generator must be irreducible.
    NotIrreducible(String),
    /// Irreducibility over Q is undecided beyond degree three.
    UndecidedIrreducibility(String),
    /// Factorisation over Q gave out after stripping rational roots.
    UndecidableFactorization(String),
    /// The operation needs a finite coefficient field.
    RationalsRejected(&'static str),
    /// The requested enumeration is too large to run exactly.
    EnumerationTooLarge,
    /// The empty basic open has no coordinate ring here.
    EmptyOpen,
    /// Text that failed to parse.
    Parse(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotPrimeModulus(p) => write!(f, "{} is not prime", p),
            PolyError::ZeroPolynomial => write!(f, "the zero polynomial is not allowed here"),
            PolyError::DivisionByZero => write!(f, "division by zero"),
            PolyError::FieldMismatch => write!(f, "operands live over different fields"),
            PolyError::NotSquarefree(p) => write!(f, "{} is not squarefree", p),
            PolyError::NotIrreducible(p) => write!(f, "{} is not irreducible", p),
            PolyError::UndecidedIrreducibility(p) => {
                write!(f, "irreducibility of {} over Q is undecided beyond degree 3", p)
            }
            PolyError::UndecidableFactorization(p) => {
                write!(f, "cannot finish factoring {} over Q beyond rational roots", p)
            }
            PolyError::RationalsRejected(what) => {
                write!(f, "{} requires a finite field", what)
            }
            PolyError::EnumerationTooLarge => write!(f, "enumeration too large to run exactly"),
            PolyError::EmptyOpen => write!(f, "the empty basic open has no sections here"),
            PolyError::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for PolyError {}

/// Coefficient field: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// Exact rationals.
    Rationals,
    /// Integers modulo a prime.
    Modular(u64),
}

impl FieldSpec {
    /// Builds a prime field, verifying primality by trial division.
    pub fn modular(p: u64) -> Result<FieldSpec, PolyError> {
        if p < 2 || p >= 1 << 31 {
            return Err(PolyError::NotPrimeModulus(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(PolyError::NotPrimeModulus(p));
            }
            d += 1;
        }
        Ok(FieldSpec::Modular(p))
    }

    /// 0 for Q, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Modular(p) => *p,
        }
    }

    /// Additive identity.
    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Modular(_) => Scalar::Mod(0),
        }
    }

    /// Multiplicative identity.
    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    /// Embeds an integer.
    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Modular(p) => Scalar::Mod(n.rem_euclid(*p as i64) as u64),
        }
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::Modular(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod((x + y) % p)
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::Modular(p), Scalar::Mod(x)) => Scalar::Mod((p - x) % p),
            _ => panic!("scalar field mismatch"),
        }
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::Modular(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    fn inv(&self, a: &Scalar) -> Result<Scalar, PolyError> {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(PolyError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            (FieldSpec::Modular(p), Scalar::Mod(x)) => {
                if *x == 0 {
                    return Err(PolyError::DivisionByZero);
                }
                // Fermat: x^(p-2) mod p.
                let mut base = *x as u128;
                let mut exp = p - 2;
                let m = *p as u128;
                let mut acc: u128 = 1;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Ok(Scalar::Mod(acc as u64))
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Modular(p) => write!(f, "F_{}", p),
        }
    }
}

/// Parses a field name: `Q`/`q`, `f5`/`F5`, or a bare prime like `5`.
pub fn parse_field(s: &str) -> Result<FieldSpec, PolyError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t.strip_prefix('f').or_else(|| t.strip_prefix('F')).unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| PolyError::Parse(format!("unrecognised field {:?}", s)))?;
    FieldSpec::modular(p)
}

/// An exact coefficient: a rational or a residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Rational coefficient, always in lowest terms.
    Rat(BigRational),
    /// Residue in `0..p`.
    Mod(u64),
}

impl Scalar {
    fn cmp_same_field(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod(a), Scalar::Mod(b)) => a.cmp(b),
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => write!(f, "{}", x),
            Scalar::Mod(x) => write!(f, "{}", x),
        }
    }
}

/// A univariate polynomial with exact coefficients, stored in ascending
/// degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    /// Builds a polynomial, normalising coefficients and trimming zeros.
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Poly {
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    /// Builds from integer coefficients in ascending degree.
    pub fn from_integers(field: FieldSpec, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_integer(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero(field: FieldSpec) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    /// The constant one.
    pub fn one(field: FieldSpec) -> Poly {
        Poly { field, coeffs: vec![field.one()] }
    }

    /// The variable.
    pub fn x(field: FieldSpec) -> Poly {
        Poly { field, coeffs: vec![field.zero(), field.one()] }
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    /// Coefficient field.
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the constant one.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Leading coefficient, or `None` for zero.
    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    fn assert_same_field(&self, other: &Poly) {
        assert_eq!(self.field, other.field, "polynomial field mismatch");
    }

    /// Sum.
    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.field.add(&self.coeff(i), &other.coeff(i))).collect();
        Poly::new(self.field, coeffs)
    }

    /// Difference.
    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.field.sub(&self.coeff(i), &other.coeff(i))).collect();
        Poly::new(self.field, coeffs)
    }

    /// Negation.
    pub fn neg(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    /// Product.
    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &prod);
            }
        }
        Poly::new(self.field, coeffs)
    }

    /// Product by a scalar.
    pub fn mul_scalar(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| self.field.mul(c, s)).collect())
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.assert_same_field(d);
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let lead_inv = self.field.inv(d.leading().unwrap())?;
        let mut rem = self.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = self.field.mul(rem.leading().unwrap(), &lead_inv);
            let shift = rd - dd;
            quot[shift] = factor.clone();
            // rem -= factor * x^shift * d
            let mut coeffs = rem.coeffs;
            for (j, b) in d.coeffs.iter().enumerate() {
                let sub = self.field.mul(&factor, b);
                coeffs[shift + j] = self.field.sub(&coeffs[shift + j], &sub);
            }
            rem = Poly::new(self.field, coeffs);
        }
        Ok((Poly::new(self.field, quot), rem))
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Poly) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_integer(i as i64)))
            .collect();
        Poly::new(self.field, coeffs)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("leading coefficient is nonzero");
                self.mul_scalar(&inv)
            }
        }
    }

    /// Power with nonnegative exponent.
    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Evaluation at a scalar.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, at), c);
        }
        acc
    }

    /// The monic product of the distinct irreducible factors.
    ///
    /// Over Q this is `f / gcd(f, f')`. In characteristic p that quotient
    /// drops every factor whose multiplicity is divisible by p, so the
    /// algorithm splits off the part with multiplicity prime to p, strips
    /// it from the cofactor, and recurses on the remaining p-th power via
    /// p-th roots of the coefficients.
    pub fn squarefree_part(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(Poly::one(self.field));
        }
        let p = self.field.characteristic();
        let fp = f.derivative();
        if p == 0 {
            let d = f.gcd(&fp);
            let (w, r) = f.divrem(&d).expect("gcd divides");
            debug_assert!(r.is_zero());
            return Ok(w.monic());
        }
        if fp.is_zero() {
            // f = g(x^p) = (g*)^p since the Frobenius fixes F_p; recurse on
            // the p-th root g*.
            let root = f.pth_root();
            return root.squarefree_part();
        }
        let d = f.gcd(&fp);
        if d.is_one() {
            return Ok(f);
        }
        // w carries each factor of multiplicity prime to p exactly once.
        let (w, r0) = f.divrem(&d).expect("gcd divides");
        debug_assert!(r0.is_zero());
        // Strip all factors shared with w from the cofactor; what remains
        // is the p-th power part.
        let mut rest = d;
        loop {
            let g = rest.gcd(&w);
            if g.is_one() {
                break;
            }
            let (q, r) = rest.divrem(&g).expect("gcd divides");
            debug_assert!(r.is_zero());
            rest = q;
        }
        debug_assert!(rest.derivative().is_zero(), "residue must be a p-th power");
        let tail = rest.squarefree_part()?;
        Ok(w.mul(&tail).monic())
    }

    /// The p-th root of a polynomial with zero derivative over F_p.
    fn pth_root(&self) -> Poly {
        let p = self.field.characteristic() as usize;
        debug_assert!(p > 0 && self.derivative().is_zero());
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .cloned()
            .collect();
        Poly::new(self.field, coeffs)
    }

    /// True when no irreducible factor repeats.
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        Ok(self.squarefree_part()? == self.monic())
    }
}

/// Ordering on polynomials of one field: by degree, then by coefficient
/// vectors compared from the leading coefficient down. Matches the order
/// used for irreducible enumerations.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.field, other.field, "polynomial field mismatch");
        let da = self.coeffs.len();
        let db = other.coeffs.len();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..da).rev() {
            let c = self.coeffs[i].cmp_same_field(&other.coeffs[i]);
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if self.field.is_zero(c) {
                continue;
            }
            let (neg, mag) = match c {
                Scalar::Rat(x) if x.is_negative() => (true, Scalar::Rat(-x)),
                other => (false, other.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag_is_one = match &mag {
                Scalar::Rat(x) => x.is_one(),
                Scalar::Mod(x) => *x == 1,
            };
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag_is_one {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses a polynomial like `x^3+2*x+1`, `x^2-1`, or `3/2*x^2-x`.
/// Whitespace is ignored; `2x` is accepted alongside `2*x`.
pub fn parse_poly(text: &str, field: FieldSpec) -> Result<Poly, PolyError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyError::Parse("empty polynomial".into()));
    }
    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !matches!(compact.as_bytes()[i - 1], b'+' | b'-' | b'^' | b'*' | b'/') {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if ch == '+' && i == 0 {
            // leading plus
        } else if ch == '-' && i == 0 {
            negative = true;
        } else {
            current.push(ch);
        }
    }
    terms.push((negative, current));
    let mut acc = Poly::zero(field);
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(PolyError::Parse(format!("dangling sign in {:?}", text)));
        }
        let (coeff_text, power) = match term.find('x') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let coeff = term[..pos].trim_end_matches('*');
                let rest = &term[pos + 1..];
                let power = if rest.is_empty() {
                    1
                } else {
                    let digits = rest
                        .strip_prefix('^')
                        .ok_or_else(|| PolyError::Parse(format!("bad term {:?}", term)))?;
                    digits
                        .parse::<usize>()
                        .map_err(|_| PolyError::Parse(format!("bad exponent in {:?}", term)))?
                };
                (coeff, power)
            }
        };
        let mut coeff = if coeff_text.is_empty() {
            field.one()
        } else {
            parse_scalar(coeff_text, field)?
        };
        if neg {
            coeff = field.neg(&coeff);
        }
        if power > 4096 {
            return Err(PolyError::Parse(format!("exponent {} too large", power)));
        }
        let mut coeffs = vec![field.zero(); power + 1];
        coeffs[power] = coeff;
        acc = acc.add(&Poly::new(field, coeffs));
    }
    Ok(acc)
}

fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar, PolyError> {
    let parse_int = |s: &str| -> Result<i64, PolyError> {
        s.parse::<i64>().map_err(|_| PolyError::Parse(format!("bad number {:?}", s)))
    };
    match text.split_once('/') {
        None => Ok(field.from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let n = field.from_integer(parse_int(num)?);
            let d = field.from_integer(parse_int(den)?);
            let d_inv = field.inv(&d)?;
            Ok(field.mul(&n, &d_inv))
        }
    }
}

/// Splits `x^2-1 over Q` or `x^3+x+1 mod 5` into the polynomial text and
/// its field. Returns `None` for the field when no suffix is present.
pub fn parse_poly_spec(text: &str) -> Result<(String, Option<FieldSpec>), PolyError> {
    let trimmed = text.trim();
    if let Some(pos) = trimmed.rfind(" mod ") {
        let p: u64 = trimmed[pos + 5..]
            .trim()
            .parse()
            .map_err(|_| PolyError::Parse(format!("bad modulus in {:?}", text)))?;
        return Ok((trimmed[..pos].to_string(), Some(FieldSpec::modular(p)?)));
    }
    if let Some(pos) = trimmed.rfind(" over ") {
        let name = trimmed[pos + 6..].trim();
        return Ok((trimmed[..pos].to_string(), Some(parse_field(name)?)));
    }
    Ok((trimmed.to_string(), None))
}

/// Irreducibility verdict. Over Q the test is the rational root test, so
/// degrees above three come back undecided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    /// Irreducible over its field.
    Irreducible,
    /// Reducible; carries a proper monic factor when one was found
    /// (constants and zero are reducible without witness).
    Reducible(Option<Poly>),
    /// Not decided by the implemented tests.
    Undecided,
}

/// Decides irreducibility: complete trial division over F_p, rational root
/// test up to degree three over Q.
pub fn is_irreducible(f: &Poly) -> Irreducibility {
    let deg = match f.degree() {
        None | Some(0) => return Irreducibility::Reducible(None),
        Some(d) => d,
    };
    if deg == 1 {
        return Irreducibility::Irreducible;
    }
    match f.field() {
        FieldSpec::Modular(p) => {
            let divisors = enumerate_irreducibles(p, deg / 2)
                .expect("sieve bounds are enforced by the caller's degree");
            for q in divisors {
                if q.divides(f) {
                    return Irreducibility::Reducible(Some(q));
                }
            }
            Irreducibility::Irreducible
        }
        FieldSpec::Rationals => {
            if deg > 3 {
                return Irreducibility::Undecided;
            }
            match rational_root(f) {
                Some(r) => {
                    let field = f.field();
                    let root_factor =
                        Poly::new(field, vec![field.neg(&r), field.one()]);
                    Irreducibility::Reducible(Some(root_factor))
                }
                None => Irreducibility::Irreducible,
            }
        }
    }
}

/// Finds a rational root of a polynomial over Q, if any, by the rational
/// root test on the integer form.
fn rational_root(f: &Poly) -> Option<Scalar> {
    let field = f.field();
    debug_assert_eq!(field, FieldSpec::Rationals);
    if f.is_constant() {
        return None;
    }
    if field.is_zero(&f.coeff(0)) {
        return Some(field.zero());
    }
    // Clear denominators: multiply by the lcm of all coefficient denoms.
    let mut lcm = BigInt::one();
    for c in (0..=f.degree().unwrap()).map(|i| f.coeff(i)) {
        if let Scalar::Rat(x) = c {
            let d = x.denom();
            let g = gcd_bigint(&lcm, d);
            lcm = &lcm / &g * d;
        }
    }
    let int_coeff = |i: usize| -> BigInt {
        match f.coeff(i) {
            Scalar::Rat(x) => (x * BigRational::from_integer(lcm.clone())).to_integer(),
            Scalar::Mod(_) => unreachable!(),
        }
    };
    let deg = f.degree().unwrap();
    let a0 = int_coeff(0);
    let an = int_coeff(deg);
    let p_divs = small_divisors(&a0)?;
    let q_divs = small_divisors(&an)?;
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let candidate = BigRational::new(p * BigInt::from(sign), q.clone());
                let s = Scalar::Rat(candidate);
                if field.is_zero(&f.eval(&s)) {
                    return Some(s);
                }
            }
        }
    }
    None
}

fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Positive divisors of a nonzero integer, or `None` when it is too large
/// to factor by trial division.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let as_u64: u64 = n.try_into().ok().filter(|&v| v <= 1_000_000_000_000u64)?;
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= as_u64 {
        if as_u64 % d == 0 {
            divs.push(BigInt::from(d));
            if d != as_u64 / d {
                divs.push(BigInt::from(as_u64 / d));
            }
        }
        d += 1;
    }
    divs.sort();
    Some(divs)
}

/// All monic irreducible polynomials over F_p of degree 1 to `max_degree`,
/// sorted by degree then by descending-coefficient comparison. Built by a
/// sieve: a monic polynomial of degree d is irreducible exactly when no
/// irreducible of degree at most d/2 divides it.
pub fn enumerate_irreducibles(p: u64, max_degree: usize) -> Result<Vec<Poly>, PolyError> {
    let field = FieldSpec::modular(p)?;
    if max_degree == 0 {
        return Ok(Vec::new());
    }
    let mut total: u64 = 0;
    for d in 1..=max_degree {
        total = total.saturating_add(p.saturating_pow(d as u32));
        if total > 4_000_000 {
            return Err(PolyError::EnumerationTooLarge);
        }
    }
    let mut out: Vec<Poly> = Vec::new();
    for d in 1..=max_degree {
        let mut degree_block: Vec<Poly> = Vec::new();
        // Enumerate the p^d monic polynomials of degree d by counting.
        let mut counter = vec![0u64; d];
        loop {
            let mut coeffs: Vec<Scalar> = counter.iter().map(|&c| Scalar::Mod(c)).collect();
            coeffs.push(field.one());
            let candidate = Poly::new(field, coeffs);
            let irreducible = out
                .iter()
                .take_while(|q| q.degree().unwrap() <= d / 2)
                .all(|q| !q.divides(&candidate));
            if irreducible {
                degree_block.push(candidate);
            }
            // Increment the base-p counter.
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                counter[i] += 1;
                if counter[i] < p {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
        degree_block.sort();
        out.extend(degree_block);
    }
    Ok(out)
}

/// Full factorisation into monic irreducibles with multiplicities, sorted
/// by the polynomial order. Complete over F_p; over Q rational roots are
/// stripped and the remainder must end at degree three or below.
pub fn factor(f: &Poly) -> Result<Vec<(Poly, u32)>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut rem = f.monic();
    let mut found: Vec<(Poly, u32)> = Vec::new();
    let push = |q: Poly, found: &mut Vec<(Poly, u32)>| {
        if let Some(entry) = found.iter_mut().find(|(g, _)| *g == q) {
            entry.1 += 1;
        } else {
            found.push((q, 1));
        }
    };
    match f.field() {
        FieldSpec::Modular(p) => {
            let deg = rem.degree().unwrap_or(0);
            let sieve = enumerate_irreducibles(p, deg / 2)?;
            for q in &sieve {
                while q.divides(&rem) {
                    let (quo, r) = rem.divrem(q).expect("nonzero divisor");
                    debug_assert!(r.is_zero());
                    rem = quo;
                    push(q.clone(), &mut found);
                }
            }
            if rem.degree().unwrap_or(0) >= 1 {
                // No divisor up to half the original degree remained, and
                // any factorisation of the leftover would need one.
                push(rem.clone(), &mut found);
            }
        }
        FieldSpec::Rationals => {
            while rem.degree().unwrap_or(0) >= 1 {
                if rem.degree().unwrap() <= 3 {
                    match is_irreducible(&rem) {
                        Irreducibility::Irreducible => {
                            push(rem.clone(), &mut found);
                            break;
                        }
                        Irreducibility::Reducible(Some(q)) => {
                            let (quo, r) = rem.divrem(&q).expect("nonzero divisor");
                            debug_assert!(r.is_zero());
                            rem = quo;
                            push(q, &mut found);
                        }
                        _ => unreachable!("degree <= 3 over Q is always decided"),
                    }
                } else {
                    match rational_root(&rem) {
                        Some(root) => {
                            let field = rem.field();
                            let q = Poly::new(field, vec![field.neg(&root), field.one()]);
                            let (quo, r) = rem.divrem(&q).expect("nonzero divisor");
                            debug_assert!(r.is_zero());
                            rem = quo;
                            push(q, &mut found);
                        }
                        None => {
                            return Err(PolyError::UndecidableFactorization(rem.to_string()))
                        }
                    }
                }
            }
        }
    }
    found.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(found)
}

/// A radical ideal of k[x]: zero, the whole ring, or a principal ideal on
/// a monic squarefree generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalIdeal {
    /// The zero ideal.
    Zero,
    /// Principal on a monic squarefree generator of positive degree.
    Principal(Poly),
    /// The unit ideal.
    Unit,
}

impl RadicalIdeal {
    /// Wraps a generator, requiring it squarefree; zero gives the zero
    /// ideal and nonzero constants the unit ideal.
    pub fn from_generator(f: &Poly) -> Result<RadicalIdeal, PolyError> {
        if f.is_zero() {
            return Ok(RadicalIdeal::Zero);
        }
        if f.is_constant() {
            return Ok(RadicalIdeal::Unit);
        }
        if !f.is_squarefree()? {
            return Err(PolyError::NotSquarefree(f.to_string()));
        }
        Ok(RadicalIdeal::Principal(f.monic()))
    }

    /// The radical of the principal ideal on any generator: applies the
    /// squarefree part instead of rejecting.
    pub fn radical_of_generator(f: &Poly) -> Result<RadicalIdeal, PolyError> {
        if f.is_zero() {
            return Ok(RadicalIdeal::Zero);
        }
        if f.is_constant() {
            return Ok(RadicalIdeal::Unit);
        }
        Ok(RadicalIdeal::Principal(f.squarefree_part()?))
    }

    /// The generator as a polynomial of the given field.
    pub fn generator_in(&self, field: FieldSpec) -> Poly {
        match self {
            RadicalIdeal::Zero => Poly::zero(field),
            RadicalIdeal::Unit => Poly::one(field),
            RadicalIdeal::Principal(f) => f.clone(),
        }
    }

    /// The field of a principal generator, when there is one.
    pub fn field(&self) -> Option<FieldSpec> {
        match self {
            RadicalIdeal::Principal(f) => Some(f.field()),
            _ => None,
        }
    }
}

impl fmt::Display for RadicalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalIdeal::Zero => write!(f, "(0)"),
            RadicalIdeal::Unit => write!(f, "(1)"),
            RadicalIdeal::Principal(g) => write!(f, "({})", g),
        }
    }
}

fn check_same_field(a: &RadicalIdeal, b: &RadicalIdeal) -> Result<(), PolyError> {
    if let (Some(fa), Some(fb)) = (a.field(), b.field()) {
        if fa != fb {
            return Err(PolyError::FieldMismatch);
        }
    }
    Ok(())
}

/// Meet of radical ideals: the intersection. On principal generators this
/// is the squarefree least common multiple `f*g / gcd(f, g)`, computed
/// without any squarefree-part call so the product-then-radical route
/// stays an independent cross-check.
pub fn rad_meet(a: &RadicalIdeal, b: &RadicalIdeal) -> Result<RadicalIdeal, PolyError> {
    check_same_field(a, b)?;
    Ok(match (a, b) {
        (RadicalIdeal::Zero, _) | (_, RadicalIdeal::Zero) => RadicalIdeal::Zero,
        (RadicalIdeal::Unit, other) | (other, RadicalIdeal::Unit) => other.clone(),
        (RadicalIdeal::Principal(f), RadicalIdeal::Principal(g)) => {
            let gcd = f.gcd(g);
            let (lcm, r) = f.mul(g).divrem(&gcd)?;
            debug_assert!(r.is_zero());
            RadicalIdeal::Principal(lcm.monic())
        }
    })
}

/// Join of radical ideals: the radical of the sum, which on principal
/// generators is the gcd; a unit gcd collapses to the unit ideal.
pub fn rad_join(a: &RadicalIdeal, b: &RadicalIdeal) -> Result<RadicalIdeal, PolyError> {
    check_same_field(a, b)?;
    Ok(match (a, b) {
        (RadicalIdeal::Unit, _) | (_, RadicalIdeal::Unit) => RadicalIdeal::Unit,
        (RadicalIdeal::Zero, other) | (other, RadicalIdeal::Zero) => other.clone(),
        (RadicalIdeal::Principal(f), RadicalIdeal::Principal(g)) => {
            let gcd = f.gcd(g);
            if gcd.is_constant() {
                RadicalIdeal::Unit
            } else {
                RadicalIdeal::Principal(gcd)
            }
        }
    })
}

/// Containment of radical ideals: `(f) <= (g)` exactly when g divides f.
pub fn rad_leq(a: &RadicalIdeal, b: &RadicalIdeal) -> Result<bool, PolyError> {
    check_same_field(a, b)?;
    Ok(match (a, b) {
        (RadicalIdeal::Zero, _) => true,
        (_, RadicalIdeal::Unit) => true,
        (_, RadicalIdeal::Zero) => false,
        (RadicalIdeal::Unit, _) => false,
        (RadicalIdeal::Principal(f), RadicalIdeal::Principal(g)) => g.divides(f),
    })
}

/// Primality verdict for a radical ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeVerdict {
    /// Prime.
    Prime,
    /// Not prime (including the unit ideal).
    NotPrime,
    /// Depends on an irreducibility question left undecided over Q.
    Undecided,
}

/// Decides primality: the zero ideal is prime, the unit ideal is not, and
/// a principal radical ideal is prime exactly when its generator is
/// irreducible.
pub fn rad_is_prime(i: &RadicalIdeal) -> PrimeVerdict {
    match i {
        RadicalIdeal::Zero => PrimeVerdict::Prime,
        RadicalIdeal::Unit => PrimeVerdict::NotPrime,
        RadicalIdeal::Principal(f) => match is_irreducible(f) {
            Irreducibility::Irreducible => PrimeVerdict::Prime,
            Irreducibility::Reducible(_) => PrimeVerdict::NotPrime,
            Irreducibility::Undecided => PrimeVerdict::Undecided,
        },
    }
}

/// A prime ideal of k[x]: the generic point or a closed point on a monic
/// irreducible generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeIdealKx {
    /// The zero ideal; the generic point.
    Zero,
    /// A closed point with monic irreducible generator.
    Closed(Poly),
}

impl PrimeIdealKx {
    /// Wraps a closed-point generator, requiring decided irreducibility.
    pub fn closed(f: &Poly) -> Result<PrimeIdealKx, PolyError> {
        match is_irreducible(f) {
            Irreducibility::Irreducible => Ok(PrimeIdealKx::Closed(f.monic())),
            Irreducibility::Reducible(_) => Err(PolyError::NotIrreducible(f.to_string())),
            Irreducibility::Undecided => {
                Err(PolyError::UndecidedIrreducibility(f.to_string()))
            }
        }
    }
}

impl fmt::Display for PrimeIdealKx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeIdealKx::Zero => write!(f, "(0)"),
            PrimeIdealKx::Closed(g) => write!(f, "({})", g),
        }
    }
}

/// The coordinate ring of a basic open of Spec k[x]: the localisation of
/// k[x] inverting the denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicOpenSections {
    /// Coefficient field.
    pub field: FieldSpec,
    /// Monic squarefree denominator; one for the whole space.
    pub denominator: Poly,
}

impl BasicOpenSections {
    /// Human-readable ring description.
    pub fn describe(&self) -> String {
        if self.denominator.is_one() {
            "k[x]".to_string()
        } else {
            format!("k[x][1/({})]", self.denominator)
        }
    }

    /// True when this basic open contains the other: the denominators must
    /// divide the other way, since `D(f)` contains `D(g)` exactly when f
    /// divides g for squarefree generators.
    pub fn contains(&self, other: &BasicOpenSections) -> bool {
        self.field == other.field && self.denominator.divides(&other.denominator)
    }
}

/// Sections of the structure sheaf over the basic open `D(I)`. The zero
/// ideal gives the empty open, which is rejected.
pub fn sections(open: &RadicalIdeal, field: FieldSpec) -> Result<BasicOpenSections, PolyError> {
    match open {
        RadicalIdeal::Zero => Err(PolyError::EmptyOpen),
        RadicalIdeal::Unit => Ok(BasicOpenSections { field, denominator: Poly::one(field) }),
        RadicalIdeal::Principal(f) => {
            if f.field() != field {
                return Err(PolyError::FieldMismatch);
            }
            Ok(BasicOpenSections { field, denominator: f.clone() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: FieldSpec = FieldSpec::Modular(2);
    const F3: FieldSpec = FieldSpec::Modular(3);
    const F5: FieldSpec = FieldSpec::Modular(5);
    const Q: FieldSpec = FieldSpec::Rationals;

    fn p(field: FieldSpec, text: &str) -> Poly {
        parse_poly(text, field).unwrap()
    }

    #[test]
    fn field_construction() {
        assert!(FieldSpec::modular(2).is_ok());
        assert!(FieldSpec::modular(97).is_ok());
        assert_eq!(FieldSpec::modular(1), Err(PolyError::NotPrimeModulus(1)));
        assert_eq!(FieldSpec::modular(6), Err(PolyError::NotPrimeModulus(6)));
        assert_eq!(parse_field("q").unwrap(), Q);
        assert_eq!(parse_field("F5").unwrap(), F5);
        assert_eq!(parse_field("7").unwrap(), FieldSpec::Modular(7));
        assert!(parse_field("f10").is_err());
    }

    #[test]
    fn parse_display_round_trip() {
        for text in ["x^3+2*x+1", "x^2+4*x+4", "x", "1", "x^5+x^4+x^2"] {
            let f = p(F5, text);
            assert_eq!(f.to_string(), text);
            assert_eq!(parse_poly(&f.to_string(), F5).unwrap(), f);
        }
        for text in ["x^2-1", "x^3-2", "3/2*x^2-x", "-x+1/2", "x^2-1/4"] {
            let f = p(Q, text);
            assert_eq!(parse_poly(&f.to_string(), Q).unwrap(), f);
        }
        // Reduction happens on entry.
        assert_eq!(p(F2, "2*x+3"), p(F2, "1"));
        assert_eq!(p(F5, "x^2 - 1"), p(F5, "x^2+4"));
        assert!(parse_poly("x^^2", F2).is_err());
        assert!(parse_poly("", F2).is_err());
        assert!(parse_poly("x+", F2).is_err());
    }

    #[test]
    fn arithmetic_and_division() {
        let f = p(Q, "x^3-1");
        let g = p(Q, "x-1");
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q, p(Q, "x^2+x+1"));
        assert!(r.is_zero());
        assert!(g.divides(&f));
        assert!(!p(Q, "x-2").divides(&f));
        assert_eq!(f.divrem(&Poly::zero(Q)), Err(PolyError::DivisionByZero));
        let e = f.eval(&Q.from_integer(2));
        assert_eq!(e, Q.from_integer(7));
    }

    #[test]
    fn gcd_examples() {
        let f = p(Q, "x^2-1");
        let g = p(Q, "x^2-2*x+1");
        assert_eq!(f.gcd(&g), p(Q, "x-1"));
        let a = p(F2, "x^3+x");
        let b = p(F2, "x^2");
        assert_eq!(a.gcd(&b), p(F2, "x"));
        assert!(Poly::zero(Q).gcd(&Poly::zero(Q)).is_zero());
    }

    #[test]
    fn squarefree_part_handles_characteristic_p() {
        // x^2 (x+1) over F_2: the naive f / gcd(f, f') would return x+1.
        let f = p(F2, "x^3+x^2");
        assert_eq!(f.squarefree_part().unwrap(), p(F2, "x^2+x"));
        // A pure p-th power.
        let g = p(F2, "x^2");
        assert_eq!(g.squarefree_part().unwrap(), p(F2, "x"));
        // (x^2+x+1)^2 over F_2 via its expansion x^4+x^2+1.
        let h = p(F2, "x^4+x^2+1");
        assert_eq!(h.squarefree_part().unwrap(), p(F2, "x^2+x+1"));
        // Mixed multiplicities in characteristic 3: x^3 (x+1)^2.
        let k = p(F3, "x^3").mul(&p(F3, "x+1").pow(2));
        assert_eq!(k.squarefree_part().unwrap(), p(F3, "x^2+x"));
        // Over Q the one-step quotient suffices.
        let m = p(Q, "x^2+2*x+1");
        assert_eq!(m.squarefree_part().unwrap(), p(Q, "x+1"));
        assert!(p(Q, "x^2-1").is_squarefree().unwrap());
        assert!(!p(Q, "x^2").is_squarefree().unwrap());
        assert_eq!(Poly::zero(Q).squarefree_part(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn irreducible_enumeration_over_f2() {
        let irr = enumerate_irreducibles(2, 3).unwrap();
        let shown: Vec<String> = irr.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, vec!["x", "x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1"]);
        // Counts per degree 1..5 over F_2: 2, 1, 2, 3, 6.
        let irr5 = enumerate_irreducibles(2, 5).unwrap();
        let mut counts = [0usize; 6];
        for f in &irr5 {
            counts[f.degree().unwrap()] += 1;
        }
        assert_eq!(&counts[1..], &[2, 1, 2, 3, 6]);
    }

    #[test]
    fn irreducible_enumeration_over_f3() {
        let irr = enumerate_irreducibles(3, 2).unwrap();
        // Degree 1: x, x+1, x+2; degree 2: (9-3)/2 = 3 of them.
        assert_eq!(irr.len(), 6);
        assert_eq!(irr[3].to_string(), "x^2+1");
    }

    #[test]
    fn irreducibility_over_q() {
        assert_eq!(is_irreducible(&p(Q, "x^2-2")), Irreducibility::Irreducible);
        assert_eq!(is_irreducible(&p(Q, "x^3-2")), Irreducibility::Irreducible);
        assert_eq!(
            is_irreducible(&p(Q, "x^2-1")),
            Irreducibility::Reducible(Some(p(Q, "x-1")))
        );
        // 2x^2 - x - 1 has root 1; non-monic exercise of the root test.
        assert!(matches!(
            is_irreducible(&p(Q, "2*x^2-x-1")),
            Irreducibility::Reducible(Some(_))
        ));
        // Degree 4 is undecided even when a rational root exists.
        assert_eq!(is_irreducible(&p(Q, "x^4-1")), Irreducibility::Undecided);
        assert_eq!(is_irreducible(&p(Q, "3")), Irreducibility::Reducible(None));
    }

    #[test]
    fn factor_examples() {
        let f = p(F2, "x^3+x^2");
        let fs = factor(&f).unwrap();
        assert_eq!(fs, vec![(p(F2, "x"), 2), (p(F2, "x+1"), 1)]);
        let g = p(Q, "x^3-x");
        let gs = factor(&g).unwrap();
        // Coefficient order over Q puts x-1 before x before x+1.
        assert_eq!(gs, vec![(p(Q, "x-1"), 1), (p(Q, "x"), 1), (p(Q, "x+1"), 1)]);
        // Degree 6 over F_2 factors completely.
        let h = p(F2, "x^2+x+1").pow(2).mul(&p(F2, "x^2+x"));
        let hs = factor(&h).unwrap();
        assert_eq!(
            hs,
            vec![(p(F2, "x"), 1), (p(F2, "x+1"), 1), (p(F2, "x^2+x+1"), 2)]
        );
        // Over Q a rootless quartic cannot be finished.
        assert!(matches!(
            factor(&p(Q, "x^4+1")),
            Err(PolyError::UndecidableFactorization(_))
        ));
    }

    #[test]
    fn radical_ideal_constructors() {
        assert_eq!(RadicalIdeal::from_generator(&Poly::zero(Q)).unwrap(), RadicalIdeal::Zero);
        assert_eq!(RadicalIdeal::from_generator(&p(Q, "5")).unwrap(), RadicalIdeal::Unit);
        assert!(matches!(
            RadicalIdeal::from_generator(&p(Q, "x^2")),
            Err(PolyError::NotSquarefree(_))
        ));
        assert_eq!(
            RadicalIdeal::radical_of_generator(&p(F2, "x^3+x^2")).unwrap(),
            RadicalIdeal::Principal(p(F2, "x^2+x"))
        );
        // Non-monic generators normalise.
        assert_eq!(
            RadicalIdeal::from_generator(&p(Q, "2*x-2")).unwrap(),
            RadicalIdeal::Principal(p(Q, "x-1"))
        );
    }

    #[test]
    fn radical_lattice_operations() {
        let ix = RadicalIdeal::from_generator(&p(F2, "x")).unwrap();
        let ix1 = RadicalIdeal::from_generator(&p(F2, "x+1")).unwrap();
        let meet = rad_meet(&ix, &ix1).unwrap();
        assert_eq!(meet, RadicalIdeal::Principal(p(F2, "x^2+x")));
        assert_eq!(rad_join(&ix, &ix1).unwrap(), RadicalIdeal::Unit);
        // (x^2+x) <= (x) since x divides x^2+x.
        assert!(rad_leq(&meet, &ix).unwrap());
        assert!(!rad_leq(&ix, &meet).unwrap());
        assert!(rad_leq(&RadicalIdeal::Zero, &ix).unwrap());
        assert!(rad_leq(&ix, &RadicalIdeal::Unit).unwrap());
        assert!(!rad_leq(&RadicalIdeal::Unit, &ix).unwrap());
        // Shared factors survive the meet once.
        let a = RadicalIdeal::from_generator(&p(F5, "x^2+4")).unwrap(); // (x-1)(x+1)
        let b = RadicalIdeal::from_generator(&p(F5, "x^2+3*x+2")).unwrap(); // (x+1)(x+2)
        let m = rad_meet(&a, &b).unwrap();
        assert_eq!(m, RadicalIdeal::Principal(p(F5, "x^3+2*x^2+4*x+3")));
        let j = rad_join(&a, &b).unwrap();
        assert_eq!(j, RadicalIdeal::Principal(p(F5, "x+1")));
        // Field mismatch is rejected.
        let qx = RadicalIdeal::from_generator(&p(Q, "x")).unwrap();
        assert_eq!(rad_meet(&ix, &qx), Err(PolyError::FieldMismatch));
    }

    #[test]
    fn prime_verdicts() {
        assert_eq!(rad_is_prime(&RadicalIdeal::Zero), PrimeVerdict::Prime);
        assert_eq!(rad_is_prime(&RadicalIdeal::Unit), PrimeVerdict::NotPrime);
        let ix = RadicalIdeal::from_generator(&p(F2, "x")).unwrap();
        assert_eq!(rad_is_prime(&ix), PrimeVerdict::Prime);
        let red = RadicalIdeal::from_generator(&p(F2, "x^2+x")).unwrap();
        assert_eq!(rad_is_prime(&red), PrimeVerdict::NotPrime);
        let quart = RadicalIdeal::from_generator(&p(Q, "x^4+1")).unwrap();
        assert_eq!(rad_is_prime(&quart), PrimeVerdict::Undecided);
    }

    #[test]
    fn closed_points_require_irreducibility() {
        assert!(PrimeIdealKx::closed(&p(F2, "x^2+x+1")).is_ok());
        assert!(matches!(
            PrimeIdealKx::closed(&p(F2, "x^2+x")),
            Err(PolyError::NotIrreducible(_))
        ));
        assert!(matches!(
            PrimeIdealKx::closed(&p(Q, "x^4+2")),
            Err(PolyError::UndecidedIrreducibility(_))
        ));
        assert_eq!(PrimeIdealKx::closed(&p(Q, "2*x-2")).unwrap().to_string(), "(x-1)");
    }

    #[test]
    fn basic_open_sections_and_containment() {
        let whole = sections(&RadicalIdeal::Unit, F2).unwrap();
        assert_eq!(whole.describe(), "k[x]");
        let ix = RadicalIdeal::from_generator(&p(F2, "x")).unwrap();
        let dx = sections(&ix, F2).unwrap();
        assert_eq!(dx.describe(), "k[x][1/(x)]");
        let both = sections(
            &RadicalIdeal::from_generator(&p(F2, "x^2+x")).unwrap(),
            F2,
        )
        .unwrap();
        // D(x(x+1)) sits inside D(x); sections restrict the other way.
        assert!(dx.contains(&both));
        assert!(!both.contains(&dx));
        assert!(whole.contains(&dx));
        assert_eq!(sections(&RadicalIdeal::Zero, F2), Err(PolyError::EmptyOpen));
    }

    #[test]
    fn poly_ordering_matches_enumeration() {
        // Degree dominates, then leading coefficients compare first.
        assert!(p(F2, "x^3+x+1") < p(F2, "x^3+x^2+1"));
        assert!(p(F2, "x^2+x+1") < p(F2, "x^3+x+1"));
        assert!(p(F5, "x+1") < p(F5, "x+2"));
    }
}

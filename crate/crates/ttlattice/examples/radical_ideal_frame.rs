//! The frame of radical ideals of k[x].
//!
//! Radical ideals of a principal ideal domain are classified by squarefree
//! monic generators plus the two bounds. Meet is intersection (computed as
//! fg / gcd), join is the gcd, and the whole lattice is distributive. The
//! radical of a product agrees with the meet, which is the law that makes
//! supports of tensor products intersect.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example radical_ideal_frame
//! ```

use ttlattice::poly::{
    parse_poly, rad_is_prime, rad_join, rad_leq, rad_meet, FieldSpec, PrimeVerdict, RadicalIdeal,
};

fn radical(text: &str, field: FieldSpec) -> RadicalIdeal {
    let f = parse_poly(text, field).expect("example polynomial parses");
    RadicalIdeal::radical_of_generator(&f).expect("radical exists")
}

fn main() {
    let f5 = FieldSpec::modular(5).expect("5 is prime");

    // Coprime generators join to the unit ideal: the two closed points
    // x = 0 and x = -1 cover nothing in common.
    let a = radical("x", f5);
    let b = radical("x+1", f5);
    let join = rad_join(&a, &b).expect("same field");
    assert_eq!(join, RadicalIdeal::Unit);
    println!("over F_5: (x) ∨ (x+1) = (1)");

    // The meet keeps both closed points.
    let meet = rad_meet(&a, &b).expect("same field");
    let product = radical("x^2+x", f5);
    assert_eq!(meet, product, "meet equals the radical of the product");
    println!("over F_5: (x) ∧ (x+1) = (x^2+x) = √((x)(x+1))");

    // Radicals forget multiplicity: x^3 and x generate the same radical.
    assert_eq!(radical("x^3", f5), radical("x", f5));
    println!("over F_5: √(x^3) = (x)");

    // Distributivity of the frame on a concrete triple over Q.
    let q = FieldSpec::Rationals;
    let (ra, rb, rc) = (radical("x-1", q), radical("x-2", q), radical("x-3", q));
    let lhs = rad_meet(&ra, &rad_join(&rb, &rc).expect("join")).expect("meet");
    let rhs = rad_join(
        &rad_meet(&ra, &rb).expect("meet"),
        &rad_meet(&ra, &rc).expect("meet"),
    )
    .expect("join");
    assert_eq!(lhs, rhs);
    println!("over Q: I ∧ (J ∨ K) = (I ∧ J) ∨ (I ∧ K) on x-1, x-2, x-3");

    // The order is divisibility reversed: (x^2+x) ⊆ (x).
    assert!(rad_leq(&meet, &a).expect("same field"));
    assert!(!rad_leq(&a, &meet).expect("same field"));

    // Primes: irreducible generators and the zero ideal.
    assert_eq!(rad_is_prime(&radical("x^2+2", f5)), PrimeVerdict::Prime);
    assert_eq!(rad_is_prime(&meet), PrimeVerdict::NotPrime);
    assert_eq!(rad_is_prime(&RadicalIdeal::Zero), PrimeVerdict::Prime);
    println!("over F_5: (x^2+2) is prime, (x^2+x) is not, (0) is");

    // Over Q the irreducibility of a quartic with no rational roots is
    // left undecided rather than guessed.
    let quartic = radical("x^4+x+1", q);
    assert_eq!(rad_is_prime(&quartic), PrimeVerdict::Undecided);
    println!("over Q: primality of (x^4+x+1) reported as undecided");
}

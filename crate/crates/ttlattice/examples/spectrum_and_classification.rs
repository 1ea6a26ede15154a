//! The spectrum of prime tensor ideals and the Thomason classification.
//!
//! Primes of the model are the zero ideal (the generic point) and one
//! closed point per monic irreducible. Koszul objects decide membership
//! in the comparison map ρ, and the classification φ/ψ exchanges tensor
//! ideals with Thomason subsets.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example spectrum_and_classification
//! ```

use ttlattice::perf::{
    find_prime_avoiding, ideal_member, koszul, maximal_above, object_with_support, parse_object,
    phi, prime_subseteq, psi, rho, rho_by_scan, ClosedPointSpec, PerfObject, TensorIdealHandle,
    ThomasonKx,
};
use ttlattice::poly::{enumerate_irreducibles, parse_field, parse_poly, PrimeIdealKx};

fn main() {
    let f3 = parse_field("f3").expect("field spec");

    // ρ sends the Balmer prime P(𝔭) back to 𝔭; the Koszul route and a
    // brute scan over monic polynomials agree on every prime of degree
    // at most 2.
    let mut checked = 0;
    for f in enumerate_irreducibles(3, 2).expect("prime modulus") {
        let p = PrimeIdealKx::closed(&f).expect("irreducible");
        let structural = rho(f3, &p).expect("comparison map");
        let scanned = rho_by_scan(f3, &p, 3).expect("finite field scan");
        assert_eq!(structural, scanned);
        assert_eq!(structural, p);
        checked += 1;
    }
    let generic = rho(f3, &PrimeIdealKx::Zero).expect("comparison map");
    assert_eq!(generic, rho_by_scan(f3, &PrimeIdealKx::Zero, 3).expect("scan"));
    println!("ρ(P(𝔭)) = 𝔭 for the generic point and {} closed primes over F_3", checked);

    // Koszul objects: unit for r = 0, zero for units, a CRT sum otherwise.
    let x2_minus = parse_poly("x^2+2", f3).expect("parses");
    let k = koszul(f3, &x2_minus).expect("koszul object");
    println!("Koszul object of x^2+2 over F_3: {}", k);
    assert!(!k.is_zero());

    // Inclusion of primes as tensor ideals reverses the Zariski order:
    // every closed-point prime sits inside the generic one, and closed
    // points stay pairwise incomparable.
    let px = PrimeIdealKx::closed(&parse_poly("x", f3).expect("parses")).expect("irreducible");
    let py = PrimeIdealKx::closed(&parse_poly("x+1", f3).expect("parses")).expect("irreducible");
    assert!(prime_subseteq(&px, &PrimeIdealKx::Zero));
    assert!(!prime_subseteq(&PrimeIdealKx::Zero, &px));
    assert!(!prime_subseteq(&px, &py));
    println!("spectrum order: P(closed) ⊆ P(generic), closed points incomparable");

    // φ/ψ round trip on a finite Thomason subset.
    let v = ThomasonKx::finite(vec![
        parse_poly("x", f3).expect("parses"),
        parse_poly("x+2", f3).expect("parses"),
    ])
    .expect("irreducible generators");
    let ideal = psi(&v);
    assert_eq!(phi(&ideal), v);
    println!("ψ then φ restores {}", v);

    // The itemized values: everything ↔ whole spectrum, all torsion ↔ all
    // closed points.
    assert_eq!(phi(&TensorIdealHandle::Everything), ThomasonKx::Whole);
    assert_eq!(
        phi(&TensorIdealHandle::TorsionOn(ClosedPointSpec::AllClosed)),
        ThomasonKx::AllClosed
    );
    println!("φ(everything) = whole spectrum, φ(all torsion) = all closed points");

    // Membership in a tensor ideal is support containment.
    let e = parse_object("k[x]/(x^2)", Some(f3)).expect("parses");
    assert!(ideal_member(&e, &ideal));
    let unit = PerfObject::unit(f3);
    assert!(!ideal_member(&unit, &ideal));
    println!("k[x]/(x^2) lies in the (x, x+2)-torsion ideal, the unit does not");

    // Realizing supports: finite sets and the whole spectrum come from
    // single objects, the set of all closed points cannot.
    assert!(object_with_support(f3, &v).is_ok());
    assert!(object_with_support(f3, &ThomasonKx::AllClosed).is_err());
    println!("finite Thomason sets are realizable, all-closed-points is not");

    // A tensor-multiplicative family of nonzero objects misses some
    // prime ideal. Here (x) lies in every member's support, so the prime
    // at (x) is disjoint from the family.
    let family = vec![unit.clone(), parse_object("k[x]/(x)", Some(f3)).expect("parses")];
    let avoided = find_prime_avoiding(&family).expect("family is support closed");
    assert_eq!(avoided, px);
    println!("{{unit, x-torsion}} misses the prime at (x)");

    // Maximal ideals above a proper torsion ideal: all torsion objects.
    let above = maximal_above(&ideal).expect("proper ideal");
    assert_eq!(above, TensorIdealHandle::TorsionOn(ClosedPointSpec::AllClosed));
    println!("the maximal proper ideal above any torsion ideal is all-torsion");
}

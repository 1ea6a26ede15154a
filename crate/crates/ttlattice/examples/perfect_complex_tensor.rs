//! Derived tensor products of perfect complexes over k[x].
//!
//! In the decomposition model every object is a sum of shifted copies of
//! k[x] and of torsion modules k[x]/(f^n) with f irreducible. The tensor
//! rules are short: the unit shifts, distinct irreducibles annihilate,
//! and equal irreducibles contribute a Tor term one shift up.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example perfect_complex_tensor
//! ```

use ttlattice::perf::{parse_object, support, tensor, tensor_power, PerfObject};
use ttlattice::poly::{parse_field, parse_poly};

fn main() {
    let f2 = parse_field("f2").expect("field spec");
    let obj = |text: &str| parse_object(text, Some(f2)).expect("example object parses");

    // k[x]/(x) ⊗ k[x]/(x^2): the Tor term doubles the smaller torsion.
    let a = obj("k[x]/(x)");
    let b = obj("k[x]/(x^2)");
    let prod = tensor(&a, &b).expect("same field");
    assert_eq!(prod.to_string(), "k[x]/(x) + S^1 k[x]/(x)");
    println!("k[x]/(x) ⊗ k[x]/(x^2) = {}", prod);

    // Distinct irreducibles are coprime, so their torsion parts vanish.
    let c = obj("k[x]/(x+1)");
    let zero = tensor(&a, &c).expect("same field");
    assert!(zero.is_zero());
    println!("k[x]/(x) ⊗ k[x]/(x+1) = 0");

    // The unit is neutral and shifts add.
    let unit_shift = obj("S^2 k[x]");
    let shifted = tensor(&unit_shift, &a).expect("same field");
    assert_eq!(shifted, a.shift(2));
    println!("S^2 k[x] ⊗ k[x]/(x) = {}", shifted);

    // Supports multiply as intersections.
    let left = obj("k[x]/(x) + k[x]/(x^2+x+1)");
    let right = obj("k[x]/(x) + k[x]/(x+1)");
    let mixed = tensor(&left, &right).expect("same field");
    assert_eq!(
        support(&mixed),
        support(&left).inter(&support(&right)),
        "supp(a ⊗ b) = supp(a) ∩ supp(b)"
    );
    println!("supp((x-torsion + cubic-torsion) ⊗ (x-torsion + (x+1)-torsion)) = {}", support(&mixed));

    // No tensor nilpotents: a nonzero object stays nonzero under powers.
    let e = obj("k[x]/(x^3)");
    for n in 1..=4 {
        let power = tensor_power(&e, n).expect("same field");
        assert!(!power.is_zero(), "tensor powers of nonzero objects stay nonzero");
    }
    println!("k[x]/(x^3) has nonzero tensor powers up to 4");

    // A free summand makes the support the whole spectrum, and tensoring
    // with anything keeps that factor's support.
    let with_free = obj("k[x] + S^-1 k[x]/(x)");
    assert_eq!(support(&with_free).to_string(), "whole spectrum");
    let x_only = tensor(&with_free, &a).expect("same field");
    assert_eq!(support(&x_only), support(&a));
    println!("free summands dominate supports; torsion cuts them back down");

    // Cohomology oracle on one concrete pair: multiplication by x^2 on
    // k[x]/(x^3) has kernel and cokernel of dimension 2, so the tensor is
    // k[x]/(x^2) + S^1 k[x]/(x^2).
    let f = parse_poly("x", f2).expect("parses");
    let n3 = PerfObject::torsion(&f, 3, 0).expect("irreducible");
    let n2 = PerfObject::torsion(&f, 2, 0).expect("irreducible");
    let got = tensor(&n3, &n2).expect("same field");
    let want = n2.direct_sum(&n2.shift(1)).expect("same field");
    assert_eq!(got, want);
    println!("k[x]/(x^3) ⊗ k[x]/(x^2) = {}", got);
}

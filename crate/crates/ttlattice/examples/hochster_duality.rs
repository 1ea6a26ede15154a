//! Hochster duality on finite spectral spaces.
//!
//! Every finite T0 space is spectral; its dual carries the same points
//! with closed sets and opens-with-quasi-compact-complement exchanged.
//! The construction is an involution and reverses specialization.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example hochster_duality
//! ```

use ttlattice::bits;
use ttlattice::frame::{hochster_dual, parse_space, specialization_order, thomason_frame};

fn data(name: &str) -> String {
    let path = format!("{}/examples/data/{}", env!("CARGO_MANIFEST_DIR"), name);
    std::fs::read_to_string(path).expect("example data ships with the crate")
}

fn main() {
    let x = parse_space(&data("threept.space")).expect("fixture parses");
    let dual = hochster_dual(&x).expect("finite T0 spaces are coherent");

    // The dual topology turns the dense generic point into a closed one.
    let g = x.index_of("g").expect("point exists");
    let mut g_row = bits::EMPTY;
    bits::set(&mut g_row, g);
    assert!(x.is_open(g_row) && !x.is_closed(g_row));
    assert!(dual.is_closed(g_row) && !dual.is_open(g_row));
    println!("threept: {{g}} is open upstairs and closed in the dual");

    // Involution: dualising twice restores the original topology.
    let double = hochster_dual(&dual).expect("dual is coherent");
    assert_eq!(double, x);
    println!("threept: X^dual^dual = X");

    // Specialization reverses: g was the least element, now it is maximal.
    let before = specialization_order(&x).expect("T0");
    let after = specialization_order(&dual).expect("T0");
    for i in 0..before.len() {
        for j in 0..before.len() {
            assert_eq!(before.leq(i, j), after.leq(j, i), "order must flip");
        }
    }
    println!("threept: specialization order reverses pointwise");

    // The Thomason frame of x is the open-set lattice of the dual; on the
    // three-point model it has five members.
    let thomason = thomason_frame(&x).expect("coherent");
    assert_eq!(thomason.opens.len(), 5);
    assert_eq!(thomason.opens.len(), dual.opens().len());
    println!("threept: Thomason frame has {} elements, matching Ω(X^dual)", 5);

    // The indiscrete pair is not sober, hence not spectral: no dual.
    let indiscrete = parse_space(&data("indiscrete2.space")).expect("fixture parses");
    assert!(hochster_dual(&indiscrete).is_err());
    println!("indiscrete2: not coherent, duality refuses honestly");
}

//! Finite Stone duality: points of frames, opens of spaces, and the
//! adjunction that binds them.
//!
//! For a finite space X the unit X -> pt Ω X is a homeomorphism exactly
//! when X is T0 and sober; for a finite frame F the counit F -> Ω pt F is
//! always an isomorphism because finite distributive lattices are spatial.
//! Both triangle identities hold on the nose.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example stone_duality
//! ```

use ttlattice::frame::{
    alexandrov_space, parse_space, points, space_properties, stone_counit, stone_unit,
    triangle_identity_frame, triangle_identity_space, FiniteFrame,
};
use ttlattice::poset::{all_posets, downset_lattice};

fn data(name: &str) -> String {
    let path = format!("{}/examples/data/{}", env!("CARGO_MANIFEST_DIR"), name);
    std::fs::read_to_string(path).expect("example data ships with the crate")
}

fn main() {
    // The Sierpinski space is T0 and sober, so the unit is a homeomorphism.
    let sierpinski = parse_space(&data("sierpinski.space")).expect("fixture parses");
    let unit = stone_unit(&sierpinski).expect("T0 space");
    assert!(unit.homeomorphism);
    assert!(triangle_identity_space(&sierpinski).expect("T0 space"));
    println!("sierpinski: unit X -> pt Ω X is a homeomorphism, triangles hold");

    // The indiscrete pair is not T0; its two points collapse to one frame
    // point, so the unit cannot be injective.
    let indiscrete = parse_space(&data("indiscrete2.space")).expect("fixture parses");
    let props = space_properties(&indiscrete);
    assert!(!props.t0);
    match stone_unit(&indiscrete) {
        Ok(unit) => assert!(!unit.injective),
        Err(_) => {}
    }
    println!("indiscrete2: not T0, unit is not injective");

    // Counit side, swept over every poset on up to four elements: the
    // downset frame always satisfies F ≅ Ω(pt F).
    let mut frames = 0usize;
    for n in 1..=4 {
        for p in all_posets(n) {
            let dl = downset_lattice(&p).expect("small poset");
            let frame = FiniteFrame::new(dl.lattice).expect("downset lattices are distributive");
            let counit = stone_counit(&frame);
            assert!(counit.is_isomorphism(), "counit must be iso on a downset frame");
            assert!(triangle_identity_frame(&frame));
            // Cross-check: frame points biject with elements of the poset,
            // because downsets of p are the opens of its Alexandrov space.
            assert_eq!(points(&frame).len(), alexandrov_space(&p).points_len());
            frames += 1;
        }
    }
    println!("counit F -> Ω pt F is an isomorphism on all {} downset frames (n <= 4)", frames);
}

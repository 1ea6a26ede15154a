//! Lattice checks and the forbidden-sublattice characterisation.
//!
//! A finite lattice is distributive exactly when it embeds neither the
//! diamond M3 nor the pentagon N5. This example loads both from disk,
//! confirms the triple-law scan and the sublattice search agree on them,
//! and round-trips a distributive lattice through its join-irreducibles.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example distributivity_forbidden
//! ```

use ttlattice::poset::{
    check_lattice, downset_lattice, find_forbidden_sublattice, is_distributive, parse_poset,
    ForbiddenKind, LatticeCheck,
};

fn data(name: &str) -> String {
    let path = format!("{}/examples/data/{}", env!("CARGO_MANIFEST_DIR"), name);
    std::fs::read_to_string(path).expect("example data ships with the crate")
}

fn main() {
    for (file, expected) in [("m3.poset", ForbiddenKind::M3), ("n5.poset", ForbiddenKind::N5)] {
        let p = parse_poset(&data(file)).expect("fixture parses");
        let l = match check_lattice(&p) {
            LatticeCheck::Lattice(l) => l,
            LatticeCheck::NotLattice { .. } => unreachable!("both fixtures are lattices"),
        };
        let verdict = is_distributive(&l);
        assert!(!verdict.distributive, "{} must fail the triple law", file);
        let (a, b, c) = {
            let w = verdict.witness.expect("non-distributive lattices have witnesses");
            (w[0], w[1], w[2])
        };
        println!(
            "{}: witness a={} b={} c={} violates a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)",
            file,
            p.label(a),
            p.label(b),
            p.label(c)
        );

        // Independent route: search for a forbidden sublattice directly.
        let found = find_forbidden_sublattice(&l).expect("triple law failed, so one exists");
        assert_eq!(found.kind, expected);
        let names: Vec<&str> = found.elements.iter().map(|&e| p.label(e)).collect();
        println!("{}: contains {} on {{{}}}", file, found.kind, names.join(", "));
    }

    // A chain is distributive; Birkhoff rebuilds it from its irreducibles.
    let chain = parse_poset(&data("chain3.poset")).expect("fixture parses");
    let l = match check_lattice(&chain) {
        LatticeCheck::Lattice(l) => l,
        LatticeCheck::NotLattice { .. } => unreachable!("chains are lattices"),
    };
    assert!(is_distributive(&l).distributive);
    let ji = l.join_irreducibles();
    let sub = l.poset().induced_subposet(&ji).expect("irreducibles form a poset");
    let rebuilt = downset_lattice(&sub).expect("small poset");
    assert!(rebuilt.lattice.is_isomorphic(&l), "downsets of irreducibles rebuild the chain");
    println!(
        "chain3: distributive, {} join-irreducibles, Birkhoff round trip ok",
        ji.len()
    );
}

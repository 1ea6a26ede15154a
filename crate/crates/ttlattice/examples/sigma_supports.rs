//! Lattice-valued supports on a categorified lattice.
//!
//! The Thomason lattice of a space, viewed inside the powerset of its
//! points, assigns to every point subset w the filter σ̃(w) of Thomason
//! sets containing it and the least such set σ(w). This example works the
//! three-point model by hand and then replays the full property suite.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example sigma_supports
//! ```

use ttlattice::bigsupport::{sigma, sigma_property_suite, sigma_tilde, thomason_categorified};
use ttlattice::bits;
use ttlattice::frame::parse_space;

fn data(name: &str) -> String {
    let path = format!("{}/examples/data/{}", env!("CARGO_MANIFEST_DIR"), name);
    std::fs::read_to_string(path).expect("example data ships with the crate")
}

fn main() {
    let x = parse_space(&data("threept.space")).expect("fixture parses");
    let cl = thomason_categorified(&x).expect("finite T0 spaces are coherent");
    let g = x.index_of("g").expect("point exists");
    let c1 = x.index_of("c1").expect("point exists");

    // Frame elements are the Thomason sets ∅, {c1}, {c2}, {c1,c2}, X.
    assert_eq!(cl.frame().len(), 5);
    println!("Thomason lattice of threept has 5 elements");

    // The generic point is dense, so only the whole space supports it.
    let mut w = bits::EMPTY;
    bits::set(&mut w, g);
    let filter = sigma_tilde(&cl, w);
    assert_eq!(filter.len(), 1);
    let sigma_g = sigma(&cl, w);
    assert_eq!(cl.tau(sigma_g), bits::full(3));
    println!("σ̃({{g}}) = {{X}} and σ({{g}}) = X");

    // A closed point is its own least Thomason superset.
    let mut w = bits::EMPTY;
    bits::set(&mut w, c1);
    let sigma_c1 = sigma(&cl, w);
    assert_eq!(cl.tau(sigma_c1), w);
    println!("σ({{c1}}) = {{c1}}");

    // The empty subset gives the whole frame as filter and bottom as σ.
    let filter = sigma_tilde(&cl, bits::EMPTY);
    assert_eq!(filter.len(), cl.frame().len());
    assert_eq!(cl.tau(sigma(&cl, bits::EMPTY)), bits::EMPTY);
    println!("σ̃(∅) is the entire frame, σ(∅) = ∅");

    // The thirteen-property suite on every subset of the space.
    let samples: Vec<_> = (0u64..8).map(|m| [m, 0, 0, 0]).collect();
    let report = sigma_property_suite(&cl, &samples);
    assert!(report.pass(), "the suite must pass on the Thomason lattice");
    for prop in &report.properties {
        let strict = if prop.strict_instances > 0 {
            format!(", strict {} times", prop.strict_instances)
        } else {
            String::new()
        };
        println!(
            "  {}: {} ({} instances{})",
            prop.id, prop.name, prop.instances, strict
        );
    }
    println!("all 13 properties hold on {} sample subsets", report.samples);
}

//! The Cantor-Bendixson filtration and the local-to-global principle.
//!
//! Point cut-outs Γ_p (an open set intersected with a closed one), the
//! isolated-point filtration, interval restriction to closed complements,
//! and the reconstruction of every Thomason set from the cuts of its
//! points. The indiscrete pair shows the honest failure mode: no rank,
//! verdict inapplicable.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example cantor_bendixson_local_to_global
//! ```

use ttlattice::bigsupport::{
    big_supp, cb_filtration, gamma_point, interval_restrict, ltg_report_for_space,
    point_cutouts, thomason_categorified, upsilon, CbRank, LtgVerdict,
};
use ttlattice::bits;
use ttlattice::frame::{hochster_dual, parse_space};

fn data(name: &str) -> String {
    let path = format!("{}/examples/data/{}", env!("CARGO_MANIFEST_DIR"), name);
    std::fs::read_to_string(path).expect("example data ships with the crate")
}

fn main() {
    let x = parse_space(&data("threept.space")).expect("fixture parses");

    // Filtration: the generic point is isolated, then the closed pair.
    let filt = cb_filtration(&x);
    assert_eq!(filt.rank, CbRank::Defined(1));
    assert_eq!(filt.stages.len(), 2);
    println!("threept: CB stages {{g}} ⊆ X, rank 1");

    // Cut-outs: the generic point is open ∩ everything, a closed point is
    // everything ∩ closed.
    let cl = thomason_categorified(&x).expect("coherent");
    let g = x.index_of("g").expect("point exists");
    let cut_g = gamma_point(&cl, g).expect("T_D space");
    assert_eq!(bits::members(cut_g.cut), vec![g]);
    let cuts = point_cutouts(&cl).expect("T_D space");
    assert_eq!(cuts.len(), 3);
    println!("threept: Γ_p exists for all three points, cuts are disjoint singletons");

    // Discretization υ: unions of cuts recover arbitrary subsets here.
    let mut w = bits::EMPTY;
    bits::set(&mut w, g);
    bits::set(&mut w, x.index_of("c2").expect("point exists"));
    assert_eq!(upsilon(&cl, w).expect("all cutouts exist"), w);
    println!("threept: υ({{g, c2}}) = {{g, c2}}");

    // Interval restriction, worked on the Hochster dual where {g} is a
    // Thomason set: cutting it out leaves the discrete closed pair with
    // its powerset frame.
    let dual = hochster_dual(&x).expect("coherent");
    let cl_dual = thomason_categorified(&dual).expect("coherent");
    let mut g_row = bits::EMPTY;
    bits::set(&mut g_row, g);
    let u = (0..cl_dual.frame().len())
        .find(|&f| cl_dual.tau(f) == g_row)
        .expect("{g} is Thomason in the dual");
    let restricted = interval_restrict(&cl_dual, u).expect("frame element");
    assert_eq!(restricted.lattice.space().points_len(), 2);
    assert_eq!(restricted.lattice.frame().len(), 4);
    println!("dual threept: restricting past {{g}} leaves the discrete pair, frame = powerset");

    // The full check: every stage reconstructs, υ preserves meets, Supp
    // is a retraction of υ.
    let report = ltg_report_for_space(&x, 0, 64);
    assert_eq!(report.verdict(), LtgVerdict::Pass);
    println!("threept: local-to-global verdict pass");

    // Big supports by cut detection, with the adjoint formula cross-checked
    // inside big_supp.
    let supp = big_supp(&cl, w).expect("hypotheses verified");
    assert_eq!(supp, w);
    println!("threept: Supp(υ(w)) = w for w = {{g, c2}}");

    // The honest failure: the indiscrete pair has no isolated points.
    let indiscrete = parse_space(&data("indiscrete2.space")).expect("fixture parses");
    let filt = cb_filtration(&indiscrete);
    assert_eq!(filt.rank, CbRank::Undefined);
    let report = ltg_report_for_space(&indiscrete, 0, 16);
    assert_eq!(report.verdict(), LtgVerdict::Inapplicable);
    println!("indiscrete2: rank undefined, verdict inapplicable");
}

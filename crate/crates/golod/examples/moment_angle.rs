//! The cohomology algebra of a moment-angle complex through the Hochster
//! model: additive basis, products, and triviality verdicts.

use golod::field::Rationals;
use golod::ideal::parse_ideal;
use golod::moment_angle::{check_triviality, ma_basis, verify_join_dual_pipeline, Verdict};
use golod::simplicial::{complex_from_squarefree_ideal, parse_complex};

fn main() {
    let q = Rationals;

    // the four-cycle models S^3 x S^3: two degree-3 classes with a
    // nonzero product
    let four_cycle =
        parse_complex("vertices 4\nfacet 1 2\nfacet 2 3\nfacet 3 4\nfacet 1 4\n").unwrap();
    let basis = ma_basis(&four_cycle, &q).unwrap();
    let degrees: Vec<usize> = basis.iter().map(|c| c.total_degree()).collect();
    println!("four-cycle basis degrees: {degrees:?}");
    let report = check_triviality(&four_cycle, &q).unwrap();
    println!("four-cycle multiplication: {:?}", report.verdict);
    if let Some((a, b)) = &report.witness {
        println!("  witness: sigma {:?} deg p {} times sigma {:?} deg p {}", a.sigma, a.p, b.sigma, b.p);
    }

    // complexes dual to joins of duals have trivial multiplication; that
    // is exactly the shape of a product ideal's complex
    let d1 = parse_complex("vertices 2\nfacet 1\nfacet 2\n").unwrap();
    let rep = verify_join_dual_pipeline(&d1, &d1, &q).unwrap();
    println!(
        "\npipeline on two-points twice: identity {}, verdict {:?}",
        if rep.product_identity_holds { "holds" } else { "fails" },
        rep.triviality.verdict
    );

    // non-squarefree products: polarize first, then test the complex
    let i = parse_ideal("ring n=2\nx1\nx2\n").unwrap();
    let product = i.product(&i).unwrap();
    let gamma = complex_from_squarefree_ideal(&product.polarize().unwrap()).unwrap();
    let report = check_triviality(&gamma, &q).unwrap();
    assert_eq!(report.verdict, Verdict::Trivial);
    println!(
        "polarized (x1,x2)^2 complex: {:?} after {} pair checks",
        report.verdict, report.pairs_checked
    );
}

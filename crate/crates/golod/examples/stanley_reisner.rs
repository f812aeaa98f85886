//! The Stanley-Reisner dictionary: complexes to squarefree ideals and
//! back, Alexander duality, and the join identity that turns products of
//! ideals into duals of joins.

use golod::ideal::print_ideal;
use golod::simplicial::{
    complex_from_squarefree_ideal, join, parse_complex, print_complex, shift_ideal, widen_ideal,
};

fn main() {
    let four_cycle = parse_complex("vertices 4\nfacet 1 2\nfacet 2 3\nfacet 3 4\nfacet 1 4\n").unwrap();
    println!("four-cycle:");
    print!("{}", print_complex(&four_cycle));

    let ideal = four_cycle.stanley_reisner_ideal().unwrap();
    println!("\nStanley-Reisner ideal (the two diagonals):");
    print!("{}", print_ideal(&ideal));
    assert_eq!(complex_from_squarefree_ideal(&ideal).unwrap(), four_cycle);

    let dual = four_cycle.alexander_dual().unwrap();
    println!("\nAlexander dual (self-dual up to relabeling):");
    print!("{}", print_complex(&dual));

    // I_{D1} I_{D2} = I_{(D1* dual join D2*)*} on disjoint vertex sets
    let d1 = parse_complex("vertices 2\nfacet 1\nfacet 2\n").unwrap();
    let d2 = d1.clone();
    let product = widen_ideal(&d1.stanley_reisner_ideal().unwrap(), 2)
        .product(&shift_ideal(&d2.stanley_reisner_ideal().unwrap(), 2))
        .unwrap();
    let joined = join(&d1.alexander_dual().unwrap(), &d2.alexander_dual().unwrap()).unwrap();
    let gamma = joined.complex.alexander_dual().unwrap();
    println!("\ntwo points join two points, dualized back:");
    print!("{}", print_complex(&gamma));
    println!("its ideal equals the product of the factor ideals:");
    print!("{}", print_ideal(&gamma.stanley_reisner_ideal().unwrap()));
    assert_eq!(gamma.stanley_reisner_ideal().unwrap(), product);
}

//! Multigraded Betti numbers two ways: the Taylor complex (any monomial
//! ideal) and the Hochster decomposition (squarefree ideals), which must
//! agree entrywise.

use golod::field::{PrimeField, Rationals};
use golod::golod::taylor_betti;
use golod::ideal::parse_ideal;
use golod::moment_angle::hochster_betti;

fn main() {
    let ideal = parse_ideal("ring n=4\nx1*x3\nx2*x4\n").unwrap();
    println!("I = (x1x3, x2x4), the four-cycle ideal\n");

    let taylor = taylor_betti(&ideal, &Rationals).unwrap();
    println!("Taylor resolution Betti table over the rationals:");
    println!("{taylor}");

    let hochster = hochster_betti(&ideal, &Rationals).unwrap();
    assert_eq!(taylor, hochster);
    println!("Hochster decomposition agrees entrywise.");

    let f2 = PrimeField::new(2).unwrap();
    assert_eq!(taylor_betti(&ideal, &f2).unwrap(), hochster_betti(&ideal, &f2).unwrap());
    println!("Same agreement over F_2.");

    // a non-squarefree ideal goes through the Taylor engine directly
    let stanley = parse_ideal("ring n=2\nx1^2\nx1*x2\n").unwrap();
    println!("\nTaylor Betti table of (x1^2, x1x2):");
    println!("{}", taylor_betti(&stanley, &Rationals).unwrap());
}

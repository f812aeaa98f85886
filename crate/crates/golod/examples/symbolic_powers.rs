//! Symbolic powers of a squarefree ideal, the gap between I^k and I^(k),
//! and the factorization probe that feeds the Golod certificate for high
//! symbolic powers.

use golod::ideal::{parse_ideal, print_ideal, probe_symbolic_factorization};
use golod::monomial::parse_monomial;

fn main() {
    let triangle = parse_ideal("ring n=3\nx1*x2\nx1*x3\nx2*x3\n").unwrap();
    println!("I = edge ideal of the triangle");

    let square = triangle.power(2).unwrap();
    let symbolic = triangle.symbolic_power(2).unwrap();
    println!("\nI^2 =");
    print!("{}", print_ideal(&square));
    println!("\nI^(2) =");
    print!("{}", print_ideal(&symbolic));

    let m = parse_monomial("x1*x2*x3", 3).unwrap();
    println!(
        "\nx1*x2*x3: in I^(2)? {}; in I^2? {}",
        triangle.symbolic_membership(&m, 2).unwrap(),
        square.contains(&m).unwrap()
    );

    // which symbolic powers factor as I^(c) I^(k-c)? any such k yields a
    // product ideal, hence a Golod quotient
    println!("\nfactorization probe up to k = 8:");
    print!("{}", probe_symbolic_factorization(&triangle, 8).unwrap());
}

//! Products of proper monomial ideals satisfy the strong gcd-condition
//! under the degree-descending product order, which certifies that the
//! quotient by the product is Golod.

use golod::golod::{build_product_order, check_strong_gcd, print_certificate};
use golod::ideal::{parse_ideal, print_ideal};
use golod::monomial::MonomialOrderSpec;

fn main() {
    let i = parse_ideal("ring n=4\nx1\nx2\n").unwrap();
    let j = parse_ideal("ring n=4\nx3\nx4\n").unwrap();
    let product = i.product(&j).unwrap();
    println!("I J =");
    print!("{}", print_ideal(&product));

    let order = build_product_order(&product, &MonomialOrderSpec::default_lex(4));
    let report = check_strong_gcd(&product, &order).unwrap();
    println!("\nstrong gcd-condition: {}", if report.passed { "passes" } else { "fails" });
    println!("\ncertificate:\n{}", print_certificate(&product, &order, &report));

    // the factors themselves need not satisfy the condition: a complete
    // intersection with two generators never does
    let ci = parse_ideal("ring n=4\nx1*x2\nx3*x4\n").unwrap();
    let order = build_product_order(&ci, &MonomialOrderSpec::default_lex(4));
    let report = check_strong_gcd(&ci, &order).unwrap();
    let (u, v) = report.failing_pair.unwrap();
    println!("complete intersection (x1x2, x3x4): fails at the pair ({u}, {v})");
}

//! The Golod upper bound on the Poincare series: (1+t)^n divided by
//! 1 - sum b_i t^(i+1). A Golod ring attains this bound with equality.

use golod::field::Rationals;
use golod::golod::{golod_bound_series, taylor_betti, BettiTable};
use golod::ideal::parse_ideal;

fn main() {
    // hypersurface k[x]/(x^2): Poincare series 1/(1-t), all coefficients 1
    let hypersurface = parse_ideal("ring n=1\nx1^2\n").unwrap();
    let betti = taylor_betti(&hypersurface, &Rationals).unwrap();
    let series = golod_bound_series(&betti, 1, 10).unwrap();
    println!("k[x]/(x^2) bound through t^10: {series}");

    // the zero ideal leaves the exterior algebra bound (1+t)^n
    let series = golod_bound_series(&BettiTable::default(), 4, 6).unwrap();
    println!("zero ideal, n = 4:            {series}");

    // the product ideal (x1,x2)(x3,x4) is Golod, so this bound is its
    // actual Poincare series
    let product = parse_ideal("ring n=4\nx1*x3\nx1*x4\nx2*x3\nx2*x4\n").unwrap();
    let betti = taylor_betti(&product, &Rationals).unwrap();
    let series = golod_bound_series(&betti, 4, 8).unwrap();
    println!("(x1,x2)(x3,x4), n = 4:        {series}");
}

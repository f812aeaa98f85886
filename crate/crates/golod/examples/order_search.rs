//! When the product order is not available, search for a linear order
//! satisfying the strong gcd-condition: exhaustively (definitive) or
//! greedily (best effort).

use golod::golod::{search_order, OrderSearch, SearchMode, DEFAULT_EXHAUSTIVE_CAP};
use golod::ideal::parse_ideal;

fn main() {
    // the triangle ideal passes: any order works since no two generators
    // are coprime
    let triangle = parse_ideal("ring n=3\nx1*x2\nx1*x3\nx2*x3\n").unwrap();
    match search_order(&triangle, SearchMode::Exhaustive, DEFAULT_EXHAUSTIVE_CAP).unwrap() {
        OrderSearch::Found(order) => println!("triangle: order found, {:?}", order.positions()),
        other => println!("triangle: {other:?}"),
    }

    // a complete intersection with two generators fails every order, and
    // the exhaustive search proves it
    let ci = parse_ideal("ring n=4\nx1*x2\nx3*x4\n").unwrap();
    match search_order(&ci, SearchMode::Exhaustive, DEFAULT_EXHAUSTIVE_CAP).unwrap() {
        OrderSearch::NoneExhaustive => println!("(x1x2, x3x4): no order exists (exhaustive)"),
        other => println!("(x1x2, x3x4): {other:?}"),
    }

    // greedy mode scales past the factorial barrier but only ever says
    // "found" or "unknown"
    let product = parse_ideal("ring n=4\nx1*x3\nx1*x4\nx2*x3\nx2*x4\n").unwrap();
    match search_order(&product, SearchMode::Greedy, usize::MAX).unwrap() {
        OrderSearch::Found(order) => println!("product ideal: greedy order {:?}", order.positions()),
        other => println!("product ideal: {other:?}"),
    }
}

//! Parse nested radical text, print it back, render LaTeX, and evaluate it.

use radix::expr::{eval_expr, parse, print_latex, print_text, RadExpr};
use radix::radical::GeneralSpec;
use radix::BigRat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let source = "root(3, 4 + 1^2 * root(3, 10 + 3^2 * root(3, 16 + 5^2 * ...)))";
    let tree = parse(source)?;
    println!("text:  {}", print_text(&tree));
    println!("latex: {}", print_latex(&tree));
    for tail in [0, 8] {
        let value = eval_expr(&tree, Some(&BigRat::from_integer(tail.into())), 96)?;
        println!(
            "tail = {tail}: [{:.15}, {:.15}]",
            value.lo().to_f64(),
            value.hi().to_f64()
        );
    }

    let spec = GeneralSpec::new(4, BigRat::from_integer(1.into()))?;
    println!(
        "order 4, depth 2: {}",
        print_text(&RadExpr::from_general(&spec, 2))
    );

    let broken = "root(3, 4 + * 2)";
    if let Err(err) = parse(broken) {
        println!("{}", err.render(broken));
    }
    Ok(())
}
